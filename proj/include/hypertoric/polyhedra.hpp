/**
 * The polyhedra P_theta = {u >= 0 : A u = theta}, the affine hyperplane
 * arrangements H(B, psi) = {b_i . w = psi_i}, and their bounded complexes.
 *
 * Faces of a simple P_theta are recorded by their support (the coordinates
 * allowed to be nonzero); cells of an arrangement by their sign vectors.
 */

#ifndef HYPERTORIC_POLYHEDRA_HPP
#define HYPERTORIC_POLYHEDRA_HPP

#include <map>
#include <set>

#include "hypertoric/gale.hpp"
#include "hypertoric/matroid.hpp"

namespace hypertoric {

/// theta avoids the span of every d-1 columns of A.
bool is_generic(const RatVector& theta, const IntMatrix& a);
bool is_generic(const IntVector& theta, const IntMatrix& a);

struct Vertex
{
    IndexSet basis;     // a feasible column basis
    RatVector point;    // support contained in basis
};

/// The slice P_theta, with its vertices computed on construction.
class PolyhedronSlice
{
    public:
        PolyhedronSlice(IntMatrix a, RatVector theta);
        /// Reuses a precomputed list of column bases of `a`.
        PolyhedronSlice(IntMatrix a, RatVector theta, const std::vector<IndexSet>& bases);

        const IntMatrix& a() const { return a_; }
        const RatVector& theta() const { return theta_; }
        const std::vector<Vertex>& vertices() const { return vertices_; }
        /// Every vertex has exactly d nonzero coordinates.
        bool simple() const { return simple_; }

    private:
        void compute(const std::vector<IndexSet>& bases);

        IntMatrix a_;
        RatVector theta_;
        std::vector<Vertex> vertices_;
        bool simple_ = true;
};

/// Vertices of P_theta; throws InfeasibleSlice when P_theta is empty.
std::vector<Vertex> vertices(const IntMatrix& a, const RatVector& theta);

/// The feasible column bases at theta, drawn from `bases`, sorted.
std::vector<IndexSet> feasible_bases(const IntMatrix& a, const RatVector& theta,
                                     const std::vector<IndexSet>& bases);

bool is_integral_degree(const PolyhedronSlice& p);
bool is_smooth_degree(const PolyhedronSlice& p);

/// Integer psi with A psi = -theta (lexicographically first column basis,
/// zero elsewhere).
IntVector psi_from_theta(const GaleDualPair& pair, const IntVector& theta);

struct Face
{
    IndexSet support;
    int dim = 0;
    std::vector<int> vertices;      // indices into BoundedComplex::vertices
};

struct BoundedComplex
{
    std::vector<Vertex> vertices;
    std::vector<Face> faces;        // sorted by (dim, support)
    CountVector f;                  // f[k] = number of k-dimensional faces
};

/// All bounded faces of a simple P_theta (theta must be generic).
BoundedComplex bounded_complex(const PolyhedronSlice& p);

/// b_k = sum_{i>=k} (-1)^(i-k) C(i,k) f_i.  Throws NegativeBetti.
CountVector betti_from_bounded_faces(const CountVector& f);

/// Integer points on the bounded faces of P_theta.
std::vector<IntVector> lattice_points_bounded(const PolyhedronSlice& p);
std::vector<IntVector> lattice_points_bounded(const PolyhedronSlice& p, const BoundedComplex& bc);

using SignVector = std::vector<int>;    // entries -1, 0, +1

struct Cell
{
    SignVector signs;
    int dim = 0;
    RatVector witness;              // a point in the relative interior
    std::vector<int> vertices;      // indices into ArrangementComplex::vertex_points
};

struct ArrangementComplex
{
    std::vector<RatVector> vertex_points;
    std::vector<Cell> cells;        // bounded cells, sorted by (dim, signs)
    CountVector f;
};

/// Sign vector of b_i . w - psi_i.
SignVector arrangement_signs(const IntMatrix& b, const RatVector& psi, const RatVector& w);

/**
 * Bounded cells of H(B, psi).  Throws DegeneratePsi when some vertex lies on
 * more than n-d hyperplanes.
 */
ArrangementComplex arrangement_bounded_complex(const IntMatrix& b, const RatVector& psi);

/**
 * Lattice-normalized volume of the bounded full-dimensional region with the
 * given sign vector (a unimodular simplex has volume 1/(n-d)!).  When
 * `vertex_zero_sets` is non-null it receives the sorted zero sets of the
 * region's vertices, the combinatorial type used to detect chamber changes.
 */
Rational region_volume(const IntMatrix& b, const RatVector& psi, const SignVector& signs,
                       std::vector<IndexSet>* vertex_zero_sets = nullptr);

/// Support of the Lawrence face that corresponds to an arrangement cell:
/// + at i gives coordinate i, - gives coordinate n+i.
IndexSet lawrence_support_of_cell(const SignVector& signs);

/**
 * Checks that sign-vector cells of H(B, psi) and supports of bounded faces
 * of the Lawrence polyhedron correspond bijectively, preserve dimension and
 * incidence, and that the embedding w -> (max(0, b.w - psi), max(0, psi - b.w))
 * sends each cell witness into the relative interior of its face.
 */
struct PosetComparison
{
    bool bijective = false;
    bool dimensions = false;
    bool incidences = false;
    bool embedding = false;
    bool ok() const { return bijective && dimensions && incidences && embedding; }
};

PosetComparison compare_face_posets(const ArrangementComplex& arr, const BoundedComplex& lawrence,
                                    const IntMatrix& b, const RatVector& psi);

struct StarCollapseReport
{
    bool direction_generic = false;
    bool max_anchor_ok = false;     // anchors are weight-maximal vertices
    bool min_anchor_ok = false;     // the reversed orientation
    std::vector<int> order;         // vertex indices in the order used (max orientation)
};

/**
 * Star-collapsibility of the bounded complex with respect to the linear
 * functional u -> c.u, where c has positive entries (this is v = B^T c in
 * the interior of pos(B)).  Throws NonGenericDirection if c is not positive
 * or takes equal values on two vertices.
 */
StarCollapseReport star_collapsibility_check(const BoundedComplex& bc, const RatVector& c);

/// Minimal generators of the semigroup N^n cap ker(A) (= N^n cap im B).
std::vector<IntVector> hilbert_basis_deg0(const IntMatrix& a);
std::vector<IntVector> hilbert_basis_deg0(const GaleDualPair& pair);

}   // namespace hypertoric

#endif
