/**
 * Graded rings Q[x_1..x_n]/(linear forms + monomials), the presentation
 * Q[x]/(M(B) + Circ(A)) of a toric hyperkaehler variety, volume-polynomial
 * cogenerators, and the Lefschetz and Macaulay checks.
 *
 * No Groebner bases: every graded piece is computed by exact row reduction on
 * monomial bases.  The linear forms are eliminated first, so the work happens
 * in the free variables of their row echelon form.
 */

#ifndef HYPERTORIC_COHOMOLOGY_HPP
#define HYPERTORIC_COHOMOLOGY_HPP

#include <cstdint>
#include <optional>

#include "hypertoric/gale.hpp"
#include "hypertoric/linalg.hpp"
#include "hypertoric/matroid.hpp"
#include "hypertoric/polyhedra.hpp"
#include "hypertoric/polynomial.hpp"

namespace hypertoric {

struct RingPresentation
{
    int nvars = 0;
    std::vector<RatVector> linear;      // coefficient rows of linear generators
    std::vector<Exponent> monomials;    // monomial generators (square-free for matroids)
};

/// x^S for an index set S.
Exponent square_free(const IndexSet& s, int nvars);

/**
 * Q[x]/(M(B) + Circ(A)): linear forms are the columns of B, monomials the
 * circuits of the matroid on the rows of B.  Throws LoopPresent if some row
 * of B vanishes (equivalently A has a coloop).
 */
RingPresentation build_presentation(const GaleDualPair& pair);

/// Graded pieces of a presentation up to a fixed degree.
class GradedQuotientBasis
{
    public:
        GradedQuotientBasis(const RingPresentation& p, int up_to);

        int top() const { return static_cast<int>(dims_.size()) - 1; }
        /// dims()[k] = dimension of the degree-k piece, k = 0..up_to.
        const CountVector& dims() const { return dims_; }

        /// Number of reduced variables (free variables after eliminating the linear forms).
        int reduced_vars() const { return static_cast<int>(free_.size()); }
        /// x_j -> sum_c reduction()(j, c) t_c.
        const RatMatrix& reduction() const { return reduction_; }

        /// Standard monomials of degree k, as exponents in the original n variables.
        std::vector<Exponent> basis(int k) const;

        /// Coordinates of a degree-k polynomial in the original variables.
        RatVector normal_form(const MultiPoly& p, int k) const;

        /// Same, for a polynomial already written in the reduced variables.
        RatVector normal_form_reduced(const MultiPoly& p, int k) const;

    private:
        struct Degree
        {
            std::vector<Exponent> monomials;        // all degree-k monomials in t
            std::map<Exponent, int> index;
            RatMatrix ideal;                        // RREF rows spanning I_k
            std::vector<int> pivots;
            std::vector<int> standard;              // non-pivot columns
        };

        int nvars_ = 0;
        IndexSet free_;
        RatMatrix reduction_;
        std::vector<Degree> degrees_;
        CountVector dims_;
};

/// Dimensions of the graded pieces in degrees 0..up_to.
CountVector hilbert_function(const RingPresentation& p, int up_to);

/// Drops trailing zeros.
CountVector trim_zeros(CountVector h);

/**
 * Socle in top degree: for k below the last nonzero degree, no nonzero
 * element of degree k is killed by every variable.
 */
bool socle_in_top_degree(const GradedQuotientBasis& q);

struct CogeneratorSet
{
    std::vector<SignVector> regions;    // maximal bounded regions of H(B, psi)
    std::vector<MultiPoly> polys;       // V_i, homogeneous of degree n-d in n variables
    std::vector<Rational> volumes;      // vol(region_i) at psi
};

/**
 * Volume polynomials of the maximal bounded regions: sampled at points of
 * the chamber of psi and interpolated.  Throws ChamberCrossed if the samples
 * do not come from one polynomial.
 */
CogeneratorSet volume_cogenerators(const GaleDualPair& pair, const RatVector& psi, std::uint64_t seed = 1);

struct AnnihilatorReport
{
    bool generators_annihilate = false;
    CountVector catalecticant;          // ranks in degrees 0..n-d+1
    CountVector hilbert;                // same range
    bool ok() const { return generators_annihilate && catalecticant == hilbert; }
};

/// Throws AnnihilatorMismatch naming the degree or operator that fails.
AnnihilatorReport annihilator_verify(const RingPresentation& p, const CogeneratorSet& c);

/// Rank of the degree-k catalecticant of a list of polynomials.
long long catalecticant_rank(const std::vector<MultiPoly>& polys, int k);

/**
 * v with v(A x) = V(x), for V annihilated by the linear forms in ker(A).
 * Throws NotInImage otherwise.
 */
MultiPoly pullback_cogenerator(const IntMatrix& a, const MultiPoly& v);
std::vector<MultiPoly> pullback_cogenerators(const GaleDualPair& pair, const CogeneratorSet& c);

/// V(x - y) in 2n variables (x first, then y).
MultiPoly lawrence_double(const MultiPoly& v);
std::vector<MultiPoly> lawrence_double_cogenerators(const CogeneratorSet& c);

struct LefschetzReport
{
    RatVector d;                        // the class used
    std::vector<long long> ranks;       // rank of H^{i-1} -> H^i, i = 1..floor(top/2)
    std::vector<long long> sources;     // dim H^{i-1}
    bool injective = false;
};

/// Multiplication by D from degree i-1 to i, 2i <= top degree of p.
LefschetzReport lefschetz_injectivity(const RingPresentation& p, const RatVector& d);

/**
 * Tries pseudo-random classes D from `seed` until one is injective in every
 * degree; throws NonGenericD if none of `attempts` works.
 */
LefschetzReport lefschetz_search(const RingPresentation& p, std::uint64_t seed, int attempts = 8);

/// g_0 = 1 and g_{i+1} <= g_i^<i> for i >= 1.
bool is_macaulay_vector(const CountVector& g);

/// g_i = h_i - h_{i-1} for i <= floor((len h - 1)/2).
CountVector g_vector(const CountVector& h);
bool g_vector_macaulay_check(const CountVector& h);

/// Hilbert function of p + (D) in degrees 0..up_to.
CountVector hilbert_modulo_class(const RingPresentation& p, const RatVector& d, int up_to);

/**
 * Lawrence side of the presentation at one generic theta: the Stanley-Reisner
 * ideal of the Lawrence triangulation, pushed through y_i -> -x_i.
 */
struct LawrenceSideReport
{
    std::vector<Exponent> image;        // phi(I_theta), minimal generators
    bool equals_matroid_ideal = false;  // as monomial ideals
    CountVector hilbert;                // of Circ(A) + phi(I_theta)
};

LawrenceSideReport lawrence_side_presentation(const GaleDualPair& pair, const RatVector& theta);

}   // namespace hypertoric

#endif
