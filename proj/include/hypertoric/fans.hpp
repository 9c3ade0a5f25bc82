/**
 * Triangulations of the Gale dual configuration, the Lawrence construction
 * and the chamber complex of a vector configuration.
 *
 * A triangulation of B (the rows of the Gale dual) is stored by its maximal
 * cones only, as index sets into the rows of B.  For a generic theta the
 * maximal cones are the complements of the feasible bases of P_theta.
 */

#ifndef HYPERTORIC_FANS_HPP
#define HYPERTORIC_FANS_HPP

#include <cstdint>

#include "hypertoric/gale.hpp"
#include "hypertoric/polyhedra.hpp"

namespace hypertoric {

/// A^+- = [A, -A].
IntMatrix lawrence_configuration(const IntMatrix& a);

/// The (2n-d) x 2n matrix (I I; 0 B^T), whose columns are the Lawrence lifting.
IntMatrix lawrence_lifting(const GaleDualPair& pair);

/// The Gale pair (A^+-, Lambda^T), checked for exactness.
GaleDualPair lawrence_pair(const GaleDualPair& pair);

struct Triangulation
{
    IntMatrix ground;                   // one vector per row
    std::vector<IndexSet> max_cones;    // sorted
};

/// Throws NonGenericTheta unless theta is generic for pair.a.
Triangulation triangulation_from_theta(const GaleDualPair& pair, const RatVector& theta);
Triangulation triangulation_from_theta(const GaleDualPair& pair, const IntVector& theta);

struct TriangulationCheck
{
    bool independent = false;   // every maximal cone is a linearly independent set
    bool covers = false;        // every sample of pos(ground) lies in some cone
    bool proper = false;        // no sample is interior to two cones
    bool unimodular = false;    // every maximal cone is a lattice basis of its span
    bool ok() const { return independent && covers && proper; }
};

/// Point-location checks at `samples` pseudo-random points of pos(ground).
TriangulationCheck check_triangulation(const Triangulation& t, int samples = 40, std::uint64_t seed = 1);

/// Minimal non-faces (the Stanley-Reisner ideal), as index sets.
std::vector<IndexSet> stanley_reisner_ideal(const Triangulation& t);

/// One square-free monomial per maximal cone, on the complementary indices.
std::vector<IndexSet> irrelevant_ideal(const Triangulation& t);

struct Chamber
{
    IntVector representative;           // primitive integer vector in the open chamber
    std::vector<IndexSet> feasible;     // feasible column bases there, sorted
};

struct ChamberComplexSample
{
    std::vector<Chamber> chambers;      // sorted by feasible-basis set
    long long regions = 0;              // regions of the hyperplane arrangement visited
};

/**
 * Open chambers of the chamber complex of the columns of `config`.  With
 * `restrict_to_pos` only chambers inside pos(config) are kept.
 */
ChamberComplexSample enumerate_chambers(const IntMatrix& config, bool restrict_to_pos);

/// Both thetas generic (NonGenericTheta otherwise) and with equal feasible bases.
bool same_chamber(const IntMatrix& config, const RatVector& theta1, const RatVector& theta2);

/// All column bases of a full-row-rank matrix.
std::vector<IndexSet> column_bases(const IntMatrix& a);

}   // namespace hypertoric

#endif
