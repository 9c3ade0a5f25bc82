/**
 * Exact linear algebra over the integers and the rationals: row reduction,
 * determinants, Hermite normal forms, lattice kernels and unimodularity.
 */

#ifndef HYPERTORIC_LINALG_HPP
#define HYPERTORIC_LINALG_HPP

#include <optional>

#include "hypertoric/exact.hpp"

namespace hypertoric {

struct RowEchelon
{
    RatMatrix reduced;          // reduced row echelon form
    std::vector<int> pivots;    // pivot column of each nonzero row
};

RowEchelon rref(RatMatrix m);

int rank(const RatMatrix& m);
int rank(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Unique solution of a nonsingular square system, or nullopt if singular.
std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b);

/// Some solution of a (possibly rectangular) system; free variables set to zero.
std::optional<RatVector> solve_any(const RatMatrix& a, const RatVector& b);

/// Columns form a basis of the rational null space.
RatMatrix nullspace(const RatMatrix& m);

/// Smallest positive integer multiple of a rational vector that is integral,
/// divided by the content, i.e. the primitive integer vector on the same ray.
IntVector primitive_integer_vector(const RatVector& v);

/**
 * Column-style Hermite reduction: H = A * U with U unimodular, the first
 * `rank` columns of H in lower echelon form and the remaining columns zero.
 */
struct ColumnHermite
{
    IntMatrix h;
    IntMatrix u;
    int rank = 0;
    std::vector<int> pivot_rows;
};

ColumnHermite column_hermite(const IntMatrix& a);

/**
 * Canonical basis of the lattice spanned by the (independent) columns of b:
 * its column Hermite normal form (positive pivots, entries left of each pivot
 * reduced into [0, pivot)).
 */
IntMatrix canonical_lattice_basis(const IntMatrix& b);

/// gcd of all maximal minors of a full-row-rank matrix (product of HNF pivots).
Integer maximal_minor_gcd(const IntMatrix& a);

/**
 * Basis of the lattice kernel ker_Z(A), canonicalized.  Requires A to have
 * full row rank and relatively prime maximal minors; returns an n x (n-d)
 * matrix B with A B = 0 whose columns generate every integer kernel vector.
 */
IntMatrix kernel_lattice_basis(const IntMatrix& a);

/// Z-basis of Z^m intersected with the rational column span of p.
IntMatrix saturate(const IntMatrix& p);

/// All maximal (d x d) minors of a d x n matrix, indexed like combinations(n, d).
std::vector<Integer> maximal_minors(const IntMatrix& a);

/// All (k x k) row-minors of an n x k matrix (choose k rows).
std::vector<Integer> maximal_row_minors(const IntMatrix& b);

/**
 * True iff all nonzero maximal minors of A share one absolute value.  When A
 * is primitive the equivalent criterion on its Gale dual (all maximal minors
 * of B in {-1, 0, 1}) is evaluated too and must agree.
 */
bool is_unimodular(const IntMatrix& a);

/// Scalar helpers.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);
Integer floor_div(const Integer& a, const Integer& b);
Rational dot(const RatVector& a, const RatVector& b);

}   // namespace hypertoric

#endif
