/**
 * Gale dual pairs: an integer d x n matrix A of full row rank together with
 * an n x (n-d) matrix B whose columns are a lattice basis of ker_Z(A), so that
 *
 *     0 -> Z^(n-d) --B--> Z^n --A--> Z^d -> 0
 *
 * is exact.  The rows b_1..b_n of B form the dual configuration.
 */

#ifndef HYPERTORIC_GALE_HPP
#define HYPERTORIC_GALE_HPP

#include "hypertoric/exact.hpp"

namespace hypertoric {

struct GaleDualPair
{
    IntMatrix a;    // d x n
    IntMatrix b;    // n x (n-d)

    int d() const { return static_cast<int>(a.rows()); }
    int n() const { return static_cast<int>(a.cols()); }
    int m() const { return static_cast<int>(b.cols()); }    // n - d
};

/// Builds the pair from A (B = canonical kernel lattice basis) and checks it.
GaleDualPair make_gale_pair(const IntMatrix& a);

/**
 * Checks that (a, b) is exact: A B = 0, rank B = n - d, A surjective onto Z^d
 * (maximal minors coprime) and B saturated (maximal row minors of B coprime).
 * Throws InvariantViolated naming the failed condition.
 */
void verify_gale_pair(const GaleDualPair& pair);

/// Indices i with b_i = 0 (loops of the dual matroid, coloops of A's matroid).
IndexSet zero_rows_of_b(const GaleDualPair& pair);

/// Indices i with a_i = 0 (coloops of the dual matroid).
IndexSet zero_columns_of_a(const GaleDualPair& pair);

}   // namespace hypertoric

#endif
