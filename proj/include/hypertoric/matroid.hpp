/**
 * Linear matroids of rational vector configurations.
 *
 * Ground-set subsets are handled as 64-bit masks internally; enumeration is
 * exhaustive, which is fine for the ground sets used here (n <= 24).
 */

#ifndef HYPERTORIC_MATROID_HPP
#define HYPERTORIC_MATROID_HPP

#include "hypertoric/exact.hpp"

namespace hypertoric {

using CountVector = std::vector<long long>;

class LinearMatroid
{
    public:
        /// Elements are the columns of `vectors`.
        explicit LinearMatroid(const IntMatrix& vectors);

        /// Matroid on the rows of `m` (e.g. the dual configuration B).
        static LinearMatroid of_rows(const IntMatrix& m) { return LinearMatroid(m.transpose()); }

        int size() const noexcept { return n_; }
        int rank() const noexcept { return r_; }
        int rank_of(const IndexSet& s) const;
        bool is_independent(const IndexSet& s) const;

        const std::vector<IndexSet>& bases() const { return bases_; }
        const std::vector<IndexSet>& circuits() const { return circuits_; }
        const std::vector<IndexSet>& cocircuits() const { return cocircuits_; }
        IndexSet coloops() const;
        IndexSet loops() const;

        /// f[k] = number of independent sets with k elements, k = 0..r.
        const CountVector& f_vector() const { return f_; }
        CountVector h_vector() const;

        bool is_basis(std::uint64_t mask) const;

    private:
        IntMatrix reduced_;     // r x n, same column matroid as the input
        int n_ = 0, r_ = 0;
        std::vector<char> independent_;     // indexed by mask
        std::vector<IndexSet> bases_, circuits_, cocircuits_;
        CountVector f_;
};

/// h_k = sum_{i<=k} (-1)^(k-i) C(r-i, k-i) f_i  (f_i counts i-element sets).
CountVector h_from_f(const CountVector& f, int r);

/// One square-free monomial (as an index set) per circuit.
std::vector<IndexSet> matroid_ideal_generators(const LinearMatroid& m);

/// Coefficients of sum_i h_i x^i.
CountVector reliability_h_polynomial(const LinearMatroid& m);

/// Minimal elements (under inclusion) of a family of sets, sorted.
std::vector<IndexSet> minimal_sets(std::vector<IndexSet> family);

/**
 * Minimal transversals (hitting sets) of a family over {0..n-1}; transversals
 * with more than max_size elements are dropped (max_size < 0: no limit).
 */
std::vector<IndexSet> minimal_transversals(const std::vector<IndexSet>& family, int n, int max_size = -1);

}   // namespace hypertoric

#endif
