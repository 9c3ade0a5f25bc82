#include "hypertoric/matroid.hpp"

#include <algorithm>
#include <bit>

#include "hypertoric/linalg.hpp"

namespace hypertoric {

LinearMatroid::LinearMatroid(const IntMatrix& vectors)
{
    n_ = static_cast<int>(vectors.cols());
    if (n_ > 24)
        throw Error(ErrorKind::DimensionMismatch, "matroid ground set too large for exhaustive enumeration");

    // Row-reduce to a full-row-rank integer matrix with the same column matroid.
    RowEchelon e = rref(to_rational(vectors));
    r_ = static_cast<int>(e.pivots.size());
    std::vector<IntVector> rows;
    for (int i = 0; i < r_; ++i)
        rows.push_back(primitive_integer_vector(e.reduced.row(i)));
    reduced_ = IntMatrix::from_rows(rows, n_);

    const std::uint64_t full = n_ == 0 ? 0 : ((std::uint64_t(1) << n_) - 1);
    const std::size_t nmasks = std::size_t(1) << n_;
    independent_.assign(nmasks, 0);

    for (const auto& c : combinations(n_, r_)) {
        if (!determinant(reduced_.select_cols(c)).is_zero()) {
            bases_.push_back(c);
            independent_[set_to_mask(c)] = 1;
        }
    }
    // Downward closure: subsets of independent sets are independent.
    for (std::size_t mask = nmasks; mask-- > 0;) {
        if (!independent_[mask])
            continue;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
            independent_[mask & ~(rest & -rest)] = 1;
    }
    f_.assign(r_ + 1, 0);
    for (std::size_t mask = 0; mask < nmasks; ++mask)
        if (independent_[mask])
            ++f_[std::popcount(mask)];

    // Circuits: dependent sets all of whose one-smaller subsets are independent.
    std::vector<std::uint64_t> circ_masks;
    for (std::size_t mask = 1; mask < nmasks; ++mask) {
        if (independent_[mask] || std::popcount(mask) > r_ + 1)
            continue;
        bool minimal = true;
        for (std::uint64_t rest = mask; rest && minimal; rest &= rest - 1)
            minimal = independent_[mask & ~(rest & -rest)];
        if (minimal)
            circ_masks.push_back(mask);
    }
    // Cocircuits: minimal sets whose complement spans no basis.
    std::vector<char> spanning(nmasks, 0);
    for (const auto& b : bases_)
        spanning[set_to_mask(b)] = 1;
    for (std::size_t mask = 0; mask < nmasks; ++mask) {
        if (!spanning[mask])
            continue;
        for (int i = 0; i < n_; ++i)
            spanning[mask | (std::uint64_t(1) << i)] = 1;
    }
    std::vector<std::uint64_t> cocirc_masks;
    for (std::size_t mask = 1; mask < nmasks; ++mask) {
        if (spanning[full & ~mask])
            continue;
        bool minimal = true;
        for (std::uint64_t rest = mask; rest && minimal; rest &= rest - 1)
            minimal = spanning[full & ~(mask & ~(rest & -rest))];
        if (minimal)
            cocirc_masks.push_back(mask);
    }
    for (auto m : circ_masks)
        circuits_.push_back(mask_to_set(m));
    for (auto m : cocirc_masks)
        cocircuits_.push_back(mask_to_set(m));
    std::sort(circuits_.begin(), circuits_.end());
    std::sort(cocircuits_.begin(), cocircuits_.end());
}

int LinearMatroid::rank_of(const IndexSet& s) const
{
    return hypertoric::rank(reduced_.select_cols(s));
}

bool LinearMatroid::is_independent(const IndexSet& s) const
{
    return independent_[set_to_mask(s)] != 0;
}

bool LinearMatroid::is_basis(std::uint64_t mask) const
{
    return std::popcount(mask) == r_ && independent_[mask];
}

IndexSet LinearMatroid::coloops() const
{
    IndexSet out;
    for (int i = 0; i < n_; ++i) {
        bool all = !bases_.empty();
        for (const auto& b : bases_)
            all = all && std::binary_search(b.begin(), b.end(), i);
        if (all)
            out.push_back(i);
    }
    return out;
}

IndexSet LinearMatroid::loops() const
{
    IndexSet out;
    for (int i = 0; i < n_; ++i)
        if (!independent_[std::uint64_t(1) << i])
            out.push_back(i);
    return out;
}

CountVector h_from_f(const CountVector& f, int r)
{
    CountVector h(r + 1, 0);
    for (int k = 0; k <= r; ++k) {
        long long s = 0;
        for (int i = 0; i <= k && i < static_cast<int>(f.size()); ++i) {
            long long term = static_cast<long long>(binomial(r - i, k - i)) * f[i];
            s += ((k - i) % 2 == 0) ? term : -term;
        }
        h[k] = s;
    }
    return h;
}

CountVector LinearMatroid::h_vector() const
{
    return h_from_f(f_, r_);
}

std::vector<IndexSet> matroid_ideal_generators(const LinearMatroid& m)
{
    return m.circuits();
}

CountVector reliability_h_polynomial(const LinearMatroid& m)
{
    return m.h_vector();
}

std::vector<IndexSet> minimal_sets(std::vector<IndexSet> family)
{
    std::vector<std::uint64_t> masks;
    for (const auto& s : family)
        masks.push_back(set_to_mask(s));
    std::sort(masks.begin(), masks.end(), [](auto x, auto y) {
        int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint64_t> kept;
    for (auto m : masks) {
        bool dominated = false;
        for (auto k : kept)
            if ((k & m) == k) {
                dominated = true;
                break;
            }
        if (!dominated)
            kept.push_back(m);
    }
    std::vector<IndexSet> out;
    for (auto k : kept)
        out.push_back(mask_to_set(k));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexSet> minimal_transversals(const std::vector<IndexSet>& family, int n, int max_size)
{
    if (n > 63)
        throw Error(ErrorKind::DimensionMismatch, "ground set too large for transversal masks");
    // Berge's algorithm: add one edge at a time, keep only minimal hitting sets.
    std::vector<std::uint64_t> current{0};
    for (const auto& edge : family) {
        std::uint64_t e = set_to_mask(edge);
        std::vector<std::uint64_t> next;
        for (auto t : current) {
            if (t & e) {
                next.push_back(t);
                continue;
            }
            for (std::uint64_t rest = e; rest; rest &= rest - 1) {
                std::uint64_t cand = t | (rest & -rest);
                if (max_size >= 0 && std::popcount(cand) > max_size)
                    continue;
                next.push_back(cand);
            }
        }
        std::sort(next.begin(), next.end(), [](auto x, auto y) {
            int px = std::popcount(x), py = std::popcount(y);
            return px != py ? px < py : x < y;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current.clear();
        for (auto m : next) {
            bool dominated = false;
            for (auto k : current)
                if ((k & m) == k) {
                    dominated = true;
                    break;
                }
            if (!dominated)
                current.push_back(m);
        }
    }
    std::vector<IndexSet> out;
    for (auto t : current)
        out.push_back(mask_to_set(t));
    std::sort(out.begin(), out.end());
    (void)n;
    return out;
}

}   // namespace hypertoric
