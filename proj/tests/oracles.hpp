// Brute-force reference computations used by the tests.  Each one avoids the
// algorithm it is checked against: Leibniz determinants, subset scans, box
// enumeration, shoelace areas, the matrix-tree theorem.

#ifndef HYPERTORIC_TEST_ORACLES_HPP
#define HYPERTORIC_TEST_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hypertoric/exact.hpp"
#include "hypertoric/lp.hpp"
#include "hypertoric/matroid.hpp"
#include "hypertoric/polynomial.hpp"
#include "hypertoric/quiver.hpp"

namespace oracle {

using namespace hypertoric;

inline Rational leibniz_det(const RatMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        Rational prod = 1;
        for (std::size_t i = 0; i < n; ++i)
            prod *= m(i, perm[i]);
        total += inversions % 2 ? -prod : prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Rank as the size of the largest nonvanishing minor.
inline int minor_rank(const RatMatrix& m)
{
    int best = 0;
    const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
    for (int k = 1; k <= std::min(r, c); ++k) {
        bool found = false;
        for (const auto& rows : combinations(r, k)) {
            for (const auto& cols : combinations(c, k))
                if (!leibniz_det(m.select_rows(rows).select_cols(cols)).is_zero()) {
                    found = true;
                    break;
                }
            if (found)
                break;
        }
        if (!found)
            break;
        best = k;
    }
    return best;
}

inline std::vector<std::uint64_t> all_subsets_with(int n, const std::function<bool(std::uint64_t)>& pred)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s)
        if (pred(s))
            out.push_back(s);
    return out;
}

inline std::vector<IndexSet> minimal_of(std::vector<std::uint64_t> masks)
{
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<IndexSet> out;
    for (auto s : masks) {
        bool minimal = true;
        for (auto t : masks)
            if (t != s && (t & s) == t)
                minimal = false;
        if (minimal)
            out.push_back(mask_to_set(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Kirchhoff: spanning trees = any cofactor of the Laplacian.
inline Integer kirchhoff(const Quiver& q)
{
    const int v = q.vertices;
    RatMatrix lap(v - 1, v - 1);
    for (const auto& [i, j] : q.edges) {
        if (i == j)
            continue;
        if (i > 0)
            lap(i - 1, i - 1) += 1;
        if (j > 0)
            lap(j - 1, j - 1) += 1;
        if (i > 0 && j > 0) {
            lap(i - 1, j - 1) -= 1;
            lap(j - 1, i - 1) -= 1;
        }
    }
    return boost::multiprecision::numerator(leibniz_det(lap));
}

// Area of a convex polygon given by its vertices in any order.
inline Rational shoelace(std::vector<RatVector> pts)
{
    RatVector c(2, Rational(0));
    for (const auto& p : pts) {
        c[0] += p[0] / Rational(static_cast<long>(pts.size()));
        c[1] += p[1] / Rational(static_cast<long>(pts.size()));
    }
    // Sort by angle with exact comparisons: half-plane, then cross product.
    auto half = [&](const RatVector& p) {
        Rational x = p[0] - c[0], y = p[1] - c[1];
        return y > 0 || (y == 0 && x > 0) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RatVector& a, const RatVector& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb)
            return ha < hb;
        Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        return cross > 0;
    });
    Rational twice = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % pts.size()];
        twice += p[0] * q[1] - p[1] * q[0];
    }
    return (twice < 0 ? -twice : twice) / 2;
}

// Dimension of each graded piece, working in all n variables at once.
inline CountVector hilbert_full(int n, const std::vector<RatVector>& linear, const std::vector<Exponent>& monomials,
                                int up_to)
{
    CountVector out;
    for (int k = 0; k <= up_to; ++k) {
        std::vector<Exponent> mons = monomials_of_degree(n, k);
        std::map<Exponent, int> idx;
        for (std::size_t i = 0; i < mons.size(); ++i)
            idx[mons[i]] = static_cast<int>(i);
        std::vector<RatVector> rows;
        for (const auto& l : linear)
            for (const auto& e : monomials_of_degree(n, k - 1)) {
                RatVector row(mons.size(), Rational(0));
                for (int j = 0; j < n; ++j) {
                    Exponent f = e;
                    ++f[j];
                    row[idx[f]] += l[j];
                }
                rows.push_back(row);
            }
        for (const auto& g : monomials) {
            int dg = std::accumulate(g.begin(), g.end(), 0);
            for (const auto& e : monomials_of_degree(n, k - dg)) {
                RatVector row(mons.size(), Rational(0));
                Exponent f = e;
                for (int j = 0; j < n; ++j)
                    f[j] += g[j];
                row[idx[f]] = 1;
                rows.push_back(row);
            }
        }
        // Plain Gaussian elimination for the rank.
        int r = 0;
        for (std::size_t c = 0; c < mons.size() && r < static_cast<int>(rows.size()); ++c) {
            std::size_t p = r;
            while (p < rows.size() && rows[p][c].is_zero())
                ++p;
            if (p == rows.size())
                continue;
            std::swap(rows[r], rows[p]);
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c].is_zero())
                    continue;
                Rational f = rows[i][c] / rows[r][c];
                for (std::size_t j = c; j < mons.size(); ++j)
                    rows[i][j] -= f * rows[r][j];
            }
            ++r;
        }
        out.push_back(static_cast<long long>(mons.size()) - r);
    }
    return out;
}

// Minimal nonzero solutions of A x = 0 with 0 <= x_i <= bound.
inline std::vector<IntVector> hilbert_basis_box(const IntMatrix& a, int bound)
{
    const int n = static_cast<int>(a.cols());
    std::vector<std::vector<int>> sols;
    std::vector<int> x(n, 0);
    while (true) {
        int k = 0;
        while (k < n && x[k] == bound)
            x[k++] = 0;
        if (k == n)
            break;
        ++x[k];
        bool zero = true;
        for (std::size_t i = 0; i < a.rows() && zero; ++i) {
            Integer s = 0;
            for (int j = 0; j < n; ++j)
                s += a(i, j) * x[j];
            zero = s.is_zero();
        }
        if (zero)
            sols.push_back(x);
    }
    std::vector<IntVector> out;
    for (const auto& s : sols) {
        bool minimal = true;
        for (const auto& t : sols) {
            if (t == s)
                continue;
            bool le = true;
            for (int j = 0; j < n; ++j)
                le = le && t[j] <= s[j];
            if (le)
                minimal = false;
        }
        if (minimal) {
            IntVector v(n);
            for (int j = 0; j < n; ++j)
                v[j] = s[j];
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Bounded faces of {u >= 0 : A u = theta} by subset scan and LPs: S is the
 * support of a face iff some feasible u has u_i > 0 exactly on S; the face is
 * bounded iff every coordinate is bounded above on it.
 */
inline std::map<IndexSet, int> bounded_faces_by_lp(const IntMatrix& a, const RatVector& theta)
{
    const int d = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    std::map<IndexSet, int> out;
    for (std::uint64_t s = 1; s < (std::uint64_t(1) << n); ++s) {
        IndexSet sup = mask_to_set(s);
        const int k = static_cast<int>(sup.size());
        if (k < d)
            continue;
        // Variables: u_S (k), t, slacks (k), cap slack.  u_i - t - s_i = 0, t + c = 1.
        const int nv = 2 * k + 2;
        RatMatrix m(d + k + 1, nv);
        RatVector rhs(d + k + 1, Rational(0));
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < k; ++j)
                m(i, j) = a(i, sup[j]);
            rhs[i] = theta[i];
        }
        for (int j = 0; j < k; ++j) {
            m(d + j, j) = 1;
            m(d + j, k) = -1;
            m(d + j, k + 1 + j) = -1;
        }
        m(d + k, k) = 1;
        m(d + k, nv - 1) = 1;
        rhs[d + k] = 1;
        RatVector c(nv, Rational(0));
        c[k] = 1;
        LpResult rel = solve_lp(m, rhs, c);
        if (rel.status != LpStatus::Optimal || rel.value <= 0)
            continue;
        RatMatrix ab(d, k);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < k; ++j)
                ab(i, j) = a(i, sup[j]);
        bool bounded = true;
        for (int j = 0; j < k && bounded; ++j) {
            RatVector cj(k, Rational(0));
            cj[j] = 1;
            bounded = solve_lp(ab, theta, cj).status == LpStatus::Optimal;
        }
        if (bounded)
            out[sup] = k - d;
    }
    return out;
}

/// Random connected bridgeless quiver: min_v..max_v vertices, at most max_e edges, no loops.
inline Quiver random_quiver(std::mt19937_64& rng, int max_v, int max_e, int min_v = 2)
{
    while (true) {
        int v = std::uniform_int_distribution<int>(min_v, max_v)(rng);
        int e = std::uniform_int_distribution<int>(v, std::max(v, max_e))(rng);
        Quiver q;
        q.vertices = v;
        std::uniform_int_distribution<int> pick(0, v - 1);
        while (q.n() < e) {
            int i = pick(rng), j = pick(rng);
            if (i != j)
                q.edges.emplace_back(i, j);
        }
        if (!is_connected(q))
            continue;
        bool bridge = false;
        for (int k = 0; k < q.n() && !bridge; ++k) {
            Quiver r = q;
            r.edges.erase(r.edges.begin() + k);
            bridge = !is_connected(r);
        }
        if (!bridge)
            return q;
    }
}

}   // namespace oracle

#endif
