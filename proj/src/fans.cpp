#include "hypertoric/fans.hpp"

#include <algorithm>
#include <random>

#include "hypertoric/linalg.hpp"

namespace hypertoric {

IntMatrix lawrence_configuration(const IntMatrix& a)
{
    IntMatrix neg(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            neg(i, j) = -a(i, j);
    return hstack(a, neg);
}

IntMatrix lawrence_lifting(const GaleDualPair& pair)
{
    const std::size_t n = pair.n(), m = pair.m();
    IntMatrix lam(n + m, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        lam(i, i) = 1;
        lam(i, n + i) = 1;
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < n; ++j)
            lam(n + k, n + j) = pair.b(j, k);
    return lam;
}

GaleDualPair lawrence_pair(const GaleDualPair& pair)
{
    GaleDualPair out{lawrence_configuration(pair.a), lawrence_lifting(pair).transpose()};
    verify_gale_pair(out);
    return out;
}

std::vector<IndexSet> column_bases(const IntMatrix& a)
{
    std::vector<IndexSet> out;
    for (const auto& c : combinations(static_cast<int>(a.cols()), static_cast<int>(a.rows())))
        if (!determinant(a.select_cols(c)).is_zero())
            out.push_back(c);
    return out;
}

Triangulation triangulation_from_theta(const GaleDualPair& pair, const RatVector& theta)
{
    if (!is_generic(theta, pair.a))
        throw Error(ErrorKind::NonGenericTheta, "theta lies on a hyperplane spanned by d-1 columns of A");
    PolyhedronSlice p(pair.a, theta);
    Triangulation t;
    t.ground = pair.b;
    const int n = pair.n();
    for (const auto& v : p.vertices()) {
        IndexSet cone;
        for (int i = 0; i < n; ++i)
            if (!std::binary_search(v.basis.begin(), v.basis.end(), i))
                cone.push_back(i);
        t.max_cones.push_back(std::move(cone));
    }
    std::sort(t.max_cones.begin(), t.max_cones.end());
    return t;
}

Triangulation triangulation_from_theta(const GaleDualPair& pair, const IntVector& theta)
{
    return triangulation_from_theta(pair, to_rational(theta));
}

TriangulationCheck check_triangulation(const Triangulation& t, int samples, std::uint64_t seed)
{
    TriangulationCheck out;
    const std::size_t n = t.ground.rows(), m = t.ground.cols();
    out.independent = true;
    out.unimodular = true;
    for (const auto& c : t.max_cones) {
        if (c.size() != m) {
            out.independent = false;
            continue;
        }
        Integer det = determinant(t.ground.select_rows(c));
        if (det.is_zero())
            out.independent = false;
        else if (boost::multiprecision::abs(det) != 1)
            out.unimodular = false;
    }
    if (!out.independent)
        return out;
    if (m == 0) {
        out.covers = !t.max_cones.empty();
        out.proper = t.max_cones.size() <= 1;
        return out;
    }
    std::vector<RatMatrix> cones;
    for (const auto& c : t.max_cones)
        cones.push_back(to_rational(t.ground.select_rows(c)).transpose());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(1, 97);
    out.covers = true;
    out.proper = true;
    for (int s = 0; s < samples; ++s) {
        RatVector y(m, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            int c = coeff(rng);
            for (std::size_t j = 0; j < m; ++j)
                y[j] += c * t.ground(i, j);
        }
        int containing = 0, interior = 0;
        for (const auto& cone : cones) {
            auto mu = solve_square(cone, y);
            bool nonneg = true, positive = true;
            for (const auto& q : *mu) {
                nonneg = nonneg && q >= 0;
                positive = positive && q > 0;
            }
            containing += nonneg;
            interior += positive;
        }
        if (containing == 0)
            out.covers = false;
        if (interior > 1)
            out.proper = false;
    }
    return out;
}

std::vector<IndexSet> stanley_reisner_ideal(const Triangulation& t)
{
    // S is a non-face iff it meets the complement of every maximal cone.
    const int n = static_cast<int>(t.ground.rows());
    std::vector<IndexSet> complements = irrelevant_ideal(t);
    if (complements.empty())
        return {};
    return minimal_transversals(complements, n);
}

std::vector<IndexSet> irrelevant_ideal(const Triangulation& t)
{
    const int n = static_cast<int>(t.ground.rows());
    std::vector<IndexSet> out;
    for (const auto& c : t.max_cones) {
        IndexSet comp;
        for (int i = 0; i < n; ++i)
            if (!std::binary_search(c.begin(), c.end(), i))
                comp.push_back(i);
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

IntVector normalize_sign(IntVector v)
{
    for (const auto& z : v) {
        if (z.is_zero())
            continue;
        if (z < 0)
            for (auto& w : v)
                w = -w;
        break;
    }
    return v;
}

}   // namespace

ChamberComplexSample enumerate_chambers(const IntMatrix& config, bool restrict_to_pos)
{
    const int d = static_cast<int>(config.rows()), n = static_cast<int>(config.cols());
    if (rank(config) != d)
        throw Error(ErrorKind::NotFullRank, "configuration does not have full row rank");
    RatMatrix cr = to_rational(config);

    // Hyperplanes spanned by d-1 columns, as primitive normals up to sign.
    std::set<IntVector> normal_set;
    for (const auto& s : combinations(n, d - 1)) {
        RatMatrix rows = cr.select_cols(s).transpose();
        if (rows.rows() == 0)
            rows = RatMatrix(0, d);
        RatMatrix ns = nullspace(rows);
        if (ns.cols() != 1)
            continue;
        normal_set.insert(normalize_sign(primitive_integer_vector(ns.col(0))));
    }
    std::vector<IntVector> normals(normal_set.begin(), normal_set.end());

    // Rays: one-dimensional intersections of d-1 hyperplanes, both directions.
    std::set<IntVector> ray_set;
    const int h = static_cast<int>(normals.size());
    for (const auto& s : combinations(h, d - 1)) {
        RatMatrix rows(s.size(), d);
        for (std::size_t k = 0; k < s.size(); ++k)
            for (int j = 0; j < d; ++j)
                rows(k, j) = normals[s[k]][j];
        RatMatrix ns = nullspace(rows);
        if (ns.cols() != 1)
            continue;
        IntVector r = normalize_sign(primitive_integer_vector(ns.col(0)));
        ray_set.insert(r);
        for (auto& z : r)
            z = -z;
        ray_set.insert(r);
    }
    std::vector<IntVector> rays(ray_set.begin(), ray_set.end());
    const int nr = static_cast<int>(rays.size());
    std::vector<std::vector<signed char>> side(h, std::vector<signed char>(nr));
    for (int k = 0; k < h; ++k)
        for (int r = 0; r < nr; ++r) {
            Integer v = 0;
            for (int j = 0; j < d; ++j)
                v += normals[k][j] * rays[r][j];
            side[k][r] = v > 0 ? 1 : (v < 0 ? -1 : 0);
        }

    // Insert hyperplanes one at a time; a region is the list of rays in its closure.
    std::vector<std::vector<int>> regions(1);
    for (int r = 0; r < nr; ++r)
        regions[0].push_back(r);
    for (int k = 0; k < h; ++k) {
        std::vector<std::vector<int>> next;
        for (auto& reg : regions) {
            bool pos = false, neg = false;
            for (int r : reg) {
                pos = pos || side[k][r] > 0;
                neg = neg || side[k][r] < 0;
            }
            if (!(pos && neg)) {
                next.push_back(std::move(reg));
                continue;
            }
            std::vector<int> up, down;
            for (int r : reg) {
                if (side[k][r] >= 0)
                    up.push_back(r);
                if (side[k][r] <= 0)
                    down.push_back(r);
            }
            next.push_back(std::move(up));
            next.push_back(std::move(down));
        }
        regions = std::move(next);
    }

    // Fingerprint each region by its feasible bases at an interior point.
    std::vector<IndexSet> bases = column_bases(config);
    std::vector<RatMatrix> inverses;
    for (const auto& c : bases) {
        RatMatrix ac = cr.select_cols(c);
        RatMatrix inv(d, d);
        for (int j = 0; j < d; ++j) {
            RatVector e(d, Rational(0));
            e[j] = 1;
            auto col = solve_square(ac, e);
            for (int i = 0; i < d; ++i)
                inv(i, j) = (*col)[i];
        }
        inverses.push_back(std::move(inv));
    }
    std::map<std::vector<IndexSet>, IntVector> found;
    for (const auto& reg : regions) {
        RatVector rep(d, Rational(0));
        for (int r : reg)
            for (int j = 0; j < d; ++j)
                rep[j] += rays[r][j];
        std::vector<IndexSet> feas;
        for (std::size_t b = 0; b < bases.size(); ++b) {
            bool ok = true;
            for (int i = 0; i < d && ok; ++i) {
                Rational v = 0;
                for (int j = 0; j < d; ++j)
                    v += inverses[b](i, j) * rep[j];
                if (v.is_zero())
                    throw Error(ErrorKind::InvariantViolated, "region representative is not generic");
                ok = v > 0;
            }
            if (ok)
                feas.push_back(bases[b]);
        }
        if (restrict_to_pos && feas.empty())
            continue;
        found.emplace(std::move(feas), primitive_integer_vector(rep));
    }
    ChamberComplexSample out;
    out.regions = static_cast<long long>(regions.size());
    for (auto& [feas, rep] : found)
        out.chambers.push_back({rep, feas});
    return out;
}

bool same_chamber(const IntMatrix& config, const RatVector& theta1, const RatVector& theta2)
{
    if (!is_generic(theta1, config) || !is_generic(theta2, config))
        throw Error(ErrorKind::NonGenericTheta, "same_chamber needs generic vectors");
    std::vector<IndexSet> bases = column_bases(config);
    return feasible_bases(config, theta1, bases) == feasible_bases(config, theta2, bases);
}

}   // namespace hypertoric
