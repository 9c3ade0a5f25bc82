#include "hypertoric/polyhedra.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "hypertoric/linalg.hpp"
#include "hypertoric/lp.hpp"

namespace hypertoric {

namespace {

int sign_of(const Rational& q)
{
    return q > 0 ? 1 : (q < 0 ? -1 : 0);
}

Integer ceil_rational(const Rational& q)
{
    Integer num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
    return -floor_div(-num, den);
}

Integer floor_rational(const Rational& q)
{
    return floor_div(Integer(boost::multiprecision::numerator(q)), Integer(boost::multiprecision::denominator(q)));
}

RatMatrix rows_of(const IntMatrix& b, const IndexSet& rows)
{
    return to_rational(b.select_rows(rows));
}

// The recession cone of an arrangement cell (as a closed polyhedron) is
// nontrivial.  Variables: w+ (m), w- (m), one slack per nonzero sign.
bool cell_unbounded(const IntMatrix& b, const SignVector& signs)
{
    const std::size_t n = b.rows(), m = b.cols();
    std::vector<int> nz;
    for (std::size_t i = 0; i < n; ++i)
        if (signs[i] != 0)
            nz.push_back(static_cast<int>(i));
    if (nz.empty() || m == 0)
        return false;
    const std::size_t nv = 2 * m + nz.size();
    RatMatrix sys(n + 1, nv);
    RatVector rhs(n + 1, Rational(0));
    std::size_t slack = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int s = signs[i] == 0 ? 1 : signs[i];
        for (std::size_t j = 0; j < m; ++j) {
            sys(i, j) = s * b(i, j);
            sys(i, m + j) = -s * b(i, j);
        }
        if (signs[i] != 0) {
            sys(i, 2 * m + slack) = -1;
            sys(n, 2 * m + slack) = 1;
            ++slack;
        }
    }
    rhs[n] = 1;
    return lp_feasible(sys, rhs);
}

}   // namespace

bool is_generic(const RatVector& theta, const IntMatrix& a)
{
    const int d = static_cast<int>(a.rows());
    if (static_cast<int>(theta.size()) != d)
        throw Error(ErrorKind::DimensionMismatch, "theta has " + std::to_string(theta.size()) +
                                                      " entries, expected " + std::to_string(d));
    RatMatrix ar = to_rational(a);
    for (const auto& s : combinations(static_cast<int>(a.cols()), d - 1)) {
        RatMatrix m(d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d - 1; ++j)
                m(i, j) = ar(i, s[j]);
            m(i, d - 1) = theta[i];
        }
        if (!determinant(m).is_zero())
            continue;
        if (rank(ar.select_cols(s)) == d - 1)
            return false;
    }
    return true;
}

bool is_generic(const IntVector& theta, const IntMatrix& a)
{
    return is_generic(to_rational(theta), a);
}

PolyhedronSlice::PolyhedronSlice(IntMatrix a, RatVector theta) : a_(std::move(a)), theta_(std::move(theta))
{
    if (theta_.size() != a_.rows())
        throw Error(ErrorKind::DimensionMismatch, "theta length differs from the row count of A");
    std::vector<IndexSet> bases;
    for (const auto& c : combinations(static_cast<int>(a_.cols()), static_cast<int>(a_.rows())))
        if (!determinant(a_.select_cols(c)).is_zero())
            bases.push_back(c);
    compute(bases);
}

PolyhedronSlice::PolyhedronSlice(IntMatrix a, RatVector theta, const std::vector<IndexSet>& bases)
    : a_(std::move(a)), theta_(std::move(theta))
{
    if (theta_.size() != a_.rows())
        throw Error(ErrorKind::DimensionMismatch, "theta length differs from the row count of A");
    compute(bases);
}

void PolyhedronSlice::compute(const std::vector<IndexSet>& bases)
{
    const std::size_t n = a_.cols();
    std::map<RatVector, std::size_t> seen;
    RatMatrix ar = to_rational(a_);
    for (const auto& c : bases) {
        auto sol = solve_square(ar.select_cols(c), theta_);
        if (!sol)
            continue;
        bool feasible = true;
        for (const auto& q : *sol)
            feasible = feasible && q >= 0;
        if (!feasible)
            continue;
        RatVector u(n, Rational(0));
        for (std::size_t k = 0; k < c.size(); ++k)
            u[c[k]] = (*sol)[k];
        for (const auto& q : *sol)
            if (q.is_zero())
                simple_ = false;
        if (seen.count(u))
            continue;
        seen.emplace(u, vertices_.size());
        vertices_.push_back({c, u});
    }
}

std::vector<Vertex> vertices(const IntMatrix& a, const RatVector& theta)
{
    PolyhedronSlice p(a, theta);
    if (p.vertices().empty())
        throw Error(ErrorKind::InfeasibleSlice, "P_theta is empty: no column basis is feasible");
    return p.vertices();
}

std::vector<IndexSet> feasible_bases(const IntMatrix& a, const RatVector& theta,
                                     const std::vector<IndexSet>& bases)
{
    RatMatrix ar = to_rational(a);
    std::vector<IndexSet> out;
    for (const auto& c : bases) {
        auto sol = solve_square(ar.select_cols(c), theta);
        if (!sol)
            continue;
        bool feasible = true;
        for (const auto& q : *sol)
            feasible = feasible && q >= 0;
        if (feasible)
            out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_integral_degree(const PolyhedronSlice& p)
{
    for (const auto& v : p.vertices())
        for (const auto& q : v.point)
            if (!is_integral(q))
                return false;
    return true;
}

bool is_smooth_degree(const PolyhedronSlice& p)
{
    // Every feasible basis, not just one per vertex, must be unimodular.
    std::vector<IndexSet> all;
    for (const auto& c : combinations(static_cast<int>(p.a().cols()), static_cast<int>(p.a().rows())))
        if (!determinant(p.a().select_cols(c)).is_zero())
            all.push_back(c);
    for (const auto& c : feasible_bases(p.a(), p.theta(), all))
        if (boost::multiprecision::abs(determinant(p.a().select_cols(c))) != 1)
            return false;
    return true;
}

IntVector psi_from_theta(const GaleDualPair& pair, const IntVector& theta)
{
    const IntMatrix& a = pair.a;
    const std::size_t d = a.rows(), n = a.cols();
    if (theta.size() != d)
        throw Error(ErrorKind::DimensionMismatch, "theta length differs from the row count of A");
    RatVector rhs(d);
    for (std::size_t i = 0; i < d; ++i)
        rhs[i] = -Rational(theta[i]);
    for (const auto& c : combinations(static_cast<int>(n), static_cast<int>(d))) {
        auto sol = solve_square(to_rational(a.select_cols(c)), rhs);
        if (!sol)
            continue;
        bool integral = true;
        for (const auto& q : *sol)
            integral = integral && is_integral(q);
        if (!integral)
            break;      // fall through to the Hermite solve below
        IntVector psi(n, Integer(0));
        for (std::size_t k = 0; k < d; ++k)
            psi[c[k]] = boost::multiprecision::numerator((*sol)[k]);
        return psi;
    }
    // A is surjective onto Z^d, so H = A U has unit pivots and H y = -theta
    // is solved by forward substitution over the integers.
    ColumnHermite ch = column_hermite(a);
    IntVector y(n, Integer(0));
    for (int k = 0; k < ch.rank; ++k) {
        int r = ch.pivot_rows[k];
        Integer s = -theta[r];
        for (int j = 0; j < k; ++j)
            s -= ch.h(r, j) * y[j];
        if (s % ch.h(r, k) != 0)
            throw Error(ErrorKind::NonPrimitive, "A is not surjective onto Z^d");
        y[k] = s / ch.h(r, k);
    }
    IntVector psi = multiply(ch.u, y);
    if (multiply(a, psi) != [&] { IntVector t(d); for (std::size_t i = 0; i < d; ++i) t[i] = -theta[i]; return t; }())
        throw Error(ErrorKind::InvariantViolated, "psi does not solve A psi = -theta");
    return psi;
}

BoundedComplex bounded_complex(const PolyhedronSlice& p)
{
    if (!p.simple())
        throw Error(ErrorKind::NonGenericTheta, "P_theta is not simple; theta must be generic");
    const int n = static_cast<int>(p.a().cols());
    if (n > 63)
        throw Error(ErrorKind::DimensionMismatch, "too many coordinates for face masks");
    RatMatrix ar = to_rational(p.a());

    BoundedComplex bc;
    bc.vertices = p.vertices();
    std::vector<std::uint64_t> vmask;
    for (const auto& v : bc.vertices)
        vmask.push_back(set_to_mask(v.basis));

    std::vector<std::uint64_t> level(vmask.begin(), vmask.end());
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    std::vector<std::vector<std::uint64_t>> by_dim{level};
    while (!level.empty()) {
        std::set<std::uint64_t> checked;
        std::vector<std::uint64_t> next;
        for (auto s : level)
            for (int j = 0; j < n; ++j) {
                std::uint64_t t = s | (std::uint64_t(1) << j);
                if (t == s || !checked.insert(t).second)
                    continue;
                if (!has_nonzero_recession(ar, mask_to_set(t)))
                    next.push_back(t);
            }
        std::sort(next.begin(), next.end());
        level = next;
        if (!level.empty())
            by_dim.push_back(level);
    }
    for (std::size_t k = 0; k < by_dim.size(); ++k) {
        std::vector<Face> faces;
        for (auto s : by_dim[k]) {
            Face f;
            f.support = mask_to_set(s);
            f.dim = static_cast<int>(k);
            for (std::size_t v = 0; v < vmask.size(); ++v)
                if ((vmask[v] & s) == vmask[v])
                    f.vertices.push_back(static_cast<int>(v));
            faces.push_back(std::move(f));
        }
        std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) { return x.support < y.support; });
        for (auto& f : faces)
            bc.faces.push_back(std::move(f));
        bc.f.push_back(static_cast<long long>(by_dim[k].size()));
    }
    return bc;
}

CountVector betti_from_bounded_faces(const CountVector& f)
{
    CountVector b(f.size(), 0);
    for (std::size_t k = 0; k < f.size(); ++k) {
        long long s = 0;
        for (std::size_t i = k; i < f.size(); ++i) {
            long long term = static_cast<long long>(binomial(static_cast<int>(i), static_cast<int>(k))) * f[i];
            s += ((i - k) % 2 == 0) ? term : -term;
        }
        if (s < 0)
            throw Error(ErrorKind::NegativeBetti, "b_" + std::to_string(k) + " = " + std::to_string(s) +
                                                      " < 0; the face counts are inconsistent");
        b[k] = s;
    }
    return b;
}

std::vector<IntVector> lattice_points_bounded(const PolyhedronSlice& p)
{
    return lattice_points_bounded(p, bounded_complex(p));
}

std::vector<IntVector> lattice_points_bounded(const PolyhedronSlice& p, const BoundedComplex& bc)
{
    const std::size_t n = p.a().cols();
    RatMatrix ar = to_rational(p.a());
    std::set<IntVector> points;
    // Only maximal faces need scanning; every bounded face lies in one.
    std::vector<std::uint64_t> masks;
    for (const auto& f : bc.faces)
        masks.push_back(set_to_mask(f.support));
    for (std::size_t fi = 0; fi < bc.faces.size(); ++fi) {
        bool maximal = true;
        for (std::size_t gi = 0; gi < masks.size() && maximal; ++gi)
            if (gi != fi && (masks[fi] & masks[gi]) == masks[fi] && masks[gi] != masks[fi])
                maximal = false;
        if (!maximal)
            continue;
        const Face& face = bc.faces[fi];
        const IndexSet& basis = bc.vertices[face.vertices.front()].basis;
        IndexSet free;
        std::set_difference(face.support.begin(), face.support.end(), basis.begin(), basis.end(),
                            std::back_inserter(free));
        std::vector<Integer> lo(free.size()), hi(free.size());
        for (std::size_t k = 0; k < free.size(); ++k) {
            Rational mn, mx;
            bool first = true;
            for (int v : face.vertices) {
                const Rational& q = bc.vertices[v].point[free[k]];
                if (first || q < mn)
                    mn = q;
                if (first || q > mx)
                    mx = q;
                first = false;
            }
            lo[k] = ceil_rational(mn);
            hi[k] = floor_rational(mx);
        }
        RatMatrix ab = ar.select_cols(basis);
        std::vector<Integer> cur(lo);
        bool empty_box = false;
        for (std::size_t k = 0; k < free.size(); ++k)
            empty_box = empty_box || lo[k] > hi[k];
        if (empty_box)
            continue;
        while (true) {
            RatVector rhs = p.theta();
            for (std::size_t k = 0; k < free.size(); ++k)
                for (std::size_t i = 0; i < rhs.size(); ++i)
                    rhs[i] -= ar(i, free[k]) * Rational(cur[k]);
            auto sol = solve_square(ab, rhs);
            if (sol) {
                bool ok = true;
                for (const auto& q : *sol)
                    ok = ok && q >= 0 && is_integral(q);
                if (ok) {
                    IntVector u(n, Integer(0));
                    for (std::size_t k = 0; k < basis.size(); ++k)
                        u[basis[k]] = boost::multiprecision::numerator((*sol)[k]);
                    for (std::size_t k = 0; k < free.size(); ++k)
                        u[free[k]] = cur[k];
                    points.insert(u);
                }
            }
            std::size_t k = 0;
            while (k < free.size() && cur[k] == hi[k]) {
                cur[k] = lo[k];
                ++k;
            }
            if (k == free.size())
                break;
            ++cur[k];
        }
    }
    return std::vector<IntVector>(points.begin(), points.end());
}

SignVector arrangement_signs(const IntMatrix& b, const RatVector& psi, const RatVector& w)
{
    SignVector s(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        Rational v = -psi[i];
        for (std::size_t j = 0; j < b.cols(); ++j)
            v += b(i, j) * w[j];
        s[i] = sign_of(v);
    }
    return s;
}

ArrangementComplex arrangement_bounded_complex(const IntMatrix& b, const RatVector& psi)
{
    const int n = static_cast<int>(b.rows()), m = static_cast<int>(b.cols());
    if (static_cast<int>(psi.size()) != n)
        throw Error(ErrorKind::DimensionMismatch, "psi length differs from the number of hyperplanes");
    for (int i = 0; i < n; ++i) {
        bool zero = true;
        for (int j = 0; j < m; ++j)
            zero = zero && b(i, j).is_zero();
        if (zero)
            throw Error(ErrorKind::LoopPresent, "b_" + std::to_string(i) + " = 0 does not define a hyperplane");
    }
    ArrangementComplex out;
    std::vector<SignVector> vsigns;
    std::map<RatVector, int> seen;
    for (const auto& s : combinations(n, m)) {
        RatMatrix bs = rows_of(b, s);
        RatVector rhs(m);
        for (int k = 0; k < m; ++k)
            rhs[k] = psi[s[k]];
        auto w = solve_square(bs, rhs);
        if (!w)
            continue;
        SignVector sg = arrangement_signs(b, psi, *w);
        int zeros = static_cast<int>(std::count(sg.begin(), sg.end(), 0));
        if (zeros != m)
            throw Error(ErrorKind::DegeneratePsi, "a vertex of the arrangement lies on " + std::to_string(zeros) +
                                                      " hyperplanes, more than " + std::to_string(m));
        if (seen.count(*w))
            continue;
        seen.emplace(*w, static_cast<int>(out.vertex_points.size()));
        out.vertex_points.push_back(*w);
        vsigns.push_back(sg);
    }

    auto conforms = [](const SignVector& v, const SignVector& c) {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (v[i] != 0 && v[i] != c[i])
                return false;
        return true;
    };

    std::vector<SignVector> level = vsigns;
    std::sort(level.begin(), level.end());
    std::vector<std::vector<SignVector>> by_dim{level};
    while (!level.empty()) {
        std::set<SignVector> checked;
        std::vector<SignVector> next;
        for (const auto& s : level)
            for (int i = 0; i < n; ++i) {
                if (s[i] != 0)
                    continue;
                for (int eps : {1, -1}) {
                    SignVector t = s;
                    t[i] = eps;
                    if (!checked.insert(t).second)
                        continue;
                    if (!cell_unbounded(b, t))
                        next.push_back(t);
                }
            }
        std::sort(next.begin(), next.end());
        level = next;
        if (!level.empty())
            by_dim.push_back(level);
    }
    for (std::size_t k = 0; k < by_dim.size(); ++k) {
        for (const auto& s : by_dim[k]) {
            Cell c;
            c.signs = s;
            c.dim = static_cast<int>(k);
            RatVector wit(m, Rational(0));
            for (std::size_t v = 0; v < vsigns.size(); ++v)
                if (conforms(vsigns[v], s)) {
                    c.vertices.push_back(static_cast<int>(v));
                    for (int j = 0; j < m; ++j)
                        wit[j] += out.vertex_points[v][j];
                }
            if (c.vertices.empty())
                throw Error(ErrorKind::InvariantViolated, "bounded cell without vertices");
            for (auto& q : wit)
                q /= static_cast<long>(c.vertices.size());
            if (arrangement_signs(b, psi, wit) != s)
                throw Error(ErrorKind::InvariantViolated, "cell witness does not lie in its cell");
            c.witness = std::move(wit);
            out.cells.push_back(std::move(c));
        }
        out.f.push_back(static_cast<long long>(by_dim[k].size()));
    }
    return out;
}

Rational region_volume(const IntMatrix& b, const RatVector& psi, const SignVector& signs,
                       std::vector<IndexSet>* vertex_zero_sets)
{
    const int n = static_cast<int>(b.rows()), m = static_cast<int>(b.cols());
    for (int s : signs)
        if (s == 0)
            throw Error(ErrorKind::InvariantViolated, "region sign vector has a zero entry");
    if (cell_unbounded(b, signs))
        throw Error(ErrorKind::UnboundedRegion, "region is unbounded");

    std::vector<RatVector> pts;
    std::vector<std::uint64_t> zmask;
    for (const auto& s : combinations(n, m)) {
        RatVector rhs(m);
        for (int k = 0; k < m; ++k)
            rhs[k] = psi[s[k]];
        auto w = solve_square(rows_of(b, s), rhs);
        if (!w)
            continue;
        SignVector sg = arrangement_signs(b, psi, *w);
        bool in = true;
        for (int i = 0; i < n && in; ++i) {
            if (std::binary_search(s.begin(), s.end(), i))
                continue;
            if (sg[i] == 0)
                throw Error(ErrorKind::DegeneratePsi, "psi is not generic");
            in = sg[i] == signs[i];
        }
        if (!in)
            continue;
        pts.push_back(*w);
        zmask.push_back(set_to_mask(s));
    }
    if (pts.empty())
        throw Error(ErrorKind::UnboundedRegion, "region has no vertices");
    if (vertex_zero_sets) {
        vertex_zero_sets->clear();
        for (auto z : zmask)
            vertex_zero_sets->push_back(mask_to_set(z));
        std::sort(vertex_zero_sets->begin(), vertex_zero_sets->end());
    }

    // Pulling triangulation: cone from the first vertex of each face over the
    // triangulated facets that avoid it.
    std::function<std::vector<std::vector<int>>(std::uint64_t, int)> triangulate =
        [&](std::uint64_t forced, int k) -> std::vector<std::vector<int>> {
        std::vector<int> verts;
        for (std::size_t v = 0; v < pts.size(); ++v)
            if ((zmask[v] & forced) == forced)
                verts.push_back(static_cast<int>(v));
        if (k == 0)
            return {{verts.front()}};
        int apex = verts.front();
        std::vector<std::vector<int>> out;
        for (int i = 0; i < n; ++i) {
            std::uint64_t bit = std::uint64_t(1) << i;
            if ((forced & bit) || (zmask[apex] & bit))
                continue;
            bool nonempty = false;
            for (int v : verts)
                nonempty = nonempty || (zmask[v] & bit);
            if (!nonempty)
                continue;
            for (auto simplex : triangulate(forced | bit, k - 1)) {
                simplex.push_back(apex);
                out.push_back(std::move(simplex));
            }
        }
        return out;
    };
    Rational total = 0;
    Integer fact = 1;
    for (int i = 2; i <= m; ++i)
        fact *= i;
    for (const auto& simplex : triangulate(0, m)) {
        RatMatrix mat(m, m);
        const RatVector& p0 = pts[simplex.back()];
        for (int c = 0; c < m; ++c)
            for (int r = 0; r < m; ++r)
                mat(r, c) = pts[simplex[c]][r] - p0[r];
        Rational det = determinant(mat);
        total += det < 0 ? -det : det;
    }
    return total / Rational(fact);
}

IndexSet lawrence_support_of_cell(const SignVector& signs)
{
    const int n = static_cast<int>(signs.size());
    IndexSet s;
    for (int i = 0; i < n; ++i)
        if (signs[i] > 0)
            s.push_back(i);
    for (int i = 0; i < n; ++i)
        if (signs[i] < 0)
            s.push_back(n + i);
    return s;
}

PosetComparison compare_face_posets(const ArrangementComplex& arr, const BoundedComplex& lawrence,
                                    const IntMatrix& b, const RatVector& psi)
{
    PosetComparison out;
    const std::size_t n = b.rows();
    std::map<IndexSet, int> face_dim;
    for (const auto& f : lawrence.faces)
        face_dim[f.support] = f.dim;
    std::set<IndexSet> images;
    out.dimensions = true;
    for (const auto& c : arr.cells) {
        IndexSet s = lawrence_support_of_cell(c.signs);
        images.insert(s);
        auto it = face_dim.find(s);
        if (it == face_dim.end() || it->second != c.dim)
            out.dimensions = false;
    }
    out.bijective = images.size() == arr.cells.size() && images.size() == face_dim.size();
    for (const auto& [s, d] : face_dim)
        out.bijective = out.bijective && images.count(s);

    out.incidences = true;
    std::vector<std::uint64_t> masks;
    for (const auto& c : arr.cells)
        masks.push_back(set_to_mask(lawrence_support_of_cell(c.signs)));
    for (std::size_t x = 0; x < arr.cells.size() && out.incidences; ++x)
        for (std::size_t y = 0; y < arr.cells.size(); ++y) {
            bool cell_le = true;
            for (std::size_t i = 0; i < n && cell_le; ++i)
                cell_le = arr.cells[x].signs[i] == 0 || arr.cells[x].signs[i] == arr.cells[y].signs[i];
            bool face_le = (masks[x] & masks[y]) == masks[x];
            if (cell_le != face_le) {
                out.incidences = false;
                break;
            }
        }

    out.embedding = true;
    for (const auto& c : arr.cells) {
        IndexSet support;
        std::vector<int> neg;
        for (std::size_t i = 0; i < n; ++i) {
            Rational t = -psi[i];
            for (std::size_t j = 0; j < b.cols(); ++j)
                t += b(i, j) * c.witness[j];
            if (t > 0)
                support.push_back(static_cast<int>(i));
            else if (t < 0)
                neg.push_back(static_cast<int>(n + i));
        }
        support.insert(support.end(), neg.begin(), neg.end());
        if (support != lawrence_support_of_cell(c.signs) || !face_dim.count(support))
            out.embedding = false;
    }
    return out;
}

StarCollapseReport star_collapsibility_check(const BoundedComplex& bc, const RatVector& c)
{
    StarCollapseReport rep;
    for (const auto& q : c)
        if (q <= 0)
            throw Error(ErrorKind::NonGenericDirection, "weights must be positive (v interior to pos(B))");
    const std::size_t nv = bc.vertices.size();
    std::vector<Rational> phi(nv);
    for (std::size_t v = 0; v < nv; ++v)
        phi[v] = dot(c, bc.vertices[v].point);
    {
        std::vector<Rational> sorted = phi;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorKind::NonGenericDirection, "two vertices have the same weight");
    }
    rep.direction_generic = true;

    std::set<std::uint64_t> all_faces;
    for (const auto& f : bc.faces)
        all_faces.insert(set_to_mask(f.support));
    std::vector<std::uint64_t> basis_mask(nv);
    for (std::size_t v = 0; v < nv; ++v)
        basis_mask[v] = set_to_mask(bc.vertices[v].basis);

    auto attempt = [&](int orientation, std::vector<int>* order_out) {
        // orientation +1: anchor is the maximum of phi on its face.
        std::vector<int> order(nv);
        for (std::size_t v = 0; v < nv; ++v)
            order[v] = static_cast<int>(v);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return orientation > 0 ? phi[x] < phi[y] : phi[x] > phi[y];
        });
        if (order_out)
            *order_out = order;
        std::set<std::uint64_t> covered;
        for (int p : order) {
            std::uint64_t star = basis_mask[p];
            for (const auto& f : bc.faces) {
                if (f.dim != 1 || (set_to_mask(f.support) & basis_mask[p]) != basis_mask[p])
                    continue;
                int other = f.vertices[0] == p ? f.vertices[1] : f.vertices[0];
                bool descends = orientation > 0 ? phi[other] < phi[p] : phi[other] > phi[p];
                if (descends)
                    star = set_to_mask(f.support) | star;
            }
            if (!all_faces.count(star))
                return false;
            for (auto g : all_faces) {
                if ((g & star) != g)
                    continue;
                bool is_new = !covered.count(g);
                bool contains_p = (g & basis_mask[p]) == basis_mask[p];
                if (is_new != contains_p)
                    return false;
                covered.insert(g);
            }
        }
        return covered.size() == all_faces.size();
    };
    rep.max_anchor_ok = attempt(1, &rep.order);
    rep.min_anchor_ok = attempt(-1, nullptr);
    return rep;
}

std::vector<IntVector> hilbert_basis_deg0(const IntMatrix& a)
{
    // Completion procedure of Contejean and Devie for the minimal nonzero
    // solutions of A x = 0 in N^n: extend a partial vector x by e_j only when
    // (A x).(A e_j) < 0, and discard anything above a known solution.
    const std::size_t d = a.rows(), n = a.cols();
    std::vector<std::vector<Integer>> col(n, std::vector<Integer>(d));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < d; ++i)
            col[j][i] = a(i, j);
    using Node = std::pair<std::vector<int>, std::vector<Integer>>;
    std::vector<Node> frontier;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<int> x(n, 0);
        x[j] = 1;
        frontier.emplace_back(x, col[j]);
    }
    std::vector<std::vector<int>> found;
    auto dominated = [&](const std::vector<int>& x) {
        for (const auto& s : found) {
            bool ge = true;
            for (std::size_t j = 0; j < n && ge; ++j)
                ge = x[j] >= s[j];
            if (ge)
                return true;
        }
        return false;
    };
    while (!frontier.empty()) {
        std::vector<Node> rest;
        for (auto& node : frontier) {
            bool zero = true;
            for (const auto& z : node.second)
                zero = zero && z.is_zero();
            if (zero) {
                if (!dominated(node.first))
                    found.push_back(node.first);
            } else {
                rest.push_back(std::move(node));
            }
        }
        std::map<std::vector<int>, std::vector<Integer>> next;
        for (const auto& [x, ax] : rest) {
            if (dominated(x))
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                Integer s = 0;
                for (std::size_t i = 0; i < d; ++i)
                    s += ax[i] * col[j][i];
                if (s >= 0)
                    continue;
                std::vector<int> y = x;
                ++y[j];
                if (next.count(y) || dominated(y))
                    continue;
                std::vector<Integer> ay = ax;
                for (std::size_t i = 0; i < d; ++i)
                    ay[i] += col[j][i];
                next.emplace(std::move(y), std::move(ay));
            }
        }
        frontier.assign(next.begin(), next.end());
    }
    std::vector<IntVector> out;
    for (const auto& x : found) {
        IntVector v(n);
        for (std::size_t j = 0; j < n; ++j)
            v[j] = x[j];
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVector> hilbert_basis_deg0(const GaleDualPair& pair)
{
    return hilbert_basis_deg0(pair.a);
}

}   // namespace hypertoric
