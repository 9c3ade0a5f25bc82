#include "hypertoric/cohomology.hpp"

#include <algorithm>
#include <random>

#include "hypertoric/fans.hpp"

namespace hypertoric {

Exponent square_free(const IndexSet& s, int nvars)
{
    Exponent e(nvars, 0);
    for (int i : s)
        e[i] = 1;
    return e;
}

RingPresentation build_presentation(const GaleDualPair& pair)
{
    const int n = pair.n(), m = pair.m();
    if (m > 0) {
        IndexSet zero = zero_rows_of_b(pair);
        if (!zero.empty())
            throw Error(ErrorKind::LoopPresent, "b_" + std::to_string(zero.front()) +
                                                    " = 0: column " + std::to_string(zero.front()) +
                                                    " of A is a coloop, so the presentation degenerates");
    }
    RingPresentation p;
    p.nvars = n;
    for (int k = 0; k < m; ++k)
        p.linear.push_back(to_rational(pair.b.col(k)));
    LinearMatroid mb = LinearMatroid::of_rows(pair.b);
    for (const auto& c : mb.circuits())
        p.monomials.push_back(square_free(c, n));
    return p;
}

GradedQuotientBasis::GradedQuotientBasis(const RingPresentation& p, int up_to) : nvars_(p.nvars)
{
    const int n = p.nvars;
    std::vector<int> pivots;
    RatMatrix reduced;
    if (!p.linear.empty()) {
        RatMatrix lin = RatMatrix::from_rows(p.linear, n);
        RowEchelon e = rref(lin);
        pivots = e.pivots;
        reduced = std::move(e.reduced);
    }
    std::vector<char> is_pivot(n, 0);
    for (int c : pivots)
        is_pivot[c] = 1;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j])
            free_.push_back(j);
    const int k = static_cast<int>(free_.size());
    reduction_ = RatMatrix(n, k);
    for (int c = 0; c < k; ++c)
        reduction_(free_[c], c) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (int c = 0; c < k; ++c)
            reduction_(pivots[r], c) = -reduced(r, free_[c]);

    std::map<int, std::vector<MultiPoly>> gens;
    for (const auto& e : p.monomials) {
        if (static_cast<int>(e.size()) != n)
            throw Error(ErrorKind::VariableCountMismatch, "monomial generator has wrong length");
        MultiPoly g = MultiPoly::monomial(e).substitute_linear(reduction_);
        if (!g.is_zero())
            gens[g.degree()].push_back(std::move(g));
    }

    const int cap = up_to >= 0 ? up_to : 4 * n + 8;
    for (int deg = 0; deg <= cap; ++deg) {
        Degree d;
        d.monomials = monomials_of_degree(k, deg);
        for (std::size_t i = 0; i < d.monomials.size(); ++i)
            d.index.emplace(d.monomials[i], static_cast<int>(i));
        const std::size_t cols = d.monomials.size();
        std::vector<RatVector> rows;
        bool full_before = deg > 0 && dims_.back() == 0;
        if (full_before) {
            d.ideal = RatMatrix::identity(cols);
            for (std::size_t i = 0; i < cols; ++i)
                d.pivots.push_back(static_cast<int>(i));
        } else {
            if (deg > 0) {
                const Degree& prev = degrees_.back();
                for (std::size_t r = 0; r < prev.pivots.size(); ++r)
                    for (int v = 0; v < k; ++v) {
                        RatVector row(cols, Rational(0));
                        for (std::size_t c = 0; c < prev.monomials.size(); ++c) {
                            const Rational& q = prev.ideal(r, c);
                            if (q.is_zero())
                                continue;
                            Exponent e = prev.monomials[c];
                            ++e[v];
                            row[d.index.at(e)] = q;
                        }
                        rows.push_back(std::move(row));
                    }
            }
            for (const auto& g : gens[deg]) {
                RatVector row(cols, Rational(0));
                for (const auto& [e, q] : g.terms())
                    row[d.index.at(e)] = q;
                rows.push_back(std::move(row));
            }
            if (!rows.empty()) {
                RowEchelon e = rref(RatMatrix::from_rows(rows, cols));
                d.pivots = e.pivots;
                d.ideal = RatMatrix(e.pivots.size(), cols);
                for (std::size_t r = 0; r < e.pivots.size(); ++r)
                    for (std::size_t c = 0; c < cols; ++c)
                        d.ideal(r, c) = e.reduced(r, c);
            } else {
                d.ideal = RatMatrix(0, cols);
            }
        }
        std::vector<char> piv(cols, 0);
        for (int c : d.pivots)
            piv[c] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (!piv[c])
                d.standard.push_back(static_cast<int>(c));
        dims_.push_back(static_cast<long long>(d.standard.size()));
        degrees_.push_back(std::move(d));
        if (up_to < 0 && dims_.back() == 0)
            break;
    }
}

std::vector<Exponent> GradedQuotientBasis::basis(int k) const
{
    std::vector<Exponent> out;
    if (k < 0 || k > top())
        return out;
    const Degree& d = degrees_[k];
    for (int c : d.standard) {
        Exponent e(nvars_, 0);
        for (std::size_t v = 0; v < free_.size(); ++v)
            e[free_[v]] = d.monomials[c][v];
        out.push_back(std::move(e));
    }
    return out;
}

RatVector GradedQuotientBasis::normal_form(const MultiPoly& p, int k) const
{
    return normal_form_reduced(p.substitute_linear(reduction_), k);
}

RatVector GradedQuotientBasis::normal_form_reduced(const MultiPoly& p, int k) const
{
    if (k < 0 || k > top())
        throw Error(ErrorKind::DimensionMismatch, "degree outside the computed range");
    const Degree& d = degrees_[k];
    RatVector v(d.monomials.size(), Rational(0));
    for (const auto& [e, q] : p.terms()) {
        auto it = d.index.find(e);
        if (it == d.index.end())
            throw Error(ErrorKind::DimensionMismatch, "polynomial is not homogeneous of degree " + std::to_string(k));
        v[it->second] += q;
    }
    for (std::size_t r = 0; r < d.pivots.size(); ++r) {
        Rational f = v[d.pivots[r]];
        if (f.is_zero())
            continue;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!d.ideal(r, c).is_zero())
                v[c] -= f * d.ideal(r, c);
    }
    RatVector out;
    for (int c : d.standard)
        out.push_back(v[c]);
    return out;
}

CountVector hilbert_function(const RingPresentation& p, int up_to)
{
    return GradedQuotientBasis(p, up_to).dims();
}

CountVector trim_zeros(CountVector h)
{
    while (!h.empty() && h.back() == 0)
        h.pop_back();
    return h;
}

bool socle_in_top_degree(const GradedQuotientBasis& q)
{
    CountVector h = trim_zeros(q.dims());
    const int top = static_cast<int>(h.size()) - 1;
    const int k = q.reduced_vars();
    for (int deg = 0; deg < top; ++deg) {
        // Stack the multiplication maps by every reduced variable.
        std::vector<RatVector> cols;
        for (const auto& e : q.basis(deg)) {
            RatVector col;
            for (int v = 0; v < k; ++v) {
                MultiPoly t = MultiPoly::monomial(e).substitute_linear(q.reduction());
                Exponent ev(k, 0);
                ev[v] = 1;
                RatVector part = q.normal_form_reduced(t * MultiPoly::monomial(ev), deg + 1);
                col.insert(col.end(), part.begin(), part.end());
            }
            cols.push_back(std::move(col));
        }
        if (cols.empty())
            continue;
        RatMatrix m = RatMatrix::from_columns(cols);
        if (rank(m) != static_cast<int>(cols.size()))
            return false;
    }
    return true;
}

CogeneratorSet volume_cogenerators(const GaleDualPair& pair, const RatVector& psi, std::uint64_t seed)
{
    const int n = pair.n(), m = pair.m();
    ArrangementComplex arr = arrangement_bounded_complex(pair.b, psi);
    CogeneratorSet out;
    for (const auto& c : arr.cells)
        if (c.dim == m)
            out.regions.push_back(c.signs);

    std::vector<std::vector<IndexSet>> types(out.regions.size());
    for (std::size_t r = 0; r < out.regions.size(); ++r)
        out.volumes.push_back(region_volume(pair.b, psi, out.regions[r], &types[r]));

    const std::size_t needed = monomials_of_degree(n, m).size() + 3;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> jitter(-5, 5);
    const Rational scale = 1000;
    std::vector<std::vector<Sample>> samples(out.regions.size());
    for (std::size_t r = 0; r < out.regions.size(); ++r)
        samples[r].push_back({psi, out.volumes[r]});
    int misses = 0;
    while (samples.empty() ? false : samples.front().size() < needed) {
        RatVector p(n);
        for (int i = 0; i < n; ++i)
            p[i] = scale * psi[i] + jitter(rng);
        std::vector<Rational> vols;
        bool inside = true;
        try {
            for (std::size_t r = 0; r < out.regions.size() && inside; ++r) {
                std::vector<IndexSet> t;
                vols.push_back(region_volume(pair.b, p, out.regions[r], &t));
                inside = t == types[r];
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegeneratePsi && e.kind() != ErrorKind::UnboundedRegion)
                throw;
            inside = false;
        }
        if (!inside) {
            if (++misses > static_cast<int>(4 * needed) + 50)
                throw Error(ErrorKind::ChamberCrossed, "too many samples fell outside the chamber of psi");
            continue;
        }
        for (std::size_t r = 0; r < out.regions.size(); ++r)
            samples[r].push_back({p, vols[r]});
    }
    for (std::size_t r = 0; r < out.regions.size(); ++r) {
        try {
            out.polys.push_back(interpolate_homogeneous(samples[r], m, n));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Inconsistent)
                throw Error(ErrorKind::ChamberCrossed, "volume samples of region " + std::to_string(r) +
                                                           " are not one polynomial");
            throw;
        }
    }
    return out;
}

long long catalecticant_rank(const std::vector<MultiPoly>& polys, int k)
{
    if (polys.empty())
        return 0;
    const int n = polys.front().nvars();
    std::map<std::pair<std::size_t, Exponent>, std::size_t> column;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    for (const auto& a : monomials_of_degree(n, k)) {
        MultiPoly op = MultiPoly::monomial(a);
        std::vector<std::pair<std::size_t, Rational>> row;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            MultiPoly der = apply_diff_op(op, polys[i]);
            for (const auto& [e, q] : der.terms()) {
                auto key = std::make_pair(i, e);
                auto it = column.find(key);
                if (it == column.end())
                    it = column.emplace(key, column.size()).first;
                row.emplace_back(it->second, q);
            }
        }
        rows.push_back(std::move(row));
    }
    if (column.empty())
        return 0;
    RatMatrix mat(rows.size(), column.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, q] : rows[r])
            mat(r, c) = q;
    return rank(mat);
}

AnnihilatorReport annihilator_verify(const RingPresentation& p, const CogeneratorSet& c)
{
    AnnihilatorReport rep;
    for (const auto& v : c.polys) {
        for (const auto& l : p.linear)
            if (!apply_diff_op(MultiPoly::linear(l), v).is_zero())
                throw Error(ErrorKind::AnnihilatorMismatch, "a linear generator (degree 1) does not annihilate " +
                                                                v.to_string());
        for (const auto& e : p.monomials)
            if (!apply_diff_op(MultiPoly::monomial(e), v).is_zero())
                throw Error(ErrorKind::AnnihilatorMismatch, "the monomial " + MultiPoly::monomial(e).to_string() +
                                                                " does not annihilate " + v.to_string());
    }
    rep.generators_annihilate = true;
    int top = c.polys.empty() ? 0 : c.polys.front().degree();
    rep.hilbert = hilbert_function(p, top + 1);
    for (int k = 0; k <= top + 1; ++k)
        rep.catalecticant.push_back(catalecticant_rank(c.polys, k));
    for (int k = 0; k <= top + 1; ++k)
        if (rep.catalecticant[k] != rep.hilbert[k])
            throw Error(ErrorKind::AnnihilatorMismatch, "degree " + std::to_string(k) + ": catalecticant rank " +
                                                            std::to_string(rep.catalecticant[k]) +
                                                            " but the quotient has dimension " +
                                                            std::to_string(rep.hilbert[k]));
    return rep;
}

MultiPoly pullback_cogenerator(const IntMatrix& a, const MultiPoly& v)
{
    const int d = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    if (v.nvars() != n)
        throw Error(ErrorKind::VariableCountMismatch, "polynomial must use one variable per column of A");
    RatMatrix s(n, d);
    bool found = false;
    for (const auto& c : combinations(n, d)) {
        RatMatrix ac = to_rational(a.select_cols(c));
        if (determinant(ac).is_zero())
            continue;
        for (int j = 0; j < d; ++j) {
            RatVector e(d, Rational(0));
            e[j] = 1;
            auto col = solve_square(ac, e);
            for (int i = 0; i < d; ++i)
                s(c[i], j) = (*col)[i];
        }
        found = true;
        break;
    }
    if (!found)
        throw Error(ErrorKind::NotFullRank, "A has no column basis");
    MultiPoly w = v.substitute_linear(s);
    if (w.substitute_linear(to_rational(a)) != v)
        throw Error(ErrorKind::NotInImage, v.to_string() + " is not annihilated by Circ(A), so it is not a polynomial in Ax");
    return w;
}

std::vector<MultiPoly> pullback_cogenerators(const GaleDualPair& pair, const CogeneratorSet& c)
{
    std::vector<MultiPoly> out;
    for (const auto& v : c.polys)
        out.push_back(pullback_cogenerator(pair.a, v));
    return out;
}

MultiPoly lawrence_double(const MultiPoly& v)
{
    const int n = v.nvars();
    RatMatrix m(n, 2 * n);
    for (int j = 0; j < n; ++j) {
        m(j, j) = 1;
        m(j, n + j) = -1;
    }
    return v.substitute_linear(m);
}

std::vector<MultiPoly> lawrence_double_cogenerators(const CogeneratorSet& c)
{
    std::vector<MultiPoly> out;
    for (const auto& v : c.polys)
        out.push_back(lawrence_double(v));
    return out;
}

LefschetzReport lefschetz_injectivity(const RingPresentation& p, const RatVector& d)
{
    if (static_cast<int>(d.size()) != p.nvars)
        throw Error(ErrorKind::DimensionMismatch, "class D needs one coefficient per variable");
    GradedQuotientBasis q(p, -1);
    CountVector h = trim_zeros(q.dims());
    const int top = static_cast<int>(h.size()) - 1;
    LefschetzReport rep;
    rep.d = d;
    rep.injective = true;
    MultiPoly ell = MultiPoly::linear(d).substitute_linear(q.reduction());
    for (int i = 1; 2 * i <= top; ++i) {
        std::vector<RatVector> cols;
        for (const auto& e : q.basis(i - 1)) {
            MultiPoly s = MultiPoly::monomial(e).substitute_linear(q.reduction());
            cols.push_back(q.normal_form_reduced(ell * s, i));
        }
        long long r = cols.empty() ? 0 : rank(RatMatrix::from_columns(cols));
        rep.ranks.push_back(r);
        rep.sources.push_back(static_cast<long long>(cols.size()));
        if (r != static_cast<long long>(cols.size()))
            rep.injective = false;
    }
    return rep;
}

LefschetzReport lefschetz_search(const RingPresentation& p, std::uint64_t seed, int attempts)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 97), den(1, 13);
    LefschetzReport last;
    for (int a = 0; a < attempts; ++a) {
        RatVector d(p.nvars);
        for (auto& q : d)
            q = Rational(num(rng), den(rng));
        last = lefschetz_injectivity(p, d);
        if (last.injective)
            return last;
    }
    std::string ranks;
    for (auto r : last.ranks)
        ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
    throw Error(ErrorKind::NonGenericD, "no sampled class D was injective; last ranks " + ranks);
}

namespace {

// a^<i>: upper bound on the next entry of an O-sequence.
Integer macaulay_upper(Integer a, int i)
{
    Integer out = 0;
    for (int t = i; t >= 1 && a > 0; --t) {
        int k = t;
        while (binomial(k + 1, t) <= a)
            ++k;
        a -= binomial(k, t);
        out += binomial(k + 1, t + 1);
    }
    return out;
}

}   // namespace

bool is_macaulay_vector(const CountVector& g)
{
    if (g.empty() || g[0] != 1)
        return false;
    for (auto x : g)
        if (x < 0)
            return false;
    for (std::size_t i = 1; i + 1 < g.size(); ++i)
        if (Integer(g[i + 1]) > macaulay_upper(Integer(g[i]), static_cast<int>(i)))
            return false;
    return true;
}

CountVector g_vector(const CountVector& h)
{
    CountVector t = trim_zeros(h);
    CountVector g;
    const int top = static_cast<int>(t.size()) - 1;
    for (int i = 0; 2 * i <= top; ++i)
        g.push_back(t[i] - (i > 0 ? t[i - 1] : 0));
    return g;
}

bool g_vector_macaulay_check(const CountVector& h)
{
    return is_macaulay_vector(g_vector(h));
}

CountVector hilbert_modulo_class(const RingPresentation& p, const RatVector& d, int up_to)
{
    RingPresentation q = p;
    q.linear.push_back(d);
    return hilbert_function(q, up_to);
}

LawrenceSideReport lawrence_side_presentation(const GaleDualPair& pair, const RatVector& theta)
{
    const int n = pair.n();
    GaleDualPair lp = lawrence_pair(pair);
    Triangulation t = triangulation_from_theta(lp, theta);
    std::vector<Exponent> image;
    for (const auto& s : stanley_reisner_ideal(t)) {
        Exponent e(n, 0);
        for (int i : s)
            ++e[i % n];
        image.push_back(std::move(e));
    }
    auto divides = [](const Exponent& a, const Exponent& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i])
                return false;
        return true;
    };
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::vector<Exponent> minimal;
    for (const auto& e : image) {
        bool redundant = false;
        for (const auto& f : image)
            if (f != e && divides(f, e))
                redundant = true;
        if (!redundant)
            minimal.push_back(e);
    }
    LawrenceSideReport rep;
    rep.image = minimal;

    RingPresentation matroid = build_presentation(pair);
    auto generated_by = [&](const std::vector<Exponent>& xs, const std::vector<Exponent>& ys) {
        for (const auto& x : xs) {
            bool hit = false;
            for (const auto& y : ys)
                hit = hit || divides(y, x);
            if (!hit)
                return false;
        }
        return true;
    };
    rep.equals_matroid_ideal = generated_by(minimal, matroid.monomials) && generated_by(matroid.monomials, minimal);

    RingPresentation side = matroid;
    side.monomials = minimal;
    rep.hilbert = hilbert_function(side, pair.m() + 1);
    return rep;
}

}   // namespace hypertoric
