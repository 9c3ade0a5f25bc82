#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoric/cohomology.hpp"
#include "hypertoric/fans.hpp"
#include "hypertoric/linalg.hpp"
#include "oracles.hpp"

using namespace hypertoric;

namespace {

const IntMatrix k23_a{{0, 0, 0, -1, -1, -1}, {1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}};
const IntVector k23_theta{-3, 2, 2, 2};

// Variables in edge order: x02 x03 x04 x12 x13 x14.
MultiPoly x(int i) { return MultiPoly::variable(6, i); }

MultiPoly v_triangle()
{
    MultiPoly l = x(1) + x(2) - x(3);
    return l * l;
}

MultiPoly v_hex()
{
    MultiPoly two = (x(1) * x(5) + x(5) * x(0) + x(0) * x(4) + x(4) * x(2) + x(2) * x(3) + x(3) * x(1)) * Rational(2);
    MultiPoly sq = x(0) * x(0) + x(1) * x(1) + x(2) * x(2) + x(3) * x(3) + x(4) * x(4) + x(5) * x(5);
    return two - sq;
}

struct K23
{
    GaleDualPair pair = make_gale_pair(k23_a);
    RingPresentation pres = build_presentation(pair);
    RatVector psi = to_rational(psi_from_theta(pair, k23_theta));
};

}   // namespace

TEST_CASE("K_{2,3}: presentation and Hilbert function")
{
    K23 k;
    CHECK(k.pres.nvars == 6);
    CHECK(k.pres.linear.size() == 2);
    // Circuits of the cographic matroid: 6 cubics, 2 cubics of the vertex stars, 3 quadrics.
    CHECK(k.pres.monomials.size() == 11);
    CountVector h = hilbert_function(k.pres, 3);
    CHECK(h == CountVector{1, 4, 7, 0});
    CHECK(h == oracle::hilbert_full(6, k.pres.linear, k.pres.monomials, 3));
    CHECK(trim_zeros(h) == LinearMatroid::of_rows(k.pair.b).h_vector());

    GradedQuotientBasis q(k.pres, 3);
    CHECK(q.reduced_vars() == 4);
    CHECK(q.basis(2).size() == 7);
    CHECK(socle_in_top_degree(q));
    // The cut monomial x02 x12 vanishes in the quotient.
    Exponent e(6, 0);
    e[0] = e[3] = 1;
    RatVector nf = q.normal_form(MultiPoly::monomial(e), 2);
    for (const auto& c : nf)
        CHECK(c == 0);
}

TEST_CASE("intro example and C_n presentations")
{
    RingPresentation p = build_presentation(make_gale_pair(IntMatrix{{1, 1, 1}}));
    CHECK(trim_zeros(hilbert_function(p, 4)) == CountVector{1, 1, 1});
    for (int n = 2; n <= 6; ++n) {
        RingPresentation c = build_presentation(make_gale_pair(boundary_matrix(cycle_quiver(n))));
        CHECK(trim_zeros(hilbert_function(c, n + 1)) == CountVector{1, n - 1});
    }
}

TEST_CASE("a bridge gives a zero row of B and is rejected")
{
    Quiver q;
    q.vertices = 3;
    q.edges = {{0, 1}, {1, 0}, {1, 2}};
    try {
        build_presentation(make_gale_pair(boundary_matrix(q)));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LoopPresent);
    }
}

TEST_CASE("random quivers: Hilbert function equals the h-vector")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        Quiver q = oracle::random_quiver(rng, 5, 7);
        GaleDualPair p = make_gale_pair(boundary_matrix(q));
        RingPresentation pres = build_presentation(p);
        int top = p.m() + 1;
        CountVector h = hilbert_function(pres, top);
        CHECK(h == oracle::hilbert_full(p.n(), pres.linear, pres.monomials, top));
        CHECK(trim_zeros(h) == LinearMatroid::of_rows(p.b).h_vector());
        CHECK(socle_in_top_degree(GradedQuotientBasis(pres, top)));
        CHECK(g_vector_macaulay_check(trim_zeros(h)));
    }
}

TEST_CASE("K_{2,3}: volume cogenerators")
{
    K23 k;
    CogeneratorSet c = volume_cogenerators(k.pair, k.psi, 1);
    REQUIRE(c.polys.size() == 7);
    int triangles = 0, hexagons = 0;
    for (std::size_t i = 0; i < c.polys.size(); ++i) {
        const MultiPoly& v = c.polys[i];
        CHECK(v.is_homogeneous());
        CHECK(v.degree() == 2);
        CHECK(v.evaluate(k.psi) == c.volumes[i]);
        CHECK(c.volumes[i] == region_volume(k.pair.b, k.psi, c.regions[i]));
        Rational s;
        if (proportional(v, v_triangle(), &s)) {
            ++triangles;
            CHECK(s > 0);
        }
        if (proportional(v, v_hex(), &s)) {
            ++hexagons;
            CHECK(s > 0);
        }
        // Translation invariance: constant along ker(A).
        for (std::size_t j = 0; j < k.pair.b.cols(); ++j) {
            RatVector dir = to_rational(k.pair.b.col(j));
            CHECK(apply_diff_op(MultiPoly::linear(dir), v).is_zero());
        }
    }
    CHECK(triangles == 1);
    CHECK(hexagons == 1);

    AnnihilatorReport rep = annihilator_verify(k.pres, c);
    CHECK(rep.ok());
    CHECK(rep.catalecticant == CountVector{1, 4, 7, 0});
    // Top degree: the Hessians of the V_i, read off the coefficients, span a 7-dimensional space.
    RatMatrix hess(21, 7);
    int row = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j, ++row) {
            Exponent e(6, 0);
            ++e[i];
            ++e[j];
            for (int v = 0; v < 7; ++v)
                hess(row, v) = c.polys[v].coefficient(e) * (i == j ? 2 : 1);
        }
    CHECK(rank(hess) == 7);
    CHECK(catalecticant_rank(c.polys, 2) == 7);
    CHECK(catalecticant_rank(c.polys, 0) == 1);

    // The cut operator d02 d12 kills V_hex.
    Exponent e(6, 0);
    e[0] = e[3] = 1;
    CHECK(apply_diff_op(MultiPoly::monomial(e), v_hex()).is_zero());
}

TEST_CASE("pullback and Lawrence doubling of cogenerators")
{
    K23 k;
    CogeneratorSet c = volume_cogenerators(k.pair, k.psi, 1);
    auto pulled = pullback_cogenerators(k.pair, c);
    REQUIRE(pulled.size() == c.polys.size());
    std::mt19937_64 rng(62);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (std::size_t i = 0; i < pulled.size(); ++i) {
        for (int t = 0; t < 3; ++t) {
            RatVector pt(6);
            for (auto& y : pt)
                y = dist(rng);
            CHECK(pulled[i].evaluate(multiply(to_rational(k23_a), pt)) == c.polys[i].evaluate(pt));
        }
    }
    CHECK_THROWS_AS(pullback_cogenerator(k23_a, x(0) * x(0)), Error);

    auto doubled = lawrence_double_cogenerators(c);
    RatVector xy(12);
    for (int i = 0; i < 12; ++i)
        xy[i] = dist(rng);
    RatVector diff(6);
    for (int i = 0; i < 6; ++i)
        diff[i] = xy[i] - xy[6 + i];
    CHECK(doubled[0].evaluate(xy) == c.polys[0].evaluate(diff));
}

TEST_CASE("Lefschetz and Macaulay")
{
    K23 k;
    LefschetzReport lr = lefschetz_search(k.pres, 1);
    CHECK(lr.injective);
    CHECK(lr.ranks == lr.sources);
    CHECK(lefschetz_injectivity(k.pres, lr.d).injective);
    // A zero class cannot be injective from degree 0.
    CHECK_FALSE(lefschetz_injectivity(k.pres, RatVector(6, Rational(0))).injective);

    CHECK(g_vector(CountVector{1, 4, 7}) == CountVector{1, 3});
    CHECK(is_macaulay_vector(CountVector{1, 3, 6}));
    CHECK(is_macaulay_vector(CountVector{1, 2, 3, 4}));
    CHECK_FALSE(is_macaulay_vector(CountVector{1, 2, 4}));
    CHECK_FALSE(is_macaulay_vector(CountVector{1, 1, 2}));
    CHECK_FALSE(is_macaulay_vector(CountVector{2, 1}));

    // Quotient by the Lefschetz class has Hilbert function h_i - h_(i-1) in low degrees.
    CountVector mod = hilbert_modulo_class(k.pres, lr.d, 2);
    CHECK(mod[0] == 1);
    CHECK(mod[1] == 3);
}

TEST_CASE("Macaulay bound against brute-force order ideals")
{
    // g is an O-sequence iff it counts monomials of an order ideal; check all
    // vectors (1, a, b) with a <= 3 by enumerating order ideals in a variables.
    for (int a = 1; a <= 3; ++a) {
        std::vector<Exponent> deg2 = monomials_of_degree(a, 2);
        std::set<int> achievable;
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << deg2.size()); ++s)
            achievable.insert(std::popcount(s));    // any set of quadrics over all a linear forms
        for (int b = 0; b <= 8; ++b)
            CHECK(is_macaulay_vector(CountVector{1, a, b}) == (achievable.count(b) == 1));
    }
}

TEST_CASE("Lawrence side of the presentation")
{
    K23 k;
    LawrenceSideReport r = lawrence_side_presentation(k.pair, to_rational(k23_theta));
    CHECK(r.equals_matroid_ideal);
    CHECK(trim_zeros(r.hilbert) == CountVector{1, 4, 7});

    // Same presentation in several chambers.
    GaleDualPair law = lawrence_pair(k.pair);
    ChamberComplexSample full = enumerate_chambers(law.a, false);
    for (std::size_t i = 0; i < full.chambers.size(); i += 40) {
        LawrenceSideReport s = lawrence_side_presentation(k.pair, to_rational(full.chambers[i].representative));
        CHECK(s.equals_matroid_ideal);
        CHECK(s.hilbert == r.hilbert);
    }
}
