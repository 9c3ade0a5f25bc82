#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoric/fans.hpp"
#include "hypertoric/linalg.hpp"
#include "hypertoric/quiver.hpp"
#include "oracles.hpp"

using namespace hypertoric;

namespace {

Quiver k23()
{
    Quiver q;
    q.vertices = 5;
    q.edges = {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
    return q;
}

// Minimal cuts by brute force: edge sets whose removal disconnects the graph,
// minimal under inclusion.
std::vector<IndexSet> bonds_by_deletion(const Quiver& q)
{
    return oracle::minimal_of(oracle::all_subsets_with(q.n(), [&](std::uint64_t s) {
        if (s == 0)
            return false;
        Quiver r;
        r.vertices = q.vertices;
        for (int e = 0; e < q.n(); ++e)
            if (!(s >> e & 1))
                r.edges.push_back(q.edges[e]);
        return !is_connected(r);
    }));
}

IntVector random_generic_theta(std::mt19937_64& rng, const Quiver& q)
{
    std::uniform_int_distribution<int> dist(-6, 6);
    while (true) {
        IntVector theta(q.d());
        for (auto& t : theta)
            t = dist(rng);
        if (is_generic_quiver(q, theta))
            return theta;
    }
}

long long binom2(long long k) { return k * (k - 1) / 2; }

}   // namespace

TEST_CASE("boundary matrix of K_{2,3}")
{
    IntMatrix a = boundary_matrix(k23());
    CHECK(a == IntMatrix{{0, 0, 0, -1, -1, -1}, {1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}});
    CHECK(is_unimodular(a));
    IntMatrix c = cycle_basis(k23());
    CHECK(c.rows() == 6);
    CHECK(c.cols() == 2);
    IntMatrix ac = multiply(a, c);
    for (const auto& z : ac.data())
        CHECK(z == 0);
    CHECK(maximal_minor_gcd(c.transpose()) == 1);
}

TEST_CASE("connectivity and loops")
{
    Quiver q;
    q.vertices = 3;
    q.edges = {{0, 1}, {1, 0}};
    CHECK_FALSE(is_connected(q));
    try {
        boundary_matrix(q);
        FAIL("expected Disconnected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Disconnected);
    }
    Quiver l;
    l.vertices = 2;
    l.edges = {{0, 1}, {1, 1}, {1, 0}};
    IntMatrix a = boundary_matrix(l);
    CHECK(a(0, 1) == 0);
    try {
        require_no_loops(l);
        FAIL("expected LoopPresent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LoopPresent);
        CHECK(std::string(e.what()).find("coloop") != std::string::npos);
    }
    CHECK_NOTHROW(require_no_loops(k23()));
}

TEST_CASE("spanning trees: enumeration against the matrix-tree theorem")
{
    CHECK(spanning_trees(k23()).size() == 12);
    CHECK(oracle::kirchhoff(k23()) == 12);
    for (int n = 2; n <= 6; ++n)
        CHECK(spanning_trees(cycle_quiver(n)).size() == static_cast<std::size_t>(n));
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        Quiver q = oracle::random_quiver(rng, 6, 9);
        auto trees = spanning_trees(q);
        CHECK(Integer(trees.size()) == oracle::kirchhoff(q));
        IntMatrix a = boundary_matrix(q);
        CHECK(is_unimodular(a));
        GaleDualPair p = make_gale_pair(a);
        auto h = LinearMatroid::of_rows(p.b).h_vector();
        CHECK(std::accumulate(h.begin(), h.end(), 0LL) == static_cast<long long>(trees.size()));
        // Trees are exactly the column bases of the boundary matrix.
        auto bases = column_bases(a);
        std::sort(bases.begin(), bases.end());
        CHECK(bases == trees);
    }
}

TEST_CASE("cuts and cocircuits")
{
    auto k = k23();
    CHECK(cut_monomials(k) == bonds_by_deletion(k));
    CHECK(cut_monomials(k).size() == 11);
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        Quiver q = oracle::random_quiver(rng, 6, 9);
        auto bonds = bonds_by_deletion(q);
        CHECK(cut_monomials(q) == bonds);
        auto circuits = LinearMatroid::of_rows(cycle_basis(q)).circuits();
        std::sort(circuits.begin(), circuits.end());
        CHECK(circuits == bonds);
        auto cocirc = LinearMatroid(boundary_matrix(q)).cocircuits();
        std::sort(cocirc.begin(), cocirc.end());
        CHECK(cocirc == bonds);
        // Every cut splits its edges by orientation.
        for (const auto& c : cuts(q)) {
            for (int e : c.plus) {
                bool tail_in = std::binary_search(c.side.begin(), c.side.end(), q.edges[e].first);
                bool head_in = std::binary_search(c.side.begin(), c.side.end(), q.edges[e].second);
                CHECK(tail_in);
                CHECK_FALSE(head_in);
            }
            for (int e : c.minus) {
                bool tail_in = std::binary_search(c.side.begin(), c.side.end(), q.edges[e].first);
                CHECK_FALSE(tail_in);
            }
        }
        CHECK(cut_bilinear_relations(q).size() == cocircuit_cuts(q).size());
    }
}

TEST_CASE("tree coefficients and the Lawrence triangulation")
{
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 15; ++trial) {
        Quiver q = trial == 0 ? k23() : oracle::random_quiver(rng, 5, 7);
        IntVector theta = trial == 0 ? IntVector{-3, 2, 2, 2} : random_generic_theta(rng, q);
        IntMatrix a = boundary_matrix(q);
        CHECK(is_generic_quiver(q, theta) == is_generic(theta, a));
        GaleDualPair law = lawrence_pair(make_gale_pair(a));
        Triangulation t = triangulation_from_theta(law, theta);
        auto trees = spanning_trees(q);
        CHECK(t.max_cones.size() == trees.size());
        for (const auto& tree : trees) {
            SpanningTreeCert cert = tree_coefficients(q, tree, theta);
            IntVector sum(q.d(), Integer(0));
            for (std::size_t k = 0; k < tree.size(); ++k)
                for (int i = 0; i < q.d(); ++i)
                    sum[i] += cert.lambda[k] * a(i, tree[k]);
            CHECK(sum == theta);
            IndexSet sigma = sigma_tau_theta(q, tree, theta);
            IndexSet comp;
            for (int i = 0; i < 2 * q.n(); ++i)
                if (!std::binary_search(sigma.begin(), sigma.end(), i))
                    comp.push_back(i);
            CHECK(std::binary_search(t.max_cones.begin(), t.max_cones.end(), comp));
        }
    }
    try {
        tree_coefficients(k23(), IndexSet{0, 1, 2}, IntVector{-3, 2, 2, 2});
        FAIL("expected NotASpanningTree");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotASpanningTree);
    }
}

TEST_CASE("ALE classification")
{
    for (int n = 2; n <= 6; ++n) {
        AleReport r = is_product_of_ALE(cycle_quiver(n));
        CHECK(r.product);
        CHECK(r.factors == std::vector<int>{n});
    }
    CHECK_FALSE(is_product_of_ALE(k23()).product);
    // Two triangles sharing vertex 0.
    Quiver bowtie;
    bowtie.vertices = 5;
    bowtie.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
    AleReport b = is_product_of_ALE(bowtie);
    CHECK(b.product);
    CHECK(b.factors == std::vector<int>{3, 3});
    // Three parallel edges: one cycle class cannot carry two dimensions.
    Quiver theta_graph;
    theta_graph.vertices = 2;
    theta_graph.edges = {{0, 1}, {0, 1}, {1, 0}};
    CHECK_FALSE(is_product_of_ALE(theta_graph).product);
}

TEST_CASE("C_n: degree-(1,...,1) generators")
{
    for (int n = 2; n <= 6; ++n) {
        AleDegreeReport r = ale_degree_generators_check(n);
        std::vector<std::pair<long long, long long>> expected;
        for (int i = 1; i <= n; ++i)
            expected.emplace_back(binom2(i), binom2(n - i + 1));
        std::sort(expected.begin(), expected.end());
        CHECK(r.collapsed == expected);
        CHECK(r.matches);
        CHECK_FALSE(r.swapped);
    }
}
