#include "hypertoric/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "hypertoric/fans.hpp"
#include "hypertoric/linalg.hpp"
#include "hypertoric/polyhedra.hpp"

namespace hypertoric {

namespace {

struct UnionFind
{
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool join(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

void check_edges(const Quiver& q)
{
    if (q.vertices < 1)
        throw Error(ErrorKind::DimensionMismatch, "a quiver needs at least one vertex");
    for (const auto& [i, j] : q.edges)
        if (i < 0 || j < 0 || i >= q.vertices || j >= q.vertices)
            throw Error(ErrorKind::DimensionMismatch, "edge (" + std::to_string(i) + "," + std::to_string(j) +
                                                          ") uses a vertex outside 0.." +
                                                          std::to_string(q.vertices - 1));
}

bool is_tree(const Quiver& q, const IndexSet& tree)
{
    if (static_cast<int>(tree.size()) != q.d())
        return false;
    UnionFind uf(q.vertices);
    for (int e : tree) {
        if (e < 0 || e >= q.n())
            return false;
        if (!uf.join(q.edges[e].first, q.edges[e].second))
            return false;
    }
    return true;
}

}   // namespace

bool is_connected(const Quiver& q)
{
    check_edges(q);
    UnionFind uf(q.vertices);
    int parts = q.vertices;
    for (const auto& [i, j] : q.edges)
        parts -= uf.join(i, j);
    return parts == 1;
}

IntMatrix boundary_matrix(const Quiver& q)
{
    if (!is_connected(q))
        throw Error(ErrorKind::Disconnected, "the underlying graph of the quiver is not connected");
    IntMatrix a(q.d(), q.n());
    for (int e = 0; e < q.n(); ++e) {
        auto [i, j] = q.edges[e];
        if (i == j)
            continue;
        if (j >= 1)
            a(j - 1, e) += 1;
        if (i >= 1)
            a(i - 1, e) -= 1;
    }
    return a;
}

void require_no_loops(const Quiver& q)
{
    for (int e = 0; e < q.n(); ++e)
        if (q.edges[e].first == q.edges[e].second)
            throw Error(ErrorKind::LoopPresent,
                        "edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(q.edges[e].first) +
                            ": its column of A is zero, so it is a coloop of the Gale dual and the hyperkaehler "
                            "quotient is not defined");
}

IntMatrix cycle_basis(const Quiver& q)
{
    IntMatrix a = boundary_matrix(q);
    const int nv = q.vertices, n = q.n();
    UnionFind uf(nv);
    std::vector<char> in_tree(n, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(nv);     // (neighbour, edge)
    for (int e = 0; e < n; ++e) {
        auto [i, j] = q.edges[e];
        if (uf.join(i, j)) {
            in_tree[e] = 1;
            adj[i].emplace_back(j, e);
            adj[j].emplace_back(i, e);
        }
    }
    // Tree path from `from` to `to` as (edge, +1 if traversed tail -> head).
    auto path = [&](int from, int to) {
        std::vector<int> prev_edge(nv, -1), prev_vertex(nv, -1);
        std::vector<char> seen(nv, 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    prev_edge[w] = e;
                    prev_vertex[w] = v;
                    stack.push_back(w);
                }
        }
        std::vector<std::pair<int, int>> out;
        for (int v = to; v != from; v = prev_vertex[v]) {
            int e = prev_edge[v];
            out.emplace_back(e, q.edges[e].first == prev_vertex[v] ? 1 : -1);
        }
        return out;
    };
    std::vector<IntVector> cols;
    for (int e = 0; e < n; ++e) {
        if (in_tree[e])
            continue;
        IntVector c(n, Integer(0));
        c[e] = 1;
        auto [i, j] = q.edges[e];
        // e contributes v_i - v_j; close it with the tree path j -> i.
        for (auto [f, s] : path(j, i))
            c[f] += s;
        cols.push_back(std::move(c));
    }
    IntMatrix b = IntMatrix::from_columns(cols, n);
    IntMatrix ab = multiply(a, b);
    for (const auto& z : ab.data())
        if (!z.is_zero())
            throw Error(ErrorKind::InvariantViolated, "fundamental cycle is not in the kernel");
    return b;
}

std::vector<IndexSet> spanning_trees(const Quiver& q)
{
    check_edges(q);
    std::vector<IndexSet> out;
    for (const auto& s : combinations(q.n(), q.d()))
        if (is_tree(q, s))
            out.push_back(s);
    return out;
}

SpanningTreeCert tree_coefficients(const Quiver& q, const IndexSet& tree, const IntVector& theta)
{
    if (!is_tree(q, tree))
        throw Error(ErrorKind::NotASpanningTree, "the edge set is not a spanning tree");
    if (static_cast<int>(theta.size()) != q.d())
        throw Error(ErrorKind::DimensionMismatch, "theta needs one entry per non-root vertex");
    IntMatrix a = boundary_matrix(q);
    auto sol = solve_square(to_rational(a.select_cols(tree)), to_rational(theta));
    SpanningTreeCert cert{tree, {}};
    for (const auto& x : *sol) {
        if (!is_integral(x))
            throw Error(ErrorKind::InvariantViolated, "tree coefficients must be integers");
        cert.lambda.push_back(boost::multiprecision::numerator(x));
    }
    return cert;
}

bool is_generic_quiver(const Quiver& q, const IntVector& theta)
{
    for (const auto& t : spanning_trees(q))
        for (const auto& l : tree_coefficients(q, t, theta).lambda)
            if (l.is_zero())
                return false;
    return true;
}

IndexSet sigma_tau_theta(const Quiver& q, const IndexSet& tree, const IntVector& theta)
{
    SpanningTreeCert c = tree_coefficients(q, tree, theta);
    IndexSet out;
    for (std::size_t k = 0; k < tree.size(); ++k) {
        if (c.lambda[k].is_zero())
            throw Error(ErrorKind::NonGenericTheta, "a tree coefficient vanishes");
        out.push_back(c.lambda[k] > 0 ? tree[k] : q.n() + tree[k]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet Cut::edges() const
{
    IndexSet out;
    std::merge(plus.begin(), plus.end(), minus.begin(), minus.end(), std::back_inserter(out));
    return out;
}

std::vector<Cut> cuts(const Quiver& q)
{
    check_edges(q);
    const int nv = q.vertices;
    if (nv > 30)
        throw Error(ErrorKind::DimensionMismatch, "too many vertices for cut enumeration");
    std::vector<Cut> out;
    for (std::uint64_t w = 1; w < (std::uint64_t(1) << (nv - 1)); ++w) {
        std::uint64_t side = w << 1;    // never contains v_0
        Cut c;
        c.side = mask_to_set(side);
        for (int e = 0; e < q.n(); ++e) {
            bool t = side >> q.edges[e].first & 1, h = side >> q.edges[e].second & 1;
            if (t && !h)
                c.plus.push_back(e);
            else if (h && !t)
                c.minus.push_back(e);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Cut> cocircuit_cuts(const Quiver& q)
{
    std::vector<Cut> all = cuts(q);
    std::vector<std::uint64_t> masks;
    for (const auto& c : all)
        masks.push_back(set_to_mask(c.edges()));
    std::vector<Cut> out;
    std::set<std::uint64_t> kept;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (masks[i] == 0 || kept.count(masks[i]))
            continue;
        bool minimal = true;
        for (std::size_t j = 0; j < all.size() && minimal; ++j)
            if (masks[j] != 0 && masks[j] != masks[i] && (masks[j] & masks[i]) == masks[j])
                minimal = false;
        if (minimal) {
            kept.insert(masks[i]);
            out.push_back(all[i]);
        }
    }
    std::sort(out.begin(), out.end(), [](const Cut& x, const Cut& y) { return x.edges() < y.edges(); });
    return out;
}

std::vector<IndexSet> cut_monomials(const Quiver& q)
{
    std::vector<IndexSet> out;
    for (const auto& c : cocircuit_cuts(q))
        out.push_back(c.edges());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVector> cut_bilinear_relations(const Quiver& q)
{
    std::vector<IntVector> out;
    for (const auto& c : cocircuit_cuts(q)) {
        IntVector r(q.n(), Integer(0));
        for (int e : c.plus)
            r[e] = 1;
        for (int e : c.minus)
            r[e] = -1;
        out.push_back(std::move(r));
    }
    return out;
}

AleReport is_product_of_ALE(const GaleDualPair& pair)
{
    IndexSet zero = zero_rows_of_b(pair);
    if (!zero.empty())
        throw Error(ErrorKind::LoopPresent, "b_" + std::to_string(zero.front()) + " = 0 (a loop of the Gale dual)");
    const int n = pair.n(), m = pair.m();
    AleReport rep;
    std::vector<IntVector> reps;
    for (int i = 0; i < n; ++i) {
        IntVector row = pair.b.row(i);
        bool placed = false;
        for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
            IntMatrix two = IntMatrix::from_rows({reps[c], row});
            if (rank(two) == 1) {
                rep.classes[c].push_back(i);
                placed = true;
            }
        }
        if (!placed) {
            reps.push_back(row);
            rep.classes.push_back({i});
        }
    }
    rep.product = static_cast<int>(rep.classes.size()) == m;
    rep.unit_blocks = true;
    for (std::size_t c = 0; c < reps.size(); ++c) {
        IntVector prim = primitive_integer_vector(to_rational(reps[c]));
        for (int i : rep.classes[c]) {
            IntVector row = pair.b.row(i), neg = row;
            for (auto& z : neg)
                z = -z;
            if (row != prim && neg != prim)
                rep.unit_blocks = false;
        }
        rep.factors.push_back(static_cast<int>(rep.classes[c].size()));
    }
    std::sort(rep.factors.begin(), rep.factors.end());
    return rep;
}

AleReport is_product_of_ALE(const Quiver& q)
{
    require_no_loops(q);
    GaleDualPair pair{boundary_matrix(q), cycle_basis(q)};
    verify_gale_pair(pair);
    return is_product_of_ALE(pair);
}

Quiver cycle_quiver(int n)
{
    Quiver q;
    q.vertices = n;
    for (int i = 0; i < n; ++i)
        q.edges.emplace_back(i, (i + 1) % n);
    return q;
}

AleDegreeReport ale_degree_generators_check(int n)
{
    if (n < 2)
        throw Error(ErrorKind::DimensionMismatch, "the cycle needs at least two vertices");
    Quiver q = cycle_quiver(n);
    IntMatrix a = boundary_matrix(q);
    RatVector theta(n - 1, Rational(1));
    PolyhedronSlice p(lawrence_configuration(a), theta);
    AleDegreeReport rep;
    for (const auto& u : lattice_points_bounded(p)) {
        long long s = 0, t = 0;
        for (int e = 0; e < n; ++e) {
            s += u[e].convert_to<long long>();
            t += u[n + e].convert_to<long long>();
        }
        rep.collapsed.emplace_back(s, t);
    }
    std::sort(rep.collapsed.begin(), rep.collapsed.end());
    rep.collapsed.erase(std::unique(rep.collapsed.begin(), rep.collapsed.end()), rep.collapsed.end());
    std::vector<std::pair<long long, long long>> expected, flipped;
    for (int i = 1; i <= n; ++i) {
        long long x = binomial(i, 2).convert_to<long long>(), y = binomial(n - i + 1, 2).convert_to<long long>();
        expected.emplace_back(x, y);
        flipped.emplace_back(y, x);
    }
    std::sort(expected.begin(), expected.end());
    std::sort(flipped.begin(), flipped.end());
    rep.matches = rep.collapsed == expected;
    if (!rep.matches && rep.collapsed == flipped) {
        rep.matches = true;
        rep.swapped = true;
    }
    return rep;
}

}   // namespace hypertoric
