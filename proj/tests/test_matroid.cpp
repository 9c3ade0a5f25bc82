#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoric/gale.hpp"
#include "hypertoric/linalg.hpp"
#include "hypertoric/matroid.hpp"
#include "oracles.hpp"

using namespace hypertoric;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m(i, j) = dist(rng);
    return m;
}

int brute_rank(const IntMatrix& v, std::uint64_t mask)
{
    IndexSet s = mask_to_set(mask);
    if (s.empty())
        return 0;
    return oracle::minor_rank(to_rational(v.select_cols(s)));
}

// T(x, 1) by deletion and contraction on the rank function of the minor
// E \ (D u C) with C contracted; coefficients indexed by the power of x.
std::vector<long long> tutte_x1(const IntMatrix& v, std::uint64_t deleted, std::uint64_t contracted,
                                std::map<std::uint64_t, int>& cache)
{
    auto r = [&](std::uint64_t s) {
        auto it = cache.find(s);
        if (it != cache.end())
            return it->second;
        return cache[s] = brute_rank(v, s);
    };
    const int n = static_cast<int>(v.cols());
    int e = -1;
    for (int i = 0; i < n && e < 0; ++i)
        if (!((deleted | contracted) >> i & 1))
            e = i;
    if (e < 0)
        return {1};
    std::uint64_t bit = std::uint64_t(1) << e;
    std::uint64_t rest = ((std::uint64_t(1) << n) - 1) & ~(deleted | contracted | bit);
    bool loop = r(contracted | bit) == r(contracted);
    bool coloop = r(contracted | rest) == r(contracted | rest | bit) - 1;
    if (loop)
        return tutte_x1(v, deleted | bit, contracted, cache);   // y = 1
    if (coloop) {
        auto t = tutte_x1(v, deleted, contracted | bit, cache);
        t.insert(t.begin(), 0);                                 // times x
        return t;
    }
    auto a = tutte_x1(v, deleted | bit, contracted, cache);
    auto b = tutte_x1(v, deleted, contracted | bit, cache);
    a.resize(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += b[i];
    return a;
}

// h_i is the coefficient of x^(r-i) in T(x, 1).
CountVector h_by_tutte(const IntMatrix& v, int r)
{
    std::map<std::uint64_t, int> cache;
    auto t = tutte_x1(v, 0, 0, cache);
    t.resize(r + 1, 0);
    CountVector h(r + 1);
    for (int i = 0; i <= r; ++i)
        h[i] = t[r - i];
    return h;
}

const IntMatrix k23_a{{0, 0, 0, -1, -1, -1}, {1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}};

}   // namespace

TEST_CASE("K_{2,3}: cographic matroid on the rows of B")
{
    GaleDualPair p = make_gale_pair(k23_a);
    LinearMatroid mb = LinearMatroid::of_rows(p.b);
    CHECK(mb.rank() == 2);
    CHECK(mb.h_vector() == CountVector{1, 4, 7});
    // Bases of the dual are spanning-tree complements: 12 of them.
    CHECK(mb.bases().size() == 12);
    CHECK(mb.loops().empty());
    CHECK(mb.coloops().empty());
}

TEST_CASE("h-vector agrees with deletion-contraction of the Tutte polynomial")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + trial % 3, n = r + 1 + trial % 4;
        IntMatrix v = random_matrix(rng, r, n, -2, 2);
        LinearMatroid m(v);
        CHECK(m.rank() == oracle::minor_rank(to_rational(v)));
        CHECK(m.h_vector() == h_by_tutte(v, m.rank()));
        CHECK(reliability_h_polynomial(m) == m.h_vector());
    }
}

TEST_CASE("independent sets, bases, circuits and cocircuits by subset scan")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        int r = 2 + trial % 2, n = 4 + trial % 3;
        IntMatrix v = random_matrix(rng, r, n, -1, 1);
        LinearMatroid m(v);
        const int rk = m.rank();
        auto indep = [&](std::uint64_t s) { return brute_rank(v, s) == std::popcount(s); };

        CountVector f(rk + 1, 0);
        for (auto s : oracle::all_subsets_with(n, indep))
            ++f[std::popcount(s)];
        CHECK(m.f_vector() == f);
        CHECK(m.h_vector() == h_from_f(f, rk));

        auto bases = oracle::all_subsets_with(n, [&](std::uint64_t s) { return indep(s) && std::popcount(s) == rk; });
        std::vector<IndexSet> bsets;
        for (auto s : bases) {
            bsets.push_back(mask_to_set(s));
            CHECK(m.is_basis(s));
        }
        std::sort(bsets.begin(), bsets.end());
        auto mine = m.bases();
        std::sort(mine.begin(), mine.end());
        CHECK(mine == bsets);

        auto circuits = oracle::minimal_of(oracle::all_subsets_with(n, [&](std::uint64_t s) { return !indep(s); }));
        auto got = m.circuits();
        std::sort(got.begin(), got.end());
        CHECK(got == circuits);
        CHECK(matroid_ideal_generators(m) == m.circuits());

        // Cocircuits: minimal sets meeting every basis.
        auto cocircuits = oracle::minimal_of(oracle::all_subsets_with(n, [&](std::uint64_t s) {
            if (s == 0)
                return false;
            for (auto b : bases)
                if (!(b & s))
                    return false;
            return true;
        }));
        auto cgot = m.cocircuits();
        std::sort(cgot.begin(), cgot.end());
        CHECK(cgot == cocircuits);

        // Loops are the empty-rank singletons; coloops lie in every basis.
        IndexSet loops, coloops;
        for (int i = 0; i < n; ++i) {
            std::uint64_t bit = std::uint64_t(1) << i;
            if (brute_rank(v, bit) == 0)
                loops.push_back(i);
            bool all = !bases.empty();
            for (auto b : bases)
                all = all && (b & bit);
            if (all)
                coloops.push_back(i);
        }
        CHECK(m.loops() == loops);
        CHECK(m.coloops() == coloops);
    }
}

TEST_CASE("sum of the h-vector counts bases")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix v = random_matrix(rng, 2, 5, -2, 2);
        LinearMatroid m(v);
        auto h = m.h_vector();
        CHECK(std::accumulate(h.begin(), h.end(), 0LL) == static_cast<long long>(m.bases().size()));
    }
}

TEST_CASE("uniform matroid U(2,4)")
{
    LinearMatroid m(IntMatrix{{1, 0, 1, 1}, {0, 1, 1, 2}});
    CHECK(m.h_vector() == CountVector{1, 2, 3});
    CHECK(m.circuits().size() == 4);
    for (const auto& c : m.circuits())
        CHECK(c.size() == 3);
}

TEST_CASE("minimal sets and transversals against brute force")
{
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 6;
        std::vector<IndexSet> family;
        std::uniform_int_distribution<int> pick(1, (1 << n) - 1);
        int k = 1 + trial % 5;
        for (int i = 0; i < k; ++i)
            family.push_back(mask_to_set(pick(rng)));
        std::vector<std::uint64_t> masks;
        for (const auto& s : family)
            masks.push_back(set_to_mask(s));

        CHECK(minimal_sets(family) == oracle::minimal_of(masks));

        auto hits = oracle::all_subsets_with(n, [&](std::uint64_t t) {
            for (auto s : masks)
                if (!(s & t))
                    return false;
            return true;
        });
        auto got = minimal_transversals(family, n);
        std::sort(got.begin(), got.end());
        CHECK(got == oracle::minimal_of(hits));

        auto capped = minimal_transversals(family, n, 2);
        for (const auto& t : capped)
            CHECK(t.size() <= 2);
    }
}

TEST_CASE("h_from_f on a simplex boundary")
{
    // Independence complex of U(3,4): f = (1,4,6,4), h = (1,1,1,1).
    CHECK(h_from_f(CountVector{1, 4, 6, 4}, 3) == CountVector{1, 1, 1, 1});
}
