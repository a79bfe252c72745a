#include <doctest.h>

#include "hgdual/oracle.hpp"
#include "helpers.hpp"

using namespace hgdual;
using namespace hgtest;
using namespace hgdual::oracle;

TEST_CASE("brute force tr reproduces the worked pairs") {
    Instance i = fig1();
    CHECK(same_edge_set(brute_force_tr(i.g), i.h));

    Hypergraph g = appendix_b_g();
    CHECK(same_edge_set(brute_force_tr(g), appendix_b_tr()));
}

TEST_CASE("tr of degenerate hypergraphs") {
    Hypergraph empty_hg(3);
    Hypergraph tr_e = brute_force_tr(empty_hg);
    REQUIRE(tr_e.edges.size() == 1);
    CHECK(tr_e.edges[0].none());

    Hypergraph empty_edge(3);
    empty_edge.edges.push_back(Bitset(3));
    CHECK(brute_force_tr(empty_edge).edges.empty());

    CHECK(brute_force_tr_berge(empty_hg).edges.size() == 1);
    CHECK(brute_force_tr_berge(empty_edge).edges.empty());
}

TEST_CASE("the two oracle modes agree") {
    OracleLimit limit = oracle_limit_from_env();
    std::mt19937_64 rng(59);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 4 + rng() % 7;
        if (n > limit.max_vertices_subset) continue;
        Hypergraph g = random_hypergraph(rng, n, 1 + rng() % 6, 4);
        CHECK(same_edge_set(brute_force_tr_subsets(g, limit), brute_force_tr_berge(g, limit)));
    }
}

TEST_CASE("the parallel scan matches the serial reference") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 20; ++t) {
        Hypergraph g = random_hypergraph(rng, 5 + rng() % 6, 1 + rng() % 6, 4);
        Hypergraph serial = brute_force_tr_subsets(g);
        Hypergraph parallel = brute_force_tr_subsets_parallel(g);
        CHECK(serial.edges == parallel.edges);  // identical order, not just set-equal
    }
}

TEST_CASE("every oracle edge is a minimal transversal and the result is Sperner") {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 25; ++t) {
        Hypergraph g = random_hypergraph(rng, 8, 5, 4);
        Hypergraph tr = brute_force_tr(g);
        CHECK(is_simple(tr));
        for (const Bitset& e : tr.edges) CHECK(is_minimal_transversal(g, e));
    }
}

TEST_CASE("duality is an involution on Sperner families") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 25; ++t) {
        Hypergraph g = random_simple(rng, 6 + rng() % 5, 2 + rng() % 5, 4);
        Hypergraph back = brute_force_tr(brute_force_tr(g));
        CHECK(same_edge_set(back, g));
    }
}

TEST_CASE("brute force new transversal") {
    Instance broken = fig3();
    auto t = brute_force_new_transversal(broken);
    REQUIRE(t.has_value());
    CHECK(is_transversal(broken.g, *t));
    CHECK(is_independent_set(broken.h, *t));

    CHECK_FALSE(brute_force_new_transversal(fig1()).has_value());

    // the i=3 family misses 2^3 - 2 minimal transversals
    Instance fam = exp_family(3);
    CHECK(brute_force_new_transversal(fam).has_value());
    Hypergraph tr = brute_force_tr(fam.g);
    CHECK(tr.edges.size() == 8);
    std::size_t missing = 0;
    for (const Bitset& e : tr.edges)
        if (is_independent_set(fam.h, e)) ++missing;
    CHECK(missing == 6);
}

TEST_CASE("the new-transversal scan returns the least bit pattern") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 20; ++t) {
        Hypergraph g = random_simple(rng, 7, 4, 3);
        Hypergraph h = random_hypergraph(rng, 7, 3, 3);
        Instance i(g, h);
        auto found = brute_force_new_transversal(i);
        if (!found) continue;
        // nothing strictly below it qualifies
        std::uint64_t limit = 0;
        found->for_each([&](std::size_t v) { limit |= std::uint64_t{1} << v; });
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            Bitset cand(7);
            for (std::size_t v = 0; v < 7; ++v)
                if (mask >> v & 1) cand.set(v);
            bool qualifies = is_transversal(i.g, cand) && is_independent_set(i.h, cand);
            CHECK_FALSE(qualifies);
        }
    }
}

TEST_CASE("oracle limits are enforced") {
    Hypergraph big(21);
    CHECK_THROWS_AS(brute_force_tr_subsets(big), OracleLimitError);
    OracleLimit wide;
    wide.max_vertices_subset = 22;
    CHECK_NOTHROW(brute_force_tr_subsets(Hypergraph(21), wide));
    OracleLimit tight;
    tight.max_vertices_berge = 4;
    CHECK_THROWS_AS(brute_force_tr_berge(Hypergraph(5), tight), OracleLimitError);
}
