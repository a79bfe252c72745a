#include <doctest.h>

#include "hgdual/oracle.hpp"
#include "helpers.hpp"

using namespace hgdual;
using namespace hgtest;

TEST_CASE("is_simple") {
    CHECK(is_simple(fig1().g));
    CHECK(is_simple(io::from_token_edges({})));

    Hypergraph contained = io::from_token_edges({{"a"}, {"a", "b"}});
    CHECK_FALSE(is_simple(contained));

    Hypergraph empty_edge(3);
    empty_edge.edges.push_back(Bitset(3));
    CHECK(is_simple(empty_edge));

    Hypergraph dup(2);
    dup.edges.push_back(Bitset(2, {0}));
    dup.edges.push_back(Bitset(2, {0}));
    CHECK_FALSE(is_simple(dup));
}

TEST_CASE("minimize") {
    Hypergraph g = io::from_token_edges({{"a"}, {"a", "b"}, {"b", "c"}});
    Hypergraph m = minimize(g);
    REQUIRE(m.edges.size() == 2);
    CHECK(m.edges[0] == set_of(g, {"a"}));
    CHECK(m.edges[1] == set_of(g, {"b", "c"}));

    Hypergraph with_empty(2);
    with_empty.edges.push_back(Bitset(2));
    with_empty.edges.push_back(Bitset(2, {0}));
    Hypergraph me = minimize(with_empty);
    REQUIRE(me.edges.size() == 1);
    CHECK(me.edges[0].none());

    // idempotent on a Sperner family
    Hypergraph f = fig1().g;
    CHECK(oracle::same_edge_set(minimize(f), f));

    // first occurrence of a duplicate minimal edge is kept
    Hypergraph dup(3);
    dup.edges.push_back(Bitset(3, {0, 1}));
    dup.edges.push_back(Bitset(3, {0, 1}));
    CHECK(minimize(dup).edges.size() == 1);
}

TEST_CASE("restrict") {
    Instance i = fig1();
    Bitset no_a = set_of(i.g, {"b", "c", "d", "e", "f"});
    Hypergraph r = restrict(i.g, no_a);
    REQUIRE(r.edges.size() == 2);
    CHECK(r.edges[0] == set_of(i.g, {"c", "b"}));
    CHECK(r.edges[1] == set_of(i.g, {"e", "b"}));

    CHECK(oracle::same_edge_set(restrict(i.g, Bitset::full(6)), i.g));
    CHECK(restrict(i.g, Bitset(6)).edges.empty());
}

TEST_CASE("project") {
    Hypergraph g = io::from_token_edges({{"a", "b"}, {"b", "c"}});
    Hypergraph p = project(g, set_of(g, {"b"}));
    REQUIRE(p.edges.size() == 1);
    CHECK(p.edges[0] == set_of(g, {"b"}));

    // worked projection of the transversal hypergraph over V \ {x1}
    Hypergraph h = appendix_b_tr();
    Bitset no_x1 = set_of(h, {"x2", "x3", "x4"});
    Hypergraph ph = project(h, no_x1);
    REQUIRE(ph.edges.size() == 2);
    CHECK(ph.edges[0] == set_of(h, {"x2", "x4"}));
    CHECK(ph.edges[1] == set_of(h, {"x3"}));

    Instance i = fig1();
    CHECK(oracle::same_edge_set(project(i.g, Bitset::full(6)), minimize(i.g)));
}

TEST_CASE("project output is always simple") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        Hypergraph g = random_hypergraph(rng, 8, 6, 5);
        Bitset s = random_subset(rng, 8);
        CHECK(is_simple(project(g, s)));
    }
}

TEST_CASE("is_transversal") {
    Instance i = fig1();
    CHECK(is_transversal(i.g, set_of(i.g, {"a", "b"})));
    CHECK_FALSE(is_transversal(i.g, set_of(i.g, {"a"})));  // misses {c,b}

    Hypergraph none(4);
    CHECK(is_transversal(none, Bitset(4)));

    Hypergraph empty_edge(4);
    empty_edge.edges.push_back(Bitset(4));
    CHECK_FALSE(is_transversal(empty_edge, Bitset::full(4)));
}

TEST_CASE("is_independent_set") {
    Instance i = fig1();
    CHECK(is_independent_set(i.h, set_of(i.h, {"d", "b"})));
    CHECK_FALSE(is_independent_set(i.h, set_of(i.h, {"a", "b", "c"})));  // contains {a,b}
    CHECK(is_independent_set(i.h, Bitset(6)));

    Hypergraph empty_edge(4);
    empty_edge.edges.push_back(Bitset(4));
    CHECK_FALSE(is_independent_set(empty_edge, Bitset(4)));
}

TEST_CASE("criticality_witness") {
    Instance i = fig1();
    Bitset t = set_of(i.g, {"d", "b", "f"});
    auto w = criticality_witness(i.g, t, set_of(i.g, {"d"}).first());
    REQUIRE(w.has_value());
    CHECK(*w == 0);  // {a,c,d} meets {d,b,f} exactly in d

    Hypergraph g2 = io::from_token_edges({{"a", "b"}});
    Bitset both = set_of(g2, {"a", "b"});
    CHECK_FALSE(criticality_witness(g2, both, 0).has_value());

    Bitset only_a = set_of(g2, {"a"});
    auto w2 = criticality_witness(g2, only_a, 0);
    REQUIRE(w2.has_value());
    CHECK(*w2 == 0);

    CHECK_THROWS_AS(criticality_witness(g2, only_a, 1), std::invalid_argument);
}

TEST_CASE("is_minimal_transversal") {
    Instance i = fig1();
    CHECK(is_minimal_transversal(i.g, set_of(i.g, {"c", "b", "f"})));
    CHECK_FALSE(is_minimal_transversal(i.g, set_of(i.g, {"a", "b", "c"})));

    Hypergraph none(0);
    CHECK(is_minimal_transversal(none, Bitset(0)));
}

TEST_CASE("minimality agrees with the subset-free definition") {
    // no proper subset is a transversal <=> every vertex is critical
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        Hypergraph g = random_hypergraph(rng, 9, 6, 4);
        Bitset cand = random_subset(rng, 9);
        bool lemma = is_minimal_transversal(g, cand);

        bool brute = is_transversal(g, cand);
        if (brute) {
            std::vector<std::size_t> vs = cand.to_vector();
            const std::uint64_t end = std::uint64_t{1} << vs.size();
            for (std::uint64_t mask = 0; brute && mask + 1 < end; ++mask) {
                Bitset sub(g.universe_size);
                for (std::size_t b = 0; b < vs.size(); ++b)
                    if (mask >> b & 1) sub.set(vs[b]);
                if (is_transversal(g, sub)) brute = false;  // proper subset suffices
            }
        }
        CHECK(lemma == brute);
    }
}

TEST_CASE("intersection_property") {
    CHECK(intersection_property(fig1()));
    Instance bad = io::pair_from_token_edges({{"a"}}, {{"b"}});
    CHECK_FALSE(intersection_property(bad));
    auto v = intersection_property_violation(bad);
    REQUIRE(v.has_value());
    CHECK(v->first == 0);
    CHECK(v->second == 0);

    Instance vacuous(Hypergraph(3), io::from_token_edges({{"a"}, {"b"}, {"c"}}));
    CHECK(intersection_property(vacuous));
}

TEST_CASE("is_trivially_dual") {
    Instance td(Hypergraph(0), Hypergraph(0));
    td.h.edges.push_back(Bitset(0));
    CHECK(is_trivially_dual(td));

    Instance both_empty(Hypergraph(0), Hypergraph(0));
    CHECK_FALSE(is_trivially_dual(both_empty));

    CHECK_FALSE(is_trivially_dual(fig1()));
}

TEST_CASE("complement duality of new transversals") {
    // T is a new transversal of G wrt H iff its complement is a new
    // transversal of H wrt G.
    std::mt19937_64 rng(11);
    for (int t = 0; t < 80; ++t) {
        Hypergraph g = random_hypergraph(rng, 8, 5, 4);
        Hypergraph h = random_hypergraph(rng, 8, 5, 4);
        Instance i(g, h);
        Bitset tset = random_subset(rng, 8);
        bool fwd = is_transversal(i.g, tset) && is_independent_set(i.h, tset);
        Bitset comp = tset.complement();
        bool bwd = is_transversal(i.h, comp) && is_independent_set(i.g, comp);
        CHECK(fwd == bwd);
    }
}

TEST_CASE("universe capacity is enforced") {
    CHECK_THROWS_AS(Hypergraph(kMaxUniverse + 1), std::invalid_argument);
    CHECK_NOTHROW(Hypergraph{kMaxUniverse});
}
