#include <catch_amalgamated.hpp>

#include <random>

#include "sct/generators.hpp"
#include "sct/transversal.hpp"

#include "oracles.hpp"

using namespace sct;

TEST_CASE("verify_transversal") {
    const auto c73 = cyclic_boundary(7, 3);
    CHECK(verify_transversal(c73, VertexSet{1, 7}));
    CHECK_FALSE(verify_transversal(c73, VertexSet{1}));

    VertexSet odd;
    for (int v = 1; v <= 10; v += 2) odd.set(v);
    CHECK(verify_transversal(gamma_nk(10, 2), odd));

    CHECK(verify_transversal(canonical_ball(CanonicalBall::L8), VertexSet{2, 4, 6, 7, 8}));
    CHECK(verify_transversal(canonical_ball(CanonicalBall::L11), VertexSet{2, 4, 6, 8, 10, 11}));
}

TEST_CASE("exact transversal on small named instances") {
    const auto t = exact_transversal(cyclic_boundary(7, 3));
    CHECK(t.size == 2);
    CHECK(t.optimal);
    CHECK(verify_transversal(cyclic_boundary(7, 3), t.vertices));
    CHECK(t.vertices == VertexSet{1, 7}); // lexicographically smallest optimum

    const auto path = PureComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(exact_transversal(path).size == 2);
    CHECK(exact_transversal(path).size == oracles::exhaustive_min_transversal(path));

    const auto tetra = PureComplex::from_facets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(exact_transversal(tetra).size == 2);
    CHECK(oracles::exhaustive_min_transversal(tetra) == 2);
}

TEST_CASE("greedy transversal") {
    const auto g = greedy_transversal(cyclic_boundary(7, 3));
    CHECK(g.size == 2);
    CHECK(g.vertices == VertexSet{1, 7}); // degree 6 each, smallest labels win ties
    CHECK(verify_transversal(cyclic_boundary(7, 3), g.vertices));

    const auto tetra = PureComplex::from_facets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(greedy_transversal(tetra).size == 2);
}

TEST_CASE("greedy never beats exact") {
    std::mt19937_64 rng(5150);
    for (int rep = 0; rep < 25; ++rep) {
        const auto c = oracles::random_complex(rng, 10, 3, 8);
        const auto g = greedy_transversal(c);
        const auto t = exact_transversal(c);
        REQUIRE(t.optimal);
        CHECK(g.size >= t.size);
        CHECK(verify_transversal(c, g.vertices));
    }
}

TEST_CASE("independence number complements the transversal number") {
    CHECK(independence_number(cyclic_boundary(7, 3)) == 5);
    const auto path = PureComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(independence_number(path) == 2);
    CHECK(independence_number(PureComplex::simplex(VertexSet::range(1, 6))) == 5);
}

TEST_CASE("exact solver agrees with exhaustive search on random instances") {
    std::mt19937_64 rng(314159);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 5 + static_cast<int>(rng() % 8); // 5..12
        const int d = 2 + static_cast<int>(rng() % 3); // 2..4
        if (d >= n) continue;
        const auto c = oracles::random_complex(rng, n, d, static_cast<int>(rng() % 12));
        const auto t = exact_transversal(c);
        REQUIRE(t.optimal);
        REQUIRE(t.size == oracles::exhaustive_min_transversal(c));
        REQUIRE(verify_transversal(c, t.vertices));
        REQUIRE(t.vertices.count() == t.size);
        REQUIRE(c.f0() - t.size == oracles::exhaustive_independence(c));
    }
}

TEST_CASE("transversal number is additive over disjoint unions") {
    const auto c = cyclic_boundary(7, 3);
    const auto base = exact_transversal(c).size;
    for (int b : {2, 3}) {
        const auto t = exact_transversal(disjoint_union(c, b));
        CHECK(t.size == b * base);
    }
    const auto path = PureComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(exact_transversal(disjoint_union(path, 3)).size ==
          3 * exact_transversal(path).size);
}

TEST_CASE("certificates are identical across thread counts") {
    const std::vector<PureComplex> instances = {
        cyclic_boundary(9, 4),
        sphere_D(10, 3),
        family_F(14, 4, 2),
        gamma_nk(10, 1),
    };
    for (const auto& c : instances) {
        SolveBudget b1, b2, b8;
        b1.threads = 1;
        b2.threads = 2;
        b8.threads = 8;
        const auto t1 = exact_transversal(c, b1);
        const auto t2 = exact_transversal(c, b2);
        const auto t8 = exact_transversal(c, b8);
        REQUIRE(t1.optimal);
        CHECK(t1.size == t2.size);
        CHECK(t1.size == t8.size);
        CHECK(t1.vertices == t2.vertices);
        CHECK(t1.vertices == t8.vertices);
    }
}

TEST_CASE("budget exhaustion reports bounds instead of lying") {
    SolveBudget tiny;
    tiny.node_limit = 1;
    const auto t = exact_transversal(family_F(20, 4, 2), tiny);
    CHECK_FALSE(t.optimal);
    CHECK(t.lower_bound <= t.upper_bound);
    CHECK(verify_transversal(family_F(20, 4, 2), t.vertices)); // greedy fallback still valid
    CHECK_THROWS_MATCHES(independence_number(family_F(20, 4, 2), tiny), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::BudgetExhausted;
                         }));
}

TEST_CASE("closed-form bounds") {
    const auto r1 = bound_formulas(100, 1000, 3);
    CHECK_THAT(r1.pure_upper, Catch::Matchers::WithinAbs(97.3212, 1e-4));
    CHECK_FALSE(r1.turan_upper.has_value());

    const auto r2 = bound_formulas(10, 1, 10);
    CHECK_THAT(r2.pure_upper, Catch::Matchers::WithinAbs(7.3212, 1e-4));

    const auto r3 = bound_formulas(10, 5, 4, 45);
    REQUIRE(r3.turan_upper.has_value());
    CHECK_THAT(*r3.turan_upper, Catch::Matchers::WithinAbs(9.0, 1e-9));

    CHECK_THROWS_MATCHES(bound_formulas(0, 1, 3), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::BadParams; }));
}

TEST_CASE("solving a void complex and rejecting the empty facet") {
    const auto t = exact_transversal(PureComplex::void_complex(3));
    CHECK(t.size == 0);
    CHECK(t.optimal);
    CHECK_THROWS_MATCHES(exact_transversal(PureComplex::empty_simplex()), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::BadParams; }));
}

TEST_CASE("the whole stack instantiates at a narrow word budget") {
    const auto c = cyclic_boundary<1>(7, 3);
    CHECK(c.facet_count() == 10);
    CHECK(boundary(ball_B<1>(1, 7, 3)) == c);
    const auto t = exact_transversal<1>(c);
    CHECK(t.size == 2);
    CHECK(t.vertices == (BasicVertexSet<1>{1, 7}));
}
