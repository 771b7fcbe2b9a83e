#include <catch_amalgamated.hpp>

#include "sct/complex.hpp"
#include "sct/generators.hpp"

#include "oracles.hpp"

using namespace sct;

namespace {
PureComplex tetra_boundary() {
    return PureComplex::from_facets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}
} // namespace

TEST_CASE("from_facets validates input") {
    auto c = tetra_boundary();
    CHECK(c.facet_size() == 3);
    CHECK(c.facet_count() == 4);

    CHECK_THROWS_MATCHES(PureComplex::from_facets(3, {{1, 2}, {1, 2, 3}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NonUniform; }));
    CHECK_THROWS_MATCHES(PureComplex::from_facets(3, {{1, 2}, {1, 2}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::DuplicateFacet; }));
    CHECK_THROWS_MATCHES(PureComplex::from_facets(3, {{1, 2}, {3, 4}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::VertexOutOfRange; }));
    CHECK_THROWS_MATCHES(PureComplex::from_facets(5, {{1, 2}, {3, 4}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::IsolatedVertex; }));
    CHECK_NOTHROW(PureComplex::from_facets(5, {{1, 2}, {3, 4}}, Validate::AllowIsolated));

    auto two = PureComplex::from_facets(5, {{1, 2, 3}, {3, 4, 5}});
    CHECK(two.facet_size() == 3);
    CHECK(two.facet_count() == 2);
}

TEST_CASE("f_vector counts faces by dimension") {
    const auto fv = f_vector(tetra_boundary());
    CHECK(fv.counts == std::vector<long long>{1, 4, 6, 4});

    const auto fv7 = f_vector(cyclic_boundary(7, 3));
    CHECK(fv7.counts == std::vector<long long>{1, 7, 15, 10});

    const auto fv1 = f_vector(PureComplex::from_facets(2, {{1, 2}}));
    CHECK(fv1.counts == std::vector<long long>{1, 2, 1});
}

TEST_CASE("link and star") {
    auto c = tetra_boundary();
    const auto lk = link(c, VertexSet{1});
    CHECK(lk == PureComplex::from_facets(4, {{2, 3}, {2, 4}, {3, 4}}, Validate::AllowIsolated));

    const auto st = star(c, VertexSet{1});
    CHECK(st.facet_count() == 3);
    for (const auto& f : st.facets()) CHECK(f.test(1));

    auto two = PureComplex::from_facets(5, {{1, 2, 3}, {3, 4, 5}});
    CHECK(link(two, VertexSet{1}).facets().front() == VertexSet{2, 3});
    CHECK(star(two, VertexSet{1}).facet_count() == 1);

    CHECK_THROWS_MATCHES(star(cyclic_boundary(7, 3), VertexSet{3, 5}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NotAFace; }));

    // The sibling-sphere link identity.
    CHECK(link(sphere_D(7, 3), VertexSet{6, 7}) == cyclic_boundary(5, 2));
}

TEST_CASE("star equals cone over link at every vertex") {
    std::mt19937_64 rng(20240811);
    for (int rep = 0; rep < 10; ++rep) {
        const auto c = oracles::random_complex(rng, 8, 3, 6);
        c.used_vertices().for_each([&](int v) {
            const auto st = star(c, VertexSet::singleton(v));
            const auto lk = link(c, VertexSet::singleton(v));
            const auto cone = join(PureComplex::simplex(VertexSet::singleton(v)), lk);
            CHECK(st.facets().size() == cone.facets().size());
            CHECK(std::equal(st.facets().begin(), st.facets().end(), cone.facets().begin()));
        });
    }
}

TEST_CASE("join") {
    const auto cone =
        join(PureComplex::simplex(VertexSet{8}),
             PureComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(cone == PureComplex::from_facets(8, {{1, 2, 8}, {1, 3, 8}, {2, 3, 8}},
                                           Validate::AllowIsolated));

    CHECK(join(PureComplex::simplex(VertexSet{1, 2}), PureComplex::simplex(VertexSet{3, 4})) ==
          PureComplex::simplex(VertexSet{1, 2, 3, 4}));

    // The sewing ball is a join of the top simplex with an interval ball.
    const auto k73 = join(PureComplex::simplex(VertexSet{6, 7}), ball_B(1, 5, 1));
    CHECK(k73 == ball_K(7, 3));
    CHECK(k73.facet_count() == 4);

    CHECK_THROWS_MATCHES(
        join(PureComplex::simplex(VertexSet{1, 2}), PureComplex::simplex(VertexSet{2, 3})), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == Errc::OverlappingVertexSets; }));
}

TEST_CASE("restriction returns the full face list") {
    auto c = tetra_boundary();
    const auto faces = restriction(c, VertexSet{1, 2, 3});
    CHECK(faces.size() == 8); // all subsets of {1,2,3}

    auto two = PureComplex::from_facets(5, {{1, 2, 3}, {3, 4, 5}});
    const auto r = restriction(two, VertexSet{1, 4, 5});
    CHECK(r == std::vector<VertexSet>{{}, {1}, {4}, {4, 5}, {5}});

    const auto r7 = restriction(cyclic_boundary(7, 3), VertexSet{2, 3, 7});
    CHECK(std::find(r7.begin(), r7.end(), VertexSet{2, 3, 7}) != r7.end());
    CHECK(r7.size() == 8);
}

TEST_CASE("induced subcomplexes") {
    CHECK(is_induced_subcomplex(cyclic_boundary(9, 4), ball_B(2, 6, 3)));

    auto c = tetra_boundary();
    // The 3-cycle on {1,2,3} is NOT induced: the restriction of the
    // boundary to {1,2,3} also contains the triangle itself.
    const auto cycle = PureComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(is_induced_subcomplex(c, cycle));

    const auto one = PureComplex::from_facets(3, {{1, 2, 3}});
    CHECK(is_induced_subcomplex(c, one));

    // Widening the window brings the other triangles into the restriction.
    const auto faces_on_all = restriction(c, VertexSet::range(1, 4));
    CHECK(faces_on_all.size() > all_faces(one).size());
}

TEST_CASE("boundary computation") {
    CHECK(boundary(ball_B(1, 7, 3)) == cyclic_boundary(7, 3));
    CHECK(boundary(PureComplex::simplex(VertexSet{1, 2, 3, 4})) == tetra_boundary());
    CHECK(boundary(cyclic_boundary(7, 3)).is_void());

    const auto bad = PureComplex::from_facets(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
    CHECK_THROWS_MATCHES(boundary(bad), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotAPseudomanifold;
                         }));
}

TEST_CASE("pseudomanifold check") {
    CHECK(is_pseudomanifold(family_H(12, 3, 2, 2)));
    CHECK(is_pseudomanifold(tetra_boundary()));
    const auto bad = PureComplex::from_facets(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
    CHECK_FALSE(is_pseudomanifold(bad));
    CHECK(pseudomanifold_witness(bad).value() == VertexSet{1, 2});
}

TEST_CASE("eulerian check") {
    CHECK(is_eulerian(cyclic_boundary(6, 4)));
    CHECK_FALSE(is_eulerian(PureComplex::from_facets(3, {{1, 2, 3}})));

    // One circle and a disjoint pair of circles both satisfy the condition:
    // the Euler characteristic cannot see the number of components here.
    const auto cyc4 = PureComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(is_eulerian(cyc4));
    CHECK(is_eulerian(disjoint_union(cyc4, 2)));

    // Cross-check the witness path against the direct link computation.
    const auto tri = PureComplex::from_facets(3, {{1, 2, 3}});
    CHECK(oracles::link_reduced_euler(tri, VertexSet{}) == 0);
    CHECK(eulerian_witness(tri).value() == VertexSet{});
}

TEST_CASE("eulerian matches the direct link computation on spheres") {
    for (const auto& c : {cyclic_boundary(7, 3), sphere_D(8, 3), cyclic_boundary(8, 4)}) {
        const int d = c.facet_size();
        for (const auto& f : all_faces(c)) {
            const long long expected = ((d - f.count() - 1) % 2 == 0) ? 1 : -1;
            REQUIRE(oracles::link_reduced_euler(c, f) == expected);
        }
        CHECK(is_eulerian(c));
    }
}

TEST_CASE("disjoint union") {
    const auto two = disjoint_union(PureComplex::from_facets(2, {{1, 2}}), 2);
    CHECK(two == PureComplex::from_facets(4, {{1, 2}, {3, 4}}));

    const auto c = cyclic_boundary(7, 3);
    const auto three = disjoint_union(c, 3);
    CHECK(three.facet_count() == 3 * c.facet_count());
    CHECK(three.f0() == 3 * c.f0());
}

TEST_CASE("relabel shift") {
    const auto shifted = relabel_shift(PureComplex::from_facets(3, {{1, 2, 3}}), 5);
    CHECK(shifted == PureComplex::from_facets(8, {{6, 7, 8}}, Validate::AllowIsolated));

    CHECK(relabel_shift(ball_B(1, 8, 3), 8) == ball_B(9, 16, 3));
    CHECK(relabel_shift(cyclic_boundary(7, 3), 0) == cyclic_boundary(7, 3));

    CHECK_THROWS_MATCHES(relabel_shift(ball_B(1, 8, 3), -1), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::LabelUnderflow; }));
    CHECK(relabel_shift(ball_B(9, 16, 3), -8) == ball_B(1, 8, 3));
}

TEST_CASE("faces are downward closed on samples") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 5; ++rep) {
        const auto c = oracles::random_complex(rng, 9, 4, 5);
        const auto faces = all_faces(c);
        for (const auto& f : faces) {
            const auto lab = f.labels();
            for (int v : lab) {
                VertexSet g = f;
                g.reset(v);
                CHECK(std::binary_search(faces.begin(), faces.end(), g));
            }
        }
    }
}
