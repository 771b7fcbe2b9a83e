#include <catch_amalgamated.hpp>

#include <random>

#include "sct/generators.hpp"
#include "sct/isomorphism.hpp"

#include "oracles.hpp"

using namespace sct;

namespace {

/// Applies a mapping (by label) to a complex and checks facets land on facets.
bool mapping_carries_facets(const PureComplex& a, const PureComplex& b,
                            const std::vector<int>& map) {
    for (const auto& f : a.facets()) {
        VertexSet image;
        bool ok = true;
        f.for_each([&](int v) {
            if (v >= static_cast<int>(map.size()) || map[static_cast<std::size_t>(v)] == 0)
                ok = false;
            else
                image.set(map[static_cast<std::size_t>(v)]);
        });
        if (!ok || !b.has_facet(image)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("the sibling sphere is not the cyclic sphere") {
    CHECK_FALSE(are_isomorphic(sphere_D(8, 3), cyclic_boundary(8, 4)).has_value());
}

TEST_CASE("relabelings of the simplex boundary are isomorphic") {
    const auto tetra = PureComplex::from_facets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    std::vector<int> perm{0, 1, 2, 3, 4};
    std::sort(perm.begin() + 1, perm.end());
    do {
        const auto relabeled = remap_labels(tetra, [&](int v) { return perm[static_cast<std::size_t>(v)]; });
        const auto map = are_isomorphic(tetra, relabeled);
        REQUIRE(map.has_value());
        REQUIRE(mapping_carries_facets(tetra, relabeled, *map));
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

TEST_CASE("facet-count mismatch rejects fast") {
    CHECK_FALSE(are_isomorphic(cyclic_boundary(7, 3), sphere_D(7, 3)).has_value());
    CHECK(cyclic_boundary(7, 3).facet_count() == 10);
    CHECK(sphere_D(7, 3).facet_count() == 14);
}

TEST_CASE("isomorphism is reflexive and symmetric on random complexes") {
    std::mt19937_64 rng(424242);
    for (int rep = 0; rep < 12; ++rep) {
        const auto a = oracles::random_complex(rng, 8, 3, 5);
        const auto self = are_isomorphic(a, a);
        REQUIRE(self.has_value());
        REQUIRE(mapping_carries_facets(a, a, *self));

        // A scrambled copy maps back and forth.
        std::vector<int> perm{0, 3, 8, 1, 6, 2, 7, 4, 5};
        const auto b = remap_labels(a, [&](int v) { return perm[static_cast<std::size_t>(v)]; });
        const auto fwd = are_isomorphic(a, b);
        const auto bwd = are_isomorphic(b, a);
        REQUIRE(fwd.has_value());
        REQUIRE(bwd.has_value());
        REQUIRE(mapping_carries_facets(a, b, *fwd));
        REQUIRE(mapping_carries_facets(b, a, *bwd));

        const auto other = oracles::random_complex(rng, 8, 3, 5);
        CHECK(are_isomorphic(a, other).has_value() == are_isomorphic(other, a).has_value());
    }
}

TEST_CASE("cyclic spheres of different sizes are distinguished") {
    CHECK(are_isomorphic(cyclic_boundary(8, 4), cyclic_boundary(8, 4)).has_value());
    CHECK_FALSE(are_isomorphic(cyclic_boundary(9, 4), cyclic_boundary(8, 4)).has_value());
    // Same counts, different structure: a 6-cycle vs two triangles.
    const auto hexagon =
        PureComplex::from_facets(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    const auto triangles =
        PureComplex::from_facets(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    CHECK_FALSE(are_isomorphic(hexagon, triangles).has_value());
}
