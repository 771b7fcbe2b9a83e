#ifndef SCT_CANONICAL_BALLS_HPP
#define SCT_CANONICAL_BALLS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "sct/complex.hpp"

namespace sct {

/// Three hand-transcribed triangulations used as retriangulation blocks:
///   L7  — 3-ball on [7],  a triangulation of the cyclic 3-polytope C(7,3)
///         containing the facet {1,3,5,7};
///   L8  — 3-ball on [8],  a triangulation of C(8,3) containing {1,3,5,7}
///         and {2,4,6,8}, listed in a shelling order;
///   L11 — 5-ball on [11], a triangulation of C(11,5) containing
///         {1,3,5,7,9,11}, listed in a shelling order.
enum class CanonicalBall { L7, L8, L11 };

namespace detail {

inline const std::vector<std::vector<int>>& canonical_ball_data(CanonicalBall which) {
    static const std::vector<std::vector<int>> l7 = {
        {1, 2, 3, 7}, {1, 3, 4, 5}, {1, 3, 5, 7}, {3, 4, 5, 7}, {1, 5, 6, 7},
    };
    static const std::vector<std::vector<int>> l8 = {
        {2, 5, 3, 7}, {2, 5, 7, 6}, {2, 5, 6, 4}, {2, 5, 4, 3},
        {1, 2, 3, 7}, {2, 6, 7, 8}, {1, 2, 7, 8}, {1, 3, 5, 7}, {2, 4, 6, 8},
        {1, 5, 6, 7}, {2, 3, 4, 8}, {1, 3, 4, 5}, {4, 5, 6, 8},
    };
    static const std::vector<std::vector<int>> l11 = {
        {1, 2, 3, 4, 5, 11}, {1, 2, 3, 5, 7, 11}, {2, 3, 5, 6, 7, 11},
        {1, 2, 3, 5, 6, 7},  {1, 2, 3, 7, 9, 11}, {1, 2, 7, 8, 9, 11},
        {1, 3, 4, 5, 10, 11}, {1, 2, 5, 6, 7, 11}, {1, 3, 5, 7, 9, 11},
        {1, 3, 5, 9, 10, 11}, {1, 5, 7, 9, 10, 11}, {1, 5, 6, 7, 10, 11},
        {1, 5, 6, 7, 9, 10},  {1, 7, 8, 9, 10, 11}, {3, 4, 5, 9, 10, 11},
        {3, 4, 5, 7, 9, 11},  {5, 6, 7, 9, 10, 11}, {3, 4, 5, 6, 7, 11},
        {1, 2, 3, 9, 10, 11}, {1, 3, 4, 5, 9, 10},  {1, 2, 3, 7, 8, 9},
        {1, 3, 5, 7, 8, 9},   {3, 4, 5, 7, 8, 9},   {1, 3, 4, 5, 8, 9},
        {2, 3, 7, 8, 9, 11},  {1, 5, 6, 7, 8, 9},   {1, 3, 4, 5, 7, 8},
        {1, 3, 4, 5, 6, 7},   {3, 4, 7, 8, 9, 11},  {4, 5, 7, 8, 9, 11},
        {5, 6, 7, 8, 9, 11},
    };
    switch (which) {
        case CanonicalBall::L7: return l7;
        case CanonicalBall::L8: return l8;
        case CanonicalBall::L11: return l11;
    }
    return l7;
}

/// FNV-1a over the sorted facet list, so accidental edits of the embedded
/// tables are caught at first use.
template <std::size_t W>
std::uint64_t facet_list_checksum(const BasicPureComplex<W>& c) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (const auto& f : c.facets()) {
        f.for_each([&](int v) { mix(static_cast<std::uint64_t>(v)); });
        mix(0xffffffffffffffffull);
    }
    return h;
}

inline std::uint64_t canonical_ball_checksum(CanonicalBall which) {
    switch (which) {
        case CanonicalBall::L7: return 0x5db702dc8782f078ull;
        case CanonicalBall::L8: return 0xc9641d698b66bdceull;
        case CanonicalBall::L11: return 0x574c698938102ed2ull;
    }
    return 0;
}

} // namespace detail

/// The facet list in its published order (the order matters: for L8 and L11
/// it is a shelling order).
template <std::size_t W = 16>
std::vector<BasicVertexSet<W>> canonical_ball_order(CanonicalBall which) {
    std::vector<BasicVertexSet<W>> out;
    for (const auto& facet : detail::canonical_ball_data(which))
        out.push_back(BasicVertexSet<W>::from_labels(facet));
    return out;
}

template <std::size_t W = 16>
BasicPureComplex<W> canonical_ball(CanonicalBall which) {
    const auto order = canonical_ball_order<W>(which);
    const int n = which == CanonicalBall::L7 ? 7 : which == CanonicalBall::L8 ? 8 : 11;
    auto c = BasicPureComplex<W>::from_facets(n, order);
    if (detail::facet_list_checksum(c) != detail::canonical_ball_checksum(which))
        throw Error(Errc::BadParams, "embedded facet table is corrupted");
    return c;
}

} // namespace sct

#endif // SCT_CANONICAL_BALLS_HPP
