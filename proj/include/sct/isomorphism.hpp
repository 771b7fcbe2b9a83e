#ifndef SCT_ISOMORPHISM_HPP
#define SCT_ISOMORPHISM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "sct/complex.hpp"

namespace sct {

namespace detail {

template <std::size_t W>
struct IsoSide {
    std::vector<int> verts;                     // used labels, ascending
    std::vector<BasicVertexSet<W>> neighbors;   // by label: co-facet vertices
    std::vector<int> degree;                    // by label: facet degree
    std::vector<std::vector<int>> facets_at;    // by label: indices of incident facets
};

template <std::size_t W>
IsoSide<W> build_side(const BasicPureComplex<W>& c) {
    IsoSide<W> s;
    s.verts = c.used_vertices().labels();
    const int cap = c.used_vertices().max_label();
    s.neighbors.assign(static_cast<std::size_t>(cap) + 1, {});
    s.degree.assign(static_cast<std::size_t>(cap) + 1, 0);
    s.facets_at.assign(static_cast<std::size_t>(cap) + 1, {});
    for (std::size_t fi = 0; fi < c.facets().size(); ++fi) {
        const auto& f = c.facets()[fi];
        f.for_each([&](int v) {
            s.neighbors[static_cast<std::size_t>(v)] |= f;
            s.degree[static_cast<std::size_t>(v)] += 1;
            s.facets_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(fi));
        });
    }
    for (int v : s.verts) s.neighbors[static_cast<std::size_t>(v)].reset(v);
    return s;
}

/// Iterated refinement of vertex colors, run jointly over both sides so the
/// color ids stay comparable: initial color is the facet degree, then each
/// round appends the sorted multiset of neighbor colors.
template <std::size_t W>
std::pair<std::vector<int>, std::vector<int>> refine_colors(const IsoSide<W>& a,
                                                            const IsoSide<W>& b) {
    std::vector<int> ca(a.neighbors.size(), 0), cb(b.neighbors.size(), 0);
    for (int v : a.verts) ca[static_cast<std::size_t>(v)] = a.degree[static_cast<std::size_t>(v)];
    for (int v : b.verts) cb[static_cast<std::size_t>(v)] = b.degree[static_cast<std::size_t>(v)];
    int classes = 0;
    while (true) {
        std::map<std::vector<int>, int> dict;
        auto signature = [&](const IsoSide<W>& side, const std::vector<int>& col, int v) {
            std::vector<int> sig{col[static_cast<std::size_t>(v)]};
            std::vector<int> nb;
            side.neighbors[static_cast<std::size_t>(v)].for_each(
                [&](int u) { nb.push_back(col[static_cast<std::size_t>(u)]); });
            std::sort(nb.begin(), nb.end());
            sig.insert(sig.end(), nb.begin(), nb.end());
            return sig;
        };
        std::vector<int> na(ca.size(), 0), nb(cb.size(), 0);
        for (int v : a.verts) {
            auto sig = signature(a, ca, v);
            auto [it, _] = dict.try_emplace(std::move(sig), static_cast<int>(dict.size()));
            na[static_cast<std::size_t>(v)] = it->second;
        }
        for (int v : b.verts) {
            auto sig = signature(b, cb, v);
            auto [it, _] = dict.try_emplace(std::move(sig), static_cast<int>(dict.size()));
            nb[static_cast<std::size_t>(v)] = it->second;
        }
        const int next_classes = static_cast<int>(dict.size());
        ca = std::move(na);
        cb = std::move(nb);
        if (next_classes == classes) break;
        classes = next_classes;
    }
    return {ca, cb};
}

template <std::size_t W>
struct IsoSearch {
    const BasicPureComplex<W>* c1;
    const BasicPureComplex<W>* c2;
    const IsoSide<W>* s1;
    const IsoSide<W>* s2;
    const std::vector<int>* col1;
    const std::vector<int>* col2;
    std::vector<int> order;    // c1 vertices in branch order
    std::vector<int> map12;    // by label of c1
    std::vector<char> used2;   // by label of c2
    std::vector<int> mapped_count; // per c1 facet index

    bool consistent(int v1, int v2) const {
        if ((*col1)[static_cast<std::size_t>(v1)] != (*col2)[static_cast<std::size_t>(v2)])
            return false;
        const auto& nb1 = s1->neighbors[static_cast<std::size_t>(v1)];
        const auto& nb2 = s2->neighbors[static_cast<std::size_t>(v2)];
        for (int u1 : order) {
            const int u2 = map12[static_cast<std::size_t>(u1)];
            if (!u2) continue;
            if (nb1.test(u1) != nb2.test(u2)) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const int v1 = order[depth];
        for (int v2 : s2->verts) {
            if (used2[static_cast<std::size_t>(v2)]) continue;
            if (!consistent(v1, v2)) continue;
            map12[static_cast<std::size_t>(v1)] = v2;
            used2[static_cast<std::size_t>(v2)] = 1;
            bool ok = true;
            for (int fi : s1->facets_at[static_cast<std::size_t>(v1)]) {
                if (++mapped_count[static_cast<std::size_t>(fi)] ==
                    c1->facet_size()) {
                    BasicVertexSet<W> image;
                    c1->facets()[static_cast<std::size_t>(fi)].for_each(
                        [&](int u) { image.set(map12[static_cast<std::size_t>(u)]); });
                    if (!c2->has_facet(image)) ok = false;
                }
            }
            if (ok && extend(depth + 1)) return true;
            for (int fi : s1->facets_at[static_cast<std::size_t>(v1)])
                --mapped_count[static_cast<std::size_t>(fi)];
            map12[static_cast<std::size_t>(v1)] = 0;
            used2[static_cast<std::size_t>(v2)] = 0;
        }
        return false;
    }
};

} // namespace detail

/// Searches for a facet-preserving vertex bijection.  Returns the mapping
/// indexed by label of the first complex (0 for unused labels), or nullopt
/// when the complexes are not isomorphic.
template <std::size_t W>
std::optional<std::vector<int>> are_isomorphic(const BasicPureComplex<W>& c1,
                                               const BasicPureComplex<W>& c2) {
    if (c1.facet_size() != c2.facet_size() || c1.facet_count() != c2.facet_count() ||
        c1.f0() != c2.f0())
        return std::nullopt;
    if (c1.is_void()) return std::vector<int>{0};

    const auto s1 = detail::build_side(c1);
    const auto s2 = detail::build_side(c2);

    auto sorted_degrees = [](const detail::IsoSide<W>& s) {
        std::vector<int> d;
        for (int v : s.verts) d.push_back(s.degree[static_cast<std::size_t>(v)]);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (sorted_degrees(s1) != sorted_degrees(s2)) return std::nullopt;

    const auto [col1, col2] = detail::refine_colors(s1, s2);
    std::map<int, int> hist1, hist2;
    for (int v : s1.verts) hist1[col1[static_cast<std::size_t>(v)]] += 1;
    for (int v : s2.verts) hist2[col2[static_cast<std::size_t>(v)]] += 1;
    if (hist1 != hist2) return std::nullopt;

    detail::IsoSearch<W> search;
    search.c1 = &c1;
    search.c2 = &c2;
    search.s1 = &s1;
    search.s2 = &s2;
    search.col1 = &col1;
    search.col2 = &col2;
    search.order = s1.verts;
    // Branch scarce color classes first; ties by smallest label.
    std::stable_sort(search.order.begin(), search.order.end(), [&](int u, int v) {
        const int cu = hist1[col1[static_cast<std::size_t>(u)]];
        const int cv = hist1[col1[static_cast<std::size_t>(v)]];
        if (cu != cv) return cu < cv;
        return u < v;
    });
    search.map12.assign(s1.neighbors.size(), 0);
    search.used2.assign(s2.neighbors.size(), 0);
    search.mapped_count.assign(c1.facets().size(), 0);

    if (!search.extend(0)) return std::nullopt;
    return search.map12;
}

} // namespace sct

#endif // SCT_ISOMORPHISM_HPP
