#ifndef SCT_COMPLEX_HPP
#define SCT_COMPLEX_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sct/bitset.hpp"
#include "sct/errors.hpp"

namespace sct {

enum class Validate {
    Strict,        ///< every label of [1, n] must lie in some facet
    AllowIsolated, ///< gaps in the labeling are tolerated
};

/// A pure simplicial complex given by its facet list over the vertex
/// universe [1, n].  Facets all have the same cardinality d (= dim + 1)
/// and are kept sorted lexicographically and duplicate-free, so complexes
/// compare canonically.  Instances are immutable after construction; all
/// operations below are pure functions returning fresh values.
template <std::size_t Words = 16>
class BasicPureComplex {
public:
    using Set = BasicVertexSet<Words>;

    BasicPureComplex() = default;

    static BasicPureComplex from_facets(int n, std::vector<Set> facets,
                                        Validate mode = Validate::Strict) {
        if (n < 0 || n > Set::capacity())
            throw Error(Errc::BadParams, "vertex count out of range: " + std::to_string(n));
        if (facets.empty())
            throw Error(Errc::BadParams, "a pure complex needs at least one facet");
        const int d = facets.front().count();
        if (d == 0) throw Error(Errc::BadParams, "facets must be non-empty");
        Set used;
        for (const Set& f : facets) {
            if (f.count() != d)
                throw Error(Errc::NonUniform, "facet " + f.to_string() + " has cardinality " +
                                                  std::to_string(f.count()) + ", expected " +
                                                  std::to_string(d));
            if (f.max_label() > n)
                throw Error(Errc::VertexOutOfRange,
                            "facet " + f.to_string() + " exceeds universe [1," + std::to_string(n) + "]");
            used |= f;
        }
        std::sort(facets.begin(), facets.end());
        if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
            throw Error(Errc::DuplicateFacet,
                        std::adjacent_find(facets.begin(), facets.end())->to_string());
        if (mode == Validate::Strict && used.count() != n) {
            const Set missing = Set::range(1, n) - used;
            throw Error(Errc::IsolatedVertex,
                        "labels " + missing.to_string() + " lie in no facet");
        }
        return BasicPureComplex(n, d, std::move(facets), used);
    }

    /// The complex {∅}: boundary of a point, join-neutral element.
    static BasicPureComplex empty_simplex() {
        return BasicPureComplex(0, 0, {Set{}}, Set{});
    }

    /// A complex of the given facet cardinality with no facets at all.
    static BasicPureComplex void_complex(int facet_size) {
        return BasicPureComplex(0, facet_size, {}, Set{});
    }

    /// The full simplex on the given vertices, as the one-facet complex.
    static BasicPureComplex simplex(const Set& vertices) {
        if (vertices.empty()) return empty_simplex();
        return BasicPureComplex(vertices.max_label(), vertices.count(), {vertices}, vertices);
    }

    int n() const { return n_; }
    int facet_size() const { return facet_size_; }
    int dim() const { return facet_size_ - 1; }
    std::span<const Set> facets() const { return facets_; }
    long long facet_count() const { return static_cast<long long>(facets_.size()); }
    bool is_void() const { return facets_.empty(); }
    const Set& used_vertices() const { return used_; }
    int f0() const { return used_.count(); }
    bool covers_universe() const { return used_ == Set::range(1, n_); }

    bool has_facet(const Set& f) const {
        return std::binary_search(facets_.begin(), facets_.end(), f);
    }

    /// True when f lies in the downward closure of the facet list.
    bool is_face(const Set& f) const {
        for (const Set& g : facets_)
            if (g.contains(f)) return true;
        return false;
    }

    bool operator==(const BasicPureComplex&) const = default;

    /// Internal fast path: facets must already be sorted, unique, uniform.
    static BasicPureComplex from_sorted_unchecked(int n, int facet_size, std::vector<Set> facets) {
        Set used;
        for (const Set& f : facets) used |= f;
        return BasicPureComplex(n, facet_size, std::move(facets), used);
    }

private:
    BasicPureComplex(int n, int facet_size, std::vector<Set> facets, Set used)
        : n_(n), facet_size_(facet_size), facets_(std::move(facets)), used_(used) {}

    int n_ = 0;
    int facet_size_ = 0;
    std::vector<Set> facets_;
    Set used_;
};

using PureComplex = BasicPureComplex<>;

/// Face counts by dimension; counts[i] is the number of (i-1)-faces, so
/// counts[0] = 1 accounts for the empty face.
struct FVector {
    std::vector<long long> counts;

    long long at_dim(int i) const {
        const int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(counts.size())) return 0;
        return counts[idx];
    }

    bool operator==(const FVector&) const = default;
};

namespace detail {

/// Builds a complex from an arbitrary facet list: sorts, dedupes and
/// renormalizes the universe to the largest used label.
template <std::size_t W>
BasicPureComplex<W> make_complex(std::vector<BasicVertexSet<W>> facets, int facet_size) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    int n = 0;
    for (const auto& f : facets) n = std::max(n, f.max_label());
    return BasicPureComplex<W>::from_sorted_unchecked(n, facet_size, std::move(facets));
}

} // namespace detail

/// All faces of the complex (downward closure of the facets, including the
/// empty face), sorted lexicographically.
template <std::size_t W>
std::vector<BasicVertexSet<W>> all_faces(const BasicPureComplex<W>& c) {
    using Set = BasicVertexSet<W>;
    std::vector<Set> out;
    for (const Set& f : c.facets()) {
        const std::vector<int> lab = f.labels();
        const unsigned k = static_cast<unsigned>(lab.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Set g;
            for (unsigned i = 0; i < k; ++i)
                if (mask & (1u << i)) g.set(lab[i]);
            out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <std::size_t W>
FVector f_vector(const BasicPureComplex<W>& c) {
    FVector fv;
    fv.counts.assign(static_cast<std::size_t>(c.facet_size()) + 1, 0);
    for (const auto& f : all_faces(c)) fv.counts[static_cast<std::size_t>(f.count())] += 1;
    return fv;
}

/// Facets of c that contain F, i.e. the star of F as a pure subcomplex.
template <std::size_t W>
BasicPureComplex<W> star(const BasicPureComplex<W>& c, const BasicVertexSet<W>& face) {
    if (!c.is_face(face)) throw Error(Errc::NotAFace, face.to_string());
    std::vector<BasicVertexSet<W>> out;
    for (const auto& f : c.facets())
        if (f.contains(face)) out.push_back(f);
    return detail::make_complex(std::move(out), c.facet_size());
}

/// Residues G \ F of the facets G containing F.  Labels are retained, the
/// universe shrinks to the largest label that appears.
template <std::size_t W>
BasicPureComplex<W> link(const BasicPureComplex<W>& c, const BasicVertexSet<W>& face) {
    if (!c.is_face(face)) throw Error(Errc::NotAFace, face.to_string());
    std::vector<BasicVertexSet<W>> out;
    for (const auto& f : c.facets())
        if (f.contains(face)) out.push_back(f - face);
    return detail::make_complex(std::move(out), c.facet_size() - face.count());
}

template <std::size_t W>
BasicPureComplex<W> join(const BasicPureComplex<W>& a, const BasicPureComplex<W>& b) {
    if (a.used_vertices().intersects(b.used_vertices()))
        throw Error(Errc::OverlappingVertexSets,
                    (a.used_vertices() & b.used_vertices()).to_string());
    std::vector<BasicVertexSet<W>> out;
    out.reserve(static_cast<std::size_t>(a.facet_count() * b.facet_count()));
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) out.push_back(f | g);
    return detail::make_complex(std::move(out), a.facet_size() + b.facet_size());
}

/// All faces of c contained in W.  The result is a face list rather than a
/// pure complex because restrictions need not be pure.
template <std::size_t W>
std::vector<BasicVertexSet<W>> restriction(const BasicPureComplex<W>& c,
                                           const BasicVertexSet<W>& window) {
    using Set = BasicVertexSet<W>;
    std::vector<Set> tops;
    for (const Set& f : c.facets()) tops.push_back(f & window);
    std::sort(tops.begin(), tops.end());
    tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
    std::vector<Set> out;
    for (const Set& t : tops) {
        const std::vector<int> lab = t.labels();
        const unsigned k = static_cast<unsigned>(lab.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Set g;
            for (unsigned i = 0; i < k; ++i)
                if (mask & (1u << i)) g.set(lab[i]);
            out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// True when the face set of sub equals the restriction of c to the
/// vertices of sub.
template <std::size_t W>
bool is_induced_subcomplex(const BasicPureComplex<W>& c, const BasicPureComplex<W>& sub) {
    if (!c.used_vertices().contains(sub.used_vertices())) return false;
    return all_faces(sub) == restriction(c, sub.used_vertices());
}

namespace detail {

/// (ridge, multiplicity) pairs over all codimension-1 faces of facets.
template <std::size_t W>
std::vector<std::pair<BasicVertexSet<W>, int>> ridge_degrees(const BasicPureComplex<W>& c) {
    using Set = BasicVertexSet<W>;
    std::vector<Set> ridges;
    ridges.reserve(static_cast<std::size_t>(c.facet_count()) * c.facet_size());
    for (const Set& f : c.facets())
        f.for_each([&](int v) {
            Set r = f;
            r.reset(v);
            ridges.push_back(r);
        });
    std::sort(ridges.begin(), ridges.end());
    std::vector<std::pair<Set, int>> out;
    for (std::size_t i = 0; i < ridges.size();) {
        std::size_t j = i;
        while (j < ridges.size() && ridges[j] == ridges[i]) ++j;
        out.emplace_back(ridges[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

} // namespace detail

template <std::size_t W>
std::optional<BasicVertexSet<W>> pseudomanifold_witness(const BasicPureComplex<W>& c) {
    for (const auto& [ridge, deg] : detail::ridge_degrees(c))
        if (deg > 2) return ridge;
    return std::nullopt;
}

/// Every ridge lies in at most two facets.
template <std::size_t W>
bool is_pseudomanifold(const BasicPureComplex<W>& c) {
    return !pseudomanifold_witness(c).has_value();
}

/// The pure complex generated by the ridges lying in exactly one facet.
/// Void when every ridge has degree two (a closed pseudomanifold).
template <std::size_t W>
BasicPureComplex<W> boundary(const BasicPureComplex<W>& c) {
    if (c.facet_size() < 1)
        throw Error(Errc::BoundaryUndefined, "complex has no ridges");
    std::vector<BasicVertexSet<W>> out;
    for (const auto& [ridge, deg] : detail::ridge_degrees(c)) {
        if (deg > 2)
            throw Error(Errc::NotAPseudomanifold,
                        "ridge " + ridge.to_string() + " lies in " + std::to_string(deg) + " facets");
        if (deg == 1) out.push_back(ridge);
    }
    if (out.empty()) return BasicPureComplex<W>::void_complex(c.facet_size() - 1);
    if (c.facet_size() == 1) return BasicPureComplex<W>::empty_simplex();
    return detail::make_complex(std::move(out), c.facet_size() - 1);
}

/// A face whose link has the wrong reduced Euler characteristic, if any.
template <std::size_t W>
std::optional<BasicVertexSet<W>> eulerian_witness(const BasicPureComplex<W>& c) {
    using Set = BasicVertexSet<W>;
    const std::vector<Set> faces = all_faces(c);
    // accum[i] collects the reduced Euler characteristic of the link of
    // faces[i]: every face G ⊇ F contributes (-1)^(|G|-|F|-1).
    std::vector<long long> accum(faces.size(), 0);
    for (const Set& g : faces) {
        const std::vector<int> lab = g.labels();
        const unsigned k = static_cast<unsigned>(lab.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Set f;
            int fsz = 0;
            for (unsigned i = 0; i < k; ++i)
                if (mask & (1u << i)) {
                    f.set(lab[i]);
                    ++fsz;
                }
            const auto it = std::lower_bound(faces.begin(), faces.end(), f);
            const auto idx = static_cast<std::size_t>(it - faces.begin());
            accum[idx] += ((static_cast<int>(k) - fsz - 1) % 2 == 0) ? 1 : -1;
        }
    }
    const int d = c.facet_size();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const long long expected = ((d - faces[i].count() - 1) % 2 == 0) ? 1 : -1;
        if (accum[i] != expected) return faces[i];
    }
    return std::nullopt;
}

/// The link of every face, the empty face included, has the reduced Euler
/// characteristic of a sphere of the matching dimension.
template <std::size_t W>
bool is_eulerian(const BasicPureComplex<W>& c) {
    return !eulerian_witness(c).has_value();
}

/// Applies a label-to-label map to every facet.
template <std::size_t W, class Fn>
BasicPureComplex<W> remap_labels(const BasicPureComplex<W>& c, Fn&& fn) {
    std::vector<BasicVertexSet<W>> out;
    out.reserve(static_cast<std::size_t>(c.facet_count()));
    for (const auto& f : c.facets()) {
        BasicVertexSet<W> g;
        f.for_each([&](int v) { g.set(fn(v)); });
        out.push_back(g);
    }
    return detail::make_complex(std::move(out), c.facet_size());
}

/// b relabeled copies; copy j lives on labels (j-1)*n + [1, n].
template <std::size_t W>
BasicPureComplex<W> disjoint_union(const BasicPureComplex<W>& c, int copies) {
    if (copies < 1) throw Error(Errc::BadParams, "copy count must be positive");
    if (static_cast<long long>(copies) * c.n() > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams, "disjoint union exceeds the label capacity");
    std::vector<BasicVertexSet<W>> out;
    for (int j = 0; j < copies; ++j) {
        const int offset = j * c.n();
        for (const auto& f : c.facets()) {
            BasicVertexSet<W> g;
            f.for_each([&](int v) { g.set(v + offset); });
            out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end());
    return BasicPureComplex<W>::from_sorted_unchecked(copies * c.n(), c.facet_size(),
                                                      std::move(out));
}

/// Shifts every label by the given offset (which may be negative).
template <std::size_t W>
BasicPureComplex<W> relabel_shift(const BasicPureComplex<W>& c, int offset) {
    const int lo = c.used_vertices().min_label();
    if (lo && lo + offset < 1)
        throw Error(Errc::LabelUnderflow,
                    "shift by " + std::to_string(offset) + " drops label " + std::to_string(lo) +
                        " below 1");
    if (c.used_vertices().max_label() + offset > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams, "shift exceeds the label capacity");
    return remap_labels(c, [offset](int v) { return v + offset; });
}

} // namespace sct

#endif // SCT_COMPLEX_HPP
