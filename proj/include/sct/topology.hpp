#ifndef SCT_TOPOLOGY_HPP
#define SCT_TOPOLOGY_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "sct/complex.hpp"

namespace sct {

/// One bistellar flip: the subcomplex spanned by A and B is exchanged from
/// the join of the full simplex on A with the boundary of the simplex on B
/// for the join with the roles of A and B swapped.
template <std::size_t W = 16>
struct BasicFlipSpec {
    BasicVertexSet<W> A;
    BasicVertexSet<W> B;
};

using FlipSpec = BasicFlipSpec<>;

namespace detail {

/// Faces of the join of the full simplex on A with ∂(simplex on B):
/// every A' ∪ B' with A' ⊆ A and B' a proper subset of B.
template <std::size_t W>
std::vector<BasicVertexSet<W>> join_simplex_boundary_faces(const BasicVertexSet<W>& a,
                                                           const BasicVertexSet<W>& b) {
    using Set = BasicVertexSet<W>;
    const std::vector<int> la = a.labels();
    const std::vector<int> lb = b.labels();
    std::vector<Set> out;
    for (unsigned ma = 0; ma < (1u << la.size()); ++ma)
        for (unsigned mb = 0; mb + 1 < (1u << lb.size()); ++mb) {
            Set s;
            for (unsigned i = 0; i < la.size(); ++i)
                if (ma & (1u << i)) s.set(la[i]);
            for (unsigned i = 0; i < lb.size(); ++i)
                if (mb & (1u << i)) s.set(lb[i]);
            out.push_back(s);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Facets A ∪ (B \ {b}) of the join of the simplex on A with ∂(simplex on B).
template <std::size_t W>
std::vector<BasicVertexSet<W>> join_simplex_boundary_facets(const BasicVertexSet<W>& a,
                                                            const BasicVertexSet<W>& b) {
    std::vector<BasicVertexSet<W>> out;
    b.for_each([&](int v) {
        BasicVertexSet<W> f = a | b;
        f.reset(v);
        out.push_back(f);
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

template <std::size_t W>
BasicPureComplex<W> bistellar_flip(const BasicPureComplex<W>& c, const BasicFlipSpec<W>& spec) {
    using Set = BasicVertexSet<W>;
    const Set& a = spec.A;
    const Set& b = spec.B;
    if (a.empty() || b.empty() || a.intersects(b) || a.count() + b.count() != c.facet_size() + 1)
        throw Error(Errc::NotAFaceConfiguration,
                    "A=" + a.to_string() + " B=" + b.to_string() + " against facet cardinality " +
                        std::to_string(c.facet_size()));
    // The region spanned by A ∪ B must look exactly like the join of the
    // simplex on A with the boundary of the simplex on B, and no facet may
    // stick out of that region while containing A.
    if (restriction(c, a | b) != detail::join_simplex_boundary_faces(a, b))
        throw Error(Errc::FlipPreconditionFailed,
                    "restriction to " + (a | b).to_string() + " is not the expected join");
    const auto old_facets = detail::join_simplex_boundary_facets(a, b);
    for (const Set& f : c.facets())
        if (f.contains(a) && !std::binary_search(old_facets.begin(), old_facets.end(), f))
            throw Error(Errc::FlipPreconditionFailed,
                        "facet " + f.to_string() + " meets A outside the flip region");

    std::vector<Set> out;
    out.reserve(c.facets().size());
    for (const Set& f : c.facets())
        if (!std::binary_search(old_facets.begin(), old_facets.end(), f)) out.push_back(f);
    a.for_each([&](int v) {
        Set f = a | b;
        f.reset(v);
        out.push_back(f);
    });
    return detail::make_complex(std::move(out), c.facet_size());
}

/// Replaces the subcomplex ball_old of c by ball_new.  Both balls must share
/// their boundary; the swap is accepted when ball_old is induced in c, or
/// when a direct check shows ball_new and the rest of c meet only along the
/// common boundary.
template <std::size_t W>
BasicPureComplex<W> replace_ball(const BasicPureComplex<W>& c, const BasicPureComplex<W>& ball_old,
                                 const BasicPureComplex<W>& ball_new) {
    using Set = BasicVertexSet<W>;
    if (ball_old.facet_size() != c.facet_size() || ball_new.facet_size() != c.facet_size())
        throw Error(Errc::ReplacementGuardFailed, "facet cardinalities disagree");
    for (const Set& f : ball_old.facets())
        if (!c.has_facet(f))
            throw Error(Errc::ReplacementGuardFailed,
                        "facet " + f.to_string() + " of the old ball is not a facet of the host");

    const auto bd_old = boundary(ball_old);
    const auto bd_new = boundary(ball_new);
    if (bd_old.facets().size() != bd_new.facets().size() ||
        !std::equal(bd_old.facets().begin(), bd_old.facets().end(), bd_new.facets().begin()))
        throw Error(Errc::BoundaryMismatch, "the two balls have different boundaries");

    if (!(ball_new.used_vertices() == ball_old.used_vertices()) &&
        !((ball_new.used_vertices() & c.used_vertices()) == bd_new.used_vertices()))
        throw Error(Errc::ReplacementGuardFailed,
                    "new vertices of the replacement must be fresh");

    std::vector<Set> rest;
    std::set_difference(c.facets().begin(), c.facets().end(), ball_old.facets().begin(),
                        ball_old.facets().end(), std::back_inserter(rest));
    const auto rest_complex = rest.empty()
                                  ? BasicPureComplex<W>::void_complex(c.facet_size())
                                  : BasicPureComplex<W>::from_sorted_unchecked(
                                        c.n(), c.facet_size(), std::vector<Set>(rest));

    if (!is_induced_subcomplex(c, ball_old)) {
        // The replacement is still sound when the new ball meets the rest of
        // the complex only along the shared boundary sphere.
        const auto faces_new = all_faces(ball_new);
        const auto faces_rest = all_faces(rest_complex);
        const auto faces_bd = all_faces(bd_new);
        std::vector<Set> common;
        std::set_intersection(faces_new.begin(), faces_new.end(), faces_rest.begin(),
                              faces_rest.end(), std::back_inserter(common));
        for (const Set& f : common)
            if (!std::binary_search(faces_bd.begin(), faces_bd.end(), f))
                throw Error(Errc::ReplacementGuardFailed,
                            "old ball is not induced and face " + f.to_string() +
                                " of the new ball meets the rest of the complex off the boundary");
    }

    std::vector<Set> out = std::move(rest);
    out.insert(out.end(), ball_new.facets().begin(), ball_new.facets().end());
    return detail::make_complex(std::move(out), c.facet_size());
}

/// Removes the subcomplex K and cones its boundary from the fresh vertex v.
template <std::size_t W>
BasicPureComplex<W> sew_vertex(const BasicPureComplex<W>& c, const BasicPureComplex<W>& k,
                               int v) {
    using Set = BasicVertexSet<W>;
    if (k.facet_size() != c.facet_size())
        throw Error(Errc::BadParams, "facet cardinalities disagree");
    for (const Set& f : k.facets())
        if (!c.has_facet(f))
            throw Error(Errc::BadParams, "facet " + f.to_string() + " is not a facet of the host");
    if (v < 1 || v > Set::capacity()) throw Error(Errc::BadParams, "label out of range");
    if (c.used_vertices().test(v))
        throw Error(Errc::StaleLabel, "label " + std::to_string(v) + " is already in use");

    BasicPureComplex<W> bd;
    try {
        bd = boundary(k);
    } catch (const Error& e) {
        throw Error(Errc::BoundaryUndefined, e.what());
    }
    if (bd.is_void())
        throw Error(Errc::BoundaryUndefined, "the removed subcomplex is closed");

    std::vector<Set> out;
    std::set_difference(c.facets().begin(), c.facets().end(), k.facets().begin(),
                        k.facets().end(), std::back_inserter(out));
    for (const Set& r : bd.facets()) {
        Set f = r;
        f.set(v);
        out.push_back(f);
    }
    return detail::make_complex(std::move(out), c.facet_size());
}

/// Nested right-associated star differences along a strictly increasing
/// flag of faces: st(F1) \ (st(F2) \ ( ... \ st(Fl))).
template <std::size_t W>
BasicPureComplex<W> flag_region(const BasicPureComplex<W>& c,
                                const std::vector<BasicVertexSet<W>>& flags) {
    using Set = BasicVertexSet<W>;
    if (flags.empty()) throw Error(Errc::BadParams, "empty flag");
    for (std::size_t i = 0; i + 1 < flags.size(); ++i)
        if (!(flags[i + 1].contains(flags[i])) || flags[i] == flags[i + 1])
            throw Error(Errc::BadParams, "flag is not a strictly increasing chain");
    for (const Set& f : flags)
        if (!c.is_face(f)) throw Error(Errc::NotAFace, f.to_string());

    std::vector<Set> region;
    for (std::size_t i = flags.size(); i-- > 0;) {
        std::vector<Set> st;
        for (const Set& f : c.facets())
            if (f.contains(flags[i])) st.push_back(f);
        if (i + 1 == flags.size()) {
            region = std::move(st);
        } else {
            std::vector<Set> diff;
            std::set_difference(st.begin(), st.end(), region.begin(), region.end(),
                                std::back_inserter(diff));
            region = std::move(diff);
        }
    }
    if (region.empty()) return BasicPureComplex<W>::void_complex(c.facet_size());
    return detail::make_complex(std::move(region), c.facet_size());
}

/// Checks the given facet order for the shelling property: each facet must
/// meet the union of its predecessors in a nonempty union of its own ridges.
template <std::size_t W>
bool verify_shelling(const BasicPureComplex<W>& c,
                     const std::vector<BasicVertexSet<W>>& order) {
    using Set = BasicVertexSet<W>;
    std::vector<Set> sorted(order);
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), c.facets().begin(), c.facets().end()))
        throw Error(Errc::NotAPermutation, "order is not a permutation of the facet list");

    const int d = c.facet_size();
    for (std::size_t j = 1; j < order.size(); ++j) {
        std::vector<Set> ridges;
        for (std::size_t i = 0; i < j; ++i) {
            const Set x = order[i] & order[j];
            if (x.count() == d - 1) ridges.push_back(x);
        }
        if (ridges.empty()) return false;
        for (std::size_t i = 0; i < j; ++i) {
            const Set x = order[i] & order[j];
            bool covered = false;
            for (const Set& r : ridges)
                if (r.contains(x)) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
    }
    return true;
}

/// Smallest m-subset of the used vertices that is not a face, if any.
template <std::size_t W>
std::optional<BasicVertexSet<W>> neighborly_witness(const BasicPureComplex<W>& c, int m) {
    using Set = BasicVertexSet<W>;
    if (m < 0 || m > c.facet_size())
        throw Error(Errc::BadParams, "m out of range: " + std::to_string(m));
    const std::vector<int> verts = c.used_vertices().labels();
    if (static_cast<int>(verts.size()) < m) return std::nullopt;
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Set s;
        for (int i : idx) s.set(verts[static_cast<std::size_t>(i)]);
        if (!c.is_face(s)) return s;
        int pos = m - 1;
        while (pos >= 0 &&
               idx[static_cast<std::size_t>(pos)] == static_cast<int>(verts.size()) - m + pos)
            --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < m; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return std::nullopt;
}

/// Every m-subset of the vertex set is a face.
template <std::size_t W>
bool is_neighborly(const BasicPureComplex<W>& c, int m) {
    return !neighborly_witness(c, m).has_value();
}

/// An interior face of dimension below dim(c) - m, if any.
template <std::size_t W>
std::optional<BasicVertexSet<W>> stacked_witness(const BasicPureComplex<W>& c, int m) {
    using Set = BasicVertexSet<W>;
    if (m < 0) throw Error(Errc::BadParams, "m must be non-negative");
    BasicPureComplex<W> bd;
    try {
        bd = boundary(c);
    } catch (const Error& e) {
        throw Error(Errc::BoundaryUndefined, e.what());
    }
    const auto faces_bd = all_faces(bd);
    for (const Set& f : all_faces(c)) {
        if (std::binary_search(faces_bd.begin(), faces_bd.end(), f)) continue;
        if (f.count() - 1 < c.dim() - m) return f;
    }
    return std::nullopt;
}

/// All interior faces have dimension at least dim(c) - m.
template <std::size_t W>
bool is_stacked(const BasicPureComplex<W>& c, int m) {
    return !stacked_witness(c, m).has_value();
}

} // namespace sct

#endif // SCT_TOPOLOGY_HPP
