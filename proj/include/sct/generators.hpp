#ifndef SCT_GENERATORS_HPP
#define SCT_GENERATORS_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "sct/canonical_balls.hpp"
#include "sct/complex.hpp"
#include "sct/topology.hpp"

namespace sct {

namespace detail {

/// Sorts, dedupes and attaches the declared universe [1, n] (which may be
/// larger than the covered range; generators report coverage separately).
template <std::size_t W>
BasicPureComplex<W> make_complex_on(int n, std::vector<BasicVertexSet<W>> facets,
                                    int facet_size) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return BasicPureComplex<W>::from_sorted_unchecked(n, facet_size, std::move(facets));
}

/// Runs f on every k-combination of {lo, lo+1, ..., hi}, ascending.
inline void for_each_combination(int lo, int hi, int k,
                                 const std::function<void(const std::vector<int>&)>& f) {
    if (k < 0 || hi - lo + 1 < k) return;
    if (k == 0) {
        static const std::vector<int> kEmpty;
        f(kEmpty);
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = lo + i;
    while (true) {
        f(idx);
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == hi - (k - 1 - pos)) --pos;
        if (pos < 0) return;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

} // namespace detail

/// Boundary complex of the cyclic d-polytope on n vertices.  A d-subset is
/// a facet exactly when every maximal run of consecutive labels that touches
/// neither 1 nor n has even length (Gale's evenness condition).
template <std::size_t W = 16>
BasicPureComplex<W> cyclic_boundary(int n, int d) {
    if (d < 2 || n < d + 1 || n > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams,
                    "cyclic boundary needs 2 <= d < n, got n=" + std::to_string(n) +
                        " d=" + std::to_string(d));
    std::vector<BasicVertexSet<W>> facets;
    detail::for_each_combination(1, n, d, [&](const std::vector<int>& c) {
        for (std::size_t i = 0; i < c.size();) {
            std::size_t j = i;
            while (j + 1 < c.size() && c[j + 1] == c[j] + 1) ++j;
            const bool inner = c[i] != 1 && c[j] != n;
            if (inner && (j - i + 1) % 2 == 1) return;
            i = j + 1;
        }
        facets.push_back(BasicVertexSet<W>::from_labels(c));
    });
    return detail::make_complex_on(n, std::move(facets), d);
}

/// The interval ball on [a, b]: for odd d = 2k-1 its facets are the unions
/// of k pairwise non-adjacent consecutive pairs inside [a, b]; for even d
/// it is the cone over the odd ball on [a, b-1] with apex b.  Degenerate
/// dimensions follow the conventions B([a,b],-1) = {∅} and B([a,b],0) = {b}.
template <std::size_t W = 16>
BasicPureComplex<W> ball_B(int a, int b, int d) {
    if (a < 1 || d < -1 || b - a < d || b > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams, "interval ball needs 1 <= a, b-a >= d, got [" +
                                         std::to_string(a) + "," + std::to_string(b) + "] d=" +
                                         std::to_string(d));
    if (d == -1) return BasicPureComplex<W>::empty_simplex();
    if (d == 0) return BasicPureComplex<W>::simplex(BasicVertexSet<W>::singleton(b));
    if (d % 2 == 0)
        return join(ball_B<W>(a, b - 1, d - 1),
                    BasicPureComplex<W>::simplex(BasicVertexSet<W>::singleton(b)));
    const int k = (d + 1) / 2;
    std::vector<BasicVertexSet<W>> facets;
    // Pair starts p_1 < p_2 < ... < p_k with p_{j+1} >= p_j + 2 correspond to
    // plain combinations via q_j = p_j - (j-1).
    detail::for_each_combination(a, b - k, k, [&](const std::vector<int>& q) {
        BasicVertexSet<W> f;
        for (std::size_t j = 0; j < q.size(); ++j) {
            const int p = q[j] + static_cast<int>(j);
            f.set(p);
            f.set(p + 1);
        }
        facets.push_back(f);
    });
    return detail::make_complex_on(b, std::move(facets), d + 1);
}

/// The equal-gap family: d = 2k facets are k position-pairs with one common
/// gap l <= s; for d = 2k+1 a top vertex within distance s is appended.
template <std::size_t W = 16>
BasicPureComplex<W> family_F(int n, int d, int s) {
    if (d < 2 || s < 1 || n < d || n > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams, "equal-gap family needs d >= 2, s >= 1, n >= d");
    const int k = d / 2;
    const bool odd = d % 2 == 1;
    std::vector<BasicVertexSet<W>> facets;
    for (int gap = 1; gap <= s; ++gap) {
        // p_{j+1} >= p_j + gap + 1 and p_k + gap <= n, via q_j = p_j - (j-1)*gap.
        detail::for_each_combination(1, n - k * gap, k, [&](const std::vector<int>& q) {
            BasicVertexSet<W> f;
            int top = 0;
            for (std::size_t j = 0; j < q.size(); ++j) {
                const int p = q[j] + static_cast<int>(j) * gap;
                f.set(p);
                f.set(p + gap);
                top = p + gap;
            }
            if (!odd) {
                facets.push_back(f);
                return;
            }
            for (int t = top + 1; t <= std::min(n, top + s); ++t) {
                BasicVertexSet<W> g = f;
                g.set(t);
                facets.push_back(g);
            }
        });
    }
    return detail::make_complex_on(n, std::move(facets), d);
}

/// The interval-partition family: [n] is split into a intervals of sizes as
/// equal as possible (larger intervals first); facets take one pair {i, i+l}
/// from each of k distinct intervals, with one common gap l <= s.
template <std::size_t W = 16>
BasicPureComplex<W> family_H(int n, int a, int s, int k) {
    if (k < 2 || a < k || s < 1 || n < 2 * a || n > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams,
                    "interval-partition family needs k >= 2, a >= k, s >= 1, n >= 2a");
    std::vector<std::pair<int, int>> intervals;
    const int base = n / a, rem = n % a;
    int start = 1;
    for (int t = 0; t < a; ++t) {
        const int len = base + (t < rem ? 1 : 0);
        intervals.emplace_back(start, start + len - 1);
        start += len;
    }
    std::vector<BasicVertexSet<W>> facets;
    for (int gap = 1; gap <= s; ++gap) {
        detail::for_each_combination(0, a - 1, k, [&](const std::vector<int>& blocks) {
            std::vector<BasicVertexSet<W>> partial{BasicVertexSet<W>{}};
            for (int bi : blocks) {
                const auto [lo, hi] = intervals[static_cast<std::size_t>(bi)];
                std::vector<BasicVertexSet<W>> next;
                for (int i = lo; i + gap <= hi; ++i)
                    for (const auto& p : partial) {
                        BasicVertexSet<W> f = p;
                        f.set(i);
                        f.set(i + gap);
                        next.push_back(f);
                    }
                partial = std::move(next);
            }
            facets.insert(facets.end(), partial.begin(), partial.end());
        });
    }
    return detail::make_complex_on(n, std::move(facets), 2 * k);
}

/// Facets are unions of pairwise disjoint intervals of sizes J = (j_1, ...,
/// j_m), placed left to right in [n].
template <std::size_t W = 16>
BasicPureComplex<W> gamma_J(int n, const std::vector<int>& J) {
    int d1 = 0;
    for (int j : J) {
        if (j < 2) throw Error(Errc::BadParams, "every interval size in J must be >= 2");
        d1 += j;
    }
    if (J.empty() || n <= d1 - 1 || n > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams, "interval-union ball needs sum(J) <= n");
    std::vector<BasicVertexSet<W>> facets;
    BasicVertexSet<W> acc;
    std::function<void(std::size_t, int)> place = [&](std::size_t t, int lo) {
        if (t == J.size()) {
            facets.push_back(acc);
            return;
        }
        const int len = J[t];
        for (int p = lo; p + len - 1 <= n; ++p) {
            for (int v = p; v < p + len; ++v) acc.set(v);
            place(t + 1, p + len);
            for (int v = p; v < p + len; ++v) acc.reset(v);
        }
    };
    place(0, 1);
    return detail::make_complex_on(n, std::move(facets), d1);
}

/// The sibling sphere: boundary of the interval-union ball whose composition
/// is (2,...,2,3) when dim is odd and (2,...,2,4) when dim is even.
template <std::size_t W = 16>
BasicPureComplex<W> sphere_D(int n, int dim) {
    if (dim < 3 || n < dim + 2 || n > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams, "sibling sphere needs dim >= 3 and n > dim + 1");
    const int d = dim + 1;
    std::vector<int> J((d % 2 == 0) ? (d - 2) / 2 : (d - 3) / 2, 2);
    J.push_back(d % 2 == 0 ? 3 : 4);
    return boundary(gamma_J<W>(n, J));
}

namespace detail {

/// Facets of ball_B(a, b, d), or an empty list when the interval is too
/// short; d = -1 yields the single empty facet when b >= a - 1.
template <std::size_t W>
std::vector<BasicVertexSet<W>> ball_facets_or_empty(int a, int b, int d) {
    if (b - a < d || (d == -1 && b < a - 1)) return {};
    const auto ball = ball_B<W>(a, b, d);
    return {ball.facets().begin(), ball.facets().end()};
}

} // namespace detail

/// The sibling sphere produced directly from its facet templates rather
/// than via a boundary computation, for cross-validation.
template <std::size_t W = 16>
BasicPureComplex<W> facets_of_D_direct(int n, int dim) {
    if (dim < 3 || n < dim + 2 || n > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams, "sibling sphere needs dim >= 3 and n > dim + 1");
    std::vector<BasicVertexSet<W>> facets;
    auto emit = [&](const std::vector<BasicVertexSet<W>>& taus, std::initializer_list<int> add) {
        for (const auto& tau : taus) {
            BasicVertexSet<W> f = tau;
            for (int v : add) f.set(v);
            if (f.count() == dim + 1) facets.push_back(f);
        }
    };
    if (dim % 2 == 1) {
        const int k = (dim + 1) / 2;
        for (int i = 2; i + 2 <= n; ++i) {
            emit(detail::ball_facets_or_empty<W>(1, i - 1, 2 * k - 3), {i, i + 2});
            emit(detail::ball_facets_or_empty<W>(2, i - 1, 2 * k - 5), {1, i, i + 1, i + 2});
        }
        emit(detail::ball_facets_or_empty<W>(1, n - 2, 2 * k - 3), {n - 1, n});
    } else {
        const int k = dim / 2;
        for (int i = 2; i + 3 <= n; ++i) {
            emit(detail::ball_facets_or_empty<W>(1, i - 1, 2 * k - 3), {i, i + 1, i + 3});
            emit(detail::ball_facets_or_empty<W>(1, i - 1, 2 * k - 3), {i, i + 2, i + 3});
            emit(detail::ball_facets_or_empty<W>(2, i - 1, 2 * k - 5), {1, i, i + 1, i + 2, i + 3});
        }
        emit(detail::ball_facets_or_empty<W>(1, n - 3, 2 * k - 3), {n - 2, n - 1, n});
    }
    return detail::make_complex_on(n, std::move(facets), dim + 1);
}

/// The sewing ball: join of the top simplex ({n-1,n} for odd dim, {n-2,n-1,n}
/// for even dim) with an interval ball on the remaining prefix.
template <std::size_t W = 16>
BasicPureComplex<W> ball_K(int n, int dim) {
    if (dim < 3 || n < dim + 2 || n > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams, "sewing ball needs dim >= 3 and n > dim + 1");
    if (dim % 2 == 1) {
        const int k = (dim + 1) / 2;
        return join(BasicPureComplex<W>::simplex(BasicVertexSet<W>::range(n - 1, n)),
                    ball_B<W>(1, n - 2, 2 * k - 3));
    }
    const int k = dim / 2;
    return join(BasicPureComplex<W>::simplex(BasicVertexSet<W>::range(n - 2, n)),
                ball_B<W>(1, n - 3, 2 * k - 3));
}

enum class SphereVariant { Lambda, Pi, Lambda7 };

/// Cyclic boundary with every shifted interval ball replaced by the matching
/// shifted canonical ball, block by block.
template <std::size_t W = 16>
BasicPureComplex<W> retriangulated_sphere(SphereVariant variant, int n) {
    int block = 0, dim = 0;
    CanonicalBall ball{};
    switch (variant) {
        case SphereVariant::Lambda: block = 8, dim = 3, ball = CanonicalBall::L8; break;
        case SphereVariant::Pi: block = 11, dim = 5, ball = CanonicalBall::L11; break;
        case SphereVariant::Lambda7: block = 7, dim = 3, ball = CanonicalBall::L7; break;
    }
    if (n < block || n % block != 0 || n > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams, "vertex count must be a positive multiple of " +
                                         std::to_string(block));
    auto c = cyclic_boundary<W>(n, dim + 1);
    for (int m = 0; m < n / block; ++m) {
        const auto old_ball = relabel_shift(ball_B<W>(1, block, dim), m * block);
        const auto new_ball = relabel_shift(canonical_ball<W>(ball), m * block);
        c = replace_ball(c, old_ball, new_ball);
    }
    return c;
}

enum class FlipTargetVariant { Even4k, Odd4kMinus1 };

/// The long interval ball with its leading sub-balls carved out block by
/// block and straight "diagonal" facets inserted instead: {1,3,...,4k-1} and
/// {2,4,...,4k} per block of width 4k in the even variant, {1,3,...,4k-1}
/// per block of width 4k-1 in the odd variant.
template <std::size_t W = 16>
BasicPureComplex<W> flip_target_complex(int n, int k, FlipTargetVariant variant) {
    if (k < 2 || n < 1) throw Error(Errc::BadParams, "needs k >= 2 and n >= 1");
    const int block = variant == FlipTargetVariant::Even4k ? 4 * k : 4 * k - 1;
    const int total = block * n;
    if (total > BasicVertexSet<W>::capacity())
        throw Error(Errc::BadParams, "vertex count exceeds the label capacity");
    const auto base = ball_B<W>(1, total, 2 * k - 1);
    const auto block_ball = ball_B<W>(1, block, 2 * k - 1);
    std::vector<BasicVertexSet<W>> removed;
    for (int m = 0; m < n; ++m)
        for (const auto& f : block_ball.facets()) {
            BasicVertexSet<W> g;
            f.for_each([&](int v) { g.set(v + m * block); });
            removed.push_back(g);
        }
    std::sort(removed.begin(), removed.end());
    std::vector<BasicVertexSet<W>> facets;
    std::set_difference(base.facets().begin(), base.facets().end(), removed.begin(),
                        removed.end(), std::back_inserter(facets));
    for (int m = 0; m < n; ++m) {
        BasicVertexSet<W> odd;
        for (int v = 1; v <= 4 * k - 1; v += 2) odd.set(v + m * block);
        facets.push_back(odd);
        if (variant == FlipTargetVariant::Even4k) {
            BasicVertexSet<W> even;
            for (int v = 2; v <= 4 * k; v += 2) even.set(v + m * block);
            facets.push_back(even);
        }
    }
    return detail::make_complex_on(total, std::move(facets), 2 * k);
}

/// Iterated batch flips on the 4-dimensional sibling sphere: step m flips
/// the star of {i-m, i+2, i+4} onto {i-m-1, i+1, i+5} simultaneously for all
/// admissible sites i.  Every site is validated before the batch is applied.
template <std::size_t W = 16>
BasicPureComplex<W> gamma_nk(int n, int k) {
    if (n < 8 || k < 0 || k > n - 6)
        throw Error(Errc::BadParams, "needs n >= 8 and 0 <= k <= n - 6");
    auto c = sphere_D<W>(n, 4);
    for (int m = 0; m < k; ++m) {
        std::vector<BasicVertexSet<W>> removed, added;
        for (int i = m + 2; i <= n - 5; ++i) {
            const BasicVertexSet<W> a{i - m, i + 2, i + 4};
            const BasicVertexSet<W> b{i - m - 1, i + 1, i + 5};
            if (c.is_face(b))
                throw Error(Errc::FlipPreconditionFailed,
                            b.to_string() + " is already a face at step " + std::to_string(m));
            if (!c.is_face(a))
                throw Error(Errc::FlipPreconditionFailed,
                            a.to_string() + " is not a face at step " + std::to_string(m));
            std::vector<BasicVertexSet<W>> star_facets;
            for (const auto& f : c.facets())
                if (f.contains(a)) star_facets.push_back(f);
            if (star_facets != detail::join_simplex_boundary_facets(a, b))
                throw Error(Errc::FlipPreconditionFailed,
                            "star of " + a.to_string() + " is not the expected join at step " +
                                std::to_string(m));
            removed.insert(removed.end(), star_facets.begin(), star_facets.end());
            a.for_each([&](int v) {
                BasicVertexSet<W> f = a | b;
                f.reset(v);
                added.push_back(f);
            });
        }
        std::sort(removed.begin(), removed.end());
        if (std::adjacent_find(removed.begin(), removed.end()) != removed.end())
            throw Error(Errc::FlipPreconditionFailed, "flip stars share a facet");
        std::vector<BasicVertexSet<W>> facets;
        std::set_difference(c.facets().begin(), c.facets().end(), removed.begin(), removed.end(),
                            std::back_inserter(facets));
        facets.insert(facets.end(), added.begin(), added.end());
        c = detail::make_complex_on(n, std::move(facets), c.facet_size());
    }
    return c;
}

/// Names one generated family together with its parameters, as used by the
/// command-line interface and the experiment harness.
struct ConstructionSpec {
    enum class Family {
        Cyclic,
        BBall,
        FFamily,
        HFamily,
        GammaJ,
        DSphere,
        DDirect,
        KBall,
        L7,
        L8,
        L11,
        Lambda,
        Lambda7,
        Pi,
        FlipTarget,
        GammaNK,
    };

    Family family{};
    int n = 0;
    int d = 0;
    int dim = 0;
    int s = 0;
    int a = 1;
    int k = 0;
    std::vector<int> J;
    std::string variant;
};

inline std::string family_name(ConstructionSpec::Family f) {
    using F = ConstructionSpec::Family;
    switch (f) {
        case F::Cyclic: return "cyclic";
        case F::BBall: return "B";
        case F::FFamily: return "F";
        case F::HFamily: return "H";
        case F::GammaJ: return "gammaJ";
        case F::DSphere: return "D";
        case F::DDirect: return "Ddirect";
        case F::KBall: return "K";
        case F::L7: return "L7";
        case F::L8: return "L8";
        case F::L11: return "L11";
        case F::Lambda: return "lambda";
        case F::Lambda7: return "lambda7";
        case F::Pi: return "pi";
        case F::FlipTarget: return "fliptarget";
        case F::GammaNK: return "gammank";
    }
    return "unknown";
}

template <std::size_t W = 16>
BasicPureComplex<W> build_construction(const ConstructionSpec& spec) {
    using F = ConstructionSpec::Family;
    switch (spec.family) {
        case F::Cyclic: return cyclic_boundary<W>(spec.n, spec.d);
        case F::BBall: return ball_B<W>(spec.a, spec.n, spec.d);
        case F::FFamily: return family_F<W>(spec.n, spec.d, spec.s);
        case F::HFamily: return family_H<W>(spec.n, spec.a, spec.s, spec.k);
        case F::GammaJ: return gamma_J<W>(spec.n, spec.J);
        case F::DSphere: return sphere_D<W>(spec.n, spec.dim);
        case F::DDirect: return facets_of_D_direct<W>(spec.n, spec.dim);
        case F::KBall: return ball_K<W>(spec.n, spec.dim);
        case F::L7: return canonical_ball<W>(CanonicalBall::L7);
        case F::L8: return canonical_ball<W>(CanonicalBall::L8);
        case F::L11: return canonical_ball<W>(CanonicalBall::L11);
        case F::Lambda: return retriangulated_sphere<W>(SphereVariant::Lambda, spec.n);
        case F::Lambda7: return retriangulated_sphere<W>(SphereVariant::Lambda7, spec.n);
        case F::Pi: return retriangulated_sphere<W>(SphereVariant::Pi, spec.n);
        case F::FlipTarget:
            return flip_target_complex<W>(spec.n, spec.k,
                                          spec.variant == "odd4kminus1"
                                              ? FlipTargetVariant::Odd4kMinus1
                                              : FlipTargetVariant::Even4k);
        case F::GammaNK: return gamma_nk<W>(spec.n, spec.k);
    }
    throw Error(Errc::BadParams, "unknown construction family");
}

} // namespace sct

#endif // SCT_GENERATORS_HPP
