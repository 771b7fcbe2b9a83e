#ifndef SCT_TRANSVERSAL_HPP
#define SCT_TRANSVERSAL_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <thread>
#include <vector>

#include "sct/complex.hpp"

namespace sct {

struct SolveBudget {
    std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
    double time_limit = std::numeric_limits<double>::infinity(); ///< seconds
    int threads = 1;
};

/// A hitting set together with the certificates the search produced.  When
/// optimal is false the true transversal number lies in
/// [lower_bound, upper_bound] and vertices carries the best set found.
template <std::size_t W = 16>
struct BasicTransversal {
    BasicVertexSet<W> vertices;
    int size = 0;
    bool optimal = false;
    int lower_bound = 0;
    int upper_bound = 0;
    std::uint64_t nodes = 0;
};

using Transversal = BasicTransversal<>;

template <std::size_t W>
bool verify_transversal(const BasicPureComplex<W>& c, const BasicVertexSet<W>& t) {
    for (const auto& f : c.facets())
        if (!f.intersects(t)) return false;
    return true;
}

namespace detail {

/// Immutable per-instance data: facets as vertex sets plus, per vertex, the
/// mask of facet indices containing it.
template <std::size_t W>
struct HittingInstance {
    std::vector<BasicVertexSet<W>> facets;
    std::vector<int> verts;
    BasicVertexSet<W> vert_set;
    int words = 0;                       // words per facet-index mask
    std::vector<std::uint64_t> masks;    // (max_label + 1) rows of `words`

    explicit HittingInstance(const BasicPureComplex<W>& c)
        : facets(c.facets().begin(), c.facets().end()),
          verts(c.used_vertices().labels()),
          vert_set(c.used_vertices()) {
        const int m = static_cast<int>(facets.size());
        words = (m + 63) / 64;
        const int rows = vert_set.max_label() + 1;
        masks.assign(static_cast<std::size_t>(rows) * words, 0);
        for (int i = 0; i < m; ++i)
            facets[static_cast<std::size_t>(i)].for_each([&](int v) {
                masks[static_cast<std::size_t>(v) * words + static_cast<std::size_t>(i >> 6)] |=
                    std::uint64_t{1} << (i & 63);
            });
    }

    const std::uint64_t* row(int v) const {
        return masks.data() + static_cast<std::size_t>(v) * words;
    }
};

/// Mutable search node.  `unhit` tracks facet indices not yet met by
/// `included`; `excluded` vertices are barred from future inclusion.
template <std::size_t W>
struct HittingState {
    std::vector<std::uint64_t> unhit;
    BasicVertexSet<W> included;
    BasicVertexSet<W> excluded;
    int included_count = 0;
    int unhit_count = 0;
};

template <std::size_t W>
class HittingSearch {
public:
    using Set = BasicVertexSet<W>;
    using State = HittingState<W>;

    HittingSearch(const HittingInstance<W>& inst, const SolveBudget& budget,
                  std::chrono::steady_clock::time_point deadline)
        : inst_(inst), budget_(budget), deadline_(deadline) {}

    State root_state() const {
        State s;
        s.unhit.assign(static_cast<std::size_t>(inst_.words), 0);
        const int m = static_cast<int>(inst_.facets.size());
        for (int i = 0; i < m; ++i)
            s.unhit[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
        s.unhit_count = m;
        return s;
    }

    // Shared across worker threads.  best_value is the pruning bound; the
    // set and its size are only ever updated together under the mutex.
    std::atomic<int> best_value{std::numeric_limits<int>::max()};
    std::mutex best_mutex;
    Set best_set;
    int best_set_size = std::numeric_limits<int>::max();
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    std::atomic<bool> found{false}; // decision-mode success flag

    void seed_incumbent(const Set& t, int size) {
        best_value.store(size);
        best_set = t;
        best_set_size = size;
    }

    void include(State& s, int v) const {
        s.included.set(v);
        s.included_count += 1;
        const std::uint64_t* r = inst_.row(v);
        for (int w = 0; w < inst_.words; ++w) {
            s.unhit_count -= std::popcount(s.unhit[static_cast<std::size_t>(w)] & r[w]);
            s.unhit[static_cast<std::size_t>(w)] &= ~r[w];
        }
    }

    /// Unit propagation plus vertex domination, to a fixed point.
    /// Returns false when some facet has no admissible vertex left.
    bool reduce(State& s) const {
        bool changed = true;
        while (changed) {
            changed = false;
            // Facets with one admissible vertex force it; empty ones fail.
            for (int idx : unhit_indices(s)) {
                if (!((s.unhit[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1))
                    continue; // met by a forced inclusion earlier in this pass
                const Set residual = inst_.facets[static_cast<std::size_t>(idx)] - s.excluded;
                const int rc = residual.count();
                if (rc == 0) return false;
                if (rc == 1) {
                    include(s, residual.min_label());
                    changed = true;
                }
            }
            if (changed || s.unhit_count == 0) continue;
            // A vertex whose admissible facets all contain another admissible
            // vertex can be dropped; ties keep the smaller label.
            const Set free = inst_.vert_set - s.included - s.excluded;
            std::vector<int> cand = free.labels();
            for (int u : cand) {
                if (s.excluded.test(u)) continue;
                bool drop = false;
                const std::uint64_t* ru = inst_.row(u);
                bool u_empty = true;
                for (int w = 0; w < inst_.words && u_empty; ++w)
                    if (ru[w] & s.unhit[static_cast<std::size_t>(w)]) u_empty = false;
                if (u_empty) {
                    drop = true;
                } else {
                    for (int v : cand) {
                        if (v == u || s.excluded.test(v)) continue;
                        const std::uint64_t* rv = inst_.row(v);
                        bool subset = true, equal = true;
                        for (int w = 0; w < inst_.words && subset; ++w) {
                            const std::uint64_t mu = ru[w] & s.unhit[static_cast<std::size_t>(w)];
                            const std::uint64_t mv = rv[w] & s.unhit[static_cast<std::size_t>(w)];
                            if (mu & ~mv) subset = false;
                            if (mu != mv) equal = false;
                        }
                        if (subset && (!equal || v < u)) {
                            drop = true;
                            break;
                        }
                    }
                }
                if (drop) {
                    s.excluded.set(u);
                    changed = true;
                }
            }
        }
        return true;
    }

    /// Greedy packing of pairwise-disjoint admissible facets; each one needs
    /// its own hitter.  Stops once `cap` disjoint facets are found.
    int packing_bound(const State& s, int cap) const {
        if (cap <= 0) return s.unhit_count > 0 ? 1 : 0;
        Set covered;
        int packed = 0;
        for (int idx : unhit_indices(s)) {
            const Set residual = inst_.facets[static_cast<std::size_t>(idx)] - s.excluded;
            if (residual.intersects(covered)) continue;
            covered |= residual;
            if (++packed >= cap) break;
        }
        return packed;
    }

    /// True when even the `budget` highest-degree vertices cannot meet all
    /// remaining facets.
    bool degree_sum_insufficient(const State& s, int budget) const {
        if (budget >= s.unhit_count) return false;
        std::vector<int> degs;
        const Set free = inst_.vert_set - s.included - s.excluded;
        free.for_each([&](int v) {
            const std::uint64_t* r = inst_.row(v);
            int d = 0;
            for (int w = 0; w < inst_.words; ++w)
                d += std::popcount(r[w] & s.unhit[static_cast<std::size_t>(w)]);
            degs.push_back(d);
        });
        budget = std::min(budget, static_cast<int>(degs.size()));
        if (budget <= 0) return s.unhit_count > 0;
        std::nth_element(degs.begin(), degs.begin() + (budget - 1), degs.end(),
                         std::greater<int>());
        long long sum = 0;
        for (int i = 0; i < budget; ++i) sum += degs[static_cast<std::size_t>(i)];
        return sum < s.unhit_count;
    }

    bool out_of_budget() {
        const std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > budget_.node_limit) {
            aborted.store(true, std::memory_order_relaxed);
            return true;
        }
        if ((n & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
            aborted.store(true, std::memory_order_relaxed);
            return true;
        }
        return aborted.load(std::memory_order_relaxed);
    }

    /// Branch facet: an unmet facet with the fewest admissible vertices.
    int pick_branch_facet(const State& s) const {
        int best_idx = -1, best_rc = std::numeric_limits<int>::max();
        for (int idx : unhit_indices(s)) {
            const int rc =
                (inst_.facets[static_cast<std::size_t>(idx)] - s.excluded).count();
            if (rc < best_rc) {
                best_rc = rc;
                best_idx = idx;
            }
        }
        return best_idx;
    }

    /// Minimization run; updates best_value / best_set.
    void search_min(State s) {
        if (out_of_budget()) return;
        if (!reduce(s)) return;
        if (s.unhit_count == 0) {
            offer_solution(s);
            return;
        }
        const int limit = best_value.load(std::memory_order_relaxed) - 1;
        const int room = limit - s.included_count;
        if (room < 0) return;
        if (s.included_count + packing_bound(s, room + 1) > limit) return;
        if (degree_sum_insufficient(s, room)) return;
        const int bf = pick_branch_facet(s);
        const Set residual = inst_.facets[static_cast<std::size_t>(bf)] - s.excluded;
        std::vector<int> order = residual.labels();
        for (int v : order) {
            State child = s;
            include(child, v);
            search_min(std::move(child));
            if (aborted.load(std::memory_order_relaxed)) return;
            s.excluded.set(v);
        }
    }

    /// Decision run: is there a transversal of size <= target extending the
    /// already-included vertices of s?
    void search_decision(State s, int target) {
        if (found.load(std::memory_order_relaxed) || out_of_budget()) return;
        if (!reduce(s)) return;
        if (s.included_count > target) return;
        if (s.unhit_count == 0) {
            found.store(true, std::memory_order_relaxed);
            return;
        }
        const int room = target - s.included_count;
        if (s.included_count + packing_bound(s, room + 1) > target) return;
        if (degree_sum_insufficient(s, room)) return;
        const int bf = pick_branch_facet(s);
        const Set residual = inst_.facets[static_cast<std::size_t>(bf)] - s.excluded;
        for (int v : residual.labels()) {
            State child = s;
            include(child, v);
            search_decision(std::move(child), target);
            if (found.load(std::memory_order_relaxed) ||
                aborted.load(std::memory_order_relaxed))
                return;
            s.excluded.set(v);
        }
    }

private:
    void offer_solution(const State& s) {
        int cur = best_value.load(std::memory_order_relaxed);
        while (s.included_count < cur &&
               !best_value.compare_exchange_weak(cur, s.included_count)) {
        }
        std::lock_guard<std::mutex> lock(best_mutex);
        if (s.included_count < best_set_size) {
            best_set = s.included;
            best_set_size = s.included_count;
        }
    }

    std::vector<int> unhit_indices(const State& s) const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(s.unhit_count));
        for (int w = 0; w < inst_.words; ++w) {
            std::uint64_t bits = s.unhit[static_cast<std::size_t>(w)];
            while (bits) {
                out.push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        return out;
    }

    const HittingInstance<W>& inst_;
    SolveBudget budget_;
    std::chrono::steady_clock::time_point deadline_;
};

} // namespace detail

/// Peeling heuristic: repeatedly removes the vertex that meets the most
/// remaining facets (smallest label on ties) until no facet survives.
template <std::size_t W>
BasicTransversal<W> greedy_transversal(const BasicPureComplex<W>& c) {
    using Set = BasicVertexSet<W>;
    if (c.is_void()) return {Set{}, 0, true, 0, 0, 0};
    if (c.facet_size() == 0)
        throw Error(Errc::BadParams, "the empty facet cannot be hit");
    const detail::HittingInstance<W> inst(c);
    std::vector<char> alive(inst.facets.size(), 1);
    int remaining = static_cast<int>(inst.facets.size());
    Set chosen;
    while (remaining > 0) {
        int best_v = 0, best_deg = -1;
        for (int v : inst.verts) {
            if (chosen.test(v)) continue;
            int deg = 0;
            for (std::size_t i = 0; i < inst.facets.size(); ++i)
                if (alive[i] && inst.facets[i].test(v)) ++deg;
            if (deg > best_deg) {
                best_deg = deg;
                best_v = v;
            }
        }
        chosen.set(best_v);
        for (std::size_t i = 0; i < inst.facets.size(); ++i)
            if (alive[i] && inst.facets[i].test(best_v)) {
                alive[i] = 0;
                --remaining;
            }
    }
    BasicTransversal<W> t;
    t.vertices = chosen;
    t.size = chosen.count();
    t.upper_bound = t.size;
    // Disjoint facets each need their own hitter.
    Set covered;
    int packed = 0;
    for (const auto& f : inst.facets) {
        if (f.intersects(covered)) continue;
        covered |= f;
        ++packed;
    }
    t.lower_bound = packed;
    t.optimal = (t.lower_bound == t.size);
    return t;
}

/// Exact minimum transversal via branch and bound with unit propagation,
/// vertex domination, a disjoint-facet packing bound and a degree-sum bound.
/// The certificate is canonical: once the optimal value is proven, the
/// lexicographically smallest optimal set is rebuilt by prefix-fixing
/// decision runs, so results do not depend on the thread count.
template <std::size_t W>
BasicTransversal<W> exact_transversal(const BasicPureComplex<W>& c,
                                      const SolveBudget& budget = {}) {
    using Set = BasicVertexSet<W>;
    if (c.is_void()) return {Set{}, 0, true, 0, 0, 0};
    if (c.facet_size() == 0)
        throw Error(Errc::BadParams, "the empty facet cannot be hit");

    const auto deadline =
        std::isfinite(budget.time_limit)
            ? std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.time_limit))
            : std::chrono::steady_clock::time_point::max();

    const detail::HittingInstance<W> inst(c);
    detail::HittingSearch<W> search(inst, budget, deadline);

    const auto greedy = greedy_transversal(c);
    search.seed_incumbent(greedy.vertices, greedy.size);

    auto root = search.root_state();
    const int root_lb = search.reduce(root)
                            ? root.included_count + search.packing_bound(
                                                        root, greedy.size - root.included_count)
                            : greedy.size;

    const int threads = std::max(1, budget.threads);
    if (threads == 1 || c.f0() <= 2) {
        search.search_min(search.root_state());
    } else {
        // Fan the root out into independent subtrees and solve them in a
        // small pool; the incumbent value is shared through an atomic cell.
        std::vector<detail::HittingState<W>> tasks;
        std::vector<detail::HittingState<W>> frontier{search.root_state()};
        const std::size_t want = static_cast<std::size_t>(threads) * 8;
        while (!frontier.empty() && frontier.size() + tasks.size() < want) {
            auto s = std::move(frontier.back());
            frontier.pop_back();
            if (!search.reduce(s)) continue;
            if (s.unhit_count == 0) {
                search.search_min(std::move(s)); // records the solution
                continue;
            }
            const int bf = search.pick_branch_facet(s);
            const Set residual = inst.facets[static_cast<std::size_t>(bf)] - s.excluded;
            for (int v : residual.labels()) {
                detail::HittingState<W> child = s;
                search.include(child, v);
                frontier.push_back(std::move(child));
                s.excluded.set(v);
            }
        }
        tasks.insert(tasks.end(), std::make_move_iterator(frontier.begin()),
                     std::make_move_iterator(frontier.end()));
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    search.search_min(tasks[i]);
                }
            });
        for (auto& th : pool) th.join();
    }

    BasicTransversal<W> result;
    result.nodes = search.nodes.load();
    if (search.aborted.load()) {
        std::lock_guard<std::mutex> lock(search.best_mutex);
        result.vertices = search.best_set;
        result.size = search.best_set_size;
        result.optimal = false;
        result.lower_bound = std::min(root_lb, result.size);
        result.upper_bound = result.size;
        return result;
    }

    const int optimum = search.best_value.load();
    // Canonical certificate: grow the lexicographically smallest prefix that
    // still extends to a transversal of the proven optimal size.
    Set prefix;
    int prefix_size = 0;
    for (int v : inst.verts) {
        if (prefix_size == optimum) break;
        search.found.store(false);
        auto s = search.root_state();
        prefix.set(v);
        prefix.for_each([&](int u) {
            if (!s.included.test(u)) search.include(s, u);
        });
        search.search_decision(std::move(s), optimum);
        if (search.aborted.load()) {
            std::lock_guard<std::mutex> lock(search.best_mutex);
            result.vertices = search.best_set;
            result.size = optimum;
            result.optimal = true;
            result.lower_bound = optimum;
            result.upper_bound = optimum;
            result.nodes = search.nodes.load();
            return result;
        }
        if (search.found.load()) {
            ++prefix_size;
        } else {
            prefix.reset(v);
        }
    }

    result.vertices = prefix;
    result.size = prefix_size;
    result.optimal = true;
    result.lower_bound = optimum;
    result.upper_bound = optimum;
    result.nodes = search.nodes.load();
    return result;
}

/// Largest vertex set containing no facet; complements the transversal
/// number over the covered vertices.
template <std::size_t W>
int independence_number(const BasicPureComplex<W>& c, const SolveBudget& budget = {}) {
    const auto t = exact_transversal(c, budget);
    if (!t.optimal)
        throw Error(Errc::BudgetExhausted,
                    "bounds [" + std::to_string(t.lower_bound) + "," +
                        std::to_string(t.upper_bound) + "] only");
    return c.f0() - t.size;
}

/// Closed-form upper bounds on the transversal number of a pure complex:
/// the peeling bound n + 1 - n / (e * m^(1/d)) and, when the edge count is
/// known, the degeneracy-style bound n - n / (2*edges/n + 1).
struct BoundReport {
    double pure_upper = 0.0;
    std::optional<double> turan_upper;
};

inline BoundReport bound_formulas(long long n, long long m, int d,
                                  std::optional<long long> edges = {}) {
    if (n <= 0 || m <= 0 || d <= 0)
        throw Error(Errc::BadParams, "n, m, d must be positive");
    BoundReport r;
    r.pure_upper = static_cast<double>(n) + 1.0 -
                   static_cast<double>(n) /
                       (std::numbers::e * std::pow(static_cast<double>(m), 1.0 / d));
    if (edges) {
        if (*edges <= 0) throw Error(Errc::BadParams, "edge count must be positive");
        r.turan_upper = static_cast<double>(n) -
                        static_cast<double>(n) /
                            (2.0 * static_cast<double>(*edges) / static_cast<double>(n) + 1.0);
    }
    return r;
}

} // namespace sct

#endif // SCT_TRANSVERSAL_HPP
