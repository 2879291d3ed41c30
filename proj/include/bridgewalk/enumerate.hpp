#pragma once

// Exhaustive counting of self-avoiding walks, bridges, and half-space walks
// (and their height-reversed versions) by exact length.  One depth-first
// search per length keeps budget semantics simple: a table is either complete
// through some length or not reported for that length at all.  Counting is
// split across workers at depth one; merging sums exact integers, so results
// are identical for any worker count.

#include "bridgewalk/walk.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <optional>

namespace bridgewalk {

enum class WalkClass { Saw, Bridge, ReversedBridge, Hsw, ReversedHsw };

inline const char* walk_class_name(WalkClass c) {
    switch (c) {
        case WalkClass::Saw: return "saw";
        case WalkClass::Bridge: return "bridge";
        case WalkClass::ReversedBridge: return "reversed-bridge";
        case WalkClass::Hsw: return "hsw";
        case WalkClass::ReversedHsw: return "reversed-hsw";
    }
    return "?";
}

inline std::optional<WalkClass> parse_walk_class(std::string_view s) {
    for (WalkClass c : {WalkClass::Saw, WalkClass::Bridge, WalkClass::ReversedBridge,
                        WalkClass::Hsw, WalkClass::ReversedHsw})
        if (s == walk_class_name(c)) return c;
    return std::nullopt;
}

struct EnumOptions {
    int workers = 1;
    std::optional<double> budget_seconds;  // soft cap, checked between lengths
};

struct CountTable {
    WalkClass cls{};
    int start_orbit = 0;
    int n_requested = 0;
    bool partial = false;            // budget ran out before n_requested
    std::vector<BigInt> counts;      // counts[n] for completed lengths

    int n_complete() const { return int(counts.size()) - 1; }
};

struct SpanTable {
    bool reversed = false;
    int start_orbit = 0;
    int n_requested = 0;
    bool partial = false;
    std::optional<int> span_cap;     // when set, spans > cap were pruned away
    std::vector<std::vector<BigInt>> rows;  // rows[n][a]

    int n_complete() const { return int(rows.size()) - 1; }
    const BigInt& at(int n, int a) const {
        static const BigInt zero{0};
        if (n < 0 || n >= int(rows.size())) throw std::out_of_range("span row");
        if (a < 0 || a >= int(rows[n].size())) return zero;
        return rows[n][a];
    }
    BigInt row_total(int n) const {
        BigInt t = 0;
        for (const auto& c : rows.at(n)) t += c;
        return t;
    }
};

namespace detail {

enum class Mode { Free, HalfSpace, BridgeLike };

struct SearchControl {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::atomic<bool>* stop = nullptr;

    bool expired() {
        if (stop && stop->load(std::memory_order_relaxed)) return true;
        if (deadline && std::chrono::steady_clock::now() > *deadline) {
            if (stop) stop->store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }
};

// Depth-first search over self-avoiding extensions of a fixed prefix.
// Heights are tracked relative to the root and multiplied by `sign`, which
// folds the reversed classes into the forward logic.  Sink::leaf(end_rel) is
// called for every admissible walk of exact length n.
template <class M, class Sink>
class LevelSearch {
  public:
    using V = typename M::Vertex;

    LevelSearch(const M& m, Mode mode, int sign, int n, std::optional<int> span_cap,
                SearchControl ctl, Sink& sink)
        : m_(m),
          mode_(mode),
          sign_(sign),
          n_(n),
          cap_(span_cap ? *span_cap : std::numeric_limits<int>::max()),
          d_(m.height_lipschitz()),
          ctl_(ctl),
          sink_(sink) {
        visited_.reserve(std::size_t(2 * (n + 2)));
    }

    // Runs below a prefix path (prefix.back() not yet expanded).  Returns
    // false if the search was cut short by the budget.
    bool run(const std::vector<V>& prefix, int base_height) {
        visited_.clear();
        for (const V& v : prefix) visited_.insert(v);
        base_ = base_height;
        int rel = rel_height(prefix.back());
        int max_rel = 0;
        for (const V& v : prefix) max_rel = std::max(max_rel, rel_height(v));
        return descend(prefix.back(), int(prefix.size()) - 1, rel, max_rel);
    }

  private:
    int rel_height(const V& v) const { return sign_ * (m_.height(v) - base_); }

    bool admissible(int rel, int depth, int max_rel) const {
        if (mode_ == Mode::Free) return true;
        if (rel <= 0) return false;
        if (mode_ == Mode::BridgeLike) {
            if (rel > cap_) return false;
            // the end must attain the running maximum; prune when even a
            // maximal climb over the remaining steps cannot get back up
            if (max_rel > rel + d_ * (n_ - depth)) return false;
        }
        return true;
    }

    bool leaf_ok(int rel, int max_rel) const {
        return mode_ != Mode::BridgeLike || rel == max_rel;
    }

    bool descend(const V& v, int depth, int rel, int max_rel) {
        if (depth == n_) {
            if (leaf_ok(rel, max_rel)) sink_.leaf(rel);
            return true;
        }
        if (++tick_ % 8192 == 0 && ctl_.expired()) return false;

        Neighbor<V> buf[kMaxNeighbors];
        int k = m_.neighbors(v, buf);
        for (int i = 0; i < k; ++i) {
            const V& u = buf[i].vertex;
            int rel_u = rel_height(u);
            if (!admissible(rel_u, depth + 1, max_rel)) continue;
            if (!visited_.insert(u).second) continue;
            bool ok = descend(u, depth + 1, rel_u, std::max(max_rel, rel_u));
            visited_.erase(u);
            if (!ok) return false;
        }
        return true;
    }

    const M& m_;
    Mode mode_;
    int sign_;
    int n_;
    int cap_;
    int d_;
    int base_ = 0;
    SearchControl ctl_;
    Sink& sink_;
    std::unordered_set<V, VertexHash<V>> visited_;
    unsigned tick_ = 0;
};

inline std::pair<Mode, int> class_mode(WalkClass c) {
    switch (c) {
        case WalkClass::Saw: return {Mode::Free, +1};
        case WalkClass::Hsw: return {Mode::HalfSpace, +1};
        case WalkClass::ReversedHsw: return {Mode::HalfSpace, -1};
        case WalkClass::Bridge: return {Mode::BridgeLike, +1};
        case WalkClass::ReversedBridge: return {Mode::BridgeLike, -1};
    }
    return {Mode::Free, +1};
}

struct CountSink {
    BigInt total{0};
    void leaf(int) { ++total; }
};

struct SpanSink {
    std::vector<BigInt> by_span;
    void leaf(int rel) {
        if (rel >= int(by_span.size())) by_span.resize(rel + 1);
        ++by_span[rel];
    }
};

// Counts walks of exact length n with one sink per depth-1 branch; returns
// the per-branch sinks, or nullopt if the budget expired.  Leaves of the
// length-0 level are handled by the caller.
template <class M, class Sink>
std::optional<std::vector<Sink>> run_level(const M& m, const typename M::Vertex& root,
                                           Mode mode, int sign, int n,
                                           std::optional<int> span_cap, int workers,
                                           SearchControl ctl) {
    using V = typename M::Vertex;
    Neighbor<V> buf[kMaxNeighbors];
    int k = m.neighbors(root, buf);
    int base = m.height(root);

    std::vector<V> starts;
    for (int i = 0; i < k; ++i) {
        const V& u = buf[i].vertex;
        int rel = sign * (m.height(u) - base);
        if (mode != Mode::Free) {
            if (rel <= 0) continue;
            if (mode == Mode::BridgeLike && span_cap && rel > *span_cap) continue;
        }
        starts.push_back(u);
    }

    std::vector<Sink> sinks(starts.size());
    auto run_branch = [&](std::size_t i) {
        LevelSearch<M, Sink> search(m, mode, sign, n, span_cap, ctl, sinks[i]);
        return search.run({root, starts[i]}, base);
    };

    bool complete = true;
    if (workers <= 1 || starts.size() <= 1) {
        for (std::size_t i = 0; i < starts.size() && complete; ++i)
            complete = run_branch(i);
    } else {
        int w = std::min<int>(workers, int(starts.size()));
        std::vector<std::future<bool>> futs;
        futs.reserve(w);
        for (int t = 0; t < w; ++t) {
            futs.push_back(std::async(std::launch::async, [&, t] {
                bool ok = true;
                for (std::size_t i = t; i < starts.size(); i += std::size_t(w))
                    ok = run_branch(i) && ok;
                return ok;
            }));
        }
        for (auto& f : futs) complete = f.get() && complete;
    }
    if (!complete) return std::nullopt;
    return sinks;
}

inline SearchControl make_control(const EnumOptions& opts, std::atomic<bool>* stop) {
    SearchControl ctl;
    ctl.stop = stop;
    if (opts.budget_seconds)
        ctl.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*opts.budget_seconds));
    return ctl;
}

}  // namespace detail

// Exact counts by length, up to n_max.  The length-0 walk belongs to every
// class, so counts[0] == 1 on all models.
template <class M>
CountTable count_walks(const M& m, const typename M::Vertex& start, WalkClass cls,
                       int n_max, const EnumOptions& opts = {}) {
    auto [mode, sign] = detail::class_mode(cls);
    CountTable table;
    table.cls = cls;
    table.start_orbit = m.orbit(start);
    table.n_requested = n_max;

    std::atomic<bool> stop{false};
    detail::SearchControl ctl = detail::make_control(opts, &stop);

    table.counts.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
        auto sinks = detail::run_level<M, detail::CountSink>(m, start, mode, sign, n,
                                                             std::nullopt, opts.workers, ctl);
        if (!sinks) {
            table.partial = true;
            break;
        }
        BigInt total = 0;
        for (const auto& s : *sinks) total += s.total;
        table.counts.push_back(std::move(total));
    }
    return table;
}

// Bridge counts refined by span.  With span_cap set, only bridges of span
// <= cap are counted (heights above the cap are pruned during the search);
// rows then cover a in [0, cap].
template <class M>
SpanTable count_bridges_by_span(const M& m, const typename M::Vertex& start, bool reversed,
                                int n_max, const EnumOptions& opts = {},
                                std::optional<int> span_cap = std::nullopt) {
    detail::Mode mode = detail::Mode::BridgeLike;
    int sign = reversed ? -1 : +1;
    SpanTable table;
    table.reversed = reversed;
    table.start_orbit = m.orbit(start);
    table.n_requested = n_max;
    table.span_cap = span_cap;

    std::atomic<bool> stop{false};
    detail::SearchControl ctl = detail::make_control(opts, &stop);

    table.rows.push_back({BigInt(1)});  // the length-0 bridge has span 0
    for (int n = 1; n <= n_max; ++n) {
        auto sinks = detail::run_level<M, detail::SpanSink>(m, start, mode, sign, n,
                                                            span_cap, opts.workers, ctl);
        if (!sinks) {
            table.partial = true;
            break;
        }
        std::vector<BigInt> row;
        for (const auto& s : *sinks) {
            if (s.by_span.size() > row.size()) row.resize(s.by_span.size());
            for (std::size_t a = 0; a < s.by_span.size(); ++a) row[a] += s.by_span[a];
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Visits every walk of the class with exact length n, in the canonical
// label order, single-threaded.  The visitor returns false to abort; the
// function returns false iff aborted.
template <class M>
bool enumerate_walks(const M& m, const typename M::Vertex& start, WalkClass cls, int n,
                     const std::function<bool(const Walk<M>&)>& visit) {
    auto [mode, sign] = detail::class_mode(cls);

    struct Frame {
        Walk<M> walk;
        std::unordered_set<typename M::Vertex, VertexHash<typename M::Vertex>> visited;
        int max_rel = 0;
    } f;
    f.walk = apply_steps(m, start, {});
    f.visited.insert(start);

    const int d = m.height_lipschitz();
    const int base = m.height(start);
    auto rel_of = [&](const typename M::Vertex& v) { return sign * (m.height(v) - base); };

    std::function<bool(int, int)> descend = [&](int depth, int rel) -> bool {
        if (depth == n) {
            if (mode != detail::Mode::BridgeLike || rel == f.max_rel)
                if (!visit(f.walk)) return false;
            return true;
        }
        Neighbor<typename M::Vertex> buf[kMaxNeighbors];
        int k = m.neighbors(f.walk.verts.back(), buf);
        for (int i = 0; i < k; ++i) {
            const auto& u = buf[i].vertex;
            int rel_u = rel_of(u);
            if (mode != detail::Mode::Free) {
                if (rel_u <= 0) continue;
                if (mode == detail::Mode::BridgeLike &&
                    f.max_rel > rel_u + d * (n - depth - 1))
                    continue;
            }
            if (!f.visited.insert(u).second) continue;
            int saved_max = f.max_rel;
            f.max_rel = std::max(f.max_rel, rel_u);
            f.walk.steps.push_back(buf[i].label);
            f.walk.verts.push_back(u);
            f.walk.heights.push_back(m.height(u));
            bool ok = descend(depth + 1, rel_u);
            f.walk.steps.pop_back();
            f.walk.verts.pop_back();
            f.walk.heights.pop_back();
            f.max_rel = saved_max;
            f.visited.erase(u);
            if (!ok) return false;
        }
        return true;
    };
    return descend(0, 0);
}

}  // namespace bridgewalk
