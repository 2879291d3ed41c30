#pragma once

// Walks on a graph model: a base vertex plus a label sequence, with the
// vertex and height sequences cached.  Predicates for the walk classes used
// throughout: self-avoiding walks, bridges, half-space walks, and their
// height-reversed counterparts.  All classes contain the length-0 walk.

#include "bridgewalk/graph.hpp"

#include <span>
#include <stdexcept>
#include <unordered_set>

namespace bridgewalk {

template <class M>
struct Walk {
    using Vertex = typename M::Vertex;

    Vertex root{};
    std::vector<Label> steps;
    std::vector<Vertex> verts;   // size steps.size() + 1
    std::vector<int> heights;    // heights of verts

    int length() const { return int(steps.size()); }
    const Vertex& end() const { return verts.back(); }

    friend bool operator==(const Walk&, const Walk&) = default;
};

template <class M>
Walk<M> apply_steps(const M& m, typename M::Vertex root, std::span<const Label> labels) {
    Walk<M> w;
    w.root = root;
    w.steps.assign(labels.begin(), labels.end());
    w.verts.reserve(labels.size() + 1);
    w.heights.reserve(labels.size() + 1);
    w.verts.push_back(root);
    w.heights.push_back(m.height(root));
    for (Label l : labels) {
        if (l >= m.label_count()) throw std::invalid_argument("unknown step label");
        w.verts.push_back(m.step(w.verts.back(), l));
        w.heights.push_back(m.height(w.verts.back()));
    }
    return w;
}

template <class M>
Walk<M> make_walk(const M& m, typename M::Vertex root, std::initializer_list<Label> labels) {
    std::vector<Label> v(labels);
    return apply_steps(m, root, std::span<const Label>(v));
}

// Label of the edge u -> v, if adjacent.
template <class M>
std::optional<Label> edge_label(const M& m, const typename M::Vertex& u,
                                const typename M::Vertex& v) {
    Neighbor<typename M::Vertex> buf[kMaxNeighbors];
    int k = m.neighbors(u, buf);
    for (int i = 0; i < k; ++i)
        if (buf[i].vertex == v) return buf[i].label;
    return std::nullopt;
}

template <class M>
bool is_self_avoiding(const M&, const Walk<M>& w) {
    std::unordered_set<typename M::Vertex, VertexHash<typename M::Vertex>> seen(
        w.verts.size() * 2);
    for (const auto& v : w.verts)
        if (!seen.insert(v).second) return false;
    return true;
}

// Half-space walk: every vertex after the first lies strictly above the start.
template <class M>
bool is_hsw(const M& m, const Walk<M>& w) {
    if (!is_self_avoiding(m, w)) return false;
    for (std::size_t i = 1; i < w.heights.size(); ++i)
        if (w.heights[i] <= w.heights[0]) return false;
    return true;
}

template <class M>
bool is_reversed_hsw(const M& m, const Walk<M>& w) {
    if (!is_self_avoiding(m, w)) return false;
    for (std::size_t i = 1; i < w.heights.size(); ++i)
        if (w.heights[i] >= w.heights[0]) return false;
    return true;
}

// Bridge: h(v0) < h(vi) <= h(vn) for 0 < i < n (and the length-0 walk).
template <class M>
bool is_bridge(const M& m, const Walk<M>& w) {
    if (!is_hsw(m, w)) return false;
    for (std::size_t i = 1; i + 1 < w.heights.size(); ++i)
        if (w.heights[i] > w.heights.back()) return false;
    return true;
}

template <class M>
bool is_reversed_bridge(const M& m, const Walk<M>& w) {
    if (!is_reversed_hsw(m, w)) return false;
    for (std::size_t i = 1; i + 1 < w.heights.size(); ++i)
        if (w.heights[i] < w.heights.back()) return false;
    return true;
}

// Height span max - min; for bridges this equals |h(end) - h(start)|.
template <class M>
int walk_span(const Walk<M>& w) {
    auto [lo, hi] = std::minmax_element(w.heights.begin(), w.heights.end());
    return *hi - *lo;
}

// Sub-walk visiting verts[i..j].
template <class M>
Walk<M> subwalk(const M& m, const Walk<M>& w, int i, int j) {
    assert(0 <= i && i <= j && j <= w.length());
    return apply_steps(m, w.verts[i],
                       std::span<const Label>(w.steps.data() + i, std::size_t(j - i)));
}

// The same walk traversed backwards.
template <class M>
Walk<M> reversed_walk(const M& m, const Walk<M>& w) {
    Walk<M> r;
    r.root = w.verts.back();
    r.verts.assign(w.verts.rbegin(), w.verts.rend());
    r.heights.assign(w.heights.rbegin(), w.heights.rend());
    r.steps.reserve(w.steps.size());
    for (int i = 0; i < w.length(); ++i) {
        auto l = edge_label(m, r.verts[i], r.verts[i + 1]);
        assert(l);
        r.steps.push_back(*l);
    }
    return r;
}

// Transport a walk to a new base vertex with an explicit automorphism.
// Labels are recomputed from the mapped vertices, so this is exact even on
// models whose step labels are not equivariant.
template <class M>
Walk<M> transport(const M& m, const Walk<M>& w, const typename M::Vertex& new_root) {
    assert(m.orbit(w.root) == m.orbit(new_root));
    Walk<M> t;
    t.root = new_root;
    t.verts.reserve(w.verts.size());
    t.heights.reserve(w.verts.size());
    for (const auto& v : w.verts) {
        t.verts.push_back(m.map_frame(w.root, new_root, v));
        t.heights.push_back(m.height(t.verts.back()));
    }
    t.steps.reserve(w.steps.size());
    for (int i = 0; i < w.length(); ++i) {
        auto l = edge_label(m, t.verts[i], t.verts[i + 1]);
        if (!l) throw std::logic_error("frame map failed to preserve adjacency");
        t.steps.push_back(*l);
    }
    return t;
}

}  // namespace bridgewalk
