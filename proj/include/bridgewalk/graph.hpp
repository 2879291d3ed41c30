#pragma once

// Graph models: infinite quasi-transitive graphs presented as lazy adjacency
// oracles.  Every model exposes the same duck-typed interface:
//
//   using Vertex = ...;                    // regular, hashable value type
//   int    orbit_count() const;            // vertex orbits under the group
//   int    orbit(Vertex) const;
//   Vertex orbit_rep(int) const;
//   bool   transitive() const;             // orbit_count() == 1
//   int    height(Vertex) const;           // graph height function
//   int    height_lipschitz() const;       // max |height step| along an edge
//   int    max_degree() const;
//   int    label_count() const;
//   std::string_view label_name(Label) const;
//   std::optional<Label> parse_label(std::string_view) const;
//   int    neighbors(Vertex, Neighbor*) const;   // canonical label order
//   Vertex step(Vertex, Label) const;
//   Vertex map_frame(Vertex u, Vertex w, Vertex x) const;  // automorphism
//   std::string vertex_name(Vertex) const;
//   std::string name() const;
//
// map_frame(u, w, ·) is a graph automorphism taking u to w (u, w in the same
// orbit); it is how walks are transported to a new base vertex without
// assuming that step labels are equivariant (on the trees they are not).

#include "bridgewalk/arith.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bridgewalk {

using Label = std::uint8_t;
constexpr int kMaxNeighbors = 16;

template <class V>
struct Neighbor {
    Label label;
    V vertex;
};

// ---------------------------------------------------------------------------
// Z^d lattice, height = first coordinate.

struct LatticeVertex {
    static constexpr int kMaxDim = 8;
    std::array<std::int32_t, kMaxDim> c{};

    friend bool operator==(const LatticeVertex&, const LatticeVertex&) = default;
    std::uint64_t hash() const {
        std::uint64_t h = 0x51ab3e1d;
        for (int i = 0; i < kMaxDim; i += 2)
            h = hash_combine(h, (std::uint64_t(std::uint32_t(c[i])) << 32) |
                                    std::uint32_t(c[i + 1]));
        return h;
    }
};

class LatticeModel {
  public:
    using Vertex = LatticeVertex;

    explicit LatticeModel(int dim) : dim_(dim) {
        if (dim < 1 || dim > LatticeVertex::kMaxDim)
            throw std::invalid_argument("lattice dimension must be in [1, 8]");
    }

    int dim() const { return dim_; }
    std::string name() const { return "z" + std::to_string(dim_); }
    bool transitive() const { return true; }
    int orbit_count() const { return 1; }
    int orbit(const Vertex&) const { return 0; }
    Vertex orbit_rep(int i) const {
        assert(i == 0);
        (void)i;
        return Vertex{};
    }
    int height(const Vertex& v) const { return v.c[0]; }
    int height_lipschitz() const { return 1; }
    int max_degree() const { return 2 * dim_; }
    int label_count() const { return 2 * dim_; }

    std::string_view label_name(Label l) const {
        static constexpr std::array<std::string_view, 6> kNamed = {"E", "W", "N",
                                                                   "S", "U", "D"};
        assert(l < label_count());
        if (l < kNamed.size()) return kNamed[l];
        static thread_local std::string scratch;
        scratch = (l % 2 == 0 ? "+" : "-") + std::to_string(l / 2 + 1);
        return scratch;
    }

    std::optional<Label> parse_label(std::string_view s) const {
        for (Label l = 0; l < label_count(); ++l)
            if (label_name(l) == s) return l;
        return std::nullopt;
    }

    Vertex step(const Vertex& v, Label l) const {
        assert(l < label_count());
        Vertex w = v;
        w.c[l / 2] += (l % 2 == 0) ? 1 : -1;
        return w;
    }

    int neighbors(const Vertex& v, Neighbor<Vertex>* out) const {
        for (Label l = 0; l < 2 * dim_; ++l) out[l] = {l, step(v, l)};
        return 2 * dim_;
    }

    Vertex map_frame(const Vertex& u, const Vertex& w, const Vertex& x) const {
        Vertex y = x;
        for (int i = 0; i < dim_; ++i) y.c[i] += w.c[i] - u.c[i];
        return y;
    }

    std::string vertex_name(const Vertex& v) const {
        std::string s = "(";
        for (int i = 0; i < dim_; ++i)
            s += (i ? "," : "") + std::to_string(v.c[i]);
        return s + ")";
    }

  private:
    int dim_;
};

// ---------------------------------------------------------------------------
// Rooted binary-branching tree coordinates, shared by the 3-regular tree and
// the grandparent graph.  A vertex is addressed relative to a fixed doubly
// infinite ray: `level` is the depth (height) along the ray, `bits` the
// branching word after leaving the ray.  The canonical form absorbs leading
// 0-bits into the ray, so the word is empty or starts with 1.

struct TreeVertex {
    std::int32_t level = 0;
    std::uint32_t len = 0;   // number of branching bits, <= 64
    std::uint64_t bits = 0;  // bit i = choice at depth i after the ray

    friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
    std::uint64_t hash() const {
        return hash_combine(hash_combine(0x72ee5eedULL, bits),
                            (std::uint64_t(std::uint32_t(level)) << 32) | len);
    }
};

namespace tree {

inline TreeVertex child(const TreeVertex& v, int b) {
    assert(b == 0 || b == 1);
    if (v.len == 0 && b == 0) return {v.level + 1, 0, 0};  // stay on the ray
    if (v.len >= 64) throw std::runtime_error("tree path longer than 64 bits");
    return {v.level + 1, v.len + 1, v.bits | (std::uint64_t(b) << v.len)};
}

inline TreeVertex parent(const TreeVertex& v) {
    if (v.len == 0) return {v.level - 1, 0, 0};
    std::uint32_t len = v.len - 1;
    return {v.level - 1, len, v.bits & ((std::uint64_t(1) << len) - 1)};
}

inline int last_bit(const TreeVertex& v) {
    return v.len == 0 ? 0 : int((v.bits >> (v.len - 1)) & 1);
}

inline bool is_ancestor_or_self(const TreeVertex& a, const TreeVertex& x) {
    if (x.level < a.level) return false;
    TreeVertex cur = x;
    for (int k = x.level - a.level; k > 0; --k) cur = parent(cur);
    return cur == a;
}

// The automorphism gamma_w . gamma_u^{-1}: rebases the frame at u to the frame
// at w.  Frames are given by the upward spine plus child order; the first step
// off the spine is matched to the off-spine child on the target side, the rest
// of the branching word is replayed verbatim.
inline TreeVertex map_frame(const TreeVertex& u, const TreeVertex& w,
                            const TreeVertex& x) {
    int j = 0;
    TreeVertex a = u;
    while (!is_ancestor_or_self(a, x)) {
        a = parent(a);
        ++j;
    }
    std::vector<int> word;
    for (TreeVertex cur = x; !(cur == a); cur = parent(cur)) word.push_back(last_bit(cur));
    std::reverse(word.begin(), word.end());

    TreeVertex b = w, prev = w;
    for (int s = 0; s < j; ++s) {
        prev = b;
        b = parent(b);
    }
    TreeVertex cur = b;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i == 0 && j >= 1) {
            TreeVertex c0 = child(cur, 0);
            cur = (c0 == prev) ? child(cur, 1) : c0;
        } else {
            cur = child(cur, word[i]);
        }
    }
    return cur;
}

inline std::string vertex_name(const TreeVertex& v) {
    std::string s = "(" + std::to_string(v.level) + ";";
    for (std::uint32_t i = 0; i < v.len; ++i)
        s += char('0' + ((v.bits >> i) & 1));
    return s + ")";
}

}  // namespace tree

// ---------------------------------------------------------------------------
// 3-regular tree: parent + two children, height = level.

class Tree3Model {
  public:
    using Vertex = TreeVertex;
    enum : Label { kParent = 0, kChild0 = 1, kChild1 = 2 };

    std::string name() const { return "t3"; }
    bool transitive() const { return true; }
    int orbit_count() const { return 1; }
    int orbit(const Vertex&) const { return 0; }
    Vertex orbit_rep(int i) const {
        assert(i == 0);
        (void)i;
        return Vertex{};
    }
    int height(const Vertex& v) const { return v.level; }
    int height_lipschitz() const { return 1; }
    int max_degree() const { return 3; }
    int label_count() const { return 3; }

    std::string_view label_name(Label l) const {
        static constexpr std::array<std::string_view, 3> kNames = {"P", "C0", "C1"};
        assert(l < 3);
        return kNames[l];
    }
    std::optional<Label> parse_label(std::string_view s) const {
        for (Label l = 0; l < 3; ++l)
            if (label_name(l) == s) return l;
        return std::nullopt;
    }

    Vertex step(const Vertex& v, Label l) const {
        switch (l) {
            case kParent: return tree::parent(v);
            case kChild0: return tree::child(v, 0);
            case kChild1: return tree::child(v, 1);
        }
        assert(false);
        return v;
    }

    int neighbors(const Vertex& v, Neighbor<Vertex>* out) const {
        out[0] = {kParent, tree::parent(v)};
        out[1] = {kChild0, tree::child(v, 0)};
        out[2] = {kChild1, tree::child(v, 1)};
        return 3;
    }

    Vertex map_frame(const Vertex& u, const Vertex& w, const Vertex& x) const {
        return tree::map_frame(u, w, x);
    }
    std::string vertex_name(const Vertex& v) const { return tree::vertex_name(v); }
};

// ---------------------------------------------------------------------------
// Grandparent graph: the 3-regular tree plus an edge from every vertex to its
// grandparent.  Degree 8, height steps of size 1 and 2, vertex-transitive but
// not unimodular: one grandparent versus four grandchildren.

class GrandparentModel {
  public:
    using Vertex = TreeVertex;
    enum : Label {
        kParent = 0,
        kGrandParent = 1,
        kChild0 = 2,
        kChild1 = 3,
        kGChild00 = 4,
        kGChild01 = 5,
        kGChild10 = 6,
        kGChild11 = 7,
    };

    std::string name() const { return "gp"; }
    bool transitive() const { return true; }
    int orbit_count() const { return 1; }
    int orbit(const Vertex&) const { return 0; }
    Vertex orbit_rep(int i) const {
        assert(i == 0);
        (void)i;
        return Vertex{};
    }
    int height(const Vertex& v) const { return v.level; }
    int height_lipschitz() const { return 2; }
    int max_degree() const { return 8; }
    int label_count() const { return 8; }

    std::string_view label_name(Label l) const {
        static constexpr std::array<std::string_view, 8> kNames = {
            "P", "PP", "C0", "C1", "CC00", "CC01", "CC10", "CC11"};
        assert(l < 8);
        return kNames[l];
    }
    std::optional<Label> parse_label(std::string_view s) const {
        for (Label l = 0; l < 8; ++l)
            if (label_name(l) == s) return l;
        return std::nullopt;
    }

    Vertex step(const Vertex& v, Label l) const {
        using namespace tree;
        switch (l) {
            case kParent: return parent(v);
            case kGrandParent: return parent(parent(v));
            case kChild0: return child(v, 0);
            case kChild1: return child(v, 1);
            case kGChild00: return child(child(v, 0), 0);
            case kGChild01: return child(child(v, 0), 1);
            case kGChild10: return child(child(v, 1), 0);
            case kGChild11: return child(child(v, 1), 1);
        }
        assert(false);
        return v;
    }

    int neighbors(const Vertex& v, Neighbor<Vertex>* out) const {
        for (Label l = 0; l < 8; ++l) out[l] = {l, step(v, l)};
        return 8;
    }

    Vertex map_frame(const Vertex& u, const Vertex& w, const Vertex& x) const {
        return tree::map_frame(u, w, x);
    }
    std::string vertex_name(const Vertex& v) const { return tree::vertex_name(v); }
};

// ---------------------------------------------------------------------------
// Honeycomb lattice in brick-wall coordinates: (x, y) with horizontal edges
// to (x±1, y) and one vertical edge, upward from even-parity vertices and
// downward from odd-parity ones.  Height = x.  The parity-preserving
// translations act with two vertex orbits.

struct BrickVertex {
    std::int32_t x = 0, y = 0;

    friend bool operator==(const BrickVertex&, const BrickVertex&) = default;
    std::uint64_t hash() const {
        return mix64((std::uint64_t(std::uint32_t(x)) << 32) | std::uint32_t(y));
    }
};

class HoneycombModel {
  public:
    using Vertex = BrickVertex;
    enum : Label { kEast = 0, kWest = 1, kVertical = 2 };

    std::string name() const { return "honeycomb"; }
    bool transitive() const { return false; }
    int orbit_count() const { return 2; }
    int orbit(const Vertex& v) const {
        return ((v.x + v.y) % 2 + 2) % 2;
    }
    Vertex orbit_rep(int i) const {
        assert(i == 0 || i == 1);
        return Vertex{i, 0};
    }
    int height(const Vertex& v) const { return v.x; }
    int height_lipschitz() const { return 1; }
    int max_degree() const { return 3; }
    int label_count() const { return 3; }

    std::string_view label_name(Label l) const {
        static constexpr std::array<std::string_view, 3> kNames = {"E", "W", "V"};
        assert(l < 3);
        return kNames[l];
    }
    std::optional<Label> parse_label(std::string_view s) const {
        for (Label l = 0; l < 3; ++l)
            if (label_name(l) == s) return l;
        return std::nullopt;
    }

    Vertex step(const Vertex& v, Label l) const {
        switch (l) {
            case kEast: return {v.x + 1, v.y};
            case kWest: return {v.x - 1, v.y};
            case kVertical: return {v.x, v.y + (orbit(v) == 0 ? 1 : -1)};
        }
        assert(false);
        return v;
    }

    int neighbors(const Vertex& v, Neighbor<Vertex>* out) const {
        out[0] = {kEast, step(v, kEast)};
        out[1] = {kWest, step(v, kWest)};
        out[2] = {kVertical, step(v, kVertical)};
        return 3;
    }

    Vertex map_frame(const Vertex& u, const Vertex& w, const Vertex& x) const {
        assert(orbit(u) == orbit(w));
        return {x.x + w.x - u.x, x.y + w.y - u.y};
    }

    std::string vertex_name(const Vertex& v) const {
        return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
    }
};

// Generic hash adaptor for the DFS visited sets.
template <class V>
struct VertexHash {
    std::size_t operator()(const V& v) const { return std::size_t(v.hash()); }
};

}  // namespace bridgewalk
