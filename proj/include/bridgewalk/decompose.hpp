#pragma once

// Decomposition of half-space walks into alternating bridges, the composite
// bridge-pair construction, its inverse, the minimal-height split of a
// self-avoiding walk, and the connector-walk table used on quasi-transitive
// models.  These are the combinatorial maps behind every counting inequality
// checked by the verify module.

#include "bridgewalk/enumerate.hpp"

#include <cstdlib>
#include <map>

namespace bridgewalk {

// Alternating-excursion decomposition of a half-space walk.  cuts[j] is the
// end index of piece j+1 in the walk; spans are strictly decreasing and
// positive; the final cut is the walk length.  Odd-numbered pieces (1st,
// 3rd, ...) are bridges, even-numbered ones reversed bridges.
template <class M>
struct Decomposition {
    Walk<M> walk;
    std::vector<int> spans;
    std::vector<int> cuts;

    int pieces() const { return int(spans.size()); }
};

template <class M>
Decomposition<M> decompose_hsw(const M& m, const Walk<M>& w) {
    if (w.length() < 1) throw std::invalid_argument("decompose_hsw: need length >= 1");
    if (!is_hsw(m, w)) throw std::invalid_argument("decompose_hsw: walk is not a half-space walk");

    Decomposition<M> dec;
    dec.walk = w;
    const int n = w.length();
    int start = 0;
    while (start < n) {
        int base = w.heights[start];
        int best = 0, cut = start;
        for (int i = start; i <= n; ++i) {
            int excursion = std::abs(w.heights[i] - base);
            if (excursion >= best) {  // >=: keep the last attainer
                best = excursion;
                cut = i;
            }
        }
        assert(best > 0 && cut > start);
        dec.spans.push_back(best);
        dec.cuts.push_back(cut);
        start = cut;
    }
    for (std::size_t j = 1; j < dec.spans.size(); ++j)
        assert(dec.spans[j] < dec.spans[j - 1]);
    assert(!dec.cuts.empty() && dec.cuts.back() == n);
    return dec;
}

// Piece j (1-based) of a decomposition, as a walk from its own start vertex.
template <class M>
Walk<M> decomposition_piece(const M& m, const Decomposition<M>& dec, int j) {
    assert(1 <= j && j <= dec.pieces());
    int lo = (j == 1) ? 0 : dec.cuts[j - 2];
    return subwalk(m, dec.walk, lo, dec.cuts[j - 1]);
}

// Signature tally of all half-space walks of exact length n from `start`.
// The length-0 walk carries the empty signature.
template <class M>
std::map<std::vector<int>, BigInt> count_hsws_by_signature(const M& m,
                                                           const typename M::Vertex& start,
                                                           int n) {
    std::map<std::vector<int>, BigInt> table;
    if (n == 0) {
        table[{}] = 1;
        return table;
    }
    enumerate_walks<M>(m, start, WalkClass::Hsw, n, [&](const Walk<M>& w) {
        ++table[decompose_hsw(m, w).spans];
        return true;
    });
    return table;
}

// Fixed connector bridges between orbits: nu(i, j) is the canonical shortest
// bridge from the orbit-i representative to an orbit-j vertex whose endpoint
// is the walk's unique height maximum.  On transitive models the table is a
// single length-0 walk.  r is the longest connector in the table.
template <class M>
struct NuTable {
    int orbits = 1;
    int r = 0;
    std::vector<Walk<M>> nu;  // indexed i * orbits + j

    const Walk<M>& get(int i, int j) const { return nu.at(std::size_t(i) * orbits + j); }
};

struct NuNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class M>
bool has_unique_max_at_end(const Walk<M>& w) {
    for (std::size_t i = 0; i + 1 < w.heights.size(); ++i)
        if (w.heights[i] >= w.heights.back()) return false;
    return true;
}

template <class M>
NuTable<M> find_nu_walks(const M& m, int r_bound) {
    NuTable<M> table;
    table.orbits = m.orbit_count();
    table.nu.resize(std::size_t(table.orbits) * table.orbits);
    for (int i = 0; i < table.orbits; ++i) {
        for (int j = 0; j < table.orbits; ++j) {
            bool found = false;
            for (int len = 0; len <= r_bound && !found; ++len) {
                enumerate_walks<M>(m, m.orbit_rep(i), WalkClass::Bridge, len,
                                   [&](const Walk<M>& w) {
                                       if (m.orbit(w.end()) != j) return true;
                                       if (len > 0 && !has_unique_max_at_end(w)) return true;
                                       table.nu[std::size_t(i) * table.orbits + j] = w;
                                       found = true;
                                       return false;  // first hit is canonical
                                   });
            }
            if (!found)
                throw NuNotFound("no connector bridge of length <= " +
                                 std::to_string(r_bound) + " from orbit " +
                                 std::to_string(i) + " to orbit " + std::to_string(j));
            table.r = std::max(table.r,
                               table.nu[std::size_t(i) * table.orbits + j].length());
        }
    }
    return table;
}

template <class M>
NuTable<M> trivial_nu_table(const M& m) {
    assert(m.transitive());
    NuTable<M> table;
    table.orbits = 1;
    table.r = 0;
    table.nu.push_back(apply_steps(m, m.orbit_rep(0), {}));
    return table;
}

// Record of one connector insertion inside a composite walk.
struct NuUse {
    bool in_minus;
    int from_orbit, to_orbit;
    int length;
};

// The two composite walks of the pair construction, both based at the
// original walk's start vertex: `plus` glues the odd (rising) pieces into one
// bridge, `minus` glues the even (falling) pieces into one reversed bridge.
// On quasi-transitive models connector bridges from the nu table are spliced
// in between pieces (and in front of `minus`), which may lengthen the
// composites by up to (pieces-1) * r steps in total.
template <class M>
struct BridgePair {
    Walk<M> plus;
    Walk<M> minus;
    std::vector<int> signature;
    std::vector<NuUse> nu_uses;
};

namespace detail {

// Appends `piece` to `walk`, transported so that piece's start lands on
// walk's end vertex.
template <class M>
void append_transported(const M& m, Walk<M>& walk, const Walk<M>& piece) {
    if (piece.length() == 0) return;
    Walk<M> moved = transport(m, piece, walk.end());
    for (int i = 0; i < moved.length(); ++i) {
        walk.steps.push_back(moved.steps[i]);
        walk.verts.push_back(moved.verts[i + 1]);
        walk.heights.push_back(moved.heights[i + 1]);
    }
}

}  // namespace detail

template <class M>
BridgePair<M> build_bridge_pair(const M& m, const Decomposition<M>& dec,
                                const NuTable<M>* nu_table = nullptr) {
    NuTable<M> trivial;
    if (nu_table == nullptr) {
        if (!m.transitive())
            throw std::invalid_argument(
                "build_bridge_pair: quasi-transitive model needs a nu table");
        trivial = trivial_nu_table(m);
        nu_table = &trivial;
    }

    const int k = dec.pieces();
    BridgePair<M> pair;
    pair.signature = dec.spans;
    pair.plus = apply_steps(m, dec.walk.root, {});
    pair.minus = apply_steps(m, dec.walk.root, {});

    auto orbit_of_piece_start = [&](int j) {
        int lo = (j == 1) ? 0 : dec.cuts[j - 2];
        return m.orbit(dec.walk.verts[lo]);
    };

    // rising composite: pieces 1, 3, 5, ... with nu connectors in between
    for (int j = 1; j <= k; j += 2) {
        if (j > 1) {
            const Walk<M>& nu = nu_table->get(m.orbit(pair.plus.end()), orbit_of_piece_start(j));
            detail::append_transported(m, pair.plus, nu);
            pair.nu_uses.push_back({false, m.orbit(nu.root), m.orbit(nu.end()), nu.length()});
        }
        detail::append_transported(m, pair.plus, decomposition_piece(m, dec, j));
    }
    // falling composite: a leading reversed connector re-bases it at the
    // original root's orbit, then pieces 2, 4, ...
    for (int j = 2; j <= k; j += 2) {
        const Walk<M>& nu = nu_table->get(orbit_of_piece_start(j), m.orbit(pair.minus.end()));
        Walk<M> nu_rev = reversed_walk(m, nu);
        detail::append_transported(m, pair.minus, nu_rev);
        pair.nu_uses.push_back({true, m.orbit(nu_rev.root), m.orbit(nu_rev.end()), nu.length()});
        detail::append_transported(m, pair.minus, decomposition_piece(m, dec, j));
    }
    // one connector per junction: always pieces - 1 in total
    assert(int(pair.nu_uses.size()) == std::max(0, k - 1));
    return pair;
}

// Inverse of build_bridge_pair on transitive models: re-splits the two
// composites at the partial-span attachment heights and re-interleaves.
template <class M>
Walk<M> reconstruct_hsw(const M& m, const BridgePair<M>& pair) {
    if (!m.transitive())
        throw std::invalid_argument("reconstruct_hsw: transitive models only");

    const auto& sig = pair.signature;
    const int k = int(sig.size());

    auto segments = [&](const Walk<M>& comp, bool minus) {
        std::vector<Walk<M>> segs;
        int base = comp.heights[0];
        int prev = 0;
        long target = 0;
        for (int j = minus ? 2 : 1; j <= k; j += 2) {
            target += sig[j - 1];
            int want = int(minus ? -target : target);
            int cut = -1;
            for (int i = prev; i <= comp.length(); ++i)
                if (comp.heights[i] - base == want) cut = i;
            if (cut < 0) throw std::invalid_argument("composite walk does not match signature");
            segs.push_back(subwalk(m, comp, prev, cut));
            prev = cut;
        }
        if (prev != comp.length())
            throw std::invalid_argument("composite walk longer than its signature");
        return segs;
    };

    std::vector<Walk<M>> plus_segs = segments(pair.plus, false);
    std::vector<Walk<M>> minus_segs = segments(pair.minus, true);

    Walk<M> out = apply_steps(m, pair.plus.root, {});
    for (int j = 1; j <= k; ++j) {
        const Walk<M>& seg =
            (j % 2 == 1) ? plus_segs[std::size_t(j - 1) / 2] : minus_segs[std::size_t(j) / 2 - 1];
        detail::append_transported(m, out, seg);
    }
    return out;
}

// Minimal-height split of a self-avoiding walk into two half-space walks:
// the suffix from the last height minimum v_i (length n - i), and the
// reversed prefix prepended with the step from v_i down to its smallest-label
// strictly lower neighbor v' (length i + 1).
template <class M>
std::pair<Walk<M>, Walk<M>> split_saw_at_min(const M& m, const Walk<M>& w) {
    if (!is_self_avoiding(m, w))
        throw std::invalid_argument("split_saw_at_min: walk is not self-avoiding");

    int n = w.length();
    int imin = 0;
    for (int i = 0; i <= n; ++i)
        if (w.heights[i] <= w.heights[imin]) imin = i;  // last minimum

    const auto& vmin = w.verts[imin];
    Neighbor<typename M::Vertex> buf[kMaxNeighbors];
    int k = m.neighbors(vmin, buf);
    std::optional<typename M::Vertex> vprime;
    for (int i = 0; i < k && !vprime; ++i)
        if (m.height(buf[i].vertex) < m.height(vmin)) vprime = buf[i].vertex;
    if (!vprime)  // the height-function axioms guarantee a lower neighbor
        throw std::logic_error("split_saw_at_min: no strictly lower neighbor");

    Walk<M> suffix = subwalk(m, w, imin, n);

    Walk<M> back;
    back.root = *vprime;
    back.verts.push_back(*vprime);
    back.heights.push_back(m.height(*vprime));
    for (int i = imin; i >= 0; --i) {
        back.verts.push_back(w.verts[i]);
        back.heights.push_back(w.heights[i]);
    }
    for (std::size_t i = 0; i + 1 < back.verts.size(); ++i) {
        auto l = edge_label(m, back.verts[i], back.verts[i + 1]);
        assert(l);
        back.steps.push_back(*l);
    }
    return {std::move(suffix), std::move(back)};
}

}  // namespace bridgewalk
