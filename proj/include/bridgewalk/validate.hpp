#pragma once

// Finite-radius sanity checks for a graph model: adjacency symmetry, label
// round-trips, the height-function axioms (bounded steps, strictly higher and
// lower neighbors everywhere), orbit consistency, and spot checks that
// map_frame really is an automorphism fixing the orbit structure.

#include "bridgewalk/walk.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace bridgewalk {

struct ValidationReport {
    bool ok = true;
    int vertices_checked = 0;
    std::vector<std::string> issues;

    void fail(std::string msg) {
        ok = false;
        if (issues.size() < 32) issues.push_back(std::move(msg));
    }
};

template <class M>
ValidationReport validate_model(const M& m, int radius) {
    using V = typename M::Vertex;
    ValidationReport rep;
    const int d = m.height_lipschitz();

    // orbit -> sorted (label, dh, neighbor orbit) profile seen first
    std::unordered_map<int, std::vector<std::array<int, 3>>> profiles;

    std::unordered_set<V, VertexHash<V>> seen;
    std::deque<std::pair<V, int>> queue;
    for (int i = 0; i < m.orbit_count(); ++i) {
        V rep_v = m.orbit_rep(i);
        if (m.orbit(rep_v) != i)
            rep.fail("orbit_rep(" + std::to_string(i) + ") reports orbit " +
                     std::to_string(m.orbit(rep_v)));
        if (seen.insert(rep_v).second) queue.emplace_back(rep_v, 0);
    }

    Neighbor<V> buf[kMaxNeighbors], buf2[kMaxNeighbors];
    while (!queue.empty()) {
        auto [v, dist] = queue.front();
        queue.pop_front();
        ++rep.vertices_checked;

        int k = m.neighbors(v, buf);
        if (k < 1 || k > m.max_degree()) {
            rep.fail("degree out of range at " + m.vertex_name(v));
            continue;
        }

        bool has_higher = false, has_lower = false;
        std::vector<std::array<int, 3>> profile;
        for (int i = 0; i < k; ++i) {
            const V& u = buf[i].vertex;
            Label l = buf[i].label;
            for (int j = 0; j < i; ++j)
                if (buf[j].vertex == u)
                    rep.fail("duplicate neighbor " + m.vertex_name(u) + " of " +
                             m.vertex_name(v));
            if (!(m.step(v, l) == u))
                rep.fail("step() disagrees with neighbors() at " + m.vertex_name(v));
            auto parsed = m.parse_label(m.label_name(l));
            if (!parsed || *parsed != l)
                rep.fail("label name round-trip failed for label " + std::to_string(l));
            bool back = false;
            int k2 = m.neighbors(u, buf2);
            for (int j = 0; j < k2; ++j) back = back || buf2[j].vertex == v;
            if (!back)
                rep.fail("asymmetric edge " + m.vertex_name(v) + " -> " + m.vertex_name(u));
            int dh = m.height(u) - m.height(v);
            if (dh > d || dh < -d)
                rep.fail("height step " + std::to_string(dh) + " exceeds bound " +
                         std::to_string(d) + " at " + m.vertex_name(v));
            has_higher = has_higher || dh > 0;
            has_lower = has_lower || dh < 0;
            int ou = m.orbit(u);
            if (ou < 0 || ou >= m.orbit_count())
                rep.fail("orbit index out of range at " + m.vertex_name(u));
            profile.push_back({int(l), dh, ou});
            if (dist < radius && seen.insert(u).second) queue.emplace_back(u, dist + 1);
        }
        if (!has_higher)
            rep.fail("no strictly higher neighbor at " + m.vertex_name(v));
        if (!has_lower)
            rep.fail("no strictly lower neighbor at " + m.vertex_name(v));

        std::sort(profile.begin(), profile.end());
        auto [it, fresh] = profiles.try_emplace(m.orbit(v), profile);
        if (!fresh && it->second != profile)
            rep.fail("vertices of orbit " + std::to_string(m.orbit(v)) +
                     " have differing local profiles (" + m.vertex_name(v) + ")");
    }

    // map_frame spot checks: rebasing the rep of an orbit onto sampled
    // vertices of the same orbit must fix the rep->rep case pointwise and
    // preserve adjacency and relative heights in general.
    int frame_checks = 0;
    for (const V& w : seen) {
        if (frame_checks >= 16) break;
        V base = m.orbit_rep(m.orbit(w));
        if (!(m.map_frame(base, base, w) == w))
            rep.fail("map_frame(rep, rep, x) is not the identity at " + m.vertex_name(w));
        int hoff = m.height(w) - m.height(base);
        int k = m.neighbors(base, buf);
        V img = m.map_frame(base, w, base);
        if (!(img == w))
            rep.fail("map_frame does not send the base point to the target");
        for (int i = 0; i < k; ++i) {
            V nb = m.map_frame(base, w, buf[i].vertex);
            if (!edge_label(m, img, nb))
                rep.fail("map_frame broke adjacency near " + m.vertex_name(w));
            if (m.height(nb) - m.height(buf[i].vertex) != hoff)
                rep.fail("map_frame broke height differences near " + m.vertex_name(w));
            if (m.orbit(nb) != m.orbit(buf[i].vertex))
                rep.fail("map_frame broke orbits near " + m.vertex_name(w));
        }
        ++frame_checks;
    }
    return rep;
}

}  // namespace bridgewalk
