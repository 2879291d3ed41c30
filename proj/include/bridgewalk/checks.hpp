#pragma once

// Machine-checkable counting identities and inequalities relating walks,
// bridges, and half-space walks.  Identities are verified exactly; for
// inequalities the report carries the worst (smallest) slack seen, so an
// equality case shows up as margin 0.

#include "bridgewalk/decompose.hpp"
#include "bridgewalk/gp_series.hpp"
#include "bridgewalk/partitions.hpp"

#include <sstream>

namespace bridgewalk {

struct CheckReport {
    std::string check;
    std::string model;
    std::string params;
    bool pass = true;
    bool complete = true;     // false if a time budget truncated the range
    BigInt worst_margin = 0;  // identities: max |lhs - rhs|; bounds: min slack
    std::string counterexample;
    std::string note;
};

namespace detail {

inline std::string signature_string(const std::vector<int>& sig) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < sig.size(); ++i) os << (i ? "," : "") << sig[i];
    os << ")";
    return os.str();
}

inline void identity_update(CheckReport& rep, const BigInt& lhs, const BigInt& rhs,
                            const std::string& where) {
    BigInt diff = abs(lhs - rhs);
    if (diff > rep.worst_margin) rep.worst_margin = diff;
    if (lhs != rhs && rep.pass) {
        rep.pass = false;
        rep.counterexample = where + ": lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
    }
}

inline void bound_update(CheckReport& rep, bool& seeded, const BigInt& actual,
                         const BigInt& bound, const std::string& where) {
    BigInt slack = bound - actual;
    if (!seeded || slack < rep.worst_margin) {
        rep.worst_margin = slack;
        seeded = true;
    }
    if (actual > bound && rep.pass) {
        rep.pass = false;
        rep.counterexample =
            where + ": count=" + actual.get_str() + " bound=" + bound.get_str();
    }
}

inline void budget_note(CheckReport& rep, int n_eff, int n_max) {
    if (n_eff < n_max) {
        rep.complete = false;
        rep.note = "time budget reached; verified through n=" + std::to_string(n_eff);
    }
    rep.params = "n<=" + std::to_string(n_eff);
}

}  // namespace detail

// Bridge counts split by span sum back to the plain bridge count, in both
// directions, from every orbit representative.
template <class M>
CheckReport check_span_sum(const M& m, const std::string& model_name, int n_max,
                           const EnumOptions& opt = {}) {
    CheckReport rep{"span-sum", model_name, "", true, true, 0, "", ""};
    int n_eff = n_max;
    struct Pass {
        bool reversed;
        SpanTable spans;
        CountTable totals;
    };
    std::vector<Pass> passes;
    for (int v = 0; v < m.orbit_count(); ++v) {
        for (bool reversed : {false, true}) {
            auto cls = reversed ? WalkClass::ReversedBridge : WalkClass::Bridge;
            passes.push_back({reversed,
                              count_bridges_by_span(m, m.orbit_rep(v), reversed, n_max, opt),
                              count_walks(m, m.orbit_rep(v), cls, n_max, opt)});
            n_eff = std::min({n_eff, passes.back().spans.n_complete(),
                              passes.back().totals.n_complete()});
        }
    }
    for (const auto& p : passes)
        for (int n = 0; n <= n_eff; ++n)
            detail::identity_update(
                rep, p.spans.row_total(n), p.totals.counts[std::size_t(n)],
                std::string(p.reversed ? "reversed" : "forward") + " rep=" +
                    std::to_string(p.spans.start_orbit) + " n=" + std::to_string(n));
    detail::budget_note(rep, n_eff, n_max);
    return rep;
}

// Half-space walks split by decomposition signature sum back to the plain
// half-space count, and single-part signatures match span-a bridge counts.
template <class M>
CheckReport check_signature_sum(const M& m, const std::string& model_name, int n_max,
                                const EnumOptions& opt = {}) {
    CheckReport rep{"signature-sum", model_name, "", true, true, 0, "", ""};
    int n_eff = n_max;
    for (int v = 0; v < m.orbit_count(); ++v) {
        auto hsw = count_walks(m, m.orbit_rep(v), WalkClass::Hsw, n_max, opt);
        auto spans = count_bridges_by_span(m, m.orbit_rep(v), false, n_max, opt);
        n_eff = std::min({n_eff, hsw.n_complete(), spans.n_complete()});
        for (int n = 0; n <= n_eff; ++n) {
            auto sigs = count_hsws_by_signature(m, m.orbit_rep(v), n);
            BigInt total = 0;
            for (const auto& [sig, cnt] : sigs) total += cnt;
            detail::identity_update(rep, total, hsw.counts[std::size_t(n)],
                                    "rep=" + std::to_string(v) + " n=" + std::to_string(n));
            for (int a = 1; a <= m.height_lipschitz() * n; ++a) {
                auto it = sigs.find({a});
                BigInt one_piece = (it == sigs.end()) ? BigInt(0) : it->second;
                detail::identity_update(rep, one_piece, spans.at(n, a),
                                        "rep=" + std::to_string(v) + " n=" + std::to_string(n) +
                                            " signature=(" + std::to_string(a) + ")");
            }
        }
    }
    detail::budget_note(rep, n_eff, n_max);
    return rep;
}

// Per-signature bound on transitive models: walks with signature a splits as
// a bridge of span A (odd parts) and a reversed bridge of span B (even
// parts), both from the same root, so
//   h_n(a) <= sum_m b_m(A) * rev b_{n-m}(B).
template <class M>
CheckReport check_hsw_pair_bound(const M& m, const std::string& model_name, int n_max,
                                 const EnumOptions& opt = {}) {
    assert(m.transitive());
    CheckReport rep{"hsw-pair-bound", model_name, "", true, true, 0, "", ""};
    auto root = m.orbit_rep(0);
    auto fwd = count_bridges_by_span(m, root, false, n_max, opt);
    auto rev = count_bridges_by_span(m, root, true, n_max, opt);
    int n_eff = std::min({n_max, fwd.n_complete(), rev.n_complete()});
    bool seeded = false;
    for (int n = 1; n <= n_eff; ++n) {
        for (const auto& [sig, cnt] : count_hsws_by_signature(m, root, n)) {
            int a_sum = 0, b_sum = 0;
            for (std::size_t j = 0; j < sig.size(); ++j)
                (j % 2 == 0 ? a_sum : b_sum) += sig[j];
            BigInt bound = 0;
            for (int mm = 0; mm <= n; ++mm)
                bound += fwd.at(mm, a_sum) * rev.at(n - mm, b_sum);
            detail::bound_update(rep, seeded, cnt, bound,
                                 "n=" + std::to_string(n) +
                                     " signature=" + detail::signature_string(sig));
        }
    }
    detail::budget_note(rep, n_eff, n_max);
    return rep;
}

// Summing the pair bound over signatures: the number of signatures with a
// given span pair (A, B) is at most the number of partitions of A + B into
// distinct parts, and A + B <= d * n, so
//   h_n <= P_D(d n) * sum_m b_m * rev b_{n-m}.
template <class M>
CheckReport check_hsw_pd_bound(const M& m, const std::string& model_name, int n_max,
                               const EnumOptions& opt = {}) {
    CheckReport rep{"hsw-partition-bound", model_name, "", true, true, 0, "", ""};
    int n_eff = n_max;
    struct Pass {
        CountTable hsw, fwd, rev;
    };
    std::vector<Pass> passes;
    for (int v = 0; v < m.orbit_count(); ++v) {
        passes.push_back({count_walks(m, m.orbit_rep(v), WalkClass::Hsw, n_max, opt),
                          count_walks(m, m.orbit_rep(v), WalkClass::Bridge, n_max, opt),
                          count_walks(m, m.orbit_rep(v), WalkClass::ReversedBridge, n_max, opt)});
        n_eff = std::min({n_eff, passes.back().hsw.n_complete(),
                          passes.back().fwd.n_complete(), passes.back().rev.n_complete()});
    }
    auto pd = distinct_partition_table(m.height_lipschitz() * std::max(n_eff, 0));
    bool seeded = false;
    for (const auto& p : passes) {
        for (int n = 1; n <= n_eff; ++n) {
            BigInt conv = 0;
            for (int mm = 0; mm <= n; ++mm)
                conv += p.fwd.counts[std::size_t(mm)] * p.rev.counts[std::size_t(n - mm)];
            BigInt bound = pd[std::size_t(m.height_lipschitz() * n)] * conv;
            detail::bound_update(rep, seeded, p.hsw.counts[std::size_t(n)], bound,
                                 "rep=" + std::to_string(p.hsw.start_orbit) +
                                     " n=" + std::to_string(n));
        }
    }
    detail::budget_note(rep, n_eff, n_max);
    return rep;
}

// Splitting a walk at its last height minimum turns it into two half-space
// walks (the second extended one step below the minimum), so on transitive
// models  c_n <= sum_l h_{n-l} * h_{l+1}.
template <class M>
CheckReport check_saw_split_bound(const M& m, const std::string& model_name, int n_max,
                                  const EnumOptions& opt = {}) {
    assert(m.transitive());
    CheckReport rep{"saw-split-bound", model_name, "", true, true, 0, "", ""};
    auto root = m.orbit_rep(0);
    auto saw = count_walks(m, root, WalkClass::Saw, n_max, opt);
    auto hsw = count_walks(m, root, WalkClass::Hsw, n_max + 1, opt);
    int n_eff = std::max(0, std::min({n_max, saw.n_complete(), hsw.n_complete() - 1}));
    bool seeded = false;
    for (int n = 1; n <= n_eff; ++n) {
        BigInt bound = 0;
        for (int l = 0; l <= n; ++l)
            bound += hsw.counts[std::size_t(n - l)] * hsw.counts[std::size_t(l + 1)];
        detail::bound_update(rep, seeded, saw.counts[std::size_t(n)], bound,
                             "n=" + std::to_string(n));
    }
    detail::budget_note(rep, n_eff, n_max);
    return rep;
}

// Walk counts are submultiplicative (with the max-over-representatives
// convention) and bridge counts supermultiplicative (min convention), in both
// bridge directions.
template <class M>
CheckReport check_multiplicativity(const M& m, const std::string& model_name, int n_max,
                                   const EnumOptions& opt = {}) {
    CheckReport rep{"multiplicativity", model_name, "", true, true, 0, "", ""};
    int n_eff = n_max;
    std::vector<CountTable> saw, fwd, rev;
    for (int v = 0; v < m.orbit_count(); ++v) {
        saw.push_back(count_walks(m, m.orbit_rep(v), WalkClass::Saw, n_max, opt));
        fwd.push_back(count_walks(m, m.orbit_rep(v), WalkClass::Bridge, n_max, opt));
        rev.push_back(count_walks(m, m.orbit_rep(v), WalkClass::ReversedBridge, n_max, opt));
        n_eff = std::min({n_eff, saw.back().n_complete(), fwd.back().n_complete(),
                          rev.back().n_complete()});
    }
    auto fold = [&](const std::vector<CountTable>& tabs, int n, bool use_max) {
        BigInt out = tabs[0].counts[std::size_t(n)];
        for (const auto& t : tabs)
            out = use_max ? std::max(out, t.counts[std::size_t(n)])
                          : std::min(out, t.counts[std::size_t(n)]);
        return out;
    };
    bool seeded = false;
    for (int n = 1; n < n_eff; ++n) {
        for (int k = 1; n + k <= n_eff; ++k) {
            detail::bound_update(rep, seeded, fold(saw, n + k, true),
                                 fold(saw, n, true) * fold(saw, k, true),
                                 "walks n=" + std::to_string(n) + " m=" + std::to_string(k));
            detail::bound_update(rep, seeded, fold(fwd, n, false) * fold(fwd, k, false),
                                 fold(fwd, n + k, false),
                                 "bridges n=" + std::to_string(n) + " m=" + std::to_string(k));
            detail::bound_update(rep, seeded, fold(rev, n, false) * fold(rev, k, false),
                                 fold(rev, n + k, false),
                                 "reversed bridges n=" + std::to_string(n) +
                                     " m=" + std::to_string(k));
        }
    }
    detail::budget_note(rep, n_eff, n_max);
    return rep;
}

// Quasi-transitive per-signature bound.  The composites may carry up to one
// connector of length <= r per junction, so their lengths stretch by s and
// their spans by t <= d * length - span; each image is hit by at most
// (r+1)^(k-1) walks.
template <class M>
CheckReport check_qt_pair_bound(const M& m, const std::string& model_name, int n_max,
                                const NuTable<M>& nu, const EnumOptions& opt = {}) {
    CheckReport rep{"qt-pair-bound", model_name, "", true, true, 0, "", ""};
    const int d = m.height_lipschitz();
    // most pieces a signature of total span <= d*n can have
    int k_max = 0;
    while ((k_max + 1) * (k_max + 2) / 2 <= d * n_max) ++k_max;
    const int stretch = std::max(0, (k_max - 1) * nu.r);

    int n_eff = n_max;
    std::vector<SpanTable> fwd, rev;
    for (int v = 0; v < m.orbit_count(); ++v) {
        fwd.push_back(count_bridges_by_span(m, m.orbit_rep(v), false, n_max + stretch, opt));
        rev.push_back(count_bridges_by_span(m, m.orbit_rep(v), true, n_max + stretch, opt));
        n_eff = std::min({n_eff, fwd.back().n_complete() - stretch,
                          rev.back().n_complete() - stretch});
    }
    n_eff = std::max(0, n_eff);

    bool seeded = false;
    for (int v = 0; v < m.orbit_count() && n_eff >= 1; ++v) {
        for (int n = 1; n <= n_eff; ++n) {
            for (const auto& [sig, cnt] : count_hsws_by_signature(m, m.orbit_rep(v), n)) {
                const int k = int(sig.size());
                int a_sum = 0, b_sum = 0;
                for (int j = 0; j < k; ++j) (j % 2 == 0 ? a_sum : b_sum) += sig[std::size_t(j)];
                const int s_plus = ((k + 1) / 2 - 1) * nu.r;  // junctions inside plus
                const int s_minus = (k / 2) * nu.r;           // one per even piece

                BigInt bound = 0;
                for (int mm = 0; mm <= n; ++mm) {
                    BigInt plus = 0;
                    for (int s = 0; s <= s_plus; ++s)
                        for (int t = 0; a_sum + t <= d * (mm + s); ++t)
                            plus += fwd[std::size_t(v)].at(mm + s, a_sum + t);
                    BigInt minus = 0;
                    for (int s = 0; s <= s_minus; ++s)
                        for (int t = 0; b_sum + t <= d * (n - mm + s); ++t)
                            minus += rev[std::size_t(v)].at(n - mm + s, b_sum + t);
                    bound += plus * minus;
                }
                BigInt mult = 1;
                for (int j = 1; j < k; ++j) mult *= nu.r + 1;
                bound *= mult;
                detail::bound_update(rep, seeded, cnt, bound,
                                     "rep=" + std::to_string(v) + " n=" + std::to_string(n) +
                                         " signature=" + detail::signature_string(sig));
            }
        }
    }
    detail::budget_note(rep, n_eff, n_max);
    return rep;
}

// Direct audit that the composite-pair map is at most (r+1)^(k-1) to one:
// group walks by (signature, plus steps, minus steps) and bound the largest
// group.
template <class M>
CheckReport audit_pair_multiplicity(const M& m, const std::string& model_name, int n_max,
                                    const NuTable<M>& nu) {
    CheckReport rep{"pair-multiplicity", model_name, "", true, true, 0, "", ""};
    bool seeded = false;
    for (int v = 0; v < m.orbit_count(); ++v) {
        for (int n = 1; n <= n_max; ++n) {
            std::map<std::tuple<std::vector<int>, std::vector<Label>, std::vector<Label>>,
                     BigInt>
                groups;
            enumerate_walks<M>(m, m.orbit_rep(v), WalkClass::Hsw, n, [&](const Walk<M>& w) {
                auto pair = build_bridge_pair(m, decompose_hsw(m, w), &nu);
                ++groups[{pair.signature, pair.plus.steps, pair.minus.steps}];
                return true;
            });
            for (const auto& [key, cnt] : groups) {
                int k = int(std::get<0>(key).size());
                BigInt cap = 1;
                for (int j = 1; j < k; ++j) cap *= nu.r + 1;
                detail::bound_update(rep, seeded, cnt, cap,
                                     "rep=" + std::to_string(v) + " n=" + std::to_string(n) +
                                         " signature=" +
                                         detail::signature_string(std::get<0>(key)));
            }
        }
    }
    rep.params = "n<=" + std::to_string(n_max);
    return rep;
}

// Span-resolved generating functions against direct enumeration on the
// grandparent graph: [x^n] B_a must equal the enumerated b_n(a), in both
// directions.
inline CheckReport check_gp_series_vs_enumeration(int a_max, int n_max,
                                                  const EnumOptions& opt = {}) {
    CheckReport rep{"gp-series", "gp", "", true, true, 0, "", ""};
    GrandparentModel gp;
    int n_eff = n_max;
    for (Direction dir : {Direction::Forward, Direction::Reversed}) {
        bool reversed = dir == Direction::Reversed;
        auto table = count_bridges_by_span(gp, TreeVertex{}, reversed, n_max, opt, a_max);
        n_eff = std::min(n_eff, table.n_complete());
        auto gfs = bridge_gf_table(a_max, dir);
        for (int a = 1; a <= a_max; ++a) {
            const Polynomial& gf = gfs[std::size_t(a)];
            for (int n = 0; n <= n_eff; ++n) {
                Rational coeff = gf.coeff(n);
                assert(coeff.get_den() == 1);
                detail::identity_update(rep, BigInt(coeff.get_num()), table.at(n, a),
                                        std::string(reversed ? "reversed" : "forward") +
                                            " a=" + std::to_string(a) +
                                            " n=" + std::to_string(n));
            }
        }
    }
    detail::budget_note(rep, n_eff, n_max);
    rep.params += " a<=" + std::to_string(a_max);
    return rep;
}

}  // namespace bridgewalk
