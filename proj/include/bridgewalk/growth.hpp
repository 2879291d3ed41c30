#pragma once

// Rigorous finite-size brackets for the connective constant.  Combining
// submultiplicativity of walk counts (c_{n+m} <= c_n c_m) with
// supermultiplicativity of bridge counts (b_n b_m <= b_{n+m}) gives, for
// every single n,
//
//     max(b_n, rev b_n)^{1/n}  <=  beta  <=  mu  <=  c_n^{1/n},
//
// and the decimal endpoints below are rounded outward so the printed bracket
// stays valid.

#include "bridgewalk/enumerate.hpp"

#include <optional>

namespace bridgewalk {

// Largest decimal number with `digits` significant digits whose n-th power is
// <= value; value >= 1, n >= 1.  Exact integer arithmetic throughout.
DirectedDecimal nth_root_lower(const BigInt& value, int n, int digits);
// Smallest decimal number with `digits` significant digits whose n-th power
// is >= value.
DirectedDecimal nth_root_upper(const BigInt& value, int n, int digits);

// Exact certificate that x^{1/n} <= y^{1/m}, i.e. x^m <= y^n.
bool nth_root_leq(const BigInt& x, int n, const BigInt& y, int m);

struct GrowthBracket {
    int n = 0;             // walk length the bounds were taken at
    BigInt c_n;            // walks (max over orbit representatives)
    BigInt b_n;            // bridges (min over orbit representatives)
    BigInt b_rev_n;        // reversed bridges (min over orbit representatives)
    DirectedDecimal lower; // max(b_n, b_rev_n)^{1/n}, rounded down
    DirectedDecimal upper; // c_n^{1/n}, rounded up
    double ratio_estimate = 0.0;  // c_n / c_{n-1}; heuristic only, not a bound
};

struct GrowthOptions {
    int digits = 12;
    int workers = 1;
    std::optional<double> budget_seconds;
};

// Brackets mu at the longest length all six counting passes completed; n may
// be lowered by the budget.  Returns nullopt only if nothing finished.
template <class M>
std::optional<GrowthBracket> mu_bracket(const M& m, int n, const GrowthOptions& opt = {}) {
    EnumOptions eopt;
    eopt.workers = opt.workers;
    eopt.budget_seconds = opt.budget_seconds;

    std::vector<CountTable> c_tabs, b_tabs, br_tabs;
    for (int v = 0; v < m.orbit_count(); ++v) {
        c_tabs.push_back(count_walks(m, m.orbit_rep(v), WalkClass::Saw, n, eopt));
        b_tabs.push_back(count_walks(m, m.orbit_rep(v), WalkClass::Bridge, n, eopt));
        br_tabs.push_back(count_walks(m, m.orbit_rep(v), WalkClass::ReversedBridge, n, eopt));
    }

    int n_eff = n;
    for (const auto& t : c_tabs) n_eff = std::min(n_eff, t.n_complete());
    for (const auto& t : b_tabs) n_eff = std::min(n_eff, t.n_complete());
    for (const auto& t : br_tabs) n_eff = std::min(n_eff, t.n_complete());
    if (n_eff < 1) return std::nullopt;

    GrowthBracket out;
    out.n = n_eff;
    out.c_n = 0;
    for (const auto& t : c_tabs) out.c_n = std::max(out.c_n, t.counts[std::size_t(n_eff)]);
    out.b_n = b_tabs[0].counts[std::size_t(n_eff)];
    out.b_rev_n = br_tabs[0].counts[std::size_t(n_eff)];
    for (const auto& t : b_tabs) out.b_n = std::min(out.b_n, t.counts[std::size_t(n_eff)]);
    for (const auto& t : br_tabs)
        out.b_rev_n = std::min(out.b_rev_n, t.counts[std::size_t(n_eff)]);

    out.lower = nth_root_lower(std::max(out.b_n, out.b_rev_n), n_eff, opt.digits);
    out.upper = nth_root_upper(out.c_n, n_eff, opt.digits);

    if (n_eff >= 2) {
        BigInt c_prev = 0;
        for (const auto& t : c_tabs)
            c_prev = std::max(c_prev, t.counts[std::size_t(n_eff - 1)]);
        out.ratio_estimate = out.c_n.get_d() / c_prev.get_d();
    } else {
        out.ratio_estimate = out.c_n.get_d();
    }
    return out;
}

}  // namespace bridgewalk
