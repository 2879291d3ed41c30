#pragma once

// One-call verification drivers: run every check that applies to a model.

#include "bridgewalk/checks.hpp"
#include "bridgewalk/models.hpp"

namespace bridgewalk {

struct VerifyOptions {
    int n_max = 6;
    int gp_series_span = 6;  // largest span cross-checked against the series
    int nu_r_bound = 4;      // connector search radius on quasi-transitive models
    EnumOptions enum_opts;
};

template <class M>
std::vector<CheckReport> run_model_checks(const M& m, const VerifyOptions& vo = {}) {
    std::vector<CheckReport> out;
    const std::string name = m.name();
    out.push_back(check_span_sum(m, name, vo.n_max, vo.enum_opts));
    out.push_back(check_signature_sum(m, name, vo.n_max, vo.enum_opts));
    out.push_back(check_hsw_pd_bound(m, name, vo.n_max, vo.enum_opts));
    out.push_back(check_multiplicativity(m, name, vo.n_max, vo.enum_opts));
    if (m.transitive()) {
        out.push_back(check_hsw_pair_bound(m, name, vo.n_max, vo.enum_opts));
        out.push_back(check_saw_split_bound(m, name, vo.n_max, vo.enum_opts));
    } else {
        auto nu = find_nu_walks(m, vo.nu_r_bound);
        out.push_back(check_qt_pair_bound(m, name, vo.n_max, nu, vo.enum_opts));
        out.push_back(audit_pair_multiplicity(m, name, vo.n_max, nu));
    }
    return out;
}

inline std::vector<CheckReport> run_checks(const std::string& name,
                                           const VerifyOptions& vo = {}) {
    auto reports =
        with_model(name, [&](const auto& m) { return run_model_checks(m, vo); });
    if (name == "gp")
        reports.push_back(
            check_gp_series_vs_enumeration(vo.gp_series_span, vo.n_max, vo.enum_opts));
    return reports;
}

}  // namespace bridgewalk
