// bridgewalk: exact counting of self-avoiding walks, bridges, and half-space
// walks on quasi-transitive graphs with height functions, plus the exact
// generating-function treatment of the grandparent graph.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include "bridgewalk/growth.hpp"
#include "bridgewalk/roots.hpp"
#include "bridgewalk/verify.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace bridgewalk;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    int workers = 1;
    std::optional<double> budget_seconds;
    bool manifest = false;

    EnumOptions enum_opts() const {
        EnumOptions e;
        e.workers = workers;
        e.budget_seconds = budget_seconds;
        return e;
    }
};

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// All stdout goes through this buffer so the manifest can digest it.
struct Output {
    std::string buffer;
    bool manifest = false;

    void emit(const std::string& s) { buffer += s; }
    void emit_json(const json& j) {
        buffer += j.dump(2);
        buffer += '\n';
    }
    ~Output() {
        std::fwrite(buffer.data(), 1, buffer.size(), stdout);
        std::fflush(stdout);
        if (manifest)
            std::fprintf(stderr, "manifest fnv1a64=%016" PRIx64 " bytes=%zu\n",
                         fnv1a64(buffer), buffer.size());
    }
};

json interval_json(const Rational& lo, const Rational& hi, int digits) {
    return json{{"lo", rational_string(lo)},
                {"hi", rational_string(hi)},
                {"lo_decimal", decimal_round_down(lo, digits).text},
                {"hi_decimal", decimal_round_up(hi, digits).text}};
}

json report_json(const CheckReport& r) {
    return json{{"check", r.check},
                {"model", r.model},
                {"params", r.params},
                {"pass", r.pass},
                {"complete", r.complete},
                {"worst_margin", r.worst_margin.get_str()},
                {"counterexample", r.counterexample},
                {"note", r.note}};
}

template <class M>
Label parse_label(const M& m, const std::string& name) {
    for (Label l = 0; l < Label(m.label_count()); ++l)
        if (m.label_name(l) == name) return l;
    throw Usage("unknown step label '" + name + "' on graph " + m.name());
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) out.push_back(tok);
    return out;
}

int start_orbit_checked(int orbit, int orbit_count) {
    if (orbit < 0 || orbit >= orbit_count)
        throw Usage("start orbit " + std::to_string(orbit) + " out of range (" +
                    std::to_string(orbit_count) + " orbits)");
    return orbit;
}

// ---------------------------------------------------------------- count ----

struct CountArgs {
    std::string graph = "z2";
    std::string cls = "saw";
    int n_max = 8;
    int start_orbit = 0;
    bool spans = false;
    std::optional<int> span_cap;
    std::string format = "json";
};

int run_count(const CountArgs& a, const GlobalOptions& g, Output& out) {
    auto cls = parse_walk_class(a.cls);
    if (!cls) throw Usage("unknown walk class '" + a.cls + "'");
    if (a.n_max < 0) throw Usage("--n-max must be >= 0");
    if (a.spans && *cls != WalkClass::Bridge && *cls != WalkClass::ReversedBridge)
        throw Usage("--spans applies to bridge classes only");
    if (a.format != "json" && a.format != "csv")
        throw Usage("unknown format '" + a.format + "'");

    return with_model(a.graph, [&](const auto& m) {
        auto start = m.orbit_rep(start_orbit_checked(a.start_orbit, m.orbit_count()));
        if (a.spans) {
            auto t = count_bridges_by_span(m, start, *cls == WalkClass::ReversedBridge,
                                           a.n_max, g.enum_opts(), a.span_cap);
            if (a.format == "csv") {
                out.emit("n,span,count\n");
                for (int n = 0; n <= t.n_complete(); ++n)
                    for (std::size_t s = 0; s < t.rows[std::size_t(n)].size(); ++s)
                        out.emit(std::to_string(n) + "," + std::to_string(s) + "," +
                                 t.rows[std::size_t(n)][s].get_str() + "\n");
            } else {
                json rows = json::array();
                for (const auto& row : t.rows) {
                    json r = json::array();
                    for (const auto& c : row) r.push_back(c.get_str());
                    rows.push_back(std::move(r));
                }
                out.emit_json(json{{"graph", a.graph},
                                   {"class", a.cls},
                                   {"start_orbit", t.start_orbit},
                                   {"n_max", a.n_max},
                                   {"partial", t.partial},
                                   {"span_cap", a.span_cap ? json(*a.span_cap) : json()},
                                   {"rows", std::move(rows)}});
            }
        } else {
            auto t = count_walks(m, start, *cls, a.n_max, g.enum_opts());
            if (a.format == "csv") {
                out.emit("n,count\n");
                for (int n = 0; n <= t.n_complete(); ++n)
                    out.emit(std::to_string(n) + "," + t.counts[std::size_t(n)].get_str() +
                             "\n");
            } else {
                json counts = json::array();
                for (const auto& c : t.counts) counts.push_back(c.get_str());
                out.emit_json(json{{"graph", a.graph},
                                   {"class", a.cls},
                                   {"start_orbit", t.start_orbit},
                                   {"n_max", a.n_max},
                                   {"partial", t.partial},
                                   {"counts", std::move(counts)}});
            }
        }
        return kExitSuccess;
    });
}

// ------------------------------------------------------------ decompose ----

struct DecomposeArgs {
    std::string graph = "z2";
    std::string labels;
    int start_orbit = 0;
};

int run_decompose(const DecomposeArgs& a, const GlobalOptions&, Output& out) {
    if (a.labels.empty()) throw Usage("--labels is required");
    return with_model(a.graph, [&](const auto& m) {
        using Model = std::decay_t<decltype(m)>;
        auto start = m.orbit_rep(start_orbit_checked(a.start_orbit, m.orbit_count()));

        std::vector<Label> steps;
        for (const auto& tok : split_csv(a.labels)) steps.push_back(parse_label(m, tok));

        Walk<Model> w;
        try {
            w = apply_steps(m, start, steps);
        } catch (const std::exception& e) {
            throw Usage(std::string("invalid walk: ") + e.what());
        }
        if (w.length() < 1 || !is_hsw(m, w))
            throw Usage("the given walk is not a half-space walk");

        auto dec = decompose_hsw(m, w);
        std::optional<NuTable<Model>> nu;
        if (!m.transitive()) nu = find_nu_walks(m, 4);
        auto pair = build_bridge_pair(m, dec, nu ? &*nu : nullptr);

        auto labels_of = [&](const Walk<Model>& walk) {
            json l = json::array();
            for (Label s : walk.steps) l.push_back(std::string(m.label_name(s)));
            return l;
        };
        json nu_uses = json::array();
        for (const auto& u : pair.nu_uses)
            nu_uses.push_back(json{{"in_minus", u.in_minus},
                                   {"from_orbit", u.from_orbit},
                                   {"to_orbit", u.to_orbit},
                                   {"length", u.length}});
        out.emit_json(json{{"graph", a.graph},
                           {"start_orbit", a.start_orbit},
                           {"labels", labels_of(w)},
                           {"heights", w.heights},
                           {"spans", dec.spans},
                           {"cuts", dec.cuts},
                           {"pi_plus_labels", labels_of(pair.plus)},
                           {"pi_minus_labels", labels_of(pair.minus)},
                           {"nu_uses", std::move(nu_uses)}});
        return kExitSuccess;
    });
}

// ------------------------------------------------------------ partitions ----

struct PartitionArgs {
    int a = 10;
    int max_parts = -1;
    bool list = false;
    bool ratio = false;
};

int run_partitions(const PartitionArgs& a, const GlobalOptions&, Output& out) {
    if (a.a < 0) throw Usage("--a must be >= 0");
    json j{{"a", a.a}};
    if (a.max_parts >= 0) {
        j["max_parts"] = a.max_parts;
        j["count"] = BigInt(long(list_distinct_partitions(a.a, a.max_parts).size())).get_str();
    } else {
        j["count"] = distinct_partitions(a.a).get_str();
    }
    if (a.list) {
        if (a.a > 64) throw Usage("--list supports a <= 64");
        j["partitions"] = list_distinct_partitions(a.a, a.max_parts);
    }
    if (a.ratio) {
        if (a.a < 1) throw Usage("--ratio needs a >= 1");
        j["ratio"] = hr_ratio(a.a);
        j["ratio_note"] = "log count / (pi sqrt(a/3)); tends to 1 from below";
    }
    out.emit_json(j);
    return kExitSuccess;
}

// -------------------------------------------------------------- gp-exact ----

struct GpExactArgs {
    bool reversed = false;
    int precision_bits = 64;
    bool show_polynomials = false;
};

json direction_json(Direction dir, int precision_bits, bool show_polys) {
    auto c = bridge_constant_exact(dir, precision_bits);
    json quartic = json::array();
    for (int i = 0; i <= c.quartic.degree(); ++i) {
        Rational q = c.quartic.coeff(i);
        quartic.push_back(BigInt(q.get_num()).get_str());
    }
    json j{{"quartic_coefficients", std::move(quartic)},
           {"root_interval", interval_json(c.root.lo, c.root.hi, 17)},
           {"constant_interval", interval_json(c.value.lo, c.value.hi, 17)}};
    if (show_polys) {
        j["threshold_numerator"] = threshold_quartic(dir).to_string();
        auto coeffs = span_recursion_coeffs(5, dir);
        j["recursion_at_span_5"] = json{{"f", coeffs.f.to_string()},
                                        {"g", coeffs.g.to_string()},
                                        {"h", coeffs.h.to_string()}};
        j["span_gfs"] = json::array();
        auto table = bridge_gf_table(4, dir);
        for (const auto& p : table) j["span_gfs"].push_back(p.to_string());
    }
    return j;
}

int run_gp_exact(const GpExactArgs& a, const GlobalOptions&, Output& out) {
    if (a.precision_bits < 1 || a.precision_bits > 4096)
        throw Usage("--precision-bits must be in [1, 4096]");
    json j{{"graph", "gp"}, {"precision_bits", a.precision_bits}};
    if (a.reversed) {
        j["reversed"] = direction_json(Direction::Reversed, a.precision_bits,
                                       a.show_polynomials);
    } else {
        j["forward"] =
            direction_json(Direction::Forward, a.precision_bits, a.show_polynomials);
        j["reversed"] = direction_json(Direction::Reversed, a.precision_bits,
                                       a.show_polynomials);
        // the walk growth constant equals the larger (forward) bridge constant
        j["mu_interval"] = j["forward"]["constant_interval"];
    }
    out.emit_json(j);
    return kExitSuccess;
}

// -------------------------------------------------------------- constants ----

struct ConstantsArgs {
    std::string graph = "gp";
    int n_max = 6;
    int digits = 12;
};

int run_constants(const ConstantsArgs& a, const GlobalOptions& g, Output& out) {
    if (a.n_max < 1) throw Usage("--n-max must be >= 1");
    if (a.digits < 1 || a.digits > 64) throw Usage("--digits must be in [1, 64]");
    return with_model(a.graph, [&](const auto& m) {
        GrowthOptions opt;
        opt.digits = a.digits;
        opt.workers = g.workers;
        opt.budget_seconds = g.budget_seconds;
        auto br = mu_bracket(m, a.n_max, opt);
        if (!br) throw Usage("time budget too small: no length completed");
        out.emit_json(json{
            {"graph", a.graph},
            {"n", br->n},
            {"n_requested", a.n_max},
            {"c_n", br->c_n.get_str()},
            {"b_n", br->b_n.get_str()},
            {"b_rev_n", br->b_rev_n.get_str()},
            {"mu_lower", br->lower.text},
            {"mu_upper", br->upper.text},
            {"bounds_note", "mu_lower <= bridge growth <= walk growth <= mu_upper"},
            {"ratio_estimate", br->ratio_estimate},
            {"ratio_note", "c_n / c_(n-1); heuristic only, not a rigorous bound"}});
        return kExitSuccess;
    });
}

// ----------------------------------------------------------------- verify ----

struct VerifyArgs {
    std::string graph = "all";
    int n_max = 6;
    int gp_span = 6;
};

int run_verify(const VerifyArgs& a, const GlobalOptions& g, Output& out) {
    if (a.n_max < 1) throw Usage("--n-max must be >= 1");
    VerifyOptions vo;
    vo.n_max = a.n_max;
    vo.gp_series_span = a.gp_span;
    vo.enum_opts = g.enum_opts();

    std::vector<std::string> graphs;
    if (a.graph == "all") {
        graphs = model_names();
    } else {
        graphs.push_back(a.graph);
    }

    json reports = json::array();
    bool all_pass = true;
    for (const auto& name : graphs) {
        for (const auto& r : run_checks(name, vo)) {
            all_pass = all_pass && r.pass;
            reports.push_back(report_json(r));
        }
    }
    out.emit_json(json{{"graph", a.graph},
                       {"n_max", a.n_max},
                       {"all_pass", all_pass},
                       {"reports", std::move(reports)}});
    return all_pass ? kExitSuccess : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact walk, bridge, and half-space-walk counting on graphs "
                 "with height functions"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    GlobalOptions g;
    if (const char* env = std::getenv("BRIDGEWALK_WORKERS")) g.workers = std::atoi(env);
    app.add_option("--workers", g.workers, "worker threads for counting")
        ->check(CLI::Range(1, 256));
    app.add_option("--budget-seconds", g.budget_seconds,
                   "soft time budget per counting pass");
    app.add_flag("--manifest", g.manifest, "print an output digest to stderr");

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count walks of one class by length");
    count->add_option("--graph", count_args.graph, "graph model")->required();
    count->add_option("--class", count_args.cls,
                      "saw | bridge | reversed-bridge | hsw | reversed-hsw");
    count->add_option("--n-max", count_args.n_max, "largest length")->required();
    count->add_option("--start-orbit", count_args.start_orbit, "start vertex orbit");
    count->add_flag("--spans", count_args.spans, "refine bridge counts by span");
    count->add_option("--span-cap", count_args.span_cap, "prune spans above this cap");
    count->add_option("--format", count_args.format, "json | csv");

    DecomposeArgs dec_args;
    auto* dec = app.add_subcommand("decompose",
                                   "decompose a half-space walk into bridges");
    dec->add_option("--graph", dec_args.graph, "graph model")->required();
    dec->add_option("--labels", dec_args.labels, "comma-separated step labels")
        ->required();
    dec->add_option("--start-orbit", dec_args.start_orbit, "start vertex orbit");

    PartitionArgs part_args;
    auto* part = app.add_subcommand("partitions", "partitions into distinct parts");
    part->add_option("--a", part_args.a, "number to partition")->required();
    part->add_option("--max-parts", part_args.max_parts, "limit the number of parts");
    part->add_flag("--list", part_args.list, "list the partitions");
    part->add_flag("--ratio", part_args.ratio, "include the asymptotic ratio");

    GpExactArgs gp_args;
    auto* gp = app.add_subcommand(
        "gp-exact", "exact grandparent-graph growth constants from quartics");
    gp->add_flag("--reversed", gp_args.reversed, "reversed direction only");
    gp->add_option("--precision-bits", gp_args.precision_bits,
                   "bracket width 2^-bits");
    gp->add_flag("--show-polynomials", gp_args.show_polynomials,
                 "include recursion polynomials");

    ConstantsArgs const_args;
    auto* consts = app.add_subcommand(
        "constants", "rigorous growth-constant brackets from finite counts");
    consts->add_option("--graph", const_args.graph, "graph model")->required();
    consts->add_option("--n-max", const_args.n_max, "bracket length");
    consts->add_option("--digits", const_args.digits, "significant digits");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the counting identity checks");
    verify->add_option("--graph", verify_args.graph, "graph model, or 'all'");
    verify->add_option("--n-max", verify_args.n_max, "largest length checked");
    verify->add_option("--gp-span", verify_args.gp_span,
                       "largest span for the series cross-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Output out;
    out.manifest = g.manifest;
    try {
        if (count->parsed()) return run_count(count_args, g, out);
        if (dec->parsed()) return run_decompose(dec_args, g, out);
        if (part->parsed()) return run_partitions(part_args, g, out);
        if (gp->parsed()) return run_gp_exact(gp_args, g, out);
        if (consts->parsed()) return run_constants(const_args, g, out);
        if (verify->parsed()) return run_verify(verify_args, g, out);
    } catch (const Usage& e) {
        std::fprintf(stderr, "bridgewalk: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "bridgewalk: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "bridgewalk: internal error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
