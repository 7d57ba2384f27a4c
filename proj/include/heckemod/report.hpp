#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "heckemod/claims.hpp"
#include "heckemod/module_action.hpp"
#include "heckemod/oracle.hpp"
#include "heckemod/presentation.hpp"
#include "heckemod/span.hpp"

namespace heckemod {

using json = nlohmann::ordered_json;

/// One run's knobs. Oracle commands additionally require d > 2B' + 2 for
/// the coordinate ranges they scan; the constructor-level checks are done
/// where the values meet.
struct RunConfig {
    uint32_t p = 2;
    uint32_t q = 2;
    CharacterCase cse = CharacterCase::Iwahori;
    int c_value = 0;
    int window = 8;
    int precision = 8;
    uint64_t seed = 1;
    std::string format = "text";

    WeightConfig weight() const { return WeightConfig(cse, p, c_value); }

    json echo() const {
        json j;
        j["p"] = p;
        j["q"] = q;
        j["case"] = case_name(cse);
        j["c"] = c_value;
        j["window"] = window;
        j["precision"] = precision;
        j["seed"] = seed;
        return j;
    }
};

// ---------------------------------------------------------------------------
// Rendering: every report is an ordered_json object with the fixed shape
// {command, config, columns?, rows?, summary?, ok}; renderers below derive
// the text and csv forms from the same object, so all three formats are
// deterministic functions of the report.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string scalar_str(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline std::string render_report(const json& rep, const std::string& format) {
    if (format == "json") return rep.dump(2) + "\n";
    std::ostringstream os;
    if (format == "csv") {
        os << "# command=" << rep["command"].get<std::string>() << "\n";
        std::string cfgline;
        for (auto& [k, v] : rep["config"].items()) {
            if (!cfgline.empty()) cfgline += ",";
            cfgline += k + "=" + detail::scalar_str(v);
        }
        os << "# " << cfgline << "\n";
        if (rep.contains("columns")) {
            std::string head;
            for (auto& c : rep["columns"]) {
                if (!head.empty()) head += ",";
                head += c.get<std::string>();
            }
            os << head << "\n";
            for (auto& row : rep["rows"]) {
                std::string line;
                for (auto& v : row) {
                    if (!line.empty()) line += ",";
                    line += detail::csv_quote(detail::scalar_str(v));
                }
                os << line << "\n";
            }
        }
        if (rep.contains("summary"))
            for (auto& [k, v] : rep["summary"].items())
                os << "# " << k << "=" << detail::scalar_str(v) << "\n";
        os << "# ok=" << (rep["ok"].get<bool>() ? "true" : "false") << "\n";
        return os.str();
    }
    // text
    os << "command: " << rep["command"].get<std::string>() << "\n";
    os << "config:";
    for (auto& [k, v] : rep["config"].items()) os << " " << k << "=" << detail::scalar_str(v);
    os << "\n";
    if (rep.contains("columns")) {
        os << "columns:";
        for (auto& c : rep["columns"]) os << " " << c.get<std::string>();
        os << "\n";
        for (auto& row : rep["rows"]) {
            os << " ";
            for (auto& v : row) os << " " << detail::scalar_str(v);
            os << "\n";
        }
    }
    if (rep.contains("summary")) {
        os << "summary:";
        for (auto& [k, v] : rep["summary"].items()) os << " " << k << "=" << detail::scalar_str(v);
        os << "\n";
    }
    os << "ok: " << (rep["ok"].get<bool>() ? "true" : "false") << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Shared verification cores. The CLI commands and the acceptance suite run
// exactly these.
// ---------------------------------------------------------------------------

struct RelationOutcome {
    std::string name;
    int checked = 0;
    int failures = 0;
};

/// Checks every defining relation of the case as an operator identity on
/// the full window basis.
inline std::vector<RelationOutcome> verify_relations_on_window(const WeightConfig& cfg,
                                                               const Window& w) {
    using G = Generator;
    const auto basis = window_basis(cfg.cse, w);
    std::vector<RelationOutcome> out;

    auto check_pair = [&](const std::string& name, auto&& lhs_of, auto&& rhs_of) {
        RelationOutcome oc{name, 0, 0};
        for (const auto& f : basis) {
            const ModuleVector v = ModuleVector::unit(f);
            ++oc.checked;
            if (!(lhs_of(v) == rhs_of(v))) ++oc.failures;
        }
        out.push_back(oc);
    };

    PrimeField fp(cfg.p);
    auto neg = [&](ModuleVector v) {
        ModuleVector r;
        r.add_scaled(v, fp.neg(1), fp);
        return r;
    };

    switch (cfg.cse) {
        case CharacterCase::Iwahori:
            check_pair(
                "Tgamma^3 = 1",
                [&](const ModuleVector& v) {
                    return act_T_gamma(act_T_gamma(act_T_gamma(v, cfg), cfg), cfg);
                },
                [&](const ModuleVector& v) { return v; });
            check_pair(
                "Tomega1^2 = -Tomega1",
                [&](const ModuleVector& v) { return act_T_omega1(act_T_omega1(v, cfg), cfg); },
                [&](const ModuleVector& v) { return neg(act_T_omega1(v, cfg)); });
            break;
        case CharacterCase::SemiRegular:
            check_pair(
                "Tomega1^2 = -Tomega1",
                [&](const ModuleVector& v) { return act_T_omega1(act_T_omega1(v, cfg), cfg); },
                [&](const ModuleVector& v) { return neg(act_T_omega1(v, cfg)); });
            check_pair(
                "Tomega1_t10.Tomega1_t0m1 = 0",
                [&](const ModuleVector& v) {
                    return act_T_omega1_t01m(act_T_omega1_t10(v, cfg), cfg);
                },
                [&](const ModuleVector&) { return ModuleVector{}; });
            check_pair(
                "Tomega1_t0m1.Tomega1_t10 = 0",
                [&](const ModuleVector& v) {
                    return act_T_omega1_t10(act_T_omega1_t01m(v, cfg), cfg);
                },
                [&](const ModuleVector&) { return ModuleVector{}; });
            break;
        case CharacterCase::Regular:
            for (const auto& rule : relations(CharacterCase::Regular)) {
                const G x = rule.lhs[0], y = rule.lhs[1];
                check_pair(
                    generator_name(x) + "." + generator_name(y) + " = 0",
                    [&, x, y](const ModuleVector& v) {
                        return act_generator(y, act_generator(x, v, cfg), cfg);
                    },
                    [&](const ModuleVector&) { return ModuleVector{}; });
            }
            break;
    }
    return out;
}

struct TheoremOutcome {
    int pairs_total = 0;        // ordered pairs scanned
    int proper_pairs = 0;       // pairs with a* proper to a
    int transporter_failures = 0;
    int reachability_mismatches = 0;
};

/// Scans all ordered pairs of S_Id points in the window: properness must
/// coincide with reachability by the two translations, and on every proper
/// pair the constructed transporter word must carry f_{Id,a} to f_{Id,a*}
/// with coefficient one.
inline TheoremOutcome verify_theorem_on_window(const WeightConfig& cfg, const Window& w) {
    const auto id = WeylElem::identity(3);
    std::vector<LatticeVec> pts;
    for (const auto& a : w.points(3))
        if (s_omega_contains(id, a)) pts.push_back(a);
    TheoremOutcome oc;
    for (const auto& a : pts)
        for (const auto& b : pts) {
            ++oc.pairs_total;
            const bool proper = is_proper(id, b, a);
            const int m = (b.coords[1] - b.coords[0]) - (a.coords[1] - a.coords[0]);
            const int n = a.coords[1] - b.coords[1];
            const bool reachable = m >= 0 && n >= 0;
            if (proper != reachable) {
                ++oc.reachability_mismatches;
                continue;
            }
            if (!proper) continue;
            ++oc.proper_pairs;
            const OperatorWord word = find_transporter(a, b, cfg.cse);
            const ModuleVector got =
                act_word(word, ModuleVector::unit(BasisFunction(id, a)), cfg);
            if (!(got == ModuleVector::unit(BasisFunction(id, b)))) ++oc.transporter_failures;
        }
    return oc;
}

// ---------------------------------------------------------------------------
// Command reports.
// ---------------------------------------------------------------------------

inline json cmd_partition(const RunConfig& cfg, int rank) {
    const PartitionResult res = partition_window(Window(cfg.window), rank);
    json rep;
    rep["command"] = "partition";
    rep["config"] = cfg.echo();
    rep["config"]["N"] = rank;
    rep["columns"] = json::array({"omega", "size"});
    json rows = json::array();
    for (const auto& [w, n] : res.class_sizes) rows.push_back(json::array({w.one_line(), n}));
    rep["rows"] = rows;
    json summary;
    summary["points"] = res.classes.size() + res.violations.size();
    summary["nonempty_classes"] = res.class_sizes.size();
    summary["violations"] = res.violations.size();
    rep["summary"] = summary;
    rep["ok"] = res.ok();
    return rep;
}

inline json cmd_act(const RunConfig& cfg, const OperatorWord& word, const BasisFunction& f) {
    const WeightConfig wc = cfg.weight();
    const ModuleVector out = act_word(word, ModuleVector::unit(f), wc);
    json rep;
    rep["command"] = "act";
    rep["config"] = cfg.echo();
    json summary;
    summary["word"] = word.str();
    summary["input"] = ModuleVector::unit(f).str();
    summary["result"] = out.str();
    rep["summary"] = summary;
    rep["ok"] = true;
    return rep;
}

inline json cmd_relations(const RunConfig& cfg) {
    const auto outcomes = verify_relations_on_window(cfg.weight(), Window(cfg.window));
    json rep;
    rep["command"] = "relations";
    rep["config"] = cfg.echo();
    rep["columns"] = json::array({"relation", "checked", "failures", "status"});
    json rows = json::array();
    bool ok = true;
    for (const auto& oc : outcomes) {
        rows.push_back(json::array(
            {oc.name, oc.checked, oc.failures, oc.failures == 0 ? "pass" : "fail"}));
        ok = ok && oc.failures == 0;
    }
    rep["rows"] = rows;
    rep["ok"] = ok;
    return rep;
}

inline json cmd_theorem(const RunConfig& cfg, const std::optional<LatticeVec>& from,
                        const std::optional<LatticeVec>& to) {
    json rep;
    rep["command"] = "theorem";
    rep["config"] = cfg.echo();
    const WeightConfig wc = cfg.weight();
    if (from && to) {
        // Explicit pair: domain errors (improper or outside S_Id) surface.
        const OperatorWord word = find_transporter(*from, *to, cfg.cse);
        const ModuleVector got = act_word(
            word, ModuleVector::unit(BasisFunction(WeylElem::identity(3), *from)), wc);
        const bool ok =
            got == ModuleVector::unit(BasisFunction(WeylElem::identity(3), *to));
        json summary;
        summary["from"] = from->str();
        summary["to"] = to->str();
        summary["word"] = word.str();
        summary["result"] = got.str();
        rep["summary"] = summary;
        rep["ok"] = ok;
        return rep;
    }
    const TheoremOutcome oc = verify_theorem_on_window(wc, Window(cfg.window));
    json summary;
    summary["pairs_total"] = oc.pairs_total;
    summary["proper_pairs"] = oc.proper_pairs;
    summary["transporter_failures"] = oc.transporter_failures;
    summary["reachability_mismatches"] = oc.reachability_mismatches;
    rep["summary"] = summary;
    rep["ok"] = oc.transporter_failures == 0 && oc.reachability_mismatches == 0;
    return rep;
}

inline json corollary_to_json(const CorollaryReport& r) {
    json j;
    j["version"] = 1;
    j["generator"] = json::array({r.generator.coords[0], r.generator.coords[1]});
    j["case"] = case_name(r.cse);
    j["c"] = r.c_value;
    j["p"] = r.p;
    j["window"] = r.bound;
    j["dim_m"] = r.dim_m;
    j["dim_mpp"] = r.dim_mpp;
    j["dim_intersection"] = r.dim_intersection;
    j["verdict"] = r.pass ? "pass" : "fail";
    return j;
}

inline json cmd_corollary(const RunConfig& cfg, const LatticeVec& gen,
                          ClosureMode mode = ClosureMode::Translators) {
    const CorollaryReport r = corollary_certificate(gen, cfg.weight(), Window(cfg.window), mode);
    json rep;
    rep["command"] = "corollary";
    rep["config"] = cfg.echo();
    rep["summary"] = corollary_to_json(r);
    rep["ok"] = r.pass;
    return rep;
}

inline json cmd_oracle(const RunConfig& cfg, const std::vector<Claim>& claims) {
    if (cfg.precision <= 2 * cfg.window + 2)
        throw std::invalid_argument("oracle runs require precision d > 2*window + 2");
    const Oracle orc(cfg.q, cfg.precision);
    const auto results = run_claims(claims, orc);
    json rep;
    rep["command"] = "oracle";
    rep["config"] = cfg.echo();
    rep["columns"] = json::array({"line", "kind", "status", "detail"});
    json rows = json::array();
    bool ok = true;
    int passed = 0;
    for (const auto& r : results) {
        rows.push_back(json::array({r.line_no, r.kind, r.pass ? "pass" : "fail", r.detail}));
        ok = ok && r.pass;
        if (r.pass) ++passed;
    }
    rep["rows"] = rows;
    json summary;
    summary["claims"] = results.size();
    summary["passed"] = passed;
    rep["summary"] = summary;
    rep["ok"] = ok;
    return rep;
}

}  // namespace heckemod
