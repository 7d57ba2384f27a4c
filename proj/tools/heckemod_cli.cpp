// Batch command-line surface for the Hecke module engine: windowed
// verification runs with deterministic, machine-readable reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heckemod/report.hpp"

namespace {

using namespace heckemod;

LatticeVec parse_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("expected 'a1,a2', got '" + s + "'");
    return LatticeVec(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

OperatorWord parse_word(CharacterCase cse, const std::string& s) {
    std::vector<Generator> letters;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ','))
        if (!cur.empty()) letters.push_back(generator_from_name(cur));
    return OperatorWord(cse, std::move(letters));
}

BasisFunction parse_basis(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("expected 'omega:a1,a2', got '" + s + "'");
    return BasisFunction(WeylElem::from_one_line(s.substr(0, colon)),
                         parse_pair(s.substr(colon + 1)));
}

int emit(const json& rep, const RunConfig& cfg, const std::string& out_path) {
    const std::string rendered = render_report(rep, cfg.format);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
        out << rendered;
    }
    return rep["ok"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Iwahori-Hecke module computations for GL(3) over a local field"};
    app.require_subcommand(1);
    // Let global flags appear after the subcommand as well.
    app.fallthrough();

    RunConfig cfg;
    std::string case_name_arg = "iwahori";
    std::string out_path;
    app.add_option("--p", cfg.p, "coefficient field characteristic (prime)");
    app.add_option("--q", cfg.q, "oracle residue field order (prime)");
    app.add_option("--case", case_name_arg, "character case: iwahori|semiregular|regular");
    app.add_option("--c", cfg.c_value, "wall scalar for T_omega1, 0 or -1")
        ->check(CLI::IsMember({0, -1}));
    app.add_option("--window,-B", cfg.window, "window bound B (box |a_i| <= B)");
    app.add_option("--precision,-d", cfg.precision, "oracle working depth");
    app.add_option("--seed", cfg.seed, "seed for sampled checks");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    auto* sub_partition = app.add_subcommand("partition", "classify every window point into its S_omega");
    int rank = 3;
    sub_partition->add_option("--rank,-N", rank, "rank N (window lives in Z^(N-1))")
        ->check(CLI::Range(3, 6));

    auto* sub_act = app.add_subcommand("act", "apply an operator word to a basis function");
    std::string word_arg, basis_arg;
    sub_act->add_option("--word", word_arg, "comma-separated generators, e.g. Tgamma,Tomega1")
        ->required();
    sub_act->add_option("--basis", basis_arg, "basis function as omega:a1,a2, e.g. 123:-2,-1")
        ->required();

    app.add_subcommand("relations", "verify the case's defining relations on the window basis");

    auto* sub_theorem =
        app.add_subcommand("theorem", "transporters between proper pairs across the window");
    std::string from_arg, to_arg;
    sub_theorem->add_option("--from", from_arg, "source point a1,a2 (with --to: single pair)");
    sub_theorem->add_option("--to", to_arg, "target point a1,a2");

    auto* sub_corollary =
        app.add_subcommand("corollary", "infinite-codimension window certificate");
    std::string gen_arg = "-3,-2";
    bool raw_mode = false;
    sub_corollary->add_option("--gen", gen_arg, "generator point a1,a2 (a1 < a2 < -1)");
    sub_corollary->add_flag("--raw-words", raw_mode,
                            "close under single generators instead of translator words");

    auto* sub_oracle = app.add_subcommand("oracle", "run a claim file against the brute-force oracle");
    std::string claims_path;
    sub_oracle->add_option("--claims", claims_path, "line-oriented claim file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.cse = case_from_name(case_name_arg);
        PrimeField check_p(cfg.p);
        PrimeField check_q(cfg.q);

        if (sub_partition->parsed()) return emit(cmd_partition(cfg, rank), cfg, out_path);
        if (sub_act->parsed())
            return emit(cmd_act(cfg, parse_word(cfg.cse, word_arg), parse_basis(basis_arg)), cfg,
                        out_path);
        if (app.get_subcommand("relations")->parsed())
            return emit(cmd_relations(cfg), cfg, out_path);
        if (sub_theorem->parsed()) {
            std::optional<LatticeVec> from, to;
            if (!from_arg.empty()) from = parse_pair(from_arg);
            if (!to_arg.empty()) to = parse_pair(to_arg);
            if (from.has_value() != to.has_value())
                throw CLI::ValidationError("--from and --to must be given together");
            return emit(cmd_theorem(cfg, from, to), cfg, out_path);
        }
        if (sub_corollary->parsed())
            return emit(cmd_corollary(cfg, parse_pair(gen_arg),
                                      raw_mode ? ClosureMode::RawWords : ClosureMode::Translators),
                        cfg, out_path);
        if (sub_oracle->parsed()) {
            std::ifstream in(claims_path);
            if (!in) {
                std::cerr << "cannot open claim file: " << claims_path << "\n";
                return 2;
            }
            return emit(cmd_oracle(cfg, parse_claims(in)), cfg, out_path);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
