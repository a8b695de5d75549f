// enscoh: ensemble coherence and one-way discrimination from the command line.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "enscoh/acceptance.hpp"
#include "enscoh/coherence.hpp"
#include "enscoh/discrimination.hpp"
#include "enscoh/ensemble_io.hpp"
#include "enscoh/sweep.hpp"
#include "enscoh/unitary_opt.hpp"

using namespace enscoh;
using nlohmann::json;

namespace {

std::string sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%#.6g", v == 0.0 ? 0.0 : v);
    return buf;
}

json complex_list(const CVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v[i].real(), v[i].imag()});
    return out;
}

json matrix_json(const CMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(complex_list(m.row(i).transpose()));
    return rows;
}

std::string ket_text(const CVector& v) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const cplx a = v[i];
        s += (i ? ", " : "") + sig6(a.real());
        if (std::abs(a.imag()) > 1e-12) s += (a.imag() < 0 ? "-" : "+") + sig6(std::abs(a.imag())) + "i";
    }
    return s + ")";
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
    if (!out) throw Error("write failed for '" + path + "'");
}

OptimizerConfig config_for(const ProductEnsemble& e, std::size_t restarts, std::uint64_t seed) {
    OptimizerConfig cfg = OptimizerConfig::defaults_for(e.d1(), e.d2(), seed);
    if (restarts > 0) cfg.restarts = restarts;
    return cfg;
}

int cmd_measure(const std::string& target, const std::string& measure, std::size_t restarts, std::uint64_t seed,
                const std::string& json_path) {
    const ProductEnsemble e = resolve_ensemble(target);
    const CoherenceMeasure m = parse_measure(measure);
    const CoherenceReport r = mec(e, m, config_for(e, restarts, seed));
    const auto view = two_block_view(e);

    std::cout << "ensemble  " << (e.label().empty() ? target : e.label()) << " (" << e.d1() << "x" << e.d2() << ", "
              << e.size() << " states)\n"
              << "measure   " << to_string(m) << "\n"
              << "tau       " << sig6(r.tau) << "\n"
              << "MEC       " << sig6(r.mec) << "\n"
              << "MEC^n     " << sig6(r.mec_normalized) << "\n"
              << "CD        " << sig6(r.deficit) << "\n";
    if (view) std::cout << "C_r       " << sig6(relative_local_coherence(e)) << "\n";
    std::cout << "tau ties  " << r.tau_ties.size() << "\n";

    if (!json_path.empty()) {
        json j{{"ensemble", ensemble_to_json(e)},
               {"measure", to_string(m)},
               {"tau", r.tau},
               {"mec", r.mec},
               {"mec_normalized", r.mec_normalized},
               {"deficit", r.deficit},
               {"u1", matrix_json(r.u1_star.matrix())},
               {"u2", matrix_json(r.u2_star.matrix())},
               {"tau_ties", r.tau_ties.size()}};
        if (view) j["c_r"] = relative_local_coherence(e);
        write_json(json_path, j);
    }
    return 0;
}

int cmd_discriminate(const std::string& target, const std::string& criterion, std::size_t restarts,
                     std::uint64_t seed, const std::string& json_path) {
    const ProductEnsemble e = resolve_ensemble(target);
    if (!two_block_view(e)) {
        throw Error("discriminate: only two-block 2 x d ensembles {|0>eta1^(k)} u {|1>eta2^(k)} are supported");
    }
    const SuccessCriterion c = parse_criterion(criterion);
    const DiscriminationResult r = success_probability(e, config_for(e, restarts, seed));

    std::cout << "configuration ";
    for (std::size_t i = 0; i < r.config.d; ++i) std::cout << (i ? " " : "") << i << "->" << r.config.pairing[i];
    std::cout << "\nprojectors\n";
    for (std::size_t k = 0; k < r.projectors.d(); ++k) {
        std::cout << "  phi_" << k << " = " << ket_text(r.projectors.directions()[k].amplitudes()) << "\n";
    }
    std::cout << "p_succ_worst " << sig6(r.p_succ_worst) << "\n"
              << "p_succ_avg   " << sig6(r.p_succ_avg) << "\n"
              << "p_succ       " << sig6(r.p_succ(c)) << " (" << to_string(c) << ")\n"
              << "reduced sets\n";
    for (std::size_t k = 0; k < r.reduced_sets.size(); ++k) {
        const ReducedSet& s = r.reduced_sets[k];
        std::cout << "  outcome " << k << " -> S_" << s.index << " = {|0 eta1^(" << s.first << ")>, |1 eta2^("
                  << s.second << ")>}\n";
    }

    if (!json_path.empty()) {
        json dirs = json::array(), sets = json::array();
        for (const auto& k : r.projectors.directions()) dirs.push_back(complex_list(k.amplitudes()));
        for (const auto& s : r.reduced_sets) sets.push_back({{"index", s.index}, {"first", s.first}, {"second", s.second}});
        write_json(json_path, {{"configuration", r.config.pairing},
                               {"projectors", dirs},
                               {"p_succ_worst", r.p_succ_worst},
                               {"p_succ_avg", r.p_succ_avg},
                               {"criterion", to_string(c)},
                               {"p_succ", r.p_succ(c)},
                               {"reduced_sets", sets}});
    }
    return 0;
}

int cmd_sweep(const std::string& family, std::size_t samples, std::uint64_t seed, const std::string& measure,
              const std::string& criterion, std::size_t restarts, const std::string& out_path,
              const std::string& svg_path) {
    SweepSpec spec;
    spec.family = parse_family(family);
    spec.samples = samples;
    spec.seed = seed;
    spec.measure = parse_measure(measure);
    spec.criterion = parse_criterion(criterion);
    if (restarts > 0) spec.restarts = restarts;
    spec.validate();
    const auto rows = run_sweep(spec);

    std::ostringstream csv;
    write_csv(csv, rows);
    if (out_path.empty() || out_path == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << csv.str();
        if (!out) throw Error("write failed for '" + out_path + "'");
    }
    if (!svg_path.empty()) {
        // A plot failure is reported but leaves the CSV and exit status alone.
        std::ofstream svg(svg_path);
        if (svg) write_svg(svg, rows, spec);
        if (!svg) std::cerr << "warning: could not write SVG '" << svg_path << "'\n";
    }
    return 0;
}

int cmd_reproduce(const std::vector<int>& only) {
    std::printf("%-3s %-62s %-22s %-22s %-10s %s\n", "#", "item", "expected", "actual", "tol", "result");
    const auto items = run_acceptance(std::set<int>(only.begin(), only.end()), [](const AcceptanceItem& it) {
        std::printf("%-3d %-62s %-22s %-22s %-10s %s\n", it.criterion, it.name.c_str(), it.expected.c_str(),
                    it.actual.c_str(), it.tolerance.c_str(), it.pass ? "PASS" : "FAIL");
        std::fflush(stdout);
    });
    bool all = !items.empty();
    for (const auto& it : items) all = all && it.pass;
    std::printf("%s\n", all ? "all items pass" : "some items FAIL");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ensemble coherence measures and restricted one-way LOCC discrimination"};
    app.require_subcommand(1);

    std::string target, measure = "l1", criterion = "worst", json_path, out_path, svg_path, family = "2x2-real";
    std::size_t restarts = 0, samples = 100;
    std::uint64_t seed = kAcceptanceSeed;
    std::vector<int> only;
    const auto measures = CLI::IsMember({"l1", "rel"});
    const auto criteria = CLI::IsMember({"worst", "avg"});

    auto* list = app.add_subcommand("list", "List the named ensembles");

    auto* measure_cmd = app.add_subcommand("measure", "tau, MEC, MEC^n, CD and C_r of an ensemble");
    measure_cmd->add_option("ensemble", target, "Registry name or JSON file")->required();
    measure_cmd->add_option("--measure", measure, "Coherence measure")->check(measures);
    measure_cmd->add_option("--restarts", restarts, "Optimizer restarts (default by dimension)");
    measure_cmd->add_option("--seed", seed, "Optimizer seed");
    measure_cmd->add_option("--json", json_path, "Also write a JSON report here");

    auto* disc = app.add_subcommand("discriminate", "B-first one-way LOCC success probability");
    disc->add_option("ensemble", target, "Registry name or JSON file")->required();
    disc->add_option("--criterion", criterion, "Success criterion reported as p_succ")->check(criteria);
    disc->add_option("--restarts", restarts, "Optimizer restarts (default by dimension)");
    disc->add_option("--seed", seed, "Optimizer seed");
    disc->add_option("--json", json_path, "Also write a JSON report here");

    auto* sweep = app.add_subcommand("sweep", "Random sweep over an arbitrary two-block family, CSV output");
    sweep->add_option("--family", family, "2x2-real, 2x2-complex or 2x3-real")
        ->check(CLI::IsMember({"2x2-real", "2x2-complex", "2x3-real"}));
    sweep->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", seed, "Sampling seed");
    sweep->add_option("--measure", measure, "MEC^n column highlighted in the SVG")->check(measures);
    sweep->add_option("--criterion", criterion, "Success criterion for the p_succ column")->check(criteria);
    sweep->add_option("--restarts", restarts, "Optimizer restarts (default by dimension)");
    sweep->add_option("--out", out_path, "CSV path (stdout when omitted or -)");
    sweep->add_option("--svg", svg_path, "Optional SVG scatter path");

    auto* repro = app.add_subcommand("reproduce", "Run the reproduction table; exit 0 iff every item passes");
    repro->add_option("--only", only, "Criterion numbers to run (default all)")
        ->check(CLI::Range(1, kCriterionCount))
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            for (const auto& n : ensemble_names()) std::cout << n << "\n";
            return 0;
        }
        if (*measure_cmd) return cmd_measure(target, measure, restarts, seed, json_path);
        if (*disc) return cmd_discriminate(target, criterion, restarts, seed, json_path);
        if (*sweep) return cmd_sweep(family, samples, seed, measure, criterion, restarts, out_path, svg_path);
        if (*repro) return cmd_reproduce(only);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 1;
}
