#include "cellres/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cellres/criteria.hpp"
#include "cellres/io.hpp"
#include "cellres/render.hpp"

namespace cellres {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GraphInput load_graph(const std::string& input_path, const std::string& inline_json) {
    if (input_path.empty() == inline_json.empty())
        throw CliError("provide exactly one of --input or --json");
    std::string text = inline_json;
    if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) throw CliError("cannot open input file: " + input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return parse_graph_input_text(text);
    } catch (const std::exception& e) {
        throw CliError(std::string("bad graph input: ") + e.what());
    }
}

void write_output(const std::string& out_path, const std::string& payload, std::ostream& out) {
    if (out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw CliError("cannot open output file: " + out_path);
    file << payload;
}

int env_threads() {
    const char* env = std::getenv("CELLRES_THREADS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v > 0 ? v : 1;
}

std::string theorem_summary(const GraphInput& input) {
    if (std::holds_alternative<VertexWeighting>(input)) return "YES (vertex-weighted)";
    auto [ok, trace] = theorem_predicate(std::get<EdgeWeighting>(input));
    if (!ok) return "NO";
    return "YES (" + trace_to_string(trace) + ")";
}

int cmd_check(const GraphInput& input, int characteristic, bool verbose, std::ostream& out) {
    const std::string theorem = theorem_summary(input);
    const bool theorem_ok = theorem.rfind("YES", 0) == 0;
    LabeledComplex complex = LabeledComplex::full(labels_of(input));
    ResolutionVerdict oracle = bs_oracle(complex, characteristic);

    out << "theorem: " << theorem << ", oracle: " << (oracle.is_resolution ? "YES" : "NO");
    if (oracle.witness) out << ", witness: " << render_monomial(*oracle.witness);
    out << "\n";
    if (verbose) {
        if (std::holds_alternative<EdgeWeighting>(input))
            out << "trace: " << trace_to_string(theorem_predicate(std::get<EdgeWeighting>(input)).second)
                << "\n";
        if (oracle.witness_profile)
            out << "witness_profile: " << profile_json(*oracle.witness_profile).dump() << "\n";
    }
    if (theorem_ok != oracle.is_resolution) return kExitDisagreement;
    return oracle.is_resolution ? kExitResolution : kExitNonResolution;
}

std::string resolve_text(const FreeChainComplex& f, bool verbose) {
    std::ostringstream os;
    os << "ranks:";
    for (std::size_t r : f.ranks()) os << " " << r;
    os << "\n";
    os << "minimal: " << (is_minimal(f).minimal ? "YES" : "NO") << "\n";
    os << "dd_zero: " << (compose_is_zero(f).ok ? "YES" : "NO") << "\n";
    for (int d = 1; d <= f.top_degree(); ++d) {
        os << "d" << d << " (" << f.diff[d].rows() << "x" << f.diff[d].cols() << "):\n";
        if (verbose) {
            os << "# columns:";
            for (const auto& el : f.basis[d]) os << " " << render_tag(el.tag);
            os << "\n";
        }
        os << matrix_text(f.diff[d]);
    }
    return os.str();
}

int cmd_resolve(const GraphInput& input, const std::string& format, int characteristic,
                bool verbose, const std::string& out_path, std::ostream& out) {
    VertexLabeling labeling = labels_of(input);
    FreeChainComplex f = build_cellular(LabeledComplex::full(labeling));
    std::string payload;
    if (format == "text") {
        payload = resolve_text(f, verbose);
    } else if (format == "json") {
        nlohmann::json j = complex_json(f);
        j["minimal"] = is_minimal(f).minimal;
        j["dd_zero"] = compose_is_zero(f).ok;
        payload = j.dump(2) + "\n";
    } else if (format == "m2") {
        payload = m2_script(f, labeling, characteristic);
    } else {
        throw CliError("unknown format: " + format);
    }
    write_output(out_path, payload, out);
    return kExitResolution;
}

int cmd_betti(int m, int n, const std::string& format, std::ostream& out) {
    if (m < 1 || n < 1) throw CliError("betti: m and n must be positive");
    std::vector<std::int64_t> values;
    for (int k = 0; k <= m + n - 2; ++k) values.push_back(betti_formula(m, n, k));
    if (format == "json") {
        out << nlohmann::json{{"m", m}, {"n", n}, {"betti", values}}.dump() << "\n";
    } else {
        for (std::size_t k = 0; k < values.size(); ++k) out << (k ? " " : "") << values[k];
        out << "\n";
    }
    return kExitResolution;
}

int cmd_survey(int m, int n, std::int64_t max_weight, int characteristic, bool verbose,
               const std::string& format, const std::string& out_path, std::ostream& out) {
    SurveyOptions options;
    options.m = m;
    options.n = n;
    options.max_weight = max_weight;
    options.characteristic = characteristic;
    options.threads = env_threads();
    options.keep_verdicts = verbose;
    SurveyReport report;
    try {
        report = survey(options);
    } catch (const std::invalid_argument& e) {
        throw CliError(e.what());
    }
    std::ostringstream os;
    if (format == "json") {
        os << survey_json(report, verbose).dump(2) << "\n";
    } else {
        os << report.agreements << "/" << report.total << " agree\n";
        os << "predicate_true: " << report.predicate_true << "\n";
        os << "betti_mismatches: " << report.betti_mismatches << "\n";
        os << "minimality_failures: " << report.minimality_failures << "\n";
        os << "torsion_sightings: " << report.torsion.size() << "\n";
        for (const auto& d : report.disagreements) {
            os << "disagreement:";
            for (std::int64_t w : d.weights) os << " " << w;
            os << " theorem=" << (d.theorem_ok ? "YES" : "NO")
               << " oracle=" << (d.oracle_ok ? "YES" : "NO") << "\n";
        }
        if (verbose)
            for (const auto& v : report.verdicts) {
                os << "verdict:";
                for (std::int64_t w : v.weights) os << " " << w;
                os << " theorem=" << (v.theorem_ok ? "YES" : "NO")
                   << " oracle=" << (v.oracle_ok ? "YES" : "NO") << "\n";
            }
    }
    write_output(out_path, os.str(), out);
    return report.all_agree() ? kExitResolution : kExitDisagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cellular resolutions of weighted complete bipartite edge ideals"};
    app.require_subcommand(1);

    std::string input_path, inline_json, out_path;
    std::string format = "text";
    int characteristic = 0;
    bool verbose = false;
    int betti_m = 0, betti_n = 0;
    int survey_m = 0, survey_n = 0;
    std::int64_t survey_w = 0, max_weight_flag = 0;

    auto add_common = [&](CLI::App* cmd, bool with_graph) {
        if (with_graph) {
            cmd->add_option("--input", input_path, "path of a graph JSON file");
            cmd->add_option("--json", inline_json, "inline graph JSON");
        }
        cmd->add_option("--char", characteristic, "coefficient characteristic (0 or a prime)");
        cmd->add_flag("--verbose", verbose, "more detail");
    };

    CLI::App* check = app.add_subcommand("check", "decide whether the construction resolves");
    add_common(check, true);

    CLI::App* resolve = app.add_subcommand("resolve", "print the cellular differentials");
    add_common(resolve, true);
    resolve->add_option("--format", format, "text | json | m2");
    resolve->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* betti = app.add_subcommand("betti", "Betti numbers from the closed formula");
    betti->add_option("m", betti_m, "X-side size")->required();
    betti->add_option("n", betti_n, "Y-side size")->required();
    betti->add_option("--format", format, "text | json");

    CLI::App* surv = app.add_subcommand("survey", "exhaustive theorem-vs-oracle comparison");
    surv->add_option("m", survey_m, "X-side size")->required();
    surv->add_option("n", survey_n, "Y-side size")->required();
    surv->add_option("max_weight", survey_w, "largest edge weight");
    surv->add_option("--max-weight", max_weight_flag, "largest edge weight");
    surv->add_option("--char", characteristic, "coefficient characteristic (0 or a prime)");
    surv->add_option("--format", format, "text | json");
    surv->add_option("--out", out_path, "write to a file instead of stdout");
    surv->add_flag("--verbose", verbose, "include per-weighting verdicts");

    CLI::App* exp = app.add_subcommand("export", "write the ideal and matrices");
    add_common(exp, true);
    exp->add_option("--format", format, "text | json | m2");
    exp->add_option("--out", out_path, "write to a file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitResolution;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (characteristic != 0 && !is_prime(characteristic)) {
        err << "error: --char must be 0 or a prime\n";
        return kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(load_graph(input_path, inline_json), characteristic, verbose, out);
        if (resolve->parsed())
            return cmd_resolve(load_graph(input_path, inline_json), format, characteristic,
                               verbose, out_path, out);
        if (betti->parsed()) return cmd_betti(betti_m, betti_n, format, out);
        if (surv->parsed()) {
            std::int64_t w = max_weight_flag > 0 ? max_weight_flag : survey_w;
            if (w < 1) throw CliError("survey: provide max_weight (positional or --max-weight)");
            return cmd_survey(survey_m, survey_n, w, characteristic, verbose, format, out_path,
                              out);
        }
        if (exp->parsed())
            return cmd_resolve(load_graph(input_path, inline_json), format, characteristic,
                               verbose, out_path, out);
    } catch (const CliError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace cellres
