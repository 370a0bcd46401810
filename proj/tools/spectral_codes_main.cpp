// Command-line front end: builds eigenspace codes, analyzes their lattices,
// regenerates the reference tables with an optional diff, verifies the pinned
// fixture matrices, and checks individual sequences for the eigen property.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "spectral/spectral.hpp"

namespace {

struct GlobalOptions {
    int precision = 5;
    double rank_tol = spectral::kDefaultRankTol;
    double residual_tol = 1e-8;
    std::string data_dir = spectral::default_data_dir();
    std::string out_path;
};

/// Output is accumulated fully before the sink is opened, so a failure never
/// leaves a partial file behind.
void emit(const GlobalOptions& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path);
    if (!out) throw spectral::DegenerateInput("cannot open output file: " + opt.out_path);
    out << text;
}

spectral::TransformKind parse_transform(const std::string& s) {
    if (s == "dft") return spectral::TransformKind::Fourier;
    if (s == "dht") return spectral::TransformKind::Hartley;
    throw spectral::DegenerateInput("--transform must be dft or dht");
}

spectral::EigenSign parse_sign(const std::string& s) {
    if (s == "plus") return spectral::EigenSign::Plus;
    if (s == "minus") return spectral::EigenSign::Minus;
    throw spectral::DegenerateInput("--sign must be plus or minus");
}

std::vector<double> parse_sequence(const std::string& csv) {
    std::vector<double> values;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty())
            throw spectral::DegenerateInput("--seq contains an empty field");
        std::size_t pos = 0;
        values.push_back(std::stod(token, &pos));
        if (pos != token.size())
            throw spectral::DegenerateInput("--seq contains a malformed number: " + token);
    }
    if (values.empty()) throw spectral::DegenerateInput("--seq is empty");
    return values;
}

void apply_env_tolerance(GlobalOptions& opt) {
    if (const char* env = std::getenv("SPECTRAL_CODES_TOL"); env && *env) {
        std::size_t pos = 0;
        const std::string s(env);
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !(v > 0.0))
            throw spectral::DegenerateInput(
                "SPECTRAL_CODES_TOL must be a positive number, got '" + s + "'");
        opt.residual_tol = v;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real block codes from transform eigenspaces and their lattices"};
    app.require_subcommand(1);

    GlobalOptions opt;
    std::string transform = "dft";
    std::string sign = "plus";
    bool unitary = false;
    int n = 4;
    int n_min = 3, n_max = 15;
    std::string format = "json";
    bool diff = false;
    std::string fixture_group = "all";
    std::string seq_csv;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--precision", opt.precision, "significant figures for printed numbers")
            ->check(CLI::Range(1, 17));
        cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
    };
    auto add_code_flags = [&](CLI::App* cmd) {
        cmd->add_option("--transform", transform, "transform kernel: dft or dht")
            ->required()
            ->check(CLI::IsMember({"dft", "dht"}));
        cmd->add_option("--n", n, "transform length")->required()->check(CLI::Range(1, 64));
        cmd->add_option("--sign", sign, "eigenvalue sign: plus or minus")
            ->required()
            ->check(CLI::IsMember({"plus", "minus"}));
        cmd->add_flag("--unitary", unitary, "use the unitary normalisation (eigenvalues +/-1)");
        cmd->add_option("--rank-tol", opt.rank_tol, "relative rank tolerance")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* cmd_build = app.add_subcommand("build", "construct a code and print it as JSON");
    add_code_flags(cmd_build);
    add_common(cmd_build);

    CLI::App* cmd_analyze =
        app.add_subcommand("analyze", "lattice packing parameters of a code's generator");
    add_code_flags(cmd_analyze);
    add_common(cmd_analyze);

    CLI::App* cmd_table =
        app.add_subcommand("table", "recompute reference-table rows over a range of lengths");
    cmd_table->add_option("--transform", transform)->required()->check(CLI::IsMember({"dft", "dht"}));
    cmd_table->add_option("--n-min", n_min)->required()->check(CLI::Range(3, 24));
    cmd_table->add_option("--n-max", n_max)->required()->check(CLI::Range(3, 24));
    cmd_table->add_option("--format", format, "json, csv or md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    cmd_table->add_flag("--diff", diff, "diff against the bundled reference tables");
    cmd_table->add_option("--data-dir", opt.data_dir, "reference data directory");
    add_common(cmd_table);

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run the geometric checks for the pinned fixture matrices");
    cmd_verify->add_option("--fixture", fixture_group, "eq7-11, examples, golay-appendix or all")
        ->required()
        ->check(CLI::IsMember({"eq7-11", "examples", "golay-appendix", "all"}));
    cmd_verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_verify->add_option("--data-dir", opt.data_dir, "reference data directory");
    add_common(cmd_verify);

    CLI::App* cmd_check =
        app.add_subcommand("check-seq", "test one sequence for the eigen property");
    add_code_flags(cmd_check);
    cmd_check->add_option("--seq", seq_csv, "comma-separated sequence values")->required();
    cmd_check->add_option("--residual-tol", opt.residual_tol, "eigen-residual tolerance")
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    add_common(cmd_check);

    // The environment supplies the default residual tolerance; an explicit
    // --residual-tol then overrides it during parsing.
    try {
        apply_env_tolerance(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the usage message
        return 1;
    }

    try {
        if (cmd_build->parsed() || cmd_analyze->parsed()) {
            const spectral::CodeSpec spec{{parse_transform(transform), n, unitary},
                                          parse_sign(sign)};
            const spectral::EigencodeResult code = spectral::build_code(spec, opt.rank_tol);
            if (cmd_build->parsed()) {
                emit(opt, spectral::code_to_json(code).dump(2) + "\n");
            } else {
                if (code.k == 0)
                    throw spectral::NotFullRank(
                        "the requested eigenspace is trivial (k = 0); nothing to analyze");
                const spectral::LatticeReport report =
                    spectral::analyze(spectral::LatticeBasis(code.generator));
                emit(opt, spectral::lattice_report_to_json(report, opt.precision).dump(2) + "\n");
            }
            return 0;
        }

        if (cmd_table->parsed()) {
            if (n_min > n_max)
                throw spectral::DegenerateInput("--n-min must not exceed --n-max");
            const spectral::TransformKind kind = parse_transform(transform);
            if (diff) {
                const spectral::ReferenceTables tables =
                    spectral::load_reference_tables(opt.data_dir);
                const spectral::DiscrepancyReport report =
                    spectral::reproduce_tables(tables, kind, n_min, n_max);
                if (format == "csv")
                    emit(opt, spectral::report_to_csv(report, opt.precision));
                else if (format == "md")
                    emit(opt, spectral::report_to_markdown(report, opt.precision));
                else
                    emit(opt, spectral::report_to_json(report, opt.precision).dump(2) + "\n");
                return report.passed() ? 0 : 3;
            }
            const std::vector<spectral::RecomputedRow> rows =
                spectral::recompute_rows(kind, n_min, n_max, opt.rank_tol);
            if (format == "csv")
                emit(opt, spectral::rows_to_csv(rows, opt.precision));
            else if (format == "md")
                emit(opt, spectral::rows_to_markdown(rows, opt.precision));
            else
                emit(opt, spectral::rows_to_json(rows, opt.precision).dump(2) + "\n");
            return 0;
        }

        if (cmd_verify->parsed()) {
            const spectral::FixtureSet fixtures = spectral::load_fixtures(opt.data_dir);
            const spectral::FixtureReport report =
                spectral::verify_fixtures(fixtures, fixture_group);
            if (format == "json")
                emit(opt, spectral::fixture_report_to_json(report, opt.precision).dump(2) + "\n");
            else
                emit(opt, spectral::fixture_report_to_text(report, opt.precision));
            return report.all_passed() ? 0 : 3;
        }

        if (cmd_check->parsed()) {
            const spectral::CodeSpec spec{{parse_transform(transform), n, unitary},
                                          parse_sign(sign)};
            const std::vector<double> values = parse_sequence(seq_csv);
            const spectral::EigensequenceCheck check =
                spectral::check_eigensequence(spec, values, opt.residual_tol);
            if (format == "json") {
                spectral::OrderedJson j;
                j["is_eigensequence"] = check.is_eigensequence;
                j["lambda"] = spectral::round_sig(check.lambda, opt.precision);
                j["residual"] = spectral::round_sig(check.residual, opt.precision);
                j["threshold"] = spectral::round_sig(check.threshold, opt.precision);
                emit(opt, j.dump(2) + "\n");
            } else {
                std::ostringstream out;
                out << (check.is_eigensequence ? "eigensequence" : "not an eigensequence")
                    << "  lambda=" << spectral::format_sig(check.lambda, opt.precision)
                    << "  residual=" << spectral::format_sig(check.residual, opt.precision)
                    << "  threshold=" << spectral::format_sig(check.threshold, opt.precision)
                    << '\n';
                emit(opt, out.str());
            }
            return check.is_eigensequence ? 0 : 3;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
