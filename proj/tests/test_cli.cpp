#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#ifndef SPECTRAL_CLI_PATH
#error "SPECTRAL_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr combined
};

std::filesystem::path scratch_file(const std::string& stem) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("spectral_cli_" + stem + "_" + std::to_string(counter++) + ".txt");
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::filesystem::path capture = scratch_file("out");
    std::string cmd = env_prefix + SPECTRAL_CLI_PATH " " + args + " > " +
                      capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.output = slurp(capture);
    std::filesystem::remove(capture);
    return r;
}

nlohmann::json parse_json(const std::string& text) { return nlohmann::json::parse(text); }

} // namespace

TEST_CASE("build emits the canonical generator as JSON", "[cli]") {
    const RunResult r = run_cli("build --transform dft --n 4 --sign plus");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = parse_json(r.output);
    REQUIRE(j.at("spec").at("transform") == "dft");
    REQUIRE(j.at("spec").at("n") == 4);
    REQUIRE(j.at("spec").at("sign") == "plus");
    REQUIRE(j.at("k") == 2);
    REQUIRE(j.at("systematic") == true);
    REQUIRE(j.at("generator").at("rows") == 2);
    REQUIRE(j.at("generator").at("cols") == 4);
    REQUIRE(j.at("generator").at("data") ==
            nlohmann::json::parse("[1.0,0.0,1.0,0.0,2.0,1.0,0.0,1.0]"));
}

TEST_CASE("analyze reports the packing parameters", "[cli]") {
    const RunResult r = run_cli("analyze --transform dht --n 4 --sign plus");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = parse_json(r.output);
    REQUIRE(j.at("k") == 3);
    REQUIRE(j.at("mu") == 2.0);
    REQUIRE(j.at("det_lambda") == 2.0);
    REQUIRE(j.at("kissing") == 12);
    REQUIRE(j.at("delta").get<double>() == Catch::Approx(0.17678));
    REQUIRE(j.at("density").get<double>() ==
            Catch::Approx(j.at("delta").get<double>() * 4.18879).epsilon(1e-4));
}

TEST_CASE("analyze is unchanged by the unitary normalisation", "[cli]") {
    const RunResult plain = run_cli("analyze --transform dft --n 12 --sign minus");
    const RunResult unitary =
        run_cli("analyze --transform dft --n 12 --sign minus --unitary");
    REQUIRE(plain.exit_code == 0);
    REQUIRE(unitary.exit_code == 0);
    const nlohmann::json a = parse_json(plain.output);
    const nlohmann::json b = parse_json(unitary.output);
    for (const char* key : {"k", "mu", "det_lambda", "delta", "density", "kissing",
                            "shortest_coeffs"})
        REQUIRE(a.at(key) == b.at(key));
    // the witness vector may differ in the last floating-point bits
    for (std::size_t i = 0; i < a.at("shortest_vector").size(); ++i)
        REQUIRE(a.at("shortest_vector")[i].get<double>() ==
                Catch::Approx(b.at("shortest_vector")[i].get<double>()).margin(1e-9));
}

TEST_CASE("analyze refuses a trivial eigenspace", "[cli]") {
    const RunResult r = run_cli("analyze --transform dft --n 1 --sign minus");
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.output.find("error") != std::string::npos);
}

TEST_CASE("table diff runs are clean over the trusted ranges", "[cli]") {
    const RunResult fourier =
        run_cli("table --transform dft --n-min 3 --n-max 15 --diff");
    INFO(fourier.output);
    REQUIRE(fourier.exit_code == 0);
    const nlohmann::json j = parse_json(fourier.output);
    REQUIRE(j.at("summary").at("mismatch") == 0);

    const RunResult hartley =
        run_cli("table --transform dht --n-min 3 --n-max 18 --diff");
    INFO(hartley.output);
    REQUIRE(hartley.exit_code == 0);
    const nlohmann::json h = parse_json(hartley.output);
    REQUIRE(h.at("summary").at("mismatch") == 0);
    REQUIRE(h.at("summary").at("suspected_typo") == 4);
}

TEST_CASE("table output is byte-deterministic", "[cli]") {
    const std::string args = "table --transform dht --n-min 3 --n-max 12 --format csv";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.output == b.output);
    REQUIRE(a.output.rfind("n,sign,k,mu,delta,density,det", 0) == 0);
}

TEST_CASE("table flags bad ranges", "[cli]") {
    REQUIRE(run_cli("table --transform dft --n-min 9 --n-max 5").exit_code == 1);
    REQUIRE(run_cli("table --transform dft --n-min 1 --n-max 5").exit_code == 1);
}

TEST_CASE("check-seq accepts a true eigensequence", "[cli]") {
    const RunResult r = run_cli(
        "check-seq --transform dht --n 9 --sign plus --seq 1,0,0,1,0,0,1,0,0");
    INFO(r.output);
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = parse_json(r.output);
    REQUIRE(j.at("is_eigensequence") == true);
    REQUIRE(j.at("lambda") == 3.0);
}

TEST_CASE("check-seq rejects the misprinted sequence", "[cli]") {
    const RunResult r = run_cli(
        "check-seq --transform dht --n 9 --sign plus --seq 10,1,1,1,1,1,1,1,1");
    INFO(r.output);
    REQUIRE(r.exit_code == 3);
    const nlohmann::json j = parse_json(r.output);
    REQUIRE(j.at("is_eigensequence") == false);
    REQUIRE(j.at("residual").get<double>() == Catch::Approx(12.0));
}

TEST_CASE("check-seq honours the tolerance environment variable", "[cli]") {
    const std::string args =
        "check-seq --transform dht --n 9 --sign plus --seq 10,1,1,1,1,1,1,1,1";
    // an absurdly loose tolerance turns the verdict around
    REQUIRE(run_cli(args, "SPECTRAL_CODES_TOL=10 ").exit_code == 0);
    // an explicit flag wins over the environment
    REQUIRE(run_cli(args + " --residual-tol 1e-8", "SPECTRAL_CODES_TOL=10 ").exit_code == 3);
    // malformed environment values are usage errors
    REQUIRE(run_cli(args, "SPECTRAL_CODES_TOL=banana ").exit_code == 1);
}

TEST_CASE("verify covers every fixture group", "[cli]") {
    const RunResult all = run_cli("verify --fixture all --format text");
    INFO(all.output);
    REQUIRE(all.exit_code == 0);
    REQUIRE(all.output.find("all checks passed") != std::string::npos);

    const RunResult json_run = run_cli("verify --fixture golay-appendix");
    INFO(json_run.output);
    REQUIRE(json_run.exit_code == 0);
    const nlohmann::json j = parse_json(json_run.output);
    REQUIRE(j.at("passed") == true);
}

TEST_CASE("usage errors exit with code 1", "[cli]") {
    REQUIRE(run_cli("build --transform dct --n 4 --sign plus").exit_code == 1);
    REQUIRE(run_cli("build --transform dft --n 999 --sign plus").exit_code == 1);
    REQUIRE(run_cli("build --transform dft --n 4 --sign up").exit_code == 1);
    REQUIRE(run_cli("frobnicate").exit_code == 1);
    REQUIRE(run_cli("").exit_code == 1);
    REQUIRE(run_cli("check-seq --transform dht --n 9 --sign plus --seq 1,2").exit_code == 1);
    REQUIRE(run_cli("verify --fixture nonsense").exit_code == 1);
}

TEST_CASE("--out writes the report to a file instead of stdout", "[cli]") {
    const std::filesystem::path target = scratch_file("report");
    const RunResult r = run_cli("analyze --transform dht --n 7 --sign plus --out " +
                                target.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.empty());
    const nlohmann::json j = parse_json(slurp(target));
    REQUIRE(j.at("k") == 4);
    REQUIRE(j.at("mu").get<double>() == Catch::Approx(3.3937).epsilon(1e-4));
    std::filesystem::remove(target);
}

TEST_CASE("help is available and exits cleanly", "[cli]") {
    const RunResult r = run_cli("--help");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("Usage") != std::string::npos);
}
