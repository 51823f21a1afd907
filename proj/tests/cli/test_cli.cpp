#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mqapprox/approximator.hpp"

namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

CommandResult run_cli(const std::string& args) {
    const char* bin = std::getenv("MQAPPROX_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "MQAPPROX_CLI must point at the CLI binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        result.output.append(buf, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    return fields;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / ("mqapprox_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("expand prints exact polynomials") {
    CommandResult r = run_cli("expand --k 1 --c 1 --j 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "A[1,3](x) = 1/2*x\n");

    CHECK(run_cli("expand --k 1 --j 0").output == "A[1,0](x) = 1\n");
    CHECK(run_cli("expand --k 2 --c 1 --j 4").output == "A[2,4](x) = 3/8\n");
    CHECK(run_cli("expand --k 1 --c 1/2 --j 2").output == "A[1,2](x) = 1/8\n");
}

TEST_CASE("weights solves and normalizes") {
    CommandResult r = run_cli("weights --k 1 --n 0 --centers 8,16,32");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "b = 64/3, -32, 32/3");
    CHECK(lines[1] == "normalized = 8/3, -2, 1/3");
    CHECK(lines[2].find("within bound 3.4628") != std::string::npos);

    CommandResult loose = run_cli("weights --k 1 --n 0 --centers 8,15,30");
    CHECK(loose.exit_code == 0);
    CHECK(loose.output.find("centers do not double") != std::string::npos);

    CHECK(run_cli("weights --k 1 --n 0 --centers 8,8,16").exit_code == 2);
    CHECK(run_cli("weights --k 0 --n 0 --centers 8").exit_code == 2);
}

TEST_CASE("recover emits a halving defect table") {
    CommandResult r = run_cli("recover --k 1 --c 1 --n 0 --y-min 8 --doublings 3 --grid 65");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "y1,sup_defect,ratio");
    double previous = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split_csv(lines[i]);
        REQUIRE(fields.size() >= 2);
        if (i == 1) {
            CHECK(fields[0] == "8");
        }
        double defect = std::stod(fields[1]);
        CHECK(defect > 0.0);
        if (i > 1) {
            CHECK(defect < previous);
            REQUIRE(fields.size() == 3);
            double ratio = std::stod(fields[2]);
            CHECK(ratio > 1.5);
            CHECK(ratio < 2.7);
        }
        previous = defect;
    }
}

TEST_CASE("verify suites pass and unknown suites are rejected") {
    CommandResult r = run_cli("verify --suite lemma41 --k-max 2 --j-max 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);

    // "lemma" is an accepted shorthand.
    CHECK(run_cli("verify --suite lemma --k-max 2 --j-max 8").exit_code == 0);

    CHECK(run_cli("verify --suite nonsense").exit_code == 2);

    CommandResult quick = run_cli("verify --suite lemma21 --n-max 6 --count 20");
    CHECK(quick.exit_code == 0);
    CHECK(quick.output.find("lemma21") != std::string::npos);
}

TEST_CASE("approx writes a loadable approximant and an error report") {
    fs::path dir = scratch_dir();
    fs::path json_path = dir / "a.json";
    fs::path csv_path = dir / "a.csv";
    std::string cmd = "approx --f 'exp(x)' --interval 0,1 --epsilon 1e-2 --grid 257 --out-json " +
                      json_path.string() + " --out-csv " + csv_path.string();
    CommandResult r = run_cli(cmd);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("target: exp(x) on [0,1]") != std::string::npos);
    CHECK(r.output.find("proxy degree ") != std::string::npos);
    CHECK(r.output.find("sup_error = ") != std::string::npos);

    // The JSON document loads back through the library and evaluates.
    mq::Approximant appr = mq::approximant_from_json(slurp(json_path));
    CHECK(appr.params().k == 1);
    CHECK(appr.terms().size() >= 3);
    CHECK(std::fabs(appr.evaluate(0.5) - std::exp(0.5)) < 1e-2);

    // The CSV carries the advertised metrics.
    auto lines = lines_of(slurp(csv_path));
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "metric,value");
    double sup = -1.0;
    bool saw_l2 = false;
    for (const auto& line : lines) {
        auto fields = split_csv(line);
        if (fields.size() == 2 && fields[0] == "sup_error") {
            sup = std::stod(fields[1]);
        }
        if (fields.size() == 2 && fields[0] == "l2_error") {
            saw_l2 = true;
        }
    }
    CHECK(sup >= 0.0);
    CHECK(sup < 1e-2);
    CHECK(saw_l2);

    // Identical flags with more threads produce byte-identical artifacts.
    fs::path json4 = dir / "a4.json";
    fs::path csv4 = dir / "a4.csv";
    CommandResult r4 = run_cli("approx --f 'exp(x)' --interval 0,1 --epsilon 1e-2 --grid 257"
                               " --threads 4 --out-json " +
                               json4.string() + " --out-csv " + csv4.string());
    REQUIRE(r4.exit_code == 0);
    CHECK(slurp(json4) == slurp(json_path));
    CHECK(slurp(csv4) == slurp(csv_path));

    fs::remove_all(dir);
}

TEST_CASE("config files override flags and reject unknown keys") {
    fs::path dir = scratch_dir();
    fs::path config = dir / "run.json";
    {
        std::ofstream out(config);
        out << R"({"f": "x^2", "epsilon": 0.05, "interval": [0.0, 1.0], "grid_points": 129,)"
            << R"( "output_json": ")" << (dir / "c.json").string() << R"(",)"
            << R"( "output_csv": ")" << (dir / "c.csv").string() << R"("})";
    }
    CommandResult r = run_cli("approx --f 'exp(x)' --config " + config.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("target: x^2") != std::string::npos);

    fs::path bad = dir / "bad.json";
    {
        std::ofstream out(bad);
        out << R"({"epsilonn": 0.05})";
    }
    CommandResult rb = run_cli("approx --f 'exp(x)' --config " + bad.string());
    CHECK(rb.exit_code == 2);
    CHECK(rb.output.find("epsilonn") != std::string::npos);

    fs::remove_all(dir);
}

TEST_CASE("sweep output is deterministic with the advertised header") {
    const std::string cmd =
        "sweep --mode y1 --f 'exp(x)' --interval 0,1 --proxy-degree 3 --steps 3 --grid 65";
    CommandResult first = run_cli(cmd);
    CommandResult second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    auto lines = lines_of(first.output);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "y1,grid_sup_error,l1_error,l2_error");
    CHECK(split_csv(lines[1])[0] == "8");
    CHECK(split_csv(lines[2])[0] == "16");

    CommandResult degree = run_cli(
        "sweep --mode degree --f 'exp(x)' --interval 0,1 --proxy-degree 2 --grid 65");
    CHECK(degree.exit_code == 0);
    auto dlines = lines_of(degree.output);
    REQUIRE(dlines.size() == 4);
    CHECK(dlines[0] == "degree,grid_sup_error,l1_error,l2_error");

    CHECK(run_cli("sweep --mode sideways --f 'x'").exit_code == 2);
}

TEST_CASE("jittered sequences give exact rational centers") {
    CommandResult r = run_cli(
        "sweep --mode y1 --f 'x' --interval 0,1 --seq jitter --jitter-radius 1/4 --seed 7"
        " --proxy-degree 1 --steps 2 --grid 65");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 3);
    // Jittered centers are non-integer rationals with a bounded denominator.
    const std::string y1 = split_csv(lines[1])[0];
    CHECK(y1.find('/') != std::string::npos);

    CommandResult again = run_cli(
        "sweep --mode y1 --f 'x' --interval 0,1 --seq jitter --jitter-radius 1/4 --seed 7"
        " --proxy-degree 1 --steps 2 --grid 65");
    CHECK(again.output == r.output);
}

TEST_CASE("failures map to the documented exit codes") {
    CHECK(run_cli("expand --j 1 --nonsense-flag").exit_code == 2);
    CHECK(run_cli("expand --k 0 --j 1").exit_code == 2);
    CHECK(run_cli("approx --f 'x +' --interval 0,1").exit_code == 2);
    CHECK(run_cli("approx --f 'exp(x)' --interval 0,1 --epsilon 1e-6 --max-doublings 0"
                  " --grid 65")
              .exit_code == 3);
    CHECK(run_cli("approx --f 'exp(x)' --interval 0,1 --seq file").exit_code == 2);
    CHECK(run_cli("recover --k 1 --n 0 --y-min 4 --doublings 0").exit_code == 2);
}
