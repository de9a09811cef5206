#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(POLARBP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof(buf), pipe)) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

class TempDir {
  public:
    TempDir() {
        base_ = std::filesystem::temp_directory_path() /
                ("polarbp_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(base_);
    }
    ~TempDir() { std::filesystem::remove_all(base_); }
    std::string file(const std::string& name, const std::string& content) const {
        std::filesystem::path p = base_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

  private:
    std::filesystem::path base_;
};

const char* kUnitNormTriple =
    "1 0 0.5773502691896258\n"
    "0 1 0.5773502691896258\n"
    "0 0 0.5773502691896258\n";

const char* kSkewedPair =
    "1 1.4142135623730951\n"
    "0 1.4142135623730951\n";

const char* kThreeAtoms =
    "1 0 0.7071067811865476\n"
    "0 1 0.7071067811865476\n";

}  // namespace

TEST_CASE("certify reports the full hierarchy and exits on uniqueness") {
    TempDir tmp;
    std::string dict = tmp.file("triple.txt", kUnitNormTriple);

    RunResult res = run_cli("certify --dict " + dict + " --x0 1:1,2:1");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["fuchs"]["holds"] == true);
    CHECK(j["fuchs_corollary"]["holds"] == false);
    CHECK(j["erc"]["holds"] == false);
    CHECK(std::abs(j["erc"]["coefficient"].get<double>() - 1.1547005383792517) <=
          1e-12);
    CHECK(std::abs(j["fuchs_corollary"]["max_offsupport_dot"].get<double>() -
                   1.1547005383792517) <= 1e-12);
    CHECK(j["spark"] == 4);
    CHECK(j["l1_unique"] == true);
    CHECK(j["support"]["size"] == 2);

    RunResult mixed = run_cli("certify --dict " + dict + " --x0 1:1,2:-1");
    REQUIRE(mixed.exit_code == 0);
    json jm = json::parse(mixed.out);
    CHECK(jm["fuchs_corollary"]["holds"] == true);
    CHECK(jm["erc"]["holds"] == false);
}

TEST_CASE("certify exits 3 when uniqueness fails") {
    TempDir tmp;
    std::string dict = tmp.file("three.txt", kThreeAtoms);
    RunResult res = run_cli("certify --dict " + dict + " --x0 1,1,0");
    CHECK(res.exit_code == 3);
    json j = json::parse(res.out);
    CHECK(j["l1_unique"] == false);
}

TEST_CASE("certify quiet mode prints a single verdict token") {
    TempDir tmp;
    std::string dict = tmp.file("triple.txt", kUnitNormTriple);
    RunResult res = run_cli("certify --dict " + dict + " --x0 1:1,2:1 --quiet");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "true\n");

    std::string three = tmp.file("three.txt", kThreeAtoms);
    RunResult no = run_cli("certify --dict " + three + " --x0 1,1,0 --quiet");
    CHECK(no.exit_code == 3);
    CHECK(no.out == "false\n");
}

TEST_CASE("input validation exit codes") {
    TempDir tmp;
    std::string dict = tmp.file("pair.txt", kSkewedPair);

    // Missing file: parse failure.
    CHECK(run_cli("certify --dict /nonexistent/f.txt --x0 1,0").exit_code == 1);
    // Ragged matrix rows: parse failure.
    std::string ragged = tmp.file("ragged.txt", "1 2\n3\n");
    CHECK(run_cli("certify --dict " + ragged + " --x0 1,0").exit_code == 1);
    // Wrong x0 length: dimension mismatch.
    CHECK(run_cli("certify --dict " + dict + " --x0 1,0,0").exit_code == 2);
    // Sparse index out of range: dimension mismatch.
    CHECK(run_cli("certify --dict " + dict + " --x0 5:1").exit_code == 2);
    // Duplicate sparse index: parse failure.
    CHECK(run_cli("certify --dict " + dict + " --x0 1:1,1:2").exit_code == 1);
}

TEST_CASE("solve with the greedy method reports the trace") {
    TempDir tmp;
    std::string dict = tmp.file("pair.txt", kSkewedPair);
    RunResult res =
        run_cli("solve --dict " + dict + " --y 1,0 --method omp --max-steps 2");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["method"] == "omp");
    CHECK(j["converged"] == true);
    CHECK(j["steps_used"] == 2);
    REQUIRE(j["trace"].size() == 2);
    CHECK(j["trace"][0]["atom"] == 2);  // 1-based atom number
    CHECK(j["trace"][0]["sign"] == 1);
    CHECK(std::abs(j["trace"][0]["correlation"].get<double>() -
                   std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(j["coeffs"][0].get<double>() - 1.0) <= 1e-12);
    CHECK(std::abs(j["coeffs"][1].get<double>()) <= 1e-12);
}

TEST_CASE("solve with the l1 methods agrees across routes") {
    TempDir tmp;
    std::string dict = tmp.file("pair.txt", kSkewedPair);
    RunResult lp = run_cli("solve --dict " + dict + " --y 1,0 --method bp");
    REQUIRE(lp.exit_code == 0);
    json jl = json::parse(lp.out);
    CHECK(std::abs(jl["objective"].get<double>() - 1.0) <= 1e-9);
    CHECK(std::abs(jl["coeffs"][0].get<double>() - 1.0) <= 1e-9);

    RunResult scan = run_cli("solve --dict " + dict + " --y 1,0 --method bp-brute");
    REQUIRE(scan.exit_code == 0);
    json js = json::parse(scan.out);
    CHECK(std::abs(js["objective"].get<double>() - jl["objective"].get<double>()) <=
          1e-9);

    RunResult quiet = run_cli("solve --dict " + dict + " --y 1,0 --method bp --quiet");
    CHECK(quiet.exit_code == 0);
    CHECK(quiet.out.substr(0, 1) == "1");
}

TEST_CASE("solve exits 4 when the signal is unreachable") {
    TempDir tmp;
    std::string dict = tmp.file("single.txt", "1\n0\n");
    CHECK(run_cli("solve --dict " + dict + " --y 0,1 --method bp").exit_code == 4);
}

TEST_CASE("vertex listing matches the hand-computed polar") {
    TempDir tmp;
    std::string dict = tmp.file("pair.txt", kSkewedPair);
    RunResult res = run_cli("geometry vertices --dict " + dict);
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["vertex_count"] == 4);
    REQUIRE(j["vertices"].size() == 4);
    CHECK(std::abs(j["vertices"][0]["point"][0].get<double>() + 1.0) <= 1e-12);
    CHECK(std::abs(j["vertices"][0]["point"][1].get<double>() -
                   0.29289321881345254) <= 1e-12);
    CHECK(j["vertices"][0]["active"] == "-1,-2");
    CHECK(j["vertices"][3]["active"] == "+1,+2");
}

TEST_CASE("vertex plot data has one row per vertex and per signed atom") {
    TempDir tmp;
    std::string dict = tmp.file("pair.txt", kSkewedPair);
    std::filesystem::path csv =
        std::filesystem::temp_directory_path() /
        ("polarbp_plot_" + std::to_string(::getpid()) + ".csv");
    RunResult res = run_cli("geometry vertices --dict " + dict + " --plot-data " +
                            csv.string() + " --quiet");
    REQUIRE(res.exit_code == 0);
    std::ifstream in(csv);
    REQUIRE(in.good());
    int rows = 0, vertex_rows = 0, atom_rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        if (line.find(",v:") != std::string::npos) ++vertex_rows;
        if (line.find(",a:") != std::string::npos) ++atom_rows;
    }
    std::filesystem::remove(csv);
    CHECK(rows == 8);
    CHECK(vertex_rows == 4);
    CHECK(atom_rows == 4);
}

TEST_CASE("geometry failure exit codes") {
    TempDir tmp;
    std::string flat = tmp.file("flat.txt", "1 2\n2 4\n");
    CHECK(run_cli("geometry vertices --dict " + flat).exit_code == 5);

    // Identity block keeps the rank full so only the subset guard can trip.
    std::ostringstream big;
    for (int r = 0; r < 10; ++r) {
        for (int c = 0; c < 15; ++c) {
            double v = c < 10 ? (r == c ? 1.0 : 0.0) : 1.0 / (r + c - 8);
            big << v << (c + 1 < 15 ? " " : "");
        }
        big << "\n";
    }
    std::string wide = tmp.file("wide.txt", big.str());
    CHECK(run_cli("geometry vertices --dict " + wide).exit_code == 6);
}

TEST_CASE("neighbourliness query names the first failing face") {
    TempDir tmp;
    std::string dict = tmp.file("three.txt", kThreeAtoms);
    RunResult one = run_cli("geometry neighborly --dict " + dict + " --k 1");
    REQUIRE(one.exit_code == 0);
    json j1 = json::parse(one.out);
    CHECK(j1["neighborly"] == true);
    CHECK(j1["first_failure"].is_null());

    RunResult two = run_cli("geometry neighborly --dict " + dict + " --k 2");
    REQUIRE(two.exit_code == 0);
    json j2 = json::parse(two.out);
    CHECK(j2["neighborly"] == false);
    CHECK(j2["first_failure"] == "+1,+2");
}

TEST_CASE("spark query on the unit-norm triple") {
    TempDir tmp;
    std::string dict = tmp.file("triple.txt", kUnitNormTriple);
    RunResult res = run_cli("geometry spark --dict " + dict);
    REQUIRE(res.exit_code == 0);
    CHECK(json::parse(res.out)["spark"] == 4);
}

TEST_CASE("json output is stable across runs") {
    TempDir tmp;
    std::string dict = tmp.file("triple.txt", kUnitNormTriple);
    RunResult a = run_cli("certify --dict " + dict + " --x0 1:1,2:1");
    RunResult b = run_cli("certify --dict " + dict + " --x0 1:1,2:1");
    CHECK(a.out == b.out);
}

TEST_CASE("comment lines and comma separators parse") {
    TempDir tmp;
    std::string dict = tmp.file("commented.txt",
                                "# two orthonormal atoms\n1, 0\n0, 1\n");
    RunResult res = run_cli("certify --dict " + dict + " --x0 1:1 --quiet");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "true\n");
}

TEST_CASE("demos replay their transcripts and pass") {
    for (const std::string name : {"unit-norm-d3", "omp-two-step", "fig-regions"}) {
        RunResult res = run_cli("demo " + name);
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("PASS") != std::string::npos);
        CHECK(res.out.find("FAIL") == std::string::npos);
    }
}
