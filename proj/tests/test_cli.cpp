#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "pforge/dominance.hpp"
#include "pforge/experiment.hpp"

using namespace pforge;
namespace fs = std::filesystem;

namespace {

std::string binary() {
    const char* bin = std::getenv("PFORGE_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "PFORGE_BIN must point at the cli binary");
    return bin;
}

int run_cli(const std::string& args) {
    const std::string cmd = "\"" + binary() + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path temp_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("pforge_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<ObjectiveVector> parse_front_csv(const std::string& text) {
    std::vector<ObjectiveVector> rows;
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "f1,f2");
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        rows.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    }
    return rows;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (const char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("run writes the expected files with a non-dominated front") {
    const fs::path dir = temp_dir("run");
    const int code = run_cli("run --problem zdt1 --algo sslpsa --seed 7 --generations 5 --out " +
                             dir.string());
    CHECK(code == 0);
    CHECK(fs::exists(dir / "front.csv"));
    CHECK(fs::exists(dir / "decisions.csv"));
    CHECK(fs::exists(dir / "trace.csv"));
    CHECK(fs::exists(dir / "result.json"));

    const auto front = parse_front_csv(slurp(dir / "front.csv"));
    REQUIRE(front.size() > 1);
    for (const auto& a : front)
        for (const auto& b : front)
            if (&a != &b) CHECK_FALSE(dominates(a, b));

    // decisions align row-for-row with the front
    CHECK(count_lines(slurp(dir / "decisions.csv")) == static_cast<int>(front.size()) + 1);
    CHECK(count_lines(slurp(dir / "trace.csv")) == 6);
}

TEST_CASE("identical seeded runs produce byte-identical fronts") {
    const fs::path a = temp_dir("det_a");
    const fs::path b = temp_dir("det_b");
    const std::string args = "run --problem sch --algo sslpsa --seed 123 --generations 8 --pop 10";
    CHECK(run_cli(args + " --out " + a.string()) == 0);
    CHECK(run_cli(args + " --out " + b.string()) == 0);
    CHECK(slurp(a / "front.csv") == slurp(b / "front.csv"));
    CHECK(slurp(a / "decisions.csv") == slurp(b / "decisions.csv"));
}

TEST_CASE("bad configuration exits with code 2") {
    CHECK(run_cli("run --problem bogus") == 2);
    CHECK(run_cli("run --problem zdt1 --algo bogus") == 2);
    CHECK(run_cli("run --no-such-flag") == 2);
    CHECK(run_cli("compare --problem zdt1 --runs 0") == 2);
    CHECK(run_cli("run --problem zdt1 --xi 1.7 --generations 1") == 2);
}

TEST_CASE("runtime failure exits with code 1") {
    CHECK(run_cli("run --problem zdt1 --generations 1 --pop 8 --out /proc/definitely/not/writable") == 1);
}

TEST_CASE("compare writes metrics and summary with the expected shape") {
    const fs::path dir = temp_dir("compare");
    const int code = run_cli("compare --problem sch --runs 2 --seed 5 --generations 6 --pop 10 --out " +
                             dir.string());
    CHECK(code == 0);
    const std::string metrics = slurp(dir / "metrics.csv");
    CHECK(count_lines(metrics) == 1 + 2 * 2);  // header + runs x algorithms
    CHECK(metrics.rfind("problem,algorithm,run,seed,gamma,delta,igd,spread,archive_size,wall_time\n", 0) ==
          0);
    const std::string summary = slurp(dir / "summary.csv");
    CHECK(count_lines(summary) == 1 + 2);
    CHECK(summary.find("sch,sslpsa,2,") != std::string::npos);
    CHECK(summary.find("sch,nsga2,2,") != std::string::npos);
}

TEST_CASE("compare with a single run reports zero deviations") {
    const fs::path dir = temp_dir("compare_one");
    CHECK(run_cli("compare --problem sch --algo sslpsa --runs 1 --seed 3 --generations 5 --pop 10 --out " +
                  dir.string()) == 0);
    const std::string summary = slurp(dir / "summary.csv");
    std::istringstream in(summary);
    std::string header, row;
    std::getline(in, header);
    REQUIRE(std::getline(in, row));
    // gamma_std, delta_std, igd_std, spread_std are columns 5, 7, 9, 11
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row_in(row);
    while (std::getline(row_in, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 12);
    CHECK(std::stod(cells[4]) == 0.0);
    CHECK(std::stod(cells[6]) == 0.0);
    CHECK(std::stod(cells[8]) == 0.0);
    CHECK(std::stod(cells[10]) == 0.0);
}

TEST_CASE("front exports the reference sample") {
    const fs::path dir = temp_dir("front");
    const fs::path csv = dir / "ref.csv";
    CHECK(run_cli("front --problem zdt1 -k 3 --out " + csv.string()) == 0);
    const auto rows = parse_front_csv(slurp(csv));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][0] == 0.0);
    CHECK(rows[0][1] == 1.0);
    CHECK(rows[1][0] == doctest::Approx(0.5));
    CHECK(rows[2][0] == doctest::Approx(1.0));
    // exactly one header row
    const std::string text = slurp(csv);
    CHECK(text.find("f1,f2") == text.rfind("f1,f2"));

    const fs::path fon_csv = dir / "fon.csv";
    CHECK(run_cli("front --problem fon -k 1000 --out " + fon_csv.string()) == 0);
    const auto fon_rows = parse_front_csv(slurp(fon_csv));
    REQUIRE(fon_rows.size() == 1000);
    for (std::size_t i = 1; i < fon_rows.size(); ++i) CHECK(fon_rows[i - 1][0] <= fon_rows[i][0]);
}

TEST_CASE("config file is honored and flags take precedence") {
    const fs::path dir = temp_dir("config");
    const fs::path cfg = dir / "exp.json";
    {
        std::ofstream out(cfg);
        out << R"({"problem":"sch","algo":"sslpsa","seed":9,"generations":4,"pop":10,"out":")"
            << (dir / "from_config").string() << R"("})";
    }
    CHECK(run_cli("run --config " + cfg.string()) == 0);
    CHECK(fs::exists(dir / "from_config" / "front.csv"));

    // a flag overrides the file's problem
    const fs::path flag_out = dir / "flagged";
    CHECK(run_cli("run --config " + cfg.string() + " --problem zdt6 --out " + flag_out.string()) == 0);
    const std::string result = slurp(flag_out / "result.json");
    CHECK(result.find("\"problem\": \"zdt6\"") != std::string::npos);
}

TEST_CASE("unknown config keys are rejected") {
    const fs::path dir = temp_dir("badkey");
    const fs::path cfg = dir / "bad.json";
    {
        std::ofstream out(cfg);
        out << R"({"problem":"sch","wibble":3})";
    }
    CHECK(run_cli("run --config " + cfg.string()) == 2);
    CHECK_THROWS_AS(parse_config_text(R"({"wibble":3})"), ConfigError);
}

TEST_CASE("result.json round-trips through the config parser") {
    const fs::path dir = temp_dir("roundtrip");
    const fs::path first = dir / "first";
    CHECK(run_cli("run --problem zdt2 --algo sslpsa --seed 21 --generations 4 --pop 10 --out " +
                  first.string()) == 0);

    // feeding result.json back reproduces the exact same run
    const fs::path second = dir / "second";
    CHECK(run_cli("run --config " + (first / "result.json").string() + " --out " + second.string()) == 0);
    CHECK(slurp(first / "front.csv") == slurp(second / "front.csv"));

    const ExperimentConfig parsed = parse_config_text(slurp(first / "result.json"));
    CHECK(parsed.problem == "zdt2");
    CHECK(parsed.algo == "sslpsa");
    CHECK(parsed.seed == 21);
    CHECK(parsed.generations == 4);
    CHECK(parsed.pop == 10);
}

TEST_CASE("thread cap environment variable bounds compare parallelism") {
    const fs::path dir = temp_dir("threads");
    const std::string cmd = "PARETO_FORGE_THREADS=1 \"" + binary() +
                            "\" compare --problem sch --algo sslpsa --runs 2 --seed 2 --generations 4 "
                            "--pop 10 --out " +
                            dir.string() + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(count_lines(slurp(dir / "metrics.csv")) == 3);
}
