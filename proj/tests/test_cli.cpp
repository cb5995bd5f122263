#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    std::string cmd = std::string(HGI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof(buffer), pipe)) result.out.append(buffer, got);
    int rc = pclose(pipe);
    result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string last_line(const std::string& text) {
    auto lines = lines_of(text);
    return lines.empty() ? std::string() : lines.back();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

} // namespace

TEST_CASE("delta prints the hypergraph and a summary line") {
    RunResult r = run_cli("delta --k 2 --l 5");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 2);
    nlohmann::json j = nlohmann::json::parse(lines.front());
    CHECK(j.at("n").get<int>() == 10);
    CHECK(j.at("edges").size() == 25);
    CHECK(lines.back() == "SUMMARY command=delta k=2 l=5 edges=25 status=pass");
}

TEST_CASE("delta honors the full-row variant") {
    RunResult r = run_cli("delta --k 2 --l 4 --prime");
    CHECK(r.exit_code == 0);
    CHECK(last_line(r.out) == "SUMMARY command=delta k=2 l=4 edges=6 status=pass");
}

TEST_CASE("delta rejects degenerate grids") {
    CHECK(run_cli("delta --k 1 --l 5").exit_code != 0);
    CHECK(run_cli("delta --k 2 --l 2").exit_code != 0);
}

TEST_CASE("census reports classes and total for supported shapes") {
    RunResult r = run_cli("census --k 2 --l 5");
    CHECK(r.exit_code == 0);
    CHECK(last_line(r.out) ==
          "SUMMARY command=census k=2 l=5 d=3 classes=6 total=171 status=pass");

    RunResult r34 = run_cli("census --k 3 --l 4");
    CHECK(r34.exit_code == 0);
    CHECK(last_line(r34.out) ==
          "SUMMARY command=census k=3 l=4 d=3 classes=9 total=331 status=pass");

    CHECK(run_cli("census --k 3 --l 5").exit_code != 0);
}

TEST_CASE("census json output is byte identical across runs") {
    const std::string f1 = "/tmp/hgi_census_a.json";
    const std::string f2 = "/tmp/hgi_census_b.json";
    RunResult a = run_cli("census --k 2 --l 4 --format json --out " + f1);
    RunResult b = run_cli("census --k 2 --l 4 --format json --out " + f2);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    std::string body1 = read_file(f1);
    std::string body2 = read_file(f2);
    CHECK(!body1.empty());
    CHECK(body1 == body2);
    nlohmann::json j = nlohmann::json::parse(body1);
    CHECK(j.at("total").get<long>() == 43);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("verify runs the fast suites") {
    RunResult inc = run_cli("verify --suite incidence");
    CHECK(inc.exit_code == 0);
    CHECK(last_line(inc.out).rfind("SUMMARY suite=incidence", 0) == 0);
    CHECK(last_line(inc.out).find("status=pass") != std::string::npos);

    RunResult ids = run_cli("verify --suite identities");
    CHECK(ids.exit_code == 0);
    CHECK(last_line(ids.out).find("status=pass") != std::string::npos);

    RunResult gb = run_cli("verify --suite gb --k 2 --l 3");
    CHECK(gb.exit_code == 0);
    CHECK(last_line(gb.out).find("status=pass") != std::string::npos);
}

TEST_CASE("verify rejects unknown suites and unsupported grids") {
    CHECK(run_cli("verify --suite nonsense").exit_code != 0);
    CHECK(run_cli("verify --suite gb --k 3 --l 4").exit_code != 0);
}

TEST_CASE("ci translates a model file and recognizes the grid hypergraph") {
    const std::string model = "/tmp/hgi_ci_model.json";
    write_file(model, R"({
        "x_states": 3,
        "y_vars": [{"name": "Y1", "states": 2}, {"name": "Y2", "states": 4}],
        "statements": [
            {"independent": ["Y1"], "conditioning": ["Y2"]},
            {"independent": ["Y2"], "conditioning": ["Y1"], "hidden_states": 2}
        ]
    })");
    RunResult r = run_cli("ci --model " + model);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("delta_match 2x4") != std::string::npos);
    CHECK(last_line(r.out) ==
          "SUMMARY command=ci n=8 edges=12 delta_match=2x4 status=pass");
    std::remove(model.c_str());
}

TEST_CASE("ci reports when no grid hypergraph matches") {
    const std::string model = "/tmp/hgi_ci_single.json";
    write_file(model, R"({
        "x_states": 3,
        "y_vars": [{"name": "Y", "states": 4}],
        "statements": [{"independent": ["Y"], "hidden_states": 2}]
    })");
    RunResult r = run_cli("ci --model " + model);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("delta_match none") != std::string::npos);
    std::remove(model.c_str());
}

TEST_CASE("ci fails cleanly on malformed or missing input") {
    const std::string model = "/tmp/hgi_ci_broken.json";
    write_file(model, "{ this is not json");
    CHECK(run_cli("ci --model " + model).exit_code != 0);
    std::remove(model.c_str());
    CHECK(run_cli("ci --model /tmp/hgi_ci_missing_file.json").exit_code != 0);
}
