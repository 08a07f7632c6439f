#include <cstdio>
#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coopic/cli.hpp"

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"coopic"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliRun result;
    result.code = coopic::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
      : path_(std::filesystem::temp_directory_path() / name) {
        std::ofstream stream(path_);
        stream << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::string topology_json(int K, bool connected) {
    std::string rows;
    for (int i = 0; i < K; ++i) {
        rows += i == 0 ? "[" : ",[";
        for (int j = 0; j < K; ++j) {
            const int bit = connected || i == j ? 1 : 0;
            rows += (j == 0 ? "" : ",") + std::to_string(bit);
        }
        rows += "]";
    }
    return "{\"K\":" + std::to_string(K) + ",\"M\":1,\"L\":[" + rows + "]}";
}

std::string star_backhaul_json(int K) {
    std::string links;
    for (int i = 1; i < K; ++i) {
        if (!links.empty()) links += ",";
        links += "{\"from\":0,\"to\":" + std::to_string(i) + ",\"capacity\":1.0},";
        links += "{\"from\":" + std::to_string(i) + ",\"to\":0,\"capacity\":1.0}";
    }
    return "{\"K\":" + std::to_string(K) + ",\"links\":[" + links + "]}";
}

std::string ring_backhaul_json(int K) {
    std::string links;
    for (int i = 0; i < K; ++i) {
        const int next = (i + 1) % K;
        if (!links.empty()) links += ",";
        links += "{\"from\":" + std::to_string(i) + ",\"to\":" + std::to_string(next) +
                 ",\"capacity\":1.0},";
        links += "{\"from\":" + std::to_string(next) + ",\"to\":" + std::to_string(i) +
                 ",\"capacity\":1.0}";
    }
    return "{\"K\":" + std::to_string(K) + ",\"links\":[" + links + "]}";
}

}  // namespace

TEST_CASE("check-ehc verdicts and exit codes") {
    const TempFile good("coopic_full4.json", topology_json(4, true));
    const CliRun holds = run({"check-ehc", "--topology", good.path()});
    CHECK(holds.code == 0);
    CHECK(holds.out.find("# seed=42\n") == 0);
    CHECK(holds.out.find("EHC: HOLDS\n") != std::string::npos);

    const TempFile bad("coopic_id4.json", topology_json(4, false));
    const CliRun fails = run({"check-ehc", "--topology", bad.path()});
    CHECK(fails.code == 1);
    CHECK(fails.out.find("EHC: FAILS\n") != std::string::npos);
    CHECK(fails.out.find("max_pis_size=4\n") != std::string::npos);

    const TempFile malformed("coopic_bad.json", "{\"K\":2}");
    CHECK(run({"check-ehc", "--topology", malformed.path()}).code == 2);
    CHECK(run({"check-ehc", "--topology", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"check-ehc"}).code == 2);
}

TEST_CASE("tradeoff emits the documented CSV") {
    const CliRun two_user = run({"tradeoff", "--K", "2", "--M", "1", "--alpha-max", "2", "--steps", "3"});
    CHECK(two_user.code == 0);
    CHECK(two_user.out ==
          "alpha,dof_lower,dof_upper\n"
          "0.0,0.5,0.5\n"
          "1.0,1.0,1.0\n"
          "2.0,1.0,1.0\n");

    const CliRun odd = run({"tradeoff", "--K", "3", "--M", "1", "--alpha-max", "1", "--steps", "2"});
    CHECK(odd.out.find("0.0,0.5,0.666667\n") != std::string::npos);

    const CliRun even = run({"tradeoff", "--K", "4", "--M", "2", "--alpha-max", "3", "--steps", "4"});
    CHECK(even.out.find("0.0,1.0,1.0\n") != std::string::npos);

    CHECK(run({"tradeoff", "--K", "3", "--M", "1", "--alpha-max", "2", "--steps", "1"}).code == 2);
}

TEST_CASE("feasibility verdicts") {
    const TempFile star("coopic_star5.json", star_backhaul_json(5));
    const CliRun feasible = run({"feasibility", "--backhaul", star.path()});
    CHECK(feasible.code == 0);
    CHECK(feasible.out.find("FEASIBLE witness=0\n") != std::string::npos);

    const TempFile ring("coopic_ring5.json", ring_backhaul_json(5));
    const CliRun infeasible = run({"feasibility", "--backhaul", ring.path(), "--mode", "finite"});
    CHECK(infeasible.code == 1);
    CHECK(infeasible.out.find("INFEASIBLE\n") != std::string::npos);

    const CliRun asymptotic =
        run({"feasibility", "--backhaul", ring.path(), "--mode", "asymptotic", "--epsilon", "0.6"});
    CHECK(asymptotic.code == 0);

    CHECK(run({"feasibility", "--backhaul", ring.path(), "--mode", "bogus"}).code == 2);
}

TEST_CASE("simulate emits a stable rate CSV") {
    const TempFile topo("coopic_full2.json", topology_json(2, true));
    const std::vector<std::string> args{"simulate", "--topology", topo.path(), "--scheme", "zf",
                                        "--grid", "1e3,1e4,1e5,1e6"};
    const CliRun first = run(args);
    CHECK(first.code == 0);
    CHECK(first.err.find("# seed=42\n") == 0);
    CHECK(first.out.find("P,rate_user_0,rate_user_1,slope_fit\n") == 0);
    CHECK(std::count(first.out.begin(), first.out.end(), '\n') == 5);

    const CliRun second = run(args);
    CHECK(second.out == first.out);  // byte-stable

    const CliRun reseeded = run({"simulate", "--topology", topo.path(), "--scheme", "qf",
                                 "--grid", "1e3,1e4,1e5,1e6", "--seed", "7"});
    CHECK(reseeded.code == 0);
    CHECK(reseeded.err.find("# seed=7\n") == 0);
}

TEST_CASE("verify-conditions reports a consistent triple") {
    const TempFile good("coopic_full4b.json", topology_json(4, true));
    const CliRun holds = run({"verify-conditions", "--topology", good.path(), "--trials", "5"});
    CHECK(holds.code == 0);
    CHECK(holds.out.find("a=HOLDS b=HOLDS c=HOLDS CONSISTENT\n") != std::string::npos);
    CHECK(holds.out.find("violations=0") != std::string::npos);

    const TempFile bad("coopic_id4b.json", topology_json(4, false));
    const CliRun fails = run({"verify-conditions", "--topology", bad.path(), "--trials", "5"});
    CHECK(fails.code == 1);
    CHECK(fails.out.find("a=FAILS b=FAILS c=FAILS CONSISTENT\n") != std::string::npos);
}

TEST_CASE("partition-converse reports the enumerated bound") {
    const TempFile topo("coopic_full4c.json", topology_json(4, true));
    const TempFile star("coopic_star4.json", star_backhaul_json(4));
    const CliRun bound = run({"partition-converse", "--topology", topo.path(), "--backhaul", star.path()});
    CHECK(bound.code == 0);
    CHECK(bound.out.find("K=4 M=1 alpha=1.5\n") != std::string::npos);
    CHECK(bound.out.find("converse_per_user=") != std::string::npos);

    const TempFile mismatched("coopic_star3.json", star_backhaul_json(3));
    CHECK(run({"partition-converse", "--topology", topo.path(), "--backhaul", mismatched.path()}).code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"unknown-command"}).code == 2);
    CHECK(run({"simulate", "--topology", "x.json", "--scheme", "nope"}).code == 2);
}
