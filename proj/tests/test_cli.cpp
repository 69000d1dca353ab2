#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"
#include "tvcode/cli.hpp"
#include "tvcode/core.hpp"
#include "tvcode/merge.hpp"

using json = nlohmann::json;
using namespace tvtest;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("tvcode");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = tvcode::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& contents, const std::string& suffix) {
    static int counter = 0;
    const auto path = std::filesystem::temp_directory_path() /
                      ("tvcode_cli_test_" + std::to_string(counter++) + suffix);
    std::ofstream f(path);
    f << contents;
    return path.string();
}

std::string paper_input_path() {
    json j;
    j["probabilities"] = kMu4Caller; // unsorted caller order
    j["symbols"] = {"d", "a", "c", "b"};
    return write_temp(j.dump(), ".json");
}

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

TEST_CASE("design reproduces the worked example through the CLI") {
    const auto path = paper_input_path();
    const auto r = run_cli({"design", "--input", path, "--radius", fmt17(2.0 / 15)});
    REQUIRE(r.code == 0);
    const json rep = json::parse(r.out);

    // Caller order is (1/15, 8/15, 2/15, 4/15); the worked weights follow it.
    const std::vector<double> expected{2.0 / 15, 7.0 / 15, 2.0 / 15, 4.0 / 15};
    const auto weights = rep.at("weights").get<std::vector<double>>();
    REQUIRE(weights.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(weights[i] - expected[i]) <= 1e-9);

    CHECK(std::abs(rep.at("alpha_max").get<double>() - kAlphaMax4) <= 1e-9);
    CHECK(rep.at("base").get<int>() == 2);
    CHECK(rep.at("symbols").size() == 4);
}

TEST_CASE("design reports the group memberships in caller order") {
    // alpha 0.07 sits strictly inside (1/15, 4/15): bottom group {2/15, 1/15},
    // top group {8/15}, middle {4/15}.
    const auto path = paper_input_path();
    const auto r = run_cli({"design", "--input", path, "--radius", "0.14"});
    REQUIRE(r.code == 0);
    const json rep = json::parse(r.out);
    const auto groups = rep.at("groups").get<std::vector<std::string>>();
    CHECK(groups[0] == "bottom"); // 1/15 lives in caller slot 0
    CHECK(groups[1] == "top");    // 8/15 lives in caller slot 1
    CHECK(groups[2] == "bottom"); // 2/15 merged with 1/15 already
    CHECK(groups[3] == "middle");
    CHECK(rep.at("top_count").get<int>() == 1);
    CHECK(rep.at("bottom_count").get<int>() == 2);
}

TEST_CASE("design at radius 0 is the classical Shannon design") {
    const auto path = paper_input_path();
    const auto r = run_cli({"design", "--input", path});
    REQUIRE(r.code == 0);
    const json rep = json::parse(r.out);
    const auto lengths = rep.at("real_lengths").get<std::vector<double>>();
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(lengths[i] - (-std::log2(kMu4Caller[i]))) <= 1e-9);
    CHECK(rep.at("alpha").get<double>() == 0.0);
}

TEST_CASE("CLI validation failures exit with code 2") {
    const auto bad_json = write_temp("{not json", ".json");
    const auto r1 = run_cli({"design", "--input", bad_json, "--format", "json"});
    CHECK(r1.code == 2);
    CHECK(r1.err.find("JSON") != std::string::npos);

    const auto not_normalized = write_temp("{\"probabilities\": [0.5, 0.5, 0.1]}", ".json");
    const auto r2 = run_cli({"design", "--input", not_normalized});
    CHECK(r2.code == 2);
    CHECK(r2.err.find("sum") != std::string::npos);

    const auto path = paper_input_path();
    CHECK(run_cli({"design", "--input", path, "--radius", "0.1", "--alpha", "0.05"}).code ==
          2);
    CHECK(run_cli({"design", "--input", path, "--radius", "3"}).code == 2);
    CHECK(run_cli({"design", "--input", path, "--precision", "0"}).code == 2);
    CHECK(run_cli({"design", "--input", "/nonexistent/file.json"}).code == 2);
    const auto bad_csv = write_temp("0.5\noops\n0.5\n", ".csv");
    CHECK(run_cli({"design", "--input", bad_csv}).code == 2);
}

TEST_CASE("trajectory emits exactly the breakpoints when steps is 0") {
    const auto path = paper_input_path();
    const auto r = run_cli({"trajectory", "--input", path, "--format", "csv", "--steps", "0"});
    REQUIRE(r.code == 0);

    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "alpha,symbol,weight,breakpoint");
    std::vector<double> alphas;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        const auto c1 = line.find(',');
        alphas.push_back(std::stod(line.substr(0, c1)));
        CHECK(line.back() == '1'); // every row is a breakpoint row
    }
    CHECK(rows == 4 * 4);
    const std::vector<double> expected{0.0, 1.0 / 15, 4.0 / 15, 0.3};
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t s = 0; s < 4; ++s)
            CHECK(std::abs(alphas[4 * k + s] - expected[k]) <= 1e-9);
}

TEST_CASE("trajectory interior samples and uniform degenerate case") {
    const auto path = paper_input_path();
    const auto r = run_cli({"trajectory", "--input", path, "--steps", "5"});
    REQUIRE(r.code == 0);
    const json rep = json::parse(r.out);
    std::size_t interior = 0;
    for (const auto& row : rep.at("rows"))
        if (!row.at("breakpoint").get<bool>()) ++interior;
    CHECK(interior == 5 * 4); // five sampled alphas, four symbols each

    const auto uniform = write_temp("{\"probabilities\": [0.25, 0.25, 0.25, 0.25]}", ".json");
    const auto ru = run_cli({"trajectory", "--input", uniform, "--steps", "8"});
    REQUIRE(ru.code == 0);
    const json repu = json::parse(ru.out);
    CHECK(repu.at("alpha_max").get<double>() == 0.0);
    CHECK(repu.at("rows").size() == 4); // single flat row set at alpha 0
}

TEST_CASE("metrics on one and two distributions") {
    const auto single = write_temp("{\"probabilities\": [0.25, 0.25, 0.25, 0.25]}", ".json");
    const auto r1 = run_cli({"metrics", "--input", single});
    REQUIRE(r1.code == 0);
    const json rep1 = json::parse(r1.out);
    CHECK(rep1.at("entropy_p").get<double>() == doctest::Approx(2.0));
    CHECK(!rep1.contains("tv_distance"));

    json two;
    two["p"] = kMu4;
    two["q"] = {0.25, 0.25, 0.25, 0.25};
    const auto pair_path = write_temp(two.dump(), ".json");
    const auto r2 = run_cli({"metrics", "--input", pair_path});
    REQUIRE(r2.code == 0);
    const json rep2 = json::parse(r2.out);
    CHECK(std::abs(rep2.at("tv_distance").get<double>() - kTvMu4Uniform) <= 1e-9);
    CHECK(std::abs(rep2.at("kl_pq_nats").get<double>() - kKlMu4UniformNats) <= 1e-9);
    CHECK(std::abs(rep2.at("kl_qp_nats").get<double>() - kKlUniformMu4Nats) <= 1e-9);
    CHECK(rep2.at("pinsker").at("satisfied").get<bool>());

    json same;
    same["p"] = {0.5, 0.5};
    same["q"] = {0.5, 0.5};
    const auto same_path = write_temp(same.dump(), ".json");
    const json rep3 = json::parse(run_cli({"metrics", "--input", same_path}).out);
    CHECK(rep3.at("tv_distance").get<double>() == 0.0);
    CHECK(rep3.at("kl_pq_nats").get<double>() == 0.0);

    json disjoint;
    disjoint["p"] = {0.5, 0.5};
    disjoint["q"] = {1.0, 0.0};
    const auto dis_path = write_temp(disjoint.dump(), ".json");
    const json rep4 = json::parse(run_cli({"metrics", "--input", dis_path}).out);
    CHECK(rep4.at("kl_pq_nats").is_null()); // infinite divergence
    CHECK(rep4.at("pinsker").at("satisfied").get<bool>());
}

TEST_CASE("csv input with labels and with a second numeric column") {
    const auto labeled = write_temp("0.75,heads\n0.25,tails\n", ".csv");
    const auto r = run_cli({"design", "--input", labeled, "--alpha", "0.1"});
    REQUIRE(r.code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep.at("symbols") == json({"heads", "tails"}));
    CHECK(std::abs(rep.at("weights")[0].get<double>() - 0.65) <= 1e-9);

    const auto two_cols = write_temp("0.5,0.25\n0.5,0.75\n", ".csv");
    const auto rm = run_cli({"metrics", "--input", two_cols});
    REQUIRE(rm.code == 0);
    const json repm = json::parse(rm.out);
    CHECK(std::abs(repm.at("kl_pq_nats").get<double>() - kKlHalfVsQuarter) <= 1e-9);
}

TEST_CASE("verify passes on the worked example and is deterministic") {
    const auto path = paper_input_path();
    const std::vector<std::string> args{"verify",  "--input", path,  "--radius",
                                        "0.13333333333333333", "--trials", "10",
                                        "--seed",  "7"};
    const auto r1 = run_cli(args);
    REQUIRE(r1.code == 0);
    const json rep = json::parse(r1.out);
    CHECK(rep.at("violations").empty());
    CHECK(rep.at("checks_run").get<std::size_t>() > 0);

    const auto r2 = run_cli(args);
    CHECK(r1.out == r2.out); // seeded: bitwise identical report
}

TEST_CASE("verify skips enumeration on large alphabets with a warning") {
    std::vector<double> big(20);
    double total = 0.0;
    for (std::size_t i = 0; i < big.size(); ++i) total += (big[i] = std::pow(0.8, i));
    for (auto& v : big) v /= total;
    json j;
    j["probabilities"] = big;
    const auto path = write_temp(j.dump(), ".json");
    const auto r = run_cli({"verify", "--input", path, "--trials", "0", "--alpha", "0.2"});
    CHECK(r.code == 0);
    CHECK(r.err.find("skipped") != std::string::npos);
    CHECK(json::parse(r.out).at("enumeration_skipped_for_input").get<bool>());
}

TEST_CASE("permuting the input permutes every vector and changes no scalar") {
    json a, b;
    a["probabilities"] = kMu4;        // sorted order
    b["probabilities"] = kMu4Caller;  // a permutation of it
    const auto pa = write_temp(a.dump(), ".json");
    const auto pb = write_temp(b.dump(), ".json");
    const auto ra = json::parse(run_cli({"design", "--input", pa, "--alpha", "0.1"}).out);
    const auto rb = json::parse(run_cli({"design", "--input", pb, "--alpha", "0.1"}).out);

    // kMu4Caller[i] = kMu4[perm[i]]
    const std::vector<std::size_t> perm{3, 0, 2, 1};
    for (const char* field : {"weights", "real_lengths", "integer_lengths"}) {
        const auto va = ra.at(field).get<std::vector<double>>();
        const auto vb = rb.at(field).get<std::vector<double>>();
        for (std::size_t i = 0; i < 4; ++i) CHECK(vb[i] == va[perm[i]]);
    }
    for (const char* field : {"worst_case_average_length", "entropy_of_weights",
                              "alpha_max", "integer_worst_case_average_length"}) {
        CHECK(ra.at(field).get<double>() == rb.at(field).get<double>());
    }
}

TEST_CASE("design output weights re-ingest to the same lengths at the printed precision") {
    const auto path = paper_input_path();
    const auto first =
        json::parse(run_cli({"design", "--input", path, "--radius", fmt17(2.0 / 15)}).out);
    json refeed;
    refeed["probabilities"] = first.at("weights");
    const auto second_path = write_temp(refeed.dump(), ".json");
    const auto second =
        json::parse(run_cli({"design", "--input", second_path, "--alpha", "0"}).out);

    const auto l1 = first.at("real_lengths").get<std::vector<double>>();
    const auto l2 = second.at("real_lengths").get<std::vector<double>>();
    REQUIRE(l1.size() == l2.size());
    for (std::size_t i = 0; i < l1.size(); ++i) {
        // One unit in the 12th significant digit of the reported value.
        const double ulp = 1e-11 * std::max(1.0, std::abs(l1[i]));
        CHECK(std::abs(l1[i] - l2[i]) <= 2 * ulp);
    }
}

TEST_CASE("help and unknown flags") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"design", "--frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2); // a subcommand is required
}

TEST_CASE("garbage inputs never crash and always exit 2") {
    const std::vector<std::string> payloads{
        "",
        "\n\n\n",
        "{",
        "[1, 2",
        "{\"probabilities\": \"nope\"}",
        "{\"probabilities\": [0.5, \"x\"]}",
        "{\"probabilities\": [0.5]}",
        "{\"probabilities\": [0.5, 0.5], \"symbols\": [\"a\"]}",
        "{\"probabilities\": [1e308, 1e308]}",
        "{\"probabilities\": [0.5, -0.5]}",
        "[0.5, 0.5]",
        "0.5,0.5,0.5\n",
        ",,,\n",
        "NaN\n0.5\n",
        "\xff\xfe\x00garbage",
    };
    for (const auto& text : payloads) {
        const auto path = write_temp(text, ".txt");
        for (const char* cmd : {"design", "trajectory", "metrics"})
            CHECK(run_cli({cmd, "--input", path}).code == 2);
        CHECK(run_cli({"verify", "--input", path, "--trials", "0"}).code == 2);
    }

    // p and q of different lengths is a metrics-only failure.
    const auto mismatched = write_temp("{\"p\": [0.5, 0.5], \"q\": [1.0]}", ".json");
    CHECK(run_cli({"metrics", "--input", mismatched}).code == 2);
}
