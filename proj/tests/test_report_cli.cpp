#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tamelat/catalog.hpp"
#include "tamelat/cli.hpp"
#include "tamelat/gram_io.hpp"
#include "tamelat/report.hpp"

using namespace tamelat;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("tamelat_test_" + name);
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST_CASE("report json round trip") {
    const TameParams p(4, 16);
    const ReportDocument verify = make_verify_report(verify_main_theorem(p, RSPair(p, -1, 2)));
    CHECK(report_from_json(json::parse(to_json(verify).dump())) == verify);

    ReportDocument big;
    big.command = "svp";
    big.inputs["N"] = "3";
    big.outputs["lambda1"] = "123456789012345678901234567890";
    big.vector_lists["minimal_vectors"] = {{"1", "-99999999999999999999", "0"}};
    big.status = ReportStatus::budget_exceeded;
    big.message = "stopped";
    const json serialized = to_json(big);
    CHECK(serialized["outputs"]["lambda1"].is_string());
    CHECK(report_from_json(json::parse(serialized.dump())) == big);
}

TEST_CASE("report status strings") {
    for (auto status : {ReportStatus::pass, ReportStatus::fail, ReportStatus::not_applicable,
                        ReportStatus::budget_exceeded}) {
        CHECK(parse_report_status(to_string(status)) == status);
    }
    CHECK(to_string(ReportStatus::not_applicable) == "not-applicable");
    CHECK_THROWS_AS(parse_report_status("ok"), ParseError);
    CHECK_THROWS_AS(report_from_json(json::parse(R"({"schema_version":"2"})")), ParseError);
    CHECK_THROWS_AS(report_from_json(json::parse(R"({"schema_version":"1"})")), ParseError);
}

TEST_CASE("verify reports the conductor-13 minima") {
    const Run m7 = run({"verify", "--n", "6", "--h", "2", "--r", "1", "--s", "1", "--json"});
    CHECK(m7.code == cli::kExitOk);
    const json doc = json::parse(m7.out);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["outputs"]["lambda1_predicted"] == "19");
    CHECK(doc["outputs"]["lambda1_enumerated"] == "19");
    CHECK(doc["status"] == "pass");

    const Run m5 = run({"--json", "verify", "--family", "prime-conductor", "--n", "6", "--cond", "13", "--r", "-1",
                        "--s", "1"});
    CHECK(json::parse(m5.out)["outputs"]["lambda1_enumerated"] == "15");
}

TEST_CASE("verify inside and outside the bounds") {
    const Run inside = run({"verify", "--n", "4", "--h", "16", "--r", "1", "--s", "1"});
    CHECK(inside.code == cli::kExitOk);
    CHECK(inside.out.find("lambda1_enumerated: 55") != std::string::npos);
    CHECK(inside.out.find("index_computed: 5") != std::string::npos);
    CHECK(inside.out.find("status: pass") != std::string::npos);

    const Run m17 = run({"--json", "verify", "--n", "4", "--h", "16", "--r", "1", "--s", "4"});
    CHECK(json::parse(m17.out)["status"] == "pass");
    const Run m21 = run({"--json", "verify", "--n", "4", "--h", "16", "--r", "1", "--s", "5"});
    CHECK(m21.code == cli::kExitOk);
    CHECK(json::parse(m21.out)["status"] == "not-applicable");
}

TEST_CASE("sweep") {
    const Run quartic = run({"sweep", "--n", "4", "--h", "16", "--json"});
    CHECK(quartic.code == cli::kExitOk);
    const json doc = json::parse(quartic.out);
    REQUIRE(doc["items"].size() == 7);
    long previous = 0;
    for (const auto& item : doc["items"]) {
        const long m = std::stol(item["inputs"]["m"].get<std::string>());
        CHECK(m > previous);
        previous = m;
        CHECK(item["status"] == "pass");
    }
    CHECK(doc["outputs"]["passed"] == "7");

    const Run sextic = run({"sweep", "--n", "6", "--h", "2"});
    CHECK(sextic.out.find("m=5 r=-1 s=1 lambda1=15") != std::string::npos);
    CHECK(sextic.out.find("m=7 r=1 s=1 lambda1=19") != std::string::npos);

    const Run empty = run({"--json", "sweep", "--n", "2", "--h", "0"});
    CHECK(empty.code == cli::kExitOk);
    CHECK(json::parse(empty.out)["items"].empty());

    const Run example = run({"sweep", "--family", "example3"});
    CHECK(example.out.find("7/7 pass") != std::string::npos);
}

TEST_CASE("build writes readable gram files") {
    const Run quartic = run({"build", "--n", "4", "--h", "16"});
    CHECK(quartic.code == cli::kExitOk);
    std::istringstream in(quartic.out);
    CHECK(read_gram(in) == TameParams(4, 16).gram());

    const Run sextic = run({"build", "--family", "prime-conductor", "--n", "6", "--cond", "13"});
    std::istringstream sextic_in(sextic.out);
    CHECK(read_gram(sextic_in) == TameParams(6, 2).gram());

    const auto path = std::filesystem::temp_directory_path() / "tamelat_test_out.gram";
    CHECK(run({"build", "--family", "root-a", "--n", "2", "--out", path.string()}).code == cli::kExitOk);
    CHECK(read_gram_file(path.string()) == reference_gram(ReferenceLattice::root_a, 2));

    const Run sub = run({"build", "--n", "4", "--h", "16", "--r", "1", "--s", "1"});
    std::istringstream sub_in(sub.out);
    CHECK(read_gram(sub_in)(0, 1) == -10);
}

TEST_CASE("svp on gram files") {
    const auto a2 = temp_file("a2.gram", "# hexagonal\n2\n2 -1\n-1 2\n");
    const json hex = json::parse(run({"--json", "svp", "--gram", a2.string(), "--oracle"}).out);
    CHECK(hex["outputs"]["lambda1"] == "2");
    CHECK(hex["outputs"]["kissing_number"] == "6");
    CHECK(hex["outputs"]["oracle_agrees"] == "true");
    CHECK(hex["outputs"]["center_density_sq_num"] == "1");
    CHECK(hex["outputs"]["center_density_sq_den"] == "12");

    const auto quartic = temp_file("quartic.gram", "4\n49 -16 -16 -16\n-16 49 -16 -16\n-16 -16 49 -16\n-16 -16 -16 49\n");
    const json parent = json::parse(run({"--json", "svp", "--gram", quartic.string()}).out);
    CHECK(parent["outputs"]["lambda1"] == "4");

    const auto glue = temp_file("glue.gram", "5\n5 2 2 2 2\n2 4 0 0 0\n2 0 4 0 0\n2 0 0 4 0\n2 0 0 0 4\n");
    const json wr = json::parse(run({"--json", "svp", "--gram", glue.string()}).out);
    CHECK(wr["outputs"]["well_rounded"] == "true");
    CHECK(wr["outputs"]["strongly_well_rounded"] == "false");
}

TEST_CASE("catalog listing") {
    const Run text = run({"catalog-list"});
    CHECK(text.code == cli::kExitOk);
    CHECK(text.out.find("admissible m: 5 7 9 11 13 15 17") != std::string::npos);
    const json doc = json::parse(run({"catalog-list", "--json"}).out);
    CHECK(doc.size() == 3);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"build", "--n", "1", "--h", "0"}).code == cli::kExitUsage);
    CHECK(run({"build", "--n", "4", "--h", "-1"}).code == cli::kExitUsage);
    CHECK(run({"build", "--n", "four", "--h", "0"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--n", "4", "--h", "16", "--r", "4", "--s", "1"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--n", "4", "--h", "16"}).code == cli::kExitUsage);
    CHECK(run({"svp", "--gram", "/nonexistent/file"}).code == cli::kExitUsage);
    const auto bad = temp_file("bad.gram", "2\n1 x\n0 1\n");
    const Run malformed = run({"svp", "--gram", bad.string()});
    CHECK(malformed.code == cli::kExitUsage);
    CHECK(malformed.err.find("not an integer") != std::string::npos);
    CHECK(run({"--help"}).code == cli::kExitOk);

    const Run budget = run({"--json", "verify", "--n", "6", "--h", "2", "--r", "1", "--s", "1", "--budget", "3"});
    CHECK(budget.code == cli::kExitBudget);
    CHECK(json::parse(budget.out)["status"] == "budget-exceeded");
}

TEST_CASE("budget from the environment, overridden by the flag") {
    setenv("TAMELAT_BUDGET", "3", 1);
    CHECK(run({"verify", "--n", "6", "--h", "2", "--r", "1", "--s", "1"}).code == cli::kExitBudget);
    CHECK(run({"verify", "--n", "6", "--h", "2", "--r", "1", "--s", "1", "--budget", "100000"}).code ==
          cli::kExitOk);
    setenv("TAMELAT_BUDGET", "lots", 1);
    CHECK(run({"verify", "--n", "6", "--h", "2", "--r", "1", "--s", "1"}).code == cli::kExitUsage);
    unsetenv("TAMELAT_BUDGET");
    CHECK(run({"verify", "--n", "6", "--h", "2", "--r", "1", "--s", "1"}).code == cli::kExitOk);
}
