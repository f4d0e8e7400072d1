#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support/schema_lite.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kCli = POLYPERM_CLI_PATH;
const std::string kSchemaDir = std::string(POLYPERM_SOURCE_DIR) + "/schemas";

struct CliResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const fs::path out_path =
        fs::temp_directory_path() / ("polyperm_cli_" + std::to_string(counter++) + ".out");
    const std::string command =
        (env.empty() ? "" : "env " + env + " ") + kCli + " " + args + " > " + out_path.string() +
        " 2>/dev/null";
    const int raw = std::system(command.c_str());
    CliResult result;
    result.exit_code = raw < 0 ? raw : WEXITSTATUS(raw);
    result.out = slurp(out_path);
    fs::remove(out_path);
    return result;
}

void require_valid(const std::string& schema_file, const json& value) {
    std::string error;
    const bool ok = schema_lite::validate_against_file(kSchemaDir + "/" + schema_file, value, error);
    INFO(error);
    REQUIRE(ok);
}

}  // namespace

TEST_CASE("cli analyze") {
    const auto r = run_cli("analyze 4 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["order"] == "8");
    CHECK(j["recognition"] == "D4");
    require_valid("group_report.schema.json", j);

    const auto text = run_cli("analyze 8");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("order: 128") != std::string::npos);

    const auto nine = run_cli("analyze 9 --json");
    REQUIRE(nine.exit_code == 0);
    const json j9 = json::parse(nine.out);
    CHECK(j9["order"] == "1296");
    CHECK(j9["order_method"] == "formula+enumeration");

    CHECK(run_cli("analyze 1").exit_code == 2);
    CHECK(run_cli("analyze").exit_code == 2);
    CHECK(run_cli("analyze four").exit_code == 2);
}

TEST_CASE("cli analyze degrades on gated moduli") {
    const auto r = run_cli("analyze 64 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["order"].is_null());
    CHECK(j["order_method"] == "gated");
    require_valid("group_report.schema.json", j);
}

TEST_CASE("cli verify") {
    const auto r = run_cli("verify counting --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    require_valid("verify_summary.schema.json", j);

    CHECK(run_cli("verify unknown-name").exit_code == 2);
}

TEST_CASE("cli atlas") {
    const fs::path csv_path = fs::temp_directory_path() / "polyperm_atlas_test.csv";
    const auto r = run_cli("atlas 10 --out " + csv_path.string());
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp(csv_path);
    CHECK(csv.find("n,order,method,factorization\n") == 0);
    CHECK(csv.find("\n4,8,formula,2^2\n") != std::string::npos);
    CHECK(csv.find("\n6,12,product,2*3\n") != std::string::npos);
    CHECK(csv.find("\n10,240,product,2*5\n") != std::string::npos);
    fs::remove(csv_path);

    const fs::path json_path = fs::temp_directory_path() / "polyperm_atlas_test.json";
    const auto rj = run_cli("atlas 12 --out " + json_path.string() + " --format json");
    REQUIRE(rj.exit_code == 0);
    require_valid("atlas.schema.json", json::parse(slurp(json_path)));
    fs::remove(json_path);

    CHECK(run_cli("atlas 1 --out /tmp/polyperm_unused.csv").exit_code == 2);
    CHECK(run_cli("atlas 10 --out /nonexistent-dir/x.csv").exit_code == 2);
}

TEST_CASE("cli pfb") {
    const auto r = run_cli("pfb 9 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["pfb_upper_bound"] == 7);
    CHECK(run_cli("pfb 27").out.find("<= 20") != std::string::npos);
}

TEST_CASE("cli rivest") {
    const auto r = run_cli("rivest x^4+x^2+x --modulus 8 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["is_permutation"] == true);

    const auto list = run_cli("rivest [0,3,1] --modulus 8 --json");
    REQUIRE(list.exit_code == 0);
    CHECK(json::parse(list.out)["is_permutation"] == false);  // a_2 sum is odd

    const auto quartic = run_cli("rivest [0,3,1,0,1] --modulus 8 --json");
    REQUIRE(quartic.exit_code == 0);
    CHECK(json::parse(quartic.out)["is_permutation"] == true);

    CHECK(run_cli("rivest x^2 --modulus 6").exit_code == 2);    // not a power of two
    CHECK(run_cli("rivest x^2+9x --modulus 8").exit_code == 2); // coefficient out of range
}

TEST_CASE("cli fractal") {
    const auto r = run_cli("fractal 3 3 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["proper"] == true);
    CHECK(j["index"] == "512");
    require_valid("fractal_report.schema.json", j);

    // p < k and out of enumeration range: polynomial side gated, exit still 0
    const auto gated = run_cli("fractal 2 6 --json");
    REQUIRE(gated.exit_code == 0);
    const json jg = json::parse(gated.out);
    CHECK(jg["pgr_order"].is_null());
    CHECK(jg["fpg_order"] == "9223372036854775808");  // 2^(1+2+4+8+16+32)
    require_valid("fractal_report.schema.json", jg);

    CHECK(run_cli("fractal 4 2").exit_code == 2);  // not prime
}

TEST_CASE("cli is-poly") {
    const std::string z27 =
        "\"(0,5)(1,13,7,10,4,25)(2,15,8,3,11,24,17,21,20,6,26,12)(9,14,18,23)(16,19,22)\"";
    const auto r = run_cli("is-poly 3 3 --perm " + z27 + " --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["is_polynomial"] == false);
    CHECK(j["is_fractal"] == true);

    const auto member = run_cli("is-poly 2 2 --perm \"(0,1,2,3)\" --json");
    REQUIRE(member.exit_code == 0);
    CHECK(json::parse(member.out)["is_polynomial"] == true);

    CHECK(run_cli("is-poly 2 2 --perm \"(0,9)\"").exit_code == 2);
}

TEST_CASE("cli output is byte-identical across runs") {
    const auto a = run_cli("analyze 36 --json");
    const auto b = run_cli("analyze 36 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const fs::path p1 = fs::temp_directory_path() / "polyperm_atlas_rep1.csv";
    const fs::path p2 = fs::temp_directory_path() / "polyperm_atlas_rep2.csv";
    run_cli("atlas 50 --out " + p1.string());
    run_cli("atlas 50 --out " + p2.string(), "POLYPERM_THREADS=4");
    CHECK(slurp(p1) == slurp(p2));
    fs::remove(p1);
    fs::remove(p2);
}

TEST_CASE("cli honours environment gates") {
    const auto gated = run_cli("analyze 8 --json", "POLYPERM_GATE=1");
    REQUIRE(gated.exit_code == 0);
    const json j = json::parse(gated.out);
    CHECK(j["order"].is_null());
    CHECK(j["order_method"] == "gated");

    CHECK(run_cli("analyze 8", "POLYPERM_GATE=abc").exit_code == 2);
    CHECK(run_cli("analyze 8", "POLYPERM_THREADS=0").exit_code == 2);
}
