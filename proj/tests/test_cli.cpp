#include <doctest.h>

#include <filesystem>
#include <string>

#include "testutil.hpp"

namespace {

const std::string kCli = FPA_CLI_PATH;
const std::string kFixturesDir = FPA_FIXTURES_DIR;

std::string fixture(const std::string& name) {
    return testutil::quoted(kFixturesDir + "/" + name);
}

testutil::RunResult run_cli(const std::string& args) {
    return testutil::run_command(testutil::quoted(kCli) + " " + args);
}

bool contains(const std::string& haystack, std::string_view needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string itemized_rcaf_sheet(int f5_value) {
    std::string text = "[counts]\ninput = 1 0 0\n[rcaf]\n";
    for (int i = 1; i <= 14; ++i)
        text += "f" + std::to_string(i) + " = " + std::to_string(i == 5 ? f5_value : 1) + "\n";
    return text;
}

}  // namespace

TEST_CASE("compute prints the object-oriented report") {
    const auto result = run_cli("compute " + fixture("academic_oo.fpa"));
    CHECK(result.exit_code == 0);
    CHECK(contains(result.out, "FP = 174.64"));
    CHECK(contains(result.out, "Sum of CFP"));
    CHECK_FALSE(contains(result.out, "error:"));
    CHECK_FALSE(contains(result.out, "warning:"));
}

TEST_CASE("compute emits json with the structural golden value") {
    const auto result = run_cli("compute " + fixture("academic_structural.fpa") + " --format json");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.out, "\"fp\": \"180.93\""));
    CHECK(contains(result.out, "\"cfp\": 163"));
}

TEST_CASE("a missing file exits 3 and names the path") {
    const auto result = run_cli("compute " + fixture("missing.fpa"));
    CHECK(result.exit_code == 3);
    CHECK(result.out.empty());
    CHECK(contains(result.err, "missing.fpa"));
}

TEST_CASE("invalid content in a well-formed file exits 1") {
    const auto path = testutil::write_temp_file("bad-rating", itemized_rcaf_sheet(9));
    const auto result = run_cli("compute " + testutil::quoted(path.string()));
    CHECK(result.exit_code == 1);
    CHECK(result.out.empty());
    CHECK(contains(result.err, "rating out of range 0..5"));
    CHECK(contains(result.err, ":8:"));  // f5 lives on line 8
    std::filesystem::remove(path);
}

TEST_CASE("a malformed file exits 2") {
    const auto path = testutil::write_temp_file("bad-syntax", "[rcaf\ntotal = 5\n");
    const auto result = run_cli("compute " + testutil::quoted(path.string()));
    CHECK(result.exit_code == 2);
    CHECK(result.out.empty());
    CHECK_FALSE(result.err.empty());
    std::filesystem::remove(path);
}

TEST_CASE("validate prints OK for a clean sheet") {
    const auto result = run_cli("validate " + fixture("academic_oo.fpa"));
    CHECK(result.exit_code == 0);
    CHECK(result.out == "OK\n");
    CHECK(contains(result.err, "warning:"));  // declared rcaf total
}

TEST_CASE("validate reports all diagnostics with exit 1 on semantic defects") {
    const auto path = testutil::write_temp_file("bad-rating-2", itemized_rcaf_sheet(6));
    const auto result = run_cli("validate " + testutil::quoted(path.string()));
    CHECK(result.exit_code == 1);
    CHECK(result.out.empty());
    CHECK(contains(result.err, "error:"));
    std::filesystem::remove(path);
}

TEST_CASE("compare reports the published delta") {
    const auto result = run_cli("compare " + fixture("academic_oo.fpa") + " " +
                                fixture("academic_structural.fpa"));
    CHECK(result.exit_code == 0);
    CHECK(contains(result.out, "+6.29"));
    CHECK(contains(result.out, "174.64"));
    CHECK(contains(result.out, "180.93"));
}

TEST_CASE("comparing a file with itself shows a zero delta") {
    const auto result =
        run_cli("compare " + fixture("academic_oo.fpa") + " " + fixture("academic_oo.fpa"));
    CHECK(result.exit_code == 0);
    CHECK(contains(result.out, "0.00"));
}

TEST_CASE("compare with an invalid side emits no partial report") {
    const auto path = testutil::write_temp_file("bad-side", itemized_rcaf_sheet(9));
    const auto result =
        run_cli("compare " + fixture("academic_oo.fpa") + " " + testutil::quoted(path.string()));
    CHECK(result.exit_code == 1);
    CHECK(result.out.empty());
    std::filesystem::remove(path);
}

TEST_CASE("whatif adjusts a declared rcaf total") {
    const auto result =
        run_cli("whatif " + fixture("academic_oo.fpa") + " --rcaf total=+1");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.out, "176.12"));
    CHECK(contains(result.out, "174.64"));
    CHECK(contains(result.out, "+1.48"));
}

TEST_CASE("whatif adds counted items") {
    const auto result = run_cli("whatif " + fixture("academic_oo.fpa") + " --add ILF:high");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.out, "192.34"));
    CHECK(contains(result.out, "+17.70"));
}

TEST_CASE("whatif with no adjustments is the identity") {
    const auto result = run_cli("whatif " + fixture("academic_oo.fpa"));
    CHECK(result.exit_code == 0);
    CHECK(contains(result.out, "0.00"));
}

TEST_CASE("whatif names the out-of-range flag and exits 1") {
    const auto result =
        run_cli("whatif " + fixture("academic_oo.fpa") + " --rcaf total=+50");
    CHECK(result.exit_code == 1);
    CHECK(result.out.empty());
    CHECK(contains(result.err, "total=+50"));
}

TEST_CASE("whatif rejects per-factor adjustments on declared-total sheets") {
    const auto result = run_cli("whatif " + fixture("academic_oo.fpa") + " --rcaf f3=+1");
    CHECK(result.exit_code == 1);
    CHECK(contains(result.err, "f3=+1"));
}

TEST_CASE("whatif adjusts itemized factors") {
    const auto path = testutil::write_temp_file("itemized", itemized_rcaf_sheet(1));
    const auto result =
        run_cli("whatif " + testutil::quoted(path.string()) + " --rcaf f5=+2 --format csv");
    CHECK(result.exit_code == 0);
    // base: cfp 3, rcaf 14 -> 2.37; adjusted rcaf 16 -> 2.43
    CHECK(contains(result.out, "2.37"));
    CHECK(contains(result.out, "2.43"));
    std::filesystem::remove(path);
}

TEST_CASE("malformed whatif flags exit 2") {
    CHECK(run_cli("whatif " + fixture("academic_oo.fpa") + " --rcaf bogus").exit_code == 2);
    CHECK(run_cli("whatif " + fixture("academic_oo.fpa") + " --add ILF-high").exit_code == 2);
}

TEST_CASE("an unknown subcommand is a usage error") {
    const auto result = run_cli("frobnicate x.fpa");
    CHECK(result.exit_code == 2);
    CHECK(result.out.empty());
}

TEST_CASE("weight overrides change the arithmetic") {
    const std::string weights_text =
        "[weights]\ninput = 1 1 1\noutput = 1 1 1\nquery = 1 1 1\nfile = 1 1 1\n"
        "interface = 1 1 1\n";
    const auto path = testutil::write_temp_file("flat-weights", weights_text);
    const auto result = run_cli("compute " + fixture("academic_oo.fpa") + " --weights " +
                                testutil::quoted(path.string()));
    CHECK(result.exit_code == 0);
    // 24 items, all weight 1 -> cfp 24 -> 24 x 1.18 = 28.32
    CHECK(contains(result.out, "FP = 28.32"));
    std::filesystem::remove(path);
}

TEST_CASE("matrix overrides change measured classifications") {
    const std::string sheet_text =
        "[items]\nitem = ILF det=5,refs=1 store\n[rcaf]\ntotal = 0\n";
    const auto sheet_path = testutil::write_temp_file("measured-sheet", sheet_text);

    // defaults: det 5, refs 1 -> low -> weight 7 -> FP 4.55
    const auto base = run_cli("compute " + testutil::quoted(sheet_path.string()));
    CHECK(base.exit_code == 0);
    CHECK(contains(base.out, "FP = 4.55"));

    std::string matrix_text;
    for (const char* cls : {"ei", "eo", "eq", "ilf", "eif"}) {
        matrix_text += std::string("[matrix.") + cls + "]\n";
        matrix_text += "det_breaks = 1 2\nref_breaks = 0 1\ngrid = h h h / h h h / h h h\n";
    }
    const auto matrix_path = testutil::write_temp_file("aggressive-matrix", matrix_text);
    const auto overridden = run_cli("compute " + testutil::quoted(sheet_path.string()) +
                                    " --matrix " + testutil::quoted(matrix_path.string()));
    CHECK(overridden.exit_code == 0);
    // det 5 > 2 -> high band -> weight 15 -> FP 9.75
    CHECK(contains(overridden.out, "FP = 9.75"));

    std::filesystem::remove(sheet_path);
    std::filesystem::remove(matrix_path);
}

TEST_CASE("unreadable override files exit 3") {
    const auto result = run_cli("compute " + fixture("academic_oo.fpa") + " --weights " +
                                fixture("no-such-weights.txt"));
    CHECK(result.exit_code == 3);
    CHECK(result.out.empty());
}

TEST_CASE("repeated runs are byte-identical") {
    const std::string cmd = "compute " + fixture("academic_oo.fpa") + " --format json";
    const auto first = run_cli(cmd);
    const auto second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
}
