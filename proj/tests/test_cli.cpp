// End-to-end checks of the zz binary: exit codes, output files, and the
// stability of the documented surface.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "zigzag/decompose.hpp"
#include "zigzag/io.hpp"

using namespace zigzag;
namespace fs = std::filesystem;

#ifndef ZZ_CLI_PATH
#define ZZ_CLI_PATH "build/tools/zz"
#endif
#ifndef ZZ_FIXTURE_DIR
#define ZZ_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

std::string fixture(const std::string& name) {
    return std::string(ZZ_FIXTURE_DIR) + "/" + name;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "zz_cli_tests";
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    std::string cmd = std::string(ZZ_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

int run_capture(const std::string& args, const fs::path& out) {
    std::string cmd =
        std::string(ZZ_CLI_PATH) + " " + args + " > " + out.string() + " 2> /dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

long count_occurrences(const std::string& text, const std::string& needle) {
    long n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("decompose subcommand reproduces the library output byte for byte") {
    fs::path out = scratch_dir() / "projection_barcode.json";
    REQUIRE(run("decompose " + fixture("projection_module.json") + " -o " + out.string()) == 0);
    ZigzagModule m = module_from_json(read_file(fixture("projection_module.json")));
    CHECK(read_file(out.string()) == barcode_to_json(barcode_of(m)));
}

TEST_CASE("decompose --trace writes the table file next to the barcode") {
    fs::path out = scratch_dir() / "traced.json";
    REQUIRE(run("decompose " + fixture("projection_module.json") + " --trace -o " +
                out.string()) == 0);
    CHECK(fs::exists(out));
    CHECK(fs::exists(out.string() + ".trace.json"));
    CHECK(count_occurrences(read_file(out.string() + ".trace.json"), "\"bt\"") == 1);
}

TEST_CASE("input errors exit with code 1") {
    CHECK(run("decompose /nonexistent/file.json") == 1);
    fs::path bad = scratch_dir() / "bad.json";
    write_file(bad.string(), "{\"field\": 4}");
    CHECK(run("decompose " + bad.string()) == 1);
    write_file(bad.string(), "not json");
    CHECK(run("decompose " + bad.string()) == 1);
    CHECK(run("localize " + fixture("projection_module.json") + " 9") == 1);
    CHECK(run("bogus-subcommand") == 1);
}

TEST_CASE("empty modules decompose to empty barcodes") {
    fs::path mod = scratch_dir() / "empty.json";
    ZigzagModule zero{FieldSpec(2), ZigzagType::parse("fg"), {0, 0, 0},
                      {Matrix(FieldSpec(2), 0, 0), Matrix(FieldSpec(2), 0, 0)}};
    write_file(mod.string(), module_to_json(zero));
    fs::path out = scratch_dir() / "empty_barcode.json";
    REQUIRE(run("decompose " + mod.string() + " -o " + out.string()) == 0);
    Barcode bc = barcode_from_json(read_file(out.string()));
    CHECK(bc.entries.empty());
    CHECK(bc.grid.size() == 3);
}

TEST_CASE("localize agrees with decompose through --check") {
    fs::path out = scratch_dir() / "loc.txt";
    REQUIRE(run_capture("localize " + fixture("projection_module.json") + " 2 --check", out) == 0);
    std::string text = read_file(out.string());
    CHECK(count_occurrences(text, "[1,2] x1") == 1);
    CHECK(count_occurrences(text, "[2,3] x1") == 1);
}

TEST_CASE("plant then decompose recovers the emitted truth file") {
    fs::path mod = scratch_dir() / "planted.json";
    fs::path truth = scratch_dir() / "truth.json";
    fs::path dec = scratch_dir() / "dec.json";
    REQUIRE(run("plant --seed 20240229 --type gfgfg --max-intervals 6 --field 5 -o " +
                mod.string() + " --truth " + truth.string()) == 0);
    REQUIRE(run_capture("decompose " + mod.string(), dec) == 0);
    CHECK(read_file(dec.string()) == read_file(truth.string()));
}

TEST_CASE("homology-zigzag emits half-integer labels and passes verification") {
    fs::path out = scratch_dir() / "arcs.json";
    REQUIRE(run("homology-zigzag " + fixture("two_arc_circle.json") +
                " --verify-strong-diamond -o " + out.string()) == 0);
    Barcode bc = barcode_from_json(read_file(out.string()));
    CHECK(bc.multiplicity({1, 3}, 0) == 1);  // one component across the whole range
    CHECK(bc.multiplicity({2, 2}, 1) == 1);  // the circle at slot 1.5
    REQUIRE(bc.grid.size() == 3);
    CHECK(bc.grid[1].label == "1.5");

    // same complexes, intersection mode: the [1.5,1.5] class drops to H0
    fs::path out2 = scratch_dir() / "arcs_inter.json";
    REQUIRE(run("homology-zigzag " + fixture("two_arc_circle.json") +
                " --mode intersection -o " + out2.string()) == 0);
    Barcode bi = barcode_from_json(read_file(out2.string()));
    CHECK(bi.multiplicity({2, 2}, 0) == 1);
    CHECK(bi.multiplicity({1, 3}, 0) == 1);
}

TEST_CASE("homology-zigzag --dims override narrows the output") {
    fs::path out = scratch_dir() / "h1_only.json";
    REQUIRE(run("homology-zigzag " + fixture("two_arc_circle.json") + " --dims 1..1 -o " +
                out.string()) == 0);
    Barcode bc = barcode_from_json(read_file(out.string()));
    for (const auto& e : bc.entries) CHECK(e.dim == 1);
    CHECK(bc.multiplicity({2, 2}, 1) == 1);
    CHECK(run("homology-zigzag " + fixture("two_arc_circle.json") + " --dims 2..1") == 1);
}

TEST_CASE("single-complex sequences work without the verifier") {
    fs::path file = scratch_dir() / "single.json";
    ComplexSequenceFile f;
    f.field = FieldSpec(2);
    f.vertices = 3;
    f.mode = ZigzagMode::Union;
    f.ell_min = 0;
    f.ell_max = 1;
    f.complexes.push_back(SimplicialComplex::build(3, {{0, 1}, {1, 2}, {0, 2}}));
    write_file(file.string(), complexes_to_json(f));
    fs::path out = scratch_dir() / "single_out.json";
    REQUIRE(run("homology-zigzag " + file.string() + " -o " + out.string()) == 0);
    Barcode bc = barcode_from_json(read_file(out.string()));
    CHECK(bc.multiplicity({1, 1}, 0) == 1);
    CHECK(bc.multiplicity({1, 1}, 1) == 1);
    // the strong-diamond verifier needs a pair
    CHECK(run("homology-zigzag " + file.string() + " --verify-strong-diamond") == 1);
}

TEST_CASE("plot renders one bar per interval copy") {
    fs::path svg = scratch_dir() / "fig.svg";
    REQUIRE(run("plot " + fixture("sample_barcode.json") + " -o " + svg.string()) == 0);
    std::string text = read_file(svg.string());
    CHECK(count_occurrences(text, "class=\"bar\"") == 5);

    fs::path pd = scratch_dir() / "fig_pd.svg";
    REQUIRE(run("plot " + fixture("sample_barcode.json") + " --style diagram -o " +
                pd.string()) == 0);
    CHECK(count_occurrences(read_file(pd.string()), "class=\"pt\"") == 4);
}

TEST_CASE("decompose --format svg renders directly") {
    fs::path svg = scratch_dir() / "chain.svg";
    REQUIRE(run("decompose " + fixture("projection_chain5.json") + " --format svg -o " +
                svg.string()) == 0);
    CHECK(count_occurrences(read_file(svg.string()), "class=\"bar\"") == 3);
}

TEST_CASE("diamond-verify runs generated and file-based instances") {
    CHECK(run("diamond-verify --seed 11 -k 2 --length 4 --field 2") == 0);
    CHECK(run("diamond-verify --seed 12 -k 3 --length 6 --field 5") == 0);
    // missing inputs
    CHECK(run("diamond-verify -k 2") == 1);
}
