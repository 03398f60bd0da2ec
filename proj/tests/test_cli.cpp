/**
 * @file test_cli.cpp
 * @brief End-to-end tests of the command-line front door: exit codes,
 *        report contents, sector-file emission, and byte determinism.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "floerglue/homalg/chainmap.hpp"
#include "floerglue/homalg/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "floerglue_test_cli";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(bool(in));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary);
    REQUIRE(bool(out));
    out << bytes;
}

struct RunResult {
    int code = -1;
    std::string out;
};

/** Run the CLI with the given arguments; capture combined stdout+stderr. */
RunResult run(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path log = work_dir() / ("run" + std::to_string(counter++) +
                                       ".log");
    const std::string cmd = env_prefix + std::string(FLOERGLUE_CLI_PATH) +
                            " " + args + " > \"" + log.string() + "\" 2>&1";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = read_file(log);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

const std::string kData = FLOERGLUE_TEST_DATA;
const std::string kGolden = FLOERGLUE_GOLDEN_SRC;

}  // namespace

TEST_CASE("cli: invariants reports and exit codes") {
    auto r = run("invariants 3_1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "alexander: t - 1 + t^-1"));
    CHECK(contains(r.out, "signature: -2"));
    CHECK(contains(r.out, "genus: 1"));
    CHECK(contains(r.out, "spinc2=2 maslov=0 rank=1"));

    r = run("invariants unknot");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "alexander: 1"));
    CHECK(contains(r.out, "genus: 0"));

    r = run("invariants nope");
    CHECK(r.code == 2);
    CHECK(contains(r.out, "unknown knot"));

    r = run("invariants --pd \"" + kData + "/trefoil.pd\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "knot: trefoil"));
    CHECK(contains(r.out, "signature: -2"));

    r = run("invariants --pd \"" + kData + "/malformed.pd\"");
    CHECK(r.code == 2);
    CHECK(contains(r.out, "PD syntax"));

    r = run("invariants 3_1 --format json");
    CHECK(r.code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j["knot"]["name"] == "3_1");
    CHECK(j["knot"]["signature"] == -2);
    CHECK(j["hfk"].size() == 3);

    r = run("invariants 4_1 --format csv");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "knot,theory,spinc2,maslov,rank"));
    CHECK(contains(r.out, "4_1,cfk,0,0,3"));
    CHECK(contains(r.out, "4_1,cfl,1,"));
}

TEST_CASE("cli: compute writes sector flag files and elides empty sectors") {
    const fs::path a = work_dir() / "sectors_a";
    const fs::path b = work_dir() / "sectors_b";
    auto r = run("compute --theory cfl --knot 3_1 --out \"" + a.string() +
                 "\"");
    CHECK(r.code == 0);
    CHECK(fs::exists(a / "3_1_cfl_s-1.json"));
    CHECK(fs::exists(a / "3_1_cfl_s1.json"));
    CHECK(!fs::exists(a / "3_1_cfl_s-3.json"));

    // emitted flags load back and satisfy the exact sequence
    const auto fl = floerglue::homalg::flag_from_json(
        ordered_json::parse(read_file(a / "3_1_cfl_s1.json")));
    const auto [f, g] = floerglue::homalg::ses_maps(fl);
    CHECK(floerglue::homalg::verify_ses(f, g).pass());

    // byte determinism across runs
    r = run("compute --theory cfl --knot 3_1 --out \"" + b.string() + "\"");
    CHECK(r.code == 0);
    CHECK(read_file(a / "3_1_cfl_s1.json") ==
          read_file(b / "3_1_cfl_s1.json"));
    CHECK(read_file(a / "3_1_cfl_s-1.json") ==
          read_file(b / "3_1_cfl_s-1.json"));

    // explicit sector selection overrides elision
    r = run("compute --theory cfk --knot 4_1 --spinc 0 --out \"" +
            a.string() + "\"");
    CHECK(r.code == 0);
    CHECK(fs::exists(a / "4_1_cfk_s0.json"));

    r = run("compute --theory cfk --knot not_a_knot");
    CHECK(r.code == 2);
}

TEST_CASE("cli: compute emits glued complexes with provenance") {
    const fs::path f = work_dir() / "parallel.json";
    auto r = run("compute --glue parallel --knots 3_1,3_1 --out \"" +
                 f.string() + "\"");
    CHECK(r.code == 0);
    const auto j = ordered_json::parse(read_file(f));
    CHECK(j["op"] == "parallel");
    CHECK(j["ambient_dim"] == 16);
    CHECK(j["killed"] == 9);
    CHECK(j["identified"] == 3);
    CHECK(j["complex"]["generators"].size() == 4);

    r = run("compute --glue connsum --knots 3_1,4_1 --spinc 1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"op\": \"connsum\""));

    r = run("compute --glue perp --knots 3_1,3_1 --spinc 1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"op\": \"perp\""));
    CHECK(contains(r.out, "companion_cfl"));

    r = run("compute --glue parallel --knots 3_1");
    CHECK(r.code == 2);
    r = run("compute --glue parallel --knots 3_1,nope");
    CHECK(r.code == 2);
    // even label rejected for the telescope
    r = run("compute --glue connsum --knots 3_1,4_1 --spinc 2");
    CHECK(r.code == 2);
}

TEST_CASE("cli: verify suites pass on the corpus") {
    auto r = run("verify --suite euler");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "14 checks, 0 failures"));

    r = run("verify --suite genus --knot 4_1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "ok   genus 4_1 cfl-minus"));
    CHECK(contains(r.out, "ok   genus 4_1 cfk-plus"));
    CHECK(contains(r.out, "6 checks, 0 failures"));

    r = run("verify --suite ses --knot 3_1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "0 failures"));

    r = run("verify --suite symmetry --knot 6_2");
    CHECK(r.code == 0);

    r = run("verify --suite connsum");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "ok   connsum 3_1#T(2,5)"));
}

TEST_CASE("cli: verify reports named failures on a corrupted flag") {
    // intact flag from the golden set passes
    auto r = run("verify --suite ses --flag \"" + kGolden +
                 "/cfl_3_1_s1.json\"");
    CHECK(r.code == 0);

    // zero the connecting map: the sequence is no longer exact
    auto j = ordered_json::parse(read_file(fs::path(kGolden) /
                                           "cfl_3_1_s1.json"));
    j["connecting"] = ordered_json::array();
    const fs::path bad = work_dir() / "corrupted_flag.json";
    write_file(bad, j.dump(2) + "\n");
    r = run("verify --suite ses --flag \"" + bad.string() + "\"");
    CHECK(r.code == 4);
    CHECK(contains(r.out, "exactness: im f ≠ ker g"));

    r = run("verify --suite ses --flag /no/such/file.json");
    CHECK(r.code == 2);
}

TEST_CASE("cli: golden comparison and regeneration") {
    auto r = run("verify --suite golden --golden-dir \"" + kGolden + "\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "5 checks, 0 failures"));

    r = run("verify --suite golden",
            "FLOERGLUE_GOLDEN_DIR=\"" + kGolden + "\" ");
    CHECK(r.code == 0);

    r = run("verify --suite golden", "env -u FLOERGLUE_GOLDEN_DIR ");
    CHECK(r.code == 2);
    CHECK(contains(r.out, "no golden directory"));

    const fs::path empty = work_dir() / "no_goldens";
    fs::create_directories(empty);
    r = run("verify --suite golden --golden-dir \"" + empty.string() + "\"");
    CHECK(r.code == 4);
    CHECK(contains(r.out, "missing"));

    // regeneration reproduces the committed bytes exactly
    const fs::path regen = work_dir() / "regen";
    r = run("verify --suite golden --regen --golden-dir \"" + regen.string() +
            "\"");
    CHECK(r.code == 0);
    for (const std::string name :
         {"invariants_3_1.json", "cfl_3_1_s1.json", "cfk_4_1_s0.json",
          "parallel_3_1_3_1.json", "connsum_3_1_4_1_s1.json"}) {
        CAPTURE(name);
        CHECK(read_file(regen / name) == read_file(fs::path(kGolden) / name));
    }
}

TEST_CASE("cli: identical configs give byte-identical outputs") {
    const auto a = run("invariants \"T(2,11)\" --format json");
    const auto b = run("invariants \"T(2,11)\" --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const auto c = run("compute --glue connsum --knots 3_1,3_1 --spinc -1");
    const auto d = run("compute --glue connsum --knots 3_1,3_1 --spinc -1");
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}
