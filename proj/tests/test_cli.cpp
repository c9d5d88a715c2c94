#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "prg/cli.hpp"

using prg::cli::run;

namespace {

struct Invocation {
    int code = 0;
    std::string out, err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Invocation r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("usage errors exit with code 2", "[cli]") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"ring", "info"}).code == 2);                      // --ring missing
    CHECK(invoke({"ring", "info", "--ring", "gf2x9"}).code == 2);   // unsupported ring
    CHECK(invoke({"line", "points", "--ring", "gf2x9"}).code == 2);
    CHECK(invoke({"match", "--table", "5"}).code == 2);             // out of range
    CHECK(invoke({"mermin", "--square", "7"}).code == 2);
    CHECK(invoke({"fano", "--pencil", "4"}).code == 2);             // not a kernel label
    const Invocation bad = invoke({"cube", "--bogus"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("Usage") != std::string::npos);
}

TEST_CASE("help is not an error", "[cli]") {
    const Invocation h = invoke({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("verify-all") != std::string::npos);
}

TEST_CASE("ring info prints tables and ideals", "[cli]") {
    const Invocation r = invoke({"ring", "info", "--ring", "gf2x3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("+\t0\t1\tb\ty\tr\tc\tg\tm") != std::string::npos);
    CHECK(r.out.find("maximal ideal: {0, y, r, g}") != std::string::npos);
    CHECK(r.out.find("jacobson radical: {0}") != std::string::npos);

    CHECK(invoke({"ring", "info", "--ring", "gf4"}).code == 0);
    CHECK(invoke({"ring", "info", "--ring", "gf8"}).code == 0);
}

TEST_CASE("line points lists canonical points with shells", "[cli]") {
    const Invocation r = invoke({"line", "points", "--ring", "gf2x2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("9 points") != std::string::npos);
    CHECK(r.out.find("(1,1)\tnucleus-like") != std::string::npos);
    CHECK(r.out.find("(x,x+1)\touter") != std::string::npos);

    const Invocation j = invoke({"line", "points", "--ring", "gf2x2", "--format", "json"});
    CHECK(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["count"] == 9);
    CHECK(parsed["points"].size() == 9);
}

TEST_CASE("line graph exports text, json and dot", "[cli]") {
    const Invocation dot = invoke({"line", "graph", "--ring", "gf2x2", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph distant {") != std::string::npos);
    // 9 vertices, 18 edges
    CHECK(std::count(dot.out.begin(), dot.out.end(), '-') >= 18);

    const Invocation j = invoke({"line", "graph", "--ring", "gf2x2", "--format", "json"});
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["rows"].size() == 9);
    CHECK(parsed["cells"][0].size() == 9);

    CHECK(invoke({"line", "graph", "--ring", "gf2x2", "--format", "png"}).code == 2);
}

TEST_CASE("pauli table prints the three printed layouts", "[cli]") {
    const Invocation a = invoke({"pauli", "table", "--set", "A"});
    CHECK(a.code == 0);
    CHECK(a.out.find("*\t0\t1\t2\t3\t6\t14\t9\t12") != std::string::npos);
    CHECK(a.out.find("-i14") != std::string::npos);

    const Invocation ab = invoke({"pauli", "table", "--set", "AB"});
    CHECK(ab.code == 0);
    CHECK(ab.out.find("4\t4\t7\t-i11\t-i13\t5\t10\ti15\ti8") != std::string::npos);

    CHECK(invoke({"pauli", "table", "--set", "C"}).code == 2);
}

TEST_CASE("pauli mubs reports unbiasedness as json", "[cli]") {
    const Invocation r = invoke({"pauli", "mubs"});
    CHECK(r.code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["all_unbiased"] == true);
    CHECK(parsed["pairs_checked"] == 10);
    CHECK(parsed["bases"].size() == 5);
    CHECK(parsed["bases"][2]["entangled"] == true);
}

TEST_CASE("mermin prints magic verdicts", "[cli]") {
    const Invocation all = invoke({"mermin"});
    CHECK(all.code == 0);
    CHECK(std::count(all.out.begin(), all.out.end(), ':') >= 4);

    const Invocation one = invoke({"mermin", "--square", "3"});
    CHECK(one.code == 0);
    CHECK(one.out.find("square 3") != std::string::npos);
    CHECK(one.out.find("column products: +1 +1 -1") != std::string::npos);
    CHECK(one.out.find("magic: yes") != std::string::npos);
    CHECK(one.out.find("square 1") == std::string::npos);
}

TEST_CASE("fano prints the pencil through a base", "[cli]") {
    const Invocation r = invoke({"fano", "--pencil", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("{1,2,3}: full, unentangled") != std::string::npos);
    CHECK(r.out.find("{3,6,12}: full, entangled") != std::string::npos);
    CHECK(r.out.find("{3,9,14}: full, entangled") != std::string::npos);
}

TEST_CASE("cube and coupling report the shell structure", "[cli]") {
    const Invocation cube = invoke({"cube"});
    CHECK(cube.code == 0);
    CHECK(cube.out.find("edges: 12") != std::string::npos);
    CHECK(cube.out.find("isomorphic to the 3-cube: yes") != std::string::npos);

    const Invocation coup = invoke({"coupling"});
    CHECK(coup.code == 0);
    CHECK(coup.out.find("pair (1,2)") != std::string::npos);
    CHECK(coup.out.find("pair (6,12)") != std::string::npos);
    CHECK(coup.out.find("pair (9,14)") != std::string::npos);
    CHECK(coup.out.find("6-regular: yes, edges: 45") != std::string::npos);
}

TEST_CASE("match reports mismatch counts as json", "[cli]") {
    const Invocation t6 = invoke({"match", "--table", "6"});
    CHECK(t6.code == 0);
    const auto p6 = nlohmann::json::parse(t6.out);
    CHECK(p6["mismatch_count"] == 0);
    CHECK(p6["geometry_consistent"] == true);

    const Invocation t9 = invoke({"match", "--table", "9"});
    CHECK(t9.code == 0);
    const auto p9 = nlohmann::json::parse(t9.out);
    CHECK(p9["mismatch_count"] == 14);
    CHECK(p9["marks_match"] == true);
    CHECK(p9["mismatch_cells"].size() == 14);
}

TEST_CASE("shells reports the embedding contradiction", "[cli][slow]") {
    const Invocation r = invoke({"shells"});
    CHECK(r.code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["cube_subset"].size() == 8);
    CHECK(parsed["kernel_subset"].size() == 7);
    CHECK(parsed["all_cross_neighbour"] == true);
    CHECK(parsed["contradiction_detected"] == true);
}

TEST_CASE("verify-all prints one verdict per criterion", "[cli][slow]") {
    const Invocation r = invoke({"verify-all"});
    CHECK(r.code == 0);
    std::size_t passes = 0, pos = 0;
    while ((pos = r.out.find("PASS", pos)) != std::string::npos) {
        ++passes;
        pos += 4;
    }
    CHECK(passes == 12);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("json output is byte-stable across runs", "[cli]") {
    const Invocation first = invoke({"match", "--table", "8"});
    const Invocation second = invoke({"match", "--table", "8"});
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
}
