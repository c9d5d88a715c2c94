#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "prg/finite_ring.hpp"
#include "prg/fixtures.hpp"

using namespace prg;

TEST_CASE("phased operator tokens parse", "[fixtures]") {
    CHECK(fixtures::parse_phased("12") == PhasedOp{kPlus, 12});
    CHECK(fixtures::parse_phased("-3") == PhasedOp{kMinus, 3});
    CHECK(fixtures::parse_phased("i9") == PhasedOp{kI, 9});
    CHECK(fixtures::parse_phased("-i14") == PhasedOp{kMinusI, 14});
    CHECK_THROWS_AS(fixtures::parse_phased("-i"), std::invalid_argument);
}

TEST_CASE("stored multiplication tables have the printed shape", "[fixtures]") {
    const auto t1 = fixtures::mul_table(1);
    CHECK(t1.row_labels == std::vector<int>{0, 1, 2, 3, 6, 14, 9, 12});
    CHECK(t1.col_labels == t1.row_labels);
    CHECK(t1.cells.size() == 8);

    const auto t2 = fixtures::mul_table(2);
    CHECK(t2.row_labels == std::vector<int>{4, 7, 11, 13, 5, 10, 15, 8});
    // the 8-label set squares into the other set: diagonal is the identity
    for (std::size_t i = 0; i < 8; ++i) CHECK(t2.cells[i][i] == PhasedOp{kPlus, 0});

    const auto t3 = fixtures::mul_table(3);
    CHECK(t3.row_labels == t2.row_labels);
    CHECK(t3.col_labels == t1.col_labels);

    CHECK_THROWS_AS(fixtures::mul_table(4), std::invalid_argument);
    CHECK_THROWS_AS(fixtures::table_text(5), std::invalid_argument);
}

TEST_CASE("every stored product cell regenerates symbolically", "[fixtures]") {
    for (const TableDiff& diff : verify_tables()) {
        INFO("table " << diff.table);
        CHECK(diff.discrepancies.empty());
    }
}

TEST_CASE("stored sign tables carry the marked cells", "[fixtures]") {
    const auto t6 = fixtures::sign_table(6);
    CHECK(t6.row_points.size() == 7);
    CHECK(t6.marks.empty());
    CHECK(t6.distant[0][1]);        // (1,0) distant from (0,1)
    CHECK_FALSE(t6.distant[0][0]);  // diagonal is neighbour

    CHECK(fixtures::sign_table(7).marks.empty());
    CHECK(fixtures::sign_table(8).marks.size() == 4);
    const auto t9 = fixtures::sign_table(9);
    CHECK(t9.row_points.size() == 8);
    CHECK(t9.col_points.size() == 7);
    CHECK(t9.marks.size() == 14);

    CHECK_THROWS_AS(fixtures::sign_table(5), std::invalid_argument);
    CHECK_THROWS_AS(fixtures::parse_sign_table(". a b\np + *\n"), std::invalid_argument);
}

TEST_CASE("fixture directory override is honored", "[fixtures]") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "prg_fixture_override";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "table6.txt");
        out << ". (1,0)\n(1,0) -\n";
    }
    REQUIRE(setenv("PRG_FIXTURES", dir.c_str(), 1) == 0);
    const auto overridden = fixtures::sign_table(6);
    CHECK(overridden.row_points == std::vector<std::string>{"(1,0)"});
    // tables without an override file fall back to the embedded copy
    CHECK(fixtures::sign_table(7).row_points.size() == 7);
    REQUIRE(unsetenv("PRG_FIXTURES") == 0);
    CHECK(fixtures::sign_table(6).row_points.size() == 7);
    fs::remove_all(dir);
}

TEST_CASE("the in-repo fixture files equal the embedded copies", "[fixtures]") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(__FILE__).parent_path().parent_path() / "fixtures";
    for (int which : {1, 2, 3, 6, 7, 8, 9}) {
        const fs::path file = dir / ("table" + std::to_string(which) + ".txt");
        REQUIRE(fs::exists(file));
        std::ifstream in(file);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        CHECK(text == fixtures::table_text(which));
    }
}

TEST_CASE("the ring table fixture files regenerate from the ring models", "[fixtures]") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(__FILE__).parent_path().parent_path() / "fixtures";
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        return std::string((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    };
    // the 4-element product ring side by side with the field of the same size
    CHECK(slurp(dir / "table4.txt") ==
          ring_to_text(direct_product_ring(2)) + "\n" + ring_to_text(quotient_ring_gf2(0b111)));
    CHECK(slurp(dir / "table5.txt") == ring_to_text(direct_product_ring(3)));
}

TEST_CASE("seven eigenbasis fixtures, four orthogonal vectors each", "[fixtures]") {
    const auto& bases = fixtures::eigenbases();
    REQUIRE(bases.size() == 7);
    for (const auto& fix : bases)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                CHECK(inner(fix.entries[i].first, fix.entries[j].first).is_zero());
}
