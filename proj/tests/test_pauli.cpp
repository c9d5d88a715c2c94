#include <algorithm>
#include <map>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "prg/pauli.hpp"

using namespace prg;

TEST_CASE("phase arithmetic", "[pauli]") {
    CHECK(kI * kI == kMinus);
    CHECK(kMinusI * kI == kPlus);
    CHECK(kMinus * kMinus == kPlus);
    CHECK(kPlus.str() == "");
    CHECK(kI.str() == "i");
    CHECK(kMinus.str() == "-");
    CHECK(kMinusI.str() == "-i");
}

TEST_CASE("single products of labelled operators", "[pauli]") {
    CHECK(phased_product(0, 7) == PhasedOp{kPlus, 7});     // identity absorbs
    CHECK(phased_product(1, 2) == PhasedOp{kPlus, 3});     // commuting factors
    CHECK(phased_product(1, 1) == PhasedOp{kPlus, 0});     // involution
    CHECK(phased_product(6, 14) == PhasedOp{kMinusI, 1});  // cyclic rule in play
    CHECK(phased_product(14, 6) == PhasedOp{kI, 1});
    CHECK(phased_product(4, 11) == PhasedOp{kI, 2});
    CHECK_THROWS_AS(phased_product(16, 0), std::invalid_argument);
    CHECK_THROWS_AS(phased_product(0, -1), std::invalid_argument);
}

TEST_CASE("every operator pair either commutes or anticommutes", "[pauli]") {
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            const PhasedOp ab = phased_product(a, b), ba = phased_product(b, a);
            CHECK(ab.label == ba.label);
            const bool commuting = ab.phase == ba.phase;
            const bool anticommuting = ab.phase * kMinus == ba.phase;
            CHECK((commuting || anticommuting));
            CHECK(commutes(a, b) == commuting);
        }
}

TEST_CASE("matrix oracle confirms the symbolic product", "[pauli][oracle]") {
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            const PhasedOp sym = phased_product(a, b);
            const PhasedOp mat = matrix_oracle_product(a, b);
            CHECK(sym == mat);
        }
}

TEST_CASE("operator matrices are involutions with zero trace", "[pauli]") {
    for (int l = 1; l < 16; ++l) {
        const ExactMatrix m = op_matrix(l);
        CHECK(matmul(m, m) == ExactMatrix::identity(4));
        CHECK(m.trace().is_zero());
    }
    CHECK(op_matrix(0) == ExactMatrix::identity(4));
}

TEST_CASE("the two-set partition is closed as claimed", "[pauli]") {
    const OperatorPartition p = OperatorPartition::standard();
    CHECK(p.a.size() == 8);
    CHECK(p.b.size() == 8);
    CHECK(closure_check(p));
    // c and e split a
    std::set<int> joined = p.c;
    joined.insert(p.e.begin(), p.e.end());
    CHECK(joined == p.a);
}

TEST_CASE("magic squares have the +,+,- column pattern", "[pauli]") {
    const auto reports = mermin_reports();
    REQUIRE(reports.size() == 4);
    for (const MerminReport& rep : reports) {
        CHECK(rep.lines_commute);
        CHECK(rep.row_phases == std::array<Phase, 3>{kPlus, kPlus, kPlus});
        CHECK(rep.col_phases == std::array<Phase, 3>{kPlus, kPlus, kMinus});
    }
}

TEST_CASE("each magic square uses nine distinct non-identity labels", "[pauli]") {
    for (const MerminSquare& sq : mermin_squares_data()) {
        std::set<int> labels;
        for (const auto& row : sq.grid)
            for (int l : row) {
                CHECK(l != 0);
                labels.insert(l);
            }
        CHECK(labels.size() == 9);
    }
}

TEST_CASE("a non-closing line is rejected", "[pauli]") {
    CHECK_THROWS_AS(mermin_report(MerminSquare{{{{1, 2, 4}, {4, 10, 14}, {7, 8, 9}}}}),
                    std::domain_error);
}

TEST_CASE("five row bases are mutually unbiased", "[pauli][mub]") {
    const MubReport rep = mub_partition();
    REQUIRE(rep.bases.size() == 5);
    CHECK(rep.all_pairs_unbiased);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(rep.unbiased[i][j] == (i != j));
    // rows 3 and 5 are the fully entangled ones
    const std::vector<bool> expect_entangled = {false, false, true, false, true};
    for (std::size_t i = 0; i < 5; ++i) CHECK(rep.bases[i].entangled == expect_entangled[i]);
}

TEST_CASE("line_eigenbasis validates its triple", "[pauli]") {
    CHECK_THROWS_AS(line_eigenbasis({1, 5, 6}), std::invalid_argument);   // not commuting
    CHECK_THROWS_AS(line_eigenbasis({1, 2, 14}), std::invalid_argument);  // not closed
}

TEST_CASE("kernel embeds into 3-bit vectors with XOR", "[pauli][fano]") {
    const auto emb = fano_embedding();
    REQUIRE(emb.size() == 7);
    std::map<int, int> img(emb.begin(), emb.end());
    std::set<int> values;
    for (const auto& [label, v] : img) {
        CHECK(v >= 1);
        CHECK(v <= 7);
        values.insert(v);
    }
    CHECK(values.size() == 7);
    for (const auto& [a, va] : img)
        for (const auto& [b, vb] : img) {
            if (a == b) continue;
            CHECK(img.at(phased_product(a, b).label) == (va ^ vb));
        }
}

TEST_CASE("pencil through the reference label", "[pauli][fano]") {
    const std::set<int> universe(kernel_labels().begin(), kernel_labels().end());
    const auto pencil = pencil_through(3, universe);
    REQUIRE(pencil.size() == 3);
    CHECK(pencil[0].labels == std::array<int, 3>{1, 2, 3});
    CHECK(pencil[1].labels == std::array<int, 3>{3, 6, 12});
    CHECK(pencil[2].labels == std::array<int, 3>{3, 9, 14});
    for (const auto& line : pencil) CHECK(line.commuting);
    CHECK_FALSE(line_eigenbasis(pencil[0].labels).entangled);
    CHECK(line_eigenbasis(pencil[1].labels).entangled);
    CHECK(line_eigenbasis(pencil[2].labels).entangled);

    CHECK_THROWS_AS(pencil_through(4, universe), std::invalid_argument);  // outside universe
    std::set<int> with_identity = universe;
    with_identity.insert(0);
    CHECK_THROWS_AS(pencil_through(0, with_identity), std::invalid_argument);
}

TEST_CASE("a pencil over the full label set contains broken lines", "[pauli][fano]") {
    std::set<int> all;
    for (int l = 1; l <= 15; ++l) all.insert(l);
    const auto pencil = pencil_through(1, all);
    REQUIRE(pencil.size() == 7);  // 14 remaining labels pair up into 7 lines
    CHECK(std::any_of(pencil.begin(), pencil.end(),
                      [](const PencilLine& l) { return !l.commuting; }));
}

TEST_CASE("the eight-element shell is a cube", "[pauli][cube]") {
    const CubeReport rep = cube_structure();
    CHECK(rep.three_regular);
    CHECK(rep.edges == 12);
    CHECK(rep.bipartite);
    CHECK(rep.is_cube);
    REQUIRE(rep.cube_iso.size() == 8);
    // the isomorphism actually transports edges onto cube edges
    const RelationMatrix cube = hypercube_graph(3);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(rep.graph.cells[i][j] == cube.cells[rep.cube_iso[i]][rep.cube_iso[j]]);
}

TEST_CASE("kernel-to-cube coupling", "[pauli][coupling]") {
    const CouplingReport rep = shell_coupling();
    CHECK(rep.exactly_expected_pairs);
    REQUIRE(rep.pairs.size() == 3);
    for (const CouplingPair& p : rep.pairs) {
        CHECK(p.partitions_cube);
        CHECK(p.commuters_first.size() == 4);
        CHECK(p.commuters_second.size() == 4);
        std::set<int> all(p.commuters_first.begin(), p.commuters_first.end());
        all.insert(p.commuters_second.begin(), p.commuters_second.end());
        CHECK(all == std::set<int>(cube_labels().begin(), cube_labels().end()));
    }
    CHECK(rep.six_regular);
    CHECK(rep.total_edges == 45);
}

TEST_CASE("reference label 3 commutes with no cube operator", "[pauli][coupling]") {
    for (int b : cube_labels()) CHECK_FALSE(commutes(3, b));
}
