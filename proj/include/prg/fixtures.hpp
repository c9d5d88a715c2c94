#ifndef PRG_FIXTURES_HPP
#define PRG_FIXTURES_HPP

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "prg/pauli.hpp"

namespace prg {
namespace fixtures {

// Multiplication tables of the operator sets, one transcription, stored as
// data so regeneration checks are genuine diffs. Layout mirrors the printed
// tables: header row of column labels, then one row per operator.

inline constexpr const char* kTable1 = R"(* 0 1 2 3 6 14 9 12
0 0 1 2 3 6 14 9 12
1 1 0 3 2 -i14 i6 -i12 i9
2 2 3 0 1 i9 i12 -i6 -i14
3 3 2 1 0 12 -9 -14 6
6 6 i14 -i9 12 0 -i1 i2 3
14 14 -i6 -i12 -9 i1 0 -3 i2
9 9 i12 i6 -14 -i2 -3 0 -i1
12 12 -i9 i14 6 3 -i2 i1 0
)";

inline constexpr const char* kTable2 = R"(* 4 7 11 13 5 10 15 8
4 0 1 i2 i3 6 14 -i9 -i12
7 1 0 i3 i2 -i14 i6 -12 9
11 -i2 -i3 0 1 9 12 i6 i14
13 -i3 -i2 1 0 -i12 i9 14 -6
5 6 i14 9 i12 0 -i1 2 -i3
10 14 -i6 12 -i9 i1 0 i3 2
15 i9 -12 -i6 14 2 -i3 0 -i1
8 i12 9 -i14 -6 i3 2 i1 0
)";

inline constexpr const char* kTable3 = R"(* 0 1 2 3 6 14 9 12
4 4 7 -i11 -i13 5 10 i15 i8
7 7 4 -i13 -i11 -i10 i5 8 -15
11 11 13 i4 i7 -i15 -i8 5 10
13 13 11 i7 i4 -8 15 -i10 i5
5 5 i10 15 i8 4 -i7 11 -i13
10 10 -i5 8 -i15 i7 4 i13 11
15 15 i8 5 i10 i11 13 -i4 -7
8 8 -i15 10 -i5 -13 i11 7 -i4
)";

// Distant/neighbour tables over the 8-element direct-product ring. "+" =
// distant, "-" = neighbour; "!" marks cells where the operator commutation
// picture disagrees with the geometry.

inline constexpr const char* kTable6 = R"(. (1,0) (0,1) (1,1) (c,r) (b,y) (y,b) (r,c)
(1,0) - + + - - - -
(0,1) + - + - - - -
(1,1) + + - + + + +
(c,r) - - + - - - +
(b,y) - - + - - + -
(y,b) - - + - + - -
(r,c) - - + + - - -
)";

inline constexpr const char* kTable7 = R"(. (1,0) (0,1) (1,1) (y,1) (b,1) (c,1) (r,1)
(1,0) - + + + + + +
(0,1) + - + - - - -
(1,1) + + - - - - -
(y,1) + - - - + - -
(b,1) + - - + - - -
(c,1) + - - - - - +
(r,1) + - - - - + -
)";

inline constexpr const char* kTable8 = R"(. (y,1) (b,1) (r,1) (c,1) (1,c) (1,b) (1,r) (1,y)
(y,1) - + - - -! + - -
(b,1) + - - - - - + +
(r,1) - - - + + + - -
(c,1) - - + - - - + -!
(1,c) -! - + - - - + -
(1,b) + - + - - - - +
(1,r) - + - + + - - -
(1,y) - + - -! - + - -
)";

inline constexpr const char* kTable9 = R"(. (1,0) (0,1) (1,1) (c,r) (b,y) (y,b) (r,c)
(y,1) + - - + + - -
(b,1) + - - - - + -!
(r,1) + - - +! - -! -!
(c,1) + - - -! -! +! +!
(1,c) - + - + +! -! -
(1,b) - + - - + - -!
(1,r) - + - - -! - +
(1,y) - + - -! - + +!
)";

/// Raw fixture text for a table id, honoring the PRG_FIXTURES directory
/// override (file "table<N>.txt") and falling back to the embedded copy.
inline std::string table_text(int which) {
    static const std::map<int, const char*> embedded = {
        {1, kTable1}, {2, kTable2}, {3, kTable3}, {6, kTable6},
        {7, kTable7}, {8, kTable8}, {9, kTable9}};
    const auto it = embedded.find(which);
    if (it == embedded.end()) throw std::invalid_argument("no fixture for that table id");
    if (const char* dir = std::getenv("PRG_FIXTURES")) {
        const std::string path = std::string(dir) + "/table" + std::to_string(which) + ".txt";
        std::ifstream in(path);
        if (in) {
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }
    return it->second;
}

struct MulTableFixture {
    std::vector<int> row_labels;
    std::vector<int> col_labels;
    std::vector<std::vector<PhasedOp>> cells;
};

inline PhasedOp parse_phased(const std::string& tok) {
    Phase phase = kPlus;
    std::size_t pos = 0;
    if (pos < tok.size() && tok[pos] == '-') {
        phase = kMinus;
        ++pos;
    }
    if (pos < tok.size() && tok[pos] == 'i') {
        phase = phase * kI;
        ++pos;
    }
    if (pos == tok.size()) throw std::invalid_argument("malformed phased operator: " + tok);
    return {phase, std::stoi(tok.substr(pos))};
}

inline MulTableFixture parse_mul_table(const std::string& text) {
    MulTableFixture f;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty fixture");
    std::istringstream header(line);
    std::string tok;
    header >> tok;  // corner marker
    while (header >> tok) f.col_labels.push_back(std::stoi(tok));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        row >> tok;
        f.row_labels.push_back(std::stoi(tok));
        std::vector<PhasedOp> cells;
        while (row >> tok) cells.push_back(parse_phased(tok));
        if (cells.size() != f.col_labels.size())
            throw std::invalid_argument("ragged fixture row");
        f.cells.push_back(std::move(cells));
    }
    return f;
}

struct SignTableFixture {
    std::vector<std::string> row_points;
    std::vector<std::string> col_points;
    std::vector<std::vector<bool>> distant;               // the printed +/- signs
    std::vector<std::pair<std::size_t, std::size_t>> marks;  // "!" cells
};

inline SignTableFixture parse_sign_table(const std::string& text) {
    SignTableFixture f;
    std::istringstream in(text);
    std::string line, tok;
    if (!std::getline(in, line)) throw std::invalid_argument("empty fixture");
    std::istringstream header(line);
    header >> tok;  // corner marker
    while (header >> tok) f.col_points.push_back(tok);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        row >> tok;
        f.row_points.push_back(tok);
        std::vector<bool> cells;
        while (row >> tok) {
            if (tok != "+" && tok != "-" && tok != "+!" && tok != "-!")
                throw std::invalid_argument("malformed sign cell: " + tok);
            if (tok.size() == 2)
                f.marks.push_back({f.row_points.size() - 1, cells.size()});
            cells.push_back(tok[0] == '+');
        }
        if (cells.size() != f.col_points.size())
            throw std::invalid_argument("ragged fixture row");
        f.distant.push_back(std::move(cells));
    }
    return f;
}

inline MulTableFixture mul_table(int which) {
    if (which < 1 || which > 3) throw std::invalid_argument("mul_table expects 1..3");
    return parse_mul_table(table_text(which));
}

inline SignTableFixture sign_table(int which) {
    if (which < 6 || which > 9) throw std::invalid_argument("sign_table expects 6..9");
    return parse_sign_table(table_text(which));
}

/// The printed joint eigenbases: six attached to the rows/columns of the
/// first magic square plus the i-Bell basis, with eigenvalue signatures.
struct EigenBasisFixture {
    std::array<int, 3> triple;
    std::array<std::pair<StateVector, SignSignature>, 4> entries;
};

inline const std::vector<EigenBasisFixture>& eigenbases() {
    using V = StateVector;
    using S = SignSignature;
    const GaussianInt o{0}, l{1}, n{-1}, i{0, 1}, ni{0, -1};
    static const std::vector<EigenBasisFixture> data = {
        {{1, 2, 3},
         {{{V{{l, o, o, o}}, S{{+1, +1, +1}}},
           {V{{o, l, o, o}}, S{{-1, +1, -1}}},
           {V{{o, o, l, o}}, S{{+1, -1, -1}}},
           {V{{o, o, o, l}}, S{{-1, -1, +1}}}}}},
        {{4, 10, 14},
         {{{V{{l, l, l, l}}, S{{+1, +1, +1}}},
           {V{{l, n, l, n}}, S{{+1, -1, -1}}},
           {V{{l, l, n, n}}, S{{-1, +1, -1}}},
           {V{{l, n, n, l}}, S{{-1, -1, +1}}}}}},
        {{7, 8, 9},
         {{{V{{l, l, l, n}}, S{{+1, +1, +1}}},
           {V{{l, n, l, l}}, S{{+1, -1, -1}}},
           {V{{l, l, n, l}}, S{{-1, +1, -1}}},
           {V{{l, n, n, n}}, S{{-1, -1, +1}}}}}},
        {{1, 4, 7},
         {{{V{{l, o, l, o}}, S{{+1, +1, +1}}},
           {V{{l, o, n, o}}, S{{+1, -1, -1}}},
           {V{{o, l, o, l}}, S{{-1, +1, -1}}},
           {V{{o, l, o, n}}, S{{-1, -1, +1}}}}}},
        {{2, 10, 8},
         {{{V{{l, l, o, o}}, S{{+1, +1, +1}}},
           {V{{l, n, o, o}}, S{{+1, -1, -1}}},
           {V{{o, o, l, l}}, S{{-1, +1, -1}}},
           {V{{o, o, l, n}}, S{{-1, -1, +1}}}}}},
        {{3, 14, 9},
         {{{V{{l, o, o, l}}, S{{+1, +1, -1}}},
           {V{{l, o, o, n}}, S{{+1, -1, +1}}},
           {V{{o, l, l, o}}, S{{-1, +1, +1}}},
           {V{{o, n, l, o}}, S{{-1, -1, -1}}}}}},
        {{3, 6, 12},
         {{{V{{l, o, o, i}}, S{{+1, +1, +1}}},
           {V{{l, o, o, ni}}, S{{+1, -1, -1}}},
           {V{{o, l, ni, o}}, S{{-1, +1, -1}}},
           {V{{o, l, i, o}}, S{{-1, -1, +1}}}}}},
    };
    return data;
}

}  // namespace fixtures

/// Cell-by-cell diff of the symbolic multiplication against a table fixture.
struct TableDiff {
    int table = 0;
    std::vector<std::string> discrepancies;  // human-readable, empty when clean
};

inline TableDiff verify_table(int which) {
    const auto f = fixtures::mul_table(which);
    TableDiff diff{which, {}};
    for (std::size_t i = 0; i < f.row_labels.size(); ++i)
        for (std::size_t j = 0; j < f.col_labels.size(); ++j) {
            const PhasedOp got = phased_product(f.row_labels[i], f.col_labels[j]);
            if (!(got == f.cells[i][j]))
                diff.discrepancies.push_back(
                    std::to_string(f.row_labels[i]) + "*" + std::to_string(f.col_labels[j]) +
                    ": fixture " + f.cells[i][j].str() + ", computed " + got.str());
        }
    return diff;
}

inline std::vector<TableDiff> verify_tables() {
    return {verify_table(1), verify_table(2), verify_table(3)};
}

}  // namespace prg

#endif
