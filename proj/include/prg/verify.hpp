#ifndef PRG_VERIFY_HPP
#define PRG_VERIFY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "prg/correspondence.hpp"
#include "prg/finite_ring.hpp"
#include "prg/fixtures.hpp"
#include "prg/pauli.hpp"
#include "prg/projective_line.hpp"

namespace prg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // short failure context, empty when clean
};

namespace detail {

inline CheckResult check(std::string name, bool pass, std::string fail_detail = "") {
    return {std::move(name), pass, pass ? "" : std::move(fail_detail)};
}

/// All three stored multiplication tables regenerate cell-for-cell.
inline CheckResult check_table_regeneration() {
    std::string detail;
    for (const TableDiff& d : verify_tables())
        for (const auto& line : d.discrepancies) detail += line + "; ";
    return check("product-table-regeneration", detail.empty(), detail);
}

/// The symbolic product agrees with the 4x4 matrix product on all 256 pairs.
inline CheckResult check_matrix_oracle() {
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            if (!(phased_product(a, b) == matrix_oracle_product(a, b)))
                return check("matrix-oracle-agreement", false,
                             "disagreement at " + std::to_string(a) + "*" + std::to_string(b));
    return check("matrix-oracle-agreement", true);
}

/// Five row-bases, all ten pairs unbiased, rows 3 and 5 fully entangled.
inline CheckResult check_mubs() {
    const MubReport rep = mub_partition();
    const bool entangled = rep.bases[2].entangled && rep.bases[4].entangled;
    return check("mub-partition", rep.all_pairs_unbiased && entangled,
                 rep.all_pairs_unbiased ? "entanglement pattern wrong" : "a pair is biased");
}

/// Commuting rows/columns; +identity products except the third column.
inline CheckResult check_magic_squares() {
    for (const MerminReport& rep : mermin_reports()) {
        if (!rep.lines_commute) return check("magic-squares", false, "non-commuting line");
        const bool phases_ok = rep.row_phases == std::array<Phase, 3>{kPlus, kPlus, kPlus} &&
                               rep.col_phases == std::array<Phase, 3>{kPlus, kPlus, kMinus};
        if (!phases_ok) return check("magic-squares", false, "wrong line product phase");
    }
    return check("magic-squares", true);
}

/// The computed joint eigenbases reproduce every stored basis: same rays (up
/// to a Gaussian unit and integer scale) with the same sign signatures.
inline CheckResult check_eigenbases() {
    for (const auto& fix : fixtures::eigenbases()) {
        const EigenBasis eb = line_eigenbasis(fix.triple);
        for (const auto& [vec, sig] : fix.entries) {
            const StateVector want = canonical_vector(vec);
            const bool found = std::any_of(
                eb.vectors.begin(), eb.vectors.end(),
                [&](const auto& p) { return p.first == want && p.second == sig; });
            if (!found)
                return check("joint-eigenbases", false,
                             "missing " + vec.str() + sig.str() + " for triple " +
                                 std::to_string(fix.triple[0]) + "," +
                                 std::to_string(fix.triple[1]) + "," +
                                 std::to_string(fix.triple[2]));
        }
    }
    return check("joint-eigenbases", true);
}

/// 9, 27 and 81 points over the product rings of 2, 3 and 4 factors.
inline CheckResult check_line_cardinalities() {
    for (const auto& [n, expect] : std::vector<std::pair<int, std::size_t>>{{2, 9}, {3, 27}, {4, 81}}) {
        const FiniteRing r = direct_product_ring(n);
        const std::size_t got = enumerate_points(r).points.size();
        if (got != expect)
            return check("line-cardinalities", false,
                         r.id() + ": " + std::to_string(got) + " points");
    }
    return check("line-cardinalities", true);
}

/// Neighbourhood sizes and overlaps on the nine-point line, plus the all-
/// distant 3x3 array with its distinguished triple.
inline CheckResult check_nine_point_structure() {
    const FiniteRing r = direct_product_ring(2);
    const ProjectiveLineModel model = enumerate_points(r);
    auto nbh = [&](std::size_t i) {
        std::set<std::size_t> out;
        for (std::size_t j = 0; j < 9; ++j)
            if (j != i && !model.distant[i][j]) out.insert(j);
        return out;
    };
    for (std::size_t i = 0; i < 9; ++i)
        if (nbh(i).size() != 4)
            return check("nine-point-line-structure", false, "neighbourhood size != 4");
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j) {
            if (!model.distant[i][j]) continue;
            std::vector<std::size_t> shared;
            const auto ni = nbh(i), nj = nbh(j);
            std::set_intersection(ni.begin(), ni.end(), nj.begin(), nj.end(),
                                  std::back_inserter(shared));
            if (shared.size() != 2)
                return check("nine-point-line-structure", false,
                             "distant pair shares " + std::to_string(shared.size()));
            for (std::size_t k = 0; k < 9; ++k) {
                if (k == i || k == j || !model.distant[i][k] || !model.distant[j][k]) continue;
                const auto nk = nbh(k);
                if (std::any_of(shared.begin(), shared.end(),
                                [&](std::size_t s) { return nk.count(s) > 0; }))
                    return check("nine-point-line-structure", false,
                                 "distant triple shares a neighbour");
            }
        }
    const Array3x3 arr = array_3x3(r, model);
    std::set<std::string> got;
    for (const auto& p : arr.distinguished) got.insert(point_name(r, p));
    const std::set<std::string> expect = {"(1,1)", "(x,x+1)", "(x+1,x)"};
    return check("nine-point-line-structure", got == expect, "wrong distinguished triple");
}

/// A commuting<->distant bijection between the first magic square and the
/// nine-point line that sends the odd column onto the distinguished triple.
inline CheckResult check_square_line_isomorphism() {
    const FiniteRing r = direct_product_ring(2);
    const ProjectiveLineModel model = enumerate_points(r);
    const Array3x3 arr = array_3x3(r, model);

    std::vector<int> labels;
    for (const auto& row : mermin_squares_data()[0].grid)
        for (int l : row) labels.push_back(l);
    const RelationMatrix op_rel = commutation_graph(labels);
    const RelationMatrix pt_rel = distant_graph(r, model, model.points);

    std::vector<std::size_t> odd_col;  // positions of the third-column labels
    for (int l : {3, 14, 9})
        odd_col.push_back(static_cast<std::size_t>(
            std::find(labels.begin(), labels.end(), l) - labels.begin()));
    std::vector<std::size_t> triple;
    for (const auto& p : arr.distinguished) triple.push_back(model.index_of(p));

    std::sort(triple.begin(), triple.end());
    do {
        const std::map<std::size_t, std::size_t> pins = {
            {odd_col[0], triple[0]}, {odd_col[1], triple[1]}, {odd_col[2], triple[2]}};
        if (best_bijection_search(op_rel, pt_rel, pins).mismatch_count() == 0)
            return check("square-line-isomorphism", true);
    } while (std::next_permutation(triple.begin(), triple.end()));
    return check("square-line-isomorphism", false, "no exact bijection fixing the triple");
}

/// The four distant/neighbour tables regenerate, with mismatch counts
/// 0, 0, 4 and 14 landing exactly on the marked cells.
inline CheckResult check_distant_tables() {
    const std::map<int, std::size_t> expect = {{6, 0}, {7, 0}, {8, 4}, {9, 14}};
    for (const auto& [which, count] : expect) {
        const TableReport rep = reproduce_table(which);
        if (!rep.geometry_matches_fixture)
            return check("distant-table-reproduction", false,
                         "geometry diff in table " + std::to_string(which));
        if (rep.mismatch_count() != count || !rep.marks_match)
            return check("distant-table-reproduction", false,
                         "table " + std::to_string(which) + ": " +
                             std::to_string(rep.mismatch_count()) + " mismatches");
        if (rep.swap_checked && !rep.swap_invariant)
            return check("distant-table-reproduction", false, "coordinate swap changed table 7");
    }
    return check("distant-table-reproduction", true);
}

/// Maximal-ideal structure of the 8- and 16-element product rings.
inline CheckResult check_ideal_structure() {
    const FiniteRing r3 = direct_product_ring(3);
    std::set<std::set<std::string>> got;
    for (const Ideal& m : maximal_ideals(r3)) {
        std::set<std::string> names;
        for (int e : m.elements) names.insert(r3.name(e));
        got.insert(names);
    }
    const std::set<std::set<std::string>> expect = {
        {"0", "r", "g", "y"}, {"0", "b", "g", "c"}, {"0", "b", "r", "m"}};
    if (got != expect) return check("ideal-structure", false, "wrong maximal ideals of order 8 ring");

    // pairwise intersections are the minimal ideals <g>, <r>, <b>
    const auto maxi = maximal_ideals(r3);
    std::set<std::set<std::string>> caps;
    for (std::size_t i = 0; i < maxi.size(); ++i)
        for (std::size_t j = i + 1; j < maxi.size(); ++j) {
            std::set<std::string> names;
            for (int e : intersect_ideals(r3, maxi[i], maxi[j]).elements)
                names.insert(r3.name(e));
            caps.insert(names);
        }
    const std::set<std::set<std::string>> expect_caps = {{"0", "g"}, {"0", "r"}, {"0", "b"}};
    if (caps != expect_caps)
        return check("ideal-structure", false, "wrong pairwise ideal intersections");

    const FiniteRing r4 = direct_product_ring(4);
    const DistinguishedReport rep = distinguished_elements(r4);
    std::set<std::string> dist;
    for (int e : rep.distinguished) dist.insert(r4.name(e));
    const bool ok = rep.four_ideals_of_eight && rep.triples_share_one_more &&
                    rep.radical_trivial &&
                    dist == std::set<std::string>{"x2", "x3", "x8", "x12"};
    return check("ideal-structure", ok, "order 16 ring ideal structure wrong");
}

/// Pencil through label 3, the cube graph, and the kernel-cube coupling.
inline CheckResult check_kernel_and_cube() {
    std::set<int> universe(kernel_labels().begin(), kernel_labels().end());
    const auto pencil = pencil_through(3, universe);
    if (pencil.size() != 3) return check("kernel-and-cube", false, "pencil size != 3");
    int full = 0, entangled = 0;
    for (const PencilLine& line : pencil) {
        if (!line.commuting) continue;
        ++full;
        entangled += line_eigenbasis(line.labels).entangled;
    }
    if (full != 3 || entangled != 2)
        return check("kernel-and-cube", false, "pencil line types wrong");

    const CubeReport cube = cube_structure();
    if (!cube.three_regular || cube.edges != 12 || !cube.is_cube)
        return check("kernel-and-cube", false, "cube graph structure wrong");

    const CouplingReport coup = shell_coupling();
    const bool partitions = std::all_of(coup.pairs.begin(), coup.pairs.end(),
                                        [](const CouplingPair& p) { return p.partitions_cube; });
    const bool ok = coup.exactly_expected_pairs && partitions && coup.six_regular &&
                    coup.total_edges == 45;
    return check("kernel-and-cube", ok, "coupling pattern wrong");
}

/// Both shells embed into the 81-point line, yet every cross pair there is
/// neighbour while some operator cross pairs commute.
inline CheckResult check_shell_coupling_failure() {
    const ShellReport rep = quad_shell_check();
    const bool ok = rep.cube_matches && rep.kernel_matches && rep.cross_pairs == 56 &&
                    rep.all_cross_neighbour && !rep.commuting_cross_ops.empty() &&
                    rep.contradiction;
    return check("shell-coupling-failure", ok, "shell embedding or coupling check failed");
}

}  // namespace detail

/// The full verification battery, one result per acceptance criterion.
inline std::vector<CheckResult> run_all_checks() {
    return {
        detail::check_table_regeneration(),
        detail::check_matrix_oracle(),
        detail::check_mubs(),
        detail::check_magic_squares(),
        detail::check_eigenbases(),
        detail::check_line_cardinalities(),
        detail::check_nine_point_structure(),
        detail::check_square_line_isomorphism(),
        detail::check_distant_tables(),
        detail::check_ideal_structure(),
        detail::check_kernel_and_cube(),
        detail::check_shell_coupling_failure(),
    };
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace prg

#endif
