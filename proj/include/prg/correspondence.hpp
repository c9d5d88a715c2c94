#ifndef PRG_CORRESPONDENCE_HPP
#define PRG_CORRESPONDENCE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prg/finite_ring.hpp"
#include "prg/fixtures.hpp"
#include "prg/pauli.hpp"
#include "prg/projective_line.hpp"
#include "prg/relation.hpp"

namespace prg {

/// Alignment of an operator relation with a point relation: index maps into
/// the point matrix plus the cells where the two relations disagree.
struct Correspondence {
    std::vector<std::size_t> row_map;  // operator row index -> point row index
    std::vector<std::size_t> col_map;
    std::vector<std::pair<std::size_t, std::size_t>> mismatch_cells;  // operator coords

    std::size_t mismatch_count() const { return mismatch_cells.size(); }
};

namespace detail {

inline void require_bijection(const std::vector<std::size_t>& map, std::size_t n) {
    if (map.size() != n) throw std::invalid_argument("mapping size mismatch");
    std::vector<bool> seen(n, false);
    for (std::size_t v : map) {
        if (v >= n || seen[v]) throw std::invalid_argument("mapping is not a bijection");
        seen[v] = true;
    }
}

}  // namespace detail

/// Cell-by-cell diff of an operator relation against a point relation pulled
/// back through row/column bijections. Every ordered cell counts, so square
/// tables report symmetric disagreements twice.
inline Correspondence mismatch(const RelationMatrix& op_rel, const RelationMatrix& pt_rel,
                               const std::vector<std::size_t>& row_map,
                               const std::vector<std::size_t>& col_map) {
    detail::require_bijection(row_map, op_rel.row_labels.size());
    detail::require_bijection(col_map, op_rel.col_labels.size());
    if (pt_rel.row_labels.size() != op_rel.row_labels.size() ||
        pt_rel.col_labels.size() != op_rel.col_labels.size())
        throw std::invalid_argument("relation shape mismatch");
    Correspondence c{row_map, col_map, {}};
    for (std::size_t i = 0; i < op_rel.row_labels.size(); ++i)
        for (std::size_t j = 0; j < op_rel.col_labels.size(); ++j)
            if (op_rel.cells[i][j] != pt_rel.cells[row_map[i]][col_map[j]])
                c.mismatch_cells.push_back({i, j});
    return c;
}

inline Correspondence mismatch(const RelationMatrix& op_rel, const RelationMatrix& pt_rel,
                               const std::vector<std::size_t>& map) {
    return mismatch(op_rel, pt_rel, map, map);
}

/// Exhaustive search for the bijection minimizing the mismatch count between
/// two square relations, honoring pinned assignments; the lexicographically
/// first minimizer wins, so the result is deterministic.
inline Correspondence best_bijection_search(
    const RelationMatrix& op_rel, const RelationMatrix& pt_rel,
    const std::map<std::size_t, std::size_t>& constraints = {}) {
    const std::size_t n = op_rel.row_labels.size();
    if (!op_rel.is_square() || !pt_rel.is_square())
        throw std::invalid_argument("bijection search needs square relations");
    if (pt_rel.row_labels.size() != n) throw std::invalid_argument("label-set size mismatch");
    std::set<std::size_t> pinned_targets;
    for (const auto& [from, to] : constraints) {
        if (from >= n || to >= n) throw std::invalid_argument("constraint index out of range");
        if (!pinned_targets.insert(to).second)
            throw std::invalid_argument("constraints are not injective");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    bool found = false;
    Correspondence best;
    do {
        bool feasible = true;
        for (const auto& [from, to] : constraints)
            if (perm[from] != to) {
                feasible = false;
                break;
            }
        if (!feasible) continue;
        Correspondence cand = mismatch(op_rel, pt_rel, perm);
        if (!found || cand.mismatch_count() < best.mismatch_count()) {
            best = std::move(cand);
            found = true;
            if (best.mismatch_count() == 0) break;  // cannot be beaten
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!found) throw std::invalid_argument("constraints admit no bijection");
    return best;
}

namespace detail {

/// The operator standing behind each printed point label, shared by all four
/// distant/neighbour tables (the figures label both pictures consistently).
inline int operator_for_point(const std::string& point) {
    static const std::map<std::string, int> m = {
        {"(1,0)", 1},  {"(0,1)", 2},  {"(1,1)", 3},  {"(c,r)", 6},
        {"(b,y)", 14}, {"(y,b)", 9},  {"(r,c)", 12}, {"(y,1)", 4},
        {"(b,1)", 7},  {"(r,1)", 11}, {"(c,1)", 13}, {"(1,c)", 5},
        {"(1,b)", 10}, {"(1,r)", 15}, {"(1,y)", 8}};
    const auto it = m.find(point);
    if (it == m.end()) throw std::invalid_argument("point without an operator label: " + point);
    return it->second;
}

inline RelationMatrix distant_matrix_of_names(const FiniteRing& r,
                                              const std::vector<std::string>& rows,
                                              const std::vector<std::string>& cols,
                                              bool swap_coordinates = false) {
    auto pt = [&](const std::string& name) {
        ProjectivePoint p = parse_point(r, name);
        if (swap_coordinates) std::swap(p.alpha, p.beta);
        return p;
    };
    RelationMatrix rel{rows, cols, {}};
    rel.cells.assign(rows.size(), std::vector<bool>(cols.size(), false));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const ProjectivePoint a = pt(rows[i]), b = pt(cols[j]);
            rel.cells[i][j] = !(a == b) && is_distant(r, a, b);
        }
    return rel;
}

inline RelationMatrix commutation_matrix(const std::vector<int>& rows,
                                         const std::vector<int>& cols) {
    RelationMatrix rel;
    for (int l : rows) rel.row_labels.push_back(std::to_string(l));
    for (int l : cols) rel.col_labels.push_back(std::to_string(l));
    rel.cells.assign(rows.size(), std::vector<bool>(cols.size(), false));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            rel.cells[i][j] = rows[i] != cols[j] && commutes(rows[i], cols[j]);
    return rel;
}

}  // namespace detail

/// Everything checked when regenerating one distant/neighbour table.
struct TableReport {
    int table = 0;
    std::vector<int> op_rows, op_cols;          // operator labels behind the points
    RelationMatrix geometry;                    // computed distant matrix
    RelationMatrix operators;                   // commutation matrix, same shape
    bool geometry_matches_fixture = false;      // internal-consistency diff
    std::vector<std::pair<std::size_t, std::size_t>> mismatch_cells;
    bool marks_match = false;                   // mismatch cells == the "!" cells
    bool swap_checked = false;                  // coordinate-exchange invariance
    bool swap_invariant = false;

    std::size_t mismatch_count() const { return mismatch_cells.size(); }
};

/// Recomputes one of the four printed tables from scratch: the distant matrix
/// of the printed point set over the 8-element ring, the commutation matrix of
/// the corresponding operators, and the disagreement pattern between the two.
inline TableReport reproduce_table(int which) {
    const fixtures::SignTableFixture fix = fixtures::sign_table(which);
    const FiniteRing ring = direct_product_ring(3);
    TableReport rep;
    rep.table = which;
    for (const auto& n : fix.row_points) rep.op_rows.push_back(detail::operator_for_point(n));
    for (const auto& n : fix.col_points) rep.op_cols.push_back(detail::operator_for_point(n));

    rep.geometry = detail::distant_matrix_of_names(ring, fix.row_points, fix.col_points);
    rep.geometry_matches_fixture = rep.geometry.cells == fix.distant;

    rep.operators = detail::commutation_matrix(rep.op_rows, rep.op_cols);
    for (std::size_t i = 0; i < rep.operators.cells.size(); ++i)
        for (std::size_t j = 0; j < rep.operators.cells[i].size(); ++j)
            if (rep.operators.cells[i][j] != rep.geometry.cells[i][j])
                rep.mismatch_cells.push_back({i, j});
    auto marks = fix.marks;
    std::sort(marks.begin(), marks.end());
    rep.marks_match = rep.mismatch_cells == marks;  // both row-major sorted

    if (which == 7) {
        rep.swap_checked = true;
        const RelationMatrix swapped =
            detail::distant_matrix_of_names(ring, fix.row_points, fix.col_points, true);
        rep.swap_invariant = swapped.cells == rep.geometry.cells;
    }
    return rep;
}

/// Elements of the 16-element ring that lie deep in the ideal lattice.
struct DistinguishedReport {
    std::vector<Ideal> maximal;     // the maximal ideals, sorted
    std::vector<int> distinguished; // nonzero elements in at least 3 of them
    bool four_ideals_of_eight = false;
    bool triples_share_one_more = false;  // each ideal triple meets in {0, d}
    bool radical_trivial = false;
};

inline DistinguishedReport distinguished_elements(const FiniteRing& r) {
    if (r.order() != 16 || !r.is_direct_product())
        throw std::invalid_argument("distinguished_elements needs the 16-element product ring");
    DistinguishedReport rep;
    rep.maximal = maximal_ideals(r);
    rep.four_ideals_of_eight =
        rep.maximal.size() == 4 &&
        std::all_of(rep.maximal.begin(), rep.maximal.end(),
                    [](const Ideal& i) { return i.elements.size() == 8; });
    for (int e = 0; e < r.order(); ++e) {
        if (e == r.zero()) continue;
        int hits = 0;
        for (const auto& m : rep.maximal) hits += m.contains(e);
        if (hits >= 3) rep.distinguished.push_back(e);
    }
    rep.triples_share_one_more = true;
    const std::size_t k = rep.maximal.size();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t c = b + 1; c < k; ++c) {
                Ideal cap = intersect_ideals(r, rep.maximal[a], rep.maximal[b]);
                cap = intersect_ideals(r, cap, rep.maximal[c]);
                const bool ok = cap.elements.size() == 2 && cap.contains(r.zero()) &&
                                std::binary_search(rep.distinguished.begin(),
                                                   rep.distinguished.end(),
                                                   cap.elements[cap.elements[0] == r.zero()]);
                rep.triples_share_one_more = rep.triples_share_one_more && ok;
            }
    rep.radical_trivial = jacobson_radical(r).elements == std::vector<int>{r.zero()};
    return rep;
}

/// Outcome of embedding the two operator shells into the 81-point line.
struct ShellReport {
    std::vector<ProjectivePoint> cube_subset;    // unity paired with a distinguished element
    bool cube_matches = false;                   // distant graph == cube commutation graph
    std::vector<ProjectivePoint> kernel_subset;  // found by the guided search
    bool kernel_matches = false;
    std::size_t cross_pairs = 0;
    bool all_cross_neighbour = false;
    std::vector<std::pair<int, int>> commuting_cross_ops;  // kernel x cube operator pairs
    bool contradiction = false;  // geometry forbids what the operators do
};

/// Builds both shell subsets inside the line over the 16-element ring and
/// tests whether their mutual relations can reproduce the operator coupling.
inline ShellReport quad_shell_check() {
    const FiniteRing r = direct_product_ring(4);
    const ProjectiveLineModel model = enumerate_points(r);
    ShellReport rep;

    const DistinguishedReport dist = distinguished_elements(r);
    for (int d : dist.distinguished) {
        rep.cube_subset.push_back(canonical_point(r, r.one(), d));
        rep.cube_subset.push_back(canonical_point(r, d, r.one()));
    }
    std::sort(rep.cube_subset.begin(), rep.cube_subset.end());
    const RelationMatrix cube_geom = distant_graph(r, model, rep.cube_subset);
    const RelationMatrix cube_ops = commutation_graph(cube_labels());
    rep.cube_matches = !find_isomorphism(cube_geom, cube_ops).empty();

    // Guided search for a 7-point image of the other shell: candidates are the
    // all-unit point plus pairs of complementary balanced zero-divisors (those
    // sitting in exactly two maximal ideals). Unbalanced complements would
    // reproduce the same subgraph but become distant from the first subset.
    auto ideal_hits = [&](int e) {
        int hits = 0;
        for (const Ideal& m : dist.maximal) hits += m.contains(e);
        return hits;
    };
    std::vector<ProjectivePoint> pool{canonical_point(r, r.one(), r.one())};
    for (int a = 0; a < r.order(); ++a) {
        if (a == r.zero() || a == r.one() || ideal_hits(a) != 2) continue;
        pool.push_back(canonical_point(r, a, r.add(a, r.one())));
    }
    std::sort(pool.begin(), pool.end());
    const RelationMatrix kernel_ops = commutation_graph(kernel_labels());
    std::vector<std::size_t> pick;
    auto search = [&](auto&& self, std::size_t next) -> bool {
        if (pick.size() == 7) {
            std::vector<ProjectivePoint> subset;
            for (std::size_t k : pick) subset.push_back(pool[k]);
            return !find_isomorphism(distant_graph(r, model, subset), kernel_ops).empty();
        }
        for (std::size_t k = next; k < pool.size(); ++k) {
            pick.push_back(k);
            if (self(self, k + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    rep.kernel_matches = search(search, 0);
    if (rep.kernel_matches)
        for (std::size_t k : pick) rep.kernel_subset.push_back(pool[k]);

    std::size_t distant_cross = 0;
    for (const auto& p : rep.kernel_subset)
        for (const auto& q : rep.cube_subset) {
            if (p == q) throw std::logic_error("shell subsets are not disjoint");
            ++rep.cross_pairs;
            distant_cross += is_distant(r, p, q);
        }
    rep.all_cross_neighbour = rep.cross_pairs > 0 && distant_cross == 0;

    for (int k : kernel_labels())
        for (int b : cube_labels())
            if (commutes(k, b)) rep.commuting_cross_ops.push_back({k, b});
    rep.contradiction = rep.all_cross_neighbour && !rep.commuting_cross_ops.empty();
    return rep;
}

}  // namespace prg

#endif
