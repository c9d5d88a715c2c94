#ifndef PRG_PAULI_HPP
#define PRG_PAULI_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "prg/exact_matrix.hpp"
#include "prg/gaussian.hpp"
#include "prg/relation.hpp"

namespace prg {

/// Scalar in {1, i, -1, -i}, stored as the power of i.
struct Phase {
    int q = 0;  // value is i^q, q in 0..3

    constexpr Phase operator*(Phase o) const { return {(q + o.q) & 3}; }
    constexpr bool operator==(const Phase& o) const = default;

    GaussianInt value() const { return kUnits[static_cast<std::size_t>(q)]; }

    std::string str() const {
        static const char* s[4] = {"", "i", "-", "-i"};
        return s[q & 3];
    }
};

inline constexpr Phase kPlus{0}, kI{1}, kMinus{2}, kMinusI{3};

enum class SinglePauli { I = 0, X = 1, Y = 2, Z = 3 };

/// One of the sixteen two-qubit operators, labelled 0..15.
struct PauliOp {
    int label = 0;

    SinglePauli left() const { return factor_table()[label].first; }
    SinglePauli right() const { return factor_table()[label].second; }

    static const std::array<std::pair<SinglePauli, SinglePauli>, 16>& factor_table() {
        using enum SinglePauli;
        static const std::array<std::pair<SinglePauli, SinglePauli>, 16> t = {{
            {I, I},  // 0
            {I, Z}, {Z, I}, {Z, Z},  // 1 2 3
            {X, I}, {I, Y}, {X, Y},  // 4 5 6
            {X, Z}, {Z, X}, {Y, Y},  // 7 8 9
            {I, X}, {Y, I}, {Y, X},  // 10 11 12
            {Y, Z}, {X, X}, {Z, Y},  // 13 14 15
        }};
        return t;
    }
};

/// phase x (operator with the given label).
struct PhasedOp {
    Phase phase;
    int label = 0;

    bool operator==(const PhasedOp& o) const = default;

    std::string str() const { return phase.str() + std::to_string(label); }
};

namespace detail {

/// sigma_a sigma_b = phase * sigma_c for single-qubit factors.
inline std::pair<Phase, SinglePauli> single_product(SinglePauli a, SinglePauli b) {
    using enum SinglePauli;
    if (a == I) return {kPlus, b};
    if (b == I) return {kPlus, a};
    if (a == b) return {kPlus, I};
    // cyclic rule: XY = iZ, YZ = iX, ZX = iY; reversed order flips the sign
    const int ai = static_cast<int>(a), bi = static_cast<int>(b);
    const int ci = 6 - ai - bi;  // the remaining one of {1,2,3}
    const bool forward = (bi - ai + 3) % 3 == 1;
    return {forward ? kI : kMinusI, static_cast<SinglePauli>(ci)};
}

inline int label_of(SinglePauli l, SinglePauli r) {
    const auto& t = PauliOp::factor_table();
    for (int k = 0; k < 16; ++k)
        if (t[static_cast<std::size_t>(k)] == std::make_pair(l, r)) return k;
    throw std::logic_error("factor pair missing from label table");
}

inline void check_label(int label) {
    if (label < 0 || label > 15) throw std::invalid_argument("pauli label out of range");
}

}  // namespace detail

/// Symbolic product of two labelled operators, factor by factor.
inline PhasedOp phased_product(int a, int b) {
    detail::check_label(a);
    detail::check_label(b);
    const PauliOp pa{a}, pb{b};
    const auto [pl, l] = detail::single_product(pa.left(), pb.left());
    const auto [pr, r] = detail::single_product(pa.right(), pb.right());
    return {pl * pr, detail::label_of(l, r)};
}

inline bool commutes(int a, int b) {
    const PhasedOp ab = phased_product(a, b), ba = phased_product(b, a);
    if (ab.label != ba.label) throw std::logic_error("pauli products disagree on label");
    return ab.phase == ba.phase;
}

/// 4x4 matrix of one labelled operator, entries in {0, +-1, +-i}.
inline ExactMatrix op_matrix(int label) {
    detail::check_label(label);
    auto single = [](SinglePauli p) {
        ExactMatrix m(2, 2);
        using enum SinglePauli;
        switch (p) {
            case I:
                m.at(0, 0) = GaussianRational{1};
                m.at(1, 1) = GaussianRational{1};
                break;
            case X:
                m.at(0, 1) = GaussianRational{1};
                m.at(1, 0) = GaussianRational{1};
                break;
            case Y:
                m.at(0, 1) = GaussianRational{GaussianInt{0, -1}};
                m.at(1, 0) = GaussianRational{GaussianInt{0, 1}};
                break;
            case Z:
                m.at(0, 0) = GaussianRational{1};
                m.at(1, 1) = GaussianRational{-1};
                break;
        }
        return m;
    };
    const PauliOp op{label};
    return tensor(single(op.left()), single(op.right()));
}

/// Matrix-oracle product: identifies op_matrix(a) * op_matrix(b) among the 64
/// phased operators by exhaustive comparison. Independent of phased_product.
inline PhasedOp matrix_oracle_product(int a, int b) {
    const ExactMatrix prod = matmul(op_matrix(a), op_matrix(b));
    for (int label = 0; label < 16; ++label) {
        const ExactMatrix m = op_matrix(label);
        for (int q = 0; q < 4; ++q) {
            if (prod == m * GaussianRational{kUnits[static_cast<std::size_t>(q)]})
                return {Phase{q}, label};
        }
    }
    throw std::logic_error("product is not a phased pauli operator");
}

/// The A/B split of Eq-style label sets: A = computational + entangled part.
struct OperatorPartition {
    std::set<int> a, b, c, e;

    static OperatorPartition standard() {
        return {{0, 1, 2, 3, 6, 9, 12, 14}, {4, 5, 7, 8, 10, 11, 13, 15},
                {0, 1, 2, 3}, {6, 9, 12, 14}};
    }
};

/// Product-closure law: A*A and B*B land in A, A*B lands in B.
inline bool closure_check(const OperatorPartition& p) {
    auto in = [](const std::set<int>& s, int x) { return s.count(x) > 0; };
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) {
            const int prod = phased_product(x, y).label;
            if (in(p.a, x) && in(p.a, y) && !in(p.a, prod)) return false;
            if (in(p.b, x) && in(p.b, y) && !in(p.a, prod)) return false;
            if (in(p.a, x) && in(p.b, y) && !in(p.b, prod)) return false;
            if (in(p.b, x) && in(p.a, y) && !in(p.b, prod)) return false;
        }
    return true;
}

struct MerminSquare {
    std::array<std::array<int, 3>, 3> grid;
};

inline const std::array<MerminSquare, 4>& mermin_squares_data() {
    static const std::array<MerminSquare, 4> squares = {{
        {{{{1, 2, 3}, {4, 10, 14}, {7, 8, 9}}}},
        {{{{1, 2, 3}, {13, 15, 14}, {11, 5, 9}}}},
        {{{{1, 4, 7}, {2, 5, 15}, {3, 6, 12}}}},
        {{{{1, 11, 13}, {2, 10, 8}, {3, 12, 6}}}},
    }};
    return squares;
}

struct MerminReport {
    MerminSquare square;
    bool lines_commute = false;
    std::array<Phase, 3> row_phases;
    std::array<Phase, 3> col_phases;
};

namespace detail {

/// Ordered left-to-right product of a triple; must close on the identity.
inline Phase line_phase(const std::array<int, 3>& line) {
    const PhasedOp ab = phased_product(line[0], line[1]);
    const PhasedOp abc = phased_product(ab.label, line[2]);
    if (abc.label != 0) throw std::domain_error("line does not close on the identity");
    return ab.phase * abc.phase;
}

}  // namespace detail

inline MerminReport mermin_report(const MerminSquare& sq) {
    MerminReport rep{sq};
    rep.lines_commute = true;
    for (int k = 0; k < 3; ++k) {
        const auto& row = sq.grid[static_cast<std::size_t>(k)];
        std::array<int, 3> col = {sq.grid[0][static_cast<std::size_t>(k)],
                                  sq.grid[1][static_cast<std::size_t>(k)],
                                  sq.grid[2][static_cast<std::size_t>(k)]};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                rep.lines_commute = rep.lines_commute && commutes(row[i], row[j]) &&
                                    commutes(col[i], col[j]);
            }
        rep.row_phases[static_cast<std::size_t>(k)] = detail::line_phase(row);
        rep.col_phases[static_cast<std::size_t>(k)] = detail::line_phase(col);
    }
    return rep;
}

inline std::vector<MerminReport> mermin_reports() {
    std::vector<MerminReport> out;
    for (const auto& sq : mermin_squares_data()) out.push_back(mermin_report(sq));
    return out;
}

inline const std::array<std::array<int, 3>, 5>& mub_rows() {
    static const std::array<std::array<int, 3>, 5> rows = {
        {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}, {13, 14, 15}}};
    return rows;
}

struct EigenBasis {
    std::array<int, 3> triple;
    std::vector<std::pair<StateVector, SignSignature>> vectors;
    bool entangled = false;
};

/// Joint eigenbasis of a commuting triple closed under the phaseless product;
/// the third signature slot carries the eigenvalue of the third member.
inline EigenBasis line_eigenbasis(const std::array<int, 3>& triple) {
    if (!commutes(triple[0], triple[1]) || !commutes(triple[0], triple[2]) ||
        !commutes(triple[1], triple[2]))
        throw std::invalid_argument("triple is not mutually commuting");
    if (phased_product(triple[0], triple[1]).label != triple[2])
        throw std::invalid_argument("triple is not closed under the phaseless product");
    EigenBasis eb{triple, joint_eigenbasis(op_matrix(triple[0]), op_matrix(triple[1]),
                                           op_matrix(triple[2]))};
    eb.entangled = std::all_of(eb.vectors.begin(), eb.vectors.end(),
                               [](const auto& p) { return schmidt_rank(p.first) == 2; });
    return eb;
}

struct MubReport {
    std::vector<EigenBasis> bases;        // one per row of the 5-row table
    std::vector<std::vector<bool>> unbiased;  // 5x5, diagonal false
    bool all_pairs_unbiased = false;
};

inline MubReport mub_partition() {
    MubReport rep;
    for (const auto& row : mub_rows()) rep.bases.push_back(line_eigenbasis(row));
    rep.unbiased.assign(5, std::vector<bool>(5, false));
    rep.all_pairs_unbiased = true;
    auto vecs = [&](std::size_t i) {
        std::vector<StateVector> v;
        for (const auto& p : rep.bases[i].vectors) v.push_back(p.first);
        return v;
    };
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            const bool u = is_unbiased_pair(vecs(i), vecs(j));
            rep.unbiased[i][j] = rep.unbiased[j][i] = u;
            rep.all_pairs_unbiased = rep.all_pairs_unbiased && u;
        }
    return rep;
}

/// Bijection from the kernel labels {1,2,3,6,9,12,14} to the nonzero 3-bit
/// vectors, turning the phaseless product into XOR. Lexicographically first.
inline std::vector<std::pair<int, int>> fano_embedding() {
    static const std::array<int, 7> kernel = {1, 2, 3, 6, 9, 12, 14};
    std::array<int, 7> img{};
    std::array<bool, 8> used{};
    auto idx_of = [&](int label) {
        for (std::size_t i = 0; i < 7; ++i)
            if (kernel[i] == label) return static_cast<int>(i);
        return -1;
    };
    auto rec = [&](auto&& self, std::size_t k) -> bool {
        if (k == 7) return true;
        for (int v = 1; v <= 7; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const int prod = phased_product(kernel[k], kernel[j]).label;
                const int pi = idx_of(prod);
                if (pi < 0) {
                    ok = false;
                    break;
                }
                if (static_cast<std::size_t>(pi) < k || static_cast<std::size_t>(pi) == k)
                    ok = img[static_cast<std::size_t>(pi)] == (v ^ img[j]);
            }
            if (!ok) continue;
            img[k] = v;
            used[static_cast<std::size_t>(v)] = true;
            if (self(self, k + 1)) return true;
            used[static_cast<std::size_t>(v)] = false;
        }
        return false;
    };
    if (!rec(rec, 0)) throw std::logic_error("no XOR embedding of the kernel exists");
    // full consistency pass over all pairs
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            if (i == j) continue;
            const int prod = phased_product(kernel[i], kernel[j]).label;
            if (img[static_cast<std::size_t>(idx_of(prod))] != (img[i] ^ img[j]))
                throw std::logic_error("XOR embedding inconsistent");
        }
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < 7; ++i) out.push_back({kernel[i], img[i]});
    return out;
}

struct PencilLine {
    std::array<int, 3> labels;  // sorted, contains the base
    bool commuting = false;     // full line vs broken line
};

/// All phaseless-product-closed triples through `base` inside `universe`.
inline std::vector<PencilLine> pencil_through(int base, const std::set<int>& universe) {
    if (!universe.count(base)) throw std::invalid_argument("base outside universe");
    if (base == 0) throw std::invalid_argument("the identity is not a point");
    std::vector<PencilLine> out;
    for (int other : universe) {
        if (other == base || other == 0) continue;
        const int third = phased_product(base, other).label;
        if (third == 0 || !universe.count(third) || third <= other) continue;
        std::array<int, 3> line = {base, other, third};
        std::sort(line.begin(), line.end());
        out.push_back({line, commutes(base, other) && commutes(base, third) &&
                                 commutes(other, third)});
    }
    std::sort(out.begin(), out.end(),
              [](const PencilLine& x, const PencilLine& y) { return x.labels < y.labels; });
    return out;
}

/// Commutation graph restricted to a label set.
inline RelationMatrix commutation_graph(const std::vector<int>& labels) {
    RelationMatrix rel;
    for (int l : labels) rel.row_labels.push_back(std::to_string(l));
    rel.col_labels = rel.row_labels;
    rel.cells.assign(labels.size(), std::vector<bool>(labels.size(), false));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            rel.cells[i][j] = i != j && commutes(labels[i], labels[j]);
    return rel;
}

inline const std::vector<int>& cube_labels() {
    static const std::vector<int> b = {4, 5, 7, 8, 10, 11, 13, 15};
    return b;
}

inline const std::vector<int>& kernel_labels() {
    static const std::vector<int> k = {1, 2, 3, 6, 9, 12, 14};
    return k;
}

struct CubeReport {
    RelationMatrix graph;
    bool three_regular = false;
    std::size_t edges = 0;
    bool bipartite = false;
    std::vector<std::size_t> cube_iso;  // vertex index -> 3-bit cube vertex
    bool is_cube = false;
};

inline RelationMatrix hypercube_graph(int dim) {
    const std::size_t n = std::size_t{1} << dim;
    RelationMatrix rel;
    for (std::size_t v = 0; v < n; ++v) rel.row_labels.push_back(std::to_string(v));
    rel.col_labels = rel.row_labels;
    rel.cells.assign(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
            rel.cells[v][w] = std::popcount(v ^ w) == 1;
    return rel;
}

inline CubeReport cube_structure() {
    CubeReport rep;
    rep.graph = commutation_graph(cube_labels());
    rep.three_regular = is_regular(rep.graph, 3);
    rep.edges = edge_count(rep.graph);
    rep.bipartite = is_bipartite(rep.graph);
    rep.cube_iso = find_isomorphism(rep.graph, hypercube_graph(3));
    rep.is_cube = !rep.cube_iso.empty();
    return rep;
}

struct CouplingPair {
    std::array<int, 2> kernel_pair;
    std::vector<int> commuters_first;   // B-labels commuting with the first member
    std::vector<int> commuters_second;  // ... and with the second
    bool partitions_cube = false;       // disjoint four-tuples covering all of B
};

struct CouplingReport {
    std::vector<CouplingPair> pairs;          // the kernel pairs whose union covers B
    bool exactly_expected_pairs = false;      // (6,12), (9,14), (1,2) and no others
    bool six_regular = false;                 // full 15-vertex commutation graph
    std::size_t total_edges = 0;
};

inline CouplingReport shell_coupling() {
    CouplingReport rep;
    auto b_commuters = [](int label) {
        std::vector<int> out;
        for (int b : cube_labels())
            if (commutes(label, b)) out.push_back(b);
        return out;
    };
    std::set<std::array<int, 2>> found;
    for (std::size_t i = 0; i < kernel_labels().size(); ++i)
        for (std::size_t j = i + 1; j < kernel_labels().size(); ++j) {
            const int p = kernel_labels()[i], q = kernel_labels()[j];
            auto cp = b_commuters(p), cq = b_commuters(q);
            std::set<int> uni(cp.begin(), cp.end());
            uni.insert(cq.begin(), cq.end());
            if (uni.size() != 8) continue;
            CouplingPair pair{{p, q}, cp, cq, false};
            pair.partitions_cube = cp.size() == 4 && cq.size() == 4;
            rep.pairs.push_back(pair);
            found.insert({p, q});
        }
    rep.exactly_expected_pairs =
        found == std::set<std::array<int, 2>>{{1, 2}, {6, 12}, {9, 14}};
    std::vector<int> all15;
    for (int l = 1; l <= 15; ++l) all15.push_back(l);
    const RelationMatrix full = commutation_graph(all15);
    rep.six_regular = is_regular(full, 6);
    rep.total_edges = edge_count(full);
    return rep;
}

}  // namespace prg

#endif
