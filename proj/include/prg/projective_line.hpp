#ifndef PRG_PROJECTIVE_LINE_HPP
#define PRG_PROJECTIVE_LINE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "prg/finite_ring.hpp"
#include "prg/relation.hpp"

namespace prg {

/// Point of the projective line PR(1): canonical representative of the
/// unit-scaling class of an admissible coordinate pair.
struct ProjectivePoint {
    std::string ring_id;
    int alpha = 0;
    int beta = 0;

    bool operator==(const ProjectivePoint& o) const = default;
    bool operator<(const ProjectivePoint& o) const {
        return std::pair{alpha, beta} < std::pair{o.alpha, o.beta};
    }
};

inline std::string point_name(const FiniteRing& r, const ProjectivePoint& p) {
    return "(" + r.name(p.alpha) + "," + r.name(p.beta) + ")";
}

enum class ShellTag { NucleusLike, Mixed, Outer };

inline std::string shell_tag_name(ShellTag t) {
    switch (t) {
        case ShellTag::NucleusLike: return "nucleus-like";
        case ShellTag::Mixed: return "mixed";
        case ShellTag::Outer: return "outer";
    }
    return "?";
}

namespace detail {

inline void require_ring(const FiniteRing& r, const std::string& ring_id) {
    if (r.id() != ring_id) throw std::invalid_argument("point belongs to a different ring");
}

}  // namespace detail

/// A pair is admissible when it completes to a matrix with unit determinant.
/// Direct-product rings admit the componentwise shortcut: admissible iff no
/// coordinate has both entries zero.
inline bool is_admissible(const FiniteRing& r, int alpha, int beta) {
    if (r.is_direct_product()) {
        const auto &ta = r.tuple(alpha), &tb = r.tuple(beta);
        for (std::size_t k = 0; k < ta.size(); ++k)
            if (ta[k] == 0 && tb[k] == 0) return false;
        return true;
    }
    for (int gamma = 0; gamma < r.order(); ++gamma)
        for (int delta = 0; delta < r.order(); ++delta)
            if (r.is_unit(r.sub(r.mul(alpha, delta), r.mul(gamma, beta)))) return true;
    return false;
}

/// Distant iff the stacked representatives have unit determinant; unit
/// rescaling multiplies the determinant by a unit, so this is class-level.
inline bool is_distant(const FiniteRing& r, const ProjectivePoint& p, const ProjectivePoint& q) {
    detail::require_ring(r, p.ring_id);
    if (p.ring_id != q.ring_id) throw std::invalid_argument("points over different rings");
    const int det = r.sub(r.mul(p.alpha, q.beta), r.mul(q.alpha, p.beta));
    return r.is_unit(det);
}

/// Lexicographically smallest member of the unit orbit of (alpha, beta).
inline ProjectivePoint canonical_point(const FiniteRing& r, int alpha, int beta) {
    ProjectivePoint best{r.id(), alpha, beta};
    for (int u = 0; u < r.order(); ++u) {
        if (!r.is_unit(u)) continue;
        const ProjectivePoint cand{r.id(), r.mul(u, alpha), r.mul(u, beta)};
        if (cand < best) best = cand;
    }
    return best;
}

struct ProjectiveLineModel {
    std::string ring_id;
    std::vector<ProjectivePoint> points;          // canonical, lexicographic order
    std::vector<std::vector<bool>> distant;       // symmetric, false diagonal

    std::size_t index_of(const ProjectivePoint& p) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == p) return i;
        throw std::invalid_argument("point not in model");
    }
};

inline ProjectiveLineModel enumerate_points(const FiniteRing& r) {
    ProjectiveLineModel model{r.id(), {}, {}};
    for (int a = 0; a < r.order(); ++a)
        for (int b = 0; b < r.order(); ++b) {
            if (!is_admissible(r, a, b)) continue;
            const ProjectivePoint p = canonical_point(r, a, b);
            if (p.alpha == a && p.beta == b) model.points.push_back(p);
        }
    std::sort(model.points.begin(), model.points.end());
    const std::size_t n = model.points.size();
    model.distant.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool d = is_distant(r, model.points[i], model.points[j]);
            model.distant[i][j] = model.distant[j][i] = d;
        }
    return model;
}

/// All points neighbour to p, excluding p itself.
inline std::vector<ProjectivePoint> neighbourhood(const ProjectiveLineModel& model,
                                                  const ProjectivePoint& p) {
    const std::size_t i = model.index_of(p);
    std::vector<ProjectivePoint> out;
    for (std::size_t j = 0; j < model.points.size(); ++j)
        if (j != i && !model.distant[i][j]) out.push_back(model.points[j]);
    return out;
}

/// Entry classification of the canonical representative: counts nontrivial
/// zero-divisor coordinates.
inline ShellTag classify_point(const FiniteRing& r, const ProjectivePoint& p) {
    detail::require_ring(r, p.ring_id);
    auto nontrivial_zd = [&](int e) { return e != r.zero() && !r.is_unit(e); };
    const int n = nontrivial_zd(p.alpha) + nontrivial_zd(p.beta);
    if (n == 0) return ShellTag::NucleusLike;
    if (n == 1) return ShellTag::Mixed;
    return ShellTag::Outer;
}

struct Array3x3 {
    std::array<std::array<ProjectivePoint, 3>, 3> grid;
    std::array<ProjectivePoint, 3> distinguished;  // the same-character triple
};

/// Arranges the 9-point line into a grid with pairwise-distant rows and
/// columns; lexicographically first valid arrangement.
inline Array3x3 array_3x3(const FiniteRing& r, const ProjectiveLineModel& model) {
    if (model.points.size() != 9)
        throw std::invalid_argument("array_3x3 needs the nine-point line");
    detail::require_ring(r, model.ring_id);
    std::array<std::size_t, 9> slot{};
    std::vector<bool> used(9, false);
    auto compatible = [&](std::size_t pos, std::size_t cand) {
        const std::size_t row = pos / 3, col = pos % 3;
        for (std::size_t k = 0; k < pos; ++k) {
            if (k / 3 != row && k % 3 != col) continue;
            if (!model.distant[slot[k]][cand]) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == 9) return true;
        for (std::size_t cand = 0; cand < 9; ++cand) {
            if (used[cand] || !compatible(pos, cand)) continue;
            slot[pos] = cand;
            used[cand] = true;
            if (self(self, pos + 1)) return true;
            used[cand] = false;
        }
        return false;
    };
    if (!rec(rec, 0)) throw std::logic_error("no all-distant 3x3 arrangement exists");

    Array3x3 out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out.grid[i][j] = model.points[slot[i * 3 + j]];

    // the unique grid line whose points all have same-character coordinates
    auto same_character = [&](const ProjectivePoint& p) {
        const bool ua = r.is_unit(p.alpha), ub = r.is_unit(p.beta);
        const bool za = !ua && p.alpha != r.zero(), zb = !ub && p.beta != r.zero();
        return (ua && ub) || (za && zb);
    };
    bool found = false;
    for (std::size_t k = 0; k < 3 && !found; ++k) {
        const std::array<ProjectivePoint, 3> row = out.grid[k];
        const std::array<ProjectivePoint, 3> col = {out.grid[0][k], out.grid[1][k],
                                                    out.grid[2][k]};
        for (const auto& line : {row, col}) {
            if (std::all_of(line.begin(), line.end(), same_character)) {
                out.distinguished = line;
                found = true;
                break;
            }
        }
    }
    if (!found) throw std::logic_error("no distinguished same-character triple found");
    return out;
}

/// Restriction of the distant matrix to a point subset, labelled by names.
inline RelationMatrix distant_graph(const FiniteRing& r, const ProjectiveLineModel& model,
                                    const std::vector<ProjectivePoint>& subset) {
    RelationMatrix rel;
    std::vector<std::size_t> idx;
    for (const auto& p : subset) {
        idx.push_back(model.index_of(p));
        rel.row_labels.push_back(point_name(r, p));
    }
    rel.col_labels = rel.row_labels;
    rel.cells.assign(subset.size(), std::vector<bool>(subset.size(), false));
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j)
            rel.cells[i][j] = i != j && model.distant[idx[i]][idx[j]];
    return rel;
}

/// Parses "(name,name)" into a canonical point of the given ring.
inline ProjectivePoint parse_point(const FiniteRing& r, const std::string& text) {
    if (text.size() < 5 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("malformed point: " + text);
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("malformed point: " + text);
    const int a = r.index_of(text.substr(1, comma - 1));
    const int b = r.index_of(text.substr(comma + 1, text.size() - comma - 2));
    if (!is_admissible(r, a, b)) throw std::invalid_argument("inadmissible point: " + text);
    return canonical_point(r, a, b);
}

}  // namespace prg

#endif
