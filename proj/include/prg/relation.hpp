#ifndef PRG_RELATION_HPP
#define PRG_RELATION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace prg {

/// Labeled boolean relation table; true cells print as "+".
struct RelationMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<bool>> cells;

    bool is_square() const { return row_labels == col_labels; }

    bool at(std::size_t i, std::size_t j) const { return cells[i][j]; }

    std::string render() const {
        std::string out;
        for (std::size_t i = 0; i < row_labels.size(); ++i) {
            out += row_labels[i] + ":";
            for (std::size_t j = 0; j < col_labels.size(); ++j)
                out += cells[i][j] ? " +" : " -";
            out += "\n";
        }
        return out;
    }
};

/// Undirected DOT graph, one edge per true cell above the diagonal.
inline std::string export_dot(const RelationMatrix& rel, const std::string& name = "G") {
    if (!rel.is_square()) throw std::invalid_argument("export_dot needs a square relation");
    std::string out = "graph " + name + " {\n";
    for (const auto& l : rel.row_labels) out += "  \"" + l + "\";\n";
    for (std::size_t i = 0; i < rel.row_labels.size(); ++i)
        for (std::size_t j = i + 1; j < rel.col_labels.size(); ++j)
            if (rel.cells[i][j])
                out += "  \"" + rel.row_labels[i] + "\" -- \"" + rel.col_labels[j] + "\";\n";
    out += "}\n";
    return out;
}

inline std::size_t edge_count(const RelationMatrix& rel) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < rel.row_labels.size(); ++i)
        for (std::size_t j = i + 1; j < rel.col_labels.size(); ++j)
            if (rel.cells[i][j]) ++n;
    return n;
}

inline bool is_regular(const RelationMatrix& rel, std::size_t degree) {
    for (const auto& row : rel.cells) {
        std::size_t d = 0;
        for (bool c : row) d += c;
        if (d != degree) return false;
    }
    return true;
}

/// 2-colorability of the relation graph.
inline bool is_bipartite(const RelationMatrix& rel) {
    const std::size_t n = rel.row_labels.size();
    std::vector<int> color(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if (!rel.cells[v][w] || w == v) continue;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Backtracking isomorphism search between two small square relations.
/// Returns the mapping a-index -> b-index, or empty if none exists.
inline std::vector<std::size_t> find_isomorphism(const RelationMatrix& a,
                                                 const RelationMatrix& b) {
    const std::size_t n = a.row_labels.size();
    if (b.row_labels.size() != n) return {};
    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    auto degree = [](const RelationMatrix& r, std::size_t v) {
        std::size_t d = 0;
        for (bool c : r.cells[v]) d += c;
        return d;
    };
    std::vector<std::size_t> deg_a(n), deg_b(n);
    for (std::size_t v = 0; v < n; ++v) {
        deg_a[v] = degree(a, v);
        deg_b[v] = degree(b, v);
    }
    auto rec = [&](auto&& self, std::size_t v) -> bool {
        if (v == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || deg_a[v] != deg_b[w]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u)
                ok = a.cells[v][u] == b.cells[w][map[u]];
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (self(self, v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    if (!rec(rec, 0)) return {};
    return map;
}

}  // namespace prg

#endif
