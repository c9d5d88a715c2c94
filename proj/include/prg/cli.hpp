#ifndef PRG_CLI_HPP
#define PRG_CLI_HPP

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "prg/correspondence.hpp"
#include "prg/finite_ring.hpp"
#include "prg/json.hpp"
#include "prg/pauli.hpp"
#include "prg/projective_line.hpp"
#include "prg/verify.hpp"

namespace prg::cli {

/// Exit codes: 0 all good, 1 a verification failed, 2 usage/input error.
inline constexpr int kOk = 0, kVerificationFailed = 1, kUsageError = 2;

namespace detail {

inline FiniteRing ring_by_id(const std::string& id) {
    if (id == "gf2x2") return direct_product_ring(2);
    if (id == "gf2x3") return direct_product_ring(3);
    if (id == "gf2x4") return direct_product_ring(4);
    if (id == "gf4") return quotient_ring_gf2(0b111);    // x^2 + x + 1
    if (id == "gf8") return quotient_ring_gf2(0b1011);   // x^3 + x + 1
    throw CLI::ValidationError("--ring", "unsupported ring: " + id);
}

inline std::string names_of(const FiniteRing& r, const std::vector<int>& elems) {
    std::string s;
    for (int e : elems) s += (s.empty() ? "" : ", ") + r.name(e);
    return s;
}

inline nlohmann::json point_json(const FiniteRing& r, const ProjectivePoint& p) {
    return {{"point", point_name(r, p)},
            {"alpha", r.name(p.alpha)},
            {"beta", r.name(p.beta)},
            {"shell", shell_tag_name(classify_point(r, p))}};
}

inline nlohmann::json relation_json(const RelationMatrix& rel) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& row : rel.cells) {
        nlohmann::json jr = nlohmann::json::array();
        for (bool c : row) jr.push_back(c);
        cells.push_back(jr);
    }
    return {{"rows", rel.row_labels}, {"cols", rel.col_labels}, {"cells", cells}};
}

inline void print_ring_info(const FiniteRing& r, std::ostream& out) {
    out << "ring " << r.id() << " (order " << r.order() << ")\n\n";
    out << ring_to_text(r) << "\n";
    out << "units: " << names_of(r, units(r)) << "\n";
    out << "zero divisors: " << names_of(r, zero_divisors(r)) << "\n";
    for (const Ideal& m : maximal_ideals(r))
        out << "maximal ideal: {" << names_of(r, m.elements) << "}\n";
    out << "jacobson radical: {" << names_of(r, jacobson_radical(r).elements) << "}\n";
}

inline void print_pauli_table(const std::string& set, std::ostream& out) {
    static const std::vector<int> a_order = {0, 1, 2, 3, 6, 14, 9, 12};
    static const std::vector<int> b_order = {4, 7, 11, 13, 5, 10, 15, 8};
    const std::vector<int>& rows = set == "A" ? a_order : b_order;
    const std::vector<int>& cols = set == "AB" ? a_order : rows;
    out << "*";
    for (int c : cols) out << "\t" << c;
    out << "\n";
    for (int r : rows) {
        out << r;
        for (int c : cols) out << "\t" << phased_product(r, c).str();
        out << "\n";
    }
}

inline int run_mermin(int which, std::ostream& out) {
    bool all_ok = true;
    int idx = 0;
    for (const MerminReport& rep : mermin_reports()) {
        ++idx;
        if (which != 0 && which != idx) continue;
        out << "square " << idx << ":\n";
        for (const auto& row : rep.square.grid) {
            for (int l : row) out << "\t" << l;
            out << "\n";
        }
        auto line = [](const std::array<Phase, 3>& p) {
            std::string s;
            for (const Phase& ph : p) s += " " + (ph.str().empty() ? "+" : ph.str()) + "1";
            return s;
        };
        out << "rows commute and columns commute: " << (rep.lines_commute ? "yes" : "no")
            << "\n";
        out << "row products:" << line(rep.row_phases) << "\n";
        out << "column products:" << line(rep.col_phases) << "\n";
        const bool ok = rep.lines_commute &&
                        rep.row_phases == std::array<Phase, 3>{kPlus, kPlus, kPlus} &&
                        rep.col_phases == std::array<Phase, 3>{kPlus, kPlus, kMinus};
        out << "magic: " << (ok ? "yes" : "no") << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? kOk : kVerificationFailed;
}

inline int run_mubs(std::ostream& out) {
    const MubReport rep = mub_partition();
    nlohmann::json bases = nlohmann::json::array();
    for (const EigenBasis& eb : rep.bases) {
        nlohmann::json vecs = nlohmann::json::array();
        for (const auto& [v, s] : eb.vectors)
            vecs.push_back({{"vector", v.str()}, {"signature", s.str()}});
        bases.push_back({{"triple", eb.triple}, {"entangled", eb.entangled}, {"vectors", vecs}});
    }
    const nlohmann::json j = {{"bases", bases},
                              {"pairs_checked", 10},
                              {"all_unbiased", rep.all_pairs_unbiased}};
    out << j.dump(2) << "\n";
    return rep.all_pairs_unbiased ? kOk : kVerificationFailed;
}

inline int run_match(int table, std::ostream& out) {
    const TableReport rep = reproduce_table(table);
    nlohmann::json bij = nlohmann::json::array();
    for (std::size_t i = 0; i < rep.op_rows.size(); ++i)
        bij.push_back({{"operator", rep.op_rows[i]}, {"point", rep.geometry.row_labels[i]}});
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& [i, j] : rep.mismatch_cells)
        cells.push_back({{"row", rep.geometry.row_labels[i]},
                         {"col", rep.geometry.col_labels[j]},
                         {"operator_row", rep.op_rows[i]},
                         {"operator_col", rep.op_cols[j]}});
    const nlohmann::json j = {{"table", table},
                              {"bijection", bij},
                              {"geometry_consistent", rep.geometry_matches_fixture},
                              {"mismatch_cells", cells},
                              {"mismatch_count", rep.mismatch_count()},
                              {"marks_match", rep.marks_match}};
    out << j.dump(2) << "\n";
    const bool ok = rep.geometry_matches_fixture && rep.marks_match &&
                    (!rep.swap_checked || rep.swap_invariant);
    return ok ? kOk : kVerificationFailed;
}

inline int run_shells(std::ostream& out) {
    const FiniteRing r = direct_product_ring(4);
    const ShellReport rep = quad_shell_check();
    auto pts = [&](const std::vector<ProjectivePoint>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : v) a.push_back(point_name(r, p));
        return a;
    };
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& [k, b] : rep.commuting_cross_ops) ops.push_back({k, b});
    const nlohmann::json j = {{"cube_subset", pts(rep.cube_subset)},
                              {"cube_matches", rep.cube_matches},
                              {"kernel_subset", pts(rep.kernel_subset)},
                              {"kernel_matches", rep.kernel_matches},
                              {"cross_pairs", rep.cross_pairs},
                              {"all_cross_neighbour", rep.all_cross_neighbour},
                              {"commuting_cross_operator_pairs", ops},
                              {"contradiction_detected", rep.contradiction}};
    out << j.dump(2) << "\n";
    return rep.contradiction ? kOk : kVerificationFailed;
}

inline int run_fano(int base, std::ostream& out) {
    std::set<int> universe(kernel_labels().begin(), kernel_labels().end());
    if (!universe.count(base)) throw CLI::ValidationError("--pencil", "base must be one of 1,2,3,6,9,12,14");
    out << "embedding into 3-bit vectors:";
    for (const auto& [label, vec] : fano_embedding()) out << " " << label << "->" << vec;
    out << "\n";
    for (const PencilLine& line : pencil_through(base, universe)) {
        out << "{" << line.labels[0] << "," << line.labels[1] << "," << line.labels[2] << "}: "
            << (line.commuting ? "full" : "broken");
        if (line.commuting)
            out << (line_eigenbasis(line.labels).entangled ? ", entangled" : ", unentangled");
        out << "\n";
    }
    return kOk;
}

inline int run_cube(std::ostream& out) {
    const CubeReport rep = cube_structure();
    out << rep.graph.render();
    out << "3-regular: " << (rep.three_regular ? "yes" : "no") << "\n";
    out << "edges: " << rep.edges << "\n";
    out << "bipartite: " << (rep.bipartite ? "yes" : "no") << "\n";
    out << "isomorphic to the 3-cube: " << (rep.is_cube ? "yes" : "no") << "\n";
    return rep.is_cube && rep.three_regular && rep.edges == 12 ? kOk : kVerificationFailed;
}

inline int run_coupling(std::ostream& out) {
    const CouplingReport rep = shell_coupling();
    for (const CouplingPair& p : rep.pairs) {
        out << "pair (" << p.kernel_pair[0] << "," << p.kernel_pair[1] << "): ";
        auto list = [&](const std::vector<int>& v) {
            std::string s;
            for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
            return s;
        };
        out << "{" << list(p.commuters_first) << "} u {" << list(p.commuters_second) << "}"
            << (p.partitions_cube ? " partitions the cube set" : "") << "\n";
    }
    out << "full graph 6-regular: " << (rep.six_regular ? "yes" : "no") << ", edges: "
        << rep.total_edges << "\n";
    const bool ok = rep.exactly_expected_pairs && rep.six_regular && rep.total_edges == 45;
    return ok ? kOk : kVerificationFailed;
}

inline int run_verify_all(std::ostream& out) {
    const auto results = run_all_checks();
    for (const CheckResult& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << " " << r.name;
        if (!r.pass && !r.detail.empty()) out << " (" << r.detail << ")";
        out << "\n";
    }
    return all_passed(results) ? kOk : kVerificationFailed;
}

}  // namespace detail

/// Parses and executes one invocation. Streams are injected to keep the whole
/// front end testable without spawning processes.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for two-qubit operator algebra and ring-line geometry"};
    app.require_subcommand(1);

    std::string ring_id, set = "A", format = "text";
    int square = 0, pencil_base = 0, table = 0;

    CLI::App* ring = app.add_subcommand("ring", "finite ring inspection");
    CLI::App* ring_info = ring->add_subcommand("info", "operation tables, units, ideals");
    ring_info->add_option("--ring", ring_id, "ring id")->required();

    CLI::App* line = app.add_subcommand("line", "projective line over a ring");
    CLI::App* line_points = line->add_subcommand("points", "canonical points with shell tags");
    line_points->add_option("--ring", ring_id, "ring id")->required();
    line_points->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    CLI::App* line_graph = line->add_subcommand("graph", "distant-relation graph");
    line_graph->add_option("--ring", ring_id, "ring id")->required();
    line_graph->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

    CLI::App* pauli = app.add_subcommand("pauli", "two-qubit operator algebra");
    CLI::App* pauli_table = pauli->add_subcommand("table", "multiplication table");
    pauli_table->add_option("--set", set)->check(CLI::IsMember({"A", "B", "AB"}));
    pauli->add_subcommand("mubs", "five mutually unbiased eigenbases");

    CLI::App* mermin = app.add_subcommand("mermin", "magic squares");
    mermin->add_option("--square", square)->check(CLI::Range(1, 4));

    CLI::App* fano = app.add_subcommand("fano", "pencil of lines through a base point");
    fano->add_option("--pencil", pencil_base, "base label")->required();

    app.add_subcommand("cube", "commutation graph of the eight-element shell");
    app.add_subcommand("coupling", "how kernel pairs see the cube shell");

    CLI::App* match = app.add_subcommand("match", "operator vs geometry table");
    match->add_option("--table", table)->required()->check(CLI::Range(6, 9));

    app.add_subcommand("shells", "embedding both shells into the 81-point line");
    app.add_subcommand("verify-all", "run the complete verification battery");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (ring_info->parsed()) {
            detail::print_ring_info(detail::ring_by_id(ring_id), out);
            return kOk;
        }
        if (line_points->parsed()) {
            const FiniteRing r = detail::ring_by_id(ring_id);
            const ProjectiveLineModel model = enumerate_points(r);
            if (format == "json") {
                nlohmann::json pts = nlohmann::json::array();
                for (const auto& p : model.points) pts.push_back(detail::point_json(r, p));
                out << nlohmann::json{{"ring", r.id()}, {"count", model.points.size()},
                                      {"points", pts}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& p : model.points)
                    out << point_name(r, p) << "\t"
                        << shell_tag_name(classify_point(r, p)) << "\n";
                out << model.points.size() << " points\n";
            }
            return kOk;
        }
        if (line_graph->parsed()) {
            const FiniteRing r = detail::ring_by_id(ring_id);
            const ProjectiveLineModel model = enumerate_points(r);
            const RelationMatrix rel = distant_graph(r, model, model.points);
            if (format == "dot") out << export_dot(rel, "distant");
            else if (format == "json") out << detail::relation_json(rel).dump(2) << "\n";
            else out << rel.render();
            return kOk;
        }
        if (pauli_table->parsed()) {
            detail::print_pauli_table(set, out);
            return kOk;
        }
        if (pauli->got_subcommand("mubs")) return detail::run_mubs(out);
        if (mermin->parsed()) return detail::run_mermin(square, out);
        if (fano->parsed()) return detail::run_fano(pencil_base, out);
        if (app.got_subcommand("cube")) return detail::run_cube(out);
        if (app.got_subcommand("coupling")) return detail::run_coupling(out);
        if (match->parsed()) return detail::run_match(table, out);
        if (app.got_subcommand("shells")) return detail::run_shells(out);
        if (app.got_subcommand("verify-all")) return detail::run_verify_all(out);

        err << app.help();
        return kUsageError;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace prg::cli

#endif
