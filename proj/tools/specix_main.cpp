// specix command-line front end: species expressions in, exact count tables
// and cycle-index series out. All data output is deterministic; provenance
// notes appear only under --provenance.

#include "specix/cycle_index.hpp"
#include "specix/enumerate.hpp"
#include "specix/oracle.hpp"
#include "specix/species.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace specix;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_precondition = 3;
constexpr int exit_mismatch = 4;

struct output_options {
    std::string format = "text";
    bool provenance = false;
};

void emit_notes(std::ostream& os, const output_options& opt, const std::vector<std::string>& notes) {
    if (!opt.provenance) return;
    for (const auto& n : notes) os << "# " << n << "\n";
}

// Single-index tables (digraphs, graphs): text is one comma-separated line
// starting at the first nonzero count; csv lists every n.
void emit_table_1d(std::ostream& os, const count_table& t, const output_options& opt) {
    if (opt.format == "csv") {
        emit_notes(os, opt, t.notes);
        os << "n,count\n";
        for (const auto& r : t.rows) os << r.n << ',' << r.count.str() << '\n';
    } else if (opt.format == "json") {
        os << "{";
        if (opt.provenance) {
            os << "\"provenance\":[";
            for (std::size_t i = 0; i < t.notes.size(); ++i)
                os << (i ? "," : "") << '"' << t.notes[i] << '"';
            os << "],";
        }
        os << "\"rows\":[";
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            os << (i ? "," : "") << "{\"n\":" << t.rows[i].n << ",\"count\":\""
               << t.rows[i].count.str() << "\"}";
        os << "]}\n";
    } else {
        emit_notes(os, opt, t.notes);
        std::size_t first = 0;
        while (first < t.rows.size() && t.rows[first].count == 0) ++first;
        for (std::size_t i = first; i < t.rows.size(); ++i)
            os << (i > first ? "," : "") << t.rows[i].count.str();
        os << '\n';
    }
}

// Two-index tables (outdegree sweeps, bicolored): csv uses n,k,count; text
// prints one line per n with the counts across k.
void emit_table_2d(std::ostream& os, const count_table& t, const output_options& opt) {
    if (opt.format == "csv") {
        emit_notes(os, opt, t.notes);
        os << "n,k,count\n";
        for (const auto& r : t.rows) os << r.n << ',' << r.k << ',' << r.count.str() << '\n';
    } else if (opt.format == "json") {
        os << "{";
        if (opt.provenance) {
            os << "\"provenance\":[";
            for (std::size_t i = 0; i < t.notes.size(); ++i)
                os << (i ? "," : "") << '"' << t.notes[i] << '"';
            os << "],";
        }
        os << "\"rows\":[";
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            os << (i ? "," : "") << "{\"n\":" << t.rows[i].n << ",\"k\":" << t.rows[i].k
               << ",\"count\":\"" << t.rows[i].count.str() << "\"}";
        os << "]}\n";
    } else {
        emit_notes(os, opt, t.notes);
        unsigned cur = 0;
        bool line_open = false;
        for (const auto& r : t.rows) {
            if (!line_open || r.n != cur) {
                if (line_open) os << '\n';
                os << "n=" << r.n << ": ";
                cur = r.n;
                line_open = true;
            } else {
                os << ',';
            }
            os << r.count.str();
        }
        if (line_open) os << '\n';
    }
}

std::vector<unsigned> parse_uint_list(const std::string& text, const char* what) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw CLI::ValidationError(std::string(what) + ": expected comma-separated integers");
        out.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    if (out.empty())
        throw CLI::ValidationError(std::string(what) + ": empty list");
    return out;
}

std::vector<bigint> parse_bigint_list(const std::string& text) {
    std::vector<bigint> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.emplace_back(tok);
    return out;
}

std::uint64_t budget_from_env() {
    if (const char* env = std::getenv("SPECIX_ORACLE_BUDGET")) {
        const auto v = std::strtoull(env, nullptr, 10);
        if (v > 0) return v;
    }
    return default_oracle_budget;
}

int run_verify(const family_spec& spec, unsigned max_n, std::uint64_t budget,
               const std::optional<std::vector<bigint>>& expect) {
    // engine counts
    count_table engine;
    switch (spec.kind) {
        case family_kind::relation:
            engine = digraph_counts(sp::set(), /*loops=*/true, max_n);
            break;
        case family_kind::outdegree_digraph:
            engine = digraph_counts(sp::set_of_size(spec.k), spec.loops, max_n);
            break;
        case family_kind::outdegree_set:
            engine = outdegree_set_counts(spec.sizes, max_n);
            break;
        case family_kind::regular_multigraph:
            engine = graph_counts(sp::set_of_size(spec.k), spec.loops, max_n);
            break;
    }

    bool all_ok = true;
    for (unsigned n = 1; n <= max_n; ++n) {
        const bigint eng = engine.at(n);
        std::string oracle_str;
        bool ok = true;
        try {
            const bigint orc = burnside_count(spec, n, budget);
            oracle_str = orc.str();
            ok = (orc == eng);
        } catch (const oracle_budget_error&) {
            oracle_str = "refused(budget)";
        }
        if (expect && n <= expect->size()) {
            ok = ok && (*expect)[n - 1] == eng;
            if ((*expect)[n - 1] != eng) oracle_str += " expected=" + (*expect)[n - 1].str();
        }
        all_ok = all_ok && ok;
        std::cout << spec.name() << " n=" << n << ": engine=" << eng.str()
                  << " oracle=" << oracle_str << (ok ? " ok" : " MISMATCH") << '\n';
    }
    return all_ok ? exit_ok : exit_mismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of unlabeled digraphs, regular multigraphs and bicolored "
                 "graphs via cycle-index series of species"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    output_options out;
    unsigned threads = 1;
    std::uint64_t budget = budget_from_env();
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_flag("--provenance", out.provenance, "Emit provenance metadata with the results");
    app.add_option("--threads", threads, "Accepted for compatibility; output is identical")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", budget, "Oracle budget (elementary checks), default 1e9 or "
                                       "$SPECIX_ORACLE_BUDGET");

    // digraphs
    auto* cmd_dig = app.add_subcommand("digraphs", "Count unlabeled G-digraphs");
    std::string dig_outdegree, dig_set, dig_species;
    bool dig_loops = false;
    unsigned dig_max_n = 0;
    cmd_dig->add_option("--outdegree", dig_outdegree, "Outdegree k, or a comma list for a table");
    cmd_dig->add_option("--outdegree-set", dig_set, "Allowed outdegrees, e.g. 1,3,4");
    cmd_dig->add_option("--species", dig_species, "G as a species expression");
    cmd_dig->add_flag("--loops", dig_loops, "Allow loops");
    cmd_dig->add_option("--max-n", dig_max_n, "Largest vertex count")->required();

    // graphs
    auto* cmd_gra = app.add_subcommand("graphs", "Count unlabeled G-graphs (multi-edges allowed)");
    std::string gra_species;
    bool gra_loops = false;
    unsigned gra_max_n = 0;
    std::optional<unsigned> gra_max_y;
    cmd_gra->add_option("--species", gra_species, "G as a species expression")->required();
    cmd_gra->add_flag("--loops", gra_loops, "Allow loops");
    cmd_gra->add_option("--max-n", gra_max_n, "Largest vertex count")->required();
    cmd_gra->add_option("--max-y", gra_max_y, "Override the y-sort bound (must cover deg(G)*max-n)");

    // bicolored
    auto* cmd_bic = app.add_subcommand("bicolored", "Count bicolored G-graphs by vertices and edges");
    std::string bic_species;
    unsigned bic_max_x = 0, bic_max_y = 0;
    cmd_bic->add_option("--species", bic_species, "G as a species expression")->required();
    cmd_bic->add_option("--max-x", bic_max_x, "Largest vertex count")->required();
    cmd_bic->add_option("--max-y", bic_max_y, "Largest edge count")->required();

    // cycle-index
    auto* cmd_cyc = app.add_subcommand("cycle-index", "Cycle index of a species expression");
    std::string cyc_expr;
    unsigned cyc_degree = 8;
    std::optional<unsigned> cyc_max_y;
    cmd_cyc->add_option("--expr", cyc_expr, "Species expression")->required();
    cmd_cyc->add_option("--max-degree", cyc_degree, "Truncation degree (x sort)")
        ->capture_default_str();
    cmd_cyc->add_option("--max-y", cyc_max_y, "Two-sort evaluation with this y bound");

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "Compare engine counts against the brute-force oracle");
    std::string ver_family, ver_set, ver_expect;
    unsigned ver_k = 0, ver_max_n = 0;
    bool ver_loops = false;
    cmd_ver->add_option("--family", ver_family, "relations | outdegree | outdegree-set | regular")
        ->required()
        ->check(CLI::IsMember({"relations", "outdegree", "outdegree-set", "regular"}));
    cmd_ver->add_option("--outdegree", ver_k, "k for the outdegree/regular families");
    cmd_ver->add_option("--set", ver_set, "Outdegree set, e.g. 1,3,4");
    cmd_ver->add_flag("--loops", ver_loops, "Allow loops");
    cmd_ver->add_option("--max-n", ver_max_n, "Largest vertex count")->required();
    cmd_ver->add_option("--expect", ver_expect,
                        "Comma-separated expected counts from n=1 (mismatch exits 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (cmd_dig->parsed()) {
            const int given = (!dig_outdegree.empty()) + (!dig_set.empty()) + (!dig_species.empty());
            if (given != 1) {
                std::cerr << "digraphs: give exactly one of --outdegree, --outdegree-set, "
                             "--species\n";
                return exit_usage;
            }
            if (!dig_set.empty()) {
                const auto ks = parse_uint_list(dig_set, "--outdegree-set");
                emit_table_1d(std::cout,
                              outdegree_set_counts(std::set<unsigned>(ks.begin(), ks.end()),
                                                   dig_max_n),
                              out);
            } else if (!dig_outdegree.empty()) {
                const auto ks = parse_uint_list(dig_outdegree, "--outdegree");
                if (ks.size() == 1) {
                    emit_table_1d(std::cout,
                                  digraph_counts(sp::set_of_size(ks[0]), dig_loops, dig_max_n),
                                  out);
                } else {
                    // table mode: rows n, columns k
                    count_table table;
                    std::vector<count_table> per_k;
                    for (unsigned k : ks)
                        per_k.push_back(digraph_counts(sp::set_of_size(k), dig_loops, dig_max_n));
                    for (unsigned n = 1; n <= dig_max_n; ++n)
                        for (std::size_t i = 0; i < ks.size(); ++i)
                            table.rows.push_back(
                                {n, static_cast<int>(ks[i]), per_k[i].at(n)});
                    for (const auto& t : per_k)
                        table.notes.insert(table.notes.end(), t.notes.begin(), t.notes.end());
                    emit_table_2d(std::cout, table, out);
                }
            } else {
                emit_table_1d(std::cout,
                              digraph_counts(parse_species(dig_species), dig_loops, dig_max_n),
                              out);
            }
        } else if (cmd_gra->parsed()) {
            emit_table_1d(std::cout,
                          graph_counts(parse_species(gra_species), gra_loops, gra_max_n, gra_max_y),
                          out);
        } else if (cmd_bic->parsed()) {
            emit_table_2d(std::cout,
                          bicolored_counts(parse_species(bic_species), bic_max_x, bic_max_y), out);
        } else if (cmd_cyc->parsed()) {
            const species_ptr e = parse_species(cyc_expr);
            if (out.format == "csv") {
                std::cerr << "cycle-index: csv output is not defined for series; use text or "
                             "json\n";
                return exit_usage;
            }
            if (cyc_max_y) {
                const bi_series z = cycle_index_xy(e, cyc_degree, *cyc_max_y);
                if (out.format == "json") {
                    series_json(std::cout, z);
                    std::cout << '\n';
                } else {
                    std::cout << to_string(z) << '\n';
                }
            } else {
                const p_series z = cycle_index(e, cyc_degree);
                if (out.format == "json") {
                    series_json(std::cout, z);
                    std::cout << '\n';
                } else {
                    std::cout << to_string(z) << '\n';
                }
            }
        } else if (cmd_ver->parsed()) {
            family_spec spec;
            if (ver_family == "relations") {
                spec.kind = family_kind::relation;
            } else if (ver_family == "outdegree") {
                spec.kind = family_kind::outdegree_digraph;
                spec.k = ver_k;
                spec.loops = ver_loops;
            } else if (ver_family == "outdegree-set") {
                spec.kind = family_kind::outdegree_set;
                const auto ks = parse_uint_list(ver_set, "--set");
                spec.sizes = std::set<unsigned>(ks.begin(), ks.end());
            } else {
                spec.kind = family_kind::regular_multigraph;
                spec.k = ver_k;
                spec.loops = ver_loops;
            }
            std::optional<std::vector<bigint>> expect;
            if (!ver_expect.empty()) expect = parse_bigint_list(ver_expect);
            return run_verify(spec, ver_max_n, budget, expect);
        }
    } catch (const species_parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const oracle_budget_error& e) {
        std::cerr << "oracle: " << e.what() << '\n';
        return exit_precondition;
    } catch (const composition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const species_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precondition;
    }
    return exit_ok;
}
