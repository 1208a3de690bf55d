#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "specbound/graphio.hpp"
#include "specbound/interlace.hpp"
#include "specbound/oracle.hpp"
#include "specbound/polyopt.hpp"
#include "specbound/weights.hpp"

namespace specbound::cli {

using nlohmann::json;

// exit codes: 0 ok, 1 usage, 2 input, 3 numerical, 4 soundness violation
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitSoundness = 4;

struct RunConfig {
    std::optional<std::string> graph6_text;
    std::optional<std::string> dimacs_path;
    std::optional<std::string> edgelist_path;
    std::optional<std::string> family;
    int n = 0;
    int k1 = 0;
    int k2 = 0;
    std::string weights_mode = "perron";  // ones | perron
    std::string norm_tag = "min1";        // min1 | unit | raw
    std::vector<int> k_list;              // distance-k list; {1,2} when left empty
    bool with_oracle = false;
    std::string format = "json";  // json | csv | md
    double tol = 0.0;             // 0 = library defaults (certificates only)
    std::string partition_text;
    std::string batch_path;
    std::optional<std::string> stdin_text;
};

struct LoadedGraph {
    Graph graph{0};
    std::string name;
    std::string g6;
};

inline Normalization parse_norm(const std::string& tag) {
    if (tag == "min1") return Normalization::min_entry_one;
    if (tag == "unit") return Normalization::unit_norm;
    if (tag == "raw") return Normalization::raw;
    throw InputError(Errc::bad_param, "unknown normalization tag: " + tag);
}

// 12 significant digits everywhere in serialized output
inline double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(Errc::bad_param, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// stdin format sniffing: DIMACS lines start with 'c'/'p', edge lists are
// whitespace-separated integer pairs, anything else is a graph6 line
inline Graph sniff_parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == 'c' || t[0] == 'p') return parse_dimacs(text).graph;
        std::istringstream probe(t);
        long long u, v;
        if (probe >> u >> v) return parse_edgelist(text);
        return parse_graph6(t);
    }
    throw InputError(Errc::bad_param, "empty input on stdin");
}

}  // namespace detail

inline LoadedGraph load_graph(const RunConfig& cfg) {
    LoadedGraph lg;
    const int sources = int(cfg.graph6_text.has_value()) + int(cfg.dimacs_path.has_value()) +
                        int(cfg.edgelist_path.has_value()) + int(cfg.family.has_value());
    if (sources > 1) throw InputError(Errc::bad_param, "choose exactly one input source");
    if (cfg.family) {
        const std::string& fam = *cfg.family;
        std::vector<int> params;
        auto one_param = [&]() { return cfg.n > 0 ? cfg.n : cfg.k1; };
        if (fam == "complete" || fam == "cycle" || fam == "path") {
            if (one_param() <= 0) throw InputError(Errc::bad_param, fam + " needs --n");
            params = {one_param()};
            lg.name = fam + "(" + std::to_string(params[0]) + ")";
        } else if (fam == "star") {
            if (one_param() <= 0) throw InputError(Errc::bad_param, "star needs --k1 (leaf count)");
            params = {one_param()};
            lg.name = "star(" + std::to_string(params[0]) + ")";
        } else if (fam == "complete_bipartite") {
            if (cfg.k1 <= 0 || cfg.k2 <= 0)
                throw InputError(Errc::bad_param, "complete_bipartite needs --k1 and --k2");
            params = {cfg.k1, cfg.k2};
            lg.name = "complete_bipartite(" + std::to_string(cfg.k1) + "," + std::to_string(cfg.k2) + ")";
        } else {
            lg.name = fam;
        }
        lg.graph = generate(fam, params);
    } else if (cfg.graph6_text) {
        lg.graph = parse_graph6(detail::trim(*cfg.graph6_text));
        lg.name = detail::trim(*cfg.graph6_text);
    } else if (cfg.dimacs_path) {
        lg.graph = parse_dimacs(detail::read_file(*cfg.dimacs_path)).graph;
        lg.name = *cfg.dimacs_path;
    } else if (cfg.edgelist_path) {
        lg.graph = parse_edgelist(detail::read_file(*cfg.edgelist_path));
        lg.name = *cfg.edgelist_path;
    } else if (cfg.stdin_text) {
        lg.graph = detail::sniff_parse(*cfg.stdin_text);
        lg.name = "stdin";
    } else {
        throw InputError(Errc::bad_param, "no graph input given");
    }
    if (lg.graph.vertex_count() < 63) lg.g6 = encode_graph6(lg.graph);
    return lg;
}

inline WeightVector make_weights(const Graph& g, const Spectrum& s, const RunConfig& cfg) {
    const Normalization nm = parse_norm(cfg.norm_tag);
    if (cfg.weights_mode == "perron") return perron_vector(g, s, nm);
    if (cfg.weights_mode == "ones") return ones_weights(g, s, nm);
    throw InputError(Errc::bad_param, "unknown weights mode: " + cfg.weights_mode);
}

// ---------------------------------------------------------------- JSON views

inline json graph_json(const LoadedGraph& lg) {
    return json{{"name", lg.name},
                {"n", lg.graph.vertex_count()},
                {"m", lg.graph.edge_count()},
                {"graph6", lg.g6}};
}

inline json spectrum_json(const Spectrum& s) {
    json vals = json::array();
    for (double v : s.values) vals.push_back(round12(v));
    json groups = json::array();
    for (const auto& [value, mult] : distinct_eigenvalues(s))
        groups.push_back(json{{"value", round12(value)}, {"multiplicity", mult}});
    json j{{"eigenvalues", vals},
           {"distinct", groups},
           {"lambda1", round12(s.lambda1())},
           {"lambda_min", round12(s.lambda_min())}};
    j["gap"] = s.n >= 2 ? json(round12(s.values[0] - s.values[1])) : json();
    return j;
}

inline json weights_json(const WeightVector& nu, const std::string& mode) {
    json entries = json::array();
    for (double x : nu.nu) entries.push_back(round12(x));
    return json{{"mode", mode},
                {"normalization", to_string(nu.normalization)},
                {"lambda1", round12(nu.lambda1)},
                {"nu", entries},
                {"norm_sq", round12(nu.norm_sq())},
                {"min_entry", round12(nu.min_entry())},
                {"eigen_certified", nu.eigen_certified}};
}

inline json bound_json(const BoundReport& r) {
    json j{{"name", r.bound_name},
           {"value", round12(r.value)},
           {"bounds_what", r.bounds_what},
           {"direction", to_string(r.direction)},
           {"lambda1", round12(r.lambda1)},
           {"lambda_min", round12(r.lambda_min)},
           {"weight_total", round12(r.weight_total)}};
    if (r.k) j["k"] = *r.k;
    if (!r.candidate.empty()) j["candidate"] = r.candidate;
    if (r.polynomial) {
        json coeffs = json::array();
        for (double c : r.polynomial->coeffs) coeffs.push_back(round12(c));
        j["polynomial"] = coeffs;
    }
    if (r.oracle_value) j["oracle_value"] = round12(*r.oracle_value);
    if (r.slack) j["slack"] = round12(*r.slack);
    if (r.tight) j["tight"] = *r.tight;
    return j;
}

inline json matrix_json(const SymMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.order(); ++j) row.push_back(round12(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json quotient_json(const Partition& p, const QuotientResult& q) {
    json parts = json::array();
    for (const auto& part : p.parts) parts.push_back(part);
    json ravg = json::array();
    for (int i = 0; i < q.m; ++i) {
        json row = json::array();
        for (int j = 0; j < q.m; ++j)
            row.push_back(round12(q.row_average[static_cast<std::size_t>(i) * q.m + j]));
        ravg.push_back(row);
    }
    json mu = json::array();
    for (double v : q.mu) mu.push_back(round12(v));
    json slack = json::array();
    for (const auto& [up, low] : q.report.per_index_slack)
        slack.push_back(json::array({round12(up), round12(low)}));
    return json{{"partition", parts},
                {"B", matrix_json(q.B)},
                {"row_average", ravg},
                {"mu", mu},
                {"interlacing",
                 json{{"holds", q.report.holds},
                      {"tight_upper", q.report.tight_upper},
                      {"tight_lower", q.report.tight_lower},
                      {"per_index_slack", slack}}},
                {"tight", q.tight},
                {"residual", round12(q.residual)}};
}

// ------------------------------------------------------------ table emitters

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void emit_bound_table(const std::vector<BoundReport>& reports, const std::string& format,
                             std::ostream& out) {
    auto num = [](double x) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return std::string(buf);
    };
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"name", "value", "direction", "bounds_what", "k", "candidate", "oracle", "slack", "tight"});
    for (const auto& r : reports) {
        rows.push_back({r.bound_name, num(r.value), to_string(r.direction), r.bounds_what,
                        r.k ? std::to_string(*r.k) : "", r.candidate,
                        r.oracle_value ? num(*r.oracle_value) : "", r.slack ? num(*r.slack) : "",
                        r.tight ? (*r.tight ? "true" : "false") : ""});
    }
    if (format == "csv") {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
            out << "\n";
        }
        return;
    }
    // markdown table
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << "|";
        for (const auto& cell : rows[r]) out << " " << cell << " |";
        out << "\n";
        if (r == 0) {
            out << "|";
            for (std::size_t i = 0; i < rows[0].size(); ++i) out << " --- |";
            out << "\n";
        }
    }
}

// ------------------------------------------------------------------ commands

namespace detail {

struct BoundsOutcome {
    std::vector<BoundReport> reports;
    json notes = json::array();
    bool violation = false;
};

/// Shared bounds pipeline. The ratio and polynomial bounds require
/// eigenvector weights (ones qualify only on regular graphs); with plain ones
/// weights on an irregular graph they are skipped with a note, never emitted
/// unsound. The chromatic partition bound needs a valid alpha* upper bound:
/// the ratio value when available, else the oracle value.
inline BoundsOutcome compute_bounds(const Graph& g, const Spectrum& s, const WeightVector& nu,
                                    const RunConfig& cfg) {
    BoundsOutcome out;
    const int n = g.vertex_count();
    const bool oracle_sets = cfg.with_oracle && n <= 32;
    const bool oracle_chi = cfg.with_oracle && n <= 12;

    std::optional<BoundReport> ratio;
    if (nu.eigen_certified) {
        ratio = ratio_bound_independence(s, nu);
    } else {
        out.notes.push_back("ratio and distance-k bounds skipped: weights are not a lambda1 eigenvector "
                            "(rerun with --weights perron)");
    }
    if (ratio && oracle_sets) ratio->attach_oracle(max_weight_independent_set(g, nu).exact_value);
    if (ratio) out.reports.push_back(*ratio);

    if (nu.eigen_certified) {
        std::vector<int> ks = cfg.k_list.empty() ? std::vector<int>{1, 2} : cfg.k_list;
        for (int k : ks) {
            BoundReport r = best_distance_k_bound(g, s, nu, k);
            if (oracle_sets) r.attach_oracle(max_weight_distance_k_independent_set(g, nu, k).exact_value);
            out.reports.push_back(std::move(r));
        }
    }

    BoundReport clique = clique_rayleigh_bound(s, nu);
    if (oracle_sets) clique.attach_oracle(max_weight_clique(g, nu).exact_value);
    out.reports.push_back(std::move(clique));

    std::optional<double> chi_oracle;
    if (oracle_chi) chi_oracle = chromatic_number(g).exact_value;
    std::optional<double> alpha_upper;
    if (ratio) alpha_upper = ratio->value;
    else if (oracle_sets) alpha_upper = max_weight_independent_set(g, nu).exact_value;
    if (alpha_upper) {
        auto chrom = chromatic_lower_bounds(s, nu, *alpha_upper);
        for (auto& r : chrom) {
            if (chi_oracle) r.attach_oracle(*chi_oracle);
            out.reports.push_back(std::move(r));
        }
    } else {
        out.notes.push_back("chromatic partition bound skipped: no valid alpha* upper bound available "
                            "(enable --oracle or --weights perron)");
        auto chrom = chromatic_lower_bounds(s, nu, 1.0);  // hoffman half only
        BoundReport hoff = chrom[1];
        if (chi_oracle) hoff.attach_oracle(*chi_oracle);
        out.reports.push_back(std::move(hoff));
    }

    for (const auto& r : out.reports)
        if (!r.sound(1e-9)) out.violation = true;
    return out;
}

}  // namespace detail

inline int run_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const LoadedGraph lg = load_graph(cfg);
    const Spectrum s = eigendecompose(adjacency_matrix(lg.graph));
    json j{{"graph", graph_json(lg)},
           {"spectrum", spectrum_json(s)},
           {"bounds", json::array()},
           {"certificates", json::array()}};
    try {
        j["weights"] = weights_json(make_weights(lg.graph, s, cfg), cfg.weights_mode);
    } catch (const Error& e) {
        j["weights"] = json();
        j["notes"] = json::array({std::string("weights unavailable: ") + e.what()});
    }
    if (cfg.format == "json") {
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "index,eigenvalue\n";
        for (int i = 0; i < s.n; ++i) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", s.values[static_cast<std::size_t>(i)]);
            out << i + 1 << "," << buf << "\n";
        }
    } else {
        out << "| index | eigenvalue |\n| --- | --- |\n";
        for (int i = 0; i < s.n; ++i) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", s.values[static_cast<std::size_t>(i)]);
            out << "| " << i + 1 << " | " << buf << " |\n";
        }
    }
    (void)err;
    return kExitOk;
}

inline int run_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const LoadedGraph lg = load_graph(cfg);
    const Spectrum s = eigendecompose(adjacency_matrix(lg.graph));
    const WeightVector nu = make_weights(lg.graph, s, cfg);
    const auto res = detail::compute_bounds(lg.graph, s, nu, cfg);

    if (cfg.format == "json") {
        json jb = json::array();
        for (const auto& r : res.reports) jb.push_back(bound_json(r));
        json j{{"graph", graph_json(lg)},
               {"spectrum", spectrum_json(s)},
               {"weights", weights_json(nu, cfg.weights_mode)},
               {"bounds", jb},
               {"certificates", json::array()}};
        if (!res.notes.empty()) j["notes"] = res.notes;
        out << j.dump(2) << "\n";
    } else {
        emit_bound_table(res.reports, cfg.format, out);
    }
    if (res.violation) {
        err << "soundness violation: a bound crossed its oracle value\n";
        return kExitSoundness;
    }
    return kExitOk;
}

inline int run_quotient(const RunConfig& cfg, bool certify_only, std::ostream& out, std::ostream& err) {
    const LoadedGraph lg = load_graph(cfg);
    const Partition p = parse_partition(cfg.partition_text);
    const Spectrum s = eigendecompose(adjacency_matrix(lg.graph));
    const WeightVector nu = make_weights(lg.graph, s, cfg);
    const SymMatrix a = adjacency_matrix(lg.graph);
    QuotientResult q = weighted_quotient(a, p, nu);
    if (cfg.tol > 0.0) {
        const auto cert = tightness_certificate(a, q, cfg.tol);
        q.tight = cert.is_tight;
        q.residual = cert.residual;
    }

    if (cfg.format == "json") {
        json cert = quotient_json(p, q);
        if (certify_only) {
            cert = json{{"partition", cert["partition"]},
                        {"tight", q.tight},
                        {"residual", round12(q.residual)},
                        {"mu", cert["mu"]},
                        {"tight_upper", q.report.tight_upper},
                        {"tight_lower", q.report.tight_lower},
                        {"holds", q.report.holds}};
        }
        json j{{"graph", graph_json(lg)},
               {"spectrum", spectrum_json(s)},
               {"weights", weights_json(nu, cfg.weights_mode)},
               {"bounds", json::array()},
               {"certificates", json::array({cert})}};
        out << j.dump(2) << "\n";
    } else {
        auto num = [](double x) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", x);
            return std::string(buf);
        };
        std::string mu_list;
        for (double v : q.mu) mu_list += (mu_list.empty() ? "" : " ") + num(v);
        if (cfg.format == "csv") {
            out << "tight,residual,mu\n"
                << (q.tight ? "true" : "false") << "," << num(q.residual) << "," << csv_escape(mu_list)
                << "\n";
        } else {
            out << "| tight | residual | mu |\n| --- | --- | --- |\n| " << (q.tight ? "true" : "false")
                << " | " << num(q.residual) << " | " << mu_list << " |\n";
        }
    }
    (void)err;
    return kExitOk;
}

inline int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const LoadedGraph lg = load_graph(cfg);
    const int n = lg.graph.vertex_count();
    const Spectrum s = eigendecompose(adjacency_matrix(lg.graph));
    const WeightVector nu = make_weights(lg.graph, s, cfg);

    std::vector<OracleResult> results;
    json notes = json::array();
    if (n <= 32) {
        results.push_back(max_weight_independent_set(lg.graph, nu));
        std::vector<int> ks = cfg.k_list.empty() ? std::vector<int>{1, 2} : cfg.k_list;
        for (int k : ks) results.push_back(max_weight_distance_k_independent_set(lg.graph, nu, k));
        results.push_back(max_weight_clique(lg.graph, nu));
    } else {
        notes.push_back("set oracles skipped: n > 32");
    }
    if (n <= 12) {
        results.push_back(chromatic_number(lg.graph));
    } else {
        notes.push_back("chromatic oracle skipped: n > 12");
    }

    if (cfg.format == "json") {
        json jr = json::array();
        for (const auto& r : results) {
            json e{{"parameter", r.parameter},
                   {"value", round12(r.exact_value)},
                   {"nodes", r.nodes}};
            if (!r.coloring.empty()) e["coloring"] = r.coloring;
            else e["witness"] = r.witness;
            jr.push_back(e);
        }
        json j{{"graph", graph_json(lg)},
               {"spectrum", spectrum_json(s)},
               {"weights", weights_json(nu, cfg.weights_mode)},
               {"bounds", json::array()},
               {"certificates", json::array()},
               {"oracles", jr}};
        if (!notes.empty()) j["notes"] = notes;
        out << j.dump(2) << "\n";
    } else {
        auto num = [](double x) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", x);
            return std::string(buf);
        };
        if (cfg.format == "csv") {
            out << "parameter,value,nodes\n";
            for (const auto& r : results)
                out << csv_escape(r.parameter) << "," << num(r.exact_value) << "," << r.nodes << "\n";
        } else {
            out << "| parameter | value | nodes |\n| --- | --- | --- |\n";
            for (const auto& r : results)
                out << "| " << r.parameter << " | " << num(r.exact_value) << " | " << r.nodes << " |\n";
        }
    }
    (void)err;
    return kExitOk;
}

inline int run_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::istringstream lines(cfg.batch_path == "-" && cfg.stdin_text ? *cfg.stdin_text
                                                                     : detail::read_file(cfg.batch_path));
    json entries = json::array();
    int line_no = 0, attempted = 0, ok = 0, tight_ratio = 0, violations = 0;
    std::optional<double> max_slack;

    std::string line;
    while (std::getline(lines, line)) {
        ++line_no;
        const std::string text = detail::trim(line);
        if (text.empty()) continue;
        ++attempted;
        try {
            RunConfig per = cfg;
            per.graph6_text = text;
            per.stdin_text.reset();
            const LoadedGraph lg = load_graph(per);
            const Spectrum s = eigendecompose(adjacency_matrix(lg.graph));
            const WeightVector nu = make_weights(lg.graph, s, per);
            const auto res = detail::compute_bounds(lg.graph, s, nu, per);
            json jb = json::array();
            for (const auto& r : res.reports) {
                jb.push_back(bound_json(r));
                if (r.bound_name == "ratio" && r.tight && *r.tight) ++tight_ratio;
                if (r.slack) max_slack = max_slack ? std::max(*max_slack, *r.slack) : *r.slack;
                if (!r.sound(1e-9)) ++violations;
            }
            entries.push_back(json{{"line", line_no}, {"graph6", text}, {"bounds", jb}});
            ++ok;
        } catch (const Error& e) {
            entries.push_back(json{{"line", line_no}, {"graph6", text}, {"error", e.what()}});
        }
    }

    json aggregate{{"graphs_ok", ok},
                   {"graphs_failed", attempted - ok},
                   {"tight_ratio_bounds", tight_ratio},
                   {"soundness_violations", violations}};
    aggregate["max_slack"] = max_slack ? json(round12(*max_slack)) : json();
    json j{{"entries", entries}, {"aggregate", aggregate}};
    if (cfg.format == "json") {
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "graphs_ok,graphs_failed,tight_ratio_bounds,soundness_violations\n"
            << ok << "," << attempted - ok << "," << tight_ratio << "," << violations << "\n";
    } else {
        out << "| graphs_ok | graphs_failed | tight_ratio_bounds | soundness_violations |\n"
            << "| --- | --- | --- | --- |\n| " << ok << " | " << attempted - ok << " | " << tight_ratio
            << " | " << violations << " |\n";
    }
    if (violations > 0) {
        err << "soundness violation: a bound crossed its oracle value\n";
        return kExitSoundness;
    }
    if (attempted > 0 && ok == 0) {
        err << "all " << attempted << " input lines failed\n";
        return kExitInput;
    }
    return kExitOk;
}

inline int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

/// Full argv-to-exit-code driver; streams are injected so tests can run the
/// CLI in-process.
inline int dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out,
                    std::ostream& err) {
    CLI::App app{"eigenvalue-interlacing bounds on weighted graph parameters"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_input = [&](CLI::App* sub) {
        auto* g6 = sub->add_option("--graph6", cfg.graph6_text, "inline graph6 string");
        auto* dim = sub->add_option("--dimacs", cfg.dimacs_path, "DIMACS file path");
        auto* edg = sub->add_option("--edgelist", cfg.edgelist_path, "edge-list file path");
        auto* fam = sub->add_option(
            "--family", cfg.family, "graph family: complete|cycle|path|star|complete_bipartite|petersen");
        g6->excludes(dim)->excludes(edg)->excludes(fam);
        dim->excludes(edg)->excludes(fam);
        edg->excludes(fam);
        sub->add_option("--n", cfg.n, "vertex count for complete/cycle/path");
        sub->add_option("--k1", cfg.k1, "first family parameter (star leaves, bipartite side)");
        sub->add_option("--k2", cfg.k2, "second family parameter (bipartite side)");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--weights", cfg.weights_mode, "weight vector: ones|perron")
            ->check(CLI::IsMember({"ones", "perron"}));
        sub->add_option("--norm", cfg.norm_tag, "normalization: min1|unit|raw")
            ->check(CLI::IsMember({"min1", "unit", "raw"}));
        sub->add_option("--format", cfg.format, "output format: json|csv|md")
            ->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_option("--tol", cfg.tol, "tolerance override for certificates");
    };
    auto add_klist = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.k_list, "distance-k values (repeatable; default 1 2)")
            ->check(CLI::PositiveNumber);
    };

    auto* sp = app.add_subcommand("spectrum", "eigenvalues, distinct groups, weight vector");
    add_input(sp);
    add_common(sp);
    auto* bd = app.add_subcommand("bounds", "spectral bounds with optional oracle comparison");
    add_input(bd);
    add_common(bd);
    add_klist(bd);
    bd->add_flag("--oracle", cfg.with_oracle, "attach exact oracle values");
    auto* qt = app.add_subcommand("quotient", "weighted quotient matrix and interlacing report");
    add_input(qt);
    add_common(qt);
    qt->add_option("partition", cfg.partition_text, "partition, e.g. 0;1,4,5;2,3,6,7,8,9")->required();
    auto* cf = app.add_subcommand("certify", "tight-interlacing certificate for a partition");
    add_input(cf);
    add_common(cf);
    cf->add_option("partition", cfg.partition_text, "partition, e.g. 0;1,4,5;2,3,6,7,8,9")->required();
    auto* oc = app.add_subcommand("oracle", "exact parameters by exhaustive search");
    add_input(oc);
    add_common(oc);
    add_klist(oc);
    auto* bt = app.add_subcommand("batch", "bounds over a file of graph6 lines");
    add_common(bt);
    add_klist(bt);
    bt->add_flag("--oracle", cfg.with_oracle, "attach exact oracle values");
    bt->add_option("file", cfg.batch_path, "file with one graph6 string per line, or -")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const bool needs_graph = sp->parsed() || bd->parsed() || qt->parsed() || cf->parsed() || oc->parsed();
    const bool has_source = cfg.graph6_text || cfg.dimacs_path || cfg.edgelist_path || cfg.family;
    if ((needs_graph && !has_source) || (bt->parsed() && cfg.batch_path == "-")) {
        std::ostringstream ss;
        ss << in.rdbuf();
        cfg.stdin_text = ss.str();
    }

    if (sp->parsed()) return guarded(err, [&] { return run_spectrum(cfg, out, err); });
    if (bd->parsed()) return guarded(err, [&] { return run_bounds(cfg, out, err); });
    if (qt->parsed()) return guarded(err, [&] { return run_quotient(cfg, false, out, err); });
    if (cf->parsed()) return guarded(err, [&] { return run_quotient(cfg, true, out, err); });
    if (oc->parsed()) return guarded(err, [&] { return run_oracle(cfg, out, err); });
    if (bt->parsed()) return guarded(err, [&] { return run_batch(cfg, out, err); });
    err << "no subcommand selected\n";
    return kExitUsage;
}

}  // namespace specbound::cli
