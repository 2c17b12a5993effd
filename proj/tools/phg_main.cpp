#include "phg/clique.hpp"
#include "phg/constructions.hpp"
#include "phg/degrees.hpp"
#include "phg/errors.hpp"
#include "phg/hypergraph.hpp"
#include "phg/io.hpp"
#include "phg/oracle.hpp"
#include "phg/rational.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using phg::Json;
using phg::Rational;

struct OutputOptions {
    std::string format = "json";
    int decimal = -1;
    std::string out_path;
};

// ---- option parsing helpers ------------------------------------------------

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) parts.push_back(item);
    return parts;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const std::string& part : split_list(text)) out.push_back(phg::parse_rational(part));
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (const std::string& part : split_list(text)) {
        Rational x = phg::parse_rational(part);
        if (phg::denominator(x) != 1 || x < 1)
            phg::fail(phg::ErrorKind::Domain, "sizes must be positive integers, got '" + part + "'");
        out.push_back(static_cast<std::size_t>(phg::numerator(x)));
    }
    return out;
}

// ---- JSON fragments ----------------------------------------------------------

Json rational_list_json(const std::vector<Rational>& xs) {
    Json a = Json::array();
    for (const Rational& x : xs) a.push_back(phg::to_string(x));
    return a;
}

Json tuple_json(const std::vector<phg::VertexId>& tuple) {
    Json a = Json::array();
    for (phg::VertexId v : tuple) a.push_back(Json::array({v.cls, v.idx}));
    return a;
}

Json sizes_json(const phg::PartiteHypergraph& g) {
    Json a = Json::array();
    for (int c = 0; c < g.num_classes(); ++c) a.push_back(g.class_size(c));
    return a;
}

Json instance_summary(const phg::PartiteHypergraph& g) {
    if (g.num_edges() <= 512) return phg::instance_to_json(g);
    Json s;
    s["r"] = g.uniformity();
    s["class_sizes"] = sizes_json(g);
    s["edges"] = g.num_edges();
    s["note"] = "instance too large to embed, use --out";
    return s;
}

// ---- rendering ---------------------------------------------------------------

std::string scalar_text(const Json& v, int decimal) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (decimal >= 0) {
            try {
                Rational x = phg::parse_rational(s);
                if (phg::denominator(x) != 1)
                    return s + " (~" + phg::to_decimal_string(x, decimal) + ")";
            } catch (const phg::Error&) {
            }
        }
        return s;
    }
    return v.dump();
}

bool is_scalar_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const Json& x : v)
        if (x.is_object() || x.is_array()) return false;
    return true;
}

void print_table(std::ostream& os, const Json& node, int indent, int decimal) {
    const std::string pad(2 * static_cast<std::size_t>(indent), ' ');
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
                os << pad << key << ":\n";
                print_table(os, value, indent + 1, decimal);
            } else if (value.is_array()) {
                os << pad << key << ": [";
                for (std::size_t i = 0; i < value.size(); ++i)
                    os << (i ? ", " : "") << scalar_text(value[i], decimal);
                os << "]\n";
            } else {
                os << pad << key << ": " << scalar_text(value, decimal) << "\n";
            }
        }
    } else if (node.is_array()) {
        for (const Json& item : node) {
            if (is_scalar_array(item)) {
                os << pad << "- [";
                for (std::size_t i = 0; i < item.size(); ++i)
                    os << (i ? ", " : "") << scalar_text(item[i], decimal);
                os << "]\n";
            } else if (item.is_object() || item.is_array()) {
                os << pad << "-\n";
                print_table(os, item, indent + 1, decimal);
            } else {
                os << pad << "- " << scalar_text(item, decimal) << "\n";
            }
        }
    } else {
        os << pad << scalar_text(node, decimal) << "\n";
    }
}

std::string csv_field(const Json& v) {
    std::string s;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ';';
            s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
        }
    } else {
        s = v.is_string() ? v.get<std::string>() : v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        quoted += '"';
        return quoted;
    }
    return s;
}

void render(const Json& out, const OutputOptions& opts) {
    if (opts.format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    if (opts.format == "table") {
        print_table(std::cout, out, 0, opts.decimal);
        return;
    }
    if (opts.format == "csv") {
        auto rows = out.find("rows");
        if (rows == out.end() || !rows->is_array() || rows->empty())
            phg::fail(phg::ErrorKind::Domain, "csv output needs a row-shaped report");
        Json header = out;
        header.erase("rows");
        std::cout << "# config: " << header.dump() << "\n";
        const Json& first = (*rows)[0];
        bool lead = true;
        for (const auto& [key, value] : first.items()) {
            (void)value;
            std::cout << (lead ? "" : ",") << key;
            lead = false;
        }
        std::cout << "\n";
        for (const Json& row : *rows) {
            lead = true;
            for (const auto& [key, value] : row.items()) {
                (void)key;
                std::cout << (lead ? "" : ",") << csv_field(value);
                lead = false;
            }
            std::cout << "\n";
        }
        return;
    }
    phg::fail(phg::ErrorKind::Domain, "unknown format '" + opts.format + "'");
}

// ---- subcommands ---------------------------------------------------------------

int cmd_density(const std::string& input, const OutputOptions& opts) {
    phg::PartiteHypergraph g = phg::read_instance(input);
    std::vector<Rational> rho = phg::density_vector(g);
    Rational sum(0);
    for (const Rational& x : rho) sum += x;

    Json out;
    out["command"] = "density";
    out["config"] = Json{{"input", input}};
    out["r"] = g.uniformity();
    out["class_sizes"] = sizes_json(g);
    {
        Json cw = Json::array();
        for (int c = 0; c < g.num_classes(); ++c) cw.push_back(phg::to_string(g.class_weight(c)));
        out["class_weights"] = std::move(cw);
    }
    out["densities"] = rational_list_json(rho);
    out["density_sum"] = phg::to_string(sum);
    out["clique_bound"] = phg::to_string(sum - g.uniformity());
    render(out, opts);
    return 0;
}

int cmd_cliques(const std::string& input, std::size_t witnesses, const OutputOptions& opts) {
    phg::PartiteHypergraph g = phg::read_instance(input);
    phg::CliqueOptions copts;
    copts.collect_witnesses = witnesses > 0;
    copts.witness_limit = witnesses;
    phg::CliqueReport report = phg::clique_density(g, copts);
    std::vector<Rational> rho = phg::density_vector(g);
    Rational sum(0);
    for (const Rational& x : rho) sum += x;
    Rational bound = sum - g.uniformity();

    Json out;
    out["command"] = "cliques";
    out["config"] = Json{{"input", input}, {"witnesses", witnesses}};
    out["C"] = phg::to_string(report.density);
    out["weighted_count"] = phg::to_string(report.weighted_count);
    out["transversal_count"] = report.transversal_count;
    out["clique_bound"] = phg::to_string(bound);
    out["slack"] = phg::to_string(report.density - bound);
    if (copts.collect_witnesses) {
        Json w = Json::array();
        for (const auto& t : report.witnesses) w.push_back(tuple_json(t));
        out["witnesses"] = std::move(w);
    }
    render(out, opts);
    return 0;
}

int cmd_near_cliques(const std::string& input, int missing, std::size_t witnesses,
                     const OutputOptions& opts) {
    phg::PartiteHypergraph g = phg::read_instance(input);
    phg::CliqueOptions copts;
    copts.collect_witnesses = witnesses > 0;
    copts.witness_limit = witnesses;
    phg::CliqueReport report = phg::count_near_cliques(g, missing, copts);

    Json out;
    out["command"] = "near-cliques";
    out["config"] = Json{{"input", input}, {"missing", missing}, {"witnesses", witnesses}};
    out["transversal_count"] = report.transversal_count;
    out["weighted_count"] = phg::to_string(report.weighted_count);
    out["density"] = phg::to_string(report.density);
    if (copts.collect_witnesses) {
        Json w = Json::array();
        for (const auto& t : report.witnesses) w.push_back(tuple_json(t));
        out["witnesses"] = std::move(w);
    }
    render(out, opts);
    return 0;
}

int cmd_construct(int r, const std::string& target_text, const std::string& tolerance_text,
                  bool skip_verify, const OutputOptions& opts) {
    std::vector<Rational> target = parse_rational_list(target_text);
    Rational tolerance = phg::parse_rational(tolerance_text);
    phg::Construction built = phg::build_extremal(r, target, tolerance);
    const phg::ConstructionRecipe& recipe = built.recipe;

    Json out;
    out["command"] = "construct";
    out["config"] = Json{{"r", r},
                         {"target", rational_list_json(target)},
                         {"tolerance", phg::to_string(tolerance)},
                         {"verify", !skip_verify}};
    out["class_sizes"] = sizes_json(built.graph);
    out["edges"] = built.graph.num_edges();
    out["achieved_densities"] = rational_list_json(recipe.achieved);
    out["clique_bound"] = phg::to_string(recipe.clique_density);
    if (!skip_verify) {
        Rational measured = phg::clique_density(built.graph).density;
        out["measured_clique_density"] = phg::to_string(measured);
        out["tight"] = measured == recipe.clique_density;
        if (measured != recipe.clique_density)
            phg::fail(phg::ErrorKind::Internal,
                      "constructed instance misses its clique density target");
    }
    {
        Json recipe_json;
        recipe_json["sorted_target"] = rational_list_json(recipe.sorted_target);
        recipe_json["class_order"] = recipe.class_order;
        Json base = Json::array();
        for (const auto& cls : recipe.base_weights) base.push_back(rational_list_json(cls));
        recipe_json["base_weights"] = std::move(base);
        recipe_json["base_delta"] = phg::to_string(recipe.base_delta);
        Json steps = Json::array();
        for (const phg::LevelStep& st : recipe.steps)
            steps.push_back(Json{{"uniformity", st.uniformity},
                                 {"scale", st.scale},
                                 {"class_sizes", st.class_sizes},
                                 {"lifted_edges", st.lifted_edges},
                                 {"complement_edges", st.complement_edges},
                                 {"clique_edges", st.clique_edges}});
        recipe_json["steps"] = std::move(steps);
        out["recipe"] = std::move(recipe_json);
    }
    if (!opts.out_path.empty()) {
        phg::write_instance(built.graph, opts.out_path);
        out["written"] = opts.out_path;
    } else {
        out["instance"] = instance_summary(built.graph);
    }
    render(out, opts);
    return 0;
}

int cmd_lift(const std::string& input, const OutputOptions& opts) {
    phg::SimpleRGraph g = phg::read_rgraph(input);
    phg::PartiteHypergraph lifted = phg::decaen_lift(g);
    std::vector<Rational> rho = phg::density_vector(lifted);
    phg::BalanceVerdict balance = lifted.uniformity() >= 2
                                      ? phg::is_strictly_balanced(lifted, lifted.uniformity() - 1)
                                      : phg::BalanceVerdict{true, 0, std::nullopt};
    auto clique = phg::contains_clique(lifted);
    bool complete = phg::contains_complete_subgraph(g);
    if (clique.has_value() != complete)
        phg::fail(phg::ErrorKind::Internal,
                  "lift clique presence disagrees with the source graph");

    Json out;
    out["command"] = "lift";
    out["config"] = Json{{"input", input}};
    out["source"] = Json{{"r", g.r}, {"n", g.n}, {"edges", g.edges.size()}};
    out["class_sizes"] = sizes_json(lifted);
    out["edges"] = lifted.num_edges();
    out["densities"] = rational_list_json(rho);
    out["strictly_balanced"] = balance.balanced;
    out["clique_present"] = clique.has_value();
    if (clique) out["clique_witness"] = tuple_json(*clique);
    if (!opts.out_path.empty()) {
        phg::write_instance(lifted, opts.out_path);
        out["written"] = opts.out_path;
    } else {
        out["instance"] = instance_summary(lifted);
    }
    render(out, opts);
    return 0;
}

int cmd_blowup(const std::string& input, const std::string& scale_text, const OutputOptions& opts) {
    phg::PartiteHypergraph g = phg::read_instance(input);
    std::vector<std::size_t> raw = parse_size_list(scale_text);
    std::vector<unsigned> scale;
    for (std::size_t s : raw) scale.push_back(static_cast<unsigned>(s));
    if (scale.size() == 1) scale.assign(g.num_classes(), scale[0]);

    std::vector<Rational> rho_before = phg::density_vector(g);
    Rational clique_before = phg::clique_density(g).density;
    phg::PartiteHypergraph big = phg::blow_up(g, scale);
    std::vector<Rational> rho_after = phg::density_vector(big);
    Rational clique_after = phg::clique_density(big).density;
    if (rho_before != rho_after || clique_before != clique_after)
        phg::fail(phg::ErrorKind::Internal, "blow-up failed to preserve densities");

    Json out;
    out["command"] = "blowup";
    out["config"] = Json{{"input", input}, {"scale", raw}};
    out["original_class_sizes"] = sizes_json(g);
    out["class_sizes"] = sizes_json(big);
    out["edges"] = big.num_edges();
    out["densities"] = rational_list_json(rho_after);
    out["clique_density"] = phg::to_string(clique_after);
    out["densities_preserved"] = true;
    if (!opts.out_path.empty()) {
        phg::write_instance(big, opts.out_path);
        out["written"] = opts.out_path;
    } else {
        out["instance"] = instance_summary(big);
    }
    render(out, opts);
    return 0;
}

int cmd_balance(const std::string& input, int tuple_size, const OutputOptions& opts) {
    phg::PartiteHypergraph g = phg::read_instance(input);
    const int s = tuple_size > 0 ? tuple_size : g.uniformity() - 1;
    phg::BalanceVerdict verdict = phg::is_strictly_balanced(g, s);

    Json out;
    out["command"] = "balance";
    out["config"] = Json{{"input", input}, {"tuple_size", s}};
    out["balanced"] = verdict.balanced;
    out["tuples_checked"] = verdict.tuples_checked;
    if (verdict.violation) {
        const phg::BalanceViolation& v = *verdict.violation;
        out["violation"] = Json{{"tuple", tuple_json(v.tuple)},
                                {"class_set_a", v.class_set_a},
                                {"degree_a", v.degree_a},
                                {"class_set_b", v.class_set_b},
                                {"degree_b", v.degree_b}};
    }
    if (s == g.uniformity() - 1 && g.num_classes() == g.uniformity() + 1) {
        phg::CodegreeSummary summary = phg::codegree_profile(g);
        out["codegrees"] = Json{{"tuple_count", summary.tuple_count},
                                {"min", summary.min_degree},
                                {"max", summary.max_degree},
                                {"mean", phg::to_string(summary.mean_degree)}};
    }
    render(out, opts);
    return 0;
}

int cmd_threshold(const std::string& input, int missing, bool all_classes, bool no_edge_sums,
                  const OutputOptions& opts) {
    phg::PartiteHypergraph g = phg::read_instance(input);
    phg::ThresholdOptions topts;
    topts.all_classes = all_classes;
    topts.edge_sums = !no_edge_sums;
    phg::ThresholdCertificate cert = phg::threshold_check(g, missing, topts);

    Json out;
    out["command"] = "threshold";
    out["config"] = Json{{"input", input},
                         {"missing", missing},
                         {"all_classes", all_classes},
                         {"edge_sums", !no_edge_sums}};
    out["densities"] = rational_list_json(cert.rho);
    out["sigma"] = rational_list_json(cert.sigma);
    out["j_star"] = cert.j_star;
    out["margin"] = phg::to_string(cert.margin);
    out["strictly_balanced"] = cert.balance.balanced;
    out["theorem_applies"] = cert.theorem_applies;
    out["witness_found"] = cert.witness.has_value();
    if (cert.witness) out["witness"] = tuple_json(*cert.witness);
    out["theorem_violated"] = cert.theorem_violated;
    if (cert.max_edge_sum) out["max_edge_sum"] = phg::to_string(*cert.max_edge_sum);
    if (!cert.edge_sums.empty()) {
        Json tables = Json::array();
        for (const auto& [cls, rows] : cert.edge_sums) {
            Json jrows = Json::array();
            for (const auto& [edge, sum] : rows)
                jrows.push_back(Json{{"edge", tuple_json(edge)}, {"sum", phg::to_string(sum)}});
            tables.push_back(Json{{"class", cls}, {"edges", std::move(jrows)}});
        }
        out["edge_sums"] = std::move(tables);
    }
    render(out, opts);
    return cert.theorem_violated ? 2 : 0;
}

int cmd_verify_bound(int r, const std::string& sizes_text, bool exhaustive, std::uint64_t trials,
                     std::uint64_t seed, const std::string& prob_text,
                     const std::string& weights_text, int jobs, const OutputOptions& opts) {
    phg::ScanConfig cfg;
    cfg.r = r;
    cfg.class_sizes = parse_size_list(sizes_text);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.edge_probability = phg::parse_rational(prob_text);
    cfg.jobs = jobs;
    if (weights_text == "unit")
        cfg.weights = phg::WeightMode::Unit;
    else if (weights_text == "random")
        cfg.weights = phg::WeightMode::Random;
    else if (weights_text == "mixed")
        cfg.weights = phg::WeightMode::Mixed;
    else
        phg::fail(phg::ErrorKind::Domain, "weights must be unit, random, or mixed");

    phg::ScanReport report = exhaustive ? phg::exhaustive_bound_scan(cfg)
                                        : phg::random_bound_scan(cfg);

    Json out;
    out["command"] = "verify-bound";
    Json config = Json{{"r", r}, {"sizes", cfg.class_sizes},
                       {"mode", exhaustive ? "exhaustive" : "random"}};
    if (!exhaustive) {
        config["trials"] = trials;
        config["seed"] = seed;
        config["edge_probability"] = phg::to_string(cfg.edge_probability);
        config["weights"] = weights_text;
        config["jobs"] = jobs;
    }
    out["config"] = std::move(config);
    out["instances"] = report.instances;
    out["cross_checks"] = report.cross_checks;
    if (report.min_slack) {
        out["min_slack"] = phg::to_string(*report.min_slack);
        out["min_slack_index"] = *report.min_slack_index;
    }
    out["violations"] = report.violations_total;
    if (!report.violations.empty()) {
        Json v = Json::array();
        for (const phg::SlackViolation& sv : report.violations)
            v.push_back(Json{{"index", sv.index},
                             {"clique_density", phg::to_string(sv.clique_density)},
                             {"bound", phg::to_string(sv.bound)},
                             {"instance", instance_summary(sv.instance)}});
        out["violation_instances"] = std::move(v);
    }
    if (report.tightest_instance)
        out["tightest_instance"] = instance_summary(*report.tightest_instance);
    if (!opts.out_path.empty()) {
        Json file_out = out;
        if (report.tightest_instance)
            file_out["tightest_instance"] = phg::instance_to_json(*report.tightest_instance);
        phg::write_text_file(opts.out_path, file_out.dump(2) + "\n");
        out["written"] = opts.out_path;
    }
    render(out, opts);
    return report.violations_total > 0 ? 2 : 0;
}

int cmd_tightness(int r, const std::vector<std::string>& target_texts,
                  const std::string& targets_file, const std::string& tolerance_text,
                  const OutputOptions& opts) {
    std::vector<std::vector<Rational>> targets;
    for (const std::string& text : target_texts) targets.push_back(parse_rational_list(text));
    if (!targets_file.empty()) {
        std::istringstream in(phg::read_text_file(targets_file));
        std::string line;
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            targets.push_back(parse_rational_list(line));
        }
    }
    if (targets.empty())
        phg::fail(phg::ErrorKind::Domain, "no targets given, use --target or --targets-file");
    Rational tolerance = phg::parse_rational(tolerance_text);
    std::vector<phg::TightnessRow> rows = phg::tightness_probe(r, targets, tolerance);

    std::uint64_t feasible = 0, tight = 0;
    Json jrows = Json::array();
    for (const phg::TightnessRow& row : rows) {
        feasible += row.feasible;
        tight += row.tight;
        Json jr;
        jr["target"] = rational_list_json(row.target);
        jr["feasible"] = row.feasible;
        jr["note"] = row.note;
        jr["bound"] = phg::to_string(row.bound);
        jr["clique_density"] = row.feasible ? phg::to_string(row.clique_density) : "";
        jr["slack"] = row.feasible ? phg::to_string(row.slack) : "";
        jr["tight"] = row.tight;
        jr["cross_checked"] = row.cross_checked;
        jr["class_sizes"] = row.class_sizes;
        jr["edges"] = row.edges;
        jrows.push_back(std::move(jr));
    }

    Json out;
    out["command"] = "tightness";
    out["config"] = Json{{"r", r}, {"targets", targets.size()},
                         {"targets_file", targets_file}, {"tolerance", tolerance_text}};
    out["feasible"] = feasible;
    out["tight"] = tight;
    out["rows"] = std::move(jrows);
    render(out, opts);
    return feasible == tight ? 0 : 2;
}

int cmd_pos_region(const std::string& point_text, unsigned grid, const OutputOptions& opts) {
    Json out;
    out["command"] = "pos-region";
    int code = 0;
    if (!point_text.empty()) {
        std::vector<Rational> p = parse_rational_list(point_text);
        if (p.size() != 3) phg::fail(phg::ErrorKind::Shape, "point needs exactly three values");
        phg::PosRegionVerdict v = phg::check_pos_region(p[0], p[1], p[2]);
        out["config"] = Json{{"point", rational_list_json(p)}};
        out["delta"] = phg::to_string(v.delta_value);
        out["delta_nonneg"] = v.delta_nonneg;
        out["ab_plus_c_above_1"] = v.ab_c;
        out["ac_plus_b_above_1"] = v.ac_b;
        out["bc_plus_a_above_1"] = v.bc_a;
        out["in_region"] = v.in_region;
        out["sum_hypothesis"] = v.sum_hypothesis;
        if (v.sum_hypothesis && !v.in_region) code = 2;
    } else {
        phg::PosGridReport report = phg::check_pos_region_grid(grid);
        out["config"] = Json{{"grid_denominator", grid}};
        out["points_tested"] = report.points_tested;
        out["failures"] = report.failures;
        out["holds"] = report.holds;
        if (report.first_failure) {
            const phg::PosRegionVerdict& v = *report.first_failure;
            out["first_failure"] = Json{
                {"point", rational_list_json({v.a, v.b, v.c})},
                {"delta", phg::to_string(v.delta_value)}};
        }
        if (!report.holds) code = 2;
    }
    render(out, opts);
    return code;
}

void add_output_options(CLI::App* cmd, OutputOptions& opts, bool with_out = false) {
    cmd->add_option("--format", opts.format, "output format: json, table, or csv")
        ->check(CLI::IsMember({"json", "table", "csv"}))
        ->capture_default_str();
    cmd->add_option("--decimal", opts.decimal,
                    "append decimal approximations in table output (digit count)");
    if (with_out)
        cmd->add_option("--out", opts.out_path,
                        "write the resulting instance (or full report) to this file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact density and clique analysis for weighted multipartite hypergraphs"};
    app.require_subcommand(1);
    OutputOptions opts;
    int code = 0;

    std::string input, target_text, tolerance_text = "0", scale_text = "1";
    std::string sizes_text, prob_text = "1/2", weights_text = "unit";
    std::string point_text, targets_file, mode_text = "random";
    std::vector<std::string> target_texts;
    std::size_t witnesses = 0;
    int r = 2, missing = 0, tuple_size = 0, jobs = 1;
    std::uint64_t trials = 1000, seed = 0;
    unsigned grid = 20;
    bool skip_verify = false, all_classes = false, no_edge_sums = false;

    auto* density = app.add_subcommand("density", "density vector of an instance");
    density->add_option("input", input, "instance JSON file")->required();
    add_output_options(density, opts);
    density->callback([&] { code = cmd_density(input, opts); });

    auto* cliques = app.add_subcommand("cliques", "weighted transversal clique density");
    cliques->add_option("input", input, "instance JSON file")->required();
    cliques->add_option("--witnesses", witnesses, "collect up to this many witness transversals");
    add_output_options(cliques, opts);
    cliques->callback([&] { code = cmd_cliques(input, witnesses, opts); });

    auto* near = app.add_subcommand("near-cliques",
                                    "transversals missing at most a given number of edges");
    near->add_option("input", input, "instance JSON file")->required();
    near->add_option("--k", missing, "missing-edge budget")->required();
    near->add_option("--witnesses", witnesses, "collect up to this many witness transversals");
    add_output_options(near, opts);
    near->callback([&] { code = cmd_near_cliques(input, missing, witnesses, opts); });

    auto* construct = app.add_subcommand(
        "construct", "build an instance with a prescribed density vector and minimal cliques");
    construct->add_option("--r", r, "uniformity")->required();
    construct->add_option("--rho", target_text, "comma-separated density vector (r+1 values)")
        ->required();
    construct->add_option("--tolerance", tolerance_text,
                          "accepted density shortfall (the build is exact, echoed only)");
    construct->add_flag("--skip-verify", skip_verify, "skip the clique-density measurement");
    add_output_options(construct, opts, true);
    construct->callback(
        [&] { code = cmd_construct(r, target_text, tolerance_text, skip_verify, opts); });

    auto* lift = app.add_subcommand("lift", "partite lift of a plain uniform graph");
    lift->add_option("input", input, "plain graph JSON file")->required();
    add_output_options(lift, opts, true);
    lift->callback([&] { code = cmd_lift(input, opts); });

    auto* blowup = app.add_subcommand("blowup", "weight-clearing blow-up of an instance");
    blowup->add_option("input", input, "instance JSON file")->required();
    blowup->add_option("--scale", scale_text, "per-class scales, or one scale for all classes")
        ->capture_default_str();
    add_output_options(blowup, opts, true);
    blowup->callback([&] { code = cmd_blowup(input, scale_text, opts); });

    auto* balance = app.add_subcommand("balance", "strict codegree balance check");
    balance->add_option("input", input, "instance JSON file")->required();
    balance->add_option("--tuple-size", tuple_size, "tuple size to check (default r-1)");
    add_output_options(balance, opts);
    balance->callback([&] { code = cmd_balance(input, tuple_size, opts); });

    auto* threshold = app.add_subcommand(
        "threshold", "balanced-codegree density threshold for near-clique existence");
    threshold->add_option("input", input, "instance JSON file")->required();
    threshold->add_option("--k", missing, "missing-edge budget of the target subgraph")
        ->required();
    threshold->add_flag("--all-classes", all_classes, "edge sums for every class, not just j*");
    threshold->add_flag("--no-edge-sums", no_edge_sums, "skip the per-edge sum table");
    add_output_options(threshold, opts);
    threshold->callback(
        [&] { code = cmd_threshold(input, missing, all_classes, no_edge_sums, opts); });

    auto* verify = app.add_subcommand("verify-bound",
                                      "check the clique-density bound over many instances");
    verify->add_option("--r", r, "uniformity")->required();
    verify->add_option("--sizes", sizes_text, "comma-separated class sizes (r+1 values)")
        ->required();
    verify->add_option("--mode", mode_text, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}))
        ->capture_default_str();
    verify->add_option("--trials", trials, "random instances to draw")->capture_default_str();
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--prob", prob_text, "edge keep probability")->capture_default_str();
    verify->add_option("--weights", weights_text, "unit, random, or mixed")
        ->check(CLI::IsMember({"unit", "random", "mixed"}))
        ->capture_default_str();
    verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    add_output_options(verify, opts, true);
    verify->callback([&] {
        code = cmd_verify_bound(r, sizes_text, mode_text == "exhaustive", trials, seed, prob_text,
                                weights_text, jobs, opts);
    });

    auto* tightness = app.add_subcommand(
        "tightness", "build extremal instances over a target grid and measure slack");
    tightness->add_option("--r", r, "uniformity")->required();
    tightness->add_option("--target", target_texts, "density vector, repeatable");
    tightness->add_option("--targets-file", targets_file,
                          "file with one comma-separated target per line");
    tightness->add_option("--tolerance", tolerance_text, "echoed into each build")
        ->capture_default_str();
    add_output_options(tightness, opts);
    tightness->callback(
        [&] { code = cmd_tightness(r, target_texts, targets_file, tolerance_text, opts); });

    auto* pos = app.add_subcommand("pos-region",
                                   "tripartite tightness-region membership and grid sweep");
    pos->add_option("--point", point_text, "single a,b,c triple to test");
    pos->add_option("--grid", grid, "test the full grid with this denominator")
        ->capture_default_str();
    add_output_options(pos, opts);
    pos->callback([&] { code = cmd_pos_region(point_text, grid, opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const phg::Error& e) {
        if (e.kind() == phg::ErrorKind::Internal) {
            std::cerr << "internal error: " << e.what() << "\n";
            return 2;
        }
        std::cerr << "error (" << phg::error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return 1;
    }
    return code;
}
