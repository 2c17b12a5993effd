#pragma once

#include "phg/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phg {

// ---- independent reference engine -----------------------------------------
// Plain transversal enumeration with rational arithmetic and edge membership
// by binary search. Shares no scanning code, no integerization, and no
// pruning with the main engine; exists purely to cross-check it.

struct NaiveCounts {
    std::uint64_t transversals = 0; // qualifying transversals
    Rational weighted;              // sum of their weight products
    Rational density;               // weighted / product of class weight sums
};

NaiveCounts naive_near_clique_counts(const PartiteHypergraph& g, int max_missing);
Rational naive_clique_density(const PartiteHypergraph& g);
std::vector<Rational> naive_density_vector(const PartiteHypergraph& g);

// All candidate edges of an (r+1)-partite r-graph with the given class sizes,
// grouped by omitted class ascending, lexicographic within a group.
std::vector<Edge> edge_universe(int r, const std::vector<std::size_t>& sizes);

// ---- bound scans -----------------------------------------------------------

enum class WeightMode { Unit, Random, Mixed };

struct ScanConfig {
    int r = 2;
    std::vector<std::size_t> class_sizes;              // r+1 entries
    std::uint64_t trials = 0;                          // random scan only
    std::uint64_t seed = 0;                            // random scan only
    Rational edge_probability = Rational(1, 2);        // random scan only
    WeightMode weights = WeightMode::Unit;             // random scan only
    std::uint64_t instance_budget = std::uint64_t{1} << 24; // exhaustive cap
    int jobs = 1;                                      // random scan threads
};

struct SlackViolation {
    std::uint64_t index = 0; // instance mask or trial number
    PartiteHypergraph instance;
    Rational clique_density;
    Rational bound; // sum(rho) - r
};

struct ScanReport {
    std::uint64_t instances = 0;
    std::uint64_t cross_checks = 0; // naive-vs-engine comparisons, all agreeing
    std::optional<Rational> min_slack;
    std::optional<std::uint64_t> min_slack_index;
    std::optional<PartiteHypergraph> tightest_instance;
    std::uint64_t violations_total = 0;
    std::vector<SlackViolation> violations; // first few by index
};

// Every instance on the given classes (each subset of the edge universe),
// checked against the linear clique-density bound with both engines.
// Unit weights only. Errors with Budget if 2^|universe| exceeds the budget.
ScanReport exhaustive_bound_scan(const ScanConfig& cfg);

// cfg.trials random instances: each universe edge kept with probability
// edge_probability; weights per WeightMode (Mixed re-weights every fourth
// trial). Per-trial generators are derived from (seed, trial), so reports are
// byte-identical for any job count.
ScanReport random_bound_scan(const ScanConfig& cfg);

// ---- tightness over a density grid ----------------------------------------

struct TightnessRow {
    std::vector<Rational> target;
    bool feasible = false;
    std::string note;               // reason when infeasible
    Rational bound;                 // sum(target) - r
    Rational clique_density;        // engine value on the built instance
    Rational slack;                 // clique_density - bound
    bool tight = false;             // slack == 0
    bool cross_checked = false;     // naive engine also ran and agreed
    std::vector<std::size_t> class_sizes;
    std::size_t edges = 0;
};

// Builds the extremal instance for every target vector and measures the
// achieved clique density against the linear bound.
std::vector<TightnessRow> tightness_probe(int r, const std::vector<std::vector<Rational>>& targets,
                                          const Rational& tolerance = Rational(0));

// ---- balanced instance generator -------------------------------------------

// Deterministic family of strictly balanced unit-weight instances: lifts of
// random plain r-graphs, complete multipartite graphs with equal class sizes,
// and block-disjoint unions of two lifts. The kind and all sizes derive from
// the seed.
PartiteHypergraph balanced_instance(int r, std::size_t max_class_size, std::uint64_t seed);

} // namespace phg
