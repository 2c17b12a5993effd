#pragma once

#include "phg/hypergraph.hpp"

#include <map>
#include <optional>
#include <vector>

namespace phg {

// A partite tuple: sorted vertices from pairwise distinct classes (same
// canonical shape as an edge, any size up to the class count).
using PartiteTuple = std::vector<VertexId>;

// Completing tuples of `tuple` over the class set `classes`: every h with one
// vertex per listed class such that tuple + h is an edge. Requires
// |tuple| + |classes| == r, classes disjoint from the tuple's classes.
std::vector<PartiteTuple> neighbourhood(const PartiteHypergraph& g, const PartiteTuple& tuple,
                                        std::vector<int> classes);

struct DegreeProfile {
    PartiteTuple tuple;
    // degree by class set I (|I| = r - |tuple|, I inside the untouched classes)
    std::map<std::vector<int>, std::size_t> degree_by_class_set;
    std::size_t total_degree = 0; // always equals the sum over all class sets
};

DegreeProfile degree_profile(const PartiteHypergraph& g, const PartiteTuple& tuple);

struct BalanceViolation {
    PartiteTuple tuple; // lexicographically first unbalanced tuple
    std::vector<int> class_set_a;
    std::size_t degree_a = 0;
    std::vector<int> class_set_b;
    std::size_t degree_b = 0;
};

struct BalanceVerdict {
    bool balanced = false;
    std::size_t tuples_checked = 0; // tuples with at least one completing tuple
    std::optional<BalanceViolation> violation;
};

// A graph is strictly balanced at tuple size s when every partite s-tuple has
// the same number of completing tuples in each (r-s)-subset of the classes it
// does not touch. Zero-degree tuples are trivially balanced. s must lie in
// [1, r-1].
BalanceVerdict is_strictly_balanced(const PartiteHypergraph& g, int tuple_size);

struct ThresholdOptions {
    bool all_classes = false;   // compute per-edge sums for every class, not just j*
    bool edge_sums = true;      // include the per-edge sum table at all
};

struct ThresholdCertificate {
    int k = 0;                       // missing-edge budget of the target subgraph
    std::vector<Rational> rho;       // density vector
    std::vector<Rational> sigma;     // sigma[j] = sum of rho[i] over i != j
    int j_star = 0;                  // argmax of sigma (smallest index on ties)
    Rational margin;                 // sigma[j_star] - (r - k - 1)
    BalanceVerdict balance;          // at tuple size r-1
    bool theorem_applies = false;    // balanced and margin > 0
    std::optional<Transversal> witness; // transversal missing <= k edges
    bool theorem_violated = false;   // applies but no witness exists

    // S(e) = sum over (r-1)-subtuples g of e of d(V_j, g) / |V_j|, for edges e
    // avoiding class j. Keyed by j; only j_star unless all_classes was set.
    std::map<int, std::vector<std::pair<Edge, Rational>>> edge_sums;
    std::optional<Rational> max_edge_sum; // over the j_star table
};

// Checks the balanced-codegree density threshold for finding a transversal
// clique missing at most k edges (k in [0, r-1]). Requires unit weights and
// exactly r+1 classes. theorem_violated set (never expected) when the
// hypothesis holds but no witness exists.
ThresholdCertificate threshold_check(const PartiteHypergraph& g, int k,
                                     const ThresholdOptions& opts = {});

struct CodegreeSummary {
    std::size_t tuple_count = 0; // all partite (r-1)-tuples
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    Rational mean_degree;
};

// Degree statistics over every partite (r-1)-tuple (zero-degree tuples
// included).
CodegreeSummary codegree_profile(const PartiteHypergraph& g);

} // namespace phg
