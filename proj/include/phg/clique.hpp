#pragma once

#include "phg/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace phg {

struct CliqueOptions {
    bool collect_witnesses = false;
    std::size_t witness_limit = 64; // cap on collected witnesses
};

struct CliqueReport {
    // weighted_count / product of class weight sums
    Rational density;
    // sum over qualifying transversals of the product of vertex weights
    Rational weighted_count;
    // plain number of qualifying transversals
    std::uint64_t transversal_count = 0;
    // lexicographically first qualifying transversals (when requested)
    std::vector<Transversal> witnesses;
};

// Weighted clique density C(G) of an (r+1)-partite r-graph: the weighted
// fraction of transversals whose r+1 vertex subsets of size r are all edges.
// Throws ErrorKind::Shape unless the graph has exactly r+1 classes.
CliqueReport clique_density(const PartiteHypergraph& g, const CliqueOptions& opts = {});

// Lexicographically least clique-spanning transversal, if any.
std::optional<Transversal> contains_clique(const PartiteHypergraph& g);

// Transversals missing at most max_missing of their r+1 candidate edges.
// max_missing must lie in [0, r+1]; max_missing = 0 recovers clique_density.
CliqueReport count_near_cliques(const PartiteHypergraph& g, int max_missing,
                                const CliqueOptions& opts = {});

// Lexicographically least transversal missing at most max_missing candidate
// edges, if any.
std::optional<Transversal> find_near_clique(const PartiteHypergraph& g, int max_missing);

// Low-level scan: invokes fn(picks, missing) in lexicographic order for every
// transversal missing at most max_missing of its candidate subsets, where
// picks[c] is the chosen vertex index in class c. fn returning false stops
// the scan; the function then returns false.
bool scan_qualifying_transversals(
    const PartiteHypergraph& g, int max_missing,
    const std::function<bool(const std::vector<int>&, int)>& fn);

struct TransversalEdge {
    int omitted_class = 0;
    Edge subset;        // the transversal minus one class, canonical order
    bool present = false;
};

// The r+1 candidate edges of one transversal, listed by omitted class
// ascending. Validates that tr picks one vertex from every class.
std::vector<TransversalEdge> enumerate_transversal_edges(const PartiteHypergraph& g,
                                                         const Transversal& tr);

} // namespace phg
