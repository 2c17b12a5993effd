#pragma once

#include "phg/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace phg {

// Vertex of a partite hypergraph: class index plus position within the class.
struct VertexId {
    int cls = 0;
    int idx = 0;

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// An edge is a sorted sequence of vertices from pairwise distinct classes.
using Edge = std::vector<VertexId>;

// A transversal picks exactly one vertex from every class, in class order.
using Transversal = std::vector<VertexId>;

// Sorts the vertices and validates pairwise-distinct classes.
// Throws ErrorKind::Shape on a repeated class or empty edge.
Edge canonical_edge(Edge e);

// Weighted t-partite r-uniform hypergraph. Invariants, enforced at
// construction:
//   * t >= r >= 2 classes, each non-empty;
//   * every weight is a strictly positive rational;
//   * every edge has exactly r vertices, at most one per class, indices in
//     range, held in canonical (sorted) order;
//   * the edge list is sorted and duplicate-free.
class PartiteHypergraph {
public:
    static PartiteHypergraph make(int r,
                                  std::vector<std::vector<Rational>> class_weights,
                                  std::vector<Edge> edges);

    int uniformity() const { return r_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    std::size_t class_size(int cls) const { return classes_[cls].size(); }
    std::size_t num_vertices() const;
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<std::vector<Rational>>& classes() const { return classes_; }
    const Rational& weight(VertexId v) const { return classes_[v.cls][v.idx]; }

    // Sum of vertex weights within one class (cached).
    const Rational& class_weight(int cls) const { return class_weight_[cls]; }
    // Product of all class weight sums.
    Rational class_weight_product() const;

    const std::vector<Edge>& edges() const { return edges_; }
    // Binary search over the sorted edge list. The query must be canonical.
    bool has_edge(const Edge& e) const;

    bool all_unit_weights() const { return all_unit_; }

    // Copy with one extra edge (canonicalized; duplicate rejected).
    PartiteHypergraph with_edge(Edge e) const;

    bool operator==(const PartiteHypergraph& other) const = default;

private:
    PartiteHypergraph() = default;

    int r_ = 0;
    std::vector<std::vector<Rational>> classes_;
    std::vector<Edge> edges_;
    std::vector<Rational> class_weight_;
    bool all_unit_ = true;
};

// Convenience constructor for all-unit weights: sizes[c] vertices per class.
PartiteHypergraph make_unit_hypergraph(int r, const std::vector<std::size_t>& sizes,
                                       std::vector<Edge> edges);

// ---- operations ----------------------------------------------------------

// Product of vertex weights over an edge (or any partite vertex tuple).
Rational edge_weight(const PartiteHypergraph& g, const Edge& e);

// Subgraph induced by the listed classes (sorted, distinct, each in range):
// keeps those classes' vertices and the edges entirely inside them, with
// class indices renumbered to 0..k-1 in the order given by the sorted list.
PartiteHypergraph induced_partite(const PartiteHypergraph& g, std::vector<int> kept_classes);

// Density vector of an (r+1)-partite r-graph: rho[i] is the weighted edge
// density of the r-partite subgraph omitting class i,
//   rho[i] = sum of edge weights over edges avoiding class i
//            / product of the other classes' weight sums.
// Throws ErrorKind::Shape unless the graph has exactly r+1 classes.
std::vector<Rational> density_vector(const PartiteHypergraph& g);

// Generalized single-subset density for t >= r classes: the weighted density
// of edges living exactly on the r listed classes.
Rational subset_density(const PartiteHypergraph& g, std::vector<int> classes_of_interest);

// Blow-up into an unweighted multiplicity graph. Per class c, let D_c be the
// least common multiple of the weight denominators in c. Vertex v of class c
// becomes w(v) * D_c * scale[c] unit-weight copies; every edge is replaced by
// all combinations of copies of its endpoints. Densities and the clique
// density are invariant under this map. scale entries must be >= 1.
PartiteHypergraph blow_up(const PartiteHypergraph& g, const std::vector<unsigned>& scale);
PartiteHypergraph blow_up(const PartiteHypergraph& g, unsigned scale = 1);

// lcm of weight denominators within class c (the minimal clearing factor).
Int clearing_denominator(const PartiteHypergraph& g, int cls);

// Relabels classes: class c of g becomes class new_position[c] of the result.
// new_position must be a permutation of 0..t-1. The density vector permutes
// the same way; the clique density is unchanged.
PartiteHypergraph permute_classes(const PartiteHypergraph& g,
                                  const std::vector<int>& new_position);

// ---- plain (non-partite) r-graphs ----------------------------------------

// Input shape for the lift construction: r-uniform hypergraph on vertex set
// {0..n-1}, edges sorted and duplicate-free.
struct SimpleRGraph {
    int r = 0;
    int n = 0;
    std::vector<std::vector<int>> edges;

    static SimpleRGraph make(int r, int n, std::vector<std::vector<int>> edges);

    bool operator==(const SimpleRGraph&) const = default;
};

} // namespace phg
