#pragma once

#include "phg/hypergraph.hpp"

#include <optional>
#include <vector>

namespace phg {

// delta(a,b,c) = a^2 + b^2 + c^2 - 2ab - 2ac - 2bc + 4abc.
// Non-negativity of this polynomial is the feasibility condition for tight
// tripartite triangle-density constructions.
Rational delta(const Rational& a, const Rational& b, const Rational& c);

struct PosRegionVerdict {
    Rational a, b, c;
    Rational delta_value;
    bool delta_nonneg = false;
    bool ab_c = false; // a*b + c > 1
    bool ac_b = false; // a*c + b > 1
    bool bc_a = false; // b*c + a > 1
    bool in_region = false;      // all four conditions
    bool sum_hypothesis = false; // a + b + c >= 9/4
};

// Evaluates the tightness-region conditions at one triple in [0,1]^3.
PosRegionVerdict check_pos_region(const Rational& a, const Rational& b, const Rational& c);

struct PosGridReport {
    unsigned denominator = 0;
    std::uint64_t points_tested = 0;  // grid triples with a+b+c >= 9/4
    std::uint64_t failures = 0;
    std::optional<PosRegionVerdict> first_failure;
    bool holds = false;
};

// Tests, over the full grid {0, 1/d, .., 1}^3, that every triple with
// a+b+c >= 9/4 lies in the region (delta >= 0 and all three pair conditions).
PosGridReport check_pos_region_grid(unsigned denominator);

// Weighted 3-partite 2-graph on up to six vertices whose complement is the
// matching (x1,y1), (x2,z1), (y2,z2), with class splits (p1, 1-p1),
// (p2, 1-p2), (p3, 1-p3). Zero-weight vertices are dropped. For every
// p in [0,1]^3 the triangle density equals sum(rho) - 2 exactly.
PartiteHypergraph tripartite_matching_complement(const Rational& p1, const Rational& p2,
                                                 const Rational& p3);

// Same vertex layout, but the missing pairs all meet in the first vertices:
// (x1,y1), (x1,z1), (y1,z1). At p = (1/2,1/2,1/2) this has the same density
// vector as the matching complement yet strictly more triangles, so the
// arrangement of the missing pairs matters for tightness.
PartiteHypergraph tripartite_aligned_complement(const Rational& p1, const Rational& p2,
                                                const Rational& p3);

struct LevelStep {
    int uniformity = 0;                  // uniformity of the graph after this step
    unsigned scale = 1;                  // blow-up scale applied to the previous level
    std::vector<std::size_t> class_sizes; // including the new singleton class
    std::size_t lifted_edges = 0;        // previous-level edges extended by the new vertex
    std::size_t complement_edges = 0;    // non-clique transversal tuples added
    std::size_t clique_edges = 0;        // clique-spanning tuples added
};

struct ConstructionRecipe {
    int r = 0;
    std::vector<Rational> target;        // densities as requested
    std::vector<Rational> achieved;      // density vector of the result (equals target)
    std::vector<Rational> sorted_target; // descending; the order the build uses
    std::vector<int> class_order;        // sorted class i lands at output position class_order[i]
    std::vector<std::vector<Rational>> base_weights; // tripartite base classes
    Rational base_delta;                 // delta at the base triple
    Rational tolerance;                  // echoed from the call; the build is exact
    Rational clique_density;             // sum(target) - r
    std::vector<LevelStep> steps;        // one per uniformity 3..r
};

struct Construction {
    PartiteHypergraph graph;
    ConstructionRecipe recipe;
};

// Weighted 3-partite 2-graph with density vector exactly (a,b,c) and triangle
// density exactly a+b+c-2. Requires the region conditions (Infeasible
// otherwise). At most 7 vertices; exact rational weights always exist, so
// tolerance is echoed into the recipe but never consumed.
Construction build_tripartite_base(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& tolerance = Rational(0));

// (r+1)-partite r-graph with density vector exactly rho and clique density
// exactly sum(rho) - r. Requires sum(rho) >= r, entries in [0,1], and for
// r = 2 the region conditions. Built by the tripartite base plus one
// blow-up-and-extend step per uniformity level.
Construction build_extremal(int r, const std::vector<Rational>& rho,
                            const Rational& tolerance = Rational(0));

// Lift of a plain r-graph on n vertices to an (r+1)-partite r-graph: r+1
// classes of size n; every edge of g spawns r! edges in each choice of r
// classes (one per assignment of its vertices to those classes), giving
// (r+1)! |E(g)| edges in total. The lift has strictly balanced codegrees,
// every density equal to r! |E(g)| / n^r, and contains a transversal clique
// iff g contains a complete r-graph on r+1 vertices.
PartiteHypergraph decaen_lift(const SimpleRGraph& g);

// Whether g contains r+1 vertices whose every r-subset is an edge.
bool contains_complete_subgraph(const SimpleRGraph& g);

} // namespace phg
