#include "phg/constructions.hpp"
#include "phg/clique.hpp"
#include "phg/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

namespace phg {

namespace {

constexpr std::uint64_t kTupleBudget = std::uint64_t{1} << 27;
constexpr std::uint64_t kEdgeBudget = std::uint64_t{1} << 21;

void require_unit_interval_arg(const Rational& x, const char* name) {
    if (!in_unit_interval(x))
        fail(ErrorKind::Domain, std::string(name) + " = " + to_string(x) + " outside [0,1]");
}

std::string region_failure_text(const PosRegionVerdict& v) {
    std::string out;
    auto add = [&](bool ok, const char* what) {
        if (ok) return;
        if (!out.empty()) out += ", ";
        out += what;
    };
    add(v.delta_nonneg, "delta < 0");
    add(v.ab_c, "a*b + c <= 1");
    add(v.ac_b, "a*c + b <= 1");
    add(v.bc_a, "b*c + a <= 1");
    return out;
}

using LogicalPair = std::pair<std::pair<int, int>, std::pair<int, int>>;

// Complete 3-partite 2-graph on the given (logical) weighted vertices minus
// the listed pairs. Zero-weight vertices are dropped together with their
// incident missing pairs.
PartiteHypergraph complement_graph(const std::vector<std::vector<Rational>>& logical,
                                   const std::vector<LogicalPair>& missing) {
    const int t = static_cast<int>(logical.size());
    std::vector<std::vector<int>> remap(t);
    std::vector<std::vector<Rational>> classes(t);
    for (int c = 0; c < t; ++c) {
        remap[c].assign(logical[c].size(), -1);
        for (std::size_t i = 0; i < logical[c].size(); ++i) {
            if (logical[c][i] > 0) {
                remap[c][i] = static_cast<int>(classes[c].size());
                classes[c].push_back(logical[c][i]);
            }
        }
    }
    auto banned = [&](int c1, int i1, int c2, int i2) {
        for (const LogicalPair& m : missing) {
            if (m.first == std::pair{c1, i1} && m.second == std::pair{c2, i2}) return true;
            if (m.first == std::pair{c2, i2} && m.second == std::pair{c1, i1}) return true;
        }
        return false;
    };
    std::vector<Edge> edges;
    for (int c1 = 0; c1 < t; ++c1) {
        for (int c2 = c1 + 1; c2 < t; ++c2) {
            for (std::size_t i1 = 0; i1 < logical[c1].size(); ++i1) {
                if (remap[c1][i1] < 0) continue;
                for (std::size_t i2 = 0; i2 < logical[c2].size(); ++i2) {
                    if (remap[c2][i2] < 0) continue;
                    if (banned(c1, static_cast<int>(i1), c2, static_cast<int>(i2))) continue;
                    edges.push_back({{c1, remap[c1][i1]}, {c2, remap[c2][i2]}});
                }
            }
        }
    }
    return PartiteHypergraph::make(2, std::move(classes), std::move(edges));
}

} // namespace

Rational delta(const Rational& a, const Rational& b, const Rational& c) {
    return a * a + b * b + c * c - 2 * a * b - 2 * a * c - 2 * b * c + 4 * a * b * c;
}

PosRegionVerdict check_pos_region(const Rational& a, const Rational& b, const Rational& c) {
    require_unit_interval_arg(a, "a");
    require_unit_interval_arg(b, "b");
    require_unit_interval_arg(c, "c");
    PosRegionVerdict v;
    v.a = a;
    v.b = b;
    v.c = c;
    v.delta_value = delta(a, b, c);
    v.delta_nonneg = v.delta_value >= 0;
    v.ab_c = a * b + c > 1;
    v.ac_b = a * c + b > 1;
    v.bc_a = b * c + a > 1;
    v.in_region = v.delta_nonneg && v.ab_c && v.ac_b && v.bc_a;
    v.sum_hypothesis = a + b + c >= Rational(9, 4);
    return v;
}

PosGridReport check_pos_region_grid(unsigned denominator) {
    if (denominator < 1 || denominator > 10000)
        fail(ErrorKind::Domain, "grid denominator outside [1, 10000]");
    const std::int64_t d = denominator;
    PosGridReport report;
    report.denominator = denominator;

    // Integer forms, exact after clearing by d^3 (resp. d^2):
    //   delta * d^3 = d(x^2+y^2+z^2) - 2d(xy+xz+yz) + 4xyz
    //   (ab + c > 1) * d^2:  xy + zd > d^2
    std::uint64_t cross_checked = 0;
    for (std::int64_t x = 0; x <= d; ++x) {
        for (std::int64_t y = 0; y <= d; ++y) {
            for (std::int64_t z = 0; z <= d; ++z) {
                if (4 * (x + y + z) < 9 * d) continue;
                ++report.points_tested;
                std::int64_t delta3 = d * (x * x + y * y + z * z) -
                                      2 * d * (x * y + x * z + y * z) + 4 * x * y * z;
                bool ok = delta3 >= 0 && x * y + z * d > d * d && x * z + y * d > d * d &&
                          y * z + x * d > d * d;
                // sparse cross-check against the rational-arithmetic path
                if (!ok || report.points_tested % 97 == 0) {
                    PosRegionVerdict v =
                        check_pos_region(Rational(x, d), Rational(y, d), Rational(z, d));
                    if (v.in_region != ok)
                        fail(ErrorKind::Internal,
                             "integer and rational region evaluations disagree at (" +
                                 to_string(v.a) + "," + to_string(v.b) + "," + to_string(v.c) +
                                 ")");
                    ++cross_checked;
                    if (!ok && !report.first_failure) report.first_failure = v;
                }
                if (!ok) ++report.failures;
            }
        }
    }
    report.holds = report.failures == 0;
    return report;
}

namespace {

PartiteHypergraph split_complement(const Rational& p1, const Rational& p2, const Rational& p3,
                                   bool aligned) {
    require_unit_interval_arg(p1, "p1");
    require_unit_interval_arg(p2, "p2");
    require_unit_interval_arg(p3, "p3");
    std::vector<std::vector<Rational>> logical = {
        {p1, 1 - p1}, {p2, 1 - p2}, {p3, 1 - p3}};
    std::vector<LogicalPair> missing;
    if (aligned) {
        missing = {{{0, 0}, {1, 0}}, {{0, 0}, {2, 0}}, {{1, 0}, {2, 0}}};
    } else {
        missing = {{{0, 0}, {1, 0}}, {{0, 1}, {2, 0}}, {{1, 1}, {2, 1}}};
    }
    return complement_graph(logical, missing);
}

} // namespace

PartiteHypergraph tripartite_matching_complement(const Rational& p1, const Rational& p2,
                                                 const Rational& p3) {
    return split_complement(p1, p2, p3, false);
}

PartiteHypergraph tripartite_aligned_complement(const Rational& p1, const Rational& p2,
                                                const Rational& p3) {
    return split_complement(p1, p2, p3, true);
}

Construction build_tripartite_base(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& tolerance) {
    require_unit_interval_arg(a, "a");
    require_unit_interval_arg(b, "b");
    require_unit_interval_arg(c, "c");
    if (tolerance < 0) fail(ErrorKind::Domain, "negative tolerance");
    PosRegionVerdict v = check_pos_region(a, b, c);
    if (!v.in_region)
        fail(ErrorKind::Infeasible, "target (" + to_string(a) + "," + to_string(b) + "," +
                                        to_string(c) + ") outside the tightness region: " +
                                        region_failure_text(v));

    // Class 1 splits into x1(s), x2(1-s); class 2 into y1(u), y2(1-u);
    // class 3 into z1(p), z2(q), z3(1-p-q). Missing pairs (x1,y1), (x2,z1),
    // (y2,z2) leave density vector (a,b,c) when su = 1-c, (1-s)p = 1-b,
    // (1-u)q = 1-a. Taking u at the vertex of the feasibility parabola makes
    // every weight rational; the region conditions put all of them in [0,1].
    const Rational A = 1 - a, B = 1 - b, C = 1 - c;
    const Rational u = (a + b - c) / (2 * b);
    const Rational s = C / u;
    const Rational p = B / (1 - s);
    const Rational q = A / (1 - u);
    const Rational z3 = 1 - p - q;

    for (const Rational* w : {&u, &s, &p, &q, &z3}) {
        if (*w < 0 || *w > 1)
            fail(ErrorKind::Internal, "base weight " + to_string(*w) + " escaped [0,1] at (" +
                                          to_string(a) + "," + to_string(b) + "," + to_string(c) +
                                          ")");
    }

    std::vector<std::vector<Rational>> logical = {{s, 1 - s}, {u, 1 - u}, {p, q, z3}};
    std::vector<LogicalPair> missing = {{{0, 0}, {1, 0}}, {{0, 1}, {2, 0}}, {{1, 1}, {2, 1}}};
    PartiteHypergraph graph = complement_graph(logical, missing);

    std::vector<Rational> achieved = density_vector(graph);
    if (achieved != std::vector<Rational>{a, b, c})
        fail(ErrorKind::Internal, "base construction missed its density target");

    Construction result{std::move(graph), {}};
    ConstructionRecipe& recipe = result.recipe;
    recipe.r = 2;
    recipe.target = {a, b, c};
    recipe.achieved = std::move(achieved);
    recipe.sorted_target = recipe.target;
    recipe.class_order = {0, 1, 2};
    recipe.base_weights = result.graph.classes();
    recipe.base_delta = v.delta_value;
    recipe.tolerance = tolerance;
    recipe.clique_density = a + b + c - 2;
    return result;
}

Construction build_extremal(int r, const std::vector<Rational>& rho, const Rational& tolerance) {
    if (r < 2) fail(ErrorKind::Domain, "uniformity must be at least 2");
    if (static_cast<int>(rho.size()) != r + 1)
        fail(ErrorKind::Shape, "need r+1 = " + std::to_string(r + 1) + " densities, got " +
                                   std::to_string(rho.size()));
    for (const Rational& x : rho) require_unit_interval_arg(x, "density");
    if (tolerance < 0) fail(ErrorKind::Domain, "negative tolerance");
    Rational sum(0);
    for (const Rational& x : rho) sum += x;
    if (sum < r)
        fail(ErrorKind::Infeasible, "density sum " + to_string(sum) + " is below r = " +
                                        std::to_string(r) +
                                        "; the tight value would be negative");

    if (r == 2) {
        Construction base = build_tripartite_base(rho[0], rho[1], rho[2], tolerance);
        return base;
    }

    std::vector<int> order(rho.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return rho[i] > rho[j]; });
    std::vector<Rational> sorted(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) sorted[i] = rho[order[i]];

    // With sum >= r the three largest densities average at least 3r/(r+1),
    // which puts them inside the tripartite region.
    Construction base = build_tripartite_base(sorted[0], sorted[1], sorted[2], tolerance);
    PartiteHypergraph cur = std::move(base.graph);

    std::vector<LevelStep> steps;
    for (int u = 3; u <= r; ++u) {
        const Rational& next = sorted[u];

        Int p0(1);
        for (int c = 0; c < cur.num_classes(); ++c)
            p0 *= numerator(cur.class_weight(c) * clearing_denominator(cur, c));

        const Rational x = next * Rational(p0);
        unsigned scale = 0;
        for (unsigned s = 1; s <= 1000000; ++s) {
            if (denominator(x * pow_rational(Rational(s), static_cast<unsigned>(u))) == 1) {
                scale = s;
                break;
            }
        }
        if (scale == 0)
            fail(ErrorKind::Budget, "no blow-up scale up to 10^6 clears the density " +
                                        to_string(next));

        Int tuples = p0;
        for (int i = 0; i < u; ++i) tuples *= scale;
        if (tuples > kTupleBudget)
            fail(ErrorKind::Budget, "construction level " + std::to_string(u) + " needs " +
                                        tuples.str() + " transversal tuples, over the budget");

        PartiteHypergraph blown = blow_up(cur, scale);

        const Rational target_edges = next * Rational(tuples);
        if (denominator(target_edges) != 1)
            fail(ErrorKind::Internal, "edge target not integral after scale selection");
        const std::uint64_t want = static_cast<std::uint64_t>(numerator(target_edges));

        std::uint64_t total_tuples = 0;
        std::uint64_t non_clique = 0;
        scan_qualifying_transversals(blown, u, [&](const std::vector<int>&, int missing) {
            ++total_tuples;
            if (missing > 0) ++non_clique;
            return true;
        });
        if (Int(total_tuples) != tuples)
            fail(ErrorKind::Internal, "tuple enumeration disagrees with the size product");
        if (want < non_clique || want > total_tuples)
            fail(ErrorKind::Internal, "edge target outside the feasible range at level " +
                                          std::to_string(u));
        const std::uint64_t clique_quota = want - non_clique;

        if (Int(blown.num_edges()) + Int(want) > kEdgeBudget)
            fail(ErrorKind::Budget, "construction level " + std::to_string(u) +
                                        " exceeds the edge budget");

        std::vector<Edge> edges;
        edges.reserve(blown.num_edges() + static_cast<std::size_t>(want));
        for (const Edge& e : blown.edges()) {
            Edge lifted = e;
            lifted.push_back({u, 0});
            edges.push_back(std::move(lifted));
        }
        const std::size_t lifted_count = edges.size();

        std::uint64_t cliques_added = 0;
        scan_qualifying_transversals(blown, u, [&](const std::vector<int>& picks, int missing) {
            bool take = missing > 0;
            if (!take && cliques_added < clique_quota) {
                take = true;
                ++cliques_added;
            }
            if (take) {
                Edge e(picks.size());
                for (std::size_t c = 0; c < picks.size(); ++c)
                    e[c] = {static_cast<int>(c), picks[c]};
                edges.push_back(std::move(e));
            }
            return true;
        });

        std::vector<std::size_t> sizes;
        for (int c = 0; c < blown.num_classes(); ++c) sizes.push_back(blown.class_size(c));
        sizes.push_back(1);
        PartiteHypergraph next_graph = make_unit_hypergraph(u, sizes, std::move(edges));

        std::vector<Rational> level_rho = density_vector(next_graph);
        for (int i = 0; i <= u; ++i) {
            if (level_rho[i] != sorted[i])
                fail(ErrorKind::Internal, "level " + std::to_string(u) +
                                              " missed density " + std::to_string(i));
        }

        steps.push_back(LevelStep{u, scale, sizes, lifted_count,
                                  static_cast<std::size_t>(non_clique),
                                  static_cast<std::size_t>(clique_quota)});
        cur = std::move(next_graph);
    }

    PartiteHypergraph out = permute_classes(cur, order);
    std::vector<Rational> achieved = density_vector(out);
    if (achieved != rho)
        fail(ErrorKind::Internal, "construction missed its density target after relabeling");

    Construction result{std::move(out), {}};
    ConstructionRecipe& recipe = result.recipe;
    recipe.r = r;
    recipe.target = rho;
    recipe.achieved = std::move(achieved);
    recipe.sorted_target = std::move(sorted);
    recipe.class_order = order;
    recipe.base_weights = base.recipe.base_weights;
    recipe.base_delta = base.recipe.base_delta;
    recipe.tolerance = tolerance;
    recipe.clique_density = sum - r;
    recipe.steps = std::move(steps);
    return result;
}

PartiteHypergraph decaen_lift(const SimpleRGraph& g) {
    const int r = g.r;
    const int n = g.n;
    Int total = Int(g.edges.size());
    for (int i = 2; i <= r + 1; ++i) total *= i;
    if (total > kEdgeBudget)
        fail(ErrorKind::Budget, "lift would create " + total.str() + " edges, over the budget");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(total));
    for (const auto& e : g.edges) {
        for (int omit = 0; omit <= r; ++omit) {
            std::vector<int> cls;
            cls.reserve(r);
            for (int c = 0; c <= r; ++c)
                if (c != omit) cls.push_back(c);
            std::vector<int> perm = e; // sorted already
            do {
                Edge ne(r);
                for (int j = 0; j < r; ++j) ne[j] = {cls[j], perm[j]};
                edges.push_back(std::move(ne));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return make_unit_hypergraph(r, std::vector<std::size_t>(r + 1, n), std::move(edges));
}

bool contains_complete_subgraph(const SimpleRGraph& g) {
    const int r = g.r;
    const int n = g.n;
    if (n < r + 1) return false;
    std::vector<int> pick(r + 1);
    for (int i = 0; i <= r; ++i) pick[i] = i;
    while (true) {
        bool all = true;
        for (int omit = 0; omit <= r && all; ++omit) {
            std::vector<int> sub;
            sub.reserve(r);
            for (int i = 0; i <= r; ++i)
                if (i != omit) sub.push_back(pick[i]);
            if (!std::binary_search(g.edges.begin(), g.edges.end(), sub)) all = false;
        }
        if (all) return true;
        int i = r;
        while (i >= 0 && pick[i] == n - (r + 1) + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j <= r; ++j) pick[j] = pick[j - 1] + 1;
    }
}

} // namespace phg
