#include "test_util.hpp"

#include "phg/constructions.hpp"
#include "phg/clique.hpp"
#include "phg/degrees.hpp"
#include "phg/hypergraph.hpp"

using namespace phg;
using testutil::complete_unit;
using testutil::edge;
using testutil::path_three_classes;
using testutil::q;

namespace {

// Tripartite 6-cycle on classes of size two: triangle-free yet balanced.
PartiteHypergraph six_cycle() {
    std::vector<Edge> edges = {
        edge({{0, 0}, {1, 0}}), edge({{1, 0}, {2, 0}}), edge({{2, 0}, {0, 1}}),
        edge({{0, 1}, {1, 1}}), edge({{1, 1}, {2, 1}}), edge({{2, 1}, {0, 0}}),
    };
    return make_unit_hypergraph(2, {2, 2, 2}, std::move(edges));
}

PartiteHypergraph triangle_lift() {
    return decaen_lift(SimpleRGraph::make(2, 3, {{0, 1}, {0, 2}, {1, 2}}));
}

} // namespace

TEST_CASE("neighbourhood lists completing tuples") {
    PartiteHypergraph g = complete_unit(2, {2, 2, 2});
    auto nbrs = neighbourhood(g, {{0, 0}}, {1});
    REQUIRE(nbrs.size() == 2);
    CHECK(nbrs[0] == PartiteTuple{{1, 0}});
    CHECK(nbrs[1] == PartiteTuple{{1, 1}});

    PartiteHypergraph p = path_three_classes();
    CHECK(neighbourhood(p, {{1, 0}}, {0}).size() == 1);
    CHECK(neighbourhood(p, {{0, 0}}, {2}).empty());

    PartiteHypergraph h = complete_unit(3, {1, 1, 1, 1});
    auto pair = neighbourhood(h, {{0, 0}, {1, 0}}, {3});
    REQUIRE(pair.size() == 1);
    CHECK(pair[0] == PartiteTuple{{3, 0}});

    CHECK_KIND(neighbourhood(g, {{0, 0}}, {0}), ErrorKind::Selector);
    CHECK_KIND(neighbourhood(g, {{0, 0}}, {1, 1}), ErrorKind::Selector);
    CHECK_KIND(neighbourhood(g, {{0, 0}}, {1, 2}), ErrorKind::Shape);
    CHECK_KIND(neighbourhood(g, {{0, 0}, {1, 0}}, {}), ErrorKind::Shape);
    CHECK_KIND(neighbourhood(g, {{0, 9}}, {1}), ErrorKind::Selector);
}

TEST_CASE("degree profile splits the total by class set") {
    DegreeProfile at_joint = degree_profile(path_three_classes(), {{1, 0}});
    CHECK(at_joint.total_degree == 2);
    CHECK(at_joint.degree_by_class_set.at({0}) == 1);
    CHECK(at_joint.degree_by_class_set.at({2}) == 1);

    DegreeProfile at_end = degree_profile(path_three_classes(), {{0, 0}});
    CHECK(at_end.total_degree == 1);
    CHECK(at_end.degree_by_class_set.at({1}) == 1);
    CHECK(at_end.degree_by_class_set.at({2}) == 0);

    DegreeProfile lifted = degree_profile(triangle_lift(), {{0, 0}});
    CHECK(lifted.total_degree == 4);
    CHECK(lifted.degree_by_class_set.at({1}) == 2);
    CHECK(lifted.degree_by_class_set.at({2}) == 2);

    std::size_t sum = 0;
    for (const auto& [set, d] : lifted.degree_by_class_set) sum += d;
    CHECK(sum == lifted.total_degree);
}

TEST_CASE("strict balance holds for complete graphs and lifts") {
    BalanceVerdict complete = is_strictly_balanced(complete_unit(2, {2, 2, 2}), 1);
    CHECK(complete.balanced);
    CHECK(complete.tuples_checked == 6);

    CHECK(is_strictly_balanced(triangle_lift(), 1).balanced);
    CHECK(is_strictly_balanced(six_cycle(), 1).balanced);
    CHECK(is_strictly_balanced(complete_unit(3, {2, 2, 2, 2}), 2).balanced);
    BalanceVerdict uneven = is_strictly_balanced(complete_unit(3, {2, 1, 2, 1}), 2);
    CHECK_FALSE(uneven.balanced);
}

TEST_CASE("removing one edge breaks balance with a concrete violation") {
    PartiteHypergraph g = complete_unit(2, {2, 2, 2});
    std::vector<Edge> edges = g.edges();
    edges.erase(std::find(edges.begin(), edges.end(), edge({{0, 0}, {1, 0}})));
    PartiteHypergraph broken = make_unit_hypergraph(2, {2, 2, 2}, std::move(edges));

    BalanceVerdict verdict = is_strictly_balanced(broken, 1);
    CHECK_FALSE(verdict.balanced);
    REQUIRE(verdict.violation.has_value());
    CHECK(verdict.violation->tuple == PartiteTuple{{0, 0}});
    CHECK(verdict.violation->class_set_a == std::vector<int>{1});
    CHECK(verdict.violation->degree_a == 1);
    CHECK(verdict.violation->class_set_b == std::vector<int>{2});
    CHECK(verdict.violation->degree_b == 2);
}

TEST_CASE("balance tuple size must be a proper middle size") {
    PartiteHypergraph g = complete_unit(2, {1, 1, 1});
    CHECK_KIND(is_strictly_balanced(g, 0), ErrorKind::Domain);
    CHECK_KIND(is_strictly_balanced(g, 2), ErrorKind::Domain);
}

TEST_CASE("threshold certificate on the complete tripartite graph") {
    ThresholdCertificate cert = threshold_check(complete_unit(2, {1, 1, 1}), 0);
    CHECK(cert.rho == std::vector<Rational>(3, Rational(1)));
    CHECK(cert.sigma == std::vector<Rational>(3, Rational(2)));
    CHECK(cert.j_star == 0);
    CHECK(cert.margin == Rational(1));
    CHECK(cert.balance.balanced);
    CHECK(cert.theorem_applies);
    REQUIRE(cert.witness.has_value());
    CHECK(*cert.witness == Transversal{{0, 0}, {1, 0}, {2, 0}});
    CHECK_FALSE(cert.theorem_violated);
}

TEST_CASE("threshold certificate on the triangle lift") {
    ThresholdCertificate cert = threshold_check(triangle_lift(), 0);
    CHECK(cert.rho == std::vector<Rational>(3, q("2/3")));
    CHECK(cert.margin == q("1/3"));
    CHECK(cert.theorem_applies);
    CHECK(cert.witness.has_value());
    CHECK_FALSE(cert.theorem_violated);
}

TEST_CASE("margin zero cases sit outside the theorem but inside the bound") {
    ThresholdCertificate cycle = threshold_check(six_cycle(), 0);
    CHECK(cycle.margin == Rational(0));
    CHECK(cycle.balance.balanced);
    CHECK_FALSE(cycle.theorem_applies);
    CHECK_FALSE(cycle.witness.has_value());
    CHECK_FALSE(cycle.theorem_violated);
    REQUIRE(cycle.max_edge_sum.has_value());
    CHECK(*cycle.max_edge_sum == Rational(1));

    PartiteHypergraph lifted = decaen_lift(SimpleRGraph::make(2, 2, {{0, 1}}));
    ThresholdCertificate wound = threshold_check(lifted, 0);
    CHECK(wound.rho == std::vector<Rational>(3, q("1/2")));
    CHECK(wound.margin == Rational(0));
    CHECK(wound.balance.balanced);
    CHECK_FALSE(wound.witness.has_value());
    REQUIRE(wound.max_edge_sum.has_value());
    CHECK(*wound.max_edge_sum <= Rational(1));
}

TEST_CASE("relaxed budget finds near-cliques where none are strict") {
    PartiteHypergraph g = make_unit_hypergraph(
        2, {1, 1, 2}, {edge({{0, 0}, {1, 0}}), edge({{1, 0}, {2, 0}})});
    ThresholdCertificate cert = threshold_check(g, 1);
    REQUIRE(cert.witness.has_value());
    CHECK(*cert.witness == Transversal{{0, 0}, {1, 0}, {2, 0}});
    CHECK_FALSE(threshold_check(g, 0).witness.has_value());
    CHECK_FALSE(cert.balance.balanced);
}

TEST_CASE("threshold validates its inputs") {
    PartiteHypergraph weighted = PartiteHypergraph::make(
        2, {{q("1/2")}, {Rational(1)}, {Rational(1)}}, {});
    CHECK_KIND(threshold_check(weighted, 0), ErrorKind::Domain);

    PartiteHypergraph g = complete_unit(2, {1, 1, 1});
    CHECK_KIND(threshold_check(g, -1), ErrorKind::Domain);
    CHECK_KIND(threshold_check(g, 2), ErrorKind::Domain);
    CHECK_KIND(threshold_check(complete_unit(2, {1, 1}), 0), ErrorKind::Shape);
}

TEST_CASE("edge sum tables follow the options") {
    PartiteHypergraph g = complete_unit(2, {2, 2, 2});
    ThresholdCertificate base = threshold_check(g, 0);
    CHECK(base.edge_sums.size() == 1);
    CHECK(base.edge_sums.count(base.j_star) == 1);
    CHECK(base.edge_sums.at(base.j_star).size() == 4);
    REQUIRE(base.max_edge_sum.has_value());
    CHECK(*base.max_edge_sum == Rational(2));

    ThresholdCertificate all = threshold_check(g, 0, {.all_classes = true});
    CHECK(all.edge_sums.size() == 3);

    ThresholdCertificate none = threshold_check(g, 0, {.edge_sums = false});
    CHECK(none.edge_sums.empty());
    CHECK_FALSE(none.max_edge_sum.has_value());
}

TEST_CASE("codegree profile summarizes completion counts") {
    CodegreeSummary full = codegree_profile(complete_unit(2, {2, 2, 2}));
    CHECK(full.tuple_count == 6);
    CHECK(full.min_degree == 4);
    CHECK(full.max_degree == 4);
    CHECK(full.mean_degree == Rational(4));

    CodegreeSummary empty = codegree_profile(make_unit_hypergraph(2, {2, 2, 2}, {}));
    CHECK(empty.min_degree == 0);
    CHECK(empty.max_degree == 0);
    CHECK(empty.mean_degree == Rational(0));

    CodegreeSummary lone = codegree_profile(
        make_unit_hypergraph(2, {1, 1, 1}, {edge({{0, 0}, {1, 0}})}));
    CHECK(lone.tuple_count == 3);
    CHECK(lone.min_degree == 0);
    CHECK(lone.max_degree == 1);
    CHECK(lone.mean_degree == q("2/3"));
}
