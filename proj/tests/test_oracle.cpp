#include "test_util.hpp"

#include "phg/clique.hpp"
#include "phg/constructions.hpp"
#include "phg/degrees.hpp"
#include "phg/hypergraph.hpp"
#include "phg/oracle.hpp"

#include <numeric>

using namespace phg;
using testutil::complete_unit;
using testutil::edge;
using testutil::q;

TEST_CASE("naive counts agree with the main engine on fixed instances") {
    const PartiteHypergraph cases[] = {
        complete_unit(2, {2, 2, 2}),
        make_unit_hypergraph(2, {2, 1, 2}, {}),
        tripartite_matching_complement(q("1/2"), q("1/2"), q("1/2")),
        tripartite_aligned_complement(q("1/3"), q("2/3"), q("1/2")),
        decaen_lift(SimpleRGraph::make(2, 3, {{0, 1}, {1, 2}})),
        build_extremal(3, std::vector<Rational>(4, q("9/10"))).graph,
    };
    for (const PartiteHypergraph& g : cases) {
        CHECK(naive_clique_density(g) == clique_density(g).density);
        CHECK(naive_density_vector(g) == density_vector(g));
        for (int k = 0; k <= g.uniformity() + 1; ++k) {
            NaiveCounts naive = naive_near_clique_counts(g, k);
            CliqueReport engine = count_near_cliques(g, k);
            CHECK(naive.transversals == engine.transversal_count);
            CHECK(naive.weighted == engine.weighted_count);
            CHECK(naive.density == engine.density);
        }
    }
}

TEST_CASE("naive scan enforces its own budget") {
    PartiteHypergraph g = make_unit_hypergraph(2, {2048, 2048, 2}, {});
    CHECK_KIND(naive_clique_density(g), ErrorKind::Budget);
}

TEST_CASE("edge universe is grouped by omitted class") {
    std::vector<Edge> tiny = edge_universe(2, {1, 1, 1});
    REQUIRE(tiny.size() == 3);
    CHECK(tiny[0] == edge({{1, 0}, {2, 0}}));
    CHECK(tiny[1] == edge({{0, 0}, {2, 0}}));
    CHECK(tiny[2] == edge({{0, 0}, {1, 0}}));

    std::vector<Edge> wide = edge_universe(2, {2, 2, 2});
    CHECK(wide.size() == 12);
    for (std::size_t i = 0; i + 1 < wide.size(); ++i) {
        auto omitted = [](const Edge& e) {
            int total = 0;
            for (VertexId v : e) total += v.cls;
            return 3 - total;
        };
        CHECK(omitted(wide[i]) <= omitted(wide[i + 1]));
    }

    CHECK(edge_universe(3, {2, 1, 2, 1}).size() == 2 + 4 + 2 + 4);
    CHECK_KIND(edge_universe(2, {1, 1}), ErrorKind::Shape);
    CHECK_KIND(edge_universe(2, {1, 0, 1}), ErrorKind::Shape);
}

TEST_CASE("exhaustive scan over singleton classes") {
    ScanConfig cfg;
    cfg.r = 2;
    cfg.class_sizes = {1, 1, 1};
    ScanReport report = exhaustive_bound_scan(cfg);
    CHECK(report.instances == 8);
    CHECK(report.cross_checks == 16);
    CHECK(report.violations_total == 0);
    CHECK(report.violations.empty());
    REQUIRE(report.min_slack.has_value());
    CHECK(*report.min_slack == Rational(0));
    CHECK(*report.min_slack_index == 3);
    REQUIRE(report.tightest_instance.has_value());
    CHECK(report.tightest_instance->num_edges() == 2);
}

TEST_CASE("exhaustive scan in uniformity three") {
    ScanConfig cfg;
    cfg.r = 3;
    cfg.class_sizes = {1, 1, 1, 1};
    ScanReport report = exhaustive_bound_scan(cfg);
    CHECK(report.instances == 16);
    CHECK(report.violations_total == 0);
    CHECK(*report.min_slack == Rational(0));
    CHECK(*report.min_slack_index == 7);
}

TEST_CASE("exhaustive scan respects the budget and weight restriction") {
    ScanConfig cfg;
    cfg.r = 2;
    cfg.class_sizes = {2, 2, 2};
    cfg.instance_budget = 100;
    CHECK_KIND(exhaustive_bound_scan(cfg), ErrorKind::Budget);

    ScanConfig weighted = cfg;
    weighted.instance_budget = std::uint64_t{1} << 24;
    weighted.weights = WeightMode::Random;
    CHECK_KIND(exhaustive_bound_scan(weighted), ErrorKind::Domain);
}

TEST_CASE("random scan with zero trials yields an empty report") {
    ScanConfig cfg;
    cfg.r = 2;
    cfg.class_sizes = {2, 2, 2};
    cfg.trials = 0;
    ScanReport report = random_bound_scan(cfg);
    CHECK(report.instances == 0);
    CHECK(report.cross_checks == 0);
    CHECK_FALSE(report.min_slack.has_value());
    CHECK_FALSE(report.tightest_instance.has_value());
}

TEST_CASE("random scan is deterministic and job-count independent") {
    ScanConfig cfg;
    cfg.r = 2;
    cfg.class_sizes = {2, 2, 2};
    cfg.trials = 60;
    cfg.seed = 11;
    cfg.weights = WeightMode::Mixed;
    ScanReport one = random_bound_scan(cfg);

    ScanConfig parallel = cfg;
    parallel.jobs = 4;
    ScanReport four = random_bound_scan(parallel);

    CHECK(one.instances == 60);
    CHECK(one.violations_total == 0);
    CHECK(one.instances == four.instances);
    CHECK(one.cross_checks == four.cross_checks);
    CHECK(one.min_slack == four.min_slack);
    CHECK(one.min_slack_index == four.min_slack_index);
    REQUIRE(one.tightest_instance.has_value());
    REQUIRE(four.tightest_instance.has_value());
    CHECK(*one.tightest_instance == *four.tightest_instance);

    ScanReport again = random_bound_scan(cfg);
    CHECK(again.min_slack == one.min_slack);
    CHECK(again.min_slack_index == one.min_slack_index);
}

TEST_CASE("random scan seeds change the outcome stream") {
    ScanConfig cfg;
    cfg.r = 2;
    cfg.class_sizes = {2, 2, 2};
    cfg.trials = 40;
    cfg.seed = 1;
    ScanReport a = random_bound_scan(cfg);
    cfg.seed = 2;
    ScanReport b = random_bound_scan(cfg);
    CHECK(a.instances == b.instances);
    bool differs = a.min_slack != b.min_slack || a.min_slack_index != b.min_slack_index ||
                   a.tightest_instance != b.tightest_instance;
    CHECK(differs);
}

TEST_CASE("random scan in weighted mode still finds no violations") {
    ScanConfig cfg;
    cfg.r = 2;
    cfg.class_sizes = {3, 2, 2};
    cfg.trials = 50;
    cfg.seed = 7;
    cfg.weights = WeightMode::Random;
    cfg.edge_probability = q("2/3");
    ScanReport report = random_bound_scan(cfg);
    CHECK(report.instances == 50);
    CHECK(report.cross_checks == 100);
    CHECK(report.violations_total == 0);
    REQUIRE(report.min_slack.has_value());
    CHECK(*report.min_slack >= Rational(0));
}

TEST_CASE("tightness probe reports feasibility and slack per target") {
    std::vector<std::vector<Rational>> targets = {
        {q("3/4"), q("3/4"), q("3/4")},
        {Rational(1), Rational(1), q("1/2")},
        {q("1/2"), q("1/2"), q("1/2")},
        {Rational(1), Rational(1)},
        {Rational(2), Rational(1), Rational(1)},
        {q("9/10"), q("9/10"), q("3/10")},
    };
    std::vector<TightnessRow> rows = tightness_probe(2, targets);
    REQUIRE(rows.size() == 6);

    CHECK(rows[0].feasible);
    CHECK(rows[0].tight);
    CHECK(rows[0].slack == Rational(0));
    CHECK(rows[0].clique_density == q("1/4"));
    CHECK(rows[0].cross_checked);
    CHECK(rows[0].note.empty());

    CHECK(rows[1].feasible);
    CHECK(rows[1].tight);
    CHECK(rows[1].clique_density == q("1/2"));

    CHECK_FALSE(rows[2].feasible);
    CHECK(rows[2].note == "density sum below r");

    CHECK_FALSE(rows[3].feasible);
    CHECK(rows[3].note == "needs 3 densities");

    CHECK_FALSE(rows[4].feasible);
    CHECK(rows[4].note == "density outside [0,1]");

    CHECK_FALSE(rows[5].feasible);
    CHECK(rows[5].note == "outside the tripartite tightness region");
}

TEST_CASE("tightness probe covers higher uniformities") {
    std::vector<TightnessRow> rows =
        tightness_probe(3, {std::vector<Rational>(4, q("9/10")),
                            std::vector<Rational>(4, q("3/4"))});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].feasible);
    CHECK(rows[0].tight);
    CHECK(rows[0].clique_density == q("3/5"));
    CHECK(rows[0].class_sizes == std::vector<std::size_t>{5, 2, 40, 1});
    CHECK(rows[1].feasible);
    CHECK(rows[1].tight);
    CHECK(rows[1].clique_density == Rational(0));
}

TEST_CASE("balanced instances are balanced unit-weight transversal graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int r = seed % 2 == 0 ? 2 : 3;
        PartiteHypergraph g = balanced_instance(r, 4, seed);
        CHECK(g.uniformity() == r);
        CHECK(g.num_classes() == r + 1);
        CHECK(g.all_unit_weights());
        BalanceVerdict verdict = is_strictly_balanced(g, r - 1);
        CHECK(verdict.balanced);
    }
}

TEST_CASE("balanced instance generation is seed-deterministic") {
    PartiteHypergraph a = balanced_instance(2, 4, 17);
    PartiteHypergraph b = balanced_instance(2, 4, 17);
    CHECK(a == b);

    bool any_different = false;
    for (std::uint64_t seed = 0; seed < 10 && !any_different; ++seed)
        any_different = balanced_instance(2, 4, seed) != balanced_instance(2, 4, seed + 1);
    CHECK(any_different);

    CHECK_KIND(balanced_instance(2, 0, 0), ErrorKind::Domain);
    CHECK_KIND(balanced_instance(2, 17, 0), ErrorKind::Domain);
    CHECK_KIND(balanced_instance(1, 4, 0), ErrorKind::Domain);
}
