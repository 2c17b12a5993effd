#include "phg/oracle.hpp"
#include "phg/clique.hpp"
#include "phg/constructions.hpp"
#include "phg/errors.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <random>
#include <thread>

namespace phg {

namespace {

constexpr std::uint64_t kNaiveBudget = std::uint64_t{1} << 22;
constexpr std::size_t kViolationKeep = 16;
constexpr std::uint64_t kNaiveCrossCheckCutoff = 200000;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic bounded draws. std::uniform_int_distribution is
// implementation-defined, which would break byte-identical reports across
// platforms, so the rejection step is done by hand.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t x = gen();
            if (x >= threshold) return x % n;
        }
    }

    bool chance(const Rational& p) {
        const Int den = denominator(p);
        const Int num = numerator(p);
        // p is in [0,1] with a denominator that fits 64 bits in practice;
        // draw uniformly below den and compare.
        const std::uint64_t d = static_cast<std::uint64_t>(den);
        return Int(below(d)) < num;
    }
};

void require_scan_shape(const ScanConfig& cfg) {
    if (cfg.r < 1) fail(ErrorKind::Shape, "uniformity must be at least 1");
    if (static_cast<int>(cfg.class_sizes.size()) != cfg.r + 1)
        fail(ErrorKind::Shape, "scan needs exactly r+1 = " + std::to_string(cfg.r + 1) +
                                   " class sizes, got " + std::to_string(cfg.class_sizes.size()));
    for (std::size_t s : cfg.class_sizes)
        if (s < 1) fail(ErrorKind::Shape, "class sizes must be at least 1");
    if (!in_unit_interval(cfg.edge_probability))
        fail(ErrorKind::Domain, "edge probability outside [0,1]");
    if (denominator(cfg.edge_probability) > Int(std::numeric_limits<std::uint64_t>::max()))
        fail(ErrorKind::Domain, "edge probability denominator too large");
    if (cfg.jobs < 1 || cfg.jobs > 256)
        fail(ErrorKind::Domain, "job count outside [1, 256]");
}

struct InstanceCheck {
    Rational clique;
    Rational bound;
    Rational slack;
    bool violation = false;
};

InstanceCheck check_instance(const PartiteHypergraph& g, std::uint64_t& cross_checks) {
    InstanceCheck res;
    res.clique = clique_density(g).density;
    Rational naive = naive_clique_density(g);
    if (res.clique != naive)
        fail(ErrorKind::Internal,
             "engines disagree on the clique density: " + to_string(res.clique) + " vs " +
                 to_string(naive));
    std::vector<Rational> rho = density_vector(g);
    std::vector<Rational> rho_naive = naive_density_vector(g);
    if (rho != rho_naive)
        fail(ErrorKind::Internal, "engines disagree on the density vector");
    cross_checks += 2;
    Rational sum(0);
    for (const Rational& x : rho) sum += x;
    res.bound = sum - g.uniformity();
    res.slack = res.clique - res.bound;
    res.violation = res.slack < 0;
    return res;
}

void fold_result(ScanReport& report, std::uint64_t index, const PartiteHypergraph& g,
                 const InstanceCheck& check) {
    ++report.instances;
    if (!report.min_slack || check.slack < *report.min_slack ||
        (check.slack == *report.min_slack && index < *report.min_slack_index)) {
        report.min_slack = check.slack;
        report.min_slack_index = index;
        report.tightest_instance = g;
    }
    if (check.violation) {
        ++report.violations_total;
        if (report.violations.size() < kViolationKeep)
            report.violations.push_back({index, g, check.clique, check.bound});
    }
}

// Merge b into a assuming every index in b is larger than any in a.
void merge_reports(ScanReport& a, ScanReport&& b) {
    a.instances += b.instances;
    a.cross_checks += b.cross_checks;
    if (b.min_slack && (!a.min_slack || *b.min_slack < *a.min_slack)) {
        a.min_slack = b.min_slack;
        a.min_slack_index = b.min_slack_index;
        a.tightest_instance = std::move(b.tightest_instance);
    }
    a.violations_total += b.violations_total;
    for (auto& v : b.violations) {
        if (a.violations.size() >= kViolationKeep) break;
        a.violations.push_back(std::move(v));
    }
}

} // namespace

NaiveCounts naive_near_clique_counts(const PartiteHypergraph& g, int max_missing) {
    const int t = g.num_classes();
    const int r = g.uniformity();
    if (t != r + 1)
        fail(ErrorKind::Shape, "near-clique count needs exactly r+1 classes");
    if (max_missing < 0 || max_missing > t)
        fail(ErrorKind::Domain, "missing-edge budget outside [0, t]");
    Int space(1);
    for (int c = 0; c < t; ++c) space *= g.class_size(c);
    if (space > kNaiveBudget)
        fail(ErrorKind::Budget, "naive enumeration over " + space.str() +
                                    " transversals exceeds its budget");

    NaiveCounts out;
    out.weighted = Rational(0);
    std::vector<std::size_t> idx(t, 0);
    for (;;) {
        int missing = 0;
        for (int omit = 0; omit < t && missing <= max_missing; ++omit) {
            Edge sub;
            sub.reserve(r);
            for (int c = 0; c < t; ++c)
                if (c != omit) sub.push_back({c, static_cast<int>(idx[c])});
            if (!std::binary_search(g.edges().begin(), g.edges().end(), sub)) ++missing;
        }
        if (missing <= max_missing) {
            ++out.transversals;
            Rational w(1);
            for (int c = 0; c < t; ++c) w *= g.weight({c, static_cast<int>(idx[c])});
            out.weighted += w;
        }
        int d = t - 1;
        for (;;) {
            if (d < 0) goto done;
            if (++idx[d] < g.class_size(d)) break;
            idx[d] = 0;
            --d;
        }
    }
done:
    Rational denom(1);
    for (int c = 0; c < t; ++c) denom *= g.class_weight(c);
    out.density = out.weighted / denom;
    return out;
}

Rational naive_clique_density(const PartiteHypergraph& g) {
    return naive_near_clique_counts(g, 0).density;
}

std::vector<Rational> naive_density_vector(const PartiteHypergraph& g) {
    const int t = g.num_classes();
    const int r = g.uniformity();
    if (t != r + 1)
        fail(ErrorKind::Shape, "density vector needs exactly r+1 classes");
    std::vector<Rational> rho(t, Rational(0));
    for (int i = 0; i < t; ++i) {
        Rational total(0);
        for (const Edge& e : g.edges()) {
            bool avoids = true;
            Rational w(1);
            for (VertexId v : e) {
                if (v.cls == i) {
                    avoids = false;
                    break;
                }
                w *= g.weight(v);
            }
            if (avoids) total += w;
        }
        Rational denom(1);
        for (int j = 0; j < t; ++j)
            if (j != i) denom *= g.class_weight(j);
        rho[i] = total / denom;
    }
    return rho;
}

std::vector<Edge> edge_universe(int r, const std::vector<std::size_t>& sizes) {
    const int t = static_cast<int>(sizes.size());
    if (r < 1) fail(ErrorKind::Shape, "uniformity must be at least 1");
    if (t != r + 1) fail(ErrorKind::Shape, "edge universe needs exactly r+1 classes");
    for (std::size_t s : sizes)
        if (s < 1) fail(ErrorKind::Shape, "class sizes must be at least 1");
    std::vector<Edge> universe;
    for (int omit = 0; omit < t; ++omit) {
        std::vector<int> cls;
        for (int c = 0; c < t; ++c)
            if (c != omit) cls.push_back(c);
        std::vector<std::size_t> idx(cls.size(), 0);
        for (;;) {
            Edge e;
            e.reserve(cls.size());
            for (std::size_t j = 0; j < cls.size(); ++j)
                e.push_back({cls[j], static_cast<int>(idx[j])});
            universe.push_back(std::move(e));
            int d = static_cast<int>(cls.size()) - 1;
            for (;;) {
                if (d < 0) goto next_omit;
                if (++idx[d] < sizes[cls[d]]) break;
                idx[d] = 0;
                --d;
            }
        }
    next_omit:;
    }
    return universe;
}

ScanReport exhaustive_bound_scan(const ScanConfig& cfg) {
    require_scan_shape(cfg);
    if (cfg.weights != WeightMode::Unit)
        fail(ErrorKind::Domain, "exhaustive scan supports unit weights only");
    std::vector<Edge> universe = edge_universe(cfg.r, cfg.class_sizes);
    const std::size_t m = universe.size();
    if (m >= 63 || (std::uint64_t{1} << m) > cfg.instance_budget)
        fail(ErrorKind::Budget, "exhaustive scan over 2^" + std::to_string(m) +
                                    " instances exceeds the instance budget");

    ScanReport report;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (std::uint64_t{1} << b)) edges.push_back(universe[b]);
        PartiteHypergraph g = make_unit_hypergraph(cfg.r, cfg.class_sizes, std::move(edges));
        InstanceCheck check = check_instance(g, report.cross_checks);
        fold_result(report, mask, g, check);
    }
    return report;
}

namespace {

PartiteHypergraph random_instance(const ScanConfig& cfg, const std::vector<Edge>& universe,
                                  std::uint64_t trial) {
    Rng rng(mix_seed(cfg.seed, trial));
    bool weighted = cfg.weights == WeightMode::Random ||
                    (cfg.weights == WeightMode::Mixed && trial % 4 == 3);
    std::vector<std::vector<Rational>> classes(cfg.class_sizes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        classes[c].reserve(cfg.class_sizes[c]);
        for (std::size_t i = 0; i < cfg.class_sizes[c]; ++i) {
            if (weighted) {
                std::uint64_t den = 1 + rng.below(6);
                std::uint64_t num = 1 + rng.below(2 * den);
                classes[c].push_back(make_rational(Int(num), Int(den)));
            } else {
                classes[c].emplace_back(1);
            }
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : universe)
        if (rng.chance(cfg.edge_probability)) edges.push_back(e);
    return PartiteHypergraph::make(cfg.r, std::move(classes), std::move(edges));
}

} // namespace

ScanReport random_bound_scan(const ScanConfig& cfg) {
    require_scan_shape(cfg);
    if (cfg.trials == 0) return {};
    std::vector<Edge> universe = edge_universe(cfg.r, cfg.class_sizes);

    const int jobs = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(cfg.jobs), cfg.trials));
    std::vector<ScanReport> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = cfg.trials / jobs;
    const std::uint64_t rem = cfg.trials % jobs;

    auto work = [&](int job, std::uint64_t begin, std::uint64_t end) {
        try {
            for (std::uint64_t trial = begin; trial < end; ++trial) {
                PartiteHypergraph g = random_instance(cfg, universe, trial);
                InstanceCheck check = check_instance(g, parts[job].cross_checks);
                fold_result(parts[job], trial, g, check);
            }
        } catch (...) {
            errors[job] = std::current_exception();
        }
    };

    std::uint64_t begin = 0;
    for (int j = 0; j < jobs; ++j) {
        std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(j) < rem ? 1 : 0);
        threads.emplace_back(work, j, begin, end);
        begin = end;
    }
    for (auto& th : threads) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    ScanReport report = std::move(parts[0]);
    for (int j = 1; j < jobs; ++j) merge_reports(report, std::move(parts[j]));
    return report;
}

std::vector<TightnessRow> tightness_probe(int r, const std::vector<std::vector<Rational>>& targets,
                                          const Rational& tolerance) {
    if (r < 2) fail(ErrorKind::Domain, "uniformity must be at least 2");
    std::vector<TightnessRow> rows;
    rows.reserve(targets.size());
    for (const auto& target : targets) {
        TightnessRow row;
        row.target = target;
        if (static_cast<int>(target.size()) != r + 1) {
            row.note = "needs " + std::to_string(r + 1) + " densities";
            rows.push_back(std::move(row));
            continue;
        }
        bool in_range = true;
        Rational sum(0);
        for (const Rational& x : target) {
            if (!in_unit_interval(x)) in_range = false;
            sum += x;
        }
        if (!in_range) {
            row.note = "density outside [0,1]";
            rows.push_back(std::move(row));
            continue;
        }
        row.bound = sum - r;
        if (sum < r) {
            row.note = "density sum below r";
            rows.push_back(std::move(row));
            continue;
        }
        if (r == 2) {
            PosRegionVerdict v = check_pos_region(target[0], target[1], target[2]);
            if (!v.in_region) {
                row.note = "outside the tripartite tightness region";
                rows.push_back(std::move(row));
                continue;
            }
        }
        row.feasible = true;
        Construction built = build_extremal(r, target, tolerance);
        const PartiteHypergraph& g = built.graph;
        row.clique_density = clique_density(g).density;
        row.slack = row.clique_density - row.bound;
        row.tight = row.slack == 0;
        for (int c = 0; c < g.num_classes(); ++c) row.class_sizes.push_back(g.class_size(c));
        row.edges = g.num_edges();

        Int space(1);
        for (int c = 0; c < g.num_classes(); ++c) space *= g.class_size(c);
        if (space <= kNaiveCrossCheckCutoff) {
            Rational naive = naive_clique_density(g);
            if (naive != row.clique_density)
                fail(ErrorKind::Internal, "engines disagree on a constructed instance");
            row.cross_checked = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

PartiteHypergraph balanced_instance(int r, std::size_t max_class_size, std::uint64_t seed) {
    if (r < 2) fail(ErrorKind::Domain, "uniformity must be at least 2");
    if (max_class_size < 1 || max_class_size > 16)
        fail(ErrorKind::Domain, "max class size outside [1, 16]");
    Rng rng(mix_seed(seed, 0xB41A9CEDull));
    const std::uint64_t kind = rng.below(3);

    auto random_rgraph = [&](int n) {
        std::vector<std::vector<int>> edges;
        if (n >= r) {
            std::vector<int> pick(r);
            for (int i = 0; i < r; ++i) pick[i] = i;
            for (;;) {
                if (rng.below(2) == 1) edges.push_back(pick);
                int i = r - 1;
                while (i >= 0 && pick[i] == n - r + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return SimpleRGraph::make(r, n, std::move(edges));
    };

    if (kind == 0) {
        int n = 1 + static_cast<int>(rng.below(max_class_size));
        return decaen_lift(random_rgraph(n));
    }
    if (kind == 1) {
        // complete multipartite with equal class sizes
        std::size_t m = 1 + rng.below(max_class_size);
        std::vector<std::size_t> sizes(r + 1, m);
        std::vector<Edge> edges = edge_universe(r, sizes);
        return make_unit_hypergraph(r, sizes, std::move(edges));
    }
    // block-disjoint union of two lifts
    int n1 = 1 + static_cast<int>(rng.below(max_class_size));
    int n2 = 1 + static_cast<int>(rng.below(max_class_size));
    PartiteHypergraph h1 = decaen_lift(random_rgraph(n1));
    PartiteHypergraph h2 = decaen_lift(random_rgraph(n2));
    std::vector<Edge> edges = h1.edges();
    for (Edge e : h2.edges()) {
        for (VertexId& v : e) v.idx += n1;
        edges.push_back(std::move(e));
    }
    return make_unit_hypergraph(
        r, std::vector<std::size_t>(r + 1, static_cast<std::size_t>(n1 + n2)), std::move(edges));
}

} // namespace phg
