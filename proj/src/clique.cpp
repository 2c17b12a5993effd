#include "phg/clique.hpp"
#include "phg/errors.hpp"

#include <algorithm>
#include <string>

namespace phg {

namespace {

constexpr std::uint64_t kScanBudget = std::uint64_t{1} << 27;

// Membership index: for each omitted class i, a bitset over mixed-radix codes
// of the remaining classes (ascending class order, last class varies fastest)
// marking which r-subsets are edges.
struct TransversalIndex {
    int t;
    std::vector<std::size_t> sz;
    std::vector<std::vector<std::uint64_t>> stride; // [omitted][class], 0 at [i][i]
    std::vector<std::vector<std::uint64_t>> bits;   // [omitted] -> bitset

    explicit TransversalIndex(const PartiteHypergraph& g)
        : t(g.num_classes()), sz(t), stride(t, std::vector<std::uint64_t>(t, 0)), bits(t) {
        Int total(1);
        for (int c = 0; c < t; ++c) {
            sz[c] = g.class_size(c);
            total *= sz[c];
        }
        if (total > kScanBudget)
            fail(ErrorKind::Budget,
                 "transversal space of size " + total.str() + " exceeds scan budget");
        for (int i = 0; i < t; ++i) {
            std::uint64_t s = 1;
            for (int c = t - 1; c >= 0; --c) {
                if (c == i) continue;
                stride[i][c] = s;
                s *= sz[c];
            }
            bits[i].assign((s + 63) / 64, 0);
        }
        const int target = (t * (t - 1)) / 2;
        for (const Edge& e : g.edges()) {
            int omitted = target;
            for (VertexId v : e) omitted -= v.cls;
            std::uint64_t code = 0;
            for (VertexId v : e) code += stride[omitted][v.cls] * static_cast<std::uint64_t>(v.idx);
            bits[omitted][code >> 6] |= std::uint64_t{1} << (code & 63);
        }
    }

    bool present(int omitted, std::uint64_t code) const {
        return (bits[omitted][code >> 6] >> (code & 63)) & 1u;
    }
};

void require_transversal_shape(const PartiteHypergraph& g, const char* op) {
    if (g.num_classes() != g.uniformity() + 1)
        fail(ErrorKind::Shape, std::string(op) + " needs exactly r+1 = " +
                                   std::to_string(g.uniformity() + 1) + " classes, got " +
                                   std::to_string(g.num_classes()));
}

// Enumerates transversals in lexicographic order; for each one missing at
// most max_missing of its t candidate subsets, invokes fn(picks, missing).
// fn returning false stops the scan. Returns false iff stopped early.
template <typename Fn>
bool scan_transversals(const PartiteHypergraph& g, int max_missing, Fn&& fn) {
    const int t = g.num_classes();
    TransversalIndex index(g);

    std::vector<std::vector<std::uint64_t>> code(t + 1, std::vector<std::uint64_t>(t, 0));
    std::vector<int> pick(t, 0);

    // Depth d chooses the class-d vertex; code[d][i] accumulates the omitted-i
    // code over the classes already chosen.
    auto descend = [&](auto&& self, int d) -> bool {
        if (d == t - 1) {
            const std::uint64_t last_code = code[d][d];
            int base_missing = index.present(d, last_code) ? 0 : 1;
            if (base_missing > max_missing) return true; // prune the whole class
            const int n = static_cast<int>(index.sz[d]);
            for (int idx = 0; idx < n; ++idx) {
                int missing = base_missing;
                for (int i = 0; i < t - 1; ++i) {
                    std::uint64_t full = code[d][i] +
                                         index.stride[i][d] * static_cast<std::uint64_t>(idx);
                    if (!index.present(i, full) && ++missing > max_missing) break;
                }
                if (missing > max_missing) continue;
                pick[d] = idx;
                if (!fn(pick, missing)) return false;
            }
            return true;
        }
        const int n = static_cast<int>(index.sz[d]);
        for (int idx = 0; idx < n; ++idx) {
            pick[d] = idx;
            for (int i = 0; i < t; ++i) {
                code[d + 1][i] = (i == d)
                                     ? code[d][i]
                                     : code[d][i] + index.stride[i][d] *
                                                        static_cast<std::uint64_t>(idx);
            }
            if (!self(self, d + 1)) return false;
        }
        return true;
    };
    return descend(descend, 0);
}

Transversal picks_to_transversal(const std::vector<int>& pick) {
    Transversal tr(pick.size());
    for (std::size_t c = 0; c < pick.size(); ++c)
        tr[c] = {static_cast<int>(c), pick[c]};
    return tr;
}

CliqueReport run_report(const PartiteHypergraph& g, int max_missing, const CliqueOptions& opts,
                        const char* op) {
    require_transversal_shape(g, op);
    const int t = g.num_classes();
    if (max_missing < 0 || max_missing > t)
        fail(ErrorKind::Domain, "missing-edge budget " + std::to_string(max_missing) +
                                    " outside [0, " + std::to_string(t) + "]");

    // Clear each class's weights to integers so the hot loop multiplies
    // integers only; the clearing factors divide out at the end.
    const bool weighted = !g.all_unit_weights();
    std::vector<std::vector<Int>> cleared(t);
    Int clearing_product(1);
    Int denominator_product(1);
    if (weighted) {
        for (int c = 0; c < t; ++c) {
            Int d = clearing_denominator(g, c);
            clearing_product *= d;
            cleared[c].reserve(g.class_size(c));
            Int class_sum(0);
            for (const Rational& w : g.classes()[c]) {
                Int m = numerator(w * d);
                class_sum += m;
                cleared[c].push_back(std::move(m));
            }
            denominator_product *= class_sum;
        }
    }

    CliqueReport report;
    Int total(0);
    std::vector<Int> partial;
    if (weighted) partial.assign(t + 1, Int(1));

    scan_transversals(g, max_missing, [&](const std::vector<int>& pick, int) {
        ++report.transversal_count;
        if (weighted) {
            Int w(1);
            for (int c = 0; c < t; ++c) w *= cleared[c][pick[c]];
            total += w;
        }
        if (opts.collect_witnesses && report.witnesses.size() < opts.witness_limit)
            report.witnesses.push_back(picks_to_transversal(pick));
        return true;
    });

    if (weighted) {
        report.weighted_count = make_rational(total, clearing_product);
        report.density = make_rational(total, denominator_product);
    } else {
        report.weighted_count = Rational(report.transversal_count);
        Int denom(1);
        for (int c = 0; c < t; ++c) denom *= g.class_size(c);
        report.density = make_rational(Int(report.transversal_count), denom);
    }
    return report;
}

std::optional<Transversal> first_qualifying(const PartiteHypergraph& g, int max_missing,
                                            const char* op) {
    require_transversal_shape(g, op);
    const int t = g.num_classes();
    if (max_missing < 0 || max_missing > t)
        fail(ErrorKind::Domain, "missing-edge budget " + std::to_string(max_missing) +
                                    " outside [0, " + std::to_string(t) + "]");
    std::optional<Transversal> found;
    scan_transversals(g, max_missing, [&](const std::vector<int>& pick, int) {
        found = picks_to_transversal(pick);
        return false;
    });
    return found;
}

} // namespace

CliqueReport clique_density(const PartiteHypergraph& g, const CliqueOptions& opts) {
    return run_report(g, 0, opts, "clique density");
}

std::optional<Transversal> contains_clique(const PartiteHypergraph& g) {
    return first_qualifying(g, 0, "clique search");
}

CliqueReport count_near_cliques(const PartiteHypergraph& g, int max_missing,
                                const CliqueOptions& opts) {
    return run_report(g, max_missing, opts, "near-clique count");
}

std::optional<Transversal> find_near_clique(const PartiteHypergraph& g, int max_missing) {
    return first_qualifying(g, max_missing, "near-clique search");
}

bool scan_qualifying_transversals(
    const PartiteHypergraph& g, int max_missing,
    const std::function<bool(const std::vector<int>&, int)>& fn) {
    require_transversal_shape(g, "transversal scan");
    const int t = g.num_classes();
    if (max_missing < 0 || max_missing > t)
        fail(ErrorKind::Domain, "missing-edge budget " + std::to_string(max_missing) +
                                    " outside [0, " + std::to_string(t) + "]");
    return scan_transversals(g, max_missing, fn);
}

std::vector<TransversalEdge> enumerate_transversal_edges(const PartiteHypergraph& g,
                                                         const Transversal& tr) {
    require_transversal_shape(g, "transversal edge enumeration");
    const int t = g.num_classes();
    if (static_cast<int>(tr.size()) != t)
        fail(ErrorKind::Shape, "transversal has " + std::to_string(tr.size()) +
                                   " vertices for " + std::to_string(t) + " classes");
    for (int c = 0; c < t; ++c) {
        if (tr[c].cls != c)
            fail(ErrorKind::Shape, "transversal must list one vertex per class in class order");
        if (tr[c].idx < 0 || tr[c].idx >= static_cast<int>(g.class_size(c)))
            fail(ErrorKind::Selector, "transversal vertex index out of range in class " +
                                          std::to_string(c));
    }
    std::vector<TransversalEdge> out;
    out.reserve(t);
    for (int omitted = 0; omitted < t; ++omitted) {
        Edge subset;
        subset.reserve(t - 1);
        for (int c = 0; c < t; ++c)
            if (c != omitted) subset.push_back(tr[c]);
        bool present = g.has_edge(subset);
        out.push_back({omitted, std::move(subset), present});
    }
    return out;
}

} // namespace phg
