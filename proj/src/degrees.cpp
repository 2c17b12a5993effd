#include "phg/degrees.hpp"
#include "phg/clique.hpp"
#include "phg/errors.hpp"

#include <algorithm>
#include <string>

namespace phg {

namespace {

// Lexicographic enumeration of k-subsets of {0, .., n-1}, passed as index
// vectors. fn may return void; returning false stops the enumeration.
template <typename Fn>
void for_each_index_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

PartiteTuple validate_tuple(const PartiteHypergraph& g, PartiteTuple tuple, int expected_size) {
    if (expected_size >= 0 && static_cast<int>(tuple.size()) != expected_size)
        fail(ErrorKind::Shape, "tuple has " + std::to_string(tuple.size()) +
                                   " vertices, expected " + std::to_string(expected_size));
    std::sort(tuple.begin(), tuple.end());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        VertexId v = tuple[i];
        if (v.cls < 0 || v.cls >= g.num_classes())
            fail(ErrorKind::Selector, "tuple class " + std::to_string(v.cls) + " out of range");
        if (v.idx < 0 || v.idx >= static_cast<int>(g.class_size(v.cls)))
            fail(ErrorKind::Selector, "tuple vertex index out of range in class " +
                                          std::to_string(v.cls));
        if (i > 0 && v.cls == tuple[i - 1].cls)
            fail(ErrorKind::Shape, "tuple touches class " + std::to_string(v.cls) +
                                       " more than once");
    }
    return tuple;
}

std::vector<int> tuple_classes(const PartiteTuple& tuple) {
    std::vector<int> cs;
    cs.reserve(tuple.size());
    for (VertexId v : tuple) cs.push_back(v.cls);
    return cs;
}

std::vector<int> untouched_classes(const PartiteHypergraph& g, const PartiteTuple& tuple) {
    std::vector<int> touched = tuple_classes(tuple);
    std::vector<int> rest;
    for (int c = 0; c < g.num_classes(); ++c)
        if (!std::binary_search(touched.begin(), touched.end(), c)) rest.push_back(c);
    return rest;
}

} // namespace

std::vector<PartiteTuple> neighbourhood(const PartiteHypergraph& g, const PartiteTuple& tuple,
                                        std::vector<int> classes) {
    PartiteTuple t = validate_tuple(g, tuple, -1);
    const int r = g.uniformity();
    if (static_cast<int>(t.size()) > r - 1)
        fail(ErrorKind::Shape, "tuple of size " + std::to_string(t.size()) +
                                   " cannot be completed in a " + std::to_string(r) +
                                   "-uniform graph");
    std::sort(classes.begin(), classes.end());
    if (std::adjacent_find(classes.begin(), classes.end()) != classes.end())
        fail(ErrorKind::Selector, "repeated class in selector");
    if (static_cast<int>(t.size() + classes.size()) != r)
        fail(ErrorKind::Shape, "tuple size plus class count must equal r = " + std::to_string(r));
    std::vector<int> touched = tuple_classes(t);
    for (int c : classes) {
        if (c < 0 || c >= g.num_classes())
            fail(ErrorKind::Selector, "selector class " + std::to_string(c) + " out of range");
        if (std::binary_search(touched.begin(), touched.end(), c))
            fail(ErrorKind::Selector, "selector class " + std::to_string(c) +
                                          " already touched by the tuple");
    }

    std::vector<PartiteTuple> out;
    for (const Edge& e : g.edges()) {
        if (!std::includes(e.begin(), e.end(), t.begin(), t.end())) continue;
        PartiteTuple rest;
        rest.reserve(e.size() - t.size());
        std::set_difference(e.begin(), e.end(), t.begin(), t.end(), std::back_inserter(rest));
        if (tuple_classes(rest) == classes) out.push_back(std::move(rest));
    }
    return out;
}

DegreeProfile degree_profile(const PartiteHypergraph& g, const PartiteTuple& tuple) {
    PartiteTuple t = validate_tuple(g, tuple, -1);
    const int r = g.uniformity();
    if (static_cast<int>(t.size()) > r - 1)
        fail(ErrorKind::Shape, "tuple of size " + std::to_string(t.size()) +
                                   " cannot be completed in a " + std::to_string(r) +
                                   "-uniform graph");
    DegreeProfile profile;
    profile.tuple = t;

    std::vector<int> rest_classes = untouched_classes(g, t);
    const int need = r - static_cast<int>(t.size());
    for_each_index_subset(static_cast<int>(rest_classes.size()), need,
                          [&](const std::vector<int>& idx) {
                              std::vector<int> set;
                              set.reserve(idx.size());
                              for (int i : idx) set.push_back(rest_classes[i]);
                              profile.degree_by_class_set.emplace(std::move(set), 0);
                          });

    for (const Edge& e : g.edges()) {
        if (!std::includes(e.begin(), e.end(), t.begin(), t.end())) continue;
        PartiteTuple rest;
        std::set_difference(e.begin(), e.end(), t.begin(), t.end(), std::back_inserter(rest));
        ++profile.degree_by_class_set[tuple_classes(rest)];
        ++profile.total_degree;
    }
    return profile;
}

BalanceVerdict is_strictly_balanced(const PartiteHypergraph& g, int tuple_size) {
    const int r = g.uniformity();
    if (tuple_size < 1 || tuple_size > r - 1)
        fail(ErrorKind::Domain, "balance tuple size " + std::to_string(tuple_size) +
                                    " outside [1, " + std::to_string(r - 1) + "]");

    // degree counts keyed by tuple, then by the class set of the completion
    std::map<PartiteTuple, std::map<std::vector<int>, std::size_t>> counts;
    const int r_int = r;
    for (const Edge& e : g.edges()) {
        for_each_index_subset(r_int, tuple_size, [&](const std::vector<int>& idx) {
            PartiteTuple sub;
            sub.reserve(tuple_size);
            PartiteTuple rest;
            rest.reserve(r_int - tuple_size);
            std::size_t at = 0;
            for (int i = 0; i < r_int; ++i) {
                if (at < idx.size() && idx[at] == i) {
                    sub.push_back(e[i]);
                    ++at;
                } else {
                    rest.push_back(e[i]);
                }
            }
            ++counts[std::move(sub)][tuple_classes(rest)];
        });
    }

    BalanceVerdict verdict;
    verdict.balanced = true;
    verdict.tuples_checked = counts.size();
    const int need = r - tuple_size;
    for (const auto& [tuple, by_set] : counts) {
        std::vector<int> rest_classes = untouched_classes(g, tuple);
        std::vector<std::vector<int>> sets;
        for_each_index_subset(static_cast<int>(rest_classes.size()), need,
                              [&](const std::vector<int>& idx) {
                                  std::vector<int> set;
                                  set.reserve(idx.size());
                                  for (int i : idx) set.push_back(rest_classes[i]);
                                  sets.push_back(std::move(set));
                              });
        auto degree_of = [&](const std::vector<int>& set) -> std::size_t {
            auto it = by_set.find(set);
            return it == by_set.end() ? 0 : it->second;
        };
        std::size_t ref = degree_of(sets.front());
        for (std::size_t i = 1; i < sets.size(); ++i) {
            std::size_t d = degree_of(sets[i]);
            if (d != ref) {
                verdict.balanced = false;
                verdict.violation = BalanceViolation{tuple, sets.front(), ref, sets[i], d};
                return verdict;
            }
        }
    }
    return verdict;
}

ThresholdCertificate threshold_check(const PartiteHypergraph& g, int k,
                                     const ThresholdOptions& opts) {
    const int r = g.uniformity();
    const int t = g.num_classes();
    if (t != r + 1)
        fail(ErrorKind::Shape, "threshold check needs exactly r+1 = " + std::to_string(r + 1) +
                                   " classes, got " + std::to_string(t));
    if (!g.all_unit_weights())
        fail(ErrorKind::Domain, "threshold check needs unit weights; blow the graph up first");
    if (k < 0 || k > r - 1)
        fail(ErrorKind::Domain, "missing-edge budget " + std::to_string(k) + " outside [0, " +
                                    std::to_string(r - 1) + "]");

    ThresholdCertificate cert;
    cert.k = k;
    cert.rho = density_vector(g);
    Rational total(0);
    for (const Rational& x : cert.rho) total += x;
    cert.sigma.resize(t);
    cert.j_star = 0;
    for (int j = 0; j < t; ++j) {
        cert.sigma[j] = total - cert.rho[j];
        if (cert.sigma[j] > cert.sigma[cert.j_star]) cert.j_star = j;
    }
    cert.margin = cert.sigma[cert.j_star] - Rational(r - k - 1);
    cert.balance = is_strictly_balanced(g, r - 1);
    cert.theorem_applies = cert.balance.balanced && cert.margin > 0;
    cert.witness = find_near_clique(g, k);
    cert.theorem_violated = cert.theorem_applies && !cert.witness.has_value();

    if (opts.edge_sums) {
        std::vector<int> targets;
        if (opts.all_classes) {
            targets.resize(t);
            for (int j = 0; j < t; ++j) targets[j] = j;
        } else {
            targets.push_back(cert.j_star);
        }
        for (int j : targets) {
            // d(V_j, g) for every (r-1)-tuple g: count edges containing one
            // vertex of class j, keyed by the rest of the edge.
            std::map<PartiteTuple, std::size_t> toward_j;
            std::vector<const Edge*> avoiding_j;
            for (const Edge& e : g.edges()) {
                const VertexId* in_j = nullptr;
                for (const VertexId& v : e)
                    if (v.cls == j) { in_j = &v; break; }
                if (!in_j) {
                    avoiding_j.push_back(&e);
                    continue;
                }
                PartiteTuple rest;
                rest.reserve(e.size() - 1);
                for (VertexId v : e)
                    if (v.cls != j) rest.push_back(v);
                ++toward_j[std::move(rest)];
            }
            std::vector<std::pair<Edge, Rational>> sums;
            sums.reserve(avoiding_j.size());
            const Rational class_size(static_cast<unsigned>(g.class_size(j)));
            for (const Edge* e : avoiding_j) {
                std::size_t raw = 0;
                for (std::size_t drop = 0; drop < e->size(); ++drop) {
                    PartiteTuple sub;
                    sub.reserve(e->size() - 1);
                    for (std::size_t i = 0; i < e->size(); ++i)
                        if (i != drop) sub.push_back((*e)[i]);
                    auto it = toward_j.find(sub);
                    if (it != toward_j.end()) raw += it->second;
                }
                sums.emplace_back(*e, Rational(static_cast<unsigned long long>(raw)) / class_size);
            }
            if (j == cert.j_star) {
                for (const auto& [e, s] : sums)
                    if (!cert.max_edge_sum || s > *cert.max_edge_sum) cert.max_edge_sum = s;
            }
            cert.edge_sums.emplace(j, std::move(sums));
        }
    }
    return cert;
}

CodegreeSummary codegree_profile(const PartiteHypergraph& g) {
    const int r = g.uniformity();
    const int t = g.num_classes();
    if (r < 1) fail(ErrorKind::Shape, "empty graph");

    CodegreeSummary summary;
    Int tuple_count(0);
    for_each_index_subset(t, r - 1, [&](const std::vector<int>& classes) {
        Int prod(1);
        for (int c : classes) prod *= g.class_size(c);
        tuple_count += prod;
    });
    if (tuple_count > (Int(1) << 40))
        fail(ErrorKind::Budget, "codegree tuple space of size " + tuple_count.str() +
                                    " exceeds budget");
    summary.tuple_count = static_cast<std::size_t>(tuple_count);

    std::map<PartiteTuple, std::size_t> counts;
    for (const Edge& e : g.edges()) {
        for (std::size_t drop = 0; drop < e.size(); ++drop) {
            PartiteTuple sub;
            sub.reserve(e.size() - 1);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != drop) sub.push_back(e[i]);
            ++counts[std::move(sub)];
        }
    }

    std::size_t max_d = 0;
    for (const auto& [tuple, d] : counts) max_d = std::max(max_d, d);
    summary.max_degree = max_d;
    summary.min_degree =
        counts.size() < summary.tuple_count
            ? 0
            : [&] {
                  std::size_t m = counts.empty() ? 0 : counts.begin()->second;
                  for (const auto& [tuple, d] : counts) m = std::min(m, d);
                  return m;
              }();
    if (summary.tuple_count == 0) {
        summary.mean_degree = Rational(0);
    } else {
        Int total = Int(r) * g.num_edges();
        summary.mean_degree = make_rational(total, tuple_count);
    }
    return summary;
}

} // namespace phg
