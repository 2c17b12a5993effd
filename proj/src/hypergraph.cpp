#include "phg/hypergraph.hpp"
#include "phg/errors.hpp"

#include <algorithm>
#include <string>

namespace phg {

namespace {

std::string vertex_str(VertexId v) {
    return "(" + std::to_string(v.cls) + "," + std::to_string(v.idx) + ")";
}

constexpr std::size_t kBlowUpBudget = std::size_t{1} << 26;

} // namespace

Edge canonical_edge(Edge e) {
    if (e.empty()) fail(ErrorKind::Shape, "empty edge");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (e[i].cls == e[i - 1].cls)
            fail(ErrorKind::Shape,
                 "edge touches class " + std::to_string(e[i].cls) + " more than once");
    }
    return e;
}

PartiteHypergraph PartiteHypergraph::make(int r,
                                          std::vector<std::vector<Rational>> class_weights,
                                          std::vector<Edge> edges) {
    if (r < 2) fail(ErrorKind::Shape, "uniformity must be at least 2");
    if (static_cast<int>(class_weights.size()) < r)
        fail(ErrorKind::Shape, "need at least " + std::to_string(r) + " classes, got " +
                                   std::to_string(class_weights.size()));
    PartiteHypergraph g;
    g.r_ = r;
    g.classes_ = std::move(class_weights);
    g.class_weight_.reserve(g.classes_.size());
    for (std::size_t c = 0; c < g.classes_.size(); ++c) {
        if (g.classes_[c].empty())
            fail(ErrorKind::Shape, "class " + std::to_string(c) + " is empty");
        Rational sum(0);
        for (std::size_t i = 0; i < g.classes_[c].size(); ++i) {
            const Rational& w = g.classes_[c][i];
            if (w <= 0)
                fail(ErrorKind::Domain, "non-positive weight " + to_string(w) + " at vertex " +
                                            vertex_str({static_cast<int>(c), static_cast<int>(i)}));
            if (w != 1) g.all_unit_ = false;
            sum += w;
        }
        g.class_weight_.push_back(std::move(sum));
    }
    for (Edge& e : edges) {
        e = canonical_edge(std::move(e));
        if (static_cast<int>(e.size()) != r)
            fail(ErrorKind::Shape, "edge of size " + std::to_string(e.size()) +
                                       " in a " + std::to_string(r) + "-uniform graph");
        for (VertexId v : e) {
            if (v.cls < 0 || v.cls >= g.num_classes())
                fail(ErrorKind::Selector, "edge vertex " + vertex_str(v) + ": no such class");
            if (v.idx < 0 || v.idx >= static_cast<int>(g.class_size(v.cls)))
                fail(ErrorKind::Selector, "edge vertex " + vertex_str(v) + ": index out of range");
        }
    }
    std::sort(edges.begin(), edges.end());
    if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
        fail(ErrorKind::Shape, "duplicate edge starting at vertex " + vertex_str((*it)[0]));
    g.edges_ = std::move(edges);
    return g;
}

std::size_t PartiteHypergraph::num_vertices() const {
    std::size_t n = 0;
    for (const auto& c : classes_) n += c.size();
    return n;
}

Rational PartiteHypergraph::class_weight_product() const {
    Rational p(1);
    for (const Rational& w : class_weight_) p *= w;
    return p;
}

bool PartiteHypergraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

PartiteHypergraph PartiteHypergraph::with_edge(Edge e) const {
    e = canonical_edge(std::move(e));
    if (static_cast<int>(e.size()) != r_)
        fail(ErrorKind::Shape, "edge of size " + std::to_string(e.size()) +
                                   " in a " + std::to_string(r_) + "-uniform graph");
    for (VertexId v : e) {
        if (v.cls < 0 || v.cls >= num_classes())
            fail(ErrorKind::Selector, "edge vertex " + vertex_str(v) + ": no such class");
        if (v.idx < 0 || v.idx >= static_cast<int>(class_size(v.cls)))
            fail(ErrorKind::Selector, "edge vertex " + vertex_str(v) + ": index out of range");
    }
    PartiteHypergraph g = *this;
    auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), e);
    if (it != g.edges_.end() && *it == e)
        fail(ErrorKind::Shape, "duplicate edge starting at vertex " + vertex_str(e[0]));
    g.edges_.insert(it, std::move(e));
    return g;
}

PartiteHypergraph make_unit_hypergraph(int r, const std::vector<std::size_t>& sizes,
                                       std::vector<Edge> edges) {
    std::vector<std::vector<Rational>> classes;
    classes.reserve(sizes.size());
    for (std::size_t s : sizes) classes.emplace_back(s, Rational(1));
    return PartiteHypergraph::make(r, std::move(classes), std::move(edges));
}

namespace {

Rational tuple_weight(const PartiteHypergraph& g, const Edge& e) {
    Rational w(1);
    for (VertexId v : e) w *= g.weight(v);
    return w;
}

} // namespace

Rational edge_weight(const PartiteHypergraph& g, const Edge& e) {
    Edge canon = canonical_edge(e);
    for (VertexId v : canon) {
        if (v.cls < 0 || v.cls >= g.num_classes() || v.idx < 0 ||
            v.idx >= static_cast<int>(g.class_size(v.cls)))
            fail(ErrorKind::Selector, "vertex " + vertex_str(v) + " out of range");
    }
    if (!g.has_edge(canon))
        fail(ErrorKind::Selector, "not an edge of the graph");
    return tuple_weight(g, canon);
}

PartiteHypergraph induced_partite(const PartiteHypergraph& g, std::vector<int> kept_classes) {
    std::sort(kept_classes.begin(), kept_classes.end());
    if (std::adjacent_find(kept_classes.begin(), kept_classes.end()) != kept_classes.end())
        fail(ErrorKind::Selector, "repeated class in selector");
    for (int c : kept_classes)
        if (c < 0 || c >= g.num_classes())
            fail(ErrorKind::Selector, "selector class " + std::to_string(c) + " out of range");
    if (static_cast<int>(kept_classes.size()) < g.uniformity())
        fail(ErrorKind::Shape, "induced subgraph needs at least r = " +
                                   std::to_string(g.uniformity()) + " classes");

    std::vector<int> remap(g.num_classes(), -1);
    for (std::size_t i = 0; i < kept_classes.size(); ++i) remap[kept_classes[i]] = static_cast<int>(i);

    std::vector<std::vector<Rational>> classes;
    classes.reserve(kept_classes.size());
    for (int c : kept_classes) classes.push_back(g.classes()[c]);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        bool inside = true;
        for (VertexId v : e) {
            if (remap[v.cls] < 0) { inside = false; break; }
        }
        if (!inside) continue;
        Edge mapped = e;
        for (VertexId& v : mapped) v.cls = remap[v.cls];
        edges.push_back(std::move(mapped));
    }
    return PartiteHypergraph::make(g.uniformity(), std::move(classes), std::move(edges));
}

std::vector<Rational> density_vector(const PartiteHypergraph& g) {
    const int r = g.uniformity();
    const int t = g.num_classes();
    if (t != r + 1)
        fail(ErrorKind::Shape, "density vector needs exactly r+1 = " + std::to_string(r + 1) +
                                   " classes, got " + std::to_string(t));
    std::vector<Rational> num(t, Rational(0));
    for (const Edge& e : g.edges()) {
        // With t = r+1 and r pairwise-distinct classes, each edge avoids
        // exactly one class.
        int avoided = (t * (t - 1)) / 2;
        for (VertexId v : e) avoided -= v.cls;
        num[avoided] += tuple_weight(g, e);
    }
    std::vector<Rational> rho(t);
    for (int i = 0; i < t; ++i) {
        Rational denom(1);
        for (int j = 0; j < t; ++j)
            if (j != i) denom *= g.class_weight(j);
        rho[i] = num[i] / denom;
    }
    return rho;
}

Rational subset_density(const PartiteHypergraph& g, std::vector<int> classes_of_interest) {
    std::sort(classes_of_interest.begin(), classes_of_interest.end());
    if (std::adjacent_find(classes_of_interest.begin(), classes_of_interest.end()) !=
        classes_of_interest.end())
        fail(ErrorKind::Selector, "repeated class in selector");
    if (static_cast<int>(classes_of_interest.size()) != g.uniformity())
        fail(ErrorKind::Shape, "subset density takes exactly r = " +
                                   std::to_string(g.uniformity()) + " classes");
    for (int c : classes_of_interest)
        if (c < 0 || c >= g.num_classes())
            fail(ErrorKind::Selector, "selector class " + std::to_string(c) + " out of range");

    Rational num(0);
    for (const Edge& e : g.edges()) {
        std::size_t pos = 0;
        bool match = true;
        for (VertexId v : e) {
            if (pos >= classes_of_interest.size() || v.cls != classes_of_interest[pos]) {
                match = false;
                break;
            }
            ++pos;
        }
        if (match) num += tuple_weight(g, e);
    }
    Rational denom(1);
    for (int c : classes_of_interest) denom *= g.class_weight(c);
    return num / denom;
}

Int clearing_denominator(const PartiteHypergraph& g, int cls) {
    if (cls < 0 || cls >= g.num_classes())
        fail(ErrorKind::Selector, "class " + std::to_string(cls) + " out of range");
    Int d(1);
    for (const Rational& w : g.classes()[cls]) d = lcm_int(d, denominator(w));
    return d;
}

PartiteHypergraph blow_up(const PartiteHypergraph& g, const std::vector<unsigned>& scale) {
    const int t = g.num_classes();
    if (static_cast<int>(scale.size()) != t)
        fail(ErrorKind::Shape, "blow-up scale list has " + std::to_string(scale.size()) +
                                   " entries for " + std::to_string(t) + " classes");
    for (unsigned s : scale)
        if (s < 1) fail(ErrorKind::Domain, "blow-up scale must be at least 1");

    // multiplicity[c][i] = integer copy count, offsets[c][i] = first new index
    std::vector<std::vector<Int>> multiplicity(t);
    std::vector<std::vector<std::size_t>> offset(t);
    std::vector<std::size_t> new_size(t, 0);
    std::size_t total_vertices = 0;
    for (int c = 0; c < t; ++c) {
        Int d = clearing_denominator(g, c);
        std::size_t at = 0;
        multiplicity[c].reserve(g.class_size(c));
        offset[c].reserve(g.class_size(c));
        for (const Rational& w : g.classes()[c]) {
            Rational cleared = w * d * scale[c];
            Int m = numerator(cleared); // denominator is 1 by construction
            multiplicity[c].push_back(m);
            offset[c].push_back(at);
            if (m > kBlowUpBudget)
                fail(ErrorKind::Budget, "blow-up multiplicity exceeds budget in class " +
                                            std::to_string(c));
            at += static_cast<std::size_t>(m);
        }
        new_size[c] = at;
        total_vertices += at;
        if (total_vertices > kBlowUpBudget)
            fail(ErrorKind::Budget, "blow-up vertex count exceeds budget at class " +
                                        std::to_string(c));
    }

    std::vector<Edge> new_edges;
    for (const Edge& e : g.edges()) {
        Int combos(1);
        for (VertexId v : e) combos *= multiplicity[v.cls][v.idx];
        if (Int(new_edges.size()) + combos > kBlowUpBudget)
            fail(ErrorKind::Budget, "blow-up edge count exceeds budget");
        // odometer over copy choices for each endpoint
        std::vector<std::size_t> pick(e.size(), 0);
        while (true) {
            Edge ne(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                VertexId v = e[i];
                ne[i] = {v.cls, static_cast<int>(offset[v.cls][v.idx] + pick[i])};
            }
            new_edges.push_back(std::move(ne));
            std::size_t d = e.size();
            while (d > 0) {
                --d;
                VertexId v = e[d];
                if (Int(pick[d] + 1) < multiplicity[v.cls][v.idx]) {
                    ++pick[d];
                    for (std::size_t j = d + 1; j < e.size(); ++j) pick[j] = 0;
                    break;
                }
                if (d == 0) goto edge_done;
            }
        }
    edge_done:;
    }
    return make_unit_hypergraph(g.uniformity(), new_size, std::move(new_edges));
}

PartiteHypergraph blow_up(const PartiteHypergraph& g, unsigned scale) {
    return blow_up(g, std::vector<unsigned>(g.num_classes(), scale));
}

PartiteHypergraph permute_classes(const PartiteHypergraph& g,
                                  const std::vector<int>& new_position) {
    const int t = g.num_classes();
    if (static_cast<int>(new_position.size()) != t)
        fail(ErrorKind::Shape, "permutation has " + std::to_string(new_position.size()) +
                                   " entries for " + std::to_string(t) + " classes");
    std::vector<bool> seen(t, false);
    for (int p : new_position) {
        if (p < 0 || p >= t || seen[p])
            fail(ErrorKind::Selector, "class permutation is not a bijection");
        seen[p] = true;
    }
    std::vector<std::vector<Rational>> classes(t);
    for (int c = 0; c < t; ++c) classes[new_position[c]] = g.classes()[c];
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (const Edge& e : g.edges()) {
        Edge mapped = e;
        for (VertexId& v : mapped) v.cls = new_position[v.cls];
        std::sort(mapped.begin(), mapped.end());
        edges.push_back(std::move(mapped));
    }
    return PartiteHypergraph::make(g.uniformity(), std::move(classes), std::move(edges));
}

SimpleRGraph SimpleRGraph::make(int r, int n, std::vector<std::vector<int>> edges) {
    if (r < 2) fail(ErrorKind::Shape, "uniformity must be at least 2");
    if (n < 1) fail(ErrorKind::Shape, "vertex count must be at least 1");
    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != r)
            fail(ErrorKind::Shape, "edge of size " + std::to_string(e.size()) +
                                       " in a " + std::to_string(r) + "-uniform graph");
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                fail(ErrorKind::Selector, "edge vertex " + std::to_string(e[i]) + " out of range");
            if (i > 0 && e[i] == e[i - 1])
                fail(ErrorKind::Shape, "repeated vertex " + std::to_string(e[i]) + " in edge");
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(ErrorKind::Shape, "duplicate edge in input graph");
    return SimpleRGraph{r, n, std::move(edges)};
}

} // namespace phg
