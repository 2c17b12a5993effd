#include "phg/io.hpp"
#include "phg/errors.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace phg {

namespace {

[[noreturn]] void bad(const std::string& origin, const std::string& msg) {
    fail(ErrorKind::Parse, origin + ": " + msg);
}

const Json& field(const Json& doc, const char* key, const std::string& origin) {
    auto it = doc.find(key);
    if (it == doc.end()) bad(origin, std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const Json& doc, const char* key, const std::string& origin) {
    const Json& node = field(doc, key, origin);
    if (!node.is_number_integer())
        bad(origin, std::string("field \"") + key + "\" must be an integer");
    return node.get<int>();
}

// "format" and "version" are optional on input (a bare {r, classes, edges}
// document is accepted) but validated when present, and always written.
void require_format(const Json& doc, const char* name, const std::string& origin) {
    if (!doc.is_object()) bad(origin, "document must be a JSON object");
    if (auto it = doc.find("format"); it != doc.end()) {
        if (!it->is_string() || it->get<std::string>() != name)
            bad(origin, std::string("expected format \"") + name + "\"");
    }
    if (auto it = doc.find("version"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<int>() != 1)
            bad(origin, "unsupported version, expected 1");
    }
}

Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // e.what() carries the line/column position
        bad(origin, e.what());
    }
}

} // namespace

Json rational_to_json(const Rational& value) {
    return Json(to_string(value));
}

Rational rational_from_json(const Json& node, const std::string& origin) {
    if (node.is_number_integer()) return Rational(node.get<std::int64_t>());
    if (node.is_string()) {
        try {
            return parse_rational(node.get<std::string>());
        } catch (const Error& e) {
            bad(origin, e.what());
        }
    }
    bad(origin, "expected a rational as \"p/q\" string or integer, got " +
                    std::string(node.type_name()));
}

Json instance_to_json(const PartiteHypergraph& g) {
    Json doc;
    doc["format"] = "phg-instance";
    doc["version"] = 1;
    doc["r"] = g.uniformity();
    Json classes = Json::array();
    for (int c = 0; c < g.num_classes(); ++c) {
        Json weights = Json::array();
        for (std::size_t i = 0; i < g.class_size(c); ++i)
            weights.push_back(rational_to_json(g.weight({c, static_cast<int>(i)})));
        classes.push_back(Json{{"weights", std::move(weights)}});
    }
    doc["classes"] = std::move(classes);
    Json edges = Json::array();
    for (const Edge& e : g.edges()) {
        Json je = Json::array();
        for (VertexId v : e) je.push_back(Json::array({v.cls, v.idx}));
        edges.push_back(std::move(je));
    }
    doc["edges"] = std::move(edges);
    return doc;
}

PartiteHypergraph instance_from_json(const Json& doc, const std::string& origin) {
    require_format(doc, "phg-instance", origin);
    const int r = int_field(doc, "r", origin);

    const Json& jclasses = field(doc, "classes", origin);
    if (!jclasses.is_array() || jclasses.empty()) bad(origin, "\"classes\" must be a non-empty array");
    std::vector<std::vector<Rational>> classes;
    classes.reserve(jclasses.size());
    for (const Json& jc : jclasses) {
        if (!jc.is_object()) bad(origin, "each class must be an object");
        const Json& jw = field(jc, "weights", origin);
        if (!jw.is_array() || jw.empty()) bad(origin, "\"weights\" must be a non-empty array");
        std::vector<Rational> weights;
        weights.reserve(jw.size());
        for (const Json& w : jw) weights.push_back(rational_from_json(w, origin));
        classes.push_back(std::move(weights));
    }

    const Json& jedges = field(doc, "edges", origin);
    if (!jedges.is_array()) bad(origin, "\"edges\" must be an array");
    std::vector<Edge> edges;
    edges.reserve(jedges.size());
    for (const Json& je : jedges) {
        if (!je.is_array()) bad(origin, "each edge must be an array of [class, index] pairs");
        Edge e;
        e.reserve(je.size());
        for (const Json& jv : je) {
            if (!jv.is_array() || jv.size() != 2 || !jv[0].is_number_integer() ||
                !jv[1].is_number_integer())
                bad(origin, "each edge vertex must be a [class, index] integer pair");
            e.push_back({jv[0].get<int>(), jv[1].get<int>()});
        }
        edges.push_back(std::move(e));
    }

    try {
        return PartiteHypergraph::make(r, std::move(classes), std::move(edges));
    } catch (const Error& e) {
        bad(origin, e.what());
    }
}

PartiteHypergraph parse_instance(const std::string& text, const std::string& origin) {
    return instance_from_json(parse_json(text, origin), origin);
}

PartiteHypergraph read_instance(const std::string& path) {
    return parse_instance(read_text_file(path), path);
}

void write_instance(const PartiteHypergraph& g, const std::string& path) {
    write_text_file(path, instance_to_json(g).dump(2) + "\n");
}

Json rgraph_to_json(const SimpleRGraph& g) {
    Json doc;
    doc["format"] = "phg-rgraph";
    doc["version"] = 1;
    doc["r"] = g.r;
    doc["n"] = g.n;
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back(e);
    doc["edges"] = std::move(edges);
    return doc;
}

SimpleRGraph rgraph_from_json(const Json& doc, const std::string& origin) {
    require_format(doc, "phg-rgraph", origin);
    const int r = int_field(doc, "r", origin);
    const int n = int_field(doc, "n", origin);
    const Json& jedges = field(doc, "edges", origin);
    if (!jedges.is_array()) bad(origin, "\"edges\" must be an array");
    std::vector<std::vector<int>> edges;
    edges.reserve(jedges.size());
    for (const Json& je : jedges) {
        if (!je.is_array()) bad(origin, "each edge must be an array of vertex indices");
        std::vector<int> e;
        e.reserve(je.size());
        for (const Json& jv : je) {
            if (!jv.is_number_integer()) bad(origin, "edge vertices must be integers");
            e.push_back(jv.get<int>());
        }
        edges.push_back(std::move(e));
    }
    try {
        return SimpleRGraph::make(r, n, std::move(edges));
    } catch (const Error& e) {
        bad(origin, e.what());
    }
}

SimpleRGraph parse_rgraph(const std::string& text, const std::string& origin) {
    return rgraph_from_json(parse_json(text, origin), origin);
}

SimpleRGraph read_rgraph(const std::string& path) {
    return parse_rgraph(read_text_file(path), path);
}

void write_rgraph(const SimpleRGraph& g, const std::string& path) {
    write_text_file(path, rgraph_to_json(g).dump(2) + "\n");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Parse, path + ": cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(ErrorKind::Parse, path + ": read failed");
    return std::move(buf).str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::Parse, path + ": cannot open for writing");
    out << text;
    out.flush();
    if (!out) fail(ErrorKind::Parse, path + ": write failed");
}

} // namespace phg
