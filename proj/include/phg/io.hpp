#pragma once

#include "phg/hypergraph.hpp"
#include "phg/rational.hpp"

#include <json.hpp>

#include <string>

namespace phg {

using Json = nlohmann::ordered_json;

// Rationals serialize as "p/q" strings ("3" when the denominator is 1);
// plain JSON integers are accepted on input.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& node, const std::string& origin);

// Weighted instance document, format "phg-instance" version 1:
//   {"format": "phg-instance", "version": 1, "r": 2,
//    "classes": [{"weights": ["1/2", "1/2"]}, ...],
//    "edges": [[[0, 0], [1, 1]], ...]}
Json instance_to_json(const PartiteHypergraph& g);
PartiteHypergraph instance_from_json(const Json& doc, const std::string& origin);
PartiteHypergraph parse_instance(const std::string& text, const std::string& origin);
PartiteHypergraph read_instance(const std::string& path);
void write_instance(const PartiteHypergraph& g, const std::string& path);

// Plain uniform graph document, format "phg-rgraph" version 1:
//   {"format": "phg-rgraph", "version": 1, "r": 3, "n": 5,
//    "edges": [[0, 1, 2], ...]}
Json rgraph_to_json(const SimpleRGraph& g);
SimpleRGraph rgraph_from_json(const Json& doc, const std::string& origin);
SimpleRGraph parse_rgraph(const std::string& text, const std::string& origin);
SimpleRGraph read_rgraph(const std::string& path);
void write_rgraph(const SimpleRGraph& g, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace phg
