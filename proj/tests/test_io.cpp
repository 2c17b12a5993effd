#include "test_util.hpp"

#include "phg/constructions.hpp"
#include "phg/io.hpp"

using namespace phg;
using testutil::edge;
using testutil::q;

TEST_CASE("rational json round trip") {
    CHECK(rational_to_json(q("1/2")) == Json("1/2"));
    CHECK(rational_to_json(Rational(3)) == Json("3"));
    CHECK(rational_from_json(Json("3/4"), "here") == q("3/4"));
    CHECK(rational_from_json(Json(5), "here") == Rational(5));
    CHECK(rational_from_json(Json(-2), "here") == Rational(-2));
    CHECK_KIND(rational_from_json(Json("1/0"), "here"), ErrorKind::Parse);
    CHECK_KIND(rational_from_json(Json(1.5), "here"), ErrorKind::Parse);
    CHECK_KIND(rational_from_json(Json::array(), "here"), ErrorKind::Parse);
}

TEST_CASE("instance document round trip preserves the graph") {
    PartiteHypergraph g = tripartite_matching_complement(q("1/2"), q("2/3"), q("4/5"));
    Json doc = instance_to_json(g);
    CHECK(doc["format"] == "phg-instance");
    CHECK(doc["version"] == 1);
    CHECK(instance_from_json(doc, "round-trip") == g);

    PartiteHypergraph h = instance_from_json(Json::parse(doc.dump()), "re-parsed");
    CHECK(h == g);
}

TEST_CASE("instance reader accepts bare documents and integer weights") {
    std::string text = R"({
      "r": 2,
      "classes": [{"weights": [1, 1]}, {"weights": ["1/2"]}, {"weights": [2]}],
      "edges": [[[0, 0], [1, 0]], [[1, 0], [2, 0]]]
    })";
    PartiteHypergraph g = parse_instance(text, "inline");
    CHECK(g.uniformity() == 2);
    CHECK(g.num_classes() == 3);
    CHECK(g.class_size(0) == 2);
    CHECK(g.weight({1, 0}) == q("1/2"));
    CHECK(g.weight({2, 0}) == Rational(2));
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(edge({{1, 0}, {2, 0}})));
}

TEST_CASE("instance reader rejects broken documents") {
    auto attempt = [](const std::string& text) { return parse_instance(text, "inline"); };

    CHECK_KIND(attempt("{"), ErrorKind::Parse);
    CHECK_KIND(attempt("[]"), ErrorKind::Parse);
    CHECK_KIND(attempt(R"({"r": 2, "classes": []})"), ErrorKind::Parse);
    CHECK_KIND(attempt(R"({"classes": [], "edges": []})"), ErrorKind::Parse);
    CHECK_KIND(attempt(R"({"format": "phg-rgraph", "version": 1, "r": 2,
                           "classes": [{"weights": [1]}, {"weights": [1]}],
                           "edges": []})"),
               ErrorKind::Parse);
    CHECK_KIND(attempt(R"({"format": "phg-instance", "version": 7, "r": 2,
                           "classes": [{"weights": [1]}, {"weights": [1]}],
                           "edges": []})"),
               ErrorKind::Parse);
    // weight zero fails hypergraph validation, surfaced as a parse error
    CHECK_KIND(attempt(R"({"r": 2,
                           "classes": [{"weights": ["0/3"]}, {"weights": [1]}],
                           "edges": []})"),
               ErrorKind::Parse);
    // two picks in one class
    CHECK_KIND(attempt(R"({"r": 2,
                           "classes": [{"weights": [1, 1]}, {"weights": [1]}],
                           "edges": [[[0, 0], [0, 1]]]})"),
               ErrorKind::Parse);
    CHECK_KIND(attempt(R"({"r": 2,
                           "classes": [{"weights": [1]}, {"weights": [1]}],
                           "edges": [[[0, 0], [1, 0], [1, 0]]]})"),
               ErrorKind::Parse);
}

TEST_CASE("malformed json reports the position") {
    try {
        parse_instance("{\"r\": 2,\n  \"classes\": oops}", "inline");
        CHECK_MESSAGE(false, "expected a parse failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("instance files round trip on disk") {
    PartiteHypergraph g = tripartite_matching_complement(q("3/4"), q("3/4"), q("3/4"));
    std::string path = "io_test_instance.json";
    write_instance(g, path);
    CHECK(read_instance(path) == g);
    std::remove(path.c_str());
    CHECK_KIND(read_instance(path), ErrorKind::Parse);
}

TEST_CASE("rgraph document round trip") {
    SimpleRGraph g = SimpleRGraph::make(3, 4, {{0, 1, 2}, {1, 2, 3}});
    Json doc = rgraph_to_json(g);
    CHECK(doc["format"] == "phg-rgraph");
    CHECK(doc["n"] == 4);
    CHECK(rgraph_from_json(doc, "round-trip") == g);

    SimpleRGraph bare = parse_rgraph(R"({"r": 2, "n": 3, "edges": [[0, 1]]})", "inline");
    CHECK(bare.r == 2);
    CHECK(bare.edges.size() == 1);

    CHECK_KIND(parse_rgraph(R"({"r": 2, "edges": []})", "inline"), ErrorKind::Parse);
    CHECK_KIND(parse_rgraph(R"({"r": 2, "n": 3, "edges": [[0, 0]]})", "inline"),
               ErrorKind::Parse);
}

TEST_CASE("text file helpers") {
    std::string path = "io_test_text.txt";
    write_text_file(path, "alpha\nbeta\n");
    CHECK(read_text_file(path) == "alpha\nbeta\n");
    std::remove(path.c_str());
    CHECK_KIND(read_text_file(path), ErrorKind::Parse);
}
