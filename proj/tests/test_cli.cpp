#include "test_util.hpp"

#include "phg/constructions.hpp"
#include "phg/hypergraph.hpp"
#include "phg/io.hpp"

#include <cstdio>
#include <string>

using namespace phg;
using testutil::edge;
using testutil::q;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(PHG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

Json parse_output(const RunResult& result) {
    CAPTURE(result.out);
    return Json::parse(result.out);
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string name) : path(std::move(name)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("cli density reports the vector and the bound") {
    TempFile file("cli_density.json");
    write_instance(tripartite_matching_complement(q("1/2"), q("1/2"), q("1/2")), file.path);

    RunResult r = run_cli("density " + file.path);
    CHECK(r.code == 0);
    Json out = parse_output(r);
    CHECK(out["command"] == "density");
    CHECK(out["densities"] == Json::array({"3/4", "3/4", "3/4"}));
    CHECK(out["density_sum"] == "9/4");
    CHECK(out["clique_bound"] == "1/4");
}

TEST_CASE("cli construct piped into cliques closes the loop") {
    TempFile file("cli_construct.json");
    RunResult built =
        run_cli("construct --r 3 --rho 9/10,9/10,9/10,9/10 --out " + file.path);
    CHECK(built.code == 0);
    Json report = parse_output(built);
    CHECK(report["clique_bound"] == "3/5");
    CHECK(report["tight"] == true);
    CHECK(report["class_sizes"] == Json::array({5, 2, 40, 1}));
    CHECK(report["written"] == file.path);

    RunResult measured = run_cli("cliques " + file.path);
    CHECK(measured.code == 0);
    Json out = parse_output(measured);
    CHECK(out["C"] == "3/5");
    CHECK(out["slack"] == "0");
}

TEST_CASE("cli cliques collects witnesses on request") {
    TempFile file("cli_witness.json");
    write_instance(testutil::complete_unit(2, {2, 2, 2}), file.path);
    RunResult r = run_cli("cliques " + file.path + " --witnesses 2");
    CHECK(r.code == 0);
    Json out = parse_output(r);
    CHECK(out["transversal_count"] == 8);
    REQUIRE(out["witnesses"].size() == 2);
    CHECK(out["witnesses"][0] == Json::array({Json::array({0, 0}), Json::array({1, 0}),
                                              Json::array({2, 0})}));
}

TEST_CASE("cli near-cliques relaxes the requirement") {
    TempFile file("cli_near.json");
    write_instance(testutil::path_three_classes(), file.path);
    RunResult strict = run_cli("near-cliques " + file.path + " --k 0");
    CHECK(parse_output(strict)["transversal_count"] == 0);
    RunResult relaxed = run_cli("near-cliques " + file.path + " --k 1");
    Json out = parse_output(relaxed);
    CHECK(out["transversal_count"] == 1);
    CHECK(out["density"] == "1");
}

TEST_CASE("cli lift reports balance and clique agreement") {
    TempFile file("cli_lift_src.json");
    write_rgraph(SimpleRGraph::make(2, 3, {{0, 1}, {0, 2}, {1, 2}}), file.path);
    RunResult r = run_cli("lift " + file.path);
    CHECK(r.code == 0);
    Json out = parse_output(r);
    CHECK(out["edges"] == 18);
    CHECK(out["densities"] == Json::array({"2/3", "2/3", "2/3"}));
    CHECK(out["strictly_balanced"] == true);
    CHECK(out["clique_present"] == true);
}

TEST_CASE("cli blowup clears weights and preserves densities") {
    TempFile file("cli_blowup.json");
    write_instance(tripartite_matching_complement(q("1/2"), q("1/2"), q("1/2")), file.path);
    RunResult r = run_cli("blowup " + file.path + " --scale 2");
    CHECK(r.code == 0);
    Json out = parse_output(r);
    CHECK(out["class_sizes"] == Json::array({4, 4, 4}));
    CHECK(out["densities_preserved"] == true);
    CHECK(out["clique_density"] == "1/4");
}

TEST_CASE("cli balance includes the codegree block at the clique shape") {
    TempFile file("cli_balance.json");
    write_instance(testutil::complete_unit(2, {2, 2, 2}), file.path);
    RunResult r = run_cli("balance " + file.path);
    CHECK(r.code == 0);
    Json out = parse_output(r);
    CHECK(out["balanced"] == true);
    CHECK(out["codegrees"]["min"] == 4);
    CHECK(out["codegrees"]["max"] == 4);
}

TEST_CASE("cli threshold certifies the complete instance") {
    TempFile file("cli_threshold.json");
    write_instance(testutil::complete_unit(2, {1, 1, 1}), file.path);
    RunResult r = run_cli("threshold " + file.path + " --k 0");
    CHECK(r.code == 0);
    Json out = parse_output(r);
    CHECK(out["margin"] == "1");
    CHECK(out["theorem_applies"] == true);
    CHECK(out["witness_found"] == true);
    CHECK(out["theorem_violated"] == false);
}

TEST_CASE("cli verify-bound exhaustive scan finds the bound tight") {
    RunResult r = run_cli("verify-bound --r 2 --sizes 1,1,1 --mode exhaustive");
    CHECK(r.code == 0);
    Json out = parse_output(r);
    CHECK(out["instances"] == 8);
    CHECK(out["cross_checks"] == 16);
    CHECK(out["violations"] == 0);
    CHECK(out["min_slack"] == "0");
}

TEST_CASE("cli verify-bound random reports are byte-deterministic") {
    const std::string base =
        "verify-bound --r 2 --sizes 2,2,2 --trials 40 --seed 3 --weights mixed";
    RunResult first = run_cli(base);
    RunResult second = run_cli(base);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    RunResult parallel = run_cli(base + " --jobs 4");
    Json a = parse_output(first);
    Json b = parse_output(parallel);
    CHECK(b["config"]["jobs"] == 4);
    a["config"].erase("jobs");
    b["config"].erase("jobs");
    CHECK(a == b);
}

TEST_CASE("cli verify-bound writes the full report with --out") {
    TempFile file("cli_verify_out.json");
    RunResult r = run_cli("verify-bound --r 2 --sizes 1,1,1 --mode exhaustive --out " +
                          file.path);
    CHECK(r.code == 0);
    Json written = Json::parse(read_text_file(file.path));
    CHECK(written["instances"] == 8);
    CHECK(written["tightest_instance"]["format"] == "phg-instance");
}

TEST_CASE("cli tightness emits csv rows") {
    RunResult r = run_cli(
        "tightness --r 2 --target 3/4,3/4,3/4 --target 1,1,1/2 --format csv");
    CHECK(r.code == 0);
    REQUIRE(r.out.rfind("# config: ", 0) == 0);
    std::size_t first_line = r.out.find('\n');
    std::size_t second_line = r.out.find('\n', first_line + 1);
    std::string header = r.out.substr(first_line + 1, second_line - first_line - 1);
    CHECK(header ==
          "target,feasible,note,bound,clique_density,slack,tight,cross_checked,"
          "class_sizes,edges");
    CHECK(r.out.find("3/4;3/4;3/4,true,,1/4,1/4,0,true,true") != std::string::npos);
}

TEST_CASE("cli tightness notes an out-of-regime target without failing") {
    RunResult r = run_cli("tightness --r 2 --target 1/2,1/2,1/2");
    CHECK(r.code == 0);
    Json out = parse_output(r);
    CHECK(out["feasible"] == 0);
    CHECK(out["tight"] == 0);
    CHECK(out["rows"][0]["note"] == "density sum below r");
}

TEST_CASE("cli pos-region point and grid sweeps") {
    RunResult point = run_cli("pos-region --point 3/4,3/4,3/4");
    CHECK(point.code == 0);
    Json pout = parse_output(point);
    CHECK(pout["delta"] == "0");
    CHECK(pout["in_region"] == true);
    CHECK(pout["sum_hypothesis"] == true);

    RunResult low = run_cli("pos-region --point 1/2,1/2,1/2");
    CHECK(low.code == 0);
    Json lout = parse_output(low);
    CHECK(lout["in_region"] == false);
    CHECK(lout["sum_hypothesis"] == false);

    RunResult grid = run_cli("pos-region --grid 12");
    CHECK(grid.code == 0);
    Json gout = parse_output(grid);
    CHECK(gout["holds"] == true);
    CHECK(gout["failures"] == 0);
}

TEST_CASE("cli table output appends decimal hints") {
    TempFile file("cli_table.json");
    write_instance(tripartite_matching_complement(q("1/2"), q("1/2"), q("1/2")), file.path);
    RunResult r = run_cli("density " + file.path + " --format table --decimal 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("3/4 (~0.7500)") != std::string::npos);
    CHECK(r.out.find("{") == std::string::npos);
}

TEST_CASE("cli exit codes separate usage, data, and internal failures") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("cliques --help").code == 0);
    CHECK(run_cli("").code != 0);
    CHECK(run_cli("no-such-command").code != 0);
    CHECK(run_cli("density missing_file.json").code == 1);

    RunResult missing = run_cli("density missing_file.json");
    CHECK(missing.out.find("error (parse)") != std::string::npos);

    TempFile file("cli_badshape.json");
    write_text_file(file.path,
                    R"({"r": 2, "classes": [{"weights": [1]}], "edges": []})");
    RunResult shape = run_cli("density " + file.path);
    CHECK(shape.code == 1);
    CHECK(shape.out.find("error (parse)") != std::string::npos);

    CHECK(run_cli("verify-bound --r 2 --sizes 1,1 --mode exhaustive").code == 1);
    CHECK(run_cli("construct --r 2 --rho 1/2,1/2,1/2").code == 1);
    CHECK(run_cli("pos-region --point 1,1").code == 1);
}
