#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cellres/cli.hpp"
#include "cellres/io.hpp"

using namespace cellres;

namespace {

struct CliRun {
    int exit = 0;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int exit = run_cli(args, out, err);
    return {exit, out.str(), err.str()};
}

const std::string kFail = R"({"m":2,"n":2,"edge_weights":[[2,3],[3,2]]})";
const std::string kSatisfy = R"({"m":2,"n":2,"edge_weights":[[2,2],[3,2]]})";

}  // namespace

TEST_CASE("check on the failing weighting") {
    CliRun r = run({"check", "--json", kFail});
    CHECK(r.exit == kExitNonResolution);
    CHECK(r.out == "theorem: NO, oracle: NO, witness: X1^2*X2^2*Y1^2*Y2^2\n");
}

TEST_CASE("check on the passing weighting") {
    CliRun r = run({"check", "--json", kSatisfy});
    CHECK(r.exit == kExitResolution);
    CHECK(r.out == "theorem: YES (v=X1 -> base), oracle: YES\n");
}

TEST_CASE("check on a one-row weighting") {
    CliRun r = run({"check", "--json", R"({"m":1,"n":3,"edge_weights":[[3,1,4]]})"});
    CHECK(r.exit == kExitResolution);
    CHECK(r.out.find("theorem: YES") == 0);
    CHECK(r.out.find("oracle: YES") != std::string::npos);
}

TEST_CASE("check on vertex weights") {
    CliRun r = run(
        {"check", "--json", R"({"m":2,"n":2,"vertex_weights":{"x":[1,3],"y":[2,4]}})"});
    CHECK(r.exit == kExitResolution);
    CHECK(r.out == "theorem: YES (vertex-weighted), oracle: YES\n");
}

TEST_CASE("resolve prints ranks and verdicts") {
    CliRun r = run({"resolve", "--json", R"({"m":2,"n":2,"edge_weights":[[1,1],[1,1]]})"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("ranks: 1 4 4 1\n") != std::string::npos);
    CHECK(r.out.find("minimal: YES\n") != std::string::npos);
    CHECK(r.out.find("dd_zero: YES\n") != std::string::npos);
    CHECK(r.out.find("d1 (1x4):\nX1*Y1 X1*Y2 X2*Y1 X2*Y2\n") != std::string::npos);
}

TEST_CASE("resolve the single-edge graph") {
    CliRun r = run({"resolve", "--json", R"({"m":1,"n":1,"edge_weights":[[2]]})"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("ranks: 1 1\n") != std::string::npos);
    CHECK(r.out.find("X1^2*Y1^2\n") != std::string::npos);
}

TEST_CASE("resolve json format round-trips") {
    CliRun r = run({"resolve", "--format", "json", "--json",
                    R"({"m":2,"n":2,"edge_weights":[[1,1],[1,1]]})"});
    CHECK(r.exit == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["ranks"] == nlohmann::json({1, 4, 4, 1}));
    CHECK(j["minimal"] == true);
    CHECK(j["dd_zero"] == true);
    CHECK(j["differentials"].size() == 3);
}

TEST_CASE("betti table") {
    CliRun r = run({"betti", "2", "3"});
    CHECK(r.exit == 0);
    CHECK(r.out == "6 9 5 1\n");
    CliRun j = run({"betti", "2", "2", "--format", "json"});
    CHECK(nlohmann::json::parse(j.out)["betti"] == nlohmann::json({4, 4, 1}));
}

TEST_CASE("survey summary line") {
    CliRun r = run({"survey", "2", "2", "3"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("81/81 agree\n") == 0);
    CHECK(r.out.find("torsion_sightings: 0\n") != std::string::npos);

    CliRun again = run({"survey", "2", "2", "--max-weight", "3"});
    CHECK(again.out == r.out);  // byte-deterministic
}

TEST_CASE("survey json") {
    CliRun r = run({"survey", "2", "2", "2", "--format", "json"});
    CHECK(r.exit == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["total"] == 16);
    CHECK(j["agreements"] == 16);
    CHECK(j["disagreements"].empty());
}

TEST_CASE("survey refuses an infeasible grid") {
    CliRun r = run({"survey", "4", "4", "5"});
    CHECK(r.exit == kExitUsage);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("export to a computer-algebra script") {
    CliRun r = run({"export", "--format", "m2", "--json",
                    R"({"m":2,"n":2,"edge_weights":[[1,1],[1,1]]})"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("I = ideal(X1*Y1,X1*Y2,X2*Y1,X2*Y2);") != std::string::npos);
    CHECK(r.out.find("QQ[X1,X2,Y1,Y2]") != std::string::npos);
    CHECK(r.out.find("assert(d1 * d2 == 0);") != std::string::npos);
}

TEST_CASE("export honors the characteristic in the ring") {
    CliRun r = run({"export", "--format", "m2", "--char", "2", "--json",
                    R"({"m":1,"n":1,"edge_weights":[[1]]})"});
    CHECK(r.out.find("ZZ/2[X1,Y1]") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run({"check"}).exit == kExitUsage);                       // no input
    CHECK(run({"check", "--json", "{oops"}).exit == kExitUsage);    // malformed JSON
    CHECK(run({"check", "--json", "{}"}).exit == kExitUsage);       // missing fields
    CHECK(run({"check", "--json", kFail, "--char", "4"}).exit == kExitUsage);
    CHECK(run({"nonsense"}).exit == kExitUsage);
    CHECK(run({}).exit == kExitUsage);
    CHECK(run({"check", "--json",
               R"({"m":2,"n":2,"edge_weights":[[1,1],[1,1]],"vertex_weights":{"x":[1],"y":[1]}})"})
              .exit == kExitUsage);
    CliRun bad = run({"check", "--json", R"({"m":2,"n":2,"edge_weights":[[1,1]]})"});
    CHECK(bad.exit == kExitUsage);
    CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("graph json parsing errors") {
    CHECK_THROWS_AS(parse_graph_input_text(R"({"m":2,"n":2})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_input_text(R"({"m":2,"n":2,"edge_weights":[[0,1],[1,1]]})"),
                    std::invalid_argument);
    GraphInput in = parse_graph_input_text(R"({"m":2,"n":2,"edge_weights":[[2,3],[3,2]]})");
    CHECK(std::holds_alternative<EdgeWeighting>(in));
    CHECK(labels_of(in).labels.size() == 4);
}

TEST_CASE("check output is byte-deterministic") {
    CliRun a = run({"check", "--json", kFail});
    CliRun b = run({"check", "--json", kFail});
    CHECK(a.out == b.out);
}

TEST_CASE("check respects the characteristic flag") {
    CliRun r = run({"check", "--char", "2", "--json", kFail});
    CHECK(r.exit == kExitNonResolution);
    CHECK(r.out == "theorem: NO, oracle: NO, witness: X1^2*X2^2*Y1^2*Y2^2\n");
}

TEST_CASE("thread cap from the environment does not change survey output") {
    CliRun base = run({"survey", "2", "2", "2"});
    setenv("CELLRES_THREADS", "1", 1);
    CliRun solo = run({"survey", "2", "2", "2"});
    setenv("CELLRES_THREADS", "3", 1);
    CliRun trio = run({"survey", "2", "2", "2"});
    unsetenv("CELLRES_THREADS");
    CHECK(base.out == solo.out);
    CHECK(base.out == trio.out);
}
