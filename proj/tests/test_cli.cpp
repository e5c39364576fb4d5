#include "partalg/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "partalg/json_io.hpp"

using namespace partalg;

namespace {

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    const int status = cli_run(std::move(args), out, err, in);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("mul reproduces the worked diagram product") {
    const std::string lhs = "1 2 3 2' | 4 1' 4' | 5 5' | 3'";
    const std::string rhs = "1 1' 2' | 2 4' | 3 | 4 | 5 3' 5'";

    const auto r = run({"mul", lhs, rhs});
    CHECK(r.status == 0);
    CHECK(r.out ==
          R"({"k":5,"blocks":[[1,2,3,-4],[4,-1,-2],[5,-3,-5]],"removed":1})"
          "\n");
    CHECK(r.err.empty());

    const auto t = run({"mul", lhs, rhs, "--format", "text"});
    CHECK(t.status == 0);
    CHECK(t.out == "1 2 3 4' | 4 1' 2' | 5 3' 5'\nremoved: 1\n");
}

TEST_CASE("mul accepts JSON elements, stdin, and files") {
    const Ring ring{2, Mode::poly, Rational(0)};
    const Element e1 = gen_e(1, ring);
    const std::string element_json = element_to_json(e1).dump();

    const auto lifted = run({"mul", element_json, "1 1' | 2 2'"});
    CHECK(lifted.status == 0);
    CHECK(lifted.out == element_json + "\n");

    const auto from_stdin = run({"mul", "-", "1 1' | 2 2'"}, "1 | 1' | 2 2'\n");
    CHECK(from_stdin.status == 0);
    CHECK(from_stdin.out == R"({"k":2,"blocks":[[1],[2,-2],[-1]],"removed":0})" "\n");

    const auto path =
        std::filesystem::temp_directory_path() / "partalg_cli_test_diagram.json";
    {
        std::ofstream file(path);
        file << diagram_to_json(Diagram::identity(2)).dump();
    }
    const auto from_file = run({"mul", path.string(), "1 | 1' | 2 2'"});
    std::filesystem::remove(path);
    CHECK(from_file.status == 0);
    CHECK(Json::parse(from_file.out).at("removed") == 0);

    const auto mismatch = run({"mul", "1 1'", "1 1' | 2 2'"});
    CHECK(mismatch.status == 2);
    CHECK(mismatch.err.find("strand counts") != std::string::npos);

    const auto empty = run({"mul", "-", "1 1'"}, "  \n");
    CHECK(empty.status == 2);
}

TEST_CASE("jm emits exact elements and enforces caps") {
    Ring ring;
    ring.k = 2;
    JMCache cache(ring);

    const auto r = run({"jm", "L", "3", "--k", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == element_to_json(cache.L(3)).dump() + "\n");

    const auto t = run({"jm", "sigma", "2", "--k", "2", "--format", "text"});
    CHECK(t.status == 0);
    CHECK(t.out == cache.sigma(2).str() + "\n");

    const auto bad_index = run({"jm", "L", "99", "--k", "2"});
    CHECK(bad_index.status == 2);
    CHECK(bad_index.err.find("99") != std::string::npos);

    const auto bad_kind = run({"jm", "M", "1", "--k", "2"});
    CHECK(bad_kind.status == 2);

    const auto over_cap = run({"jm", "L", "1", "--k", "9"});
    CHECK(over_cap.status == 2);
    CHECK(over_cap.err.find("k=9") != std::string::npos);
    CHECK(over_cap.err.find("PARTALG_MAX_K") != std::string::npos);

    // --delta switches to the specialized cap and to rational mode.
    const auto specialized = run({"jm", "L", "2", "--k", "4", "--delta", "3"});
    CHECK(specialized.status == 0);
    CHECK(Json::parse(specialized.out).at("mode") == "rational");
    CHECK(Json::parse(specialized.out).at("delta") == "3");
}

TEST_CASE("PARTALG_MAX_K raises the hard caps but never lowers them") {
    CHECK(run({"jm", "L", "1", "--k", "4"}).status == 2);

    setenv("PARTALG_MAX_K", "4", 1);
    const auto raised = run({"jm", "L", "1", "--k", "4"});
    unsetenv("PARTALG_MAX_K");
    CHECK(raised.status == 0);

    setenv("PARTALG_MAX_K", "1", 1);
    const auto lowered = run({"jm", "L", "1", "--k", "3"});
    unsetenv("PARTALG_MAX_K");
    CHECK(lowered.status == 0);
}

TEST_CASE("verify reports the relation catalogue") {
    const auto r = run({"verify", "--level", "4", "--k", "2"});
    CHECK(r.status == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("level") == 4);
    CHECK(j.at("pass") == true);
    CHECK(!j.at("checks").empty());
    for (const auto& check : j.at("checks")) CHECK(check.at("pass") == true);

    const auto t = run({"verify", "--level", "2", "--format", "text"});
    CHECK(t.status == 0);
    CHECK(t.out.find("relations hold") != std::string::npos);
    CHECK(t.out.find("FAIL") == std::string::npos);
}

TEST_CASE("ssp evaluates numerically and at the JM elements") {
    const auto l2 = run({"ssp", "l", "2", "--values", "1,2"});
    CHECK(l2.status == 0);
    CHECK(l2.out == R"({"kind":"l","n":2,"value":"6"})" "\n");

    const auto q0 = run({"ssp", "q", "0", "--values", "1,2,3", "--format", "text"});
    CHECK(q0.status == 0);
    CHECK(q0.out == "1\n");

    const auto q2 = run({"ssp", "q", "2", "--values", "1/2,3"});
    CHECK(q2.out == R"({"kind":"q","n":2,"value":"-35/4"})" "\n");

    Ring ring;
    ring.k = 1;
    JMCache cache(ring);
    const Element expected = cache.N(1) + cache.N(2);
    const auto at_jm = run({"ssp", "l", "1", "--at-jm", "--r", "2", "--k", "1"});
    CHECK(at_jm.status == 0);
    CHECK(at_jm.out == element_to_json(expected).dump() + "\n");

    const auto q_at_jm = run({"ssp", "q", "1", "--at-jm", "--r", "2"});
    CHECK(q_at_jm.out == at_jm.out);

    CHECK(run({"ssp", "l", "2"}).status == 2);
    CHECK(run({"ssp", "l", "2", "--at-jm", "--values", "1"}).status == 2);
    CHECK(run({"ssp", "l", "1", "--at-jm"}).status == 2);
    const auto bad_value = run({"ssp", "l", "1", "--values", "x"});
    CHECK(bad_value.status == 2);
    CHECK(bad_value.err.find("x") != std::string::npos);
}

TEST_CASE("center-check confirms centrality") {
    const auto r = run({"center-check", "--r", "2", "--nmax", "2"});
    CHECK(r.status == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("checks").size() == 3);

    const auto t = run({"center-check", "--r", "3", "--nmax", "1", "--format", "text"});
    CHECK(t.status == 0);
    CHECK(t.out == "level 3: l_0..l_1 all central\n");
}

TEST_CASE("center-rank reports rank and stability") {
    const auto r = run({"center-rank", "--k", "2", "--delta", "5"});
    CHECK(r.status == 0);
    CHECK(r.out == R"({"k":2,"delta":"5","rank":4,"stable":true})" "\n");

    const auto t = run({"center-rank", "--k", "1", "--delta", "1/2", "--format", "text"});
    CHECK(t.status == 0);
    CHECK(t.out.rfind("rank ", 0) == 0);

    CHECK(run({"center-rank", "--k", "5", "--delta", "1"}).status == 2);
}

TEST_CASE("branch lists the vertices at a level") {
    const auto r = run({"branch", "--level", "6"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          R"({"level":6,"vertices":[{"shape":[],"l":3},{"shape":[1],"l":2},)"
          R"({"shape":[2],"l":1},{"shape":[1,1],"l":1},{"shape":[3],"l":0},)"
          R"({"shape":[2,1],"l":0},{"shape":[1,1,1],"l":0}]})"
          "\n");

    const auto t = run({"branch", "--level", "3", "--format", "text"});
    CHECK(t.status == 0);
    CHECK(t.out == "((),1)\n((1),0)\n");

    CHECK(run({"branch", "--level", "11"}).status == 2);
}

TEST_CASE("paths enumerates and counts") {
    const auto count =
        run({"paths", "--shape", "2,1", "--l", "0", "--level", "6", "--count-only"});
    CHECK(count.status == 0);
    const Json j = Json::parse(count.out);
    CHECK(j.at("count").get<long long>() == count_paths(GraphVertex{Shape({2, 1}), 0, 6}));
    CHECK(!j.contains("paths"));

    const auto full = run({"paths", "--level", "4"});
    CHECK(full.status == 0);
    const Json pj = Json::parse(full.out);
    CHECK(pj.at("shape") == Json::array());
    CHECK(pj.at("l") == 2);
    CHECK(pj.at("count") == 2);
    REQUIRE(pj.at("paths").size() == 2);
    for (const auto& path : pj.at("paths")) {
        CHECK(path.size() == 5);
        CHECK(path.front() == Json::parse(R"({"shape":[],"l":0})"));
        CHECK(path.back() == Json::parse(R"({"shape":[],"l":2})"));
    }

    const auto inconsistent = run({"paths", "--shape", "2,1", "--l", "2", "--level", "6"});
    CHECK(inconsistent.status == 2);
}

TEST_CASE("std-path emits the standard path and its contents") {
    const auto r =
        run({"std-path", "--shape", "2,1", "--l", "0", "--level", "6", "--contents"});
    CHECK(r.status == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("path") == path_to_json(standard_path(GraphVertex{Shape({2, 1}), 0, 6})));
    CHECK(j.at("contents") ==
          Json::parse(R"([{"a":"0","b":"-1/2"},{"a":"0","b":"-1/2"},)"
                      R"({"a":"1","b":"-1/2"},{"a":"1","b":"-1/2"},)"
                      R"({"a":"2","b":"-1/2"},{"a":"-1","b":"-1/2"}])"));

    const auto t = run({"std-path", "--shape", "1", "--level", "5", "--format", "text"});
    CHECK(t.status == 0);
    CHECK(t.out.find(" -> ") != std::string::npos);

    CHECK(run({"std-path", "--shape", "4", "--level", "4"}).status == 2);
}

TEST_CASE("blocks partitions labels and crosschecks the two methods") {
    const auto r = run({"blocks", "--k", "3", "--delta", "1", "--method", "both"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          R"({"delta":"1","k":3,"classes":[)"
          R"([{"shape":[],"l":3},{"shape":[2],"l":1},{"shape":[2,1],"l":0}],)"
          R"([{"shape":[1],"l":2}],[{"shape":[1,1],"l":1}],[{"shape":[3],"l":0}],)"
          R"([{"shape":[1,1,1],"l":0}]],"crosscheck":true})"
          "\n");

    const auto chains = run({"blocks", "--k", "2", "--delta", "0", "--method", "chains"});
    CHECK(chains.status == 0);
    CHECK(chains.out ==
          R"({"delta":"0","k":2,"method":"chains","classes":)"
          R"([[{"shape":[1],"l":1},{"shape":[1,1],"l":0}],[{"shape":[2],"l":0}]]})"
          "\n");

    const auto gen = run({"blocks", "--k", "2", "--delta", "0", "--method", "genfun"});
    CHECK(gen.status == 0);
    CHECK(Json::parse(gen.out).at("classes") == Json::parse(chains.out).at("classes"));
    CHECK(Json::parse(gen.out).at("method") == "genfun");

    const auto half = run({"blocks", "--k", "2", "--delta", "1/2"});
    CHECK(half.status == 0);
    const Json hj = Json::parse(half.out);
    CHECK(hj.at("crosscheck") == true);
    CHECK(hj.at("classes").size() == 4);

    const auto t = run({"blocks", "--k", "3", "--delta", "1", "--format", "text"});
    CHECK(t.status == 0);
    CHECK(t.out.find("((),3) -> ((2),1) -> ((2,1),0)") != std::string::npos);
    CHECK(t.out.find("crosscheck: true") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and name the offending token") {
    CHECK(run({}).status == 2);

    const auto unknown = run({"frobnicate"});
    CHECK(unknown.status == 2);
    CHECK(unknown.err.find("frobnicate") != std::string::npos);

    const auto bad_flag = run({"branch", "--levle", "3"});
    CHECK(bad_flag.status == 2);
    CHECK(bad_flag.err.find("levle") != std::string::npos);

    const auto bad_delta = run({"blocks", "--k", "2", "--delta", "abc"});
    CHECK(bad_delta.status == 2);
    CHECK(bad_delta.err.find("abc") != std::string::npos);

    const auto bad_format = run({"branch", "--level", "2", "--format", "xml"});
    CHECK(bad_format.status == 2);
    CHECK(bad_format.err.find("xml") != std::string::npos);

    const auto help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("partalg") != std::string::npos);

    const auto sub_help = run({"blocks", "--help"});
    CHECK(sub_help.status == 0);
    CHECK(sub_help.out.find("hard cap") != std::string::npos);
}
