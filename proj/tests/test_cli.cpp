#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "affsem/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = affsem::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string k456 = R"({"generators": [[4],[5],[6]]})";

}  // namespace

TEST_CASE("analyze") {
    Run r = cli({"analyze", "-"}, k456);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["generators"] == json::parse(R"([["4"],["5"],["6"]])"));
    CHECK(doc["group"]["rank"] == 1);
    CHECK(doc["cone"]["simplicial"] == true);
}

TEST_CASE("output is deterministic and round-trips") {
    Run a = cli({"analyze", "-"}, k456);
    Run b = cli({"analyze", "-"}, k456);
    CHECK(a.out == b.out);
    // outputs embed the semigroup and can be fed back
    Run c = cli({"analyze", "-"}, a.out);
    CHECK(c.code == 0);
    CHECK(c.out == a.out);
}

TEST_CASE("ci finds the worked tree") {
    Run r = cli({"ci", "-"}, k456);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["complete_intersection"] == true);
    CHECK(doc["frobenius"] == json::parse(R"(["7"])"));
    CHECK(doc["tree"]["d"] == json::parse(R"(["10"])"));
    CHECK(doc["tree"]["left"]["d"] == json::parse(R"(["12"])"));
    CHECK(doc["hilbert"]["numerator_factors"] == json::parse(R"([["10"],["12"]])"));
    CHECK(doc["hilbert"]["denominator"] == json::parse(R"([["4"],["5"],["6"]])"));

    Run non = cli({"ci", "-"}, R"({"generators": [[3],[5],[7]]})");
    REQUIRE(non.code == 0);
    CHECK(json::parse(non.out)["complete_intersection"] == false);
}

TEST_CASE("glue check rejects the 2D counterexample with rank evidence") {
    const std::string doc2d =
        R"({"generators": [[4,0],[3,1],[2,2],[3,3],[1,3],[0,4]]})";
    // partition indices refer to the input rows: the first three
    Run r = cli({"glue", "check", "--partition", "0,1,2", "-"}, doc2d);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["cone_filter"] == true);
    CHECK(doc["result"]["status"] == "rejected");
    CHECK(doc["result"]["reason"] == "intersection_rank_high");
    CHECK(doc["result"]["intersection"]["rank"] == 2);
    CHECK(doc["result"]["intersection"]["basis"] ==
          json::parse(R"([["1","3"],["0","4"]])"));

    // certified 3D example, same row convention
    const std::string doc3d =
        R"({"generators": [[4,0,0],[3,1,0],[2,2,0],[3,3,0],[3,2,1],[3,0,3]]})";
    Run ok = cli({"glue", "check", "--partition", "0,1,2", "-"}, doc3d);
    REQUIRE(ok.code == 0);
    json okdoc = json::parse(ok.out);
    CHECK(okdoc["result"]["status"] == "gluing");
    CHECK(okdoc["result"]["d"] == json::parse(R"(["6","6","0"])"));
    CHECK(okdoc["span_check"] == true);

    // rows that are not the minimal generating set cannot be indexed
    Run bad = cli({"glue", "check", "--partition", "0", "-"},
                  R"({"generators": [[4],[5],[6],[10]]})");
    CHECK(bad.code == 2);
}

TEST_CASE("glue find on 4,5,6") {
    Run r = cli({"glue", "find", "-"}, k456);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["gluings"].size() == 1);
    CHECK(doc["gluings"][0]["d"] == json::parse(R"(["10"])"));
}

TEST_CASE("hilbert with expansion") {
    Run r = cli({"hilbert", "--expand", "12", "-"}, k456);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["route"] == "complete_intersection");
    auto coeffs = doc["expansion"]["coefficients"];
    std::vector<std::string> exps;
    for (const auto& c : coeffs) {
        CHECK(c["coefficient"] == "1");
        exps.push_back(c["exponent"][0].get<std::string>());
    }
    CHECK(exps == std::vector<std::string>{"0", "4", "5", "6", "8", "9", "10", "11", "12"});
}

TEST_CASE("apery") {
    Run r = cli({"apery", "--base", "4", "-"}, k456);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["complete"] == true);
    CHECK(doc["elements"] == json::parse(R"([["0"],["5"],["6"],["11"]])"));

    Run bad = cli({"apery", "--base", "7", "-"}, k456);
    CHECK(bad.code == 3);
}

TEST_CASE("betti") {
    Run r = cli({"betti", "-"}, k456);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["elements"] == json::parse(R"([["10"],["12"]])"));
    CHECK(doc["complete"] == true);
    CHECK(doc["minimal_presentation"].size() == 2);
}

TEST_CASE("numerical subcommands") {
    Run inv = cli({"numerical", "invariants", "-"}, k456);
    REQUIRE(inv.code == 0);
    json d = json::parse(inv.out);
    CHECK(d["frobenius"] == "7");
    CHECK(d["type"] == "1");
    CHECK(d["gaps"] == json::parse(R"(["1","2","3","7"])"));
    CHECK(d["alpha_rectangular"] == true);

    Run cls = cli({"numerical", "classify", "-"}, R"({"generators": [[3],[4],[5]]})");
    REQUIRE(cls.code == 0);
    json c = json::parse(cls.out);
    CHECK(c["symmetric"] == false);
    CHECK(c["pseudo_symmetric"] == true);
}

TEST_CASE("numerical glue over files") {
    const std::string f1 = "/tmp/affsem_test_s1.json";
    const std::string f2 = "/tmp/affsem_test_s2.json";
    std::ofstream(f1) << R"({"generators": [[2],[3]]})";
    std::ofstream(f2) << R"({"generators": [[1]]})";
    Run r = cli({"numerical", "glue", "--d1", "2", "--d2", "5", f1, f2});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["d"] == "10");
    CHECK(doc["frobenius"] == "7");
    CHECK(doc["type"] == "1");
    CHECK(doc["union_minimal"] == true);
    CHECK(doc["glued"]["generators"] == json::parse(R"([["4"],["5"],["6"]])"));
}

TEST_CASE("frobenius command") {
    Run r = cli({"frobenius", "--box", "60", "-"}, k456);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["frobenius"] == json::parse(R"(["7"])"));
    CHECK(doc["verification"]["passed"] == true);
    CHECK(doc["minimality"]["passed"] == true);

    Run non = cli({"frobenius", "-"}, R"({"generators": [[3],[5],[7]]})");
    CHECK(non.code == 3);
}

TEST_CASE("corpus is seeded and deterministic") {
    Run a = cli({"corpus", "--seed", "5", "--count", "3"});
    Run b = cli({"corpus", "--seed", "5", "--count", "3"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["instances"].size() == 3);
}

TEST_CASE("error exit codes") {
    CHECK(cli({"analyze", "-"}, "{not json").code == 2);
    CHECK(cli({"analyze", "-"}, R"({"generators": []})").code == 2);
    CHECK(cli({"analyze", "-"}, R"({"generators": [[1,-2]]})").code == 2);
    // ambient dimension above the supported limit
    CHECK(cli({"analyze", "-"}, R"({"generators": [[1,1,1,1,1,1,1,1,1]]})").code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    // simplicial route forced on a non-simplicial semigroup
    const std::string square =
        R"({"generators": [[1,0,0],[0,1,0],[1,0,1],[0,1,1]]})";
    CHECK(cli({"hilbert", "--simplicial", "-"}, square).code == 3);
}
