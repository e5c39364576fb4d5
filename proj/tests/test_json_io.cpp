#include "partalg/json_io.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace partalg;

TEST_CASE("scalar serialization pins both modes") {
    const Scalar rational(Rational(5, 6));
    CHECK(scalar_to_json(rational).dump() == R"({"mode":"rational","value":"5/6"})");

    const Scalar poly(DeltaPoly({Rational(1), Rational(-1, 2), Rational(3)}));
    CHECK(scalar_to_json(poly).dump() == R"({"mode":"poly","coeffs":["1","-1/2","3"]})");

    CHECK(scalar_from_json(scalar_to_json(rational)) == rational);
    CHECK(scalar_from_json(scalar_to_json(poly)) == poly);
    CHECK(scalar_from_json(scalar_to_json(Scalar(DeltaPoly()))) == Scalar(DeltaPoly()));

    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"mode":"complex"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"value":"1"})")),
                    std::invalid_argument);
}

TEST_CASE("diagram serialization is canonical and round-trips") {
    const Diagram pi(5, {{1, 2, 3, -2}, {4, -1, -4}, {5, -5}, {-3}});
    CHECK(diagram_to_json(pi).dump() ==
          R"({"k":5,"blocks":[[1,2,3,-2],[4,-1,-4],[5,-5],[-3]]})");
    CHECK(diagram_from_json(diagram_to_json(pi)) == pi);

    // Scrambled input canonicalizes to the same serialization.
    const auto scrambled = diagram_from_json(
        Json::parse(R"({"k":5,"blocks":[[-3],[-5,5],[-4,4,-1],[-2,3,1,2]]})"));
    CHECK(scrambled == pi);

    CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"blocks":[[1,-1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"k":1,"blocks":[["x"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"k":1,"blocks":[[1],[1,-1]]})")),
                    std::invalid_argument);
}

TEST_CASE("element serialization carries mode, delta, and exact coefficients") {
    const Ring poly_ring{2, Mode::poly, Rational(0)};
    const Element e1 = gen_e(1, poly_ring);
    CHECK(element_to_json(e1).dump() ==
          R"({"k":2,"mode":"poly","terms":[{"coeff":["1"],"diagram":[[1],[2,-2],[-1]]}]})");
    CHECK(element_from_json(element_to_json(e1)) == e1);

    const Element mixed =
        e1.scaled(Scalar(DeltaPoly::variable())) - Element::identity(poly_ring);
    CHECK(element_from_json(element_to_json(mixed)) == mixed);

    const Ring rational_ring{2, Mode::rational, Rational(5, 2)};
    const Element at_point = gen_e(2, rational_ring) * gen_e(1, rational_ring);
    const Json j = element_to_json(at_point);
    CHECK(j.at("delta") == "5/2");
    CHECK(element_from_json(j) == at_point);

    CHECK(element_from_json(element_to_json(Element::zero(poly_ring))) ==
          Element::zero(poly_ring));

    Json bad = element_to_json(e1);
    bad["mode"] = "rational";  // rational mode requires a delta field
    CHECK_THROWS_AS(element_from_json(bad), std::invalid_argument);
}

TEST_CASE("report serialization exposes checks and the aggregate verdict") {
    RelationReport report;
    report.level = 4;
    report.checks.push_back({"sigma.involutive", {{"i", 2}}, true});
    report.checks.push_back({"L.commute", {{"i", 1}, {"j", 3}}, false});
    CHECK(relation_report_to_json(report).dump() ==
          R"({"level":4,"pass":false,"checks":[)"
          R"({"relation":"sigma.involutive","indices":{"i":2},"pass":true},)"
          R"({"relation":"L.commute","indices":{"i":1,"j":3},"pass":false}]})");

    CentralityReport central;
    central.level = 3;
    central.n_max = 1;
    central.checks.push_back({0, true});
    central.checks.push_back({1, true});
    CHECK(centrality_report_to_json(central).dump() ==
          R"({"level":3,"nmax":1,"pass":true,"checks":[)"
          R"({"n":0,"pass":true},{"n":1,"pass":true}]})");
}

TEST_CASE("combinatorial values serialize in the documented forms") {
    CHECK(shape_to_json(Shape({2, 1})).dump() == "[2,1]");
    CHECK(shape_to_json(Shape()).dump() == "[]");
    CHECK(shape_from_json(Json::parse("[2,1]")) == Shape({2, 1}));
    CHECK_THROWS_AS(shape_from_json(Json::parse("[1,2]")), std::invalid_argument);
    CHECK_THROWS_AS(shape_from_json(Json::parse(R"("2,1")")), std::invalid_argument);

    CHECK(vertex_to_json(GraphVertex{Shape({2, 1}), 0, 6}).dump() ==
          R"({"shape":[2,1],"l":0})");

    const auto path = standard_path(GraphVertex{Shape({2}), 1, 6});
    CHECK(path_to_json(path).dump() ==
          R"([{"shape":[],"l":0},{"shape":[],"l":0},{"shape":[],"l":1},)"
          R"({"shape":[],"l":1},{"shape":[1],"l":1},{"shape":[1],"l":1},)"
          R"({"shape":[2],"l":1}])");

    CHECK(content_to_json(ContentValue{Rational(-1), Rational(-1, 2)}).dump() ==
          R"({"a":"-1","b":"-1/2"})");

    const auto g = genfun(GraphVertex{Shape({1, 1}), 0, 4}, Rational(5));
    CHECK(genfun_to_json(g).dump() == R"({"num":[0,1],"den":[-1,0]})");

    const auto blocks = chain_classes(2, Rational(0));
    CHECK(block_classes_to_json(blocks.classes).dump() ==
          R"([[{"shape":[1],"l":1},{"shape":[1,1],"l":0}],[{"shape":[2],"l":0}]])");
}
