#include "doctest.h"

#include <string>

#include "cyclo/errors.hpp"
#include "cyclo/ideals.hpp"
#include "cyclo/json_io.hpp"

#include "test_util.hpp"

using namespace cyclo;

TEST_CASE("rationals serialize as p/q strings") {
    CHECK(rational_json(Rational(-3, 2)) == ojson("-3/2"));
    CHECK(rational_from_json(ojson("-3/2")) == Rational(-3, 2));
    CHECK(rational_from_json(ojson(7)) == Rational(7));
    CHECK(error_code_of([] { rational_from_json(ojson("x")); }) == cyclo::errc::parse_error);
}

TEST_CASE("scalar serialization commits kappa only when rational") {
    ExactScalar t = ExactScalar::transcendental(Rational(1, 2), -1, 0);
    ojson jt = scalar_json(t);
    CHECK(jt["kappa"] == "transcendental");
    CHECK(scalar_from_json(jt) == t);

    ExactScalar r = ExactScalar::at_rational_kappa(1, 2, 0, Rational(1, 3));
    ojson jr = scalar_json(r);
    CHECK(jr["kappa"] == "1/3");
    ExactScalar back = scalar_from_json(jr);
    CHECK(back == r);
    CHECK(back.kappa_value() == Rational(1, 3));

    // Uncommitted rationals read back as transcendental-mode but equal values.
    ojson jp = scalar_json(ExactScalar(5));
    CHECK(jp["kappa"] == "transcendental");
    CHECK(scalar_from_json(jp) == ExactScalar(5));
}

TEST_CASE("boxes and multipartitions round-trip") {
    Box b{1, 4, 2};
    CHECK(box_from_json(box_json(b)) == b);
    MultiPartition nu({Partition({4, 2}), Partition({1})});
    ojson j = multipartition_json(nu);
    CHECK(j["components"][0][0] == 4);
    CHECK(multipartition_from_json(j) == nu);
    CHECK(error_code_of([] { multipartition_from_json(ojson{{"components", 3}}); }) ==
          cyclo::errc::parse_error);
    CHECK(error_code_of([] {
              multipartition_from_json(ojson::parse(R"({"components":[[1,2]]})"));
          }) == cyclo::errc::bad_partition);
}

TEST_CASE("hyperplanes round-trip and validate") {
    HyperplaneParams hp{3, 1, 2, -2, 1};
    CHECK(hyperplane_from_json(hyperplane_json(hp)) == hp);
    ojson bad = hyperplane_json(hp);
    bad["i"] = 2;
    bad["j"] = 1;
    CHECK(error_code_of([&] { hyperplane_from_json(bad); }) == cyclo::errc::bad_hyperplane);
}

TEST_CASE("quiver and dimension vectors serialize by vertex name") {
    QuiverData q = framed(cyclic_quiver(2), {1, 0});
    ojson j = quiver_json(q);
    CHECK(j["vertices"] == ojson({"0", "1", "inf"}));
    CHECK(j["arrows"].size() == 3);  // 0->1, 1->0, 0->inf
    ojson dv = dim_vector_json({4, 4, 1}, q);
    CHECK(dv["0"] == 4);
    CHECK(dv["inf"] == 1);
}

TEST_CASE("fock vectors list basis elements with coefficients") {
    FockVector v;
    v[MultiPartition::parse("((1),())")] = Rational(2, 3);
    v[MultiPartition::parse("((),(1))")] = Rational(-1);
    ojson j = fock_json(v);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["coeff"] == "-1");  // map order: ((),(1)) sorts first
    CHECK(j[1]["coeff"] == "2/3");
}

TEST_CASE("ideal chains serialize with slice blocks") {
    ojson j = chain_json(grass_chain(1, 3, 0));
    CHECK(j["algebra"] == "grassmann_regular");
    CHECK(j["p_stated"].is_null());
    REQUIRE(j["ideals"].size() == 3);
    CHECK(j["ideals"][0]["kind"] == "slice");
    CHECK(j["ideals"][0]["slice"]["v"] == 0);
    CHECK(j["ideals"][0]["slice"]["w"] == 1);
    CHECK(j["ideals"][0]["slice"]["lambda"] == 1);
    CHECK(j["ideals"][2]["kind"] == "unit");

    ojson jc = chain_json(cherednik_chain(HyperplaneParams{2, 0, 1, 0, 1}, 6));
    CHECK(jc["algebra"] == "spherical_cherednik");
    CHECK(jc["hyperplane"]["t"] == 1);
    CHECK(jc["n"] == 6);
    CHECK(jc["p_grass"] == 1);
    CHECK(jc["p_stated"] == 1);
}
