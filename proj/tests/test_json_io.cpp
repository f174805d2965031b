#include <nsl/json_io.hpp>

#include <doctest.h>

using namespace nsl;

TEST_CASE("fnv64 matches the reference vectors") {
  CHECK(fnv64("") == 0xcbf29ce484222325ull);
  CHECK(fnv64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv64_hex("") == "cbf29ce484222325");
}

TEST_CASE("rationals travel as canonical strings") {
  CHECK(rational_to_json(Rational(-3, 6)) == "-1/2");
  CHECK(rational_to_json(Rational(7)) == "7");
  CHECK(rational_from_json(Json("22/7")) == Rational(22, 7));
  CHECK(rational_from_json(Json(-5)) == Rational(-5));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), std::domain_error);
}

TEST_CASE("class and period matrix round-trip bit-exactly") {
  auto ref = reference_triple();
  for (const NSClass& e : ref) CHECK(nsclass_from_json(nsclass_to_json(e)) == e);
  auto back = triple_from_json(triple_to_json(ref));
  CHECK(back == ref);

  Mat<Rational> P(2, 2), Q(2, 2);
  P.at(0, 1) = Rational(-7, 3);
  Q.at(0, 0) = Rational(1);
  Q.at(1, 1) = Rational(22, 7);
  PeriodMatrix tau(2, Rational(-5), P, Q);
  PeriodMatrix t2 = period_from_json(period_to_json(tau));
  CHECK(t2.g == tau.g);
  CHECK(t2.m == tau.m);
  CHECK(t2.P == tau.P);
  CHECK(t2.Q == tau.Q);

  // integer literals are accepted on input
  Json j = Json::parse(R"({"g":2,"m":"-1","P":[[0,0],[0,0]],"Q":[[1,0],[0,1]]})");
  PeriodMatrix t3 = period_from_json(j);
  CHECK(t3.Q == Mat<Rational>::identity(2));

  CHECK_THROWS_AS(period_from_json(Json::parse(R"({"g":2,"m":"-1","P":[[0,0]],"Q":[[1,0],[0,1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(nsclass_from_json(Json::parse(R"({"g":3,"a":[0,0],"b":[],"c":[]})")),
                  std::invalid_argument);
}

TEST_CASE("fiber report serialization carries the printed generators") {
  auto ref = reference_triple();
  LocusProblem prob(ref[0], ref[1], ref[2]);
  FiberReport r = classify(prob);
  Json j = fiber_report_to_json(r, prob.projective_ring());
  CHECK(j["empty"] == false);
  CHECK(j["degree"] == 2);
  CHECK(j["discriminant"] == "57/100");
  REQUIRE(j["generators"].size() == 9);
  CHECK(j["generators"][0] == "t_8^2-48t_8t_9-172/3t_9^2");
  REQUIRE(j["points"].size() == 2);
  CHECK(j["points"][0]["kind"] == "RealDegenerate");
  CHECK(j["points"][0]["rank"] == 9);
  CHECK(j["points"][0]["tau"]["m"] == "57/100");
  CHECK(j["points"][0]["polarization"]["status"] == "MaximalRankShortcut");
  // identical inputs give identical bytes
  CHECK(j.dump(2) == fiber_report_to_json(classify(prob), prob.projective_ring()).dump(2));
}
