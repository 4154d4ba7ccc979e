// JSON round-trips and text parsing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seminormal/json_io.hpp"
#include "seminormal/verify.hpp"

using namespace seminormal;

TEST_CASE("rational function JSON round-trip") {
  SplitMix rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    RatFunc f = random_ratfunc(rng);
    Json j = ratfunc_to_json(f);
    CHECK(ratfunc_from_json(j) == f);
    // byte-identical re-serialization
    CHECK(Json::parse(j.dump(2)).dump(2) == j.dump(2));
  }
  Json j = ratfunc_to_json(quantum_int(-3));
  CHECK(j.at("shift").get<long>() == -3);
}

TEST_CASE("tableau JSON and text round-trip") {
  Partition shape = parse_partition("3,2,2");
  Tableau t = parse_tableau(shape, "1,2,7/3,4/5,6");
  CHECK(t.str() == "1,2,7/3,4/5,6");
  CHECK(tableau_from_json(tableau_to_json(t)) == t);
  CHECK(partition_to_json(shape).dump() == "[3,2,2]");
}

TEST_CASE("expansion document round-trips byte-identically") {
  Partition shape = parse_partition("3,1,1");
  SpechtModule module(shape);
  Tableau t = parse_tableau(shape, "1,4,5/2/3");
  ExpansionDocument doc;
  doc.shape = shape;
  doc.tableau = t;
  doc.method = "fast";
  GeneralFtResult r = general_ft(module, t);
  doc.vector = r.f;
  doc.p_factors = r.p_factors;
  doc.certificate = denominator_certificate(module, doc.vector, t, {});
  std::string emitted = expansion_to_json(doc).dump(2);
  std::string reparsed = Json::parse(emitted).dump(2);
  CHECK(emitted == reparsed);
  ExpansionDocument back = expansion_from_json(Json::parse(emitted));
  CHECK(back.vector == doc.vector);
  CHECK(back.shape == doc.shape);
  CHECK(back.tableau == doc.tableau);
}

TEST_CASE("submodule report and base change serialize") {
  SubmoduleReport rep = verify_submodule_fn(parse_partition("2,1"), 1, 3);
  Json j = submodule_report_to_json(rep);
  CHECK(j.at("verdict").get<std::string>() == "confirmed");
  CHECK(j.at("pole_free").get<bool>());

  SpechtModule module(parse_partition("2,2"));
  BaseChange bc = base_change(module, Method::Fast);
  Json bj = base_change_to_json(bc);
  CHECK(bj.at("M").size() == 2);
  CHECK(bj.at("order").size() == 2);
  CHECK(Json::parse(bj.dump(2)).dump(2) == bj.dump(2));
}
