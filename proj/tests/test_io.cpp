#include <doctest.h>

#include "fixtures.hpp"
#include "zcross/io.hpp"

using namespace zcross;
using fixtures::cyclic;
using fixtures::kind_of;

TEST_CASE("scalars round-trip") {
  CHECK(io::rat_from(io::to_json(Rat(-3, 7))) == Rat(-3, 7));
  CHECK(io::phase_from(io::to_json(Phase::of(5, 8))) == Phase::of(5, 8));
  ScaledScalar s(Rat(3, 2), Phase::of(1, 12));
  CHECK(io::scaled_from(io::to_json(s)) == s);
  CHECK(io::scaled_from(io::Json("1/4")) == ScaledScalar(Phase::of(1, 4)));
}

TEST_CASE("forms round-trip") {
  QuadForm q(AbGroup({3, 9}), {Phase::of(1, 3), Phase::of(2, 9)}, {Phase::of(1, 3)});
  CHECK(io::form_from(io::to_json(q)) == q);
  CHECK(io::form_from(io::load(R"({"group":[3],"values":["1/3"]})")) == cyclic(3, 1));
  CHECK(io::form_from(io::load(R"({"invariant_factors":[],"values":[]})")).group().order() == 1);
}

TEST_CASE("subgroups and matrices") {
  AbGroup g({9});
  CHECK(io::subgroup_from(g, io::load("[3]")) == Subgroup::generated(g, {{3}}));
  CHECK(io::subgroup_from(g, io::load(R"({"generators":[[6]]})")) == Subgroup::generated(g, {{3}}));
  AbGroup g2({3, 3});
  CHECK(io::subgroup_from(g2, io::load("[[1,1]]")).size() == 3);
  CHECK(kind_of([&] { io::subgroup_from(g2, io::load("[1]")); }) == ErrorKind::InvalidInput);
  CHECK(io::matrix_from(io::load("[[2,-1],[-1,2]]"), "gram") == IntMat{{2, -1}, {-1, 2}});
  CHECK(io::matrix_from(io::load(R"({"gram":[[2]]})"), "gram") == IntMat{{2}});
  CHECK(kind_of([] { io::matrix_from(io::load("[2,3]"), "gram"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("cochains round-trip") {
  AbelianCocycle c = from_lattice(DiscPipeline(Lattice(IntMat{{2, 0}, {0, 2}})));
  CHECK(io::cochain_from(io::to_json(c.sigma)) == c.sigma);
  CHECK(io::cochain_from(io::to_json(c.omega)) == c.omega);
  CHECK(kind_of([] { io::cochain_from(io::load(R"({"group":[2],"arity":2,"values":["0"]})")); }) == ErrorKind::InvalidInput);
}

TEST_CASE("categories round-trip") {
  for (const CrossedCat& c : {fixtures::ty(cyclic(3, 1), -1), build_glm(Lattice(IntMat{{2}}), 1), fixtures::ising()}) {
    io::Json j = io::to_json(c);
    CrossedCat back = io::crossed_from(io::Json::parse(j.dump()));
    CHECK(back.labels == c.labels);
    CHECK(back.act == c.act);
    CHECK(back.theta == c.theta);
    CHECK(back.t2 == c.t2);
    CHECK(back.f_table() == c.f_table());
    CHECK(back.r_table() == c.r_table());
    CHECK(back.tau_table() == c.tau_table());
    CHECK(io::to_json(back) == j);
    CHECK(verify(back).ok());
  }
}

TEST_CASE("malformed input is reported as invalid") {
  CHECK(kind_of([] { io::load("{not json"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::load("/nonexistent/file.json"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::form_from(io::load(R"({"group":[3]})")); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::form_from(io::load(R"({"group":[3],"values":["x"]})")); }).has_value());
  io::Json j = io::to_json(fixtures::ty(cyclic(3, 1), 1));
  io::Json out_of_range = j;
  out_of_range["R"][0][0] = 17;
  CHECK(kind_of([&] { io::crossed_from(out_of_range); }) == ErrorKind::InvalidInput);
  io::Json missing = j;
  missing.erase("F");
  CHECK(kind_of([&] { io::crossed_from(missing); }) == ErrorKind::InvalidInput);
  io::Json short_f = j;
  short_f["F"].erase(0);
  CHECK(kind_of([&] { io::crossed_from(short_f); }) == ErrorKind::InvalidInput);
  io::Json wrong_type = j;
  wrong_type["labels"] = 3;
  CHECK(kind_of([&] { io::crossed_from(wrong_type); }) == ErrorKind::InvalidInput);
}
