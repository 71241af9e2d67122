#include <doctest.h>

#include "fixtures.hpp"
#include "zcross/condense.hpp"

using namespace zcross;
using fixtures::cyclic;
using fixtures::kind_of;

namespace {

std::vector<std::int64_t> negation(const AbGroup& g) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 0; a < g.order(); ++a) out.push_back(g.index(g.neg(g.elem(a))));
  return out;
}


}  // namespace

TEST_CASE("bimultiplicative ambient cocycle") {
  QuadForm q(AbGroup({3, 9}), {Phase::of(1, 3), Phase::of(2, 9)}, {Phase::of(1, 3)});
  AbelianCocycle amb = ambient_from_form(q);
  CHECK(is_bimultiplicative(amb.sigma));
  CHECK(check_cocycle(amb).ok());
  CHECK(extract_q(amb) == q);
  CHECK(kind_of([] { ambient_from_form(QuadForm(AbGroup({2}), {Phase::of(1, 4)}, {})); }) == ErrorKind::InvalidInput);
}

TEST_CASE("condensing Z9 along its order-3 subgroup") {
  QuadForm q = cyclic(9, 1);
  Subgroup i = Subgroup::generated(q.group(), {{3}});
  CondensedPointed out = condense_pointed(condensation_input(ambient_from_form(q), i));
  CHECK(out.modules.group == AbGroup({3}));
  CHECK(out.local.group.order() == 1);
  CHECK(out.iperp == i);
  CHECK(check_three_cocycle(out.tensor_omega).ok());
  CHECK(check_cocycle(out.braided).ok());
}

TEST_CASE("condensation agrees with the induced form on every isotropic subgroup") {
  std::vector<QuadForm> forms = {cyclic(9, 1),
                                 cyclic(25, 3),
                                 cyclic(27, 2),
                                 QuadForm(AbGroup({2, 2}), {Phase(), Phase()}, {Phase::of(1, 2)}),
                                 QuadForm(AbGroup({3, 3}), {Phase::of(1, 3), Phase::of(2, 3)}, {Phase()}),
                                 QuadForm(AbGroup({4, 4}), {Phase(), Phase()}, {Phase::of(1, 4)}),
                                 QuadForm(AbGroup({3, 9}), {Phase::of(1, 3), Phase::of(1, 9)}, {Phase()})};
  for (const auto& q : forms) {
    DiscForm d(q);
    AbelianCocycle amb = ambient_from_form(q);
    int isotropic = 0;
    for (const auto& h : all_subgroups(q.group())) {
      if (isotropy_witness(q, h)) continue;
      ++isotropic;
      CondensedPointed out = condense_pointed(condensation_input(amb, h));
      IsotropicCondensation ref = isotropic_condense(d, h);
      CHECK(out.modules.group.order() * h.size() == q.group().order());
      CHECK(check_three_cocycle(out.tensor_omega).ok());
      CHECK(check_cocycle(out.braided).ok());
      QuadForm local = extract_q(out.braided);
      CHECK(local.group().order() == ref.induced.group().order());
      for (std::int64_t a = 0; a < local.group().order(); ++a) CHECK(local.value(a) == d.value(out.local.section[static_cast<std::size_t>(a)]));
      CHECK(gauss_signature(DiscForm(local)) == gauss_signature(d));
    }
    CHECK(isotropic >= 2);
  }
}

TEST_CASE("condensation input is validated") {
  QuadForm q = cyclic(9, 1);
  AbelianCocycle amb = ambient_from_form(q);
  CHECK(kind_of([&] { validate(condensation_input(amb, Subgroup::generated(q.group(), {{1}}))); }) == ErrorKind::NotIsotropic);
  AbelianCocycle twisted = amb;
  twisted.omega = amb.omega.perturbed(amb.omega.flat(1, 1, 1), Phase::of(1, 3));
  CHECK(kind_of([&] { validate(condensation_input(twisted, Subgroup::trivial(q.group()))); }) == ErrorKind::AssumptionViolated);
}

TEST_CASE("lifting the lattice involution of A1") {
  DiscPipeline p(Lattice(IntMat{{2}}));
  LiftedAction minus = lift_action(p, {{-1}});
  CHECK(minus.object_map == std::vector<std::int64_t>{0, 1});
  CHECK(minus.coherence.ok());
  LiftedAction plus = lift_action(p, {{1}});
  CHECK(plus.coherence.ok());
  CHECK(plus.tau == Cochain::constant(p.group(), 2));
  CHECK(kind_of([&] { lift_action(p, {{2}}); }) == ErrorKind::NotIsometry);
  CHECK(kind_of([] { lift_action(DiscPipeline(Lattice(IntMat{{2, -1}, {-1, 2}})), {{-1, 0}, {0, -1}}); }) == ErrorKind::AssumptionViolated);
}

TEST_CASE("lifting the swap of two A1 copies") {
  DiscPipeline p(Lattice(IntMat{{2, 0}, {0, 2}}));
  LiftedAction s = lift_action(p, {{0, 1}, {1, 0}});
  CHECK(s.coherence.ok());
  CHECK(s.object_map[1] == 2);
  CHECK(s.object_map[2] == 1);
  CHECK(s.object_map[3] == 3);
}

TEST_CASE("lifting negation through a condensation of Z9") {
  QuadForm q = cyclic(9, 1);
  Subgroup i = Subgroup::generated(q.group(), {{3}});
  LiftedAction l = lift_action(condensation_input(ambient_from_form(q), i), negation(q.group()));
  CHECK(l.coherence.ok());
  CHECK(l.object_map == std::vector<std::int64_t>{0, 2, 1});

  LiftedAction z3 = lift_action(condensation_input(ambient_from_form(cyclic(3, 1)), Subgroup::trivial(AbGroup({3}))), {0, 2, 1});
  CHECK(z3.coherence.ok());
  CHECK(z3.tau == Cochain::constant(AbGroup({3}), 2));
}

TEST_CASE("lifting an action that does not preserve the subgroup") {
  QuadForm q(AbGroup({3, 3}), {Phase::of(1, 3), Phase::of(2, 3)}, {Phase()});
  const AbGroup& g = q.group();
  Subgroup i = Subgroup::generated(g, {{1, 1}});
  std::vector<std::int64_t> flip;
  for (std::int64_t a = 0; a < g.order(); ++a) {
    Elem x = g.elem(a);
    flip.push_back(g.index(g.reduce({x[0], -x[1]})));
  }
  CHECK(kind_of([&] { lift_action(condensation_input(ambient_from_form(q), i), flip); }) == ErrorKind::NotStable);
  std::vector<std::int64_t> bad = negation(g);
  std::swap(bad[1], bad[2]);
  CHECK(kind_of([&] { lift_action(condensation_input(ambient_from_form(q), i), bad); }) == ErrorKind::InvalidInput);
}

TEST_CASE("condensing a TY category reproduces the smaller TY category") {
  for (int eps : {1, -1})
    for (std::int64_t n : {9, 25}) {
      std::int64_t root = n == 9 ? 3 : 5;
      CrossedCat big = fixtures::ty(cyclic(n, 1), eps);
      TyCondensation t = ty_condense(big, Subgroup::generated(big.group, {{root}}));
      CrossedCat small = fixtures::ty(fixtures::trivial_form(), eps);
      CHECK(t.local.group.order() == 1);
      CHECK(t.local_characters == 1);
      CHECK(t.alpha_consistent);
      CHECK(t.cat.f_table() == small.f_table());
      CHECK(t.cat.r_table() == small.r_table());
      CHECK(t.cat.tau_table() == small.tau_table());
      CHECK(t.cat.theta == small.theta);
      CHECK(verify(t.cat).ok());
    }
}

TEST_CASE("TY condensation along a subgroup of a rank-two group") {
  QuadForm q(AbGroup({3, 3}), {Phase::of(1, 3), Phase::of(2, 3)}, {Phase()});
  for (int eps : {1, -1}) {
    CrossedCat big = fixtures::ty(q, eps);
    TyCondensation t = ty_condense(big, Subgroup::generated(q.group(), {{1, 1}}));
    CHECK(t.local.group.order() == 1);
    CHECK(t.alpha_consistent);
    CHECK(verify(t.cat).ok());
  }
}

TEST_CASE("TY condensation along the trivial subgroup is the identity") {
  for (int eps : {1, -1}) {
    CrossedCat big = fixtures::ty(cyclic(9, 1), eps);
    TyCondensation t = ty_condense(big, Subgroup::trivial(big.group));
    CHECK(t.local.group == big.group);
    CHECK(t.cat.f_table() == big.f_table());
    CHECK(t.cat.r_table() == big.r_table());
    CHECK(t.cat.tau_table() == big.tau_table());
    CHECK(t.alpha_consistent);
  }
}

TEST_CASE("TY condensation rejects bad subgroups") {
  CrossedCat big = fixtures::ty(cyclic(9, 1), 1);
  CHECK(kind_of([&] { ty_condense(big, Subgroup::generated(big.group, {{1}})); }) == ErrorKind::NotIsotropic);
  CHECK(kind_of([] { ty_condense(fixtures::ising(), Subgroup::trivial(AbGroup({2}))); }) == ErrorKind::EvenOrder);
}
