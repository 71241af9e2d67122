#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "zcross/builders.hpp"
#include "zcross/condense.hpp"
#include "zcross/equivariant.hpp"

using namespace zcross;
using fixtures::cyclic;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

IntMat diag(std::vector<std::int64_t> d) {
  IntMat m(d.size(), IntVec(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

IntMat type_a(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

IntMat minus_identity(std::size_t n) {
  IntMat m = identity_matrix(n);
  for (auto& row : m)
    for (auto& x : row) x = -x;
  return m;
}

QuadForm hyperbolic(std::int64_t n) { return QuadForm(AbGroup({n, n}), {Phase(), Phase()}, {Phase::of(1, n)}); }

// Lattices whose discriminant forms carry the TY categories, each with g = -1.
struct TyCase {
  std::string name;
  IntMat gram;
};

std::vector<TyCase> ty_cases() {
  IntMat a2a2 = diag({2, 2, 2, 2});
  a2a2[0][1] = a2a2[1][0] = a2a2[2][3] = a2a2[3][2] = -1;
  return {{"E8", e8_gram()}, {"A2", type_a(2)}, {"A4", type_a(4)}, {"A6", type_a(6)}, {"A8", type_a(8)}, {"A2+A2", a2a2}};
}

std::vector<IntMat> glm_grams() { return {{{2}}, diag({2, 2}), diag({2, 4}), diag({2, 2, 2, 2})}; }

DiscForm disc_of(const IntMat& g) { return DiscPipeline(Lattice(g)).disc(); }

Outcome milgram() {
  Outcome o;
  for (const IntMat& g : {IntMat{{2}}, type_a(2), diag({2, 2}), diag({2, 4}), diag({2, 2, 2}), e8_gram()})
    o.require(gauss_signature(disc_of(g)) == static_cast<std::int64_t>(g.size() % 8), "signature differs from rank mod 8");
  return o;
}

Outcome condensation() {
  Outcome o;
  std::vector<QuadForm> forms;
  for (std::int64_t n : {2, 3, 4, 5, 7, 8, 9}) forms.push_back(hyperbolic(n));
  for (std::int64_t n : {9, 25, 27, 81}) {
    forms.push_back(cyclic(n, 1));
    forms.push_back(cyclic(n, 2));
  }
  forms.push_back(QuadForm(AbGroup({3, 3}), {Phase::of(1, 3), Phase::of(2, 3)}, {Phase()}));
  forms.push_back(QuadForm(AbGroup({3, 9}), {Phase::of(1, 3), Phase::of(1, 9)}, {Phase()}));
  forms.push_back(QuadForm(AbGroup({3, 27}), {Phase::of(2, 3), Phase::of(1, 27)}, {Phase()}));
  int pairs = 0;
  for (const auto& q : forms) {
    DiscForm d(q);
    std::int64_t sig = gauss_signature(d);
    AbelianCocycle amb = ambient_from_form(q);
    for (const auto& h : all_subgroups(q.group())) {
      if (isotropy_witness(q, h)) continue;
      ++pairs;
      CondensedPointed out = condense_pointed(condensation_input(amb, h));
      IsotropicCondensation ref = isotropic_condense(d, h);
      o.require(check_cocycle(out.braided).ok(), "condensed braiding fails the hexagons");
      o.require(check_three_cocycle(out.tensor_omega).ok(), "condensed associator fails the pentagon");
      QuadForm local = extract_q(out.braided);
      o.require(local.group().order() == ref.induced.group().order(), "local module count differs");
      for (std::int64_t a = 0; a < local.group().order(); ++a)
        o.require(local.value(a) == d.value(out.local.section[static_cast<std::size_t>(a)]), "local Q differs from the induced form");
      o.require(gauss_signature(DiscForm(local)) == sig, "signature not preserved");
      o.require(gauss_signature(ref.induced) == sig, "induced signature not preserved");
    }
  }
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(forms.size()) + " forms, " + std::to_string(pairs) + " isotropic subgroups";
  return o;
}

Outcome ty_coherence() {
  Outcome o;
  for (const auto& c : ty_cases())
    for (int eps : {1, -1}) {
      CrossedCat cat = fixtures::ty(disc_of(c.gram), eps);
      Report p = verify_pentagon(cat), b = verify_crossed_braiding(cat);
      o.require(p.ok() && p.complete && b.ok() && b.complete, c.name + " fails verification");
      o.require(cat.inverse_issues.empty(), c.name + " has a non-unitary associator block");
    }
  return o;
}

Outcome glm_coherence() {
  Outcome o;
  for (const auto& g : glm_grams())
    for (int eps : {1, -1}) {
      GLMResult r = build_glm_full(Lattice(g), eps);
      Report v = verify(r.cat);
      o.require(v.ok() && v.complete, "lattice category fails verification");
      o.require(r.alpha_sq == r.alpha_sq_expected, "alpha^2 differs from eps e(-rk/8)");
      o.require(r.cat.alpha.r * r.cat.beta.r == Phase::sign(eps), "alpha beta differs from eps");
      o.require(quantum_dims(r.cat).pseudo_unitary, "a quantum dimension is not positive");
    }
  return o;
}

Outcome sign_theorems() {
  Outcome o;
  o.require(epsilon_from_geometry(0, 3) == -1, "epsilon_from_geometry(0, 3) is not -1");
  {
    EigenSplit s = eigen_split(Lattice(type_a(2)), minus_identity(2));
    int eps = epsilon_from_geometry(s.d0, 3);
    Phase alpha_sq = ty_alpha_sq(odd_sqrt(disc_of(type_a(2))), eps);
    o.require(alpha_sq == Phase(Rat(-s.d0, 4) - Rat(s.d1, 8)), "cross identity fails for A2");
  }
  for (const auto& c : ty_cases()) {
    Lattice l(c.gram);
    EigenSplit s = eigen_split(l, minus_identity(l.rank()));
    int eps = epsilon_from_geometry(s.d0, l.det());
    o.require(twist_consistency(fixtures::ty(disc_of(c.gram), eps), s.d1).ok(), c.name + " twist inconsistent");
    o.require(!twist_consistency(fixtures::ty(disc_of(c.gram), -eps), s.d1).ok(), c.name + " flipped sign passes");
  }
  for (const auto& g : glm_grams()) {
    Lattice l(g);
    EigenSplit s = eigen_split(l, minus_identity(l.rank()));
    int eps = mod(s.d0, 8) == 0 ? 1 : -1;
    o.require(twist_consistency(build_glm(l, eps), s.d1).ok(), "lattice twist inconsistent");
    o.require(!twist_consistency(build_glm(l, -eps), s.d1).ok(), "lattice flipped sign passes");
  }
  return o;
}

Outcome ty_to_ty() {
  Outcome o;
  for (int eps : {1, -1})
    for (std::int64_t n : {9, 25}) {
      std::int64_t root = n == 9 ? 3 : 5;
      CrossedCat big = fixtures::ty(cyclic(n, 1), eps);
      TyCondensation t = ty_condense(big, Subgroup::generated(big.group, {{root}}));
      CrossedCat small = fixtures::ty(fixtures::trivial_form(), eps);
      o.require(t.cat.group == small.group && t.cat.labels.size() == small.labels.size(), "object sets differ");
      o.require(t.cat.f_table() == small.f_table(), "associators differ");
      o.require(t.cat.r_table() == small.r_table(), "braidings differ");
      o.require(t.cat.tau_table() == small.tau_table(), "tensor structures differ");
      o.require(t.cat.theta == small.theta && t.cat.t2 == small.t2 && t.cat.act == small.act, "twists or action differ");
      o.require(t.alpha_consistent, "inherited alpha inconsistent");
    }
  return o;
}

Outcome action_lifting() {
  Outcome o;
  DiscPipeline p(Lattice(IntMat{{2}}));
  LiftedAction minus = lift_action(p, {{-1}});
  LiftedAction plus = lift_action(p, {{1}});
  o.require(minus.tau(1, 1) == Phase::of(1, 2), "tau(1,1) is not -1 for -id");
  o.require(minus.tau(0, 0).is_one() && minus.tau(0, 1).is_one() && minus.tau(1, 0).is_one(), "tau is not normalised");
  o.require(plus.tau == Cochain::constant(p.group(), 2), "tau is not trivial for the identity");
  o.require(minus.coherence.ok() && plus.coherence.ok(), "lifted action incoherent");
  return o;
}

Outcome equivariant_consistency() {
  Outcome o;
  std::vector<CrossedCat> cats;
  std::vector<std::int64_t> expected;
  for (const auto& c : ty_cases())
    for (int eps : {1, -1}) {
      DiscForm d = disc_of(c.gram);
      cats.push_back(fixtures::ty(d, eps));
      expected.push_back((d.group().order() - 1) / 2 + 4);
    }
  for (const auto& g : glm_grams())
    for (int eps : {1, -1}) {
      cats.push_back(build_glm(Lattice(g), eps));
      expected.push_back(-1);
    }
  for (std::size_t i = 0; i < cats.size(); ++i) {
    EquivariantCat e = equivariant_fusion(cats[i]);
    if (expected[i] >= 0) o.require(e.size() == expected[i], "equivariant simple count");
    o.require(check_fusion_ring(cats[i], e).ok(), "fusion ring check");
    o.require(e.ribbon.ok(), "ribbon axiom");
    EqModularData md = modular_data(e);
    o.require(md.symmetric && md.checks.ok(), "S-tilde symmetry or Verlinde");
    o.require(md.invertibility == Invertibility::Invertible, "S-tilde not invertible");
  }
  CrossedCat even = fixtures::ising();
  o.require(verify(even).ok(), "even fixture fails verification");
  EquivariantCat e = equivariant_fusion(even);
  EqModularData md = modular_data(e);
  o.require(md.invertibility == Invertibility::Singular, "even fixture S-tilde not singular");
  o.require(e.ribbon.ok() && check_fusion_ring(even, e).ok(), "even fixture ring or ribbon");
  return o;
}

Outcome torsor_twist() {
  Outcome o;
  for (const QuadForm& q : {fixtures::trivial_form(), cyclic(3, 1)}) {
    CrossedCat plus = fixtures::ty(q, 1), minus = fixtures::ty(q, -1);
    CrossedCat once = twist_by_h3(plus, nontrivial_z2_cocycle());
    CrossedCat twice = twist_by_h3(once, nontrivial_z2_cocycle());
    o.require(verify(once).ok(), "twisted category fails verification");
    o.require(fingerprint(once) == fingerprint(minus), "twist does not reach the other sign");
    o.require(fingerprint(twice) == fingerprint(plus), "twist is not an involution");
    o.require(!(fingerprint(plus) == fingerprint(minus)), "fingerprints do not separate the signs");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {
      {1, "Milgram battery", 1, milgram},
      {2, "condensation soundness", 60, condensation},
      {3, "TY coherence", 120, ty_coherence},
      {4, "lattice crossed extension coherence", 300, glm_coherence},
      {5, "sign theorems", 60, sign_theorems},
      {6, "TY to TY condensation", 60, ty_to_ty},
      {7, "action lifting on A1", 1, action_lifting},
      {8, "equivariantisation consistency", 300, equivariant_consistency},
      {9, "torsor twist", 60, torsor_twist},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s > c.limit_s) o.require(false, "over the time limit");
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, s, o.note.empty() ? "" : " ", o.note.c_str());
  }
  return failed == 0 ? 0 : 1;
}
