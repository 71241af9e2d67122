#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zcross/builders.hpp"
#include "zcross/pointedcat.hpp"
#include "zcross/qform.hpp"

namespace zcross {

// Ambient pointed category with trivial associator, an isotropic subgroup and a 2-cochain
// eps with eps(i,j)/eps(j,i) = sigma(i,j) on it.
struct CondensationInput {
  AbelianCocycle ambient;
  Subgroup iso;
  Cochain eps;  // arity 2 on the ambient group, read on iso x iso
};

// Upper-triangular bimultiplicative lift sigma(x,y) = sum x_i y_i Q_i + sum_{i<j} x_i y_j B_ij.
inline AbelianCocycle ambient_from_form(const QuadForm& q) {
  const AbGroup& g = q.group();
  for (std::size_t i = 0; i < g.rank(); ++i)
    if ((q.gen_values()[i].exponent() * g.factors()[i]).denominator() != 1)
      throw Error(ErrorKind::InvalidInput, "generator value " + q.gen_values()[i].str() + " has no bimultiplicative lift");
  auto t = tables_for(g);
  std::vector<Elem> elems;
  for (std::int64_t a = 0; a < g.order(); ++a) elems.push_back(g.elem(a));
  Cochain sigma = Cochain::build(t, 2, [&](const std::int64_t* i) {
    const Elem& x = elems[static_cast<std::size_t>(i[0])];
    const Elem& y = elems[static_cast<std::size_t>(i[1])];
    Rat s(0);
    for (std::size_t k = 0; k < g.rank(); ++k) {
      s += q.gen_values()[k].exponent() * (x[k] * y[k]);
      for (std::size_t l = k + 1; l < g.rank(); ++l) s += q.pair(k, l).exponent() * (x[k] * y[l]);
    }
    return Phase(s);
  });
  return {sigma, Cochain::build(t, 3, [](const std::int64_t*) { return Phase(); })};
}

inline bool is_bimultiplicative(const Cochain& s) {
  const GroupTables& t = s.tables();
  for (std::int64_t a = 0; a < t.n; ++a)
    for (std::int64_t b = 0; b < t.n; ++b)
      for (std::int64_t c = 0; c < t.n; ++c)
        if (!(s(t.add(a, b), c) == s(a, c) * s(b, c)) || !(s(a, t.add(b, c)) == s(a, b) * s(a, c))) return false;
  return true;
}

// Coordinates of the elements of a subgroup in its own invariant-factor presentation.
inline Presentation present_subgroup(const Subgroup& h) { return present(h.parent(), h.generators(), Subgroup::trivial(h.parent())); }

// Bimultiplicative eps on I with eps(i,j)/eps(j,i) = sigma(i,j); assumes sigma antisymmetric on I.
inline Cochain default_eps(const AbelianCocycle& ambient, const Subgroup& iso) {
  const AbGroup& g = ambient.group();
  Presentation pr = present_subgroup(iso);
  const AbGroup& ig = pr.group;
  std::vector<std::int64_t> gens;
  for (std::size_t k = 0; k < ig.rank(); ++k) gens.push_back(pr.section[static_cast<std::size_t>(ig.index(ig.gen(k)))]);
  return Cochain::build(ambient.sigma.shared_tables(), 2, [&](const std::int64_t* i) {
    std::int64_t pa = pr.projection[static_cast<std::size_t>(i[0])], pb = pr.projection[static_cast<std::size_t>(i[1])];
    if (pa < 0 || pb < 0) return Phase();
    Elem x = ig.elem(pa), y = ig.elem(pb);
    Phase v;
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (std::size_t l = k + 1; l < gens.size(); ++l) v = v * ambient.sigma(gens[k], gens[l]).pow(x[k] * y[l]);
    (void)g;
    return v;
  });
}

inline CondensationInput condensation_input(const AbelianCocycle& ambient, const Subgroup& iso) {
  return {ambient, iso, default_eps(ambient, iso)};
}

inline void validate(const CondensationInput& in) {
  const AbelianCocycle& amb = in.ambient;
  const GroupTables& t = amb.sigma.tables();
  if (in.iso.parent() != amb.group()) throw Error(ErrorKind::InvalidInput, "subgroup belongs to a different group");
  for (std::size_t f = 0; f < amb.omega.size(); ++f)
    if (!amb.omega.at(f).is_one()) throw Error(ErrorKind::AssumptionViolated, "ambient associator must be trivial");
  if (!is_bimultiplicative(amb.sigma)) throw Error(ErrorKind::AssumptionViolated, "ambient braiding must be bimultiplicative");
  for (auto i : in.iso.elements())
    if (!amb.sigma(i, i).is_one()) throw Error(ErrorKind::NotIsotropic, "Q" + elem_str(t.group.elem(i)) + " = " + amb.sigma(i, i).str());
  for (auto i : in.iso.elements())
    for (auto j : in.iso.elements()) {
      if (!(in.eps(i, j) / in.eps(j, i) == amb.sigma(i, j)))
        throw Error(ErrorKind::InvalidInput, "eps does not split the braiding on the subgroup");
      for (auto k : in.iso.elements())
        if (!(in.eps(j, k) * in.eps(i, t.add(j, k)) == in.eps(t.add(i, j), k) * in.eps(i, j)))
          throw Error(ErrorKind::InvalidInput, "eps is not a 2-cocycle on the subgroup");
    }
}

struct CondensedPointed {
  Presentation modules;  // Gamma / I
  Cochain tensor_omega;  // associator on Gamma / I
  Subgroup iperp;
  Presentation local;       // I^perp / I
  AbelianCocycle braided;   // on I^perp / I
};

namespace detail {

// omega(a,b,c) = sigma(a_hat, u(b,c)) eps(u(b,c), u(a,b+c)) / eps(u(a,b), u(a+b,c)) along a section.
inline Cochain condensed_omega(const CondensationInput& in, const Presentation& pr, std::shared_ptr<const GroupTables> qt) {
  const GroupTables& t = in.ambient.sigma.tables();
  auto sec = [&](std::int64_t a) { return pr.section[static_cast<std::size_t>(a)]; };
  auto u = [&](std::int64_t a, std::int64_t b) { return t.add(t.add(sec(a), sec(b)), t.neg(sec(qt->add(a, b)))); };
  return Cochain::build(qt, 3, [&](const std::int64_t* i) {
    std::int64_t a = i[0], b = i[1], c = i[2];
    std::int64_t ubc = u(b, c);
    return in.ambient.sigma(sec(a), ubc) * in.eps(ubc, u(a, qt->add(b, c))) / in.eps(u(a, b), u(qt->add(a, b), c));
  });
}

}  // namespace detail

inline CondensedPointed condense_pointed(const CondensationInput& in) {
  validate(in);
  const AbelianCocycle& amb = in.ambient;
  const AbGroup& g = amb.group();
  CondensedPointed out;
  out.modules = quotient(g, in.iso);
  out.tensor_omega = detail::condensed_omega(in, out.modules, tables_for(out.modules.group));
  std::vector<Elem> perp;
  for (std::int64_t a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (auto i : in.iso.elements())
      if (!(amb.sigma(a, i) * amb.sigma(i, a)).is_one()) {
        ok = false;
        break;
      }
    if (ok) perp.push_back(g.elem(a));
  }
  out.iperp = Subgroup::from_elements(g, perp);
  out.local = present(g, out.iperp.generators(), in.iso);
  auto lt = tables_for(out.local.group);
  const auto& sec = out.local.section;
  out.braided.sigma = Cochain::build(lt, 2, [&](const std::int64_t* i) { return amb.sigma(sec[static_cast<std::size_t>(i[0])], sec[static_cast<std::size_t>(i[1])]); });
  out.braided.omega = detail::condensed_omega(in, out.local, lt);
  return out;
}

struct LiftedAction {
  std::vector<std::int64_t> object_map;  // on Gamma / I
  Cochain tau;                           // (a, b) on Gamma / I
  Report coherence;
};

namespace detail {

// tau(a,b) tau(a+b,c) omega(ga,gb,gc) = omega(a,b,c) tau(b,c) tau(a,b+c), and for involutions
// tau(a,b) tau(ga,gb) = 1.
inline Report action_coherence(const std::vector<std::int64_t>& gmap, const Cochain& tau, const Cochain& omega) {
  Report rep;
  rep.name = "lifted_action";
  const GroupTables& t = tau.tables();
  const std::int64_t n = t.n;
  bool involution = true;
  for (std::int64_t a = 0; a < n; ++a)
    if (gmap[static_cast<std::size_t>(gmap[static_cast<std::size_t>(a)])] != a) involution = false;
  auto g = [&](std::int64_t a) { return gmap[static_cast<std::size_t>(a)]; };
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) {
      for (std::int64_t c = 0; c < n; ++c) {
        ++rep.visited;
        Phase lhs = tau(a, b) * tau(t.add(a, b), c) * omega(g(a), g(b), g(c));
        Phase rhs = omega(a, b, c) * tau(b, c) * tau(a, t.add(b, c));
        if (!(lhs == rhs)) rep.add("action_associator", {a, b, c});
      }
      if (involution) {
        ++rep.visited;
        if (!(tau(a, b) * tau(g(a), g(b))).is_one()) rep.add("action_composition", {a, b});
      }
    }
  rep.total = rep.visited;
  return rep;
}

}  // namespace detail

// Lift of an automorphism g of the ambient group (given on element indices) to the condensed
// category. The tensor structure in the fusion direction is sigma(a_hat, g(b_hat) - (g b)_hat);
// tau stores its inverse, the scalar on splitting vertices used by CrossedCat.
inline LiftedAction lift_action(const CondensationInput& in, const std::vector<std::int64_t>& gmap) {
  validate(in);
  const AbelianCocycle& amb = in.ambient;
  const GroupTables& t = amb.sigma.tables();
  if (static_cast<std::int64_t>(gmap.size()) != t.n) throw Error(ErrorKind::InvalidInput, "action map has the wrong length");
  for (std::size_t f = 0; f < in.eps.size(); ++f)
    if (!in.eps.at(f).is_one()) throw Error(ErrorKind::AssumptionViolated, "lifting an action needs eps = 1");
  auto g = [&](std::int64_t a) { return gmap[static_cast<std::size_t>(a)]; };
  std::vector<char> hit(static_cast<std::size_t>(t.n), 0);
  for (std::int64_t a = 0; a < t.n; ++a) {
    if (g(a) < 0 || g(a) >= t.n || hit[static_cast<std::size_t>(g(a))]++) throw Error(ErrorKind::InvalidInput, "action is not a permutation");
    for (std::int64_t b = 0; b < t.n; ++b) {
      if (g(t.add(a, b)) != t.add(g(a), g(b))) throw Error(ErrorKind::InvalidInput, "action is not a group homomorphism");
      if (!(amb.sigma(g(a), g(b)) == amb.sigma(a, b))) throw Error(ErrorKind::InvalidInput, "action does not preserve the braiding");
    }
  }
  for (auto i : in.iso.elements())
    if (!in.iso.contains(g(i))) throw Error(ErrorKind::NotStable, "action moves " + elem_str(t.group.elem(i)) + " out of the subgroup");
  Presentation pr = quotient(t.group, in.iso);
  auto qt = tables_for(pr.group);
  auto sec = [&](std::int64_t a) { return pr.section[static_cast<std::size_t>(a)]; };
  LiftedAction out;
  for (std::int64_t a = 0; a < qt->n; ++a) out.object_map.push_back(pr.projection[static_cast<std::size_t>(g(sec(a)))]);
  out.tau = Cochain::build(qt, 2, [&](const std::int64_t* i) {
    std::int64_t gb = g(sec(i[1]));
    std::int64_t diff = t.add(gb, t.neg(sec(pr.projection[static_cast<std::size_t>(gb)])));
    return amb.sigma(sec(i[0]), diff).inv();
  });
  Cochain omega = detail::condensed_omega(in, pr, qt);
  out.coherence = detail::action_coherence(out.object_map, out.tau, omega);
  return out;
}

// Lattice form: the ambient is L* with sigma(x,y) = e(<x,y>/2) condensed by L, and g is an
// isometry of L: tau(a,b) = e(-<a_hat, g b_hat - (g b)_hat>/2).
inline LiftedAction lift_action(const DiscPipeline& p, const IntMat& g) {
  const Lattice& l = p.lattice();
  const std::size_t d = l.rank();
  if (g.size() != d || cols(g) != d) throw Error(ErrorKind::InvalidInput, "action matrix has the wrong size");
  if (multiply(transpose(g), multiply(l.gram(), g)) != l.gram()) throw Error(ErrorKind::NotIsometry, "matrix does not preserve the Gram matrix");
  if (!l.is_strongly_even()) throw Error(ErrorKind::AssumptionViolated, "lifting an action needs a strongly even lattice (eps = 1)");
  RatMat gr = to_rat(g), gram = to_rat(l.gram());
  const std::int64_t n = p.size();
  LiftedAction out;
  std::vector<IntVec> diff(static_cast<std::size_t>(n));
  for (std::int64_t b = 0; b < n; ++b) {
    RatVec gb = mat_vec(gr, p.lift(b));
    RatVec z = mat_vec(gram, gb);
    IntVec zi(d);
    for (std::size_t i = 0; i < d; ++i) zi[i] = z[i].numerator();
    std::int64_t cls = p.class_of_dual(zi);
    out.object_map.push_back(cls);
    IntVec v(d);
    for (std::size_t i = 0; i < d; ++i) {
      Rat x = gb[i] - p.lift(cls)[i];
      if (x.denominator() != 1) throw Error(ErrorKind::InvalidInput, "lift difference is not a lattice vector");
      v[i] = x.numerator();
    }
    diff[static_cast<std::size_t>(b)] = v;
  }
  auto t = tables_for(p.group());
  out.tau = Cochain::build(t, 2, [&](const std::int64_t* i) { return Phase::of(-p.pair(i[0], diff[static_cast<std::size_t>(i[1])]), 2); });
  out.coherence = detail::action_coherence(out.object_map, out.tau, from_lattice(p).omega);
  return out;
}

// Finite model of a TY category condensed along an isotropic subgroup with eps = 1.
class FiniteModel {
 public:
  FiniteModel(const Presentation& local, const Cochain& sigma, std::vector<Phase> qbar, const Subgroup& iso)
      : local_(local), sigma_(sigma), qbar_(std::move(qbar)), iso_(iso) {}

  const AbGroup& group() const { return local_.group; }
  int num_twisted() const { return 1; }
  std::string twisted_label(int) const { return "X"; }
  std::int64_t u(std::int64_t a, std::int64_t b) const {
    const GroupTables& t = sigma_.tables();
    std::int64_t ab = qt_add(a, b);
    return t.add(t.add(sec(a), sec(b)), t.neg(sec(ab)));
  }
  Phase pair(std::int64_t a, std::int64_t i) const { return sigma_(sec(a), i); }
  Phase qbar(std::int64_t i) const { return qbar_[static_cast<std::size_t>(i)]; }
  Phase chi(int, std::int64_t) const { return Phase(); }
  Phase sig_hat(std::int64_t a, std::int64_t b) const { return sigma_(sec(a), sec(b)); }
  Phase qbar_hat(std::int64_t a) const { return qbar_[static_cast<std::size_t>(sec(a))]; }
  int char_shift(std::int64_t, int) const { return 0; }
  int char_conj(int) const { return 0; }
  std::vector<std::int64_t> twisted_product(int, int) const {
    std::vector<std::int64_t> out;
    for (std::int64_t t = 0; t < group().order(); ++t) {
      bool ok = true;
      for (auto i : iso_.elements())
        if (!(sigma_(i, sec(t)) == qbar(i))) {
          ok = false;
          break;
        }
      if (ok) out.push_back(t);
    }
    return out;
  }

 private:
  Presentation local_;
  Cochain sigma_;
  std::vector<Phase> qbar_;
  Subgroup iso_;
  std::int64_t sec(std::int64_t a) const { return local_.section[static_cast<std::size_t>(a)]; }
  std::int64_t qt_add(std::int64_t a, std::int64_t b) const {
    const AbGroup& q = local_.group;
    return q.index(q.add(q.elem(a), q.elem(b)));
  }
};

struct TyCondensation {
  CrossedCat cat;
  Presentation local;
  std::int64_t local_characters = 0;  // characters of I satisfying the locality condition
  Phase alpha_sq;                     // square of the inherited alpha
  Phase alpha_sq_expected;            // eps G(I^perp/I, q^{-1})
  bool alpha_consistent = false;
};

inline TyCondensation ty_condense(const CrossedCat& c, const Subgroup& iso) {
  const AbGroup& g = c.group;
  const std::int64_t n = g.order();
  if (c.size() != n + 1) throw Error(ErrorKind::InvalidInput, "input must have exactly one twisted simple");
  if (n % 2 == 0) throw Error(ErrorKind::EvenOrder, "condensing a TY category needs odd order, got " + std::to_string(n));
  if (iso.parent() != g) throw Error(ErrorKind::InvalidInput, "subgroup belongs to a different group");
  const int x = static_cast<int>(n);
  auto t = tables_for(g);
  Cochain sigma = Cochain::build(t, 2, [&](const std::int64_t* i) { return c.r_at(static_cast<int>(i[0]), static_cast<int>(i[1]), static_cast<int>(t->add(i[0], i[1]))).r; });
  std::vector<Phase> qbar;
  for (int a = 0; a < n; ++a) qbar.push_back(c.r_at(a, x, x).r.inv());
  for (auto i : iso.elements())
    if (!c.theta[static_cast<std::size_t>(i)].is_one()) throw Error(ErrorKind::NotIsotropic, "Q" + elem_str(g.elem(i)) + " = " + c.theta[static_cast<std::size_t>(i)].str());
  for (auto i : iso.elements())
    if (c.act[static_cast<std::size_t>(i)] >= n || !iso.contains(c.act[static_cast<std::size_t>(i)]))
      throw Error(ErrorKind::NotStable, "action moves " + elem_str(g.elem(i)) + " out of the subgroup");
  for (auto i : iso.elements())
    for (auto j : iso.elements())
      if (!sigma(i, j).is_one()) throw Error(ErrorKind::AssumptionViolated, "braiding is nontrivial on the subgroup, eps = 1 is impossible");
  ScaledScalar fxxx = c.f_at(x, x, x, x, 0, 0);
  const int eps = fxxx.r.is_one() ? 1 : -1;
  if (!(fxxx == ScaledScalar(Rat(1, n), Phase::sign(eps)))) throw Error(ErrorKind::InvalidInput, "input is not in TY normal form");

  TyCondensation out;
  // Locality: characters chi of I with chi(2i) = Q(i)^{-1} eta(i) eps(i,-i) / eps(i,i), eta = eps = 1.
  Presentation ip = present_subgroup(iso);
  for (const auto& ch : characters(ip.group)) {
    bool ok = true;
    for (auto i : iso.elements()) {
      std::int64_t twice = ip.projection[static_cast<std::size_t>(t->add(i, i))];
      if (!(ch.values[static_cast<std::size_t>(twice)] == c.theta[static_cast<std::size_t>(i)].inv())) {
        ok = false;
        break;
      }
    }
    if (ok) ++out.local_characters;
  }
  if (out.local_characters != 1)
    throw Error(ErrorKind::InvalidInput, "locality condition has " + std::to_string(out.local_characters) + " solutions, expected exactly one");

  std::vector<Elem> perp;
  for (std::int64_t a = 0; a < n; ++a) {
    bool ok = true;
    for (auto i : iso.elements())
      if (!(sigma(a, i) * sigma(i, a)).is_one()) ok = false;
    if (ok) perp.push_back(g.elem(a));
  }
  Subgroup iperp = Subgroup::from_elements(g, perp);
  out.local = present(g, iperp.generators(), iso);
  FiniteModel m(out.local, sigma, qbar, iso);
  Phase alpha = c.r_at(x, x, 0).r;
  out.cat = build_condensed("ty", m, eps, alpha, c.theta[static_cast<std::size_t>(x)]);
  out.alpha_sq = alpha.pow(2);
  CycSum s;
  for (std::int64_t a = 0; a < out.local.group.order(); ++a) s += CycSum::root(m.qbar_hat(a).inv());
  out.alpha_sq_expected = snap_to_root(s, Rat(out.local.group.order()), 8) * Phase::sign(eps);
  out.alpha_consistent = out.alpha_sq == out.alpha_sq_expected;
  return out;
}

}  // namespace zcross
