#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zcross/crossedcat.hpp"
#include "zcross/report.hpp"
#include "zcross/scalar.hpp"

namespace zcross {

// A simple object of the equivariantisation. components lists the underlying simples (one
// for a fixed simple, two for a free orbit); structure[i] is the scalar of the equivariant
// structure g_*(components[i]) -> g(components[i]).
struct EqSimple {
  std::string label;
  std::vector<int> components;
  std::vector<Phase> structure;
  int sign = 0;  // +1 or -1 on fixed simples, 0 on free orbits
};

struct EquivariantCat {
  std::vector<EqSimple> simples;
  std::vector<std::vector<std::vector<int>>> fusion;  // fusion[i][j][k] = N_{ij}^k
  std::vector<ScaledScalar> dims;
  std::vector<Phase> theta;
  std::vector<int> dual;
  int unit = 0;
  Report ribbon;

  int size() const { return static_cast<int>(simples.size()); }
};

namespace detail {

inline Phase unit_phase(const ScaledScalar& s, const char* what) {
  if (s.m != Rat(1)) throw Error(ErrorKind::NonIntegerMultiplicity, std::string(what) + " scalar " + s.str() + " does not have modulus one");
  return s.r;
}

}  // namespace detail

// Fixed simples carry the two structures +-gamma with gamma = principal_sqrt(t2)^{-1}; a free
// orbit {x, gx} carries 1 on x and t2(x)^{-1} on gx.
inline std::vector<EqSimple> equivariant_simples(const CrossedCat& cat) {
  std::vector<EqSimple> out;
  for (int x = 0; x < cat.size(); ++x) {
    int gx = cat.act[static_cast<std::size_t>(x)];
    Phase t = detail::unit_phase(cat.t2[static_cast<std::size_t>(x)], "composition");
    if (gx == x) {
      Phase gamma = principal_sqrt(t).inv();
      for (int s : {1, -1}) {
        EqSimple e;
        e.label = "(" + cat.labels[static_cast<std::size_t>(x)] + (s > 0 ? ",+)" : ",-)");
        e.components = {x};
        e.structure = {gamma * Phase::sign(s)};
        e.sign = s;
        out.push_back(std::move(e));
      }
    } else if (gx > x) {
      EqSimple e;
      e.label = "(" + cat.labels[static_cast<std::size_t>(x)] + "|" + cat.labels[static_cast<std::size_t>(gx)] + ")";
      e.components = {x, gx};
      e.structure = {Phase(), t.inv()};
      out.push_back(std::move(e));
    }
  }
  return out;
}

namespace detail {

struct Channel {
  int x, y, w;
};

// The scalar and target of the operator f -> (phi (x) psi) tau g_*(f) xi^{-1} on the basis
// vector v^{xy}_w, and of the equivariant double braiding.
struct ChannelOps {
  const CrossedCat& cat;
  const EqSimple &a, &b, &c;

  static Phase structure_of(const EqSimple& s, int x) {
    for (std::size_t i = 0; i < s.components.size(); ++i)
      if (s.components[i] == x) return s.structure[i];
    throw Error(ErrorKind::InvalidInput, "component is not part of the equivariant simple");
  }

  std::pair<Channel, Phase> action(const Channel& ch) const {
    auto g = [&](int z) { return cat.act[static_cast<std::size_t>(z)]; };
    Phase coef = structure_of(a, ch.x) * structure_of(b, ch.y) / structure_of(c, ch.w) * unit_phase(cat.tau_at(ch.x, ch.y, ch.w), "tensor structure");
    return {{g(ch.x), g(ch.y), g(ch.w)}, coef};
  }

  std::pair<Channel, Phase> double_braiding(const Channel& ch) const {
    int y1 = cat.act_by(cat.grade[static_cast<std::size_t>(ch.x)], ch.y);
    Phase coef = unit_phase(cat.r_at(ch.x, ch.y, ch.w), "braiding");
    if (cat.twisted(ch.x)) coef *= structure_of(b, ch.y);
    int x1 = cat.act_by(cat.grade[static_cast<std::size_t>(y1)], ch.x);
    coef *= unit_phase(cat.r_at(y1, ch.x, ch.w), "braiding");
    if (cat.twisted(y1)) coef *= structure_of(a, ch.x);
    return {{x1, y1, ch.w}, coef};
  }
};

}  // namespace detail

// Fusion rules of the equivariantisation by the trace formula
// N = (dim Hom + trace of the group operator) / 2 on Hom(W, A (x) B).
inline EquivariantCat equivariant_fusion(const CrossedCat& cat) {
  EquivariantCat e;
  e.simples = equivariant_simples(cat);
  e.ribbon.name = "ribbon";
  const int n = e.size();
  const QuantumDims qd = quantum_dims(cat);
  for (const auto& s : e.simples) {
    int x = s.components[0];
    ScaledScalar d = qd.dims[static_cast<std::size_t>(x)];
    if (s.components.size() == 2) d = d * ScaledScalar(Rat(4), Phase());
    e.dims.push_back(d);
    Phase t = cat.theta[static_cast<std::size_t>(x)];
    if (cat.twisted(x)) {
      if (s.components.size() != 1) throw Error(ErrorKind::InvalidInput, "twisted simple " + cat.labels[static_cast<std::size_t>(x)] + " is not fixed by the action");
      t *= s.structure[0];
    } else if (s.components.size() == 2 && cat.theta[static_cast<std::size_t>(s.components[1])] != t) {
      e.ribbon.add("orbit_twist", {static_cast<std::int64_t>(e.theta.size())}, s.label);
    }
    e.theta.push_back(t);
  }
  std::vector<int> owner(static_cast<std::size_t>(cat.size()), -1);
  for (int i = 0; i < n; ++i)
    for (int x : e.simples[static_cast<std::size_t>(i)].components)
      if (owner[static_cast<std::size_t>(x)] < 0) owner[static_cast<std::size_t>(x)] = i;

  e.fusion.assign(static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const EqSimple &a = e.simples[static_cast<std::size_t>(i)], &b = e.simples[static_cast<std::size_t>(j)];
      std::map<int, std::vector<detail::Channel>> by_target;
      for (int x : a.components)
        for (int y : b.components)
          for (int w : cat.fusion(x, y)) by_target[owner[static_cast<std::size_t>(w)]].push_back({x, y, w});
      for (const auto& [k, chans] : by_target) {
        const EqSimple& c = e.simples[static_cast<std::size_t>(k)];
        for (int kk = k; kk < n && e.simples[static_cast<std::size_t>(kk)].components == c.components; ++kk) {
          const EqSimple& ck = e.simples[static_cast<std::size_t>(kk)];
          detail::ChannelOps ops{cat, a, b, ck};
          std::int64_t trace = 0;
          for (const auto& ch : chans) {
            auto [to, coef] = ops.action(ch);
            if (to.x != ch.x || to.y != ch.y || to.w != ch.w) continue;
            if (coef.is_one()) ++trace;
            else if (coef == Phase::of(1, 2)) --trace;
            else throw Error(ErrorKind::NonIntegerMultiplicity, "group operator has eigenvalue " + coef.str() + " on " + cat.labels[static_cast<std::size_t>(ch.x)] + "," + cat.labels[static_cast<std::size_t>(ch.y)] + "->" + cat.labels[static_cast<std::size_t>(ch.w)]);
          }
          std::int64_t twice = static_cast<std::int64_t>(chans.size()) + trace;
          if (twice % 2 != 0 || twice < 0) throw Error(ErrorKind::NonIntegerMultiplicity, "multiplicity of " + ck.label + " in " + a.label + " (x) " + b.label + " is " + std::to_string(twice) + "/2");
          int mult = static_cast<int>(twice / 2);
          e.fusion[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(kk)] = mult;
          if (mult == 0) continue;

          // On invariant vectors v + Pv the double braiding must act by theta_W / (theta_A theta_B).
          Phase lambda = e.theta[static_cast<std::size_t>(kk)] / (e.theta[static_cast<std::size_t>(i)] * e.theta[static_cast<std::size_t>(j)]);
          auto key = [](const detail::Channel& ch) { return std::make_tuple(ch.x, ch.y, ch.w); };
          for (const auto& ch : chans) {
            ++e.ribbon.visited;
            std::map<std::tuple<int, int, int>, CycSum> u, mu;
            auto [pch, pc] = ops.action(ch);
            u[key(ch)] += CycSum::root(Phase());
            u[key(pch)] += CycSum::root(pc);
            for (const auto& [kc, val] : u) {
              detail::Channel src{std::get<0>(kc), std::get<1>(kc), std::get<2>(kc)};
              auto [to, coef] = ops.double_braiding(src);
              mu[key(to)] += val * coef;
              mu[kc] -= val * lambda;
            }
            bool zero = true;
            for (const auto& [kc, val] : mu)
              if (!val.is_zero()) zero = false;
            if (!zero) e.ribbon.add("ribbon", {i, j, kk, ch.x, ch.y, ch.w}, a.label + "," + b.label + "->" + ck.label);
          }
        }
      }
    }
  e.ribbon.total = e.ribbon.visited;
  e.unit = 0;
  for (int i = 0; i < n; ++i) {
    int d = -1;
    for (int j = 0; j < n && d < 0; ++j)
      if (e.fusion[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(e.unit)] > 0) d = j;
    if (d < 0) throw Error(ErrorKind::InvalidInput, "equivariant simple " + e.simples[static_cast<std::size_t>(i)].label + " has no dual");
    e.dual.push_back(d);
  }
  return e;
}

// Structural checks on the fusion ring: unit, commutativity, associativity, and the
// doubling of the global Frobenius-Perron dimension.
inline Report check_fusion_ring(const CrossedCat& cat, const EquivariantCat& e) {
  Report rep;
  rep.name = "equivariant_fusion";
  const int n = e.size();
  auto N = [&](int i, int j, int k) { return e.fusion[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]; };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      ++rep.visited;
      if (N(e.unit, i, k) != (i == k ? 1 : 0) || N(i, e.unit, k) != (i == k ? 1 : 0)) rep.add("unit", {i, k});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ++rep.visited;
        if (N(i, j, k) != N(j, i, k)) rep.add("commutativity", {i, j, k});
        if (N(i, j, k) < 0) rep.add("nonnegative", {i, j, k});
      }
  std::vector<std::vector<std::pair<int, int>>> sparse(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (N(i, j, k)) sparse[static_cast<std::size_t>(i * n + j)].push_back({k, N(i, j, k)});
  auto row = [&](int i, int j) -> const std::vector<std::pair<int, int>>& { return sparse[static_cast<std::size_t>(i * n + j)]; };
  std::vector<std::int64_t> lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        ++rep.visited;
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (auto [k, a] : row(i, j))
          for (auto [m, b] : row(k, l)) lhs[static_cast<std::size_t>(m)] += static_cast<std::int64_t>(a) * b;
        for (auto [k, a] : row(j, l))
          for (auto [m, b] : row(i, k)) rhs[static_cast<std::size_t>(m)] += static_cast<std::int64_t>(a) * b;
        if (lhs != rhs) rep.add("associativity", {i, j, l});
      }
  Rat base(0), eq(0);
  for (int x = 0; x < cat.size(); ++x) base += fp_dim_sq(cat, x);
  for (const auto& s : e.simples) {
    auto k = static_cast<std::int64_t>(s.components.size());
    eq += fp_dim_sq(cat, s.components[0]) * (k * k);
  }
  ++rep.visited;
  if (eq != base * 2) rep.add("fp_dimension", {}, "sum " + to_string(eq) + " is not twice " + to_string(base));
  rep.total = rep.visited;
  return rep;
}

enum class Invertibility { Invertible, Singular, Unknown };

inline const char* invertibility_name(Invertibility v) {
  switch (v) {
    case Invertibility::Invertible: return "invertible";
    case Invertibility::Singular: return "singular";
    case Invertibility::Unknown: return "unknown";
  }
  return "unknown";
}

// S_tilde[i][j] = sum_k N_{i* j}^k theta_k d_k / (theta_i theta_j). Invertibility is certified
// by S_tilde^2 = D^2 C with D^2 = sum d_k^2 != 0, singularity by a transparent simple besides
// the unit.
struct EqModularData {
  std::vector<std::vector<CycSum>> s_tilde;
  std::vector<Phase> t;
  CycSum global_dim_sq;
  bool symmetric = true;
  Invertibility invertibility = Invertibility::Unknown;
  int transparent = -1;
  Report checks;
};

inline EqModularData modular_data(const EquivariantCat& e) {
  EqModularData md;
  md.checks.name = "equivariant_modular";
  const int n = e.size();
  md.t = e.theta;
  std::vector<CycSum> d(static_cast<std::size_t>(n)), td(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    d[static_cast<std::size_t>(k)] = CycSum::from_scaled(e.dims[static_cast<std::size_t>(k)]);
    td[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k)] * e.theta[static_cast<std::size_t>(k)];
  }
  auto N = [&](int i, int j, int k) { return e.fusion[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]; };
  md.s_tilde.assign(static_cast<std::size_t>(n), std::vector<CycSum>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CycSum s;
      int di = e.dual[static_cast<std::size_t>(i)];
      for (int k = 0; k < n; ++k)
        if (int m = N(di, j, k)) s += td[static_cast<std::size_t>(k)] * Rat(m);
      md.s_tilde[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s * (e.theta[static_cast<std::size_t>(i)] * e.theta[static_cast<std::size_t>(j)]).inv();
    }
  const auto& S = md.s_tilde;
  auto at = [&](int i, int j) -> const CycSum& { return S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ++md.checks.visited;
      if (at(i, j) != at(j, i)) {
        md.symmetric = false;
        md.checks.add("symmetry", {i, j});
      }
    }
  for (int k = 0; k < n; ++k) md.global_dim_sq += d[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(k)];

  bool square_ok = !md.global_dim_sq.is_zero();
  for (int i = 0; i < n && square_ok; ++i)
    for (int j = 0; j < n && square_ok; ++j) {
      CycSum s;
      for (int k = 0; k < n; ++k) s += at(i, k) * at(k, j);
      CycSum expect = e.dual[static_cast<std::size_t>(i)] == j ? md.global_dim_sq : CycSum();
      if (s != expect) square_ok = false;
    }
  if (square_ok) {
    md.invertibility = Invertibility::Invertible;
  } else {
    for (int i = 0; i < n && md.transparent < 0; ++i) {
      if (i == e.unit) continue;
      bool transparent = true;
      for (int k = 0; k < n && transparent; ++k)
        if (at(i, k) != d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(k)]) transparent = false;
      if (transparent) md.transparent = i;
    }
    if (md.transparent >= 0) md.invertibility = Invertibility::Singular;
  }

  // Each column divided by its unit entry is a character of the fusion ring.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        ++md.checks.visited;
        CycSum sum;
        for (int k = 0; k < n; ++k)
          if (int c = N(i, j, k)) sum += at(k, m) * Rat(c);
        if (d[static_cast<std::size_t>(m)] * sum != at(i, m) * at(j, m)) md.checks.add("verlinde", {i, j, m});
      }
  md.checks.total = md.checks.visited;
  return md;
}

// Invariants of a category that do not depend on gauge or on the equivariant sign labels:
// the phase of F^{x x* x}_x[0,0] on self-dual twisted simples, and the sorted spectrum of
// (dimension, twist) pairs of the equivariantisation.
struct Fingerprint {
  std::vector<Phase> frobenius_schur;
  std::vector<std::pair<ScaledScalar, Phase>> spectrum;

  bool operator==(const Fingerprint& o) const { return frobenius_schur == o.frobenius_schur && spectrum == o.spectrum; }
};

inline Fingerprint fingerprint(const CrossedCat& cat, const EquivariantCat& e) {
  Fingerprint fp;
  for (int x = 0; x < cat.size(); ++x)
    if (cat.twisted(x) && cat.dual(x) == x) fp.frobenius_schur.push_back(cat.f_at(x, x, x, x, 0, 0).r);
  std::sort(fp.frobenius_schur.begin(), fp.frobenius_schur.end());
  for (int i = 0; i < e.size(); ++i) fp.spectrum.push_back({e.dims[static_cast<std::size_t>(i)], e.theta[static_cast<std::size_t>(i)]});
  std::sort(fp.spectrum.begin(), fp.spectrum.end());
  return fp;
}

inline Fingerprint fingerprint(const CrossedCat& cat) { return fingerprint(cat, equivariant_fusion(cat)); }

}  // namespace zcross
