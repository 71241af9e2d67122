#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zcross/crossedcat.hpp"
#include "zcross/lattice.hpp"
#include "zcross/qform.hpp"

namespace zcross {

struct TYSpec {
  DiscForm disc;
  int epsilon_sign = 1;
  bool negative_ribbon = false;  // beta = -eps/alpha instead of eps/alpha
};

inline void check_sign(int eps) {
  if (eps != 1 && eps != -1) throw Error(ErrorKind::InvalidInput, "epsilon must be +1 or -1");
}

// alpha^2 = eps |Gamma|^{-1/2} sum_a q(a)^{-1}.
inline Phase ty_alpha_sq(const QuadForm& q, int eps) {
  CycSum s;
  for (const auto& v : q.table()) s += CycSum::root(v.inv());
  return snap_to_root(s, Rat(q.group().order()), 8) * Phase::sign(eps);
}

inline CrossedCat build_ty(const TYSpec& spec) {
  check_sign(spec.epsilon_sign);
  const DiscForm& d = spec.disc;
  const AbGroup& g = d.group();
  const std::int64_t n = g.order();
  if (n % 2 == 0) throw Error(ErrorKind::EvenOrder, "TY construction needs odd order, got " + std::to_string(n));
  QuadForm q = odd_sqrt(d);
  auto sigma = [&](std::int64_t a, std::int64_t b) { return q.bilinear(a, b); };
  const auto add = g.add_table();
  const auto neg = g.neg_table();
  auto plus = [&](std::int64_t a, std::int64_t b) { return static_cast<int>(add[static_cast<std::size_t>(a * n + b)]); };

  CrossedCat c("ty", g, {"X"});
  c.epsilon_sign = spec.epsilon_sign;
  const int x = static_cast<int>(n);
  Phase alpha = principal_sqrt(ty_alpha_sq(q, spec.epsilon_sign));
  c.alpha = ScaledScalar(Rat(1), alpha);
  c.beta = ScaledScalar(Rat(1), Phase::sign(spec.epsilon_sign) / alpha * (spec.negative_ribbon ? Phase::of(1, 2) : Phase()));
  std::vector<int> all;
  for (int a = 0; a < n; ++a) all.push_back(a);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) c.set_fusion(a, b, {plus(a, b)});
    c.set_fusion(a, x, {x});
    c.set_fusion(x, a, {x});
    c.act[a] = neg[a];
    c.theta[a] = d.value(a);
  }
  c.set_fusion(x, x, all);
  c.theta[x] = c.beta.r;
  const ScaledScalar one;
  auto tnorm = ScaledScalar(Rat(1, n), Phase::sign(spec.epsilon_sign));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = plus(a, b);
      for (int cc = 0; cc < n; ++cc) c.set_f(a, b, cc, plus(ab, cc), ab, plus(b, cc), one);
      c.set_f(a, b, x, x, ab, x, one);
      c.set_f(x, a, b, x, x, ab, one);
      c.set_f(a, x, b, x, x, x, ScaledScalar(Rat(1), sigma(a, b)));
      c.set_f(a, x, x, b, x, plus(b, neg[a]), one);
      c.set_f(x, x, a, b, plus(b, neg[a]), x, one);
      c.set_f(x, a, x, b, x, x, ScaledScalar(Rat(1), sigma(a, b)));
      c.set_f(x, x, x, x, a, b, tnorm * sigma(a, b).inv());
      c.set_r(a, b, ab, ScaledScalar(Rat(1), sigma(a, b)));
      c.set_tau(a, b, ab, one);
    }
  for (int a = 0; a < n; ++a) {
    ScaledScalar qi(Rat(1), q.value(a).inv());
    c.set_r(a, x, x, qi);
    c.set_r(x, a, x, qi);
    c.set_r(x, x, a, c.alpha * q.value(a));
    c.set_tau(a, x, x, one);
    c.set_tau(x, a, x, one);
    c.set_tau(x, x, a, one);
  }
  c.finalize();
  return c;
}

// Data needed by the shared builder for categories of the form Vect_Gamma (+) twisted sector,
// where the untwisted part is condensed from an ambient bimultiplicative sigma with trivial
// associator along lifts a -> a_hat. Part is the type of lift defects u(a,b).
template <class Model>
CrossedCat build_condensed(const std::string& kind, const Model& m, int eps, const Phase& alpha, const Phase& beta) {
  check_sign(eps);
  const AbGroup& g = m.group();
  const std::int64_t n = g.order();
  const auto add = g.add_table();
  const auto neg = g.neg_table();
  auto plus = [&](std::int64_t a, std::int64_t b) { return static_cast<int>(add[static_cast<std::size_t>(a * n + b)]); };
  const int nt = m.num_twisted();
  std::vector<std::string> tl;
  for (int k = 0; k < nt; ++k) tl.push_back(m.twisted_label(k));
  CrossedCat c(kind, g, tl);
  c.epsilon_sign = eps;
  c.alpha = ScaledScalar(Rat(1), alpha);
  c.beta = ScaledScalar(Rat(1), beta);
  auto X = [&](int k) { return static_cast<int>(n) + k; };
  auto ph = [](const Phase& p) { return ScaledScalar(Rat(1), p); };

  std::vector<std::vector<std::vector<int>>> prod(static_cast<std::size_t>(nt), std::vector<std::vector<int>>(static_cast<std::size_t>(nt)));
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < nt; ++j) {
      for (auto t : m.twisted_product(i, j)) prod[i][j].push_back(static_cast<int>(t));
      std::sort(prod[i][j].begin(), prod[i][j].end());
    }
  std::vector<std::vector<int>> shift(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(nt)));
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < nt; ++k) shift[a][k] = m.char_shift(a, k);

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) c.set_fusion(a, b, {plus(a, b)});
    for (int k = 0; k < nt; ++k) {
      c.set_fusion(a, X(k), {X(shift[a][k])});
      c.set_fusion(X(k), a, {X(shift[a][k])});
    }
    c.act[a] = neg[a];
    c.theta[a] = m.sig_hat(a, a);
  }
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < nt; ++j) c.set_fusion(X(i), X(j), prod[i][j]);
    c.act[X(i)] = X(m.char_conj(i));
    c.theta[X(i)] = beta;
  }

  // Associators, one family per grade pattern.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = plus(a, b);
      const auto uab = m.u(a, b);
      for (int cc = 0; cc < n; ++cc) c.set_f(a, b, cc, plus(ab, cc), ab, plus(b, cc), ph(m.pair(a, m.u(b, cc))));
      for (int k = 0; k < nt; ++k) {
        const int xk = X(k);
        // (X, C_a, C_b)
        c.set_f(xk, a, b, X(shift[ab][k]), X(shift[a][k]), plus(a, b), ph(m.chi(k, uab) * m.qbar(uab)));
        // (C_a, X, C_b)
        c.set_f(a, xk, b, X(shift[ab][k]), X(shift[a][k]), X(shift[b][k]), ph(m.sig_hat(a, b)));
        // (C_a, C_b, X)
        c.set_f(a, b, xk, X(shift[ab][k]), ab, X(shift[b][k]), ph(m.chi(k, uab) * m.pair(a, uab) * m.pair(b, uab)));
      }
    }
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < nt; ++j) {
      const int xi = X(i), xj = X(j);
      for (int a = 0; a < n; ++a) {
        // (X_i, X_j, C_a): left channel t
        for (int t : prod[i][j]) c.set_f(xi, xj, a, plus(t, a), t, X(shift[a][j]), ph(m.chi(i, m.u(t, a))));
        // (X_i, C_a, X_j): target t
        for (int t : c.fusion(X(shift[a][i]), xj)) c.set_f(xi, a, xj, t, X(shift[a][i]), X(shift[a][j]), ph(m.sig_hat(t, a)));
        // (C_a, X_i, X_j): right channel t
        for (int t : prod[i][j]) {
          const auto uat = m.u(a, t);
          c.set_f(a, xi, xj, plus(a, t), X(shift[a][i]), t, ph(m.chi(i, uat) * m.pair(a, uat)));
        }
      }
      // (X_i, X_j, X_k)
      const Rat norm(1, static_cast<std::int64_t>(prod[i][j].size()));
      for (int k = 0; k < nt; ++k)
        for (int t : prod[i][j])
          for (int r : prod[j][k]) {
            const int target = X(shift[t][k]);
            if (target != X(shift[r][i])) continue;
            c.set_f(xi, xj, X(k), target, t, r, ScaledScalar(norm, Phase::sign(eps) / m.sig_hat(t, r)));
          }
    }

  // Braidings and tensor structure of the action.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      c.set_r(a, b, plus(a, b), ph(m.sig_hat(a, b)));
      c.set_tau(a, b, plus(a, b), ph(m.pair(a, m.u(b, neg[b])).inv()));
    }
    const auto uneg = m.u(a, neg[a]);
    for (int k = 0; k < nt; ++k) {
      const int xk = X(k), z = X(shift[a][k]);
      c.set_r(a, xk, z, ph(m.qbar_hat(a).inv()));
      c.set_r(xk, a, z, ph(m.qbar_hat(a).inv() * m.pair(a, uneg) * m.chi(k, uneg)));
      c.set_tau(xk, a, z, ph(m.qbar(uneg) * m.chi(k, uneg)));
      c.set_tau(a, xk, z, ph(m.pair(a, uneg) * m.chi(k, uneg)));
    }
  }
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < nt; ++j)
      for (int t : prod[i][j]) {
        c.set_r(X(i), X(j), t, ph(alpha * m.qbar_hat(t)));
        c.set_tau(X(i), X(j), t, ph(m.chi(i, m.u(t, neg[t]))));
      }
  c.finalize();
  return c;
}

// Lattice model: ambient sigma(x, y) = e(<x,y>/2) on L*, lifts from the discriminant pipeline,
// twisted simples indexed by characters c in {0,1}^d of L/2L (lexicographic).
class LatticeModel {
 public:
  explicit LatticeModel(const DiscPipeline& p) : p_(p), d_(p.lattice().rank()) {}

  const AbGroup& group() const { return p_.group(); }
  int num_twisted() const { return 1 << d_; }
  std::string twisted_label(int k) const {
    std::string s = "X(";
    for (std::size_t i = 0; i < d_; ++i) s += (i ? "," : "") + std::to_string(bit(k, i));
    return s + ")";
  }
  IntVec u(std::int64_t a, std::int64_t b) const { return p_.u(a, b); }
  Phase pair(std::int64_t a, const IntVec& x) const { return Phase::of(p_.pair(a, x), 2); }
  Phase qbar(const IntVec& x) const { return Phase::of(p_.lattice().inner(x, x), 4); }
  Phase chi(int k, const IntVec& x) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < d_; ++i) s += bit(k, i) * mod(x[i], 2);
    return Phase::of(s, 2);
  }
  Phase sig_hat(std::int64_t a, std::int64_t b) const { return Phase(p_.inner(a, b) / 2); }
  Phase qbar_hat(std::int64_t a) const { return Phase(p_.inner(a, a) / 4); }
  int char_shift(std::int64_t a, int k) const {
    int r = k;
    for (std::size_t i = 0; i < d_; ++i)
      if (mod(p_.dual(a)[i], 2)) r ^= 1 << (d_ - 1 - i);
    return r;
  }
  int char_conj(int k) const { return k; }
  // t with <alpha_i, t_hat> = G_ii/2 + c_i + f_i (mod 2) for every basis vector.
  std::vector<std::int64_t> twisted_product(int k, int l) const {
    std::vector<std::int64_t> out;
    for (std::int64_t t = 0; t < p_.size(); ++t) {
      bool ok = true;
      for (std::size_t i = 0; i < d_ && ok; ++i)
        ok = mod(p_.dual(t)[i] - p_.lattice().gram()[i][i] / 2 - bit(k, i) - bit(l, i), 2) == 0;
      if (ok) out.push_back(t);
    }
    return out;
  }

 private:
  const DiscPipeline& p_;
  std::size_t d_;
  int bit(int k, std::size_t i) const { return (k >> (d_ - 1 - i)) & 1; }
};

struct GLMResult {
  CrossedCat cat;
  Phase alpha_sq;
  Phase alpha_sq_expected;  // eps e(-rank/8)
  std::vector<std::int64_t> delta;
};

inline GLMResult build_glm_full(const Lattice& l, int eps, bool negative_ribbon = false) {
  check_sign(eps);
  if (!l.is_strongly_even()) throw Error(ErrorKind::NotStronglyEven, "the lattice construction needs a strongly even lattice");
  DiscPipeline p(l);
  LatticeModel m(p);
  GLMResult r;
  r.delta = m.twisted_product(0, 0);
  if (r.delta.empty()) throw Error(ErrorKind::InvalidInput, "character equation has no solution");
  CycSum s;
  for (auto t : r.delta) s += CycSum::root(m.qbar_hat(t).inv());
  r.alpha_sq = snap_to_root(s, Rat(static_cast<std::int64_t>(r.delta.size())), 8) * Phase::sign(eps);
  r.alpha_sq_expected = Phase::sign(eps) * Phase::of(-static_cast<std::int64_t>(l.rank()), 8);
  Phase alpha = principal_sqrt(r.alpha_sq);
  Phase beta = Phase::sign(eps) / alpha * (negative_ribbon ? Phase::of(1, 2) : Phase());
  r.cat = build_condensed("lattice", m, eps, alpha, beta);
  return r;
}

inline CrossedCat build_glm(const Lattice& l, int eps) { return build_glm_full(l, eps).cat; }

// e(-d0/8) (2/|Gamma|), defined when d0 is a multiple of 4.
inline int epsilon_from_geometry(std::int64_t d0, std::int64_t gamma_order) {
  if (mod(d0, 4) != 0) throw Error(ErrorKind::BadD0, "e(-d0/8) is not a sign for d0 = " + std::to_string(d0));
  int s = mod(d0, 8) == 0 ? 1 : -1;
  return s * kronecker2(gamma_order);
}

// Every twisted simple has theta^2 = e(d1/8).
inline Report twist_consistency(const CrossedCat& c, std::int64_t d1) {
  Report rep;
  rep.name = "twist_consistency";
  Phase want = Phase::of(d1, 8);
  for (int x = 0; x < c.size(); ++x) {
    if (!c.twisted(x)) continue;
    ++rep.visited;
    ++rep.total;
    if (!(c.theta[x].pow(2) == want)) rep.add("twist_squared", {x}, "theta^2 = e(" + c.theta[x].pow(2).str() + "), expected e(" + want.str() + ")");
  }
  return rep;
}

}  // namespace zcross
