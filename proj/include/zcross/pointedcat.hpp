#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zcross/lattice.hpp"
#include "zcross/qform.hpp"
#include "zcross/report.hpp"

namespace zcross {

// Addition and negation tables shared by every cochain on one group.
struct GroupTables {
  AbGroup group;
  std::int64_t n = 1;
  std::vector<std::int32_t> add_, neg_;

  explicit GroupTables(const AbGroup& g) : group(g), n(g.order()), add_(g.add_table()), neg_(g.neg_table()) {}
  std::int64_t add(std::int64_t a, std::int64_t b) const { return add_[static_cast<std::size_t>(a * n + b)]; }
  std::int64_t neg(std::int64_t a) const { return neg_[static_cast<std::size_t>(a)]; }
};

inline std::shared_ptr<const GroupTables> tables_for(const AbGroup& g) { return std::make_shared<const GroupTables>(g); }

// A Phase-valued function on Gamma^arity stored as integer exponents over one conductor.
class Cochain {
 public:
  Cochain() = default;

  template <class Fn>
  static Cochain build(std::shared_ptr<const GroupTables> t, int arity, Fn&& fn) {
    Cochain c;
    c.t_ = std::move(t);
    c.arity_ = arity;
    std::size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= static_cast<std::size_t>(c.t_->n);
    std::vector<Rat> raw(total);
    std::int64_t idx[4] = {0, 0, 0, 0};
    std::int64_t cond = 1;
    for (std::size_t f = 0; f < total; ++f) {
      std::size_t rem = f;
      for (int i = arity - 1; i >= 0; --i) {
        idx[i] = static_cast<std::int64_t>(rem % static_cast<std::size_t>(c.t_->n));
        rem /= static_cast<std::size_t>(c.t_->n);
      }
      raw[f] = Phase(fn(idx)).exponent();
      cond = lcm64(cond, raw[f].denominator());
    }
    c.cond_ = cond;
    c.e_.resize(total);
    for (std::size_t f = 0; f < total; ++f) c.e_[f] = (raw[f] * cond).numerator();
    return c;
  }

  template <class Fn>
  static Cochain build(const AbGroup& g, int arity, Fn&& fn) { return build(tables_for(g), arity, std::forward<Fn>(fn)); }

  static Cochain constant(const AbGroup& g, int arity) {
    return build(g, arity, [](const std::int64_t*) { return Phase(); });
  }

  const AbGroup& group() const { return t_->group; }
  const GroupTables& tables() const { return *t_; }
  std::shared_ptr<const GroupTables> shared_tables() const { return t_; }
  int arity() const { return arity_; }
  std::int64_t conductor() const { return cond_; }
  std::size_t size() const { return e_.size(); }

  std::size_t flat(std::int64_t a) const { return static_cast<std::size_t>(a); }
  std::size_t flat(std::int64_t a, std::int64_t b) const { return static_cast<std::size_t>(a * t_->n + b); }
  std::size_t flat(std::int64_t a, std::int64_t b, std::int64_t c) const { return static_cast<std::size_t>((a * t_->n + b) * t_->n + c); }

  std::int64_t exp_at(std::size_t f) const { return e_[f]; }
  Phase at(std::size_t f) const { return Phase::of(e_[f], cond_); }
  Phase operator()(std::int64_t a) const { return at(flat(a)); }
  Phase operator()(std::int64_t a, std::int64_t b) const { return at(flat(a, b)); }
  Phase operator()(std::int64_t a, std::int64_t b, std::int64_t c) const { return at(flat(a, b, c)); }

  std::vector<Phase> phases() const {
    std::vector<Phase> out;
    out.reserve(e_.size());
    for (std::size_t f = 0; f < e_.size(); ++f) out.push_back(at(f));
    return out;
  }

  // Copy with one entry multiplied by p.
  Cochain perturbed(std::size_t f, const Phase& p) const {
    std::vector<Phase> vals = phases();
    vals[f] = vals[f] * p;
    return build(t_, arity_, [&](const std::int64_t* idx) {
      std::size_t g = 0;
      for (int i = 0; i < arity_; ++i) g = g * static_cast<std::size_t>(t_->n) + static_cast<std::size_t>(idx[i]);
      return vals[g];
    });
  }

  bool operator==(const Cochain& o) const {
    if (group() != o.group() || arity_ != o.arity_) return false;
    for (std::size_t f = 0; f < e_.size(); ++f)
      if (!(at(f) == o.at(f))) return false;
    return true;
  }

 private:
  std::shared_ptr<const GroupTables> t_ = tables_for(AbGroup());
  int arity_ = 0;
  std::int64_t cond_ = 1;
  std::vector<std::int64_t> e_;
};

// Braiding sigma and associator omega of a pointed braided category.
struct AbelianCocycle {
  Cochain sigma;  // arity 2
  Cochain omega;  // arity 3
  const AbGroup& group() const { return sigma.group(); }
};

inline AbelianCocycle trivial_cocycle(const AbGroup& g) {
  auto t = tables_for(g);
  return {Cochain::build(t, 2, [](const std::int64_t*) { return Phase(); }),
          Cochain::build(t, 3, [](const std::int64_t*) { return Phase(); })};
}

inline AbelianCocycle from_lattice(const DiscPipeline& p) {
  auto t = tables_for(p.group());
  const Lattice& l = p.lattice();
  Cochain sigma = Cochain::build(t, 2, [&](const std::int64_t* i) { return Phase(p.inner(i[0], i[1]) / 2); });
  Cochain omega = Cochain::build(t, 3, [&](const std::int64_t* i) {
    std::int64_t a = i[0], b = i[1], c = i[2];
    const IntVec& ubc = p.u(b, c);
    Phase v = Phase::of(p.pair(a, ubc), 2);
    v = v * epsilon_bichar(l, ubc, p.u(a, p.add(b, c)));
    v = v / epsilon_bichar(l, p.u(a, b), p.u(p.add(a, b), c));
    return v;
  });
  return {sigma, omega};
}

namespace detail {

// Exponent arithmetic modulo a common conductor for fast sweeps.
struct ExpView {
  const Cochain* c;
  std::int64_t scale;
  std::int64_t operator()(std::int64_t a, std::int64_t b) const { return c->exp_at(c->flat(a, b)) * scale; }
  std::int64_t operator()(std::int64_t a, std::int64_t b, std::int64_t d) const { return c->exp_at(c->flat(a, b, d)) * scale; }
};

inline bool pentagon_sweep(const Cochain& omega, Report& rep) {
  const GroupTables& t = omega.tables();
  const std::int64_t n = t.n, m = omega.conductor();
  ExpView w{&omega, 1};
  bool ok = true;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d) {
          std::int64_t lhs = w(b, c, d) + w(a, t.add(b, c), d) + w(a, b, c);
          std::int64_t rhs = w(t.add(a, b), c, d) + w(a, b, t.add(c, d));
          ++rep.visited;
          if (mod(lhs - rhs, m) != 0) {
            rep.add("pentagon", {a, b, c, d});
            ok = false;
          }
        }
  rep.total += static_cast<std::uint64_t>(n * n * n * n);
  return ok;
}

}  // namespace detail

// Exhaustive check of both hexagon identities and the pentagon identity.
inline Report check_cocycle(const AbelianCocycle& c) {
  Report rep;
  rep.name = "abelian_cocycle";
  if (c.sigma.group() != c.omega.group() || c.sigma.arity() != 2 || c.omega.arity() != 3)
    throw Error(ErrorKind::InvalidInput, "braiding and associator tables do not match");
  const GroupTables& t = c.sigma.tables();
  const std::int64_t n = t.n;
  const std::int64_t m = lcm64(c.sigma.conductor(), c.omega.conductor());
  detail::ExpView s{&c.sigma, m / c.sigma.conductor()}, w{&c.omega, m / c.omega.conductor()};
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t d = 0; d < n; ++d) {
        std::int64_t h1 = w(b, a, d) - w(a, b, d) - w(b, d, a) - s(a, t.add(b, d)) + s(a, b) + s(a, d);
        std::int64_t h2 = w(a, b, d) + w(d, a, b) - w(a, d, b) - s(t.add(a, b), d) + s(a, d) + s(b, d);
        rep.visited += 2;
        if (mod(h1, m) != 0) rep.add("hexagon_left", {a, b, d});
        if (mod(h2, m) != 0) rep.add("hexagon_right", {a, b, d});
      }
  rep.total += static_cast<std::uint64_t>(2 * n * n * n);
  detail::pentagon_sweep(c.omega, rep);
  return rep;
}

inline Report check_three_cocycle(const Cochain& omega) {
  Report rep;
  rep.name = "three_cocycle";
  detail::pentagon_sweep(omega, rep);
  return rep;
}

inline bool is_two_cocycle(const Cochain& f) {
  const GroupTables& t = f.tables();
  const std::int64_t n = t.n, m = f.conductor();
  detail::ExpView v{&f, 1};
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        if (mod(v(a, b) + v(t.add(a, b), c) - v(b, c) - v(a, t.add(b, c)), m) != 0) return false;
  return true;
}

// Q(a) = sigma(a,a); B(a,b) = sigma(a,b) sigma(b,a).
inline QuadForm extract_q(const AbelianCocycle& c) {
  const AbGroup& g = c.group();
  std::vector<std::int64_t> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.index(g.gen(i)));
  std::vector<Phase> vals, pairs;
  for (auto x : gens) vals.push_back(c.sigma(x, x));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) pairs.push_back(c.sigma(gens[i], gens[j]) * c.sigma(gens[j], gens[i]));
  return QuadForm(g, vals, pairs);
}

struct ModularData {
  std::vector<std::vector<ScaledScalar>> S;
  std::vector<Phase> T;
};

inline ModularData modular_data(const AbelianCocycle& c) {
  DiscForm q(extract_q(c));
  const std::int64_t n = q.group().order();
  ModularData md;
  md.S.assign(static_cast<std::size_t>(n), {});
  for (std::int64_t a = 0; a < n; ++a) {
    md.T.push_back(q.value(a));
    for (std::int64_t b = 0; b < n; ++b) md.S[static_cast<std::size_t>(a)].push_back(ScaledScalar(Rat(1, n), q.bilinear(a, b)));
  }
  return md;
}

// Twisting maps of a 3-cocycle on an abelian group (the action is trivial on objects):
// gamma(g,h,x) = w(g,h,x) w(x,g,h) / w(g,x,h), mu(g,x,y) = w(x,g,y) / (w(x,y,g) w(g,x,y)).
struct TwistingMaps {
  Cochain gamma;  // indexed (g, h, x)
  Cochain mu;     // indexed (g, x, y)
};

inline TwistingMaps twisting_maps(const Cochain& omega) {
  Report rep = check_three_cocycle(omega);
  if (!rep.ok()) throw Error(ErrorKind::NotCocycle, "associator fails the pentagon identity at " + std::to_string(rep.violations.size()) + " quadruples");
  auto t = omega.shared_tables();
  TwistingMaps tm;
  tm.gamma = Cochain::build(t, 3, [&](const std::int64_t* i) {
    return omega(i[0], i[1], i[2]) * omega(i[2], i[0], i[1]) / omega(i[0], i[2], i[1]);
  });
  tm.mu = Cochain::build(t, 3, [&](const std::int64_t* i) {
    return omega(i[1], i[0], i[2]) / (omega(i[1], i[2], i[0]) * omega(i[0], i[1], i[2]));
  });
  const std::int64_t n = t->n;
  for (std::int64_t g = 0; g < n; ++g) {
    Cochain slice = Cochain::build(t, 2, [&](const std::int64_t* i) { return tm.mu(g, i[0], i[1]); });
    if (!is_two_cocycle(slice))
      throw Error(ErrorKind::NotCocycle, "twisting map for " + elem_str(t->group.elem(g)) + " is not a 2-cocycle");
  }
  return tm;
}

namespace detail {

// Whether A x = b has a solution over Z/p^k: elimination with a pivot of minimal valuation.
inline bool solvable_prime_power(IntMat a, IntVec b, std::int64_t p, std::int64_t pk) {
  const std::size_t rows = a.size(), ncols = cols(a);
  auto val = [&](std::int64_t x) {
    x = mod(x, pk);
    if (x == 0) return std::int64_t(-1);
    std::int64_t v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  auto inv_unit = [&](std::int64_t u) {
    // Extended Euclid for a unit modulo pk.
    __int128 t0 = 0, t1 = 1, r0 = pk, r1 = mod(u, pk);
    while (r1 != 0) {
      __int128 q = r0 / r1;
      __int128 tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
      tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
    }
    return mod(static_cast<std::int64_t>(t0 % pk), pk);
  };
  auto mulmod = [&](std::int64_t x, std::int64_t y) { return static_cast<std::int64_t>((static_cast<__int128>(mod(x, pk)) * mod(y, pk)) % pk); };
  for (auto& row : a)
    for (auto& x : row) x = mod(x, pk);
  for (auto& x : b) x = mod(x, pk);
  std::vector<char> row_done(rows, 0), col_done(ncols, 0);
  for (;;) {
    std::int64_t best = -1;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (col_done[j]) continue;
        std::int64_t v = val(a[i][j]);
        if (v >= 0 && (best < 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (best < 0) break;
    std::int64_t pv = 1;
    for (std::int64_t i = 0; i < best; ++i) pv *= p;
    std::int64_t unit_inv = inv_unit(a[pi][pj] / pv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pi || row_done[i] || a[i][pj] == 0) continue;
      std::int64_t f = mulmod(a[i][pj] / pv, unit_inv);
      for (std::size_t j = 0; j < ncols; ++j) a[i][j] = mod(a[i][j] - mulmod(f, a[pi][j]), pk);
      b[i] = mod(b[i] - mulmod(f, b[pi]), pk);
    }
    std::int64_t vb = val(b[pi]);
    if (vb >= 0 && vb < best) return false;
    row_done[pi] = 1;
    col_done[pj] = 1;
  }
  for (std::size_t i = 0; i < rows; ++i)
    if (!row_done[i] && b[i] != 0) return false;
  return true;
}

}  // namespace detail

// Whether A x = b (mod m) has an integer solution.
inline bool solvable_mod(const IntMat& a, const IntVec& b, std::int64_t m) {
  std::int64_t rest = m;
  for (auto p : detail::prime_factors(m)) {
    std::int64_t pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    if (!detail::solvable_prime_power(a, b, p, pk)) return false;
  }
  return true;
}

// f(g,h) = l(g) l(h) / l(g+h) for some 1-cochain l.
inline bool is_coboundary(const Cochain& f) {
  const GroupTables& t = f.tables();
  const std::int64_t n = t.n;
  const std::int64_t m = checked_mul(f.conductor(), t.group.exponent());
  IntMat a;
  IntVec b;
  for (std::int64_t g = 0; g < n; ++g)
    for (std::int64_t h = 0; h < n; ++h) {
      IntVec row(static_cast<std::size_t>(n), 0);
      row[static_cast<std::size_t>(g)] += 1;
      row[static_cast<std::size_t>(h)] += 1;
      row[static_cast<std::size_t>(t.add(g, h))] -= 1;
      a.push_back(row);
      b.push_back(f.exp_at(f.flat(g, h)) * (m / f.conductor()));
    }
  return solvable_mod(a, b, m);
}

inline constexpr std::int64_t kCohomologyExactLimit = 9;

// Gauge equivalence: sigma' = sigma k(a,b)/k(b,a), omega' = omega k(a,b) k(a+b,c) / (k(b,c) k(a,b+c)).
// Decided by a linear solve for |Gamma| <= 9; larger groups compare quadratic forms, a complete invariant.
inline bool cohomologous(const AbelianCocycle& x, const AbelianCocycle& y) {
  if (x.group() != y.group()) return false;
  const GroupTables& t = x.sigma.tables();
  const std::int64_t n = t.n;
  if (n > kCohomologyExactLimit) return extract_q(x) == extract_q(y);
  std::int64_t cond = lcm64(lcm64(x.sigma.conductor(), x.omega.conductor()), lcm64(y.sigma.conductor(), y.omega.conductor()));
  const std::int64_t e = t.group.exponent();
  const std::int64_t m = checked_mul(cond, e * e);
  auto col = [&](std::int64_t a, std::int64_t b) { return static_cast<std::size_t>(a * n + b); };
  auto exp_ratio = [&](const Phase& p, const Phase& q) { return ((p / q).exponent() * m).numerator(); };
  IntMat a;
  IntVec b;
  for (std::int64_t p = 0; p < n; ++p)
    for (std::int64_t q = 0; q < n; ++q) {
      IntVec row(static_cast<std::size_t>(n * n), 0);
      row[col(p, q)] += 1;
      row[col(q, p)] -= 1;
      a.push_back(row);
      b.push_back(exp_ratio(y.sigma(p, q), x.sigma(p, q)));
    }
  for (std::int64_t p = 0; p < n; ++p)
    for (std::int64_t q = 0; q < n; ++q)
      for (std::int64_t r = 0; r < n; ++r) {
        IntVec row(static_cast<std::size_t>(n * n), 0);
        row[col(p, q)] += 1;
        row[col(t.add(p, q), r)] += 1;
        row[col(q, r)] -= 1;
        row[col(p, t.add(q, r))] -= 1;
        a.push_back(row);
        b.push_back(exp_ratio(y.omega(p, q, r), x.omega(p, q, r)));
      }
  return solvable_mod(a, b, m);
}

}  // namespace zcross
