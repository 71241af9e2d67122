#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "zcross/abgroup.hpp"
#include "zcross/pointedcat.hpp"
#include "zcross/report.hpp"
#include "zcross/scalar.hpp"

namespace zcross {

// Skeletal Z/2-graded category with multiplicity-free fusion.
// Conventions, with v^{xy}_z a basis vector of Hom(z, x (x) y):
//   (v^{ab}_e (x) 1) v^{ec}_d = sum_f F^{abc}_d[e,f] (1 (x) v^{bc}_f) v^{af}_d
//   braiding:      c v^{xy}_z = R(x,y;z) v^{g(y), x}_z, g acting by grade(x)
//   action:   tau g_*(v^{xy}_z) = tau(x,y;z) v^{gx, gy}_{gz}
//   composition g_* g_* -> id on x is the scalar t2(x).
class CrossedCat {
 public:
  static constexpr int kMaxSimples = 1023;

  std::string kind = "custom";
  AbGroup group;  // untwisted simples, indexed by element index
  std::vector<std::string> labels;
  std::vector<int> grade;
  std::vector<int> act;
  std::vector<ScaledScalar> t2;
  std::vector<Phase> theta;
  int epsilon_sign = 1;
  ScaledScalar alpha, beta;

  CrossedCat() = default;
  CrossedCat(std::string kind_name, const AbGroup& g, const std::vector<std::string>& twisted_labels) : kind(std::move(kind_name)), group(g) {
    for (std::int64_t a = 0; a < g.order(); ++a) {
      labels.push_back("C" + elem_str(g.elem(a)));
      grade.push_back(0);
    }
    for (const auto& l : twisted_labels) {
      labels.push_back(l);
      grade.push_back(1);
    }
    const std::size_t s = labels.size();
    if (s > static_cast<std::size_t>(kMaxSimples)) throw Error(ErrorKind::InvalidInput, "too many simple objects");
    act.resize(s);
    for (std::size_t x = 0; x < s; ++x) act[x] = static_cast<int>(x);
    t2.assign(s, ScaledScalar::one());
    theta.assign(s, Phase());
    fusion_.assign(s * s, {});
  }

  int size() const { return static_cast<int>(labels.size()); }
  int untwisted_count() const { return static_cast<int>(group.order()); }
  bool twisted(int x) const { return grade[static_cast<std::size_t>(x)] == 1; }
  // The action of the generator raised to grade h.
  int act_by(int h, int x) const { return h ? act[static_cast<std::size_t>(x)] : x; }

  void set_fusion(int x, int y, std::vector<int> z) {
    std::sort(z.begin(), z.end());
    fusion_[idx2(x, y)] = std::move(z);
  }
  const std::vector<int>& fusion(int x, int y) const { return fusion_[idx2(x, y)]; }
  bool has(int x, int y, int z) const { return has_.empty() ? std::binary_search(fusion(x, y).begin(), fusion(x, y).end(), z) : has_[idx3(x, y, z)] != 0; }

  void set_f(int a, int b, int c, int d, int e, int f, const ScaledScalar& v) { f_[key6(a, b, c, d, e, f)] = v; }
  void set_r(int x, int y, int z, const ScaledScalar& v) { r_[key3(x, y, z)] = v; }
  void set_tau(int x, int y, int z, const ScaledScalar& v) { tau_[key3(x, y, z)] = v; }

  const ScaledScalar* find_f(int a, int b, int c, int d, int e, int f) const { return find(f_, key6(a, b, c, d, e, f)); }
  ScaledScalar f_at(int a, int b, int c, int d, int e, int f) const { return get(f_, key6(a, b, c, d, e, f), "F"); }
  ScaledScalar r_at(int x, int y, int z) const { return get(r_, key3(x, y, z), "R"); }
  ScaledScalar tau_at(int x, int y, int z) const { return get(tau_, key3(x, y, z), "tau"); }
  // Inverse associator entry G^{abc}_d[f,e] with f in b(x)c and e in a(x)b.
  const ScaledScalar* find_finv(int a, int b, int c, int d, int f, int e) const { return find(g_, key6(a, b, c, d, f, e)); }

  const std::unordered_map<std::uint64_t, ScaledScalar>& f_table() const { return f_; }
  const std::unordered_map<std::uint64_t, ScaledScalar>& r_table() const { return r_; }
  const std::unordered_map<std::uint64_t, ScaledScalar>& tau_table() const { return tau_; }

  // Left and right intermediate objects of the associator block F^{abc}_d.
  std::vector<int> left_channels(int a, int b, int c, int d) const {
    std::vector<int> out;
    for (int e : fusion(a, b))
      if (has(e, c, d)) out.push_back(e);
    return out;
  }
  std::vector<int> right_channels(int a, int b, int c, int d) const {
    std::vector<int> out;
    for (int f : fusion(b, c))
      if (has(a, f, d)) out.push_back(f);
    return out;
  }

  // Dual object: the unique y with the unit in x (x) y.
  int dual(int x) const {
    for (int y = 0; y < size(); ++y)
      if (has(x, y, 0)) return y;
    throw Error(ErrorKind::InvalidInput, "simple " + labels[static_cast<std::size_t>(x)] + " has no dual");
  }

  // Validates the data model and builds lookup and inverse tables. Inverse blocks that are
  // not unitary are recorded in inverse_issues.
  void finalize() {
    const int s = size();
    if (s == 0) throw Error(ErrorKind::InvalidInput, "category has no simple objects");
    if (grade[0] != 0) throw Error(ErrorKind::InvalidInput, "simple 0 must be the unit");
    if (static_cast<int>(act.size()) != s || static_cast<int>(t2.size()) != s || static_cast<int>(theta.size()) != s)
      throw Error(ErrorKind::InvalidInput, "per-simple tables have the wrong length");
    has_.assign(static_cast<std::size_t>(s) * s * s, 0);
    for (int x = 0; x < s; ++x)
      for (int y = 0; y < s; ++y) {
        const auto& zs = fusion(x, y);
        if (zs.empty()) throw Error(ErrorKind::InvalidInput, "empty fusion product " + labels[x] + " (x) " + labels[y]);
        for (std::size_t i = 0; i < zs.size(); ++i) {
          int z = zs[i];
          if (z < 0 || z >= s) throw Error(ErrorKind::InvalidInput, "fusion refers to an unknown simple");
          if (i > 0 && zs[i - 1] == z) throw Error(ErrorKind::InvalidInput, "fusion multiplicity above one in " + labels[x] + " (x) " + labels[y]);
          if (grade[z] != (grade[x] + grade[y]) % 2) throw Error(ErrorKind::InvalidInput, "fusion does not respect the grading");
          has_[idx3(x, y, z)] = 1;
        }
      }
    for (int x = 0; x < s; ++x)
      if (fusion(0, x) != std::vector<int>{x} || fusion(x, 0) != std::vector<int>{x})
        throw Error(ErrorKind::InvalidInput, "simple 0 is not a unit for " + labels[x]);
    std::vector<int> seen(static_cast<std::size_t>(s), 0);
    for (int x = 0; x < s; ++x) {
      int y = act[x];
      if (y < 0 || y >= s || seen[y]++) throw Error(ErrorKind::InvalidInput, "action is not a permutation of simples");
      if (grade[y] != grade[x]) throw Error(ErrorKind::InvalidInput, "action does not preserve grades");
      if (act[y] != x) throw Error(ErrorKind::InvalidInput, "action on objects is not an involution");
    }
    if (act[0] != 0) throw Error(ErrorKind::InvalidInput, "action must fix the unit");
    for (int x = 0; x < s; ++x)
      for (int y = 0; y < s; ++y)
        for (int z : fusion(x, y)) {
          if (!has(act[x], act[y], act[z])) throw Error(ErrorKind::InvalidInput, "action is not compatible with fusion");
          if (!r_.count(key3(x, y, z))) throw Error(ErrorKind::InvalidInput, "missing braiding " + triple(x, y, z));
          if (!tau_.count(key3(x, y, z))) throw Error(ErrorKind::InvalidInput, "missing tensor structure " + triple(x, y, z));
          if (!has(act_by(grade[x], y), x, z)) throw Error(ErrorKind::InvalidInput, "braiding target missing for " + triple(x, y, z));
        }
    g_.clear();
    inverse_issues.clear();
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        for (int c = 0; c < s; ++c)
          for (int d = 0; d < s; ++d) {
            auto es = left_channels(a, b, c, d);
            auto fs = right_channels(a, b, c, d);
            if (es.size() != fs.size()) throw Error(ErrorKind::InvalidInput, "associator block is not square");
            for (int e : es)
              for (int f : fs)
                if (!f_.count(key6(a, b, c, d, e, f)))
                  throw Error(ErrorKind::InvalidInput, "missing associator entry " + labels[a] + "," + labels[b] + "," + labels[c] + "->" + labels[d]);
            build_inverse(a, b, c, d, es, fs);
          }
  }

  std::vector<std::vector<int>> inverse_issues;

 private:
  std::vector<std::vector<int>> fusion_;
  std::vector<char> has_;
  std::unordered_map<std::uint64_t, ScaledScalar> f_, g_, r_, tau_;

  std::size_t idx2(int x, int y) const { return static_cast<std::size_t>(x) * labels.size() + static_cast<std::size_t>(y); }
  std::size_t idx3(int x, int y, int z) const { return idx2(x, y) * labels.size() + static_cast<std::size_t>(z); }
  static std::uint64_t key3(int x, int y, int z) { return (static_cast<std::uint64_t>(x) << 20) | (static_cast<std::uint64_t>(y) << 10) | static_cast<std::uint64_t>(z); }
  static std::uint64_t key6(int a, int b, int c, int d, int e, int f) { return (key3(a, b, c) << 30) | key3(d, e, f); }
  std::string triple(int x, int y, int z) const { return labels[x] + "," + labels[y] + "->" + labels[z]; }

  static const ScaledScalar* find(const std::unordered_map<std::uint64_t, ScaledScalar>& m, std::uint64_t k) {
    auto it = m.find(k);
    return it == m.end() ? nullptr : &it->second;
  }
  static ScaledScalar get(const std::unordered_map<std::uint64_t, ScaledScalar>& m, std::uint64_t k, const char* what) {
    auto it = m.find(k);
    if (it == m.end()) throw Error(ErrorKind::InvalidInput, std::string("missing ") + what + " entry");
    return it->second;
  }

  void build_inverse(int a, int b, int c, int d, const std::vector<int>& es, const std::vector<int>& fs) {
    if (es.empty()) return;
    if (es.size() == 1) {
      g_[key6(a, b, c, d, fs[0], es[0])] = f_.at(key6(a, b, c, d, es[0], fs[0])).inv();
      return;
    }
    for (int e : es)
      for (int f : fs) g_[key6(a, b, c, d, f, e)] = f_.at(key6(a, b, c, d, e, f)).conj();
    for (int e1 : es)
      for (int e2 : es) {
        std::vector<ScaledScalar> terms;
        for (int f : fs) terms.push_back(f_.at(key6(a, b, c, d, e1, f)) * f_.at(key6(a, b, c, d, e2, f)).conj());
        std::vector<ScaledScalar> target;
        if (e1 == e2) target.push_back(ScaledScalar::one());
        if (!equal_sums(terms, target)) {
          inverse_issues.push_back({a, b, c, d});
          return;
        }
      }
  }
};

struct VerifyOptions {
  std::uint64_t budget = 0;  // 0 means no cap
  unsigned threads = 1;
};

namespace detail {

// Runs body(tuple_index, report) over [0, min(total, budget)) split into contiguous blocks.
template <class Body>
Report sweep(const std::string& name, std::uint64_t total, const VerifyOptions& opt, Body body) {
  Report rep;
  rep.name = name;
  rep.total = total;
  std::uint64_t limit = (opt.budget > 0 && opt.budget < total) ? opt.budget : total;
  rep.complete = limit == total;
  unsigned nt = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(std::max<std::uint64_t>(1, limit))));
  std::vector<Report> parts(nt);
  std::vector<std::exception_ptr> errors(nt);
  auto run = [&](unsigned t) {
    try {
      std::uint64_t lo = limit * t / nt, hi = limit * (t + 1) / nt;
      for (std::uint64_t i = lo; i < hi; ++i) body(i, parts[t]);
      parts[t].visited = hi - lo;
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (nt == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& p : parts) {
    rep.visited += p.visited;
    rep.violations.insert(rep.violations.end(), p.violations.begin(), p.violations.end());
  }
  return rep;
}

inline void decode(std::uint64_t i, int s, int* out, int k) {
  for (int j = k - 1; j >= 0; --j) {
    out[j] = static_cast<int>(i % static_cast<std::uint64_t>(s));
    i /= static_cast<std::uint64_t>(s);
  }
}

inline std::uint64_t power(int s, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(s);
  return r;
}

}  // namespace detail

// Both re-association paths ((ab)c)d -> a(b(cd)) agree as matrices for every 4-tuple and target.
inline Report verify_pentagon(const CrossedCat& cat, const VerifyOptions& opt = {}) {
  const int s = cat.size();
  return detail::sweep("pentagon", detail::power(s, 4), opt, [&](std::uint64_t i, Report& rep) {
    int t[4];
    detail::decode(i, s, t, 4);
    const int a = t[0], b = t[1], c = t[2], d = t[3];
    std::vector<int> targets;
    for (int f : cat.fusion(a, b))
      for (int g : cat.fusion(f, c))
        for (int e : cat.fusion(g, d)) targets.push_back(e);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int e : targets) {
      for (int f : cat.fusion(a, b))
        for (int g : cat.fusion(f, c)) {
          if (!cat.has(g, d, e)) continue;
          for (int l : cat.fusion(c, d))
            for (int k : cat.fusion(b, l)) {
              if (!cat.has(a, k, e)) continue;
              std::vector<ScaledScalar> lhs, rhs;
              const ScaledScalar* x1 = cat.find_f(f, c, d, e, g, l);
              const ScaledScalar* x2 = cat.find_f(a, b, l, e, f, k);
              if (x1 && x2) lhs.push_back(*x1 * *x2);
              for (int h : cat.fusion(b, c)) {
                if (!cat.has(a, h, g) || !cat.has(h, d, k)) continue;
                const ScaledScalar* y1 = cat.find_f(a, b, c, g, f, h);
                const ScaledScalar* y2 = cat.find_f(a, h, d, e, g, k);
                const ScaledScalar* y3 = cat.find_f(b, c, d, k, h, l);
                if (y1 && y2 && y3) rhs.push_back(*y1 * *y2 * *y3);
              }
              if (!equal_sums(lhs, rhs)) rep.add("pentagon", {a, b, c, d, e, f, g, l, k});
            }
        }
    }
  });
}

namespace detail {

inline ScaledScalar tau_or_one(const CrossedCat& cat, int h, int x, int y, int z) { return h ? cat.tau_at(x, y, z) : ScaledScalar::one(); }

}  // namespace detail

// Action coherence, action/braiding compatibility and both crossed hexagons.
inline Report verify_crossed_braiding(const CrossedCat& cat, const VerifyOptions& opt = {}) {
  const int s = cat.size();
  Report out;
  out.name = "crossed_braiding";

  Report unit = detail::sweep("unit", static_cast<std::uint64_t>(s), opt, [&](std::uint64_t i, Report& rep) {
    const int x = static_cast<int>(i);
    for (int y = 0; y < s; ++y) {
      int zs[3][3] = {{0, x, y}, {x, 0, y}, {x, y, 0}};
      for (auto& abc : zs)
        for (int d = 0; d < s; ++d)
          for (int e : cat.left_channels(abc[0], abc[1], abc[2], d))
            for (int f : cat.right_channels(abc[0], abc[1], abc[2], d))
              if (!cat.f_at(abc[0], abc[1], abc[2], d, e, f).is_one()) rep.add("unit_associator", {abc[0], abc[1], abc[2], d, e, f});
    }
    if (!cat.r_at(0, x, x).is_one() || !cat.r_at(x, 0, x).is_one()) rep.add("unit_braiding", {x});
    if (!cat.tau_at(0, x, x).is_one() || !cat.tau_at(x, 0, x).is_one()) rep.add("unit_tensor_structure", {x});
    if (x == 0 && !cat.t2[0].is_one()) rep.add("unit_composition", {0});
  });
  out.merge(unit);

  Report action = detail::sweep("action_associator", detail::power(s, 3), opt, [&](std::uint64_t i, Report& rep) {
    int t[3];
    detail::decode(i, s, t, 3);
    const int a = t[0], b = t[1], c = t[2];
    const auto& g = cat.act;
    for (int e : cat.fusion(a, b))
      for (int d : cat.fusion(e, c))
        for (int f : cat.right_channels(a, b, c, d)) {
          ScaledScalar lhs = cat.tau_at(a, b, e) * cat.tau_at(e, c, d) * cat.f_at(g[a], g[b], g[c], g[d], g[e], g[f]);
          ScaledScalar rhs = cat.f_at(a, b, c, d, e, f) * cat.tau_at(b, c, f) * cat.tau_at(a, f, d);
          if (!(lhs == rhs)) rep.add("action_associator", {a, b, c, d, e, f});
        }
  });
  out.merge(action);

  Report pairs = detail::sweep("action_pairs", detail::power(s, 2), opt, [&](std::uint64_t i, Report& rep) {
    int t[2];
    detail::decode(i, s, t, 2);
    const int x = t[0], y = t[1];
    const auto& g = cat.act;
    if (y == 0 && !(cat.t2[g[x]] == cat.t2[x])) rep.add("composition_equivariance", {x});
    for (int z : cat.fusion(x, y)) {
      ScaledScalar lhs = cat.t2[x] * cat.t2[y];
      ScaledScalar rhs = cat.tau_at(x, y, z) * cat.tau_at(g[x], g[y], g[z]) * cat.t2[z];
      if (!(lhs == rhs)) rep.add("composition_monoidal", {x, y, z});
      const int h = cat.grade[x];
      const int hy = cat.act_by(h, y);
      ScaledScalar l2 = cat.tau_at(x, y, z) * cat.r_at(g[x], g[y], g[z]);
      ScaledScalar r2 = cat.r_at(x, y, z) * cat.tau_at(hy, x, z);
      if (!(l2 == r2)) rep.add("action_braiding", {x, y, z});
    }
  });
  out.merge(pairs);

  Report hex1 = detail::sweep("crossed_hexagon_left", detail::power(s, 3), opt, [&](std::uint64_t i, Report& rep) {
    int t[3];
    detail::decode(i, s, t, 3);
    const int x = t[0], y = t[1], z = t[2];
    const int h = cat.grade[x];
    const int gy = cat.act_by(h, y), gz = cat.act_by(h, z);
    std::vector<int> targets;
    for (int u : cat.fusion(x, y))
      for (int w : cat.fusion(u, z)) targets.push_back(w);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int w : targets)
      for (int u : cat.left_channels(x, y, z, w))
        for (int k : cat.fusion(x, z)) {
          if (!cat.has(gy, k, w)) continue;
          std::vector<ScaledScalar> lhs, rhs;
          for (int f : cat.right_channels(x, y, z, w)) {
            const int gf = cat.act_by(h, f);
            const ScaledScalar* last = cat.find_f(gy, gz, x, w, gf, k);
            if (!last) continue;
            lhs.push_back(cat.f_at(x, y, z, w, u, f) * cat.r_at(x, f, w) * detail::tau_or_one(cat, h, y, z, f) * *last);
          }
          const ScaledScalar* mid = cat.find_f(gy, x, z, w, u, k);
          if (mid) rhs.push_back(cat.r_at(x, y, u) * *mid * cat.r_at(x, z, k));
          if (!equal_sums(lhs, rhs)) rep.add("crossed_hexagon_left", {x, y, z, w, u, k});
        }
  });
  out.merge(hex1);

  Report hex2 = detail::sweep("crossed_hexagon_right", detail::power(s, 3), opt, [&](std::uint64_t i, Report& rep) {
    int t[3];
    detail::decode(i, s, t, 3);
    const int x = t[0], y = t[1], z = t[2];
    const int hx = cat.grade[x], hy = cat.grade[y];
    const int z2 = cat.act_by((hx + hy) % 2, z);
    const int hz = cat.act_by(hy, z);
    const int ghz = cat.act_by(hx, hz);
    const ScaledScalar corr = (hx && hy) ? cat.t2[z] : ScaledScalar::one();
    std::vector<int> targets;
    for (int u : cat.fusion(x, y))
      for (int w : cat.fusion(u, z)) targets.push_back(w);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int w : targets)
      for (int u : cat.left_channels(x, y, z, w))
        for (int e : cat.fusion(ghz, x)) {
          if (!cat.has(e, y, w)) continue;
          std::vector<ScaledScalar> lhs, rhs;
          if (const ScaledScalar* gi = cat.find_finv(z2, x, y, w, u, e)) lhs.push_back(cat.r_at(u, z, w) * corr * *gi);
          for (int f : cat.right_channels(x, y, z, w)) {
            const ScaledScalar* gi = cat.find_finv(x, hz, y, w, f, e);
            if (!gi || !cat.has(x, hz, e)) continue;
            rhs.push_back(cat.f_at(x, y, z, w, u, f) * cat.r_at(y, z, f) * *gi * cat.r_at(x, hz, e));
          }
          if (!equal_sums(lhs, rhs)) rep.add("crossed_hexagon_right", {x, y, z, w, u, e});
        }
  });
  out.merge(hex2);

  for (const auto& blk : cat.inverse_issues) out.add("inverse_associator", std::vector<std::int64_t>(blk.begin(), blk.end()));
  return out;
}

inline Report verify(const CrossedCat& cat, const VerifyOptions& opt = {}) {
  Report r = verify_pentagon(cat, opt);
  r.merge(verify_crossed_braiding(cat, opt));
  r.name = "crossed_category";
  return r;
}

struct QuantumDims {
  std::vector<ScaledScalar> dims;
  bool pseudo_unitary = true;
};

// dim(x) = theta_x R(x,x*;0) tau(x,x*;0)^grade / F^{x,x*,x}_x[0,0].
inline QuantumDims quantum_dims(const CrossedCat& cat) {
  QuantumDims q;
  for (int x = 0; x < cat.size(); ++x) {
    int y = cat.dual(x);
    ScaledScalar d = cat.f_at(x, y, x, x, 0, 0).inv() * cat.theta[x] * cat.r_at(x, y, 0);
    if (cat.twisted(x)) d = d * cat.tau_at(x, y, 0);
    q.dims.push_back(d);
    if (!d.r.is_one()) q.pseudo_unitary = false;
  }
  return q;
}

// Frobenius-Perron dimension squared: 1 for invertible simples, |x (x) x*| otherwise.
inline Rat fp_dim_sq(const CrossedCat& cat, int x) { return Rat(static_cast<std::int64_t>(cat.fusion(x, cat.dual(x)).size())); }

// Twist of the associator by a normalized 3-cocycle on Z/2 evaluated on grades, with the
// action constraints corrected by the twisting maps.
inline CrossedCat twist_by_h3(const CrossedCat& cat, const Cochain& omega3) {
  if (omega3.group() != AbGroup({2}) || omega3.arity() != 3) throw Error(ErrorKind::InvalidInput, "twist needs a 3-cochain on Z2");
  TwistingMaps tm = twisting_maps(omega3);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (!omega3(0, a, b).is_one() || !omega3(a, 0, b).is_one() || !omega3(a, b, 0).is_one())
        throw Error(ErrorKind::NotCocycle, "twisting 3-cocycle must be normalized");
  CrossedCat out = cat;
  out.kind = cat.kind + "+h3";
  const int s = cat.size();
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      for (int c = 0; c < s; ++c) {
        Phase w = omega3(cat.grade[a], cat.grade[b], cat.grade[c]);
        if (w.is_one()) continue;
        for (int e : cat.fusion(a, b))
          for (int d : cat.fusion(e, c))
            for (int f : cat.right_channels(a, b, c, d)) out.set_f(a, b, c, d, e, f, cat.f_at(a, b, c, d, e, f) * w);
      }
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      for (int z : cat.fusion(x, y)) out.set_tau(x, y, z, cat.tau_at(x, y, z) * tm.mu(1, cat.grade[x], cat.grade[y]));
  for (int x = 0; x < s; ++x) out.t2[x] = cat.t2[x] * tm.gamma(1, 1, cat.grade[x]);
  out.finalize();
  return out;
}

inline Cochain nontrivial_z2_cocycle() {
  return Cochain::build(AbGroup({2}), 3, [](const std::int64_t* i) { return (i[0] && i[1] && i[2]) ? Phase::of(1, 2) : Phase(); });
}

}  // namespace zcross
