#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "zcross/intmat.hpp"
#include "zcross/scalar.hpp"

namespace zcross {

using Elem = std::vector<std::int64_t>;

// Finite abelian group Z/n_1 x ... x Z/n_k with n_1 | n_2 | ... | n_k.
// Elements are indexed in mixed radix with the first coordinate most significant,
// so index order coincides with lexicographic order of canonical coordinates.
class AbGroup {
 public:
  AbGroup() = default;
  explicit AbGroup(std::vector<std::int64_t> factors) : n_(std::move(factors)) {
    for (std::size_t i = 0; i < n_.size(); ++i) {
      if (n_[i] < 1) throw Error(ErrorKind::InvalidInput, "invariant factors must be >= 1");
      if (i > 0 && n_[i] % n_[i - 1] != 0) throw Error(ErrorKind::InvalidInput, "invariant factors must form a divisibility chain");
    }
    order_ = 1;
    for (auto n : n_) order_ = checked_mul(order_, n);
  }

  const std::vector<std::int64_t>& factors() const { return n_; }
  std::size_t rank() const { return n_.size(); }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return n_.empty() ? 1 : n_.back(); }

  Elem zero() const { return Elem(n_.size(), 0); }
  Elem gen(std::size_t i) const {
    Elem e = zero();
    e[i] = 1 % n_[i];
    return e;
  }

  Elem reduce(Elem x) const {
    if (x.size() != n_.size()) throw Error(ErrorKind::InvalidInput, "element has wrong number of coordinates");
    for (std::size_t i = 0; i < n_.size(); ++i) x[i] = mod(x[i], n_[i]);
    return x;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i) r[i] = mod(a[i] + b[i], n_[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i) r[i] = mod(-a[i], n_[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem scale(const Elem& a, std::int64_t k) const {
    Elem r(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i) r[i] = mod(checked_mul(mod(k, n_[i]), a[i]), n_[i]);
    return r;
  }

  std::int64_t index(const Elem& a) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < n_.size(); ++i) idx = idx * n_[i] + mod(a[i], n_[i]);
    return idx;
  }
  Elem elem(std::int64_t idx) const {
    Elem e(n_.size());
    for (std::size_t i = n_.size(); i-- > 0;) {
      e[i] = idx % n_[i];
      idx /= n_[i];
    }
    return e;
  }

  // Flat addition and negation tables over element indices.
  std::vector<std::int32_t> add_table() const {
    std::vector<std::int32_t> t(static_cast<std::size_t>(order_ * order_));
    for (std::int64_t a = 0; a < order_; ++a) {
      Elem ea = elem(a);
      for (std::int64_t b = 0; b < order_; ++b) t[static_cast<std::size_t>(a * order_ + b)] = static_cast<std::int32_t>(index(add(ea, elem(b))));
    }
    return t;
  }
  std::vector<std::int32_t> neg_table() const {
    std::vector<std::int32_t> t(static_cast<std::size_t>(order_));
    for (std::int64_t a = 0; a < order_; ++a) t[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(index(neg(elem(a))));
    return t;
  }

  std::int64_t elem_order(const Elem& a) const {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < n_.size(); ++i) o = lcm64(o, n_[i] / std::gcd(n_[i], a[i]));
    return o;
  }

  bool operator==(const AbGroup& o) const { return n_ == o.n_; }
  bool operator!=(const AbGroup& o) const { return !(*this == o); }

  std::string str() const {
    if (n_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < n_.size(); ++i) s += (i ? "x" : "") + std::string("Z") + std::to_string(n_[i]);
    return s;
  }

 private:
  std::vector<std::int64_t> n_;
  std::int64_t order_ = 1;
};

inline std::string elem_str(const Elem& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup trivial(const AbGroup& g) { return generated(g, {}); }

  static Subgroup generated(const AbGroup& g, const std::vector<Elem>& gens) {
    Subgroup h;
    h.parent_ = g;
    for (const auto& x : gens) h.gens_.push_back(g.reduce(x));
    h.member_.assign(static_cast<std::size_t>(g.order()), 0);
    std::deque<Elem> queue{g.zero()};
    h.member_[static_cast<std::size_t>(g.index(g.zero()))] = 1;
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (const auto& s : h.gens_) {
        Elem y = g.add(x, s);
        auto iy = static_cast<std::size_t>(g.index(y));
        if (!h.member_[iy]) {
          h.member_[iy] = 1;
          queue.push_back(y);
        }
      }
    }
    h.collect();
    return h;
  }

  // Validates closure of an explicit element list.
  static Subgroup from_elements(const AbGroup& g, const std::vector<Elem>& elems) {
    Subgroup h;
    h.parent_ = g;
    h.member_.assign(static_cast<std::size_t>(g.order()), 0);
    for (const auto& x : elems) h.member_[static_cast<std::size_t>(g.index(g.reduce(x)))] = 1;
    if (!h.member_[static_cast<std::size_t>(g.index(g.zero()))]) throw Error(ErrorKind::NotSubgroup, "element set does not contain 0");
    h.collect();
    for (auto a : h.elements_)
      for (auto b : h.elements_) {
        Elem s = g.add(g.elem(a), g.elem(b));
        if (!h.contains(g.index(s)))
          throw Error(ErrorKind::NotSubgroup, "not closed: " + elem_str(g.elem(a)) + " + " + elem_str(g.elem(b)) + " = " + elem_str(s));
      }
    for (auto a : h.elements_)
      if (a != 0) h.gens_.push_back(g.elem(a));
    h.minimize_gens();
    return h;
  }

  const AbGroup& parent() const { return parent_; }
  const std::vector<Elem>& generators() const { return gens_; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
  bool contains(std::int64_t idx) const { return member_[static_cast<std::size_t>(idx)] != 0; }
  bool contains(const Elem& x) const { return contains(parent_.index(parent_.reduce(x))); }
  const std::vector<char>& membership() const { return member_; }

  bool operator==(const Subgroup& o) const { return parent_ == o.parent_ && member_ == o.member_; }

 private:
  AbGroup parent_;
  std::vector<Elem> gens_;
  std::vector<std::int64_t> elements_;
  std::vector<char> member_;

  void collect() {
    elements_.clear();
    for (std::size_t i = 0; i < member_.size(); ++i)
      if (member_[i]) elements_.push_back(static_cast<std::int64_t>(i));
  }

  // Greedy generating set in enumeration order.
  void minimize_gens() {
    std::vector<Elem> kept;
    std::int64_t reached = 1;
    for (const auto& x : gens_) {
      if (reached == size()) break;
      auto trial = kept;
      trial.push_back(x);
      auto h = generated(parent_, trial);
      if (h.size() > reached) {
        kept = trial;
        reached = h.size();
      }
    }
    gens_ = kept;
  }
};

// <gens>/H in invariant-factor form with a section of minimal representatives.
struct Presentation {
  AbGroup group;
  std::vector<std::int64_t> section;     // quotient index -> parent index
  std::vector<std::int64_t> projection;  // parent index -> quotient index, or -1 outside <gens>
};

inline Presentation present(const AbGroup& g, const std::vector<Elem>& gens, const Subgroup& h) {
  const std::size_t k = g.rank(), r = gens.size();
  const std::vector<Elem>& hgens = h.generators();
  const std::size_t s = hgens.size();
  // Relations c with sum c_j gens_j in H: kernel of [gens | -diag(n) | -hgens].
  IntMat a(k, IntVec(r + k + s, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = gens[j][i];
    a[i][r + i] = -g.factors()[i];
    for (std::size_t j = 0; j < s; ++j) a[i][r + k + j] = -hgens[j][i];
  }
  Presentation p;
  p.projection.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::int64_t> d;
  IntMat u;
  if (r > 0) {
    IntMat lam(r);
    for (const auto& v : kernel_basis(a, r + k + s))
      for (std::size_t j = 0; j < r; ++j) lam[j].push_back(v[j]);
    if (cols(lam) == 0)
      for (auto& row : lam) row.push_back(0);
    SmithForm sf = smith(lam);
    u = sf.U;
    for (std::size_t i = 0; i < r; ++i) d.push_back(i < sf.D.size() && i < cols(sf.D) ? sf.D[i][i] : 0);
    for (auto x : d)
      if (x == 0) throw Error(ErrorKind::InvalidInput, "relation lattice has infinite quotient");
  }
  std::vector<std::int64_t> qf;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 1) {
      qf.push_back(d[i]);
      keep.push_back(i);
    }
  p.group = AbGroup(qf);
  // Breadth-first coefficient vectors c with sum c_j gens_j = x.
  std::vector<IntVec> coeff(static_cast<std::size_t>(g.order()));
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::deque<std::int64_t> queue{g.index(g.zero())};
  seen[static_cast<std::size_t>(queue.front())] = 1;
  coeff[static_cast<std::size_t>(queue.front())] = IntVec(r, 0);
  while (!queue.empty()) {
    std::int64_t x = queue.front();
    queue.pop_front();
    Elem ex = g.elem(x);
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t y = g.index(g.add(ex, g.reduce(gens[j])));
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      coeff[static_cast<std::size_t>(y)] = coeff[static_cast<std::size_t>(x)];
      coeff[static_cast<std::size_t>(y)][j] += 1;
      queue.push_back(y);
    }
  }
  p.section.assign(static_cast<std::size_t>(p.group.order()), -1);
  for (std::int64_t x = 0; x < g.order(); ++x) {
    if (!seen[static_cast<std::size_t>(x)]) continue;
    Elem q(keep.size());
    if (r > 0) {
      IntVec uc = mat_vec(u, coeff[static_cast<std::size_t>(x)]);
      for (std::size_t i = 0; i < keep.size(); ++i) q[i] = mod(uc[keep[i]], d[keep[i]]);
    }
    std::int64_t qi = p.group.index(q);
    p.projection[static_cast<std::size_t>(x)] = qi;
    if (p.section[static_cast<std::size_t>(qi)] < 0) p.section[static_cast<std::size_t>(qi)] = x;
  }
  return p;
}

inline std::vector<Elem> standard_gens(const AbGroup& g) {
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.gen(i));
  return gens;
}

inline Presentation quotient(const AbGroup& g, const Subgroup& h) {
  if (h.parent() != g) throw Error(ErrorKind::NotSubgroup, "subgroup belongs to a different group");
  return present(g, standard_gens(g), h);
}

// Gamma / 2 Gamma = (Z/2)^s, s = number of even invariant factors; projection x_i mod 2.
inline Presentation mod2_quotient(const AbGroup& g) {
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (g.factors()[i] % 2 == 0) even.push_back(i);
  Presentation p;
  p.group = AbGroup(std::vector<std::int64_t>(even.size(), 2));
  p.projection.resize(static_cast<std::size_t>(g.order()));
  p.section.assign(static_cast<std::size_t>(p.group.order()), -1);
  for (std::int64_t x = 0; x < g.order(); ++x) {
    Elem e = g.elem(x), q(even.size());
    for (std::size_t i = 0; i < even.size(); ++i) q[i] = e[even[i]] % 2;
    std::int64_t qi = p.group.index(q);
    p.projection[static_cast<std::size_t>(x)] = qi;
    if (p.section[static_cast<std::size_t>(qi)] < 0) p.section[static_cast<std::size_t>(qi)] = x;
  }
  return p;
}

// chi_k(x) = e(sum_i k_i x_i / n_i).
struct Character {
  Elem dual;
  std::vector<Phase> values;  // indexed by element index
};

inline Phase character_value(const AbGroup& g, const Elem& k, const Elem& x) {
  Rat s(0);
  for (std::size_t i = 0; i < g.rank(); ++i) s += Rat(k[i] * x[i], g.factors()[i]);
  return Phase(s);
}

inline std::vector<Character> characters(const AbGroup& g) {
  std::vector<Character> out;
  for (std::int64_t k = 0; k < g.order(); ++k) {
    Character c;
    c.dual = g.elem(k);
    for (std::int64_t x = 0; x < g.order(); ++x) c.values.push_back(character_value(g, c.dual, g.elem(x)));
    out.push_back(std::move(c));
  }
  return out;
}

// Every subgroup, ordered by size then membership pattern.
inline std::vector<Subgroup> all_subgroups(const AbGroup& g) {
  std::set<std::vector<char>> seen;
  std::vector<Subgroup> out;
  std::deque<Subgroup> queue{Subgroup::trivial(g)};
  seen.insert(queue.front().membership());
  while (!queue.empty()) {
    Subgroup h = queue.front();
    queue.pop_front();
    out.push_back(h);
    for (std::int64_t x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      auto gens = h.generators();
      gens.push_back(g.elem(x));
      Subgroup k = Subgroup::generated(g, gens);
      if (seen.insert(k.membership()).second) queue.push_back(k);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.membership() > b.membership();
  });
  return out;
}

}  // namespace zcross
