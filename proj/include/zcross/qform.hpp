#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zcross/abgroup.hpp"
#include "zcross/scalar.hpp"

namespace zcross {

// Q(sum x_i g_i) = sum x_i^2 Q(g_i) + sum_{i<j} x_i x_j B(g_i, g_j) in Q/Z.
// gen_pairs is ordered (0,1), (0,2), ..., (1,2), ...
class QuadForm {
 public:
  QuadForm() = default;
  QuadForm(AbGroup group, std::vector<Phase> gen_values, std::vector<Phase> gen_pairs)
      : group_(std::move(group)), values_(std::move(gen_values)), pairs_(std::move(gen_pairs)) {
    const std::size_t k = group_.rank();
    if (values_.size() != k) throw Error(ErrorKind::InvalidInput, "need one generator value per invariant factor");
    if (pairs_.size() != (k == 0 ? 0 : k * (k - 1) / 2)) throw Error(ErrorKind::InvalidInput, "need one pair value per generator pair");
    const auto& n = group_.factors();
    for (std::size_t i = 0; i < k; ++i) {
      Rat q = values_[i].exponent();
      if ((q * n[i] * n[i]).denominator() != 1 || (q * 2 * n[i]).denominator() != 1)
        throw Error(ErrorKind::InvalidInput, "generator value " + to_string(q) + " is not well defined modulo " + std::to_string(n[i]));
      for (std::size_t j = i + 1; j < k; ++j) {
        Rat b = pair(i, j).exponent();
        if ((b * n[i]).denominator() != 1 || (b * n[j]).denominator() != 1)
          throw Error(ErrorKind::InvalidInput, "pair value " + to_string(b) + " is not well defined");
      }
    }
    table_.reserve(static_cast<std::size_t>(group_.order()));
    for (std::int64_t a = 0; a < group_.order(); ++a) table_.push_back(eval(group_.elem(a)));
  }

  const AbGroup& group() const { return group_; }
  const std::vector<Phase>& gen_values() const { return values_; }
  const std::vector<Phase>& gen_pairs() const { return pairs_; }

  Phase pair(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    const std::size_t k = group_.rank();
    std::size_t pos = i * k - i * (i + 1) / 2 + (j - i - 1);
    return pairs_[pos];
  }

  Phase value(std::int64_t idx) const { return table_[static_cast<std::size_t>(idx)]; }
  Phase value(const Elem& a) const { return value(group_.index(group_.reduce(a))); }
  const std::vector<Phase>& table() const { return table_; }

  Phase bilinear(const Elem& a, const Elem& b) const {
    Rat s(0);
    const std::size_t k = group_.rank();
    for (std::size_t i = 0; i < k; ++i) {
      s += values_[i].exponent() * (2 * a[i] * b[i]);
      for (std::size_t j = i + 1; j < k; ++j) s += pair(i, j).exponent() * (a[i] * b[j] + a[j] * b[i]);
    }
    return Phase(s);
  }
  Phase bilinear(std::int64_t a, std::int64_t b) const { return bilinear(group_.elem(a), group_.elem(b)); }

  // Elements a != 0 with B(a, g_i) = 0 for every generator.
  std::vector<std::int64_t> radical() const {
    std::vector<std::int64_t> rad;
    for (std::int64_t a = 0; a < group_.order(); ++a) {
      Elem ea = group_.elem(a);
      bool in = true;
      for (std::size_t i = 0; i < group_.rank() && in; ++i)
        if (!bilinear(ea, group_.gen(i)).is_one()) in = false;
      if (in) rad.push_back(a);
    }
    return rad;
  }
  bool is_nondegenerate() const { return radical().size() == 1; }

  QuadForm inverse() const {
    std::vector<Phase> v, p;
    for (auto x : values_) v.push_back(x.inv());
    for (auto x : pairs_) p.push_back(x.inv());
    return QuadForm(group_, v, p);
  }

  QuadForm scaled(std::int64_t c) const {
    std::vector<Phase> v, p;
    for (auto x : values_) v.push_back(x.pow(c));
    for (auto x : pairs_) p.push_back(x.pow(c));
    return QuadForm(group_, v, p);
  }

  bool operator==(const QuadForm& o) const { return group_ == o.group_ && values_ == o.values_ && pairs_ == o.pairs_; }

 private:
  AbGroup group_;
  std::vector<Phase> values_, pairs_;
  std::vector<Phase> table_;

  Phase eval(const Elem& a) const {
    Rat s(0);
    const std::size_t k = group_.rank();
    for (std::size_t i = 0; i < k; ++i) {
      s += values_[i].exponent() * (a[i] * a[i]);
      for (std::size_t j = i + 1; j < k; ++j) s += pair(i, j).exponent() * (a[i] * a[j]);
    }
    return Phase(s);
  }
};

// A quadratic form whose bilinear form is nondegenerate.
class DiscForm : public QuadForm {
 public:
  DiscForm() = default;
  explicit DiscForm(const QuadForm& q) : QuadForm(q) {
    auto rad = radical();
    if (rad.size() > 1) throw Error(ErrorKind::Degenerate, "bilinear form has radical element " + elem_str(group().elem(rad[1])));
  }
};

inline CycSum gauss_sum(const QuadForm& q) {
  std::int64_t n = 1;
  for (const auto& v : q.table()) n = lcm64(n, v.exponent().denominator());
  CycSum s(n);
  for (const auto& v : q.table()) s += CycSum::root(v);
  return s;
}

// s with |Gamma|^{-1/2} sum_a e(Q(a)) = e(s/8).
inline std::int64_t gauss_signature(const QuadForm& q) {
  Phase p = snap_to_root(gauss_sum(q), Rat(q.group().order()), 8);
  return (p.exponent() * 8).numerator();
}

// Kronecker symbol (2/n) for odd positive n.
inline int kronecker2(std::int64_t n) {
  if (n < 1 || n % 2 == 0) throw Error(ErrorKind::NotOdd, "kronecker2 needs an odd positive integer, got " + std::to_string(n));
  std::int64_t r = n % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

struct IsotropicCondensation {
  Subgroup iperp;
  Presentation quotient;  // I^perp / I with section and projection
  DiscForm induced;
};

inline Subgroup orthogonal(const QuadForm& q, const Subgroup& h) {
  const AbGroup& g = q.group();
  std::vector<Elem> elems;
  for (std::int64_t a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (const auto& s : h.generators())
      if (!q.bilinear(g.elem(a), s).is_one()) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(g.elem(a));
  }
  return Subgroup::from_elements(g, elems);
}

inline std::optional<std::int64_t> isotropy_witness(const QuadForm& q, const Subgroup& h) {
  for (auto i : h.elements())
    if (!q.value(i).is_one()) return i;
  return std::nullopt;
}

inline IsotropicCondensation isotropic_condense(const DiscForm& d, const Subgroup& h) {
  const AbGroup& g = d.group();
  if (h.parent() != g) throw Error(ErrorKind::InvalidInput, "subgroup belongs to a different group");
  if (auto w = isotropy_witness(d, h)) throw Error(ErrorKind::NotIsotropic, "Q" + elem_str(g.elem(*w)) + " = " + d.value(*w).str());
  IsotropicCondensation out;
  out.iperp = orthogonal(d, h);
  out.quotient = present(g, out.iperp.generators(), h);
  const AbGroup& qg = out.quotient.group;
  std::vector<Phase> vals, pairs;
  auto rep = [&](std::size_t i) { return g.elem(out.quotient.section[static_cast<std::size_t>(qg.index(qg.gen(i)))]); };
  for (std::size_t i = 0; i < qg.rank(); ++i) vals.push_back(d.value(rep(i)));
  for (std::size_t i = 0; i < qg.rank(); ++i)
    for (std::size_t j = i + 1; j < qg.rank(); ++j) pairs.push_back(d.bilinear(rep(i), rep(j)));
  out.induced = DiscForm(QuadForm(qg, vals, pairs));
  return out;
}

// q = ((e+1)/2) Q with e the odd exponent; its bilinear form is B^{1/2}.
inline QuadForm odd_sqrt(const QuadForm& d) {
  if (d.group().order() % 2 == 0) throw Error(ErrorKind::EvenOrder, "odd_sqrt needs odd order, got " + std::to_string(d.group().order()));
  return d.scaled((d.group().exponent() + 1) / 2);
}

}  // namespace zcross
