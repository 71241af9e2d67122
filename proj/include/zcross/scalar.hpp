#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <unordered_map>
#include <vector>

#include "zcross/num.hpp"

namespace zcross {

// e(r) = exp(2 pi i r) with r kept in [0, 1).
class Phase {
 public:
  Phase() : r_(0) {}
  explicit Phase(const Rat& r) : r_(frac(r)) {}
  static Phase of(std::int64_t num, std::int64_t den) { return Phase(Rat(num, den)); }
  static Phase sign(int s) { return s < 0 ? of(1, 2) : Phase(); }

  const Rat& exponent() const { return r_; }
  bool is_one() const { return r_.numerator() == 0; }

  Phase operator*(const Phase& o) const { return Phase(r_ + o.r_); }
  Phase operator/(const Phase& o) const { return Phase(r_ - o.r_); }
  Phase& operator*=(const Phase& o) { return *this = *this * o; }
  Phase inv() const { return Phase(-r_); }
  Phase pow(std::int64_t k) const { return Phase(r_ * k); }

  bool operator==(const Phase& o) const { return r_ == o.r_; }
  bool operator!=(const Phase& o) const { return !(*this == o); }
  bool operator<(const Phase& o) const { return r_ < o.r_; }

  std::complex<double> value() const {
    double t = 2.0 * std::numbers::pi * boost::rational_cast<double>(r_);
    return {std::cos(t), std::sin(t)};
  }

  std::string str() const { return to_string(r_); }

 private:
  Rat r_;
};

inline Phase phase(const Rat& r) { return Phase(r); }

// Exponent halving on the representative in [0, 1).
inline Phase principal_sqrt(const Phase& p) { return Phase(p.exponent() / 2); }

// sqrt(m) * e(r) with m a positive rational.
struct ScaledScalar {
  Rat m{1};
  Phase r;

  ScaledScalar() = default;
  ScaledScalar(const Rat& mag_sq, const Phase& ph) : m(mag_sq), r(ph) {
    if (m.numerator() <= 0) throw Error(ErrorKind::InvalidInput, "scalar magnitude must be positive");
  }
  explicit ScaledScalar(const Phase& ph) : m(1), r(ph) {}

  static ScaledScalar one() { return ScaledScalar(); }

  ScaledScalar operator*(const ScaledScalar& o) const { return ScaledScalar(m * o.m, r * o.r); }
  ScaledScalar operator*(const Phase& p) const { return ScaledScalar(m, r * p); }
  ScaledScalar& operator*=(const ScaledScalar& o) { return *this = *this * o; }
  ScaledScalar operator/(const ScaledScalar& o) const { return *this * o.inv(); }
  ScaledScalar inv() const { return ScaledScalar(1 / m, r.inv()); }
  ScaledScalar conj() const { return ScaledScalar(m, r.inv()); }
  ScaledScalar neg() const { return *this * Phase::of(1, 2); }

  bool is_one() const { return m == Rat(1) && r.is_one(); }
  bool operator==(const ScaledScalar& o) const { return m == o.m && r == o.r; }
  bool operator!=(const ScaledScalar& o) const { return !(*this == o); }
  bool operator<(const ScaledScalar& o) const { return m != o.m ? m < o.m : r < o.r; }

  std::complex<double> value() const { return std::sqrt(boost::rational_cast<double>(m)) * r.value(); }

  std::string str() const {
    if (m == Rat(1)) return "e(" + r.str() + ")";
    return "sqrt(" + to_string(m) + ")*e(" + r.str() + ")";
  }
};

namespace detail {

using Poly = std::vector<std::int64_t>;

inline Poly exact_divide_monic(Poly num, const Poly& den) {
  std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] = checked_sub(num[i - dn + j], checked_mul(c, den[j]));
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw Error(ErrorKind::Overflow, "cyclotomic division left a remainder");
  return quot;
}

inline const Poly& cyclotomic_poly(std::int64_t n) {
  thread_local std::unordered_map<std::int64_t, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = exact_divide_monic(p, cyclotomic_poly(d));
  return cache.emplace(n, std::move(p)).first->second;
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 r = 1, x = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// n = s^2 t with t squarefree; returns {s, t}.
inline std::pair<std::int64_t, std::int64_t> square_split(std::int64_t n) {
  std::int64_t s = 1, t = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s = checked_mul(s, p);
    if (e % 2) t = checked_mul(t, p);
  }
  return {s, checked_mul(t, n)};
}

}  // namespace detail

// Exact element sum_k c_k e(k/N) / den of Q(zeta_N).
class CycSum {
 public:
  CycSum() : n_(1), c_(1, 0), den_(1) {}
  explicit CycSum(std::int64_t conductor) : n_(conductor), c_(static_cast<std::size_t>(conductor), 0), den_(1) {
    if (conductor < 1) throw Error(ErrorKind::InvalidInput, "conductor must be positive");
  }

  static CycSum from_rat(const Rat& q) {
    CycSum s;
    s.c_[0] = q.numerator();
    s.den_ = q.denominator();
    return s;
  }

  static CycSum root(const Phase& p) {
    CycSum s(p.exponent().denominator());
    s.c_[static_cast<std::size_t>(p.exponent().numerator())] = 1;
    return s;
  }

  // Exact image of sqrt(m) for positive rational m, built from quadratic Gauss sums.
  static CycSum sqrt_rational(const Rat& m) {
    if (m.numerator() <= 0) throw Error(ErrorKind::InvalidInput, "sqrt of a non-positive rational");
    std::int64_t p = m.numerator(), q = m.denominator();
    auto [s, t] = detail::square_split(checked_mul(p, q));
    CycSum r = sqrt_squarefree(t);
    return r * Rat(s, q);
  }

  static CycSum from_scaled(const ScaledScalar& x) { return sqrt_rational(x.m) * root(x.r); }

  std::int64_t conductor() const { return n_; }
  std::int64_t denominator() const { return den_; }
  const std::vector<std::int64_t>& numerators() const { return c_; }
  Rat coefficient(std::size_t k) const { return Rat(c_[k], den_); }

  CycSum lifted(std::int64_t m) const {
    if (m % n_ != 0) throw Error(ErrorKind::InvalidInput, "lift target must be a multiple of the conductor");
    CycSum r(m);
    std::int64_t step = m / n_;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[static_cast<std::size_t>(k * step)] = c_[k];
    r.den_ = den_;
    return r;
  }

  friend CycSum operator+(const CycSum& a, const CycSum& b) { return combine(a, b, 1); }
  friend CycSum operator-(const CycSum& a, const CycSum& b) { return combine(a, b, -1); }
  CycSum& operator+=(const CycSum& o) { return *this = *this + o; }
  CycSum& operator-=(const CycSum& o) { return *this = *this - o; }

  friend CycSum operator*(const CycSum& a, const CycSum& b) {
    std::int64_t n = lcm64(a.n_, b.n_);
    CycSum x = a.n_ == n ? a : a.lifted(n);
    CycSum y = b.n_ == n ? b : b.lifted(n);
    std::vector<__int128> acc(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) {
        if (y.c_[j] == 0) continue;
        acc[(i + j) % static_cast<std::size_t>(n)] += static_cast<__int128>(x.c_[i]) * y.c_[j];
      }
    }
    CycSum r(n);
    for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = narrow128(acc[k]);
    r.den_ = checked_mul(x.den_, y.den_);
    r.normalize();
    return r;
  }
  CycSum& operator*=(const CycSum& o) { return *this = *this * o; }

  friend CycSum operator*(const CycSum& a, const Rat& q) {
    CycSum r = a;
    for (auto& c : r.c_) c = checked_mul(c, q.numerator());
    r.den_ = checked_mul(r.den_, q.denominator());
    r.normalize();
    return r;
  }

  CycSum operator*(const Phase& p) const { return *this * root(p); }

  CycSum conj() const {
    CycSum r(n_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[(c_.size() - k) % c_.size()] = c_[k];
    r.den_ = den_;
    return r;
  }

  // Exact zero test by reduction modulo the N-th cyclotomic polynomial.
  bool is_zero() const {
    bool all_zero = true;
    for (auto c : c_)
      if (c != 0) all_zero = false;
    if (all_zero) return true;
    const auto& phi = detail::cyclotomic_poly(n_);
    std::size_t deg = phi.size() - 1;
    std::vector<__int128> a(c_.begin(), c_.end());
    const __int128 limit = static_cast<__int128>(1) << 120;
    for (std::size_t i = a.size(); i-- > deg;) {
      __int128 c = a[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= deg; ++j) {
        if (phi[j] == 0) continue;
        a[i - deg + j] -= c * phi[j];
        if (a[i - deg + j] > limit || a[i - deg + j] < -limit) throw Error(ErrorKind::Overflow, "cyclotomic reduction");
      }
    }
    for (std::size_t k = 0; k < deg; ++k)
      if (a[k] != 0) return false;
    return true;
  }

  friend bool operator==(const CycSum& a, const CycSum& b) { return (a - b).is_zero(); }
  friend bool operator!=(const CycSum& a, const CycSum& b) { return !(a == b); }

  std::complex<double> evaluate() const {
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_);
      s += static_cast<double>(c_[k]) * std::complex<double>(std::cos(t), std::sin(t));
    }
    return s / static_cast<double>(den_);
  }

  // Rigorous bound on |evaluate() - exact value|.
  double error_bound() const {
    double s = 0;
    for (auto c : c_) s += std::fabs(static_cast<double>(c));
    return s * std::ldexp(1.0, -50) / static_cast<double>(den_);
  }

  // Coefficients as exact rational strings, one per power of e(1/N).
  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < c_.size(); ++k) out.push_back(to_string(coefficient(k)));
    return out;
  }

 private:
  std::int64_t n_;
  std::vector<std::int64_t> c_;
  std::int64_t den_;

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : c_) c = -c;
    }
    std::int64_t g = den_;
    for (auto c : c_) g = std::gcd(g, c);
    if (g > 1) {
      den_ /= g;
      for (auto& c : c_) c /= g;
    }
  }

  static CycSum combine(const CycSum& a, const CycSum& b, std::int64_t sgn) {
    std::int64_t n = lcm64(a.n_, b.n_);
    CycSum x = a.n_ == n ? a : a.lifted(n);
    CycSum y = b.n_ == n ? b : b.lifted(n);
    std::int64_t d = lcm64(x.den_, y.den_);
    std::int64_t fx = d / x.den_, fy = checked_mul(sgn, d / y.den_);
    CycSum r(n);
    for (std::size_t k = 0; k < r.c_.size(); ++k)
      r.c_[k] = checked_add(checked_mul(x.c_[k], fx), checked_mul(y.c_[k], fy));
    r.den_ = d;
    r.normalize();
    return r;
  }

  static CycSum sqrt_prime(std::int64_t p) {
    if (p == 2) {
      CycSum s(8);
      s.c_[1] = 1;
      s.c_[7] = 1;
      return s;
    }
    CycSum g(p);
    for (std::int64_t a = 1; a < p; ++a) g.c_[static_cast<std::size_t>(a)] = detail::powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
    if (p % 4 == 1) return g;
    return g * Phase::of(3, 4);
  }

  static CycSum sqrt_squarefree(std::int64_t t) {
    thread_local std::unordered_map<std::int64_t, CycSum> cache;
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    CycSum r = from_rat(Rat(1));
    for (auto p : detail::prime_factors(t)) r = r * sqrt_prime(p);
    cache.emplace(t, r);
    return r;
  }
};

// Certified snap of s = sqrt(m) e(k/order) to its root of unity.
inline Phase snap_to_root(const CycSum& s, const Rat& expected_magnitude_sq, std::int64_t order) {
  if (expected_magnitude_sq.numerator() <= 0 || order < 1) throw Error(ErrorKind::InvalidInput, "snap_to_root needs m > 0 and order >= 1");
  double root_m = std::sqrt(boost::rational_cast<double>(expected_magnitude_sq));
  std::complex<double> w = s.evaluate() / root_m;
  double err = s.error_bound() / root_m;
  double turns = std::arg(w) / (2.0 * std::numbers::pi);
  std::int64_t k = mod(static_cast<std::int64_t>(std::llround(turns * static_cast<double>(order))), order);
  Phase cand = Phase::of(k, order);
  double residual = std::abs(w - cand.value());
  double gap = 2.0 * std::sin(std::numbers::pi / static_cast<double>(order));
  if (!(residual + err <= gap / 2))
    throw Error(ErrorKind::NoSnap, "residual " + std::to_string(residual) + " exceeds certification threshold " + std::to_string(gap / 2));
  if (s != CycSum::from_scaled(ScaledScalar(expected_magnitude_sq, cand)))
    throw Error(ErrorKind::NoSnap, "numeric snap to e(" + cand.str() + ") not confirmed exactly");
  return cand;
}

// Exact test of sum(lhs) == sum(rhs) for sums of scaled roots of unity.
inline bool equal_sums(const std::vector<ScaledScalar>& lhs, const std::vector<ScaledScalar>& rhs) {
  if (lhs.size() == 1 && rhs.size() == 1) return lhs[0] == rhs[0];
  if (lhs.empty() && rhs.empty()) return true;
  std::complex<double> diff = 0;
  double scale = 0;
  for (const auto& x : lhs) {
    diff += x.value();
    scale += std::sqrt(boost::rational_cast<double>(x.m));
  }
  for (const auto& x : rhs) {
    diff -= x.value();
    scale += std::sqrt(boost::rational_cast<double>(x.m));
  }
  if (std::abs(diff) > 1e-9 * (1.0 + scale)) return false;
  // Group by squarefree class t, where sqrt(m) = (s/q) sqrt(t).
  std::map<std::int64_t, CycSum> classes;
  auto add = [&](const ScaledScalar& x, int sgn) {
    auto [s, t] = detail::square_split(checked_mul(x.m.numerator(), x.m.denominator()));
    CycSum term = CycSum::root(x.r) * Rat(sgn * s, x.m.denominator());
    auto it = classes.find(t);
    if (it == classes.end()) classes.emplace(t, term);
    else it->second += term;
  };
  for (const auto& x : lhs) add(x, 1);
  for (const auto& x : rhs) add(x, -1);
  if (classes.size() == 1) return classes.begin()->second.is_zero();
  CycSum total;
  for (auto& [t, sum] : classes) total += sum * CycSum::sqrt_rational(Rat(t));
  return total.is_zero();
}

}  // namespace zcross
