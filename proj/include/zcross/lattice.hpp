#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zcross/abgroup.hpp"
#include "zcross/intmat.hpp"
#include "zcross/qform.hpp"

namespace zcross {

// Even positive-definite lattice given by its Gram matrix in a fixed basis.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(IntMat gram) : gram_(std::move(gram)) {
    const std::size_t d = gram_.size();
    for (const auto& row : gram_)
      if (row.size() != d) throw Error(ErrorKind::InvalidInput, "Gram matrix must be square");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (gram_[i][j] != gram_[j][i]) throw Error(ErrorKind::InvalidInput, "Gram matrix must be symmetric");
    for (std::size_t i = 0; i < d; ++i)
      if (gram_[i][i] % 2 != 0) throw Error(ErrorKind::NotEven, "diagonal entry " + std::to_string(gram_[i][i]) + " is odd");
    for (std::size_t k = 1; k <= d; ++k) {
      RatMat minor(k, RatVec(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = gram_[i][j];
      if (determinant(minor).numerator() <= 0) throw Error(ErrorKind::NotPositiveDefinite, "leading minor of size " + std::to_string(k) + " is not positive");
    }
  }

  const IntMat& gram() const { return gram_; }
  std::size_t rank() const { return gram_.size(); }
  std::int64_t det() const { return gram_.empty() ? 1 : determinant(gram_); }

  std::int64_t inner(const IntVec& x, const IntVec& y) const { return dot(x, mat_vec(gram_, y)); }

  bool is_strongly_even() const {
    for (const auto& row : gram_)
      for (auto v : row)
        if (v % 2 != 0) return false;
    return true;
  }

 private:
  IntMat gram_;
};

inline bool is_strongly_even(const Lattice& l) { return l.is_strongly_even(); }

// eps(x, y) = e(sum_{i>j} G_ij x_i y_j / 2), a bimultiplicative sign on L x L.
inline Phase epsilon_bichar(const Lattice& l, const IntVec& x, const IntVec& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < i; ++j) s += mod(l.gram()[i][j], 2) * mod(x[i], 2) * mod(y[j], 2);
  return Phase::of(s, 2);
}

// L*/L with deterministic lifts: the class with normal-form coordinates c lifts to
// a_hat = sum_k c_k G^{-1} U^{-1} e_k, where U G V = D is the Smith form.
class DiscPipeline {
 public:
  DiscPipeline() = default;

  explicit DiscPipeline(const Lattice& l) : lattice_(l) {
    const std::size_t d = l.rank();
    std::vector<std::int64_t> factors;
    std::vector<std::size_t> slots;
    IntMat uinv;
    if (d > 0) {
      SmithForm s = smith(l.gram());
      u_ = s.U;
      uinv = inverse_unimodular(s.U);
      for (std::size_t k = 0; k < d; ++k)
        if (s.D[k][k] > 1) {
          factors.push_back(s.D[k][k]);
          slots.push_back(k);
        }
      ginv_ = inverse(to_rat(l.gram()));
    }
    slots_ = slots;
    AbGroup g(factors);
    const auto n = static_cast<std::size_t>(g.order());
    dual_.resize(n);
    lift_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      Elem c = g.elem(static_cast<std::int64_t>(a));
      IntVec z(d, 0);
      for (std::size_t k = 0; k < slots.size(); ++k)
        for (std::size_t i = 0; i < d; ++i) z[i] += c[k] * uinv[i][slots[k]];
      dual_[a] = z;
    }
    finish(g);
  }

  // Same lattice with every lift shifted by a lattice vector (offsets[a] for class a).
  DiscPipeline shifted(const std::vector<IntVec>& offsets) const {
    DiscPipeline p = *this;
    for (std::size_t a = 0; a < p.dual_.size(); ++a) {
      IntVec gz = mat_vec(lattice_.gram(), offsets[a]);
      for (std::size_t i = 0; i < gz.size(); ++i) p.dual_[a][i] += gz[i];
    }
    p.finish(disc_.group());
    return p;
  }

  const Lattice& lattice() const { return lattice_; }
  const DiscForm& disc() const { return disc_; }
  const AbGroup& group() const { return disc_.group(); }
  std::int64_t size() const { return disc_.group().order(); }

  // Coordinates of a_hat in the lattice basis.
  const RatVec& lift(std::int64_t a) const { return lift_[static_cast<std::size_t>(a)]; }
  // G a_hat, the integer pairing vector of a_hat against the basis.
  const IntVec& dual(std::int64_t a) const { return dual_[static_cast<std::size_t>(a)]; }
  // Class of z + G Z^d for an integer pairing vector z.
  std::int64_t class_of_dual(const IntVec& z) const {
    const AbGroup& g = disc_.group();
    IntVec uz = mat_vec(u_, z);
    Elem c(slots_.size());
    for (std::size_t k = 0; k < slots_.size(); ++k) c[k] = uz[slots_[k]];
    return g.index(g.reduce(c));
  }

  // u(a,b) = a_hat + b_hat - (a+b)_hat in L.
  const IntVec& u(std::int64_t a, std::int64_t b) const { return u_table_[static_cast<std::size_t>(a * size() + b)]; }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return add_[static_cast<std::size_t>(a * size() + b)]; }
  std::int64_t neg(std::int64_t a) const { return neg_[static_cast<std::size_t>(a)]; }

  // <a_hat, b_hat> as a rational number.
  Rat inner(std::int64_t a, std::int64_t b) const {
    Rat s(0);
    const auto& x = lift(a);
    const auto& z = dual(b);
    for (std::size_t i = 0; i < z.size(); ++i) s += x[i] * z[i];
    return s;
  }
  // <a_hat, x> for x in L; always an integer.
  std::int64_t pair(std::int64_t a, const IntVec& x) const { return dot(dual(a), x); }

 private:
  Lattice lattice_;
  DiscForm disc_;
  IntMat u_;
  RatMat ginv_;
  std::vector<std::size_t> slots_;
  std::vector<IntVec> dual_;
  std::vector<RatVec> lift_;
  std::vector<IntVec> u_table_;
  std::vector<std::int32_t> add_, neg_;

  void finish(const AbGroup& g) {
    const std::size_t d = lattice_.rank();
    const auto n = static_cast<std::size_t>(g.order());
    for (std::size_t a = 0; a < n; ++a) {
      lift_[a] = RatVec(d, Rat(0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) lift_[a][i] += ginv_[i][j] * dual_[a][j];
    }
    add_ = g.add_table();
    neg_ = g.neg_table();
    u_table_.assign(n * n, IntVec());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t c = static_cast<std::size_t>(add_[a * n + b]);
        IntVec v(d);
        for (std::size_t i = 0; i < d; ++i) {
          Rat x = lift_[a][i] + lift_[b][i] - lift_[c][i];
          if (x.denominator() != 1) throw Error(ErrorKind::InvalidInput, "lift difference is not a lattice vector");
          v[i] = x.numerator();
        }
        u_table_[a * n + b] = std::move(v);
      }
    std::vector<Phase> vals, pairs;
    std::vector<std::int64_t> gens;
    for (std::size_t k = 0; k < g.rank(); ++k) gens.push_back(g.index(g.gen(k)));
    for (std::size_t k = 0; k < gens.size(); ++k) vals.push_back(Phase(inner(gens[k], gens[k]) / 2));
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (std::size_t l = k + 1; l < gens.size(); ++l) pairs.push_back(Phase(inner(gens[k], gens[l])));
    disc_ = DiscForm(QuadForm(g, vals, pairs));
  }
};

struct EigenSplit {
  Lattice lplus, lminus;
  IntMat basis_plus, basis_minus;  // columns are basis vectors in L coordinates
  std::int64_t d0 = 0, d1 = 0;
  bool no_order_doubling = true;
  std::int64_t index = 1;  // [L : L+ (+) L-]
  std::vector<std::string> warnings;
};

inline EigenSplit eigen_split(const Lattice& l, const IntMat& g) {
  const std::size_t d = l.rank();
  if (g.size() != d || cols(g) != d) throw Error(ErrorKind::InvalidInput, "involution has wrong shape");
  if (multiply(g, g) != identity_matrix(d)) throw Error(ErrorKind::NotInvolution, "g^2 is not the identity");
  if (multiply(multiply(transpose(g), l.gram()), g) != l.gram()) throw Error(ErrorKind::NotIsometry, "g^T G g differs from G");
  EigenSplit out;
  auto eigen = [&](std::int64_t sign) {
    IntMat m = g;
    for (std::size_t i = 0; i < d; ++i) m[i][i] -= sign;
    auto ker = kernel_basis(m, d);
    for (auto& v : ker) {
      for (auto x : v)
        if (x != 0) {
          if (x < 0)
            for (auto& y : v) y = -y;
          break;
        }
    }
    IntMat basis(d, IntVec(ker.size()));
    for (std::size_t j = 0; j < ker.size(); ++j)
      for (std::size_t i = 0; i < d; ++i) basis[i][j] = ker[j][i];
    return basis;
  };
  auto sub_gram = [&](const IntMat& b) { return multiply(multiply(transpose(b), l.gram()), b); };
  if (d == 0) return out;
  out.basis_plus = eigen(1);
  out.basis_minus = eigen(-1);
  out.d0 = static_cast<std::int64_t>(cols(out.basis_plus));
  out.d1 = static_cast<std::int64_t>(cols(out.basis_minus));
  out.lplus = Lattice(out.d0 ? sub_gram(out.basis_plus) : IntMat{});
  out.lminus = Lattice(out.d1 ? sub_gram(out.basis_minus) : IntMat{});
  IntMat joined(d, IntVec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      joined[i][j] = j < static_cast<std::size_t>(out.d0) ? out.basis_plus[i][j] : out.basis_minus[i][j - static_cast<std::size_t>(out.d0)];
  std::int64_t det = determinant(joined);
  out.index = det < 0 ? -det : det;
  auto self_pair = [&](const IntVec& x) { return l.inner(x, mat_vec(g, x)); };
  for (std::size_t i = 0; i < d && out.no_order_doubling; ++i) {
    IntVec ei(d, 0);
    ei[i] = 1;
    if (mod(self_pair(ei), 2) != 0) out.no_order_doubling = false;
    for (std::size_t j = i + 1; j < d; ++j) {
      IntVec eij = ei;
      eij[j] += 1;
      if (mod(self_pair(eij), 2) != 0) out.no_order_doubling = false;
    }
  }
  DiscPipeline p(l);
  if (p.size() % 2 == 1) {
    bool minus_one = true;
    for (std::int64_t a = 0; a < p.size() && minus_one; ++a) {
      IntVec gz = mat_vec(transpose(g), p.dual(a));
      if (p.class_of_dual(gz) != p.neg(a)) minus_one = false;
    }
    if (minus_one && mod(out.d0, 4) != 0)
      out.warnings.push_back("odd discriminant with g acting as -1 but d0 = " + std::to_string(out.d0) + " is not a multiple of 4");
  }
  return out;
}

// Cartan matrix of E8 (Bourbaki labelling).
inline IntMat e8_gram() {
  IntMat g(8, IntVec(8, 0));
  for (int i = 0; i < 8; ++i) g[i][i] = 2;
  const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (auto& e : edges) g[e[0] - 1][e[1] - 1] = g[e[1] - 1][e[0] - 1] = -1;
  return g;
}

}  // namespace zcross
