#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "zcross/num.hpp"

namespace zcross {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline std::size_t cols(const IntMat& a) { return a.empty() ? 0 : a[0].size(); }

inline IntMat multiply(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size(), k = b.size(), m = cols(b);
  IntMat c(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      __int128 s = 0;
      for (std::size_t l = 0; l < k; ++l) s += static_cast<__int128>(a[i][l]) * b[l][j];
      c[i][j] = narrow128(s);
    }
  return c;
}

inline IntVec mat_vec(const IntMat& a, const IntVec& v) {
  IntVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    __int128 s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<__int128>(a[i][j]) * v[j];
    r[i] = narrow128(s);
  }
  return r;
}

inline IntMat transpose(const IntMat& a) {
  IntMat t(cols(a), IntVec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline std::int64_t dot(const IntVec& a, const IntVec& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return narrow128(s);
}

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntMat U, D, V;
  std::size_t rank = 0;
};

inline SmithForm smith(const IntMat& a) {
  SmithForm s;
  std::size_t m = a.size(), n = cols(a);
  s.D = a;
  s.U = identity_matrix(m);
  s.V = identity_matrix(n);
  auto& D = s.D;
  auto row_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t j = 0; j < n; ++j) D[dst][j] = checked_sub(D[dst][j], checked_mul(q, D[src][j]));
    for (std::size_t j = 0; j < m; ++j) s.U[dst][j] = checked_sub(s.U[dst][j], checked_mul(q, s.U[src][j]));
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t i = 0; i < m; ++i) D[i][dst] = checked_sub(D[i][dst], checked_mul(q, D[i][src]));
    for (std::size_t i = 0; i < n; ++i) s.V[i][dst] = checked_sub(s.V[i][dst], checked_mul(q, s.V[i][src]));
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(D[i], D[j]);
    std::swap(s.U[i], s.U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : D) std::swap(row[i], row[j]);
    for (auto& row : s.V) std::swap(row[i], row[j]);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool found_any = true;
    for (;;) {
      std::size_t pi = m, pj = n;
      std::int64_t best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D[i][j] != 0 && (best == 0 || std::llabs(D[i][j]) < best)) {
            best = std::llabs(D[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) {
        found_any = false;
        break;
      }
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        row_axpy(i, t, D[i][t] / D[t][t]);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        col_axpy(j, t, D[t][j] / D[t][t]);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_axpy(t, bad, -1);
    }
    if (!found_any) break;
    if (D[t][t] < 0) col_axpy(t, t, 2);
    ++s.rank;
  }
  return s;
}

// A Z-basis of {x in Z^n : A x = 0}.
inline std::vector<IntVec> kernel_basis(const IntMat& a, std::size_t ncols) {
  IntMat m = a;
  if (m.empty()) m.push_back(IntVec(ncols, 0));
  SmithForm s = smith(m);
  std::vector<IntVec> ker;
  for (std::size_t j = s.rank; j < ncols; ++j) {
    IntVec v(ncols);
    for (std::size_t i = 0; i < ncols; ++i) v[i] = s.V[i][j];
    ker.push_back(std::move(v));
  }
  return ker;
}

inline RatMat to_rat(const IntMat& a) {
  RatMat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (auto x : a[i]) r[i].push_back(Rat(x));
  return r;
}

// Determinant by exact rational elimination.
inline Rat determinant(const RatMat& a0) {
  RatMat a = a0;
  std::size_t n = a.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].numerator() == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].numerator() == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

inline std::int64_t determinant(const IntMat& a) {
  Rat d = determinant(to_rat(a));
  return d.numerator();
}

// Inverse over Q; the caller guarantees invertibility.
inline RatMat inverse(const RatMat& a0) {
  std::size_t n = a0.size();
  RatMat a = a0, inv(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].numerator() == 0) ++p;
    if (p == n) throw Error(ErrorKind::Degenerate, "singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rat piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].numerator() == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline IntMat inverse_unimodular(const IntMat& u) {
  RatMat r = inverse(to_rat(u));
  IntMat out(r.size(), IntVec(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[i][j].denominator() != 1) throw Error(ErrorKind::InvalidInput, "matrix is not unimodular");
      out[i][j] = r[i][j].numerator();
    }
  return out;
}

inline RatVec mat_vec(const RatMat& a, const RatVec& v) {
  RatVec r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

}  // namespace zcross
