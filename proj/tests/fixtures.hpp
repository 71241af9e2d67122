#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zcross/builders.hpp"
#include "zcross/error.hpp"
#include "zcross/qform.hpp"

namespace fixtures {

using namespace zcross;

inline std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline AbGroup trivial_group() { return AbGroup(std::vector<std::int64_t>{}); }
inline QuadForm trivial_form() { return QuadForm(trivial_group(), {}, {}); }
inline QuadForm cyclic(std::int64_t n, std::int64_t num) { return QuadForm(AbGroup({n}), {Phase::of(num, n)}, {}); }

inline CrossedCat ty(const QuadForm& q, int eps, bool negative_ribbon = false) { return build_ty({DiscForm(q), eps, negative_ribbon}); }

// Ising-type category on Z2: sigma(1,1) = -1, R(1,X) = R(X,1) = e(1/4), R(X,X;a) = e(1/16) q(a),
// theta_X = e(-1/16), F^{XXX}_X = (1/2) chi.
inline CrossedCat ising() {
  AbGroup g({2});
  CrossedCat c("fixture", g, {"X"});
  const int x = 2;
  const ScaledScalar one;
  const Phase alpha = Phase::of(1, 16), q1 = Phase::of(3, 4);
  auto chi = [](int a, int b) { return (a && b) ? Phase::of(1, 2) : Phase(); };
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) c.set_fusion(a, b, {a ^ b});
    c.set_fusion(a, x, {x});
    c.set_fusion(x, a, {x});
    c.theta[a] = a ? Phase::of(1, 2) : Phase();
  }
  c.set_fusion(x, x, {0, 1});
  c.theta[x] = Phase::of(15, 16);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      int ab = a ^ b;
      for (int cc = 0; cc < 2; ++cc) c.set_f(a, b, cc, ab ^ cc, ab, b ^ cc, one);
      c.set_f(a, b, x, x, ab, x, one);
      c.set_f(x, a, b, x, x, ab, one);
      c.set_f(a, x, b, x, x, x, ScaledScalar(chi(a, b)));
      c.set_f(a, x, x, b, x, b ^ a, one);
      c.set_f(x, x, a, b, b ^ a, x, one);
      c.set_f(x, a, x, b, x, x, ScaledScalar(chi(a, b)));
      c.set_f(x, x, x, x, a, b, ScaledScalar(Rat(1, 2), chi(a, b)));
      c.set_r(a, b, ab, ScaledScalar(chi(a, b)));
      c.set_tau(a, b, ab, one);
    }
  for (int a = 0; a < 2; ++a) {
    Phase qa = a ? q1 : Phase();
    c.set_r(a, x, x, ScaledScalar(qa.inv()));
    c.set_r(x, a, x, ScaledScalar(qa.inv()));
    c.set_r(x, x, a, ScaledScalar(alpha * qa));
    c.set_tau(a, x, x, one);
    c.set_tau(x, a, x, one);
    c.set_tau(x, x, a, one);
  }
  c.finalize();
  return c;
}

}  // namespace fixtures
