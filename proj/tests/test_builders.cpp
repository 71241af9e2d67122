#include <doctest.h>

#include <cmath>
#include <complex>

#include "fixtures.hpp"
#include "zcross/builders.hpp"

using namespace zcross;
using fixtures::cyclic;
using fixtures::kind_of;

TEST_CASE("TY data over Z3") {
  CrossedCat plus = fixtures::ty(cyclic(3, 1), 1);
  CHECK(plus.size() == 4);
  CHECK(plus.labels[3] == "X");
  CHECK(plus.alpha.r == Phase::of(1, 8));
  CHECK(plus.beta.r == Phase::of(-1, 8));
  CHECK(plus.theta[3] == plus.beta.r);
  CHECK(ty_alpha_sq(odd_sqrt(cyclic(3, 1)), 1) == Phase::of(1, 4));
  CHECK(plus.f_at(3, 3, 3, 3, 0, 0) == ScaledScalar(Rat(1, 3), Phase()));
  CHECK(plus.r_at(3, 3, 0).r == plus.alpha.r);
  CHECK(plus.act == std::vector<int>{0, 2, 1, 3});

  CrossedCat minus = fixtures::ty(cyclic(3, 1), -1);
  CHECK(ty_alpha_sq(odd_sqrt(cyclic(3, 1)), -1) == Phase::of(3, 4));
  CHECK(minus.alpha.r == Phase::of(3, 8));
  CHECK(minus.beta.r == Phase::of(1, 8));
  CHECK(minus.f_at(3, 3, 3, 3, 1, 2) == ScaledScalar(Rat(1, 3), Phase::of(1, 2)) * plus.f_at(3, 3, 3, 3, 1, 2).r);

  CrossedCat neg = fixtures::ty(cyclic(3, 1), 1, true);
  CHECK(neg.beta.r == Phase::of(3, 8));
}

TEST_CASE("TY alpha squared equals a Gauss sum") {
  for (std::int64_t n : {3, 5, 7, 9, 11, 15})
    for (int eps : {1, -1}) {
      QuadForm q = odd_sqrt(cyclic(n, 1));
      std::complex<double> s = 0;
      for (const auto& v : q.table()) s += v.inv().value();
      s /= std::sqrt(static_cast<double>(n));
      s *= static_cast<double>(eps);
      CHECK(std::abs(ty_alpha_sq(q, eps).value() - s) < 1e-9);
    }
}

TEST_CASE("TY input validation") {
  CHECK(kind_of([] { fixtures::ty(QuadForm(AbGroup({2}), {Phase::of(1, 4)}, {}), 1); }) == ErrorKind::EvenOrder);
  CHECK(kind_of([] { fixtures::ty(cyclic(3, 1), 0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("crossed extensions of strongly even lattices") {
  for (IntMat g : {IntMat{{2}}, IntMat{{2, 0}, {0, 2}}, IntMat{{2, 0}, {0, 4}}})
    for (int eps : {1, -1}) {
      Lattice l(g);
      GLMResult r = build_glm_full(l, eps);
      CHECK(r.alpha_sq == r.alpha_sq_expected);
      CHECK(r.cat.untwisted_count() == l.det());
      CHECK(r.cat.size() == l.det() + (1 << l.rank()));
      CHECK(r.cat.theta.back() == Phase::sign(eps) / r.cat.alpha.r);
    }
  GLMResult a1 = build_glm_full(Lattice(IntMat{{2}}), 1);
  CHECK(a1.alpha_sq == Phase::of(-1, 8));
  CHECK(a1.cat.alpha.r.pow(2) == a1.alpha_sq);
  CHECK(kind_of([] { build_glm(Lattice(IntMat{{2, -1}, {-1, 2}}), 1); }) == ErrorKind::NotStronglyEven);
}

TEST_CASE("sign from the geometry of the involution") {
  CHECK(epsilon_from_geometry(0, 3) == -1);
  CHECK(epsilon_from_geometry(0, 1) == 1);
  CHECK(epsilon_from_geometry(4, 1) == -1);
  CHECK(epsilon_from_geometry(8, 7) == 1);
  CHECK(epsilon_from_geometry(4, 5) == 1);
  CHECK(kind_of([] { epsilon_from_geometry(2, 3); }) == ErrorKind::BadD0);
  CHECK(kind_of([] { epsilon_from_geometry(0, 4); }) == ErrorKind::NotOdd);
}

TEST_CASE("twist consistency against the anti-invariant rank") {
  EigenSplit s = eigen_split(Lattice(IntMat{{2, -1}, {-1, 2}}), {{-1, 0}, {0, -1}});
  int eps = epsilon_from_geometry(s.d0, 3);
  CHECK(twist_consistency(fixtures::ty(cyclic(3, 1), eps), s.d1).ok());
  Report flipped = twist_consistency(fixtures::ty(cyclic(3, 1), -eps), s.d1);
  CHECK_FALSE(flipped.ok());
  CHECK(flipped.violations.size() == 1);

  CHECK(twist_consistency(build_glm(Lattice(IntMat{{2}}), 1), 1).ok());
  CHECK_FALSE(twist_consistency(build_glm(Lattice(IntMat{{2}}), -1), 1).ok());
}
