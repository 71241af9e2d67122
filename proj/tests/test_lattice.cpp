#include <doctest.h>

#include "zcross/lattice.hpp"
#include "zcross/qform.hpp"

using namespace zcross;

namespace {

IntMat a2() { return {{2, -1}, {-1, 2}}; }

}  // namespace

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(Lattice(IntMat{{1}}), Error);
  CHECK_THROWS_AS(Lattice(IntMat{{2, 3}, {3, 2}}), Error);
  CHECK_THROWS_AS(Lattice(IntMat{{2, 1}, {0, 2}}), Error);
  try {
    Lattice(IntMat{{2, 3}, {3, 2}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPositiveDefinite);
  }
  try {
    Lattice(IntMat{{3}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEven);
  }
}

TEST_CASE("discriminant forms of small lattices") {
  DiscPipeline a1(Lattice(IntMat{{2}}));
  CHECK(a1.group() == AbGroup({2}));
  CHECK(a1.disc().value(1) == Phase::of(1, 4));
  CHECK(a1.lift(1) == RatVec{Rat(1, 2)});

  DiscPipeline p{Lattice(a2())};
  CHECK(p.group() == AbGroup({3}));
  CHECK(p.disc().value(1) == Phase::of(1, 3));

  DiscPipeline e8{Lattice(e8_gram())};
  CHECK(e8.size() == 1);
}

TEST_CASE("group order equals the determinant and Q is the lift norm") {
  for (IntMat g : {IntMat{{2}}, a2(), IntMat{{2, 0}, {0, 4}}, IntMat{{4, 2}, {2, 6}}, IntMat{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}}) {
    Lattice l(g);
    DiscPipeline p(l);
    CHECK(p.size() == l.det());
    RatMat gr = to_rat(g);
    for (std::int64_t a = 0; a < p.size(); ++a) {
      RatVec x = p.lift(a);
      RatVec gx = mat_vec(gr, x);
      Rat norm(0);
      for (std::size_t i = 0; i < x.size(); ++i) {
        norm += x[i] * gx[i];
        CHECK(gx[i].denominator() == 1);
      }
      CHECK(p.disc().value(a) == Phase(norm / 2));
    }
  }
}

TEST_CASE("lift defects are lattice vectors satisfying the cocycle identity") {
  DiscPipeline p(Lattice(IntMat{{2, 0}, {0, 4}}));
  const auto n = p.size();
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < 2; ++i) CHECK(Rat(p.u(a, b)[i]) == p.lift(a)[i] + p.lift(b)[i] - p.lift(p.add(a, b))[i]);
      for (std::int64_t c = 0; c < n; ++c) {
        const IntVec &x = p.u(a, b), &y = p.u(p.add(a, b), c), &z = p.u(b, c), &w = p.u(a, p.add(b, c));
        for (std::size_t i = 0; i < 2; ++i) CHECK(x[i] + y[i] == z[i] + w[i]);
      }
    }
}

TEST_CASE("Milgram: signature equals rank mod 8") {
  for (IntMat g : {IntMat{{2}}, a2(), IntMat{{2, 0}, {0, 2}}, IntMat{{2, 0}, {0, 4}}, IntMat{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, e8_gram()}) {
    DiscPipeline p{Lattice(g)};
    CHECK(gauss_signature(p.disc()) == static_cast<std::int64_t>(g.size() % 8));
  }
}

TEST_CASE("sign bicharacter and strong evenness") {
  Lattice a1(IntMat{{2}});
  CHECK(epsilon_bichar(a1, {1}, {1}).is_one());
  CHECK(a1.is_strongly_even());
  Lattice l(a2());
  CHECK(epsilon_bichar(l, {0, 1}, {1, 0}) == Phase::of(1, 2));
  CHECK(epsilon_bichar(l, {1, 0}, {0, 1}).is_one());
  CHECK_FALSE(l.is_strongly_even());
  Lattice d24(IntMat{{2, 0}, {0, 4}});
  CHECK(d24.is_strongly_even());
  for (std::int64_t x0 = -2; x0 <= 2; ++x0)
    for (std::int64_t y1 = -2; y1 <= 2; ++y1) CHECK(epsilon_bichar(d24, {x0, 1}, {1, y1}).is_one());
  // eps(x,y)/eps(y,x) = (-1)^<x,y> on A2
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b) {
      IntVec x{a, 1}, y{1, b};
      CHECK(epsilon_bichar(l, x, y) / epsilon_bichar(l, y, x) == Phase::of(l.inner(x, y), 2));
    }
}

TEST_CASE("eigenlattice split") {
  Lattice a1(IntMat{{2}});
  EigenSplit m = eigen_split(a1, {{-1}});
  CHECK(m.d0 == 0);
  CHECK(m.d1 == 1);
  CHECK(m.no_order_doubling);
  EigenSplit id = eigen_split(a1, {{1}});
  CHECK(id.d0 == 1);
  CHECK(id.d1 == 0);
  CHECK(id.no_order_doubling);

  Lattice d22(IntMat{{2, 0}, {0, 2}});
  EigenSplit sw = eigen_split(d22, {{0, 1}, {1, 0}});
  CHECK(sw.d0 == 1);
  CHECK(sw.d1 == 1);
  CHECK(sw.lplus.gram() == IntMat{{4}});
  CHECK(sw.lminus.gram() == IntMat{{4}});
  CHECK(sw.index == 2);

  try {
    eigen_split(d22, {{1, 1}, {0, 1}});
    FAIL("expected NotInvolution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvolution);
  }
  try {
    eigen_split(Lattice(IntMat{{2, 0}, {0, 4}}), {{0, 1}, {1, 0}});
    FAIL("expected NotIsometry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIsometry);
  }
}

TEST_CASE("odd discriminant with -1 warns when the fixed rank is not divisible by 4") {
  EigenSplit minus = eigen_split(Lattice(a2()), {{-1, 0}, {0, -1}});
  CHECK(minus.d0 == 0);
  CHECK(minus.warnings.empty());
  EigenSplit swap = eigen_split(Lattice(a2()), {{0, 1}, {1, 0}});
  CHECK(swap.d0 == 1);
  CHECK(swap.d1 == 1);
  CHECK(swap.warnings.size() == 1);
}
