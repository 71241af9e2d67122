#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "zcross/abgroup.hpp"
#include "zcross/qform.hpp"

using namespace zcross;

namespace {

QuadForm cyclic(std::int64_t n, std::int64_t num) { return QuadForm(AbGroup({n}), {Phase::of(num, n)}, {}); }
QuadForm trivial_form() { return QuadForm(AbGroup(std::vector<std::int64_t>{}), {}, {}); }

// Signature from a floating-point Gauss sum, rounded to the nearest eighth.
std::int64_t numeric_signature(const QuadForm& q) {
  std::complex<double> s = 0;
  for (const auto& v : q.table()) s += std::polar(1.0, 2 * M_PI * boost::rational_cast<double>(v.exponent()));
  double k = std::arg(s) / (2 * M_PI) * 8;
  return ((static_cast<std::int64_t>(std::llround(k)) % 8) + 8) % 8;
}

}  // namespace

TEST_CASE("bilinear form from the quadratic form") {
  QuadForm z3 = cyclic(3, 1);
  CHECK(z3.bilinear(1, 1) == Phase::of(2, 3));
  CHECK(z3.bilinear(2, 0).is_one());
  QuadForm z2(AbGroup({2}), {Phase::of(1, 4)}, {});
  CHECK(z2.bilinear(1, 1) == Phase::of(1, 2));
}

TEST_CASE("the polarisation identity holds on every pair") {
  QuadForm q(AbGroup({2, 4}), {Phase::of(1, 4), Phase::of(3, 8)}, {Phase::of(1, 2)});
  const AbGroup& g = q.group();
  for (std::int64_t a = 0; a < g.order(); ++a)
    for (std::int64_t b = 0; b < g.order(); ++b) {
      Phase ab = q.value(g.add(g.elem(a), g.elem(b)));
      CHECK(q.bilinear(a, b) == ab / (q.value(a) * q.value(b)));
    }
  for (std::int64_t a = 0; a < g.order(); ++a)
    for (std::int64_t n = 0; n < 6; ++n) CHECK(q.value(g.scale(g.elem(a), n)) == q.value(a).pow(n * n));
}

TEST_CASE("forms that are not well defined are rejected") {
  CHECK_THROWS_AS(QuadForm(AbGroup({3}), {Phase::of(1, 2)}, {}), Error);
  CHECK_THROWS_AS(QuadForm(AbGroup({2, 2}), {Phase(), Phase()}, {Phase::of(1, 4)}), Error);
  CHECK_THROWS_AS(QuadForm(AbGroup({3}), {}, {}), Error);
}

TEST_CASE("degenerate forms raise Degenerate") {
  QuadForm q(AbGroup({2, 2}), {Phase::of(1, 2), Phase::of(1, 2)}, {Phase()});
  CHECK(q.value(Elem{1, 1}).is_one());
  CHECK_FALSE(q.is_nondegenerate());
  try {
    DiscForm d(q);
    FAIL("expected Degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
}

TEST_CASE("Gauss signature") {
  CHECK(gauss_signature(DiscForm(cyclic(3, 1))) == 2);
  CHECK(gauss_signature(DiscForm(trivial_form())) == 0);
  CHECK(gauss_signature(DiscForm(QuadForm(AbGroup({2}), {Phase::of(1, 4)}, {}))) == 1);
}

TEST_CASE("exact signature agrees with a floating-point Gauss sum") {
  for (std::int64_t n : {3, 5, 7, 9, 11, 25, 27})
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      QuadForm q = cyclic(n, a);
      CHECK(gauss_signature(DiscForm(q)) == numeric_signature(q));
    }
  for (std::int64_t a : {1, 3, 5, 7}) {
    QuadForm q(AbGroup({4}), {Phase::of(a, 8)}, {});
    CHECK(gauss_signature(DiscForm(q)) == numeric_signature(q));
  }
}

TEST_CASE("Kronecker symbol at 2") {
  CHECK(kronecker2(1) == 1);
  CHECK(kronecker2(3) == -1);
  CHECK(kronecker2(7) == 1);
  CHECK(kronecker2(5) == -1);
  CHECK_THROWS_AS(kronecker2(4), Error);
}

TEST_CASE("isotropic condensation") {
  DiscForm z9(cyclic(9, 1));
  Subgroup i = Subgroup::generated(z9.group(), {{3}});
  IsotropicCondensation c = isotropic_condense(z9, i);
  CHECK(c.iperp == i);
  CHECK(c.induced.group().order() == 1);

  IsotropicCondensation same = isotropic_condense(z9, Subgroup::trivial(z9.group()));
  CHECK(same.induced.group() == z9.group());
  CHECK(same.induced.table() == z9.table());

  DiscForm hyp(QuadForm(AbGroup({2, 2}), {Phase(), Phase()}, {Phase::of(1, 2)}));
  Subgroup d = Subgroup::generated(hyp.group(), {{1, 0}});
  IsotropicCondensation h = isotropic_condense(hyp, d);
  CHECK(h.iperp == d);
  CHECK(h.induced.group().order() == 1);

  try {
    isotropic_condense(z9, Subgroup::generated(z9.group(), {{1}}));
    FAIL("expected NotIsotropic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIsotropic);
  }
}

TEST_CASE("signature is preserved by condensation along every isotropic subgroup") {
  std::vector<QuadForm> forms = {cyclic(9, 1), cyclic(25, 2), cyclic(27, 1), cyclic(49, 3), cyclic(81, 1),
                                 QuadForm(AbGroup({3, 3}), {Phase(), Phase()}, {Phase::of(1, 3)}),
                                 QuadForm(AbGroup({4, 4}), {Phase(), Phase()}, {Phase::of(1, 4)}),
                                 QuadForm(AbGroup({3, 9}), {Phase::of(1, 3), Phase::of(1, 9)}, {Phase()})};
  for (const auto& q : forms) {
    DiscForm d(q);
    std::int64_t sig = gauss_signature(d);
    int count = 0;
    for (const auto& h : all_subgroups(q.group())) {
      if (isotropy_witness(q, h)) continue;
      ++count;
      IsotropicCondensation c = isotropic_condense(d, h);
      CHECK(c.quotient.group.order() * h.size() * h.size() == q.group().order());
      CHECK(gauss_signature(c.induced) == sig);
    }
    CHECK(count >= 1);
  }
}

TEST_CASE("odd square root") {
  QuadForm q3 = odd_sqrt(DiscForm(cyclic(3, 1)));
  CHECK(q3.gen_values()[0] == Phase::of(2, 3));
  CHECK(odd_sqrt(DiscForm(trivial_form())).group().order() == 1);
  QuadForm q5 = odd_sqrt(DiscForm(cyclic(5, 1)));
  CHECK(q5.gen_values()[0] == Phase::of(3, 5));
  CHECK_THROWS_AS(odd_sqrt(DiscForm(QuadForm(AbGroup({2}), {Phase::of(1, 4)}, {}))), Error);
  DiscForm d(QuadForm(AbGroup({3, 9}), {Phase::of(1, 3), Phase::of(2, 9)}, {Phase()}));
  QuadForm q = odd_sqrt(d);
  for (std::int64_t a = 0; a < d.group().order(); ++a) {
    CHECK(q.value(a).pow(2) == d.value(a));
    for (std::int64_t b = 0; b < d.group().order(); ++b) CHECK(q.bilinear(a, b).pow(2) == d.bilinear(a, b));
  }
}

TEST_CASE("signature of the inverse square root for odd groups") {
  for (std::int64_t n = 3; n <= 99; n += 2) {
    DiscForm d(cyclic(n, 1));
    QuadForm qi = odd_sqrt(d).inverse();
    Phase lhs = Phase::of(gauss_signature(DiscForm(qi)), 8);
    Phase rhs = Phase::sign(kronecker2(n)) * Phase::of(-gauss_signature(d), 8);
    CHECK(lhs == rhs);
  }
}
