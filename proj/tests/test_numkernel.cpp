#include <doctest.h>

#include "ratcheb/errors.hpp"
#include "ratcheb/numkernel.hpp"
#include "test_util.hpp"

using namespace ratcheb;
using testutil::rel_err;

TEST_SUITE("numkernel") {
  TEST_CASE("poly_eval examples") {
    CHECK(poly_eval(ComplexPolynomial{1.0}, {5.0, 2.0}) == cplx{1.0});
    CHECK(std::abs(poly_eval(ComplexPolynomial{0.0, 0.0, 1.0}, {1.0, 1.0}) - cplx{0.0, 2.0}) < 1e-15);
    CHECK(std::abs(poly_eval(ComplexPolynomial{1.0, 0.5}, 0.1) - 1.05) < 1e-15);
  }

  TEST_CASE("trailing coefficients are trimmed") {
    ComplexPolynomial p{1.0, 2.0, 1e-17};
    CHECK(p.degree() == 1);
    CHECK(ComplexPolynomial{0.0, 0.0}.is_zero());
    CHECK(ComplexPolynomial{0.0, 0.0}.degree() == 0);
  }

  TEST_CASE("poly_roots examples") {
    auto sorted = [](std::vector<cplx> r) {
      std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
      return r;
    };
    auto r1 = sorted(poly_roots(ComplexPolynomial{-1.0, 0.0, 1.0}));
    REQUIRE(r1.size() == 2);
    CHECK(std::abs(r1[0] + 1.0) < 1e-12);
    CHECK(std::abs(r1[1] - 1.0) < 1e-12);
    auto r2 = poly_roots(ComplexPolynomial{1.0, 1.0});
    REQUIRE(r2.size() == 1);
    CHECK(std::abs(r2[0] + 1.0) < 1e-15);
    auto r3 = sorted(poly_roots(ComplexPolynomial{2.0, -3.0, 1.0}));
    CHECK(std::abs(r3[0] - 1.0) < 1e-12);
    CHECK(std::abs(r3[1] - 2.0) < 1e-12);
  }

  TEST_CASE("poly_roots of a constant is an error") {
    try {
      poly_roots(ComplexPolynomial{3.0});
      FAIL("expected NoRoots");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NoRoots);
      CHECK(std::string(e.what()).find("no roots of a nonzero constant") != std::string::npos);
    }
  }

  TEST_CASE("roots reconstruct random polynomials") {
    for (int trial = 0; trial < 50; ++trial) {
      const int deg = 1 + trial % 8;
      std::vector<cplx> c(static_cast<size_t>(deg + 1));
      for (auto& x : c) x = {testutil::uniform(-1, 1), testutil::uniform(-1, 1)};
      const ComplexPolynomial p(c);
      const auto roots = poly_roots(p);
      REQUIRE(roots.size() == static_cast<size_t>(p.degree()));
      for (auto z : roots) {
        const double bound = 1e-8 * p.max_abs_coeff() * std::pow(1.0 + std::abs(z), p.degree());
        CHECK(std::abs(p(z)) <= bound);
      }
      const auto back = ComplexPolynomial::from_roots(roots, p.coeffs().back());
      CHECK(testutil::coeff_rel_err(back.coeffs(), p.coeffs()) <= 1e-7);
    }
  }

  TEST_CASE("rational_eval examples") {
    const RationalFunction one;
    CHECK(rational_eval(one, {3.0, -7.0}) == cplx{1.0});
    const RationalFunction r(ComplexPolynomial{1.0, 0.5}, ComplexPolynomial{1.0, -0.5}, 1, 1);
    CHECK(rational_eval(r, 0.0) == cplx{1.0});
    try {
      rational_eval(r, 2.0);
      FAIL("expected a pole");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PoleAtEvaluationPoint);
    }
  }

  TEST_CASE("normalization rules") {
    const RationalFunction r(ComplexPolynomial{2.0, 1.0}, ComplexPolynomial{4.0, -2.0}, 1, 1);
    CHECK(r.den().coeff(0) == cplx{1.0});
    CHECK(std::abs(r.num().coeff(0) - 0.5) < 1e-15);
    // den(0) = 0: largest coefficient becomes 1
    const RationalFunction s(ComplexPolynomial{1.0}, ComplexPolynomial{0.0, 4.0}, 0, 1);
    CHECK(std::abs(s.den().coeff(1) - 1.0) < 1e-15);
    CHECK_THROWS_AS(RationalFunction(ComplexPolynomial{1.0}, ComplexPolynomial{0.0}, 0, 0), Error);
    CHECK_THROWS_AS(RationalFunction(ComplexPolynomial{1.0, 1.0, 1.0}, ComplexPolynomial{1.0}, 1, 0), Error);
  }

  TEST_CASE("compute_defect examples") {
    CHECK(compute_defect(RationalFunction(ComplexPolynomial{1.0, 1.0}, ComplexPolynomial{1.0, 1.0}, 1, 1), 1e-9) == 1);
    CHECK(compute_defect(RationalFunction(ComplexPolynomial{1.0, 0.5}, ComplexPolynomial{1.0, -0.5}, 1, 1), 1e-9) == 0);
    CHECK(compute_defect(RationalFunction(ComplexPolynomial{-1.0, 0.0, 1.0}, ComplexPolynomial{-1.0, 1.0}, 2, 1), 1e-9) == 1);
  }

  TEST_CASE("defect from unused degree") {
    // 1/(1-z) in R_{1,2} is reducible to R_{0,1}.
    const RationalFunction r(ComplexPolynomial{1.0}, ComplexPolynomial{1.0, -1.0}, 1, 2);
    CHECK(r.defect() == 1);
    CHECK(r.degenerate());
  }

  TEST_CASE("evaluation is invariant under common scaling") {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<cplx> a(3), b(3);
      for (auto& x : a) x = testutil::in_disk(1.0);
      for (auto& x : b) x = testutil::in_disk(1.0);
      b[0] += 3.0;
      const cplx s = testutil::in_disk(5.0) + cplx{0.1, 0.0};
      std::vector<cplx> as = a, bs = b;
      for (auto& x : as) x *= s;
      for (auto& x : bs) x *= s;
      const RationalFunction r(ComplexPolynomial(a), ComplexPolynomial(b), 2, 2);
      const RationalFunction rs(ComplexPolynomial(as), ComplexPolynomial(bs), 2, 2);
      const cplx z = testutil::in_disk(0.5);
      CHECK(rel_err(rs(z), r(z)) <= 1e-13);
    }
  }

  TEST_CASE("zero defect means no shared root pair") {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<cplx> pr{testutil::in_disk(2.0), testutil::in_disk(2.0)};
      std::vector<cplx> qr{testutil::in_disk(2.0), testutil::in_disk(2.0)};
      const RationalFunction r(ComplexPolynomial::from_roots(pr), ComplexPolynomial::from_roots(qr), 2, 2);
      if (r.defect() != 0) continue;
      for (auto a : r.num().degree() > 0 ? poly_roots(r.num()) : std::vector<cplx>{})
        for (auto b : poly_roots(r.den())) CHECK(std::abs(a - b) > 1e-9 * std::max(1.0, std::abs(a)));
    }
  }

  TEST_CASE("taylor_at matches derivatives of (1+z/2)/(1-z/2)") {
    const RationalFunction r(ComplexPolynomial{1.0, 0.5}, ComplexPolynomial{1.0, -0.5}, 1, 1);
    const auto t = r.taylor_at(0.0, 3);
    CHECK(std::abs(t[0] - 1.0) < 1e-15);
    CHECK(std::abs(t[1] - 1.0) < 1e-15);
    CHECK(std::abs(t[2] - 0.5) < 1e-15);
    CHECK(std::abs(t[3] - 0.25) < 1e-15);
  }
}
