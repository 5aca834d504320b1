#include <doctest.h>

#include "ratcheb/errors.hpp"
#include "ratcheb/newton_pade.hpp"
#include "ratcheb/pade.hpp"
#include "test_util.hpp"

using namespace ratcheb;
using testutil::coeff_rel_err;

TEST_SUITE("newton_pade") {
  TEST_CASE("interpolate examples") {
    const auto e = registry_get("exp");
    const auto r0 = interpolate(e, NodeMultiset{0.0, 0.0, 0.0}, 1, 1);
    CHECK(coeff_rel_err(r0.r.num().coeffs(), {1.0, 0.5}) < 1e-12);
    CHECK(coeff_rel_err(r0.r.den().coeffs(), {1.0, -0.5}) < 1e-12);
    CHECK(r0.hermite_valid);

    const double h = 0.1;
    const auto r1 = interpolate(e, NodeMultiset{-h, 0.0, h}, 1, 1);
    CHECK(std::abs(r1.r(-h) - std::exp(-h)) < 1e-10);
    CHECK(std::abs(r1.r(0.0) - 1.0) < 1e-10);
    CHECK(std::abs(r1.r(h) - std::exp(h)) < 1e-10);

    const auto r2 = interpolate(registry_get("geom"), NodeMultiset{0.0, 0.2}, 0, 1);
    CHECK(std::abs(r2.r(0.5) - 2.0) < 1e-12);
    CHECK(r2.linearized_residual < 1e-14);
  }

  TEST_CASE("wrong node count is rejected") {
    CHECK_THROWS_AS(interpolate(registry_get("exp"), NodeMultiset{0.0, 0.1}, 1, 1), Error);
  }

  TEST_CASE("determinant representation examples") {
    const auto e = registry_get("exp");
    const NodeMultiset zeros{0.0, 0.0, 0.0};
    const auto at0 = determinant_denominator_remainder(e, zeros, 1, 1, 0.0);
    CHECK(std::abs(at0.q_val - 1.0) < 1e-14);
    const auto near0 = determinant_denominator_remainder(e, zeros, 1, 1, 1e-4);
    CHECK(std::abs(near0.vtilde_val / near0.q_val - 1.0 / 12) < 1e-3);
    for (cplx z : {cplx{0.3}, cplx{-0.2, 0.4}}) {
      const auto poly = determinant_denominator_remainder(e, NodeMultiset{0.0, 0.1, 0.2}, 2, 0, z);
      CHECK(std::abs(poly.q_val - 1.0) < 1e-15);
    }
  }

  TEST_CASE("hermite_check examples") {
    const auto e = registry_get("exp");
    const auto conf = interpolate(e, NodeMultiset{0.0, 0.0, 0.0}, 1, 1);
    const auto rep = hermite_check(conf, e);
    CHECK(rep.passed);
    CHECK(rep.conditions == 3);
    const auto dist = interpolate(e, NodeMultiset{-0.1, 0.0, 0.1}, 1, 1);
    const auto rep2 = hermite_check(dist, e);
    CHECK(rep2.passed);
    CHECK(rep2.conditions == 3);

    const auto deg = interpolate(registry_get("geom"), NodeMultiset{0.0, 0.0, 0.0, 0.0}, 1, 2);
    CHECK(deg.degenerate);
    try {
      hermite_check(deg, registry_get("geom"));
      FAIL("expected PoleAtNode");
    } catch (const Error& err) {
      CHECK(err.code() == Errc::PoleAtNode);
    }
  }

  TEST_CASE("interp_at_scaled_cheb examples") {
    const auto e = registry_get("exp");
    const auto disk = interp_at_scaled_cheb(e, 1, 1, DomainSpec::disk(1.0), 0.1);
    const auto pade = pade_approx(e, 1, 1);
    CHECK(coeff_rel_err(disk.r.num().coeffs(), pade.r.num().coeffs()) < 1e-10);
    CHECK(coeff_rel_err(disk.r.den().coeffs(), pade.r.den().coeffs()) < 1e-10);

    const auto seg = interp_at_scaled_cheb(e, 1, 1, DomainSpec::interval(-1, 1), 0.1);
    REQUIRE(seg.nodes.size() == 3);
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(seg.nodes.nodes()[static_cast<size_t>(j)] - 0.1 * std::cos((2 * j + 1) * M_PI / 6)) < 1e-15);

    try {
      interp_at_scaled_cheb(registry_get("geom"), 1, 1, DomainSpec::interval(-1, 1), 2.0);
      FAIL("expected NodeOutsideDomain");
    } catch (const Error& err) {
      CHECK(err.code() == Errc::NodeOutsideDomain);
    }
  }

  TEST_CASE("confluent reduction to Pade") {
    for (const char* name : {"exp", "log1p", "cosz"}) {
      const auto f = registry_get(name);
      for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
          const auto p = pade_approx(f, m, n);
          if (p.degenerate) continue;
          const auto r = interpolate(f, NodeMultiset(std::vector<cplx>(static_cast<size_t>(m + n + 1), 0.0)), m, n);
          CHECK_MESSAGE(coeff_rel_err(r.r.num().coeffs(), p.r.num().coeffs()) <= 1e-8, name << m << n);
          CHECK_MESSAGE(coeff_rel_err(r.r.den().coeffs(), p.r.den().coeffs()) <= 1e-8, name << m << n);
        }
    }
  }

  TEST_CASE("determinant denominator is proportional to the solved one") {
    const auto e = registry_get("exp");
    for (int trial = 0; trial < 20; ++trial) {
      const int m = trial % 3, n = 1 + trial % 2;
      std::vector<cplx> z;
      for (int k = 0; k < m + n + 1; ++k) z.push_back(testutil::in_disk(0.5));
      const NodeMultiset ns(z);
      const auto res = interpolate(e, ns, m, n);
      const cplx a = testutil::in_disk(1.0), b = testutil::in_disk(1.0);
      const cplx Ha = determinant_denominator_remainder(e, ns, m, n, a).q_val;
      const cplx Hb = determinant_denominator_remainder(e, ns, m, n, b).q_val;
      const cplx lhs = res.r.den()(a) * Hb, rhs = res.r.den()(b) * Ha;
      CHECK(std::abs(lhs - rhs) <= 1e-7 * std::max(std::abs(lhs), std::abs(rhs)));
    }
  }

  TEST_CASE("error factors through the node polynomial") {
    const auto e = registry_get("exp");
    const NodeMultiset ns{-0.2, 0.05, 0.1, 0.3};
    const auto res = interpolate(e, ns, 2, 1);
    REQUIRE_FALSE(res.degenerate);
    std::vector<double> vals;
    for (int k = 0; k < 50; ++k) {
      const cplx z = cplx{-0.25 + 0.6 * k / 49.0, 0.01 * std::sin(k)};
      cplx node_poly = 1.0;
      for (auto zj : ns.nodes()) node_poly *= z - zj;
      vals.push_back(std::abs((res.r(z) - e(z)) / node_poly));
    }
    std::vector<double> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    for (double v : vals) CHECK(v <= 10 * median);
  }

  TEST_CASE("shrinking nodes converge to the Pade approximant") {
    const auto e = registry_get("exp");
    const auto pade = pade_approx(e, 1, 1);
    const std::vector<cplx> base{-0.4, 0.1, 0.5};
    double prev = 1e300;
    for (double s = 1.0; s > 1e-3; s /= 2) {
      std::vector<cplx> z;
      for (auto b : base) z.push_back(s * b);
      const auto r = interpolate(e, NodeMultiset(z), 1, 1);
      const double d = std::max(coeff_rel_err(r.r.num().coeffs(), pade.r.num().coeffs()),
                                coeff_rel_err(r.r.den().coeffs(), pade.r.den().coeffs()));
      CHECK(d <= 1.5 * prev);
      prev = d;
    }
  }

  TEST_CASE("remainder converges to a_mn at rate eps") {
    const auto e = registry_get("exp");
    const auto K = DomainSpec::interval(-1, 1);
    const auto cheb = cheb_system(K, 3);
    for (cplx z : {cplx{0.0}, cplx{0.5}, cplx{0.0, 0.5}}) {
      double prev = 0.0;
      for (double eps : {0.2, 0.1, 0.05, 0.025}) {
        std::vector<cplx> nodes;
        for (auto t : cheb.nodes) nodes.push_back(eps * t);
        const auto d = determinant_denominator_remainder(e, NodeMultiset(nodes), 1, 1, eps * z);
        const double dev = std::abs(d.vtilde_val / d.q_val - 1.0 / 12);
        if (prev > 0.0) {
          CHECK(prev / dev >= 2.0 / 3.0);
          CHECK(prev / dev <= 6.0);
        }
        prev = dev;
      }
    }
  }

  TEST_CASE("interpolating exp at imaginary nodes gives a unitary function") {
    const auto e = registry_get("exp");
    for (int n : {1, 2}) {
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<cplx> z;
        for (int k = 0; k < 2 * n + 1; ++k) z.push_back({0.0, testutil::uniform(-0.5, 0.5)});
        const auto res = interpolate(e, NodeMultiset(z), n, n);
        double worst = 0.0;
        for (int k = 0; k <= 200; ++k) {
          const double y = -2.0 + 4.0 * k / 200;
          worst = std::max(worst, std::abs(std::abs(res.r(cplx{0.0, y})) - 1.0));
        }
        CHECK(worst <= 1e-8);
      }
    }
  }
}
