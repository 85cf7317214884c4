#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sconv/bounds.hpp"
#include "sconv/means.hpp"

using namespace sconv;

TEST_CASE("mean values") {
  CHECK(weighted_arith(0.25, 1.0, 3.0) == doctest::Approx(2.5));
  CHECK(weighted_arith(1.0, 1.7, 9.0) == 1.7);
  CHECK(weighted_arith(0.5, 2.0, 4.0) == arith(2.0, 4.0));
  CHECK(arith(1.0, 3.0) == 2.0);

  CHECK(p_log(1.0, 2.0, 1.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(p_log(1.0, 2.0, 2.0) ==
        doctest::Approx(std::sqrt(7.0 / 3.0)).epsilon(1e-15));
  CHECK(p_log(1.0, 4.0, 0.5) ==
        doctest::Approx(std::pow(14.0 / 9.0, 2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(p_log(1.0, 2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(p_log(1.0, 2.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(p_log(2.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(p_log(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(weighted_arith(1.5, 0.0, 1.0), std::domain_error);
}

TEST_CASE("p-log mean properties") {
  for (double a : {0.2, 1.0, 3.0})
    for (double b : {4.0, 7.5})
      CHECK(p_log(a, b, 1.0) == doctest::Approx(arith(a, b)).epsilon(1e-14));
  double prev = 0.0;
  for (double b = 1.5; b < 5.0; b += 0.5) {
    double v = p_log(1.0, b, 2.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("power-mean route on the mean inequality") {
  MeanInequalityReport r =
      proposition_power_mean_check(1.0, 2.0, 0.5, 1.0 / 3.0, 0.4, 2.0);
  CHECK(r.holds);
  r = proposition_power_mean_check(1.0, 2.0, 0.5, 1.0, 0.3, 1.0);
  CHECK(r.holds);
  // shrinking interval: both sides collapse
  r = proposition_power_mean_check(1.0, 1.0 + 1e-4, 0.3, 1.0, 0.3, 1.0);
  CHECK(r.lhs < 1e-3);
  CHECK(r.rhs < 1e-3);
  CHECK(r.holds);
}

TEST_CASE("holder route on the mean inequality") {
  CHECK(proposition_holder_check(1.0, 2.0, 0.5, 1.0 / 3.0, 0.4, 2.0).holds);
  CHECK(proposition_holder_check(1.0, 3.0, 0.7, 0.2, 0.2, 3.0).holds);
}

TEST_CASE("holder route is consistent with the general holder bound") {
  // with d taken from f(t) = t^(s+1) the composed bound must coincide
  for (double s : {0.2, 0.4})
    for (double q : {1.5, 2.0, 3.0}) {
      if (q * s >= 1.0) continue;
      double a = 1.0, b = 2.0;
      for (double alpha : {0.25, 0.5, 0.9})
        for (double lambda : {0.0, 0.4, 1.0}) {
          RuleParams params(alpha, lambda);
          double A = weighted_arith(alpha, a, b);
          DerivativeData d;
          d.d_a = (s + 1.0) * std::pow(a, s);
          d.d_b = (s + 1.0) * std::pow(b, s);
          d.d_mix = (s + 1.0) * std::pow(A, s);
          ConvexityClass cls(s, q, ConvexityMode::SConvex);
          Bound bd = bound_holder_convex(params, cls, d, Interval(a, b, true));
          MeanInequalityReport r =
              proposition_holder_check(a, b, alpha, lambda, s, q);
          CHECK(r.rhs == doctest::Approx(bd.value).epsilon(1e-12));
        }
    }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(proposition_power_mean_check(2.0, 1.0, 0.5, 0.5, 0.3, 2.0),
                  std::domain_error);
  CHECK_THROWS_AS(proposition_power_mean_check(1.0, 2.0, 0.5, 0.5, 0.6, 2.0),
                  std::domain_error);  // qs >= 1
  CHECK_THROWS_AS(proposition_holder_check(1.0, 2.0, 0.5, 0.5, 0.3, 1.0),
                  std::domain_error);  // q must exceed 1
}
