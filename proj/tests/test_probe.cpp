#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sconv/probe.hpp"
#include "sconv/zoo.hpp"

using namespace sconv;

namespace {

TestFunction adhoc(std::function<double(double)> v,
                   std::function<double(double)> dv) {
  TestFunction f;
  f.id = "adhoc";
  f.value = std::move(v);
  f.deriv = std::move(dv);
  return f;
}

}  // namespace

TEST_CASE("s-convexity probe") {
  Interval unit(0.0, 1.0);
  CHECK(!sconvexity_probe([](double t) { return std::sqrt(t); }, 0.5, unit));
  CHECK(!sconvexity_probe([](double t) { return t; }, 1.0, unit));
  auto witness =
      sconvexity_probe([](double t) { return -t * t; }, 1.0, unit);
  REQUIRE(witness);
  CHECK(witness->lhs > witness->rhs);
  // concave variant accepts what the convex probe rejects
  CHECK(!sconvexity_probe([](double t) { return -t * t; }, 1.0, unit, 41, true));
}

TEST_CASE("identity residual vanishes for smooth functions") {
  const TestFunction& sq = find_function("square");
  CHECK(lemma_identity_residual(sq, RuleParams(0.5, 1.0 / 3.0),
                                Interval(0, 1)) <= 1e-9);

  TestFunction ex = adhoc([](double x) { return std::exp(x); },
                          [](double x) { return std::exp(x); });
  CHECK(lemma_identity_residual(ex, RuleParams(0.3, 0.7), Interval(0, 2)) <=
        1e-9);

  TestFunction pw = adhoc([](double x) { return std::pow(x, 2.5); },
                          [](double x) { return 2.5 * std::pow(x, 1.5); });
  CHECK(lemma_identity_residual(pw, RuleParams(1.0, 0.0), Interval(0, 1)) <=
        1e-9);
  CHECK(lemma_identity_residual(pw, RuleParams(0.0, 1.0), Interval(0, 1)) <=
        1e-9);
}

TEST_CASE("three-point mean sandwich") {
  const TestFunction& root = find_function("power_s");  // sqrt(t)
  HermiteHadamardTriple t = hermite_hadamard_check(root, 0.5, Interval(0, 1));
  CHECK(t.lhs == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(t.mid == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(t.rhs == doctest::Approx(2.0 / 3.0).epsilon(1e-12));  // sharp side
  CHECK(t.lhs <= t.mid + 1e-12);
  CHECK(t.mid <= t.rhs + 1e-12);

  TestFunction lin = adhoc([](double x) { return x; },
                           [](double) { return 1.0; });
  HermiteHadamardTriple l = hermite_hadamard_check(lin, 1.0, Interval(0, 1));
  CHECK(l.lhs == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(l.mid == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(l.rhs == doctest::Approx(0.5).epsilon(1e-12));

  const TestFunction& sq = find_function("square");
  HermiteHadamardTriple s = hermite_hadamard_check(sq, 1.0, Interval(0, 2));
  CHECK(s.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.mid == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(s.rhs == doctest::Approx(2.0).epsilon(1e-12));
}
