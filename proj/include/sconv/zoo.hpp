#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sconv/types.hpp"

namespace sconv {

enum class CertTarget { Function, AbsDerivPowQ };

/// Declared convexity hypothesis: `applies_to` says whether (mode, s) holds
/// for f itself or for |f'|^q.
struct Certificate {
  ConvexityMode mode;
  double s;
  double q;
  CertTarget applies_to;
};

/// An evaluable test function with exact derivative, exact mean integral when
/// known, and a convexity certificate. Immutable after construction.
struct TestFunction {
  std::string id;
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  // Exact (1/(b-a)) * integral of f over [a,b]; null when unknown.
  std::function<double(double, double)> exact_mean;
  std::optional<Certificate> certificate;
  double domain_lo = 0.0;
  double domain_hi = std::numeric_limits<double>::infinity();

  /// Mean integral over iv, exact when available, numeric otherwise.
  double mean_integral(Interval iv, double tol = 1e-10) const;
};

/// f(x) = x^2. |f'|^q = 2^q x^q is convex (s = 1) for any q >= 1.
TestFunction make_square();

/// f(t) = beta * t^s on [0,inf), the classic member of K_s^2; certificate
/// applies to f itself. beta > 0, s in (0,1).
TestFunction make_power_s(double beta, double s);

/// f(t) = t^(s+1) with |f'|^q = (s+1)^q t^(qs), qs-convex; requires qs < 1.
TestFunction make_power_s1(double s, double q);

enum class ConcaveKind { SqrtDeriv, LogDeriv };

/// Witnesses for the s-concave |f'|^q hypothesis. SqrtDeriv: f = (2/3)x^(3/2)
/// with |f'|^2 = x. LogDeriv: f = x ln x - x on [e, e^3] with |f'|^2 = (ln x)^2.
TestFunction make_concave_deriv(ConcaveKind kind);

/// All registered families with validated certificates (probed once).
const std::vector<TestFunction>& catalog();

/// Lookup by id in the catalog; throws std::invalid_argument on miss.
const TestFunction& find_function(const std::string& id);

}  // namespace sconv
