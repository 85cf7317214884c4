#pragma once

#include <functional>
#include <span>

#include "sconv/types.hpp"

namespace sconv {

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

constexpr double kDefaultQuadTol = 1e-10;
constexpr int kMaxBisectionDepth = 40;

/// Globally adaptive Gauss-Kronrod integration of f over iv. `splits` are
/// mandatory initial breakpoints (kink locations); points outside (a,b) are
/// ignored. Deterministic for fixed inputs. On non-convergence the partial
/// estimate is returned with converged=false.
QuadResult integrate(const std::function<double(double)>& f, Interval iv,
                     double tol = kDefaultQuadTol,
                     std::span<const double> splits = {},
                     int max_depth = kMaxBisectionDepth);

/// Same, but throws std::runtime_error on non-convergence.
double integrate_or_throw(const std::function<double(double)>& f, Interval iv,
                          double tol = kDefaultQuadTol,
                          std::span<const double> splits = {});

enum class MomentKind { Abs, AbsTs, AbsOneMinusTs, AbsPow };

/// Numeric evaluation of the kernel moment integral over [0, 1-alpha]
/// of |t - alpha*lambda| * w(t) with w in {1, t^s, (1-t)^s, |t-alpha*lambda|^(p-1)},
/// splitting at the kink. The independent oracle for the closed forms.
double moment_integral_numeric(MomentKind kind, double alpha, double lambda,
                               double s_or_p = 0.0,
                               double tol = kDefaultQuadTol);

}  // namespace sconv
