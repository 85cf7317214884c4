#pragma once

#include <functional>
#include <optional>

#include "sconv/types.hpp"
#include "sconv/zoo.hpp"

namespace sconv {

struct ProbeWitness {
  double x, y, alpha;
  double lhs, rhs;  // violated comparison: lhs vs rhs + slack
};

/// Samples the s-convexity condition g(ax+(1-a)y) <= a^s g(x) + (1-a)^s g(y)
/// on an n x n x n grid of (x, y, alpha) over iv x iv x [0,1]. Returns the
/// first violating triple, or nullopt when the condition holds everywhere on
/// the grid. `concave` reverses the inequality. Sampling check, not a proof.
std::optional<ProbeWitness> sconvexity_probe(
    const std::function<double(double)>& g, double s, Interval iv, int n = 41,
    bool concave = false, double slack = 1e-12);

/// |LHS - RHS| of the weighted quadrature identity: LHS is the rule error
/// I_f(lambda, alpha, a, b), RHS the two kernel-weighted integrals of f'.
double lemma_identity_residual(const TestFunction& f, const RuleParams& params,
                               Interval iv, double tol = 1e-10);

struct HermiteHadamardTriple {
  double lhs;  // 2^(s-1) f((a+b)/2)
  double mid;  // mean integral
  double rhs;  // (f(a)+f(b))/(s+1)
};

/// The s-convex Hermite-Hadamard sandwich values; caller asserts the ordering.
HermiteHadamardTriple hermite_hadamard_check(const TestFunction& f, double s,
                                             Interval iv, double tol = 1e-10);

}  // namespace sconv
