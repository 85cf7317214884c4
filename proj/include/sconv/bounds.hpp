#pragma once

#include <set>

#include "sconv/moments.hpp"
#include "sconv/types.hpp"
#include "sconv/zoo.hpp"

namespace sconv {

/// Signed rule error I_f(lambda, alpha, a, b):
///   lambda(alpha f(a) + (1-alpha) f(b)) + (1-lambda) f(alpha a + (1-alpha) b)
///   - mean integral of f over [a,b].
double rule_error(const TestFunction& f, const RuleParams& params, Interval iv,
                  double tol = 1e-10);

/// |f'| magnitudes at every node any bound can consume.
DerivativeData derivative_data(const TestFunction& f, const RuleParams& params,
                               Interval iv);

// Single-case evaluations, exposed for boundary-continuity checks. The caseid
// must be applicable at params (moments are clamped at zero against roundoff;
// genuinely negative moments on a selected branch are a logic error).
double power_mean_case_value(const RuleParams& params, double s, double q,
                             const DerivativeData& d, Interval iv, CaseId c);
double holder_convex_case_value(const RuleParams& params, double s, double q,
                                const DerivativeData& d, Interval iv, CaseId c);
double holder_concave_case_value(const RuleParams& params, double s, double q,
                                 const DerivativeData& d, Interval iv, CaseId c);

/// Power-mean bound for s-convex |f'|^q, q >= 1. At case boundaries every
/// applicable case is evaluated and the minimum returned.
Bound bound_power_mean(const RuleParams& params, const ConvexityClass& cls,
                       const DerivativeData& d, Interval iv);

/// Holder bound for s-convex |f'|^q, q > 1. Needs d_mix.
Bound bound_holder_convex(const RuleParams& params, const ConvexityClass& cls,
                          const DerivativeData& d, Interval iv);

/// Holder bound for s-concave |f'|^q, q > 1. Needs d_lo, d_hi.
Bound bound_holder_concave(const RuleParams& params, const ConvexityClass& cls,
                           const DerivativeData& d, Interval iv);

/// The convex (s = 1) power-mean bound in its original mu/eta/upsilon
/// coefficient form; the independent route for the s = 1 reduction check.
Bound bound_convex_reference(const RuleParams& params, double q,
                             const DerivativeData& d, Interval iv);

// Classical one-rule bounds. Midpoint forms need d_a, d_b (14/14a); Simpson
// and trapezoid forms additionally need d_mix at the midpoint.
Bound classical_midpoint_power_mean(const ConvexityClass& cls,
                                    const DerivativeData& d, Interval iv);
Bound classical_midpoint_holder(const ConvexityClass& cls,
                                const DerivativeData& d, Interval iv);
Bound classical_simpson_holder(const ConvexityClass& cls,
                               const DerivativeData& d, Interval iv);
Bound classical_trapezoid_holder(const ConvexityClass& cls,
                                 const DerivativeData& d, Interval iv);

enum class NamedMethod {
  PowerMean,
  HolderConvex,
  HolderConcave,
  Classical14,
  Classical14a,
  Classical15,
  Classical16,
};

/// Specialized closed forms for the midpoint (alpha=1/2, lambda=0), trapezoid
/// (1/2, 1) and Simpson (1/2, 1/3) rules. Each equals the general bound at
/// the corresponding (alpha, lambda). Unsupported (rule, method) pairs are
/// rejected. The trapezoid power-mean coefficient is s*2^(s+1)+1 (the
/// published 2^(s+1)+1 matches only at s = 1).
Bound named_rule_bound(NamedRule rule, NamedMethod method,
                       const ConvexityClass& cls, const DerivativeData& d,
                       Interval iv);

/// Evaluates every applicable method in `methods` and returns the minimum,
/// with each method's value retained in the components.
Bound best_bound(const RuleParams& params, const ConvexityClass& cls,
                 const DerivativeData& d, Interval iv,
                 const std::set<Method>& methods);

}  // namespace sconv
