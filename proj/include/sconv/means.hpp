#pragma once

#include "sconv/types.hpp"

namespace sconv {

/// Weighted arithmetic mean A_alpha(a,b) = alpha*a + (1-alpha)*b.
double weighted_arith(double alpha, double a, double b);

/// Arithmetic mean A(a,b) = (a+b)/2.
double arith(double a, double b);

/// p-logarithmic mean L_p(a,b) = ((b^(p+1)-a^(p+1))/((p+1)(b-a)))^(1/p),
/// p not in {-1, 0}, 0 < a < b.
double p_log(double a, double b, double p);

struct MeanInequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Power-mean route: |lambda A_alpha(a^(s+1), b^(s+1)) +
/// (1-lambda) A_alpha^(s+1)(a,b) - L_(s+1)^(s+1)(a,b)| against the
/// case-matched power-mean bound for f(t) = t^(s+1). Needs q >= 1, qs < 1.
MeanInequalityReport proposition_power_mean_check(double a, double b,
                                                  double alpha, double lambda,
                                                  double s, double q,
                                                  double tol = 1e-10);

/// Holder route: same left side against the epsilon-moment combination with
/// C_s(alpha,q) = (1-alpha)[A_alpha^(sq) + a^(sq)],
/// D_s(alpha,q) = alpha[A_alpha^(sq) + b^(sq)]. Needs q > 1, qs < 1.
MeanInequalityReport proposition_holder_check(double a, double b, double alpha,
                                              double lambda, double s,
                                              double q, double tol = 1e-10);

}  // namespace sconv
