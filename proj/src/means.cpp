#include "sconv/means.hpp"

#include <cmath>

#include "sconv/bounds.hpp"
#include "sconv/moments.hpp"

namespace sconv {

double weighted_arith(double alpha, double a, double b) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error("weighted_arith: alpha out of [0,1]");
  return alpha * a + (1.0 - alpha) * b;
}

double arith(double a, double b) { return (a + b) / 2.0; }

double p_log(double a, double b, double p) {
  if (!(a > 0.0 && a < b)) throw std::domain_error("p_log: need 0 < a < b");
  if (p == -1.0 || p == 0.0)
    throw std::domain_error("p_log: p must avoid {-1, 0}");
  double m = (std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) /
             ((p + 1.0) * (b - a));
  return std::pow(m, 1.0 / p);
}

namespace {

// |I_f| for f(t) = t^(s+1): the propositions' common left side in closed form.
double means_lhs(double a, double b, double alpha, double lambda, double s) {
  double A = weighted_arith(alpha, a, b);
  double rule = lambda * weighted_arith(alpha, std::pow(a, s + 1.0),
                                        std::pow(b, s + 1.0)) +
                (1.0 - lambda) * std::pow(A, s + 1.0);
  double lp = (std::pow(b, s + 2.0) - std::pow(a, s + 2.0)) /
              ((s + 2.0) * (b - a));  // L_{s+1}^{s+1}(a,b)
  return std::abs(rule - lp);
}

void check_means_args(double a, double b, double s, double q) {
  if (!(a > 0.0 && a < b))
    throw std::domain_error("proposition check: need 0 < a < b");
  if (!(s > 0.0 && q * s < 1.0))
    throw std::domain_error("proposition check: need s in (0, 1/q)");
}

}  // namespace

MeanInequalityReport proposition_power_mean_check(double a, double b,
                                                  double alpha, double lambda,
                                                  double s, double q,
                                                  double tol) {
  check_means_args(a, b, s, q);
  if (!(q >= 1.0)) throw std::domain_error("proposition check: q < 1");
  RuleParams params(alpha, lambda);
  // |f'(x)| = (s+1)x^s with |f'|^q being (qs)-convex
  ConvexityClass cls(q * s, q, ConvexityMode::SConvex);
  DerivativeData d;
  d.d_a = (s + 1.0) * std::pow(a, s);
  d.d_b = (s + 1.0) * std::pow(b, s);
  Bound bound = bound_power_mean(params, cls, d, Interval(a, b, true));

  MeanInequalityReport r;
  r.lhs = means_lhs(a, b, alpha, lambda, s);
  r.rhs = bound.value;
  r.holds = r.lhs <= r.rhs + tol;
  return r;
}

MeanInequalityReport proposition_holder_check(double a, double b, double alpha,
                                              double lambda, double s,
                                              double q, double tol) {
  check_means_args(a, b, s, q);
  if (!(q > 1.0)) throw std::domain_error("proposition check: q <= 1");
  RuleParams params(alpha, lambda);
  double p = q / (q - 1.0);
  double A = weighted_arith(alpha, a, b);
  double cs = (1.0 - alpha) * (std::pow(A, s * q) + std::pow(a, s * q));
  double ds = alpha * (std::pow(A, s * q) + std::pow(b, s * q));

  CaseInfo info = classify_case(params);
  double best = 0.0;
  bool have = false;
  for (CaseId c : info.applicable) {
    double ea = (c == CaseId::III) ? eps2(alpha, lambda, p)
                                   : eps1(alpha, lambda, p);
    double eb = (c == CaseId::II) ? eps2(1.0 - alpha, lambda, p)
                                  : eps1(1.0 - alpha, lambda, p);
    double v = std::pow(std::max(ea, 0.0), 1.0 / p) * std::pow(cs, 1.0 / q) +
               std::pow(std::max(eb, 0.0), 1.0 / p) * std::pow(ds, 1.0 / q);
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }

  MeanInequalityReport r;
  r.lhs = means_lhs(a, b, alpha, lambda, s);
  r.rhs = (b - a) * std::pow(1.0 / (p + 1.0), 1.0 / p) *
          std::pow(s + 1.0, 1.0 - 1.0 / q) * best;
  r.holds = r.lhs <= r.rhs + tol;
  return r;
}

}  // namespace sconv
