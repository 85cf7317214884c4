#include "sconv/probe.hpp"

#include <cmath>

#include "sconv/bounds.hpp"
#include "sconv/quadrature.hpp"

namespace sconv {

std::optional<ProbeWitness> sconvexity_probe(
    const std::function<double(double)>& g, double s, Interval iv, int n,
    bool concave, double slack) {
  if (!iv.nonneg()) throw std::domain_error("sconvexity_probe: need [a,b] in [0,inf)");
  if (n < 2) throw std::domain_error("sconvexity_probe: n < 2");

  auto grid = [&](int i, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  };
  for (int ix = 0; ix < n; ++ix) {
    double x = grid(ix, iv.a(), iv.b());
    double gx = g(x);
    for (int iy = 0; iy < n; ++iy) {
      double y = grid(iy, iv.a(), iv.b());
      double gy = g(y);
      for (int ia = 0; ia < n; ++ia) {
        double al = grid(ia, 0.0, 1.0);
        double lhs = g(al * x + (1.0 - al) * y);
        double rhs = std::pow(al, s) * gx + std::pow(1.0 - al, s) * gy;
        bool violated = concave ? (lhs < rhs - slack) : (lhs > rhs + slack);
        if (violated) return ProbeWitness{x, y, al, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

double lemma_identity_residual(const TestFunction& f, const RuleParams& params,
                               Interval iv, double tol) {
  double lhs = rule_error(f, params, iv, tol / 4.0);
  double a = iv.a(), b = iv.b(), L = iv.length();
  double al = params.alpha * params.lambda;
  double shift = 1.0 - params.lambda * (1.0 - params.alpha);
  auto fp_at = [&](double t) { return f.deriv(t * b + (1.0 - t) * a); };

  double first = 0.0, second = 0.0;
  double mid = 1.0 - params.alpha;
  if (mid > 0.0)
    first = integrate_or_throw(
        [&](double t) { return (t - al) * fp_at(t); }, Interval(0.0, mid),
        tol / 4.0);
  if (mid < 1.0)
    second = integrate_or_throw(
        [&](double t) { return (t - shift) * fp_at(t); }, Interval(mid, 1.0),
        tol / 4.0);
  return std::abs(lhs - L * (first + second));
}

HermiteHadamardTriple hermite_hadamard_check(const TestFunction& f, double s,
                                             Interval iv, double tol) {
  if (!iv.nonneg())
    throw std::domain_error("hermite_hadamard_check: need [a,b] in [0,inf)");
  HermiteHadamardTriple t;
  t.lhs = std::pow(2.0, s - 1.0) * f.value((iv.a() + iv.b()) / 2.0);
  t.mid = f.mean_integral(iv, tol);
  t.rhs = (f.value(iv.a()) + f.value(iv.b())) / (s + 1.0);
  return t;
}

}  // namespace sconv
