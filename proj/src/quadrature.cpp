#include "sconv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace sconv {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value, err;
  int depth;
};

Panel gk15(const std::function<double(double)>& f, double a, double b,
           int depth, long& evals) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    double dx = h * kXgk[j];
    double f1 = f(c - dx), f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  evals += 15;
  return Panel{a, b, resk * h, std::abs((resk - resg) * h), depth};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, Interval iv,
                     double tol, std::span<const double> splits,
                     int max_depth) {
  if (!(tol > 0.0)) throw std::domain_error("integrate: tol <= 0");

  std::vector<double> pts{iv.a()};
  for (double s : splits)
    if (s > iv.a() && s < iv.b()) pts.push_back(s);
  pts.push_back(iv.b());
  std::sort(pts.begin(), pts.end());

  QuadResult res;
  auto worse = [](const Panel& x, const Panel& y) { return x.err < y.err; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);

  double total_err = 0.0;
  double frozen_value = 0.0, frozen_err = 0.0;  // panels at max depth
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Panel p = gk15(f, pts[i], pts[i + 1], 0, res.evaluations);
    total_err += p.err;
    queue.push(p);
  }

  constexpr long kMaxPanels = 200000;
  while (frozen_err + total_err > tol && !queue.empty() &&
         res.evaluations < kMaxPanels * 15) {
    Panel p = queue.top();
    queue.pop();
    total_err -= p.err;
    if (p.depth >= max_depth) {
      frozen_value += p.value;
      frozen_err += p.err;
      continue;
    }
    double m = 0.5 * (p.a + p.b);
    Panel l = gk15(f, p.a, m, p.depth + 1, res.evaluations);
    Panel r = gk15(f, m, p.b, p.depth + 1, res.evaluations);
    total_err += l.err + r.err;
    queue.push(l);
    queue.push(r);
  }

  res.value = frozen_value;
  res.abs_error_estimate = frozen_err + total_err;
  while (!queue.empty()) {
    res.value += queue.top().value;
    queue.pop();
  }
  res.converged = res.abs_error_estimate <= tol;
  return res;
}

double integrate_or_throw(const std::function<double(double)>& f, Interval iv,
                          double tol, std::span<const double> splits) {
  QuadResult r = integrate(f, iv, tol, splits);
  if (!r.converged)
    throw std::runtime_error("integrate: did not converge (estimate " +
                             std::to_string(r.abs_error_estimate) + ")");
  return r.value;
}

double moment_integral_numeric(MomentKind kind, double alpha, double lambda,
                               double s_or_p, double tol) {
  RuleParams params(alpha, lambda);  // validates ranges
  double upper = 1.0 - alpha;
  if (upper <= 0.0) return 0.0;
  double kink = alpha * lambda;

  std::function<double(double)> g;
  switch (kind) {
    case MomentKind::Abs:
      g = [kink](double t) { return std::abs(t - kink); };
      break;
    case MomentKind::AbsTs:
      g = [kink, s = s_or_p](double t) {
        return std::abs(t - kink) * std::pow(t, s);
      };
      break;
    case MomentKind::AbsOneMinusTs:
      g = [kink, s = s_or_p](double t) {
        return std::abs(t - kink) * std::pow(1.0 - t, s);
      };
      break;
    case MomentKind::AbsPow:
      g = [kink, p = s_or_p](double t) {
        return std::pow(std::abs(t - kink), p);
      };
      break;
  }
  const double splits[1] = {kink};
  return integrate_or_throw(g, Interval(0.0, upper), tol, splits);
}

}  // namespace sconv
