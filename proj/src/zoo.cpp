#include "sconv/zoo.hpp"

#include <cmath>

#include "sconv/probe.hpp"
#include "sconv/quadrature.hpp"

namespace sconv {

namespace {

// Registration-time sanity: central finite differences against deriv at
// interior points, then the certificate probe.
void validate(const TestFunction& f) {
  double lo = std::max(f.domain_lo, 0.05);
  double hi = std::isfinite(f.domain_hi) ? f.domain_hi : lo + 3.0;
  for (int i = 1; i < 100; ++i) {
    double x = lo + (hi - lo) * i / 100.0;
    double h = 1e-5 * std::max(1.0, std::abs(x));
    double fd = (f.value(x + h) - f.value(x - h)) / (2.0 * h);
    double scale = std::max(1.0, std::abs(f.deriv(x)));
    if (std::abs(fd - f.deriv(x)) > 1e-6 * scale)
      throw std::logic_error("zoo: derivative mismatch for " + f.id);
  }
  if (!f.certificate) return;
  const Certificate& cert = *f.certificate;
  std::function<double(double)> g;
  if (cert.applies_to == CertTarget::Function)
    g = f.value;
  else
    g = [&f, q = cert.q](double x) { return std::pow(std::abs(f.deriv(x)), q); };
  Interval iv(std::max(f.domain_lo, 0.0),
              std::isfinite(f.domain_hi) ? f.domain_hi : 1.0);
  auto witness = sconvexity_probe(g, cert.s, iv, 41,
                                  cert.mode == ConvexityMode::SConcave);
  if (witness)
    throw std::logic_error("zoo: certificate probe failed for " + f.id);
}

}  // namespace

double TestFunction::mean_integral(Interval iv, double tol) const {
  if (exact_mean) return exact_mean(iv.a(), iv.b());
  return integrate_or_throw(value, iv, tol * iv.length()) / iv.length();
}

TestFunction make_square() {
  TestFunction f;
  f.id = "square";
  f.value = [](double x) { return x * x; };
  f.deriv = [](double x) { return 2.0 * x; };
  f.exact_mean = [](double a, double b) {
    return (b * b * b - a * a * a) / (3.0 * (b - a));
  };
  f.certificate = Certificate{ConvexityMode::SConvex, 1.0, 2.0,
                              CertTarget::AbsDerivPowQ};
  f.domain_lo = -std::numeric_limits<double>::infinity();
  return f;
}

TestFunction make_power_s(double beta, double s) {
  if (!(beta > 0.0) || !(s > 0.0 && s < 1.0))
    throw std::domain_error("make_power_s: need beta > 0, s in (0,1)");
  TestFunction f;
  f.id = "power_s";
  f.value = [beta, s](double t) { return beta * std::pow(t, s); };
  f.deriv = [beta, s](double t) { return beta * s * std::pow(t, s - 1.0); };
  f.exact_mean = [beta, s](double a, double b) {
    return beta * (std::pow(b, s + 1.0) - std::pow(a, s + 1.0)) /
           ((s + 1.0) * (b - a));
  };
  f.certificate = Certificate{ConvexityMode::SConvex, s, 1.0,
                              CertTarget::Function};
  return f;
}

TestFunction make_power_s1(double s, double q) {
  if (!(s > 0.0 && s < 1.0)) throw std::domain_error("make_power_s1: s out of (0,1)");
  if (!(q >= 1.0) || !(q * s < 1.0))
    throw std::domain_error("make_power_s1: need q >= 1 and qs < 1");
  TestFunction f;
  f.id = "power_s1";
  f.value = [s](double t) { return std::pow(t, s + 1.0); };
  f.deriv = [s](double t) { return (s + 1.0) * std::pow(t, s); };
  // equals L_{s+1}^{s+1}(a,b)
  f.exact_mean = [s](double a, double b) {
    return (std::pow(b, s + 2.0) - std::pow(a, s + 2.0)) /
           ((s + 2.0) * (b - a));
  };
  f.certificate = Certificate{ConvexityMode::SConvex, q * s, q,
                              CertTarget::AbsDerivPowQ};
  return f;
}

TestFunction make_concave_deriv(ConcaveKind kind) {
  TestFunction f;
  if (kind == ConcaveKind::SqrtDeriv) {
    f.id = "sqrt_deriv";
    f.value = [](double x) { return (2.0 / 3.0) * std::pow(x, 1.5); };
    f.deriv = [](double x) { return std::sqrt(x); };
    f.exact_mean = [](double a, double b) {
      return (4.0 / 15.0) * (std::pow(b, 2.5) - std::pow(a, 2.5)) / (b - a);
    };
    // |f'|^2 = x is linear, hence exactly 1-concave
    f.certificate = Certificate{ConvexityMode::SConcave, 1.0, 2.0,
                                CertTarget::AbsDerivPowQ};
  } else {
    f.id = "log_deriv";
    f.value = [](double x) { return x * std::log(x) - x; };
    f.deriv = [](double x) { return std::log(x); };
    f.exact_mean = [](double a, double b) {
      auto F = [](double x) {
        return x * x / 2.0 * std::log(x) - 0.75 * x * x;
      };
      return (F(b) - F(a)) / (b - a);
    };
    // (ln x)^2 is concave where ln x >= 1
    f.certificate = Certificate{ConvexityMode::SConcave, 1.0, 2.0,
                                CertTarget::AbsDerivPowQ};
    f.domain_lo = std::exp(1.0);
    f.domain_hi = std::exp(3.0);
  }
  return f;
}

const std::vector<TestFunction>& catalog() {
  static const std::vector<TestFunction> zoo = [] {
    std::vector<TestFunction> fns;
    fns.push_back(make_square());
    fns.push_back(make_power_s(1.0, 0.5));
    fns.push_back(make_power_s1(0.5, 1.5));
    fns.push_back(make_concave_deriv(ConcaveKind::SqrtDeriv));
    fns.push_back(make_concave_deriv(ConcaveKind::LogDeriv));
    for (const TestFunction& f : fns) validate(f);
    return fns;
  }();
  return zoo;
}

const TestFunction& find_function(const std::string& id) {
  for (const TestFunction& f : catalog())
    if (f.id == id) return f;
  throw std::invalid_argument("unknown function id: " + id);
}

}  // namespace sconv
