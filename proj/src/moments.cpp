#include "sconv/moments.hpp"

#include <cmath>

namespace sconv {

namespace {

// Signed power keeps the closed forms real when a base crosses zero off the
// branch of use: spow(x,e) = sign(x)|x|^e.
double spow(double x, double e) {
  return x < 0.0 ? -std::pow(-x, e) : std::pow(x, e);
}

void check_s(double s) {
  if (!(s >= kMinS && s <= 1.0))
    throw std::domain_error("kernel moments: s out of (0,1]");
}

}  // namespace

double gamma1(double alpha, double lambda) {
  return (1.0 - alpha) * (alpha * lambda - (1.0 - alpha) / 2.0);
}

double gamma2(double alpha, double lambda) {
  double al = alpha * lambda;
  return al * al - gamma1(alpha, lambda);
}

double c1(double alpha, double lambda, double s) {
  double al = alpha * lambda, u = 1.0 - alpha;
  return std::pow(al, s + 2.0) * 2.0 / ((s + 1.0) * (s + 2.0)) -
         al * std::pow(u, s + 1.0) / (s + 1.0) + std::pow(u, s + 2.0) / (s + 2.0);
}

double c2(double alpha, double lambda, double s) {
  double al = alpha * lambda;
  return std::pow(1.0 - al, s + 2.0) * 2.0 / ((s + 1.0) * (s + 2.0)) -
         (1.0 - al) * (1.0 + std::pow(alpha, s + 1.0)) / (s + 1.0) +
         (1.0 + std::pow(alpha, s + 2.0)) / (s + 2.0);
}

double c3(double alpha, double lambda, double s) {
  double al = alpha * lambda, u = 1.0 - alpha;
  return al * std::pow(u, s + 1.0) / (s + 1.0) - std::pow(u, s + 2.0) / (s + 2.0);
}

double c4(double alpha, double lambda, double s) {
  double al = alpha * lambda;
  return (al - 1.0) * (1.0 - std::pow(alpha, s + 1.0)) / (s + 1.0) +
         (1.0 - std::pow(alpha, s + 2.0)) / (s + 2.0);
}

double eps1(double alpha, double lambda, double p) {
  double al = alpha * lambda;
  return std::pow(al, p + 1.0) + spow(1.0 - alpha - al, p + 1.0);
}

double eps2(double alpha, double lambda, double p) {
  double al = alpha * lambda;
  return std::pow(al, p + 1.0) - spow(al - 1.0 + alpha, p + 1.0);
}

CaseInfo classify_case(const RuleParams& params) {
  double A = params.alpha * params.lambda;
  double B = 1.0 - params.alpha;
  double C = 1.0 - params.lambda * (1.0 - params.alpha);

  CaseInfo info;
  info.boundary_lo = (A == B);
  info.boundary_hi = (C == B);
  if (A <= B && B <= C) info.applicable.push_back(CaseId::I);
  if (A <= C && C <= B) info.applicable.push_back(CaseId::II);
  if (B <= A && A <= C) info.applicable.push_back(CaseId::III);
  info.primary = info.applicable.front();
  return info;
}

MomentSet kernel_moments(const RuleParams& params, double s) {
  check_s(s);
  double a = params.alpha, l = params.lambda;
  return MomentSet{gamma1(a, l), gamma2(a, l), c1(a, l, s),
                   c2(a, l, s),  c3(a, l, s),  c4(a, l, s)};
}

HolderMoments holder_moments(const RuleParams& params, double p) {
  if (!(p > 1.0)) throw std::domain_error("holder_moments: p <= 1");
  return HolderMoments{eps1(params.alpha, params.lambda, p),
                       eps2(params.alpha, params.lambda, p)};
}

const char* to_string(CaseId c) {
  switch (c) {
    case CaseId::I: return "I";
    case CaseId::II: return "II";
    case CaseId::III: return "III";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::PowerMean22: return "power-mean";
    case Method::HolderConvex23: return "holder-convex";
    case Method::HolderConcave25: return "holder-concave";
    case Method::Classical14: return "classical-1-4";
    case Method::Classical14a: return "classical-1-4a";
    case Method::Classical15: return "classical-1-5";
    case Method::Classical16: return "classical-1-6";
    case Method::Reduction13: return "reduction-1-3";
  }
  return "?";
}

const char* to_string(NamedRule r) {
  switch (r) {
    case NamedRule::Midpoint: return "midpoint";
    case NamedRule::Trapezoid: return "trapezoid";
    case NamedRule::Simpson: return "simpson";
  }
  return "?";
}

void DerivativeData::check() const {
  auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!ok(d_a) || !ok(d_b) || (d_mix && !ok(*d_mix)) || (d_lo && !ok(*d_lo)) ||
      (d_hi && !ok(*d_hi)))
    throw std::domain_error("DerivativeData: values must be finite and >= 0");
}

double Bound::recombine() const {
  double prefactor = 1.0, terms = 0.0;
  for (const auto& [label, v] : components) {
    if (label == "prefactor")
      prefactor = v;
    else if (label.starts_with("term"))
      terms += v;
  }
  return prefactor * terms;
}

}  // namespace sconv
