#include "sconv/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace sconv {

namespace {

// x^e with the q = 1 convention: exponent 0 yields exactly 1, never 0^0.
double powq(double x, double e) { return e == 0.0 ? 1.0 : std::pow(x, e); }

// Moments consumed on an applicable branch are nonnegative up to roundoff.
double clamp_moment(double m) {
  if (m < -1e-9) throw std::logic_error("negative moment on selected branch");
  return std::max(m, 0.0);
}

struct CaseTerms {
  double prefactor;
  double first;
  double second;
  double value() const { return prefactor * (first + second); }
};

CaseTerms power_mean_terms(const RuleParams& params, double s, double q,
                           const DerivativeData& d, Interval iv, CaseId c) {
  double a = params.alpha, l = params.lambda;
  double daq = std::pow(d.d_a, q), dbq = std::pow(d.d_b, q);
  double e = 1.0 - 1.0 / q;

  double t1, t2;
  if (c == CaseId::III)
    t1 = powq(clamp_moment(gamma1(a, l)), e) *
         std::pow(clamp_moment(c3(a, l, s) * dbq + c4(a, l, s) * daq), 1.0 / q);
  else
    t1 = powq(clamp_moment(gamma2(a, l)), e) *
         std::pow(clamp_moment(c1(a, l, s) * dbq + c2(a, l, s) * daq), 1.0 / q);
  if (c == CaseId::II)
    t2 = powq(clamp_moment(gamma1(1.0 - a, l)), e) *
         std::pow(clamp_moment(c4(1.0 - a, l, s) * dbq + c3(1.0 - a, l, s) * daq),
                  1.0 / q);
  else
    t2 = powq(clamp_moment(gamma2(1.0 - a, l)), e) *
         std::pow(clamp_moment(c2(1.0 - a, l, s) * dbq + c1(1.0 - a, l, s) * daq),
                  1.0 / q);
  return CaseTerms{iv.length(), t1, t2};
}

// The eps pair (first kernel, second kernel) for a given case.
std::pair<double, double> eps_pair(const RuleParams& params, double p,
                                   CaseId c) {
  double a = params.alpha, l = params.lambda;
  double ea = (c == CaseId::III) ? eps2(a, l, p) : eps1(a, l, p);
  double eb = (c == CaseId::II) ? eps2(1.0 - a, l, p) : eps1(1.0 - a, l, p);
  return {clamp_moment(ea), clamp_moment(eb)};
}

CaseTerms holder_convex_terms(const RuleParams& params, double s, double q,
                              const DerivativeData& d, Interval iv, CaseId c) {
  if (!d.d_mix) throw std::domain_error("holder bound: d_mix required");
  double p = q / (q - 1.0);
  double dmq = std::pow(*d.d_mix, q);
  double cf = (1.0 - params.alpha) * (dmq + std::pow(d.d_a, q));
  double df = params.alpha * (dmq + std::pow(d.d_b, q));
  auto [ea, eb] = eps_pair(params, p, c);
  double pre = iv.length() * std::pow(1.0 / (p + 1.0), 1.0 / p) *
               std::pow(1.0 / (s + 1.0), 1.0 / q);
  return CaseTerms{pre, std::pow(ea, 1.0 / p) * std::pow(cf, 1.0 / q),
                   std::pow(eb, 1.0 / p) * std::pow(df, 1.0 / q)};
}

CaseTerms holder_concave_terms(const RuleParams& params, double s, double q,
                               const DerivativeData& d, Interval iv, CaseId c) {
  if (!d.d_lo || !d.d_hi)
    throw std::domain_error("concave bound: d_lo and d_hi required");
  double p = q / (q - 1.0);
  double ef = (1.0 - params.alpha) * std::pow(*d.d_lo, q);
  double ff = params.alpha * std::pow(*d.d_hi, q);
  auto [ea, eb] = eps_pair(params, p, c);
  double pre = iv.length() * std::pow(2.0, (s - 1.0) / q) *
               std::pow(1.0 / (p + 1.0), 1.0 / p);
  return CaseTerms{pre, std::pow(ea, 1.0 / p) * std::pow(ef, 1.0 / q),
                   std::pow(eb, 1.0 / p) * std::pow(ff, 1.0 / q)};
}

template <typename TermsFn>
Bound min_over_cases(const RuleParams& params, Method method,
                     const TermsFn& terms_for) {
  CaseInfo info = classify_case(params);
  Bound best;
  bool have = false;
  for (CaseId c : info.applicable) {
    CaseTerms t = terms_for(c);
    if (!have || t.value() < best.value) {
      have = true;
      best.value = t.value();
      best.case_id = c;
      best.components = {{"prefactor", t.prefactor},
                         {"term_first", t.first},
                         {"term_second", t.second}};
    }
  }
  best.method = method;
  best.at_boundary = info.applicable.size() > 1;
  return best;
}

Bound two_term_bound(Method method, double prefactor, double first,
                     double second) {
  Bound b;
  b.method = method;
  b.value = prefactor * (first + second);
  b.components = {{"prefactor", prefactor},
                  {"term_first", first},
                  {"term_second", second}};
  return b;
}

void require_holder(const ConvexityClass& cls) {
  if (!(cls.q > 1.0)) throw std::domain_error("holder bound: q must be > 1");
}

}  // namespace

double rule_error(const TestFunction& f, const RuleParams& params, Interval iv,
                  double tol) {
  double a = iv.a(), b = iv.b();
  double node = params.alpha * a + (1.0 - params.alpha) * b;
  return params.lambda *
             (params.alpha * f.value(a) + (1.0 - params.alpha) * f.value(b)) +
         (1.0 - params.lambda) * f.value(node) - f.mean_integral(iv, tol);
}

DerivativeData derivative_data(const TestFunction& f, const RuleParams& params,
                               Interval iv) {
  double a = iv.a(), b = iv.b(), al = params.alpha;
  DerivativeData d;
  d.d_a = std::abs(f.deriv(a));
  d.d_b = std::abs(f.deriv(b));
  d.d_mix = std::abs(f.deriv((1.0 - al) * b + al * a));
  d.d_lo = std::abs(f.deriv(((1.0 - al) * b + (1.0 + al) * a) / 2.0));
  d.d_hi = std::abs(f.deriv(((2.0 - al) * b + al * a) / 2.0));
  d.check();
  return d;
}

double power_mean_case_value(const RuleParams& params, double s, double q,
                             const DerivativeData& d, Interval iv, CaseId c) {
  return power_mean_terms(params, s, q, d, iv, c).value();
}

double holder_convex_case_value(const RuleParams& params, double s, double q,
                                const DerivativeData& d, Interval iv,
                                CaseId c) {
  return holder_convex_terms(params, s, q, d, iv, c).value();
}

double holder_concave_case_value(const RuleParams& params, double s, double q,
                                 const DerivativeData& d, Interval iv,
                                 CaseId c) {
  return holder_concave_terms(params, s, q, d, iv, c).value();
}

Bound bound_power_mean(const RuleParams& params, const ConvexityClass& cls,
                       const DerivativeData& d, Interval iv) {
  if (cls.mode != ConvexityMode::SConvex)
    throw std::domain_error("power-mean bound needs an s-convex class");
  d.check();
  return min_over_cases(params, Method::PowerMean22, [&](CaseId c) {
    return power_mean_terms(params, cls.s, cls.q, d, iv, c);
  });
}

Bound bound_holder_convex(const RuleParams& params, const ConvexityClass& cls,
                          const DerivativeData& d, Interval iv) {
  if (cls.mode != ConvexityMode::SConvex)
    throw std::domain_error("holder-convex bound needs an s-convex class");
  require_holder(cls);
  d.check();
  return min_over_cases(params, Method::HolderConvex23, [&](CaseId c) {
    return holder_convex_terms(params, cls.s, cls.q, d, iv, c);
  });
}

Bound bound_holder_concave(const RuleParams& params, const ConvexityClass& cls,
                           const DerivativeData& d, Interval iv) {
  if (cls.mode != ConvexityMode::SConcave)
    throw std::domain_error("holder-concave bound needs an s-concave class");
  require_holder(cls);
  d.check();
  return min_over_cases(params, Method::HolderConcave25, [&](CaseId c) {
    return holder_concave_terms(params, cls.s, cls.q, d, iv, c);
  });
}

Bound bound_convex_reference(const RuleParams& params, double q,
                             const DerivativeData& d, Interval iv) {
  if (!(q >= 1.0)) throw std::domain_error("convex reference bound: q < 1");
  d.check();
  double a = params.alpha, l = params.lambda;
  double al = a * l, u = 1.0 - a;
  double mu1 = (al * al * al + u * u * u) / 3.0 - al * u * u / 2.0;
  double mu2 = (1.0 + a * a * a + std::pow(1.0 - al, 3)) / 3.0 -
               (1.0 - al) / 2.0 * (1.0 + a * a);
  double mu3 = al * u * u / 2.0 - u * u * u / 3.0;
  double mu4 = (al - 1.0) * (1.0 - a * a) / 2.0 + (1.0 - a * a * a) / 3.0;
  double lu = l * u;  // lambda(1-alpha)
  double eta1 = (1.0 - u * u * u) / 3.0 - (1.0 - lu) / 2.0 * a * (2.0 - a);
  double eta2 = lu * a * a / 2.0 - a * a * a / 3.0;
  double eta3 = std::pow(1.0 - lu, 3) / 3.0 -
                (1.0 - lu) / 2.0 * (1.0 + u * u) + (1.0 + u * u * u) / 3.0;
  double eta4 = lu * lu * lu / 3.0 - lu * a * a / 2.0 + a * a * a / 3.0;
  double ups1 = (1.0 - u * u) / 2.0 - a * (1.0 - lu);
  double ups2 = (1.0 + u * u) / 2.0 - (l + 1.0) * u * (1.0 - lu);
  double g1 = gamma1(a, l), g2 = gamma2(a, l);

  double daq = std::pow(d.d_a, q), dbq = std::pow(d.d_b, q);
  double e = 1.0 - 1.0 / q;
  auto combine = [&](double w, double cb, double ca) {
    return powq(clamp_moment(w), e) *
           std::pow(clamp_moment(cb * dbq + ca * daq), 1.0 / q);
  };

  return min_over_cases(params, Method::Reduction13, [&](CaseId c) {
    double t1 = (c == CaseId::III) ? combine(g1, mu3, mu4) : combine(g2, mu1, mu2);
    double t2 = (c == CaseId::II) ? combine(ups1, eta1, eta2)
                                  : combine(ups2, eta3, eta4);
    return CaseTerms{iv.length(), t1, t2};
  });
}

Bound classical_midpoint_power_mean(const ConvexityClass& cls,
                                    const DerivativeData& d, Interval iv) {
  if (cls.mode != ConvexityMode::SConvex)
    throw std::domain_error("classical midpoint power-mean bound needs an s-convex class");
  d.check();
  double s = cls.s, q = cls.q;
  double daq = std::pow(d.d_a, q), dbq = std::pow(d.d_b, q);
  double w = std::pow(2.0, 1.0 - s);
  double pre = iv.length() / 8.0 *
               std::pow(2.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q);
  return two_term_bound(Method::Classical14, pre,
                        std::pow((w + 1.0) * dbq + w * daq, 1.0 / q),
                        std::pow((w + 1.0) * daq + w * dbq, 1.0 / q));
}

Bound classical_midpoint_holder(const ConvexityClass& cls,
                                const DerivativeData& d, Interval iv) {
  if (cls.mode != ConvexityMode::SConvex)
    throw std::domain_error("classical midpoint holder bound needs an s-convex class");
  require_holder(cls);
  d.check();
  double s = cls.s, q = cls.q, p = cls.p();
  double daq = std::pow(d.d_a, q), dbq = std::pow(d.d_b, q);
  double w = std::pow(2.0, 1.0 - s);
  double pre = iv.length() / 4.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) *
               std::pow(1.0 / (s + 1.0), 2.0 / q);
  return two_term_bound(Method::Classical14a, pre,
                        std::pow((w + s + 1.0) * daq + w * dbq, 1.0 / q),
                        std::pow((w + s + 1.0) * dbq + w * daq, 1.0 / q));
}

Bound classical_simpson_holder(const ConvexityClass& cls,
                               const DerivativeData& d, Interval iv) {
  if (cls.mode != ConvexityMode::SConvex)
    throw std::domain_error("classical simpson holder bound needs an s-convex class");
  require_holder(cls);
  if (!d.d_mix) throw std::domain_error("classical simpson holder bound needs d_mix");
  d.check();
  double s = cls.s, q = cls.q, p = cls.p();
  double daq = std::pow(d.d_a, q), dbq = std::pow(d.d_b, q);
  double dmq = std::pow(*d.d_mix, q);
  double pre = iv.length() / 12.0 *
               std::pow((1.0 + std::pow(2.0, p + 1.0)) / (3.0 * (p + 1.0)),
                        1.0 / p);
  return two_term_bound(Method::Classical15, pre,
                        std::pow((dmq + daq) / (s + 1.0), 1.0 / q),
                        std::pow((dmq + dbq) / (s + 1.0), 1.0 / q));
}

Bound classical_trapezoid_holder(const ConvexityClass& cls,
                                 const DerivativeData& d, Interval iv) {
  if (cls.mode != ConvexityMode::SConvex)
    throw std::domain_error("classical trapezoid holder bound needs an s-convex class");
  require_holder(cls);
  if (!(cls.s < 1.0)) throw std::domain_error("classical trapezoid holder bound needs s in (0,1)");
  if (!d.d_mix) throw std::domain_error("classical trapezoid holder bound needs d_mix");
  d.check();
  double s = cls.s, q = cls.q;
  double daq = std::pow(d.d_a, q), dbq = std::pow(d.d_b, q);
  double dmq = std::pow(*d.d_mix, q);
  double pre = iv.length() / 2.0 *
               std::pow((q - 1.0) / (2.0 * (2.0 * q - 1.0)), (q - 1.0) / q) *
               std::pow(1.0 / (s + 1.0), 1.0 / q);
  return two_term_bound(Method::Classical16, pre,
                        std::pow(dmq + daq, 1.0 / q),
                        std::pow(dmq + dbq, 1.0 / q));
}

namespace {

Bound simpson_power_mean_display(const ConvexityClass& cls,
                                 const DerivativeData& d, Interval iv) {
  double s = cls.s, q = cls.q;
  double daq = std::pow(d.d_a, q), dbq = std::pow(d.d_b, q);
  double den = 3.0 * std::pow(6.0, s + 1.0) * (s + 1.0) * (s + 2.0);
  double k1 = ((2.0 * s + 1.0) * std::pow(3.0, s + 1.0) + 2.0) / den;
  double k2 = (2.0 * std::pow(5.0, s + 2.0) +
               (s - 4.0) * std::pow(6.0, s + 1.0) -
               (2.0 * s + 7.0) * std::pow(3.0, s + 1.0)) /
              den;
  double pre = iv.length() / 2.0 * powq(5.0 / 36.0, 1.0 - 1.0 / q);
  return two_term_bound(Method::PowerMean22, pre,
                        std::pow(k1 * dbq + k2 * daq, 1.0 / q),
                        std::pow(k2 * dbq + k1 * daq, 1.0 / q));
}

Bound midpoint_power_mean_display(const ConvexityClass& cls,
                                  const DerivativeData& d, Interval iv) {
  double s = cls.s, q = cls.q;
  double daq = std::pow(d.d_a, q), dbq = std::pow(d.d_b, q);
  double w = std::pow(2.0, 1.0 - s);
  double ka = w * (s + 1.0) / 2.0;
  double kb = w * (std::pow(2.0, s + 2.0) - s - 3.0) / 2.0;
  double pre = iv.length() / 8.0 *
               std::pow(2.0 / ((s + 1.0) * (s + 2.0)), 1.0 / q);
  return two_term_bound(Method::PowerMean22, pre,
                        std::pow(ka * dbq + kb * daq, 1.0 / q),
                        std::pow(ka * daq + kb * dbq, 1.0 / q));
}

Bound trapezoid_power_mean_display(const ConvexityClass& cls,
                                   const DerivativeData& d, Interval iv) {
  double s = cls.s, q = cls.q;
  double daq = std::pow(d.d_a, q), dbq = std::pow(d.d_b, q);
  // Coefficient s*2^(s+1)+1, not the published 2^(s+1)+1 (equal at s = 1).
  double k = s * std::pow(2.0, s + 1.0) + 1.0;
  double pre = iv.length() / 8.0 *
               std::pow(std::pow(2.0, 1.0 - s) / ((s + 1.0) * (s + 2.0)),
                        1.0 / q);
  return two_term_bound(Method::PowerMean22, pre,
                        std::pow(dbq + k * daq, 1.0 / q),
                        std::pow(daq + k * dbq, 1.0 / q));
}

// The shared Holder display at alpha = 1/2, lambda in {0, 1}.
Bound half_holder_display(const ConvexityClass& cls, const DerivativeData& d,
                          Interval iv) {
  if (!d.d_mix) throw std::domain_error("holder display needs d_mix");
  double s = cls.s, q = cls.q, p = cls.p();
  double daq = std::pow(d.d_a, q), dbq = std::pow(d.d_b, q);
  double dmq = std::pow(*d.d_mix, q);
  double pre = iv.length() / 4.0 * std::pow(1.0 / (p + 1.0), 1.0 / p);
  return two_term_bound(Method::HolderConvex23, pre,
                        std::pow((dmq + daq) / (s + 1.0), 1.0 / q),
                        std::pow((dmq + dbq) / (s + 1.0), 1.0 / q));
}

// Concave display at alpha = 1/2, lambda in {0, 1}; carries the 2^((s-1)/q)
// factor, which is 1 at s = 1 where it matches the cited prior results.
Bound half_concave_display(const ConvexityClass& cls, const DerivativeData& d,
                           Interval iv) {
  if (!d.d_lo || !d.d_hi)
    throw std::domain_error("concave display needs d_lo and d_hi");
  double q = cls.q, p = cls.p();
  double pre = iv.length() / 4.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) *
               std::pow(0.5, (1.0 - cls.s) / q);
  return two_term_bound(Method::HolderConcave25, pre, *d.d_hi, *d.d_lo);
}

}  // namespace

Bound named_rule_bound(NamedRule rule, NamedMethod method,
                       const ConvexityClass& cls, const DerivativeData& d,
                       Interval iv) {
  d.check();
  bool convex = cls.mode == ConvexityMode::SConvex;
  switch (rule) {
    case NamedRule::Simpson:
      if (method == NamedMethod::PowerMean && convex)
        return simpson_power_mean_display(cls, d, iv);
      if (method == NamedMethod::HolderConvex && convex) {
        require_holder(cls);
        Bound b = classical_simpson_holder(cls, d, iv);
        b.method = Method::HolderConvex23;  // the Simpson display coincides with the classical form
        return b;
      }
      if (method == NamedMethod::Classical15) return classical_simpson_holder(cls, d, iv);
      break;
    case NamedRule::Midpoint:
      if (method == NamedMethod::PowerMean && convex)
        return midpoint_power_mean_display(cls, d, iv);
      if (method == NamedMethod::HolderConvex && convex) {
        require_holder(cls);
        return half_holder_display(cls, d, iv);
      }
      if (method == NamedMethod::HolderConcave &&
          cls.mode == ConvexityMode::SConcave) {
        require_holder(cls);
        return half_concave_display(cls, d, iv);
      }
      if (method == NamedMethod::Classical14)
        return classical_midpoint_power_mean(cls, d, iv);
      if (method == NamedMethod::Classical14a)
        return classical_midpoint_holder(cls, d, iv);
      break;
    case NamedRule::Trapezoid:
      if (method == NamedMethod::PowerMean && convex)
        return trapezoid_power_mean_display(cls, d, iv);
      if (method == NamedMethod::HolderConvex && convex) {
        require_holder(cls);
        Bound b = half_holder_display(cls, d, iv);
        b.method = Method::HolderConvex23;  // trapezoid display shares the midpoint closed form
        return b;
      }
      if (method == NamedMethod::HolderConcave &&
          cls.mode == ConvexityMode::SConcave) {
        require_holder(cls);
        return half_concave_display(cls, d, iv);
      }
      if (method == NamedMethod::Classical16)
        return classical_trapezoid_holder(cls, d, iv);
      break;
  }
  throw std::invalid_argument("named_rule_bound: unsupported (rule, method)");
}

Bound best_bound(const RuleParams& params, const ConvexityClass& cls,
                 const DerivativeData& d, Interval iv,
                 const std::set<Method>& methods) {
  d.check();
  bool convex = cls.mode == ConvexityMode::SConvex;
  std::vector<Bound> evaluated;
  for (Method m : methods) {
    switch (m) {
      case Method::PowerMean22:
        if (convex) evaluated.push_back(bound_power_mean(params, cls, d, iv));
        break;
      case Method::HolderConvex23:
        if (convex && cls.q > 1.0 && d.d_mix)
          evaluated.push_back(bound_holder_convex(params, cls, d, iv));
        break;
      case Method::HolderConcave25:
        if (!convex && cls.q > 1.0 && d.d_lo && d.d_hi)
          evaluated.push_back(bound_holder_concave(params, cls, d, iv));
        break;
      case Method::Reduction13:
        if (convex && cls.s == 1.0)
          evaluated.push_back(bound_convex_reference(params, cls.q, d, iv));
        break;
      default:
        break;  // classical one-rule bounds are not (alpha,lambda)-generic
    }
  }
  if (evaluated.empty())
    throw std::invalid_argument("best_bound: no applicable method");

  const Bound* best = &evaluated.front();
  for (const Bound& b : evaluated)
    if (b.value < best->value) best = &b;
  Bound out = *best;
  for (const Bound& b : evaluated)
    out.components.emplace_back(std::string("method:") + to_string(b.method),
                                b.value);
  return out;
}

}  // namespace sconv
