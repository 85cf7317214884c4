#include "sconv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "sconv/bounds.hpp"
#include "sconv/moments.hpp"
#include "sconv/zoo.hpp"

namespace sconv {

namespace {

bool has_method(const std::vector<Method>& ms, Method m) {
  return std::find(ms.begin(), ms.end(), m) != ms.end();
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

long pick_index(std::mt19937_64& rng, size_t n) {
  return std::uniform_int_distribution<long>(0, static_cast<long>(n) - 1)(rng);
}

}  // namespace

double EqualityCheck::dev() const { return std::abs(lhs - rhs); }

void FuzzConfig::check() const {
  if (trials < 1) throw std::invalid_argument("fuzz: trials < 1");
  if (function_ids.empty()) throw std::invalid_argument("fuzz: no functions");
  if (q_set.empty()) throw std::invalid_argument("fuzz: empty q set");
  auto in01 = [](std::pair<double, double> r) {
    return r.first >= 0.0 && r.first <= r.second && r.second <= 1.0;
  };
  if (!in01(alpha_range) || !in01(lambda_range))
    throw std::invalid_argument("fuzz: alpha/lambda range out of [0,1]");
  if (!(s_range.first > 0.0 && s_range.first <= s_range.second &&
        s_range.second < 1.0))
    throw std::invalid_argument("fuzz: s range out of (0,1)");
  for (double q : q_set)
    if (!(q >= 1.0)) throw std::invalid_argument("fuzz: q < 1 in q set");
  bool have_convex = has_method(methods, Method::PowerMean22) ||
                     has_method(methods, Method::HolderConvex23);
  bool have_concave = has_method(methods, Method::HolderConcave25);
  for (const std::string& id : function_ids) {
    const TestFunction& f = find_function(id);
    if (!f.certificate)
      throw std::invalid_argument("fuzz: " + id + " has no certificate");
    bool concave = f.certificate->mode == ConvexityMode::SConcave;
    if (concave && !have_concave)
      throw std::invalid_argument("fuzz: concave certificate for " + id +
                                  " but no concave method configured");
    if (!concave && !have_convex)
      throw std::invalid_argument("fuzz: convex certificate for " + id +
                                  " but no convex method configured");
  }
}

VerificationReport fuzz_verify(const FuzzConfig& cfg) {
  cfg.check();
  std::mt19937_64 rng(cfg.seed);
  VerificationReport report;
  report.rows.reserve(cfg.trials);

  bool allow_pm = has_method(cfg.methods, Method::PowerMean22);
  bool allow_hc = has_method(cfg.methods, Method::HolderConvex23);

  for (long trial = 0; trial < cfg.trials; ++trial) {
    const std::string& id = cfg.function_ids[pick_index(rng, cfg.function_ids.size())];
    const TestFunction& base = find_function(id);
    bool concave = base.certificate->mode == ConvexityMode::SConcave;

    double alpha, lambda;
    if (trial % 100 == 99) {  // force the degenerate-node corners
      alpha = (rng() & 1) ? 1.0 : 0.0;
      lambda = (rng() & 1) ? 1.0 : 0.0;
    } else {
      alpha = uniform(rng, cfg.alpha_range.first, cfg.alpha_range.second);
      lambda = uniform(rng, cfg.lambda_range.first, cfg.lambda_range.second);
    }

    double lo = std::max(base.domain_lo, 0.01);
    double hi = std::isfinite(base.domain_hi) ? base.domain_hi : 10.0;
    double a = uniform(rng, lo, hi - 0.1);
    double b = uniform(rng, a + 0.1, hi);

    TrialRow row;
    row.trial = trial;
    row.alpha = alpha;
    row.lambda = lambda;
    row.fn = id;
    row.a = a;
    row.b = b;

    RuleParams params(alpha, lambda);
    Interval iv(a, b);
    Bound bound;
    const TestFunction* fn = &base;
    TestFunction instance;

    if (concave) {
      ConvexityClass cls(base.certificate->s, base.certificate->q,
                         ConvexityMode::SConcave);
      row.s = cls.s;
      row.q = cls.q;
      bound = bound_holder_concave(params, cls, derivative_data(*fn, params, iv), iv);
    } else if (id == "power_s1") {
      double q = cfg.q_set[pick_index(rng, cfg.q_set.size())];
      double sx = uniform(rng, cfg.s_range.first, cfg.s_range.second) / q;
      instance = make_power_s1(sx, q);
      fn = &instance;
      ConvexityClass cls(q * sx, q, ConvexityMode::SConvex);
      row.s = cls.s;
      row.q = q;
      DerivativeData d = derivative_data(*fn, params, iv);
      bool holder = allow_hc && q > 1.0 && (!allow_pm || (rng() & 1));
      bound = holder ? bound_holder_convex(params, cls, d, iv)
                     : bound_power_mean(params, cls, d, iv);
    } else {  // square (or any s = 1 convex certificate)
      double q = cfg.q_set[pick_index(rng, cfg.q_set.size())];
      ConvexityClass cls(1.0, q, ConvexityMode::SConvex);
      row.s = 1.0;
      row.q = q;
      DerivativeData d = derivative_data(*fn, params, iv);
      bool holder = allow_hc && q > 1.0 && (!allow_pm || (rng() & 1));
      bound = holder ? bound_holder_convex(params, cls, d, iv)
                     : bound_power_mean(params, cls, d, iv);
    }

    row.lhs = std::abs(rule_error(*fn, params, iv));
    row.rhs = bound.value;
    row.ratio = row.rhs > 0.0 ? row.lhs / row.rhs : (row.lhs > 0.0 ? HUGE_VAL : 0.0);
    row.violation = row.lhs > row.rhs + cfg.tol;
    if (row.violation) report.violations.push_back(row);
    report.rows.push_back(std::move(row));
  }

  report.trials_run = cfg.trials;
  std::vector<double> ratios;
  ratios.reserve(report.rows.size());
  report.worst_case = report.rows.front();
  for (const TrialRow& r : report.rows) {
    ratios.push_back(r.ratio);
    if (r.ratio > report.worst_case.ratio) report.worst_case = r;
  }
  std::sort(ratios.begin(), ratios.end());
  report.ratio_min = ratios.front();
  report.ratio_max = ratios.back();
  report.ratio_median = ratios[ratios.size() / 2];
  return report;
}

std::vector<EqualityCheck> reduction_check(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EqualityCheck> checks;
  auto label = [](const std::string& base, double x, double y, double z) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s(%g,%g,%g)", base.c_str(), x, y, z);
    return std::string(buf);
  };

  // (a) s = 1 power-mean bound vs its mu/eta/upsilon reference form
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      for (double q : {1.0, 2.0, 3.0}) {
        RuleParams params(i / 8.0, j / 8.0);
        DerivativeData d;
        d.d_a = uniform(rng, 0.0, 4.0);
        d.d_b = uniform(rng, 0.0, 4.0);
        Interval iv(0.0, uniform(rng, 0.5, 5.0));
        ConvexityClass cls(1.0, q, ConvexityMode::SConvex);
        checks.push_back(
            {label("s1-reduction", params.alpha, params.lambda, q),
             bound_power_mean(params, cls, d, iv).value,
             bound_convex_reference(params, q, d, iv).value});
      }
    }
  }

  // (b) general bounds vs the named-rule displays
  Interval iv(0.3, 2.1);
  for (int k = 1; k <= 10; ++k) {
    double s = k / 10.0;
    for (double q : {1.0, 1.5, 2.0, 3.0}) {
      DerivativeData d;
      d.d_a = uniform(rng, 0.0, 3.0);
      d.d_b = uniform(rng, 0.0, 3.0);
      d.d_mix = uniform(rng, 0.0, 3.0);
      d.d_lo = uniform(rng, 0.0, 3.0);
      d.d_hi = uniform(rng, 0.0, 3.0);
      ConvexityClass cvx(s, q, ConvexityMode::SConvex);

      struct Spec {
        NamedRule rule;
        double lambda;
      };
      for (const Spec& sp : {Spec{NamedRule::Midpoint, 0.0},
                             Spec{NamedRule::Simpson, 1.0 / 3.0},
                             Spec{NamedRule::Trapezoid, 1.0}}) {
        RuleParams params(0.5, sp.lambda);
        checks.push_back(
            {label(std::string(to_string(sp.rule)) + "-pm", s, q, 0),
             bound_power_mean(params, cvx, d, iv).value,
             named_rule_bound(sp.rule, NamedMethod::PowerMean, cvx, d, iv).value});
        if (q > 1.0) {
          checks.push_back(
              {label(std::string(to_string(sp.rule)) + "-holder", s, q, 0),
               bound_holder_convex(params, cvx, d, iv).value,
               named_rule_bound(sp.rule, NamedMethod::HolderConvex, cvx, d, iv)
                   .value});
          ConvexityClass ccv(s, q, ConvexityMode::SConcave);
          if (sp.rule != NamedRule::Simpson)
            checks.push_back(
                {label(std::string(to_string(sp.rule)) + "-concave", s, q, 0),
                 bound_holder_concave(params, ccv, d, iv).value,
                 named_rule_bound(sp.rule, NamedMethod::HolderConcave, ccv, d,
                                  iv)
                     .value});
        }
      }

      // (c) the Simpson Holder display coincides with the classical bound
      if (q > 1.0)
        checks.push_back(
            {label("simpson-holder-vs-classical", s, q, 0),
             named_rule_bound(NamedRule::Simpson, NamedMethod::HolderConvex,
                              cvx, d, iv)
                 .value,
             classical_simpson_holder(cvx, d, iv).value});
    }
  }
  return checks;
}

std::vector<TightnessRow> tightness_compare(int s_points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TightnessRow> rows;
  Interval iv(0.0, 1.0);
  for (int k = 1; k <= s_points; ++k) {
    double s = static_cast<double>(k) / s_points;
    for (double q : {1.0, 1.5, 2.0, 3.0}) {
      DerivativeData d;
      d.d_a = uniform(rng, 0.0, 3.0);
      d.d_b = uniform(rng, 0.0, 3.0);
      d.d_mix = uniform(rng, 0.0, 3.0);
      ConvexityClass cls(s, q, ConvexityMode::SConvex);

      TightnessRow mid;
      mid.comparison = "midpoint-power-mean-vs-classical";
      mid.s = s;
      mid.q = q;
      mid.d_a = d.d_a;
      mid.d_b = d.d_b;
      mid.bound_new =
          named_rule_bound(NamedRule::Midpoint, NamedMethod::PowerMean, cls, d, iv)
              .value;
      mid.bound_classical = classical_midpoint_power_mean(cls, d, iv).value;
      mid.ratio = mid.bound_classical > 0.0
                      ? mid.bound_new / mid.bound_classical
                      : (mid.bound_new > 0.0 ? HUGE_VAL : 1.0);
      mid.anomaly = mid.bound_new > mid.bound_classical * (1.0 + 1e-12);
      rows.push_back(mid);

      if (q > 1.0 && s < 1.0) {
        TightnessRow trap;
        trap.comparison = "trapezoid-holder-vs-classical";
        trap.s = s;
        trap.q = q;
        trap.d_a = d.d_a;
        trap.d_b = d.d_b;
        trap.d_mix = *d.d_mix;
        trap.bound_new = named_rule_bound(NamedRule::Trapezoid,
                                          NamedMethod::HolderConvex, cls, d, iv)
                             .value;
        trap.bound_classical = classical_trapezoid_holder(cls, d, iv).value;
        trap.ratio = trap.bound_classical > 0.0
                         ? trap.bound_new / trap.bound_classical
                         : (trap.bound_new > 0.0 ? HUGE_VAL : 1.0);
        trap.anomaly = trap.bound_new > trap.bound_classical * (1.0 + 1e-12);
        rows.push_back(trap);
      }
    }
  }
  return rows;
}

std::vector<CoefficientCheck> improvement_coefficients(int n) {
  std::vector<CoefficientCheck> out;
  for (int k = 1; k <= n; ++k) {
    double s = static_cast<double>(k) / n;
    CoefficientCheck a{"(s+1)/2<=1", s, (s + 1.0) / 2.0, 1.0, false};
    a.holds = a.lhs <= a.rhs;
    out.push_back(a);
    double w = std::pow(2.0, 1.0 - s);
    CoefficientCheck b{"(2^(s+2)-s-3)/2<=(2^(1-s)+1)/2^(1-s)", s,
                       (std::pow(2.0, s + 2.0) - s - 3.0) / 2.0,
                       (w + 1.0) / w, false};
    b.holds = b.lhs <= b.rhs + 1e-15;
    out.push_back(b);
  }
  return out;
}

}  // namespace sconv
