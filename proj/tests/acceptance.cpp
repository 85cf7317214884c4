// Acceptance gate: one pass/fail line per criterion.
// argv[1] is the path to the CLI binary (used by the determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sconv/bounds.hpp"
#include "sconv/means.hpp"
#include "sconv/moments.hpp"
#include "sconv/probe.hpp"
#include "sconv/quadrature.hpp"
#include "sconv/verify.hpp"
#include "sconv/zoo.hpp"

using namespace sconv;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Closed-form coefficients vs the numeric kernel integrals.
void criterion_oracle() {
  auto t0 = Clock::now();
  double worst = 0.0;
  for (int ia = 0; ia <= 20; ++ia) {
    for (int il = 0; il <= 20; ++il) {
      double alpha = ia * 0.05, lambda = il * 0.05;
      bool lo = alpha * lambda <= 1.0 - alpha;  // gamma2/c1/c2/eps1 branch
      bool hi = alpha * lambda >= 1.0 - alpha;
      double g = moment_integral_numeric(MomentKind::Abs, alpha, lambda);
      if (lo) worst = std::max(worst, std::abs(gamma2(alpha, lambda) - g));
      if (hi) worst = std::max(worst, std::abs(gamma1(alpha, lambda) - g));
      for (int is = 1; is <= 10; ++is) {
        double s = is / 10.0;
        double mt = moment_integral_numeric(MomentKind::AbsTs, alpha, lambda, s);
        double mo =
            moment_integral_numeric(MomentKind::AbsOneMinusTs, alpha, lambda, s);
        if (lo) {
          worst = std::max(worst, std::abs(c1(alpha, lambda, s) - mt));
          worst = std::max(worst, std::abs(c2(alpha, lambda, s) - mo));
        }
        if (hi) {
          worst = std::max(worst, std::abs(c3(alpha, lambda, s) - mt));
          worst = std::max(worst, std::abs(c4(alpha, lambda, s) - mo));
        }
      }
      for (double p : {1.5, 2.0, 3.0}) {
        double mp =
            moment_integral_numeric(MomentKind::AbsPow, alpha, lambda, p);
        if (lo)
          worst = std::max(worst,
                           std::abs(eps1(alpha, lambda, p) / (p + 1.0) - mp));
        if (hi)
          worst = std::max(worst,
                           std::abs(eps2(alpha, lambda, p) / (p + 1.0) - mp));
      }
    }
  }
  double spots = std::abs(gamma2(0.5, 1.0 / 3.0) - 5.0 / 72.0);
  spots = std::max(spots, std::abs(c1(0.5, 1.0 / 3.0, 1.0) - 29.0 / 1296.0));
  spots = std::max(spots, std::abs(eps1(0.5, 1.0 / 3.0, 2.0) - 1.0 / 24.0));
  double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "coefficient-oracle equivalence (max dev %.3e, spots %.3e, "
                "%.1fs)",
                worst, spots, dt);
  report(1, worst <= 1e-10 && spots <= 1e-12 && dt < 10.0, buf);
}

// 2. Soundness fuzz: 10,000 trials, zero violations.
void criterion_fuzz() {
  auto t0 = Clock::now();
  FuzzConfig cfg;
  cfg.trials = 10000;
  cfg.seed = 0;
  VerificationReport r = fuzz_verify(cfg);
  double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "soundness fuzz (10000 trials, %zu violations, %.1fs)",
                r.violations.size(), dt);
  report(2, r.passed() && dt < 30.0, buf);
}

// 3. s = 1 bound equals its reference coefficient form on a 9x9x3 grid.
void criterion_reduction() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<> U(0.0, 4.0);
  double worst = 0.0;
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j)
      for (double q : {1.0, 2.0, 3.0}) {
        RuleParams params(i / 8.0, j / 8.0);
        DerivativeData d;
        d.d_a = U(rng);
        d.d_b = U(rng);
        Interval iv(0.0, 1.0 + U(rng));
        ConvexityClass cls(1.0, q, ConvexityMode::SConvex);
        double lhs = bound_power_mean(params, cls, d, iv).value;
        double rhs = bound_convex_reference(params, q, d, iv).value;
        worst = std::max(worst,
                         std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
  char buf[120];
  std::snprintf(buf, sizeof buf, "s=1 reduction (max rel dev %.3e)", worst);
  report(3, worst <= 1e-12, buf);
}

// 4. Specialized displays equal the general bounds.
void criterion_specialization() {
  double worst = 0.0;
  std::string worst_name;
  for (const EqualityCheck& c : reduction_check(12345)) {
    double scale = std::max({1.0, std::abs(c.lhs), std::abs(c.rhs)});
    double dev = c.dev() / scale;
    if (dev > worst) {
      worst = dev;
      worst_name = c.name;
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "specialization equalities (max rel dev %.3e at %s)", worst,
                worst_name.c_str());
  report(4, worst <= 1e-12, buf);
}

// 5. Kernel identity residual across the zoo.
void criterion_identity() {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<> U(0.0, 1.0);
  double worst = 0.0;
  for (const TestFunction& f : catalog()) {
    double lo = std::max(f.domain_lo, 0.01);
    double hi = std::isfinite(f.domain_hi) ? f.domain_hi : 10.0;
    for (int k = 0; k < 100; ++k) {
      double alpha = U(rng), lambda = U(rng);
      double a = lo + (hi - lo - 0.1) * U(rng);
      double b = a + 0.1 + (hi - a - 0.1) * U(rng);
      double res = lemma_identity_residual(f, RuleParams(alpha, lambda),
                                           Interval(a, b));
      worst = std::max(worst, res);
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "kernel identity residual (max %.3e)", worst);
  report(5, worst <= 1e-8, buf);
}

// 6. Mean sandwich sharpness for the square root.
void criterion_sharpness() {
  TestFunction root = make_power_s(1.0, 0.5);
  HermiteHadamardTriple t = hermite_hadamard_check(root, 0.5, Interval(0, 1));
  bool ok = std::abs(t.mid - 2.0 / 3.0) <= 1e-12 &&
            std::abs(t.rhs - 2.0 / 3.0) <= 1e-12 &&
            std::abs(t.lhs - 0.5) <= 1e-12 && t.lhs <= t.mid;
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "mean sandwich sharpness (lhs %.15g, mid %.15g, rhs %.15g)",
                t.lhs, t.mid, t.rhs);
  report(6, ok, buf);
}

// 7. Improvement claims: hard coefficient inequalities + anomaly table.
void criterion_improvement() {
  long coeff_failures = 0;
  for (const CoefficientCheck& c : improvement_coefficients(100))
    if (!c.holds) ++coeff_failures;
  long anomalies = 0;
  std::vector<TightnessRow> rows = tightness_compare(25, 99);
  for (const TightnessRow& r : rows)
    if (r.anomaly) {
      ++anomalies;
      std::printf("  anomaly: %s s=%g q=%g new=%.17g classical=%.17g\n",
                  r.comparison.c_str(), r.s, r.q, r.bound_new,
                  r.bound_classical);
    }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "improvement claims (0 required: %ld coefficient failures; "
                "%ld anomalies over %zu comparisons)",
                coeff_failures, anomalies, rows.size());
  report(7, coeff_failures == 0, buf);
}

// 8. Both mean-inequality routes hold on the full grid.
void criterion_means() {
  auto t0 = Clock::now();
  long checked = 0, failed = 0;
  const std::pair<double, double> ivs[] = {{1, 2}, {1, 3}, {0.5, 4}};
  for (auto [a, b] : ivs)
    for (int ia = 0; ia <= 4; ++ia)
      for (int il = 0; il <= 4; ++il)
        for (double s : {0.1, 0.2, 0.3, 0.45})
          for (double q : {1.0, 1.5, 2.0, 3.0}) {
            if (q * s >= 1.0) continue;  // outside the hypothesis domain
            double alpha = ia * 0.25, lambda = il * 0.25;
            ++checked;
            if (!proposition_power_mean_check(a, b, alpha, lambda, s, q).holds)
              ++failed;
            if (q > 1.0) {
              ++checked;
              if (!proposition_holder_check(a, b, alpha, lambda, s, q).holds)
                ++failed;
            }
          }
  double dt = seconds_since(t0);
  char buf[140];
  std::snprintf(buf, sizeof buf,
                "mean-inequality grid (%ld checks, %ld failures, %.1fs)",
                checked, failed, dt);
  report(8, failed == 0 && dt < 10.0, buf);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// 9. Byte-identical CSV from two identical CLI invocations.
void criterion_determinism(const char* cli) {
  if (!cli) {
    report(9, false, "determinism (CLI path not supplied)");
    return;
  }
  std::string base = std::string(cli) +
                     " verify --trials 1000 --seed 7 --format csv --out ";
  std::string f1 = "acceptance_run1.csv", f2 = "acceptance_run2.csv";
  int r1 = std::system((base + f1).c_str());
  int r2 = std::system((base + f2).c_str());
  std::string a = slurp(f1), b = slurp(f2);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
  bool ok = r1 == 0 && r2 == 0 && !a.empty() && a == b;
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "determinism (two CLI runs, %zu bytes, %s)", a.size(),
                ok ? "identical" : "MISMATCH");
  report(9, ok, buf);
}

}  // namespace

int main(int argc, char** argv) {
  criterion_oracle();
  criterion_fuzz();
  criterion_reduction();
  criterion_specialization();
  criterion_identity();
  criterion_sharpness();
  criterion_improvement();
  criterion_means();
  criterion_determinism(argc > 1 ? argv[1] : nullptr);
  return g_failures == 0 ? 0 : 1;
}
