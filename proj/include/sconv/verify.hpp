#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sconv/types.hpp"

namespace sconv {

struct FuzzConfig {
  long trials = 10000;
  std::uint64_t seed = 0;
  std::pair<double, double> alpha_range{0.0, 1.0};
  std::pair<double, double> lambda_range{0.0, 1.0};
  std::pair<double, double> s_range{0.05, 0.95};  // exponent range for t^(s+1)
  std::vector<double> q_set{1.0, 1.5, 2.0, 3.0};
  std::vector<std::string> function_ids{"square", "power_s1", "sqrt_deriv",
                                        "log_deriv"};
  std::vector<Method> methods{Method::PowerMean22, Method::HolderConvex23,
                              Method::HolderConcave25};
  double tol = 1e-8;

  void check() const;
};

struct TrialRow {
  long trial = 0;
  double alpha = 0, lambda = 0, s = 0, q = 0;
  std::string fn;
  double a = 0, b = 0;
  double lhs = 0, rhs = 0, ratio = 0;
  bool violation = false;
};

struct VerificationReport {
  long trials_run = 0;
  std::vector<TrialRow> rows;  // every trial, in trial order
  std::vector<TrialRow> violations;
  double ratio_min = 0, ratio_median = 0, ratio_max = 0;
  TrialRow worst_case;

  bool passed() const { return violations.empty(); }
};

/// Seeded soundness campaign: samples (alpha, lambda, s, q, f, [a,b]),
/// computes lhs = |I_f| from the exact mean integral and rhs = the
/// certificate-matched bound, and records any lhs > rhs + tol.
/// Deterministic for a fixed config.
VerificationReport fuzz_verify(const FuzzConfig& cfg);

struct EqualityCheck {
  std::string name;
  double lhs = 0, rhs = 0;
  double dev() const;
};

/// Reduction and specialization equalities: the s = 1 bound against its
/// mu/eta/upsilon reference form on an (alpha, lambda, q) grid, and the
/// general bounds against every named-rule display.
std::vector<EqualityCheck> reduction_check(std::uint64_t seed = 12345);

struct TightnessRow {
  std::string comparison;
  double s = 0, q = 0;
  double d_a = 0, d_b = 0, d_mix = 0;
  double bound_new = 0, bound_classical = 0, ratio = 0;
  bool anomaly = false;  // "better-than" claim fails at this point
};

/// Compares the specialized midpoint/trapezoid bounds against their classical
/// counterparts on a sampled grid. Anomalies are data, not faults.
std::vector<TightnessRow> tightness_compare(int s_points = 10,
                                            std::uint64_t seed = 99);

struct CoefficientCheck {
  std::string name;
  double s = 0;
  double lhs = 0, rhs = 0;
  bool holds = false;
};

/// The coefficient-level improvement claims, on an n-point s-grid over (0,1].
std::vector<CoefficientCheck> improvement_coefficients(int n = 100);

}  // namespace sconv
