#pragma once

#include <vector>

#include "sconv/types.hpp"

namespace sconv {

// Closed forms of the kernel moment integrals. gamma1/c3/c4 are meaningful on
// the branch alpha*lambda >= 1-alpha, gamma2/c1/c2 on alpha*lambda <= 1-alpha;
// gamma2 >= 0 everywhere, gamma1 may be negative off its branch.
double gamma1(double alpha, double lambda);
double gamma2(double alpha, double lambda);
double c1(double alpha, double lambda, double s);
double c2(double alpha, double lambda, double s);
double c3(double alpha, double lambda, double s);
double c4(double alpha, double lambda, double s);

// eps1/eps2 of the Holder kernel integrals; both equal (p+1) times
// the integral of |t-alpha*lambda|^p over [0,1-alpha] on their branch.
double eps1(double alpha, double lambda, double p);
double eps2(double alpha, double lambda, double p);

struct MomentSet {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
};

struct HolderMoments {
  double eps1 = 0.0;
  double eps2 = 0.0;
};

/// Case classification of the ordering of alpha*lambda, 1-alpha and
/// 1-lambda(1-alpha). The fourth ordering is impossible since
/// alpha*lambda <= 1-lambda(1-alpha) always holds for lambda <= 1.
struct CaseInfo {
  CaseId primary = CaseId::I;
  bool boundary_lo = false;  // alpha*lambda == 1-alpha
  bool boundary_hi = false;  // 1-lambda(1-alpha) == 1-alpha

  /// Every case whose defining ordering holds (more than one at boundaries).
  std::vector<CaseId> applicable;
};

CaseInfo classify_case(const RuleParams& params);

/// All six case coefficients at (alpha, lambda, s). s in (0,1].
MomentSet kernel_moments(const RuleParams& params, double s);

/// eps1, eps2 at (alpha, lambda, p). p > 1.
HolderMoments holder_moments(const RuleParams& params, double p);

}  // namespace sconv
