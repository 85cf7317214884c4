#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sconv {

enum class CaseId { I, II, III };

enum class ConvexityMode { SConvex, SConcave };

enum class Method {
  PowerMean22,
  HolderConvex23,
  HolderConcave25,
  Classical14,
  Classical14a,
  Classical15,
  Classical16,
  Reduction13,
};

enum class NamedRule { Midpoint, Trapezoid, Simpson };

const char* to_string(CaseId c);
const char* to_string(Method m);
const char* to_string(NamedRule r);

/// Integration interval [a,b], a < b. `require_nonneg` enforces a >= 0 for
/// hypotheses that live on [0,inf).
class Interval {
 public:
  Interval(double a, double b, bool require_nonneg = false)
      : a_(a), b_(b), nonneg_(a >= 0.0) {
    if (!(a < b)) throw std::domain_error("Interval: need a < b");
    if (require_nonneg && !nonneg_)
      throw std::domain_error("Interval: need a >= 0");
  }
  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  bool nonneg() const { return nonneg_; }

 private:
  double a_, b_;
  bool nonneg_;
};

/// The (alpha, lambda) pair selecting the quadrature combination.
/// lambda = 0 is a one-point rule at the alpha-weighted node, lambda = 1 the
/// weighted endpoint rule, (1/2, 1/3) Simpson.
struct RuleParams {
  RuleParams(double alpha_, double lambda_) : alpha(alpha_), lambda(lambda_) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw std::domain_error("RuleParams: alpha out of [0,1]");
    if (!(lambda >= 0.0 && lambda <= 1.0))
      throw std::domain_error("RuleParams: lambda out of [0,1]");
  }
  double alpha;
  double lambda;
};

constexpr double kMinS = 1e-6;  // t^s kernels are ill-conditioned below this

/// Hypothesis on |f'|^q: s-convex or s-concave with s in (0,1], q >= 1.
struct ConvexityClass {
  ConvexityClass(double s_, double q_, ConvexityMode mode_)
      : s(s_), q(q_), mode(mode_) {
    if (!(s >= kMinS && s <= 1.0))
      throw std::domain_error("ConvexityClass: s out of (0,1]");
    if (!(q >= 1.0)) throw std::domain_error("ConvexityClass: q < 1");
  }
  double s;
  double q;
  ConvexityMode mode;

  /// Conjugate exponent p = q/(q-1); only defined for q > 1.
  double p() const {
    if (!(q > 1.0)) throw std::domain_error("conjugate exponent needs q > 1");
    return q / (q - 1.0);
  }
};

/// |f'| magnitudes at the nodes a bound consumes. d_mix is the node
/// (1-alpha)b + alpha a; d_lo and d_hi are the two quarter-type nodes
/// ((1-alpha)b + (1+alpha)a)/2 and ((2-alpha)b + alpha a)/2.
struct DerivativeData {
  double d_a = 0.0;
  double d_b = 0.0;
  std::optional<double> d_mix;
  std::optional<double> d_lo;
  std::optional<double> d_hi;

  void check() const;
};

/// A computed right-hand side with its term breakdown. value is always the
/// prefactor times the sum of the term components.
struct Bound {
  double value = 0.0;
  Method method{};
  CaseId case_id = CaseId::I;
  bool at_boundary = false;
  std::vector<std::pair<std::string, double>> components;

  /// Re-assembles value from the stored components.
  double recombine() const;
};

}  // namespace sconv
