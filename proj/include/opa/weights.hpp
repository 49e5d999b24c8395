#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace opa {

// Pointwise evaluation of the parametric weight families.
double dirichlet_weight(double alpha, std::size_t n);  // (n+1)^alpha
double bergman_weight(double beta, std::size_t n);     // 1 / C(beta+n+1, n), beta > -1

// Tail extension rule for custom weight sequences.  Finite tables alone are
// rejected: every operation may probe arbitrarily large indices.
struct TailRule {
  enum class Type { Ratio, Power };
  Type type = Type::Ratio;
  // Ratio: w_{n+1} = ratio * w_n for n >= prefix-end.
  double ratio = 1.0;
  // Power: w_n = scale * (n+1)^exponent for n past the prefix.
  double scale = 1.0;
  double exponent = 0.0;
};

// A positive weight sequence w with w_0 = 1 and w_n / w_{n+1} -> 1.
// Immutable after construction; evaluation is a pure function of n.
class WeightSequence {
 public:
  enum class Kind { Hardy, Dirichlet, Bergman, Custom };

  static WeightSequence hardy();
  static WeightSequence dirichlet(double alpha);
  static WeightSequence bergman(double beta);  // requires beta > -1
  // Custom: explicit positive prefix (prefix[0] must equal 1) plus a tail
  // rule.  The ratio admission gate |w_n/w_{n+1} - 1| < 0.5 is checked for
  // all n >= ratio_check_from on the prefix and a sampled stretch of tail.
  static WeightSequence custom(std::vector<double> prefix, TailRule tail,
                               std::size_t ratio_check_from = 0);

  double operator()(std::size_t n) const;
  // w_n / w_{n+1}
  double ratio(std::size_t n) const;

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  // True when w is nonincreasing on [0, upto] with strict decrease at every
  // step (used by the multi-zero construction precondition).
  bool strictly_decreasing(std::size_t upto) const;

  std::string describe() const;

 private:
  WeightSequence(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_;
  double param_ = 0.0;
  std::vector<double> prefix_;
  TailRule tail_;
};

inline double weight_ratio(const WeightSequence& w, std::size_t n) { return w.ratio(n); }

}  // namespace opa
