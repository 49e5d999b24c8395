#include "opa/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "opa/gammafn.hpp"

namespace opa {

namespace {

bool is_integer(double x) { return x == std::floor(x); }

// base^e by repeated squaring, exact for small integer powers.
double ipow(double base, unsigned e) {
  double r = 1.0, b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace

double dirichlet_weight(double alpha, std::size_t n) {
  double m = static_cast<double>(n) + 1.0;
  if (is_integer(alpha)) {
    // Exact arithmetic path; keeps the D_{-1} = A^2_0 coincidence bit-exact.
    long e = static_cast<long>(alpha);
    if (e >= 0) return ipow(m, static_cast<unsigned>(e));
    return 1.0 / ipow(m, static_cast<unsigned>(-e));
  }
  return std::pow(m, alpha);
}

double bergman_weight(double beta, std::size_t n) {
  if (beta <= -1.0) throw std::domain_error("bergman_weight: beta must exceed -1");
  if (is_integer(beta)) {
    // 1 / C(beta+n+1, n) = prod_{j=1}^{beta+1} j / (n+j), exact integer factors.
    long b = static_cast<long>(beta);
    double w = 1.0;
    for (long j = 1; j <= b + 1; ++j)
      w *= static_cast<double>(j) / (static_cast<double>(n) + static_cast<double>(j));
    return w;
  }
  double nn = static_cast<double>(n);
  return std::exp(log_gamma(nn + 1.0) + log_gamma(beta + 2.0) - log_gamma(beta + nn + 2.0));
}

WeightSequence WeightSequence::hardy() { return WeightSequence(Kind::Hardy, 0.0); }

WeightSequence WeightSequence::dirichlet(double alpha) {
  return WeightSequence(Kind::Dirichlet, alpha);
}

WeightSequence WeightSequence::bergman(double beta) {
  if (beta <= -1.0) throw std::domain_error("WeightSequence::bergman: beta must exceed -1");
  return WeightSequence(Kind::Bergman, beta);
}

WeightSequence WeightSequence::custom(std::vector<double> prefix, TailRule tail,
                                      std::size_t ratio_check_from) {
  if (prefix.empty()) throw std::domain_error("custom weights: empty prefix");
  if (prefix[0] != 1.0) throw std::domain_error("custom weights: w_0 must equal 1");
  for (double v : prefix)
    if (!(v > 0.0)) throw std::domain_error("custom weights: values must be positive");
  if (tail.type == TailRule::Type::Ratio && !(tail.ratio > 0.0))
    throw std::domain_error("custom weights: tail ratio must be positive");
  WeightSequence w(Kind::Custom, 0.0);
  w.prefix_ = std::move(prefix);
  w.tail_ = tail;
  // Admission gate: |w_n / w_{n+1} - 1| < 0.5 from the declared index on.
  // Checked on the prefix and a sampled stretch of the tail; this is a
  // heuristic gate, not a proof of the ratio condition at infinity.
  std::size_t check_upto = w.prefix_.size() + 64;
  for (std::size_t n = ratio_check_from; n < check_upto; ++n) {
    if (std::abs(w.ratio(n) - 1.0) >= 0.5) {
      std::ostringstream msg;
      msg << "custom weights: ratio condition violated at n=" << n
          << " (w_n/w_{n+1} = " << w.ratio(n) << ")";
      throw std::domain_error(msg.str());
    }
  }
  return w;
}

double WeightSequence::operator()(std::size_t n) const {
  switch (kind_) {
    case Kind::Hardy:
      return 1.0;
    case Kind::Dirichlet:
      return dirichlet_weight(param_, n);
    case Kind::Bergman:
      return bergman_weight(param_, n);
    case Kind::Custom:
      if (n < prefix_.size()) return prefix_[n];
      if (tail_.type == TailRule::Type::Ratio) {
        double last = prefix_.back();
        double steps = static_cast<double>(n - (prefix_.size() - 1));
        return last * std::pow(tail_.ratio, steps);
      }
      return tail_.scale * std::pow(static_cast<double>(n) + 1.0, tail_.exponent);
  }
  return 1.0;
}

double WeightSequence::ratio(std::size_t n) const { return (*this)(n) / (*this)(n + 1); }

bool WeightSequence::strictly_decreasing(std::size_t upto) const {
  for (std::size_t n = 0; n < upto; ++n)
    if (!((*this)(n) > (*this)(n + 1))) return false;
  return true;
}

std::string WeightSequence::describe() const {
  std::ostringstream s;
  switch (kind_) {
    case Kind::Hardy:
      s << "hardy";
      break;
    case Kind::Dirichlet:
      s << "dirichlet:" << param_;
      break;
    case Kind::Bergman:
      s << "bergman:" << param_;
      break;
    case Kind::Custom:
      s << "custom[" << prefix_.size() << " prefix values]";
      break;
  }
  return s.str();
}

}  // namespace opa
