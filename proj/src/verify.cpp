#include "opa/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "opa/closedform.hpp"
#include "opa/gram.hpp"
#include "opa/jacobi.hpp"
#include "opa/jentzsch.hpp"
#include "opa/roots.hpp"
#include "opa/series.hpp"

namespace opa {

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

CheckResult timed(const std::string& name, double time_limit,
                  const std::function<std::pair<bool, std::string>()>& body) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [ok, detail] = body();
    r.pass = ok;
    r.detail = detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.pass && r.seconds >= time_limit) {
    r.pass = false;
    r.detail += fmt(" [time limit %.0fs exceeded: %.2fs]", time_limit, r.seconds);
  }
  return r;
}

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& c : v) m = std::max(m, std::abs(c));
  return m;
}

// --- suite bodies ---------------------------------------------------------

// Norm closed form (beta+3)/sqrt(beta+2) for the Bergman-type family.
std::vector<CheckResult> suite_bergman_norm() {
  std::vector<CheckResult> out;
  for (double beta : {-0.5, 0.0, 1.0, 2.5}) {
    out.push_back(timed(fmt("bergman-norm beta=%g", beta), 2.0, [beta] {
      NormEstimate est = norm_estimate(WeightSequence::bergman(beta), 1e-9);
      double exact = (beta + 3.0) / std::sqrt(beta + 2.0);
      double err = std::abs(est.value - exact);
      return std::make_pair(err < 1e-8,
                            fmt("estimate=%.12f exact=%.12f err=%.3e N=%zu", est.value, exact,
                                err, est.truncation_size));
    }));
  }
  return out;
}

// Minimal zero modulus 2 sqrt(beta+2)/(beta+3) from the extremal function.
std::vector<CheckResult> suite_minimal_zero() {
  std::vector<CheckResult> out;
  for (double beta : {0.0, 1.0}) {
    out.push_back(timed(fmt("minimal-zero beta=%g", beta), 1.0, [beta] {
      int N = 40;
      CoeffSeries f = bergman_extremal(beta, N);
      while (f.tail_bound >= 1e-12 && N < 2000) {
        N += 40;
        f = bergman_extremal(beta, N);
      }
      auto z0 = first_order_zero(f, WeightSequence::bergman(beta));
      if (!z0) return std::make_pair(false, std::string("constant approximant"));
      double exact = 2.0 * std::sqrt(beta + 2.0) / (beta + 3.0);
      double err = std::abs(std::abs(*z0) - exact);
      return std::make_pair(err < 1e-8, fmt("modulus=%.12f exact=%.12f err=%.3e N=%d",
                                            std::abs(*z0), exact, err, N));
    }));
  }
  return out;
}

// Point spectrum above 2: t_m = (2m+3)/sqrt((m+1)(m+2)) for beta = 0.
std::vector<CheckResult> suite_bergman_spectrum() {
  std::vector<CheckResult> out;
  out.push_back(timed("bergman-spectrum beta=0 top-4", 10.0, [] {
    std::vector<double> got = point_spectrum_above_2(WeightSequence::bergman(0.0), 1e-8, 4);
    if (got.size() != 4)
      return std::make_pair(false, fmt("expected 4 eigenvalues, got %zu", got.size()));
    double worst = 0.0;
    for (int m = 0; m < 4; ++m) worst = std::max(worst, std::abs(got[m] - bergman_tm(0.0, m).t_m));
    return std::make_pair(worst < 1e-7,
                          fmt("worst err=%.3e (lambda_0=%.10f)", worst, got[0]));
  }));
  return out;
}

// Eigenfunction coefficients against the monic recurrence at t_m, measured
// against the coefficient scale: the forward recurrence shares the rounding
// of t_m amplified by (t_+/t_-)^n, so per-coefficient relative comparison is
// ill-posed near the sign changes of the binomial factor.
std::vector<CheckResult> suite_eigenfunction() {
  std::vector<CheckResult> out;
  for (int m : {0, 1, 2}) {
    out.push_back(timed(fmt("eigenfunction beta=0 m=%d", m), 1.0, [m] {
      WeightSequence w = WeightSequence::bergman(0.0);
      double t = bergman_tm(0.0, m).t_m;
      CoeffSeries f = bergman_eigenfunction(0.0, m, 40);
      std::vector<double> P = monic_recurrence(w, t, 40);
      double scale = max_abs(f.coeffs);
      double worst = 0.0;
      for (std::size_t n = 0; n <= 40; ++n)
        worst = std::max(worst, std::abs(P[n] - f.coeffs[n].real()));
      double rel = worst / scale;
      double res = functional_residual(f, t, w);
      return std::make_pair(rel < 1e-9 && res < 1e-10,
                            fmt("rel_err=%.3e functional_residual=%.3e", rel, res));
    }));
  }
  return out;
}

// f* = lambda_0 d/dz k(z, lambda_0): kernel route against the closed form.
std::vector<CheckResult> suite_kernel_derivative() {
  std::vector<CheckResult> out;
  for (int beta : {0, 1, 2}) {
    out.push_back(timed(fmt("kernel-derivative beta=%d", beta), 1.0, [beta] {
      CoeffSeries a = kernel_derivative_coeffs(beta, 50);
      CoeffSeries b = bergman_extremal(static_cast<double>(beta), 50);
      double scale = std::max(1.0, max_abs(b.coeffs));
      double worst = 0.0;
      for (std::size_t n = 0; n <= 50; ++n) worst = std::max(worst, std::abs(a.at(n) - b.at(n)));
      return std::make_pair(worst / scale < 1e-12, fmt("rel_err=%.3e", worst / scale));
    }));
  }
  return out;
}

// Hardy-space approximants to 1/(1-z)^a against the Beta-function formula.
std::vector<CheckResult> suite_hardy_beta() {
  std::vector<CheckResult> out;
  WeightSequence hardy = WeightSequence::hardy();

  out.push_back(timed("hardy-beta closed p_1 p_2 (a=1)", 30.0, [&] {
    std::vector<Complex> p1 = hardy_beta_approximant(1.0, 1);
    std::vector<Complex> p2 = hardy_beta_approximant(1.0, 2);
    double e = std::abs(p1[0] - 2.0 / 3.0) + std::abs(p1[1] - 1.0 / 3.0) +
               std::abs(p2[0] - 0.75) + std::abs(p2[1] - 0.5) + std::abs(p2[2] - 0.25);
    return std::make_pair(e < 1e-12, fmt("total dev=%.3e", e));
  }));

  for (int a = 1; a <= 3; ++a) {
    out.push_back(timed(fmt("hardy-beta integer a=%d n<=20", a), 30.0, [&, a] {
      CoeffSeries f = binomial_series(static_cast<double>(a), BinomialSign::Plus, a);
      double worst = 0.0;
      for (int n = 0; n <= 20; ++n) {
        Approximant p = optimal_approximant(f, hardy, n);
        std::vector<Complex> q = hardy_beta_approximant(static_cast<double>(a), n);
        for (int k = 0; k <= n; ++k)
          worst = std::max(worst, std::abs(p.coeffs[static_cast<std::size_t>(k)] -
                                           q[static_cast<std::size_t>(k)]));
      }
      return std::make_pair(worst < 1e-10, fmt("worst dev=%.3e", worst));
    }));
  }

  for (Complex a : {Complex(1.5, 0.0), Complex(2.0, 0.5)}) {
    out.push_back(timed(fmt("hardy-beta a=%g%+gi n<=20", a.real(), a.imag()), 30.0, [&, a] {
      int M = 1024;
      CoeffSeries f = binomial_series(a, BinomialSign::Plus, M);
      while (f.tail_bound >= 1e-9 && M < (1 << 21)) {
        M *= 2;
        f = binomial_series(a, BinomialSign::Plus, M);
      }
      double worst = 0.0;
      for (int n = 0; n <= 20; ++n) {
        Approximant p = optimal_approximant(f, hardy, n);
        std::vector<Complex> q = hardy_beta_approximant(a, n);
        for (int k = 0; k <= n; ++k)
          worst = std::max(worst, std::abs(p.coeffs[static_cast<std::size_t>(k)] -
                                           q[static_cast<std::size_t>(k)]));
      }
      return std::make_pair(worst < 1e-6, fmt("worst dev=%.3e M=%d", worst, M));
    }));
  }
  return out;
}

// Duality: max Theta (power iteration) = lambda_max(J_{N+1})/2 = (largest
// root of P_{N+1}) / 2.
std::vector<CheckResult> suite_duality() {
  std::vector<CheckResult> out;
  struct Case {
    const char* label;
    WeightSequence w;
  };
  const Case cases[] = {{"bergman 0", WeightSequence::bergman(0.0)},
                        {"dirichlet -2", WeightSequence::dirichlet(-2.0)}};
  for (const Case& c : cases) {
    for (std::size_t N : {5u, 10u, 20u}) {
      out.push_back(timed(fmt("duality %s N=%zu", c.label, N), 5.0, [&c, N] {
        double pi_top = power_iteration_top(c.w, N + 1) / 2.0;
        double sturm = truncated_norm(c.w, N + 1) / 2.0;
        double root = largest_monic_root(c.w, N + 1) / 2.0;
        double e1 = std::abs(pi_top - sturm), e2 = std::abs(root - sturm);
        return std::make_pair(e1 < 1e-8 && e2 < 1e-8,
                              fmt("theta_max=%.12f |pi-sturm|=%.2e |root-sturm|=%.2e", sturm,
                                  e1, e2));
      }));
    }
  }
  return out;
}

// Theta on shifted Cayley sections against the closed expression.
std::vector<CheckResult> suite_theta_witness() {
  std::vector<CheckResult> out;
  struct Case {
    const char* label;
    WeightSequence w;
  };
  const Case cases[] = {{"bergman 0", WeightSequence::bergman(0.0)},
                        {"dirichlet -3", WeightSequence::dirichlet(-3.0)},
                        {"hardy", WeightSequence::hardy()}};
  for (const Case& c : cases) {
    out.push_back(timed(fmt("theta-witness %s 5x5", c.label), 1.0, [&c] {
      double worst = 0.0;
      for (std::size_t k = 0; k < 5; ++k) {
        for (int n = 1; n <= 5; ++n) {
          double got = theta(shift(cayley_section(n), k), c.w);
          double tail = 0.0;
          for (int t = 1; t <= n; ++t) tail += c.w(static_cast<std::size_t>(t) + k + 1);
          double wk = c.w(k + 1);
          double expect =
              1.0 + (wk - 4.0 * c.w(static_cast<std::size_t>(n) + k + 1)) / (wk + 4.0 * tail);
          worst = std::max(worst, std::abs(got - expect));
        }
      }
      return std::make_pair(worst < 1e-12, fmt("worst dev=%.3e", worst));
    }));
  }
  return out;
}

// Half-norm estimates over the alpha grid against the (2/3)^{alpha/2} bound.
std::vector<CheckResult> suite_figure1() {
  std::vector<CheckResult> out;
  out.push_back(timed("figure1 alpha=0..-12", 60.0, [] {
    std::vector<double> alphas;
    for (int a = 0; a >= -12; --a) alphas.push_back(a);
    std::vector<Figure1Row> rows = figure1_rows(alphas, 1e-9);
    bool ok = true;
    std::string why;
    for (const Figure1Row& r : rows) {
      if (r.estimate > r.bound) {
        ok = false;
        why = fmt("alpha=%g estimate %.10f above bound %.10f", r.alpha, r.estimate, r.bound);
      }
      if (r.alpha < 0.0 && r.estimate <= 1.0) {
        ok = false;
        why = fmt("alpha=%g estimate %.10f not above 1", r.alpha, r.estimate);
      }
      if (r.alpha == -1.0 && std::abs(r.estimate - 1.06066017) >= 1e-7) {
        ok = false;
        why = fmt("alpha=-1 estimate %.10f off 1.06066017", r.estimate);
      }
    }
    if (ok) why = fmt("%zu rows, alpha=-1 estimate %.10f", rows.size(), rows[1].estimate);
    return std::make_pair(ok, why);
  }));
  return out;
}

// Zero-location regimes: nondecreasing weights push zeros out of the closed
// disk; Bergman 0 with f = 1-z keeps them near the circle and above the
// minimal modulus.
std::vector<CheckResult> suite_zero_location() {
  std::vector<CheckResult> out;
  struct Case {
    const char* label;
    WeightSequence w;
  };
  const Case nondec[] = {{"hardy", WeightSequence::hardy()},
                         {"dirichlet 0", WeightSequence::dirichlet(0.0)},
                         {"dirichlet 1", WeightSequence::dirichlet(1.0)}};
  for (const Case& c : nondec) {
    out.push_back(timed(fmt("zero-location nondecreasing %s", c.label), 120.0, [&c] {
      std::mt19937 rng(12345);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      double min_mod = std::numeric_limits<double>::infinity();
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Complex> fc(13);
        for (Complex& x : fc) x = Complex(u(rng), u(rng));
        while (std::abs(fc[0]) < 0.3) fc[0] = Complex(u(rng), u(rng));
        CoeffSeries f(fc);
        for (int n = 1; n <= 15; ++n) {
          RootSet rs = poly_roots(CoeffSeries(optimal_approximant(f, c.w, n).coeffs));
          for (const Complex& z : rs.roots) min_mod = std::min(min_mod, std::abs(z));
        }
      }
      return std::make_pair(min_mod > 1.0 - 1e-9, fmt("min root modulus %.12f", min_mod));
    }));
  }
  out.push_back(timed("zero-location bergman 0 f=1-z", 120.0, [] {
    WeightSequence w = WeightSequence::bergman(0.0);
    CoeffSeries f = CoeffSeries::real({1.0, -1.0});
    double floor = 2.0 * std::sqrt(2.0) / 3.0 - 1e-9;
    double prev_disc = std::numeric_limits<double>::infinity();
    bool ok = true;
    std::string why;
    for (int n : {25, 50, 100}) {
      Approximant p = optimal_approximant(f, w, n);
      RootSet rs = poly_roots(CoeffSeries(p.coeffs));
      ZeroStats st = zero_stats(rs, rs.degree_deflated, 0.05);
      if (st.geo_mean_modulus < 0.85 || st.geo_mean_modulus > 1.15) {
        ok = false;
        why = fmt("n=%d geo mean %.6f out of [0.85,1.15]", n, st.geo_mean_modulus);
      }
      if (st.angular_discrepancy >= prev_disc) {
        ok = false;
        why = fmt("n=%d discrepancy %.6f not decreasing", n, st.angular_discrepancy);
      }
      if (st.min_root_modulus < floor) {
        ok = false;
        why = fmt("n=%d min modulus %.10f below 2sqrt2/3", n, st.min_root_modulus);
      }
      prev_disc = st.angular_discrepancy;
    }
    if (ok) why = fmt("final discrepancy %.6f", prev_disc);
    return std::make_pair(ok, why);
  }));
  return out;
}

// Multi-zero construction: r zeros on one interior circle, equidistributed.
std::vector<CheckResult> suite_multizero() {
  std::vector<CheckResult> out;
  for (int r : {2, 3, 5}) {
    out.push_back(timed(fmt("multizero bergman 0 k=0 n=20 r=%d", r), 10.0, [r] {
      MultiZeroReport rep = multi_zero_example(WeightSequence::bergman(0.0), 0, 20, r);
      if (static_cast<int>(rep.roots.size()) != r)
        return std::make_pair(false, fmt("expected %d roots, got %zu", r, rep.roots.size()));
      double mod_min = std::numeric_limits<double>::infinity(), mod_max = 0.0;
      double pow_err = 0.0;
      double target = std::pow(rep.modulus_formula, r);
      for (const Complex& z : rep.roots) {
        double m = std::abs(z);
        mod_min = std::min(mod_min, m);
        mod_max = std::max(mod_max, m);
        pow_err = std::max(pow_err, std::abs(std::pow(m, r) - target));
      }
      bool ok = mod_max < 1.0 && (mod_max - mod_min) < 1e-8 && pow_err < 1e-8 &&
                rep.max_angle_gap_error < 1e-8;
      return std::make_pair(
          ok, fmt("|z0|=%.10f spread=%.2e pow_err=%.2e angle_err=%.2e", mod_max,
                  mod_max - mod_min, pow_err, rep.max_angle_gap_error));
    }));
  }
  return out;
}

// Roots of consecutive monic polynomials: real, symmetric, interlacing.
std::vector<CheckResult> suite_interlacing() {
  std::vector<CheckResult> out;
  struct Case {
    const char* label;
    WeightSequence w;
  };
  const Case cases[] = {{"bergman 0", WeightSequence::bergman(0.0)},
                        {"dirichlet -2", WeightSequence::dirichlet(-2.0)}};
  for (const Case& c : cases) {
    out.push_back(timed(fmt("interlacing %s n<=15", c.label), 5.0, [&c] {
      std::vector<std::vector<double>> P = monic_polynomials(c.w, 16);
      auto real_roots = [](const std::vector<double>& coeffs) {
        std::vector<Complex> cc(coeffs.begin(), coeffs.end());
        RootSet rs = poly_roots(cc);
        double worst_imag = 0.0;
        std::vector<double> re;
        for (const Complex& z : rs.roots) {
          worst_imag = std::max(worst_imag, std::abs(z.imag()));
          re.push_back(z.real());
        }
        std::sort(re.begin(), re.end());
        return std::make_pair(re, worst_imag);
      };
      for (int n = 1; n <= 15; ++n) {
        auto [rn, in] = real_roots(P[static_cast<std::size_t>(n)]);
        auto [rn1, in1] = real_roots(P[static_cast<std::size_t>(n) + 1]);
        if (in > 1e-9 || in1 > 1e-9)
          return std::make_pair(false, fmt("n=%d complex root, imag %.2e", n,
                                           std::max(in, in1)));
        for (std::size_t i = 0; i < rn.size(); ++i)
          if (std::abs(rn[i] + rn[rn.size() - 1 - i]) > 1e-9)
            return std::make_pair(false, fmt("n=%d not symmetric about 0", n));
        for (std::size_t i = 0; i < rn.size(); ++i)
          if (!(rn1[i] < rn[i] && rn[i] < rn1[i + 1]))
            return std::make_pair(false, fmt("n=%d interlacing violated at %zu", n, i));
      }
      return std::make_pair(true, std::string("n=1..15 real, symmetric, interlacing"));
    }));
  }
  return out;
}

struct SuiteDef {
  const char* name;
  std::vector<CheckResult> (*run)();
};

const SuiteDef kSuites[] = {
    {"bergman-norm", suite_bergman_norm},       {"minimal-zero", suite_minimal_zero},
    {"bergman-spectrum", suite_bergman_spectrum}, {"eigenfunction", suite_eigenfunction},
    {"kernel-derivative", suite_kernel_derivative}, {"hardy-beta", suite_hardy_beta},
    {"duality", suite_duality},                 {"theta-witness", suite_theta_witness},
    {"figure1", suite_figure1},                 {"zero-location", suite_zero_location},
    {"multizero", suite_multizero},             {"interlacing", suite_interlacing},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const SuiteDef& s : kSuites) names.push_back(s.name);
  names.push_back("bergman-closedform");
  names.push_back("all");
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  std::vector<CheckResult> out;
  if (name == "all") {
    for (const SuiteDef& s : kSuites) {
      std::vector<CheckResult> part = s.run();
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "bergman-closedform") {
    for (const char* sub : {"bergman-norm", "minimal-zero", "bergman-spectrum", "eigenfunction",
                            "kernel-derivative"}) {
      std::vector<CheckResult> part = run_suite(sub);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  for (const SuiteDef& s : kSuites)
    if (name == s.name) return s.run();
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<Figure1Row> figure1_rows(const std::vector<double>& alphas, double tol) {
  std::vector<Figure1Row> rows;
  for (double a : alphas) {
    Figure1Row r;
    r.alpha = a;
    NormEstimate est = norm_estimate(WeightSequence::dirichlet(a), tol);
    r.estimate = est.value / 2.0;
    r.truncation = est.truncation_size;
    r.bound = std::pow(2.0 / 3.0, a / 2.0);
    r.zero_free_radius = std::pow(1.5, a / 2.0);
    rows.push_back(r);
  }
  return rows;
}

double largest_monic_root(const WeightSequence& w, std::size_t n) {
  if (n == 0) throw std::domain_error("largest_monic_root: n must be positive");
  auto above_all = [&](double x) {
    std::vector<double> P = monic_recurrence(w, x, n);
    for (double v : P)
      if (v <= 0.0) return false;
    return true;
  };
  double hi = 2.5;
  while (!above_all(hi)) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (above_all(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace opa
