// Command-line surface: reproducible experiments over the weighted-space
// approximation toolkit, CSV or JSON output with the resolved configuration
// embedded in every run.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "opa/closedform.hpp"
#include "opa/gram.hpp"
#include "opa/jacobi.hpp"
#include "opa/jentzsch.hpp"
#include "opa/json_io.hpp"
#include "opa/roots.hpp"
#include "opa/series.hpp"
#include "opa/verify.hpp"
#include "opa/weights.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using opa::Complex;
using nlohmann::json;

std::string g15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

// All emitted floats carry 15 significant digits, JSON included.
void round_floats(nlohmann::json& j) {
  if (j.is_number_float())
    j = std::strtod(g15(j.get<double>()).c_str(), nullptr);
  else if (j.is_object() || j.is_array())
    for (auto& item : j) round_floats(item);
}

opa::WeightSequence parse_space(const std::string& spec) {
  if (spec == "hardy") return opa::WeightSequence::hardy();
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
    if (kind == "dirichlet") return opa::WeightSequence::dirichlet(std::stod(arg));
    if (kind == "bergman") return opa::WeightSequence::bergman(std::stod(arg));
    if (kind == "custom") return opa::weights_from_file(arg);
  }
  throw std::invalid_argument("bad --space '" + spec +
                              "' (hardy | dirichlet:a | bergman:b | custom:<file>)");
}

Complex parse_complex(const std::string& s) {
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char sep = 0;
  in >> re;
  if (!in) throw std::invalid_argument("bad complex literal '" + s + "'");
  if (in >> sep) {
    if (sep != ',') throw std::invalid_argument("bad complex literal '" + s + "'");
    in >> im;
  }
  return {re, im};
}

opa::CoeffSeries parse_function(const std::string& spec) {
  if (spec == "one_minus_z") return opa::CoeffSeries::real({1.0, -1.0});
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "one_minus_z_pow") {
    Complex a = parse_complex(arg);
    double ip;
    if (a.imag() == 0.0 && std::modf(a.real(), &ip) == 0.0 && a.real() > 0.0)
      return opa::binomial_series(a, opa::BinomialSign::Plus, static_cast<int>(a.real()));
    int M = 1024;
    opa::CoeffSeries f = opa::binomial_series(a, opa::BinomialSign::Plus, M);
    while (f.tail_bound >= 1e-9 && M < (1 << 21)) {
      M *= 2;
      f = opa::binomial_series(a, opa::BinomialSign::Plus, M);
    }
    return f;
  }
  if (kind == "cayley") {
    int k = 0, n = 0;
    if (std::sscanf(arg.c_str(), "%d,%d", &k, &n) != 2 || k < 0 || n < 1)
      throw std::invalid_argument("cayley wants k,n");
    return opa::shift(opa::cayley_section(n), static_cast<std::size_t>(k));
  }
  if (kind == "bergman_extremal") {
    double beta = std::stod(arg);
    int N = 40;
    opa::CoeffSeries f = opa::bergman_extremal(beta, N);
    while (f.tail_bound >= 1e-12 && N < 4000) {
      N += 40;
      f = opa::bergman_extremal(beta, N);
    }
    return f;
  }
  if (kind == "coeffs") {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open coefficient file: " + arg);
    json j;
    in >> j;
    return opa::series_from_json(j);
  }
  throw std::invalid_argument("bad --function '" + spec + "'");
}

// "a..b" with unit steps in either direction, or a single value.
std::vector<double> parse_alphas(const std::string& spec) {
  auto dots = spec.find("..", 1);  // skip a possible leading minus sign
  std::vector<double> out;
  if (dots == std::string::npos) {
    out.push_back(std::stod(spec));
    return out;
  }
  double a = std::stod(spec.substr(0, dots)), b = std::stod(spec.substr(dots + 2));
  double step = a <= b ? 1.0 : -1.0;
  for (double x = a; step > 0 ? x <= b + 0.5 : x >= b - 0.5; x += step) out.push_back(x);
  return out;
}

std::vector<int> parse_degrees(const std::string& spec) {
  auto dots = spec.find("..");
  std::vector<int> out;
  if (dots == std::string::npos) {
    out.push_back(std::stoi(spec));
    return out;
  }
  int a = std::stoi(spec.substr(0, dots)), b = std::stoi(spec.substr(dots + 2));
  for (int d = a; d <= b; ++d) out.push_back(d);
  return out;
}

struct Output {
  std::string path;    // empty = stdout
  std::string format;  // "csv" or "json"
  std::string config;  // resolved flag set

  std::ostream& stream(std::ofstream& file) const {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
  }

  void emit_csv(const std::vector<std::string>& columns,
                const std::vector<std::vector<std::string>>& rows) const {
    std::ofstream file;
    std::ostream& os = stream(file);
    os << "# opa " << kVersion << "\n# config: " << config << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
      os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        os << row[i] << (i + 1 < row.size() ? "," : "\n");
  }

  void emit_json(json payload) const {
    payload["tool"] = "opa";
    payload["version"] = kVersion;
    payload["config"] = config;
    round_floats(payload);
    std::ofstream file;
    std::ostream& os = stream(file);
    os << payload.dump(2) << "\n";
  }

  void emit_table(const std::vector<std::string>& columns,
                  const std::vector<std::vector<std::string>>& rows,
                  const std::string& json_key) const {
    if (format == "csv") {
      emit_csv(columns, rows);
      return;
    }
    json arr = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
      arr.push_back(obj);
    }
    emit_json(json{{json_key, arr}});
  }
};

json roots_json(const std::vector<Complex>& roots) {
  json arr = json::array();
  for (const Complex& z : roots)
    arr.push_back({{"re", z.real()}, {"im", z.imag()}, {"modulus", std::abs(z)}});
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal polynomial approximants in weighted Hardy spaces"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string space = "hardy", function = "one_minus_z", out_path, format = "csv";
  std::string degrees_spec = "1..10", suite = "all", alphas_spec = "0..-12";
  double tol = 1e-9, eps = 0.05;
  int degree = 10, count = 4, mz_k = 0, mz_n = 20, mz_r = 2;

  auto add_common = [&](CLI::App* cmd, bool wants_function) {
    cmd->add_option("--space", space, "hardy | dirichlet:a | bergman:b | custom:<file>");
    if (wants_function)
      cmd->add_option("--function", function,
                      "one_minus_z | one_minus_z_pow:a | cayley:k,n | "
                      "bergman_extremal:beta | coeffs:<file>");
    cmd->add_option("--tol", tol, "numerical tolerance");
    cmd->add_option("--out", out_path, "output path (default stdout)");
    cmd->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* cmd_norm = app.add_subcommand("norm", "Jacobi-matrix norm and minimal zero modulus");
  add_common(cmd_norm, false);

  CLI::App* cmd_fig = app.add_subcommand("figure1", "half-norm estimates over an alpha grid");
  add_common(cmd_fig, false);
  cmd_fig->add_option("--alphas", alphas_spec, "grid a..b (unit steps) or a single value");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run a named acceptance suite");
  cmd_verify->add_option("suite", suite, "suite name or 'all'");
  cmd_verify->add_option("--out", out_path, "output path (default stdout)");
  cmd_verify->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* cmd_approx = app.add_subcommand("approximant", "optimal approximant and its roots");
  add_common(cmd_approx, true);
  cmd_approx->add_option("--degree", degree, "approximant degree");

  CLI::App* cmd_spec = app.add_subcommand("spectrum", "stable point spectrum above 2");
  add_common(cmd_spec, false);
  cmd_spec->add_option("--count", count, "maximum number of eigenvalues");

  CLI::App* cmd_ext = app.add_subcommand("extremal", "extremal function coefficients");
  add_common(cmd_ext, false);
  cmd_ext->add_option("--degree", degree, "truncation degree");

  CLI::App* cmd_jz = app.add_subcommand("jentzsch", "zero statistics across degrees");
  add_common(cmd_jz, true);
  cmd_jz->add_option("--degrees", degrees_spec, "degree range a..b");
  cmd_jz->add_option("--eps", eps, "radius slack for the tau statistic");

  CLI::App* cmd_mz = app.add_subcommand("multizero", "multi-zero construction report");
  add_common(cmd_mz, false);
  cmd_mz->add_option("--k", mz_k, "shift of the Cayley section");
  cmd_mz->add_option("--n", mz_n, "Cayley section degree");
  cmd_mz->add_option("--r", mz_r, "zero multiplicity / grid spacing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // malformed flags are bad input
  }

  Output out;
  out.path = out_path;
  out.format = format;

  try {
    if (*cmd_norm) {
      out.config = "norm --space " + space + " --tol " + g15(tol);
      opa::WeightSequence w = parse_space(space);
      opa::NormEstimate est = opa::norm_estimate(w, tol);
      double u = est.value / 2.0;
      std::string regime = est.value > 2.0 + 10.0 * tol ? "supercritical" : "boundary";
      out.emit_table({"norm", "u_omega", "min_zero_modulus", "truncation", "regime"},
                     {{g15(est.value), g15(u), g15(1.0 / u),
                       std::to_string(est.truncation_size), regime}},
                     "norm");
    } else if (*cmd_fig) {
      out.config = "figure1 --alphas " + alphas_spec + " --tol " + g15(tol);
      std::vector<double> alphas = parse_alphas(alphas_spec);
      std::vector<opa::Figure1Row> rows = opa::figure1_rows(alphas, tol);
      std::vector<std::vector<std::string>> table;
      for (const opa::Figure1Row& r : rows)
        table.push_back({g15(r.alpha), g15(r.estimate), g15(r.bound), g15(r.zero_free_radius),
                         std::to_string(r.truncation)});
      out.emit_table({"alpha", "estimate", "bound", "zero_free_radius", "truncation"}, table,
                     "rows");
    } else if (*cmd_verify) {
      out.config = "verify " + suite;
      std::vector<opa::CheckResult> results;
      try {
        results = opa::run_suite(suite);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      bool all_pass = true;
      if (format == "json") {
        json arr = json::array();
        for (const opa::CheckResult& r : results) {
          arr.push_back({{"name", r.name},
                         {"pass", r.pass},
                         {"detail", r.detail},
                         {"seconds", r.seconds}});
          all_pass = all_pass && r.pass;
        }
        out.emit_json(json{{"suite", suite}, {"checks", arr}, {"pass", all_pass}});
      } else {
        for (const opa::CheckResult& r : results) {
          std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail
                    << ")  [" << g15(r.seconds) << "s]\n";
          all_pass = all_pass && r.pass;
        }
      }
      return all_pass ? 0 : 1;
    } else if (*cmd_approx) {
      out.config = "approximant --space " + space + " --function " + function + " --degree " +
                   std::to_string(degree);
      opa::WeightSequence w = parse_space(space);
      opa::CoeffSeries f = parse_function(function);
      opa::Approximant p = opa::optimal_approximant(f, w, degree);
      opa::RootSet rs = opa::poly_roots(opa::CoeffSeries(p.coeffs));
      p.roots = rs.roots;
      if (format == "json") {
        json j = opa::to_json(p);
        j["roots"] = roots_json(rs.roots);
        out.emit_json(std::move(j));
      } else {
        std::vector<std::vector<std::string>> table;
        for (std::size_t k = 0; k < p.coeffs.size(); ++k)
          table.push_back({std::to_string(k), g15(p.coeffs[k].real()), g15(p.coeffs[k].imag())});
        out.config += " residual " + g15(p.residual_norm);
        out.emit_csv({"k", "re", "im"}, table);
      }
    } else if (*cmd_spec) {
      out.config = "spectrum --space " + space + " --tol " + g15(tol) + " --count " +
                   std::to_string(count);
      opa::WeightSequence w = parse_space(space);
      std::vector<double> ev =
          opa::point_spectrum_above_2(w, tol, static_cast<std::size_t>(count));
      std::vector<std::vector<std::string>> table;
      for (std::size_t m = 0; m < ev.size(); ++m)
        table.push_back({std::to_string(m), g15(ev[m])});
      out.emit_table({"m", "eigenvalue"}, table, "eigenvalues");
    } else if (*cmd_ext) {
      out.config = "extremal --space " + space + " --degree " + std::to_string(degree) +
                   " --tol " + g15(tol);
      opa::WeightSequence w = parse_space(space);
      opa::CoeffSeries f = w.kind() == opa::WeightSequence::Kind::Bergman
                               ? opa::bergman_extremal(w.parameter(), degree)
                               : opa::extremal_coeffs(w, static_cast<std::size_t>(degree), tol);
      if (format == "json") {
        out.emit_json(json{{"series", opa::to_json(f)}});
      } else {
        std::vector<std::vector<std::string>> table;
        for (std::size_t k = 0; k < f.coeffs.size(); ++k)
          table.push_back({std::to_string(k), g15(f.coeffs[k].real())});
        out.emit_csv({"k", "coeff"}, table);
      }
    } else if (*cmd_jz) {
      out.config = "jentzsch --space " + space + " --function " + function + " --degrees " +
                   degrees_spec + " --eps " + g15(eps);
      opa::WeightSequence w = parse_space(space);
      opa::CoeffSeries f = parse_function(function);
      std::vector<int> degrees = parse_degrees(degrees_spec);
      std::vector<opa::SweepRow> rows = opa::jentzsch_sweep(f, w, degrees, eps);
      std::vector<std::vector<std::string>> table;
      for (const opa::SweepRow& r : rows) {
        if (r.constant_approximant) continue;
        table.push_back({std::to_string(r.degree), g15(r.stats.tau_eps_fraction),
                         g15(r.stats.geo_mean_modulus), g15(r.stats.angular_discrepancy),
                         std::to_string(r.stats.count_in_unit_disk),
                         g15(r.stats.min_root_modulus)});
      }
      out.emit_table({"degree", "tau_eps_fraction", "geo_mean_modulus", "angular_discrepancy",
                      "count_in_unit_disk", "min_root_modulus"},
                     table, "rows");
    } else if (*cmd_mz) {
      out.config = "multizero --space " + space + " --k " + std::to_string(mz_k) + " --n " +
                   std::to_string(mz_n) + " --r " + std::to_string(mz_r);
      opa::WeightSequence w = parse_space(space);
      opa::MultiZeroReport rep = opa::multi_zero_example(w, mz_k, mz_n, mz_r);
      if (format == "json") {
        json j = {{"approximant", opa::to_json(rep.approximant)},
                  {"roots", roots_json(rep.roots)},
                  {"weights_decreasing", rep.weights_decreasing},
                  {"gap_condition", rep.gap_condition},
                  {"max_offgrid_coeff", rep.max_offgrid_coeff},
                  {"modulus_formula", rep.modulus_formula},
                  {"max_modulus_error", rep.max_modulus_error},
                  {"max_angle_gap_error", rep.max_angle_gap_error}};
        out.emit_json(std::move(j));
      } else {
        std::vector<std::vector<std::string>> table;
        for (const Complex& z : rep.roots)
          table.push_back({g15(z.real()), g15(z.imag()), g15(std::abs(z))});
        out.config += " modulus_formula " + g15(rep.modulus_formula);
        out.emit_csv({"re", "im", "modulus"}, table);
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
