#include "opa/json_io.hpp"

#include <fstream>

namespace opa {

using nlohmann::json;

json to_json(const CoeffSeries& s) {
  json j;
  std::vector<double> re(s.coeffs.size()), im(s.coeffs.size());
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    re[i] = s.coeffs[i].real();
    im[i] = s.coeffs[i].imag();
  }
  j["re"] = re;
  j["im"] = im;
  if (s.exact())
    j["tail_bound"] = "exact";
  else
    j["tail_bound"] = s.tail_bound;
  return j;
}

CoeffSeries series_from_json(const json& j) {
  std::vector<double> re = j.at("re").get<std::vector<double>>();
  std::vector<double> im =
      j.contains("im") ? j.at("im").get<std::vector<double>>() : std::vector<double>(re.size());
  if (re.size() != im.size())
    throw std::invalid_argument("series_from_json: re/im length mismatch");
  CoeffSeries s;
  s.coeffs.resize(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) s.coeffs[i] = Complex(re[i], im[i]);
  if (j.contains("tail_bound") && !j.at("tail_bound").is_string())
    s.tail_bound = j.at("tail_bound").get<double>();
  return s;
}

json to_json(const Approximant& a) {
  json j;
  j["degree"] = a.degree;
  std::vector<double> re(a.coeffs.size()), im(a.coeffs.size());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    re[i] = a.coeffs[i].real();
    im[i] = a.coeffs[i].imag();
  }
  j["coeffs"] = {{"re", re}, {"im", im}};
  j["residual_norm"] = a.residual_norm;
  if (!a.roots.empty()) {
    std::vector<double> rre(a.roots.size()), rim(a.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
      rre[i] = a.roots[i].real();
      rim[i] = a.roots[i].imag();
    }
    j["roots"] = {{"re", rre}, {"im", rim}};
  }
  return j;
}

WeightSequence weights_from_json(const json& j) {
  if (!j.contains("tail"))
    throw std::invalid_argument("custom weights: a tail rule is required");
  std::vector<double> prefix = j.at("prefix").get<std::vector<double>>();
  const json& t = j.at("tail");
  TailRule rule;
  std::string type = t.at("type").get<std::string>();
  if (type == "ratio") {
    rule.type = TailRule::Type::Ratio;
    rule.ratio = t.at("ratio").get<double>();
  } else if (type == "formula") {
    rule.type = TailRule::Type::Power;
    rule.scale = t.at("scale").get<double>();
    rule.exponent = t.at("exponent").get<double>();
  } else {
    throw std::invalid_argument("custom weights: unknown tail type '" + type + "'");
  }
  std::size_t from = j.value("ratio_check_from", std::size_t(0));
  return WeightSequence::custom(std::move(prefix), rule, from);
}

WeightSequence weights_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weights file: " + path);
  json j;
  in >> j;
  return weights_from_json(j);
}

}  // namespace opa
