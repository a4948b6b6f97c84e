#include "chebsqrt/serialize.hpp"

#include <json.hpp>
#include <sstream>

#include "chebsqrt/errors.hpp"

namespace chebsqrt {

using nlohmann::ordered_json;

namespace {

ordered_json poly_json(const Polynomial& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

std::string sign_char(int s) { return s < 0 ? "-" : (s > 0 ? "+" : "0"); }

}  // namespace

std::string polynomial_to_json(const Polynomial& p) { return poly_json(p).dump(); }

Polynomial polynomial_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be a JSON array");
  std::vector<Rational> cs;
  for (const auto& item : j) {
    if (!item.is_string()) throw Error(Errc::ParseError, "polynomial coefficients must be strings");
    cs.push_back(parse_rational(item.get<std::string>()));
  }
  return Polynomial(std::move(cs));
}

std::string iterate_to_json(const IterationScheme& scheme, unsigned k, const RationalFunction& f) {
  ordered_json j;
  j["scheme"] = scheme.name();
  j["p"] = scheme.p;
  j["k"] = k;
  j["num"] = poly_json(f.num());
  j["den"] = poly_json(f.den());
  return j.dump();
}

std::string partial_fraction_to_json(const PartialFractionForm& pf) {
  ordered_json j;
  j["n"] = pf.n;
  j["scale"] = to_string(pf.scale);
  ordered_json terms = ordered_json::array();
  for (const auto& t : pf.terms) terms.push_back({{"weight", to_string(t.weight)}, {"pole_param", to_string(t.pole_param)}});
  j["terms"] = std::move(terms);
  j["precision_bits"] = pf.precision;
  return j.dump();
}

std::string nodes_to_json(const std::vector<BigFloat>& nodes) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : nodes) arr.push_back(to_string(x));
  return arr.dump();
}

std::string coeff_report_to_csv(const CoeffReport& report) {
  std::ostringstream out;
  out << "n,m,value,source,sign\n";
  for (const auto& e : report.coeffs) {
    std::string value = std::holds_alternative<Rational>(e.value) ? to_string(std::get<Rational>(e.value))
                                                                  : to_string(std::get<BigFloat>(e.value));
    out << report.n << ',' << e.m << ',' << value << ',' << to_string(e.source) << ',' << sign_char(e.sign()) << '\n';
  }
  return out.str();
}

std::string check_result_to_json(const CheckResult& r) {
  ordered_json j;
  j["name"] = r.name;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  j["passed"] = r.passed();
  j["samples"] = r.samples;
  j["worst_case"] = {{"input", r.worst_case.input}, {"observed", r.worst_case.observed}, {"bound", r.worst_case.bound}};
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

std::string guo_report_to_json(const GuoReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["scheme"] = r.scheme.name();
  j["k"] = r.k;
  j["M"] = r.max_index;
  j["coeffs_checked"] = r.coeffs_checked;
  j["head_agreement_length"] = r.head_agreement_length;
  j["claimed_head_length"] = r.claimed_head_length;
  if (r.first_sign_violation) {
    j["first_sign_violation"] = *r.first_sign_violation;
  } else {
    j["first_sign_violation"] = nullptr;
  }
  j["negative"] = r.negative_count;
  j["zero"] = r.zero_count;
  j["positive"] = r.positive_count;
  return j.dump();
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace chebsqrt
