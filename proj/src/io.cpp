#include "twistkit/io.hpp"

#include <fstream>
#include <sstream>

#include "twistkit/errors.hpp"

namespace twistkit {

namespace {

constexpr const char* kCandidateFormat = "twistkit-candidate";
constexpr const char* kSolutionFormat = "twistkit-solution";

Json monomial_json(const PBWMonomial& m) { return Json{{"e", m.e}, {"f", m.f}, {"d", m.d}}; }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("JSON: missing field \"") + name + "\"");
  return j.at(name);
}

std::uint32_t exponent(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InputError(std::string("JSON: \"") + name + "\" must be a nonnegative integer");
  const auto x = v.get<unsigned long long>();
  if (x >= 1024) throw InputError(std::string("JSON: \"") + name + "\" exceeds supported range");
  return static_cast<std::uint32_t>(x);
}

PBWMonomial monomial_from_json(const Json& j) { return {exponent(j, "e"), exponent(j, "f"), exponent(j, "d")}; }

std::string integer_text(const Json& v, const char* name) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError(std::string("JSON: \"") + name + "\" must be an integer string");
}

}  // namespace

Json to_json(const Rational& q) { return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

Json to_json(const HSeries<Rational>& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Element& x) {
  Json out = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    Json t = monomial_json(it->first);
    t["num"] = it->second.get_num().get_str();
    t["den"] = it->second.get_den().get_str();
    out.push_back(std::move(t));
  }
  return out;
}

Json to_json(const TensorElement& x) {
  Json out = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    Json t{{"left", monomial_json(it->first[0])}, {"right", monomial_json(it->first[1])}};
    t["num"] = it->second.get_num().get_str();
    t["den"] = it->second.get_den().get_str();
    out.push_back(std::move(t));
  }
  return out;
}

Json to_json(const TwistCandidate& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.series.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"format", kCandidateFormat}, {"order", f.order()}, {"coefficients", std::move(coeffs)}};
}

std::string solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::solved: return "solved";
    case SolveStatus::infeasible_at_cutoff: return "infeasible-at-cutoff";
    case SolveStatus::inconsistent: return "inconsistent";
  }
  return "unknown";
}

Json to_json(const SolutionSet& s) {
  Json basis = Json::array();
  for (const auto& b : s.homogeneous_basis) basis.push_back(to_json(b));
  Json out{{"order", s.order},
           {"cutoffL", s.cutoff_l},
           {"cutoffD", s.cutoff_d},
           {"status", solve_status_name(s.status)},
           {"particular", to_json(s.particular)},
           {"homogeneous_basis", std::move(basis)},
           {"pivot_log", s.pivot_log}};
  if (!s.message.empty()) out["message"] = s.message;
  return out;
}

Json to_json(const RepMatrix& m) {
  std::size_t n = 0;
  for (const auto& c : m.coeffs()) n = std::max(n, c.dim());
  Json rows = Json::array();
  for (std::size_t r = 0; r < n; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(to_json(entry(m, r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", n}, {"order", m.order()}, {"rows", std::move(rows)}};
}

Rational rational_from_json(const Json& j) {
  const std::string num = integer_text(field(j, "num"), "num");
  const std::string den = integer_text(field(j, "den"), "den");
  return parse_rational(num + "/" + den);
}

Element element_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("JSON: element must be an array of terms");
  Element out;
  for (const auto& t : j) out.add_term(monomial_from_json(t), rational_from_json(t));
  return out;
}

TensorElement tensor_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("JSON: tensor must be an array of terms");
  TensorElement out;
  for (const auto& t : j)
    out.add_term({monomial_from_json(field(t, "left")), monomial_from_json(field(t, "right"))}, rational_from_json(t));
  return out;
}

TwistCandidate candidate_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("JSON: candidate must be an object");
  if (j.contains("format") && j.at("format") == kSolutionFormat) return candidate_from_json(field(j, "candidate"));
  if (j.contains("format") && j.at("format") != kCandidateFormat) throw InputError("JSON: unknown document format");
  const Json& coeffs = field(j, "coefficients");
  if (!coeffs.is_array() || coeffs.empty()) throw InputError("JSON: \"coefficients\" must be a nonempty array");
  std::vector<TensorElement> c;
  for (const auto& t : coeffs) c.push_back(tensor_from_json(t));
  return {HSeries<TensorElement>(std::move(c))};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("JSON: ") + e.what());
  }
}

TwistCandidate load_candidate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return candidate_from_json(parse_json(text.str()));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("JSON: ") + e.what());
  }
}

}  // namespace twistkit
