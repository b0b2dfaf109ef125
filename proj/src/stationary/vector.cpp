#include <cstdlib>
#include <string>

#include "dasep/error.hpp"
#include "dasep/stationary.hpp"
#include "json.hpp"

namespace dasep {

std::optional<std::size_t> StationaryVector::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == label) return i;
  return std::nullopt;
}

const BivarPoly& StationaryVector::operator[](const std::string& label) const {
  auto idx = index_of(label);
  if (!idx) throw Error(ErrorCode::IndexMismatch, "no state " + label);
  if (mode != Mode::symbolic) throw Error(ErrorCode::IndexMismatch, "point-mode vector has no polynomial entries");
  return polys[*idx];
}

StationaryVector StationaryVector::symbolic(std::vector<std::string> states, std::vector<BivarPoly> polys,
                                            Normalization norm) {
  if (states.size() != polys.size())
    throw Error(ErrorCode::IndexMismatch, "state and entry counts differ");
  StationaryVector v;
  v.states = std::move(states);
  v.polys = std::move(polys);
  v.normalization = norm;
  return v;
}

std::string StationaryVector::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < states.size(); ++i)
    out[states[i]] = mode == Mode::symbolic ? polys[i].to_string() : values[i].to_string();
  return out.dump(2);
}

StationaryVector StationaryVector::from_json(const std::string& text) {
  nlohmann::ordered_json in;
  try {
    in = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!in.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object of state -> polynomial");
  StationaryVector v;
  for (const auto& [state, value] : in.items()) {
    if (!value.is_string()) throw Error(ErrorCode::ParseError, "entry for " + state + " is not a string");
    v.states.push_back(state);
    v.polys.push_back(BivarPoly::parse(value.get<std::string>()));
  }
  return v;
}

StationaryVector normalize_gcd_one(StationaryVector v) {
  if (v.mode != StationaryVector::Mode::symbolic)
    throw Error(ErrorCode::InvalidParams, "gcd normalization needs a symbolic vector");
  const Integer den = denominator_lcm(v.polys);
  for (auto& p : v.polys) p *= Rational(den);
  const BivarPoly g = poly_content_gcd(v.polys);
  if (!g.is_constant())
    for (auto& p : v.polys) p = poly_exact_div(p, g);
  const Integer content = integer_content(v.polys);
  const Rational scale = Rational(Integer(1), content);
  for (auto& p : v.polys) p *= scale;
  for (const auto& p : v.polys) {
    const Rational at_one = p.eval(1, 1);
    if (at_one.is_zero()) continue;
    if (at_one.sign() < 0)
      for (auto& q : v.polys) q = -q;
    break;
  }
  v.normalization = Normalization::gcd_one;
  return v;
}

StationaryVector evaluate_normalized(const StationaryVector& v, const Rational& u0, const Rational& t0) {
  StationaryVector out;
  out.states = v.states;
  out.mode = StationaryVector::Mode::point;
  out.normalization = Normalization::prob_one;
  out.point = std::make_pair(u0, t0);
  Rational total;
  if (v.mode == StationaryVector::Mode::symbolic) {
    for (const auto& p : v.polys) out.values.push_back(p.eval(u0, t0));
  } else {
    out.values = v.values;
  }
  for (const auto& x : out.values) total += x;
  if (total.is_zero()) throw Error(ErrorCode::InvalidParams, "entries sum to zero at the requested point");
  for (auto& x : out.values) x /= total;
  return out;
}

namespace {

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size() || value == 0) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidParams, std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
}

}  // namespace

SolverOptions SolverOptions::from_env() {
  SolverOptions o;
  o.state_cap = env_number("DASEP_STATE_CAP", o.state_cap);
  o.degree_cap = static_cast<std::uint32_t>(env_number("DASEP_DEGREE_CAP", o.degree_cap));
  return o;
}

}  // namespace dasep
