#include "fracfield/json_io.hpp"

#include <fstream>

#include "fracfield/error.hpp"

namespace fracfield {

namespace {

double num(const json& j, const char* key, double dflt) {
  if (!j.contains(key)) return dflt;
  if (!j.at(key).is_number()) throw ValidityError(std::string("'") + key + "' must be a number");
  return j.at(key).get<double>();
}

double req_num(const json& j, const char* key) {
  if (!j.contains(key)) throw ValidityError(std::string("missing '") + key + "'");
  return num(j, key, 0.0);
}

int req_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ValidityError(std::string("'") + key + "' must be an integer");
  return j.at(key).get<int>();
}

cplx complex_of(const json& j, const char* key, cplx dflt) {
  if (!j.contains(key)) return dflt;
  const json& v = j.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ValidityError(std::string("'") + key + "' must be a number or [re, im]");
}

std::vector<ParamPair> pairs_of(const json& j, const char* key) {
  std::vector<ParamPair> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) throw ValidityError(std::string("'") + key + "' must be a list of pairs");
  for (const auto& e : j.at(key)) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ValidityError(std::string("entries of '") + key + "' must be [value, scale]");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

BoundaryTransform boundary_of(const json& j, const char* key) {
  if (!j.contains(key)) return BoundaryTransform::zero();
  const json& b = j.at(key);
  if (!b.is_object() || !b.contains("preset") || !b.at("preset").is_string())
    throw ValidityError(std::string("'") + key + "' needs a string 'preset'");
  std::string p = b.at("preset").get<std::string>();
  if (p == "zero") return BoundaryTransform::zero();
  if (p == "delta") return BoundaryTransform::delta();
  if (p == "gaussian") return BoundaryTransform::gaussian(num(b, "width", 1.0));
  throw ValidityError("unknown boundary preset '" + p + "' (zero, delta, gaussian)");
}

json boundary_to_json(const BoundaryTransform& b) {
  switch (b.preset) {
    case BoundaryTransform::Preset::zero: return {{"preset", "zero"}};
    case BoundaryTransform::Preset::delta: return {{"preset", "delta"}};
    case BoundaryTransform::Preset::gaussian: return {{"preset", "gaussian"}, {"width", b.width}};
    case BoundaryTransform::Preset::custom: return {{"preset", "custom"}};
  }
  return {};
}

std::vector<double> axis_of(const json& j, const char* axis) {
  std::string list = std::string(axis) + "_list";
  if (j.contains(list)) {
    const json& v = j.at(list);
    if (!v.is_array()) throw ValidityError("'" + list + "' must be a list");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) throw ValidityError("'" + list + "' entries must be numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }
  if (!j.contains(axis)) throw ValidityError(std::string("grid needs '") + axis + "' or '" + list + "'");
  const json& u = j.at(axis);
  if (!u.is_object()) throw ValidityError(std::string("'") + axis + "' must be {start, stop, count}");
  return GridSpec::uniform(req_num(u, "start"), req_num(u, "stop"), req_int(u, "count"));
}

}  // namespace

ProblemSpec problem_from_json(const json& j) {
  if (!j.is_object()) throw ValidityError("problem must be a JSON object");
  ProblemSpec p;
  try {
    p.kind = kind_from_string(j.value("kind", std::string("laplace")));
    p.variant = variant_from_string(j.value("variant", std::string("quantum")));
  } catch (const json::exception& e) {
    throw ValidityError(std::string("kind/variant must be strings: ") + e.what());
  }
  p.sym.alpha = num(j, "alpha", 2.0);
  p.sym.theta = num(j, "theta", 0.0);
  p.ord.mu = num(j, "mu", 2.0);
  p.ord.nu = num(j, "nu", 1.0);
  p.k = num(j, "k", 0.0);
  p.f_hat = boundary_of(j, "f");
  p.g_hat = boundary_of(j, "g");
  if (j.contains("source")) {
    const json& s = j.at("source");
    if (!s.is_object() || !s.contains("preset") || !s.at("preset").is_string())
      throw ValidityError("'source' needs a string 'preset'");
    std::string ps = s.at("preset").get<std::string>();
    if (ps == "zero") p.source.preset = SourceSpec::Preset::zero;
    else if (ps == "delta_delta") p.source.preset = SourceSpec::Preset::delta_delta;
    else if (ps == "delta_power") {
      p.source.preset = SourceSpec::Preset::delta_power;
      p.source.beta = req_num(s, "beta");
    } else {
      throw ValidityError("unknown source preset '" + ps + "' (zero, delta_delta, delta_power)");
    }
  }
  validate(p);
  return p;
}

json problem_to_json(const ProblemSpec& p) {
  json j = {{"kind", to_string(p.kind)}, {"variant", to_string(p.variant)},
            {"alpha", p.sym.alpha},      {"theta", p.sym.theta},
            {"mu", p.ord.mu},            {"nu", p.ord.nu},
            {"k", p.k},                  {"f", boundary_to_json(p.f_hat)},
            {"g", boundary_to_json(p.g_hat)}};
  switch (p.source.preset) {
    case SourceSpec::Preset::zero: j["source"] = {{"preset", "zero"}}; break;
    case SourceSpec::Preset::delta_delta: j["source"] = {{"preset", "delta_delta"}}; break;
    case SourceSpec::Preset::delta_power:
      j["source"] = {{"preset", "delta_power"}, {"beta", p.source.beta}};
      break;
    case SourceSpec::Preset::custom: j["source"] = {{"preset", "custom"}}; break;
  }
  return j;
}

GridSpec grid_from_json(const json& j) {
  if (!j.is_object()) throw ValidityError("grid must be a JSON object");
  GridSpec g;
  g.x = axis_of(j, "x");
  g.y = axis_of(j, "y");
  for (double y : g.y)
    if (!(y > 0)) throw ValidityError("grid y values must be strictly positive");
  return g;
}

HFunctionSpec hspec_from_json(const json& j) {
  if (!j.is_object()) throw ValidityError("H-function spec must be a JSON object");
  HFunctionSpec s;
  s.m = req_int(j, "m");
  s.n = req_int(j, "n");
  s.p = req_int(j, "p");
  s.q = req_int(j, "q");
  s.upper = pairs_of(j, "upper");
  s.lower = pairs_of(j, "lower");
  s.prefactor = complex_of(j, "prefactor", {1.0, 0.0});
  s.arg_power = num(j, "arg_power", 1.0);
  s.arg_scale = complex_of(j, "arg_scale", {1.0, 0.0});
  s.coef_power = num(j, "coef_power", 0.0);
  validate(s);
  return s;
}

json hspec_to_json(const HFunctionSpec& s) {
  json up = json::array(), lo = json::array();
  for (auto [a, A] : s.upper) up.push_back({a, A});
  for (auto [b, B] : s.lower) lo.push_back({b, B});
  json j = {{"m", s.m},
            {"n", s.n},
            {"p", s.p},
            {"q", s.q},
            {"upper", up},
            {"lower", lo},
            {"prefactor", {s.prefactor.real(), s.prefactor.imag()}},
            {"arg_power", s.arg_power},
            {"arg_scale", {s.arg_scale.real(), s.arg_scale.imag()}}};
  if (s.coef_power != 0.0) j["coef_power"] = s.coef_power;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidityError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidityError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace fracfield
