#include "swb/serialize.hpp"

#include <algorithm>

namespace swb {

Json to_json(const Rational& r) { return to_fraction_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("expected a rational as \"num/den\" or an integer");
}

Json to_json(const MultiPoly& p) {
  Json j;
  j["vars"] = p.vars()->names;
  j["laurent"] = p.vars()->laurent;
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

MultiPoly poly_from_json(const Json& j, VarSetPtr vars) {
  if (!j.is_object() || !j.contains("terms")) throw Error("polynomial JSON needs a \"terms\" array");
  if (!vars) {
    if (!j.contains("vars")) throw Error("polynomial JSON needs \"vars\"");
    auto names = j.at("vars").get<std::vector<std::string>>();
    auto laurent = j.contains("laurent") ? j.at("laurent").get<std::vector<bool>>()
                                         : std::vector<bool>(names.size(), true);
    vars = make_vars(names, laurent);
  }
  MultiPoly p(vars);
  for (const auto& t : j.at("terms")) {
    Exponent e = t.at("exp").get<Exponent>();
    Integer num(t.at("num").get<std::string>());
    Integer den(t.at("den").get<std::string>());
    p.add_term(e, make_rational(num, den));
  }
  return p;
}

Json to_json(const RationalSeries& s) {
  Json j;
  j["num"] = to_json(s.num());
  j["den"] = to_json(s.den());
  return j;
}

RationalSeries series_from_json(const Json& j) {
  MultiPoly num = poly_from_json(j.at("num"));
  MultiPoly den = poly_from_json(j.at("den"), num.vars());
  return RationalSeries(std::move(num), std::move(den));
}

Json canonical(const Json& j) {
  if (j.is_object()) {
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    Json out = Json::object();
    for (const auto& k : keys) out[k] = canonical(j.at(k));
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(canonical(v));
    return out;
  }
  return j;
}

std::string dump_canonical(const Json& j, int indent) { return canonical(j).dump(indent); }

}  // namespace swb
