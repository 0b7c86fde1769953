#include "qsimplex/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qsimplex {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kIndent = 2;

Json vec(const CVec& c) { return Json::array({c.c1, c.c2, c.c3}); }
Json vec(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

// JSON has no NaN; missing values become null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json point_json(const ClassifiedPoint& p) {
  Json j;
  j["c"] = vec(p.c);
  j["n"] = p.n;
  j["label"] = std::string(to_string(p.label));
  j["physical"] = p.physical;
  j["separable"] = p.separable;
  j["entangled"] = p.entangled;
  j["bound_entangled"] = p.bound_entangled;
  j["bell_violating"] = p.bell_violating;
  j["purity"] = p.purity;
  j["mixedness"] = p.mixedness;
  j["entanglement"] = p.entanglement;
  return j;
}

Json setting_json(const BellSetting& s) {
  Json j;
  j["a"] = vec(s.a);
  j["a_prime"] = vec(s.a_prime);
  j["b"] = vec(s.b);
  j["b_prime"] = vec(s.b_prime);
  return j;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  // Guard against a locale with a decimal comma.
  for (char* p = buf; *p; ++p)
    if (*p == ',') *p = '.';
  return buf;
}

std::string to_json(const ClassifiedPoint& p) { return point_json(p).dump(kIndent); }

std::string to_json(const Ensemble& e) {
  Json terms = Json::array();
  for (const ProductTerm& t : e.terms) {
    Json bloch = Json::array();
    for (const Vec3& r : t.bloch) bloch.push_back(vec(r));
    terms.push_back(Json{{"weight", t.weight}, {"bloch", bloch}});
  }
  return terms.dump(kIndent);
}

std::string to_json(const ProtocolTrace& t) {
  Json j;
  j["n"] = t.n;
  j["convention"] = std::string(to_string(t.convention));
  j["map_convention"] = std::string(to_string(t.map_convention));
  j["converged"] = t.converged;
  j["fixed_point"] = vec(t.fixed_point);
  Json steps = Json::array();
  for (const ProtocolStep& s : t.steps) {
    steps.push_back(Json{{"c_in", vec(s.c_in)},
                         {"c_out", vec(s.c_out)},
                         {"probability", s.success_probability},
                         {"e_in", s.e_in},
                         {"e_out", s.e_out}});
  }
  j["steps"] = steps;
  return j.dump(kIndent);
}

std::string to_json(const BellSetting& s) { return setting_json(s).dump(kIndent); }

std::string grid_to_csv(std::span<const ClassifiedPoint> points) {
  std::ostringstream os;
  os << "c1,c2,c3,n,physical,separable,bound,bell,purity,mixedness,entanglement\r\n";
  for (const ClassifiedPoint& p : points) {
    os << format_number(p.c.c1) << ',' << format_number(p.c.c2) << ',' << format_number(p.c.c3)
       << ',' << p.n << ',' << flag(p.physical) << ',' << flag(p.separable) << ','
       << flag(p.bound_entangled) << ',' << flag(p.bell_violating) << ','
       << format_number(p.purity) << ',' << format_number(p.mixedness) << ','
       << format_number(p.entanglement) << "\r\n";
  }
  return os.str();
}

std::string grid_to_json(std::span<const ClassifiedPoint> points) {
  Json arr = Json::array();
  for (const ClassifiedPoint& p : points) arr.push_back(point_json(p));
  return arr.dump(kIndent);
}

std::string trace_to_csv(const ProtocolTrace& t) {
  std::ostringstream os;
  os << "step,e\r\n";
  if (t.steps.empty()) return os.str();
  os << 0 << ',' << format_number(t.steps.front().e_in) << "\r\n";
  for (std::size_t k = 0; k < t.steps.size(); ++k)
    os << k + 1 << ',' << format_number(t.steps[k].e_out) << "\r\n";
  return os.str();
}

std::string curve_to_csv(std::span<const CurvePoint> curve) {
  std::ostringstream os;
  os << "parameter,c1,c2,c3,mixedness,entanglement,entanglement_per_x\r\n";
  for (const CurvePoint& p : curve) {
    os << format_number(p.parameter) << ',' << format_number(p.c.c1) << ','
       << format_number(p.c.c2) << ',' << format_number(p.c.c3) << ','
       << format_number(p.mixedness) << ',' << format_number(p.entanglement) << ','
       << format_number(p.entanglement_per_x) << "\r\n";
  }
  return os.str();
}

std::string to_json(const MeasureReport& r) {
  Json j;
  j["n"] = r.n;
  j["c"] = vec(r.c);
  j["E_closed"] = r.e_closed;
  j["B_bound"] = number(r.b_bound);
  j["B_operators"] = r.b_operators;
  j["info_content"] = Json{{"I", r.info.I}, {"E", r.info.E}, {"R", r.info.R}};
  return j.dump(kIndent);
}

std::string to_json(const BellReport& r) {
  Json j;
  j["n"] = r.n;
  j["c"] = vec(r.c);
  j["M"] = r.m;
  j["max_violation"] = Json{{"value", r.max_violation.value}, {"violates", r.max_violation.violates}};
  j["optimized_setting"] = setting_json(r.optimized.setting);
  j["optimized_value"] = r.optimized.value;
  return j.dump(kIndent);
}

}  // namespace qsimplex
