#include "ricalc/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ricalc/quadrature.hpp"

namespace ricalc {

namespace {

double number_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "infinity") return kInf;
    if (s == "-inf") return -kInf;
    throw std::invalid_argument("expected a number or \"inf\", got: " + s);
  }
  if (!j.is_number()) throw std::invalid_argument("expected a number");
  return j.get<double>();
}

} // namespace

nlohmann::json number_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

nlohmann::json step_to_json(const StepFunction& f) {
  return {{"breakpoints", f.breakpoints()}, {"values", f.values()}};
}

StepFunction step_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values"))
    throw std::invalid_argument("function spec needs breakpoints and values arrays");
  return StepFunction(j.at("breakpoints").get<std::vector<double>>(),
                      j.at("values").get<std::vector<double>>());
}

nlohmann::json line_step_to_json(const LineStepFunction& f) {
  if (f.is_zero()) return {{"breakpoints", nlohmann::json::array()},
                           {"values", nlohmann::json::array()},
                           {"offset", 0.0}};
  const double offset = f.breakpoints.front();
  std::vector<double> rel(f.breakpoints.begin() + 1, f.breakpoints.end());
  for (double& b : rel) b -= offset;
  return {{"breakpoints", rel}, {"values", f.values}, {"offset", offset}};
}

LineStepFunction line_step_from_json(const nlohmann::json& j) {
  auto rel = j.at("breakpoints").get<std::vector<double>>();
  auto vals = j.at("values").get<std::vector<double>>();
  const double offset = j.value("offset", 0.0);
  std::vector<double> bps = {offset};
  for (double b : rel) bps.push_back(offset + b);
  return LineStepFunction(std::move(bps), std::move(vals));
}

nlohmann::json expr_to_json(const PiecewiseExpr& g) {
  nlohmann::json segs = nlohmann::json::array();
  for (const ExprSegment& s : g.segments()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const ExprTerm& t : s.terms) {
      nlohmann::json term = {{"c", t.c}};
      if (t.logpow > 0) {
        term["kind"] = "log";
        term["beta"] = t.beta;
        term["logpow"] = t.logpow;
      } else if (t.beta != 0.0) {
        term["kind"] = "pow";
        term["beta"] = t.beta;
      } else {
        term["kind"] = "const";
      }
      terms.push_back(term);
    }
    segs.push_back({{"from", s.lo}, {"to", number_to_json(s.hi)}, {"terms", terms}});
  }
  return {{"segments", segs}};
}

nlohmann::json lz_params_to_json(const LZParams& x) {
  nlohmann::json j = {{"p", number_to_json(x.p)},
                      {"q", number_to_json(x.q)},
                      {"A", {x.a0, x.aI}},
                      {"variant", x.use_doublestar ? "doublestar" : "star"}};
  if (x.has_B) {
    j["B"] = {x.b0, x.bI};
  } else {
    j["B"] = nullptr;
  }
  return j;
}

LZParams lz_params_from_json(const nlohmann::json& j) {
  LZParams x;
  x.p = number_from_json(j.at("p"));
  x.q = number_from_json(j.at("q"));
  if (j.contains("A") && !j.at("A").is_null()) {
    const auto& a = j.at("A");
    x.a0 = number_from_json(a.at(0));
    x.aI = number_from_json(a.at(1));
  }
  if (j.contains("B") && !j.at("B").is_null()) {
    const auto& b = j.at("B");
    x.has_B = true;
    x.b0 = number_from_json(b.at(0));
    x.bI = number_from_json(b.at(1));
  }
  if (j.contains("variant")) x.use_doublestar = j.at("variant") == "doublestar";
  if (!lz_valid(x)) throw std::invalid_argument("p and q must lie in [1, inf]");
  return x;
}

nlohmann::json partner_to_json(const OptimalPartnerResult& r) {
  nlohmann::json j;
  switch (r.kind) {
    case OptimalPartnerResult::Kind::Lz:
      j["kind"] = "lz";
      break;
    case OptimalPartnerResult::Kind::Induced:
      j["kind"] = "induced";
      break;
    case OptimalPartnerResult::Kind::None:
      j["kind"] = "none";
      break;
    case OptimalPartnerResult::Kind::Untabulated:
      j["kind"] = "untabulated";
      break;
  }
  j["params"] = r.params ? lz_params_to_json(*r.params) : nlohmann::json(nullptr);
  j["norm_description"] =
      r.norm_description.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.norm_description);
  nlohmann::json holds;
  switch (r.condition_holds) {
    case Ternary::True: holds = true; break;
    case Ternary::False: holds = false; break;
    case Ternary::Unknown: holds = "unknown"; break;
  }
  j["condition"] = {{"name", r.condition_name}, {"holds", holds}};
  return j;
}

} // namespace ricalc
