#include "hcube_cli/serialize.hpp"

#include "hcube/error.hpp"

namespace hcube::cli {

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, what + ": invalid JSON at byte " + std::to_string(e.byte));
  }
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, where + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    std::string detail = e.what();
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    if (detail.starts_with(prefix)) detail.erase(0, prefix.size());
    throw Error(ErrorCode::ParseError, where + ": " + detail);
  }
}

PointRep point_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, where + ": expected an object");
  if (!j.contains("prefix") || !j.at("prefix").is_array()) {
    throw Error(ErrorCode::ParseError, where + ".prefix: expected an array");
  }
  if (!j.contains("tail")) throw Error(ErrorCode::ParseError, where + ".tail: missing");

  std::vector<Rational> prefix;
  const json& arr = j.at("prefix");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    prefix.push_back(rational_from_json(arr[i], where + ".prefix[" + std::to_string(i) + "]"));
  }
  return PointRep(std::move(prefix), rational_from_json(j.at("tail"), where + ".tail"));
}

PointRep parse_point_spec(std::string_view text) { return point_from_json(parse_json(text, "point spec")); }

json point_to_json(const PointRep& p) {
  json prefix = json::array();
  for (const auto& c : p.prefix()) prefix.push_back(to_string(c));
  return json{{"prefix", prefix}, {"tail", to_string(p.tail())}};
}

json profile_to_json(const BoundaryProfile& profile) {
  return json{{"explicit_indices", profile.explicit_indices},
              {"tail_is_boundary", profile.tail_is_boundary},
              {"tail_start", profile.tail_start}};
}

BoundaryProfile profile_from_json(const json& j) {
  try {
    BoundaryProfile p;
    p.explicit_indices = j.at("explicit_indices").get<std::vector<int>>();
    p.tail_is_boundary = j.at("tail_is_boundary").get<bool>();
    p.tail_start = j.at("tail_start").get<int>();
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("source_profile: ") + e.what());
  }
}

json schedule_to_json(const Schedule& s) {
  json stages = json::array();
  for (const auto& st : s.stages) stages.push_back(json::array({st.n, st.m}));
  json budget = json::array();
  for (const auto& b : s.budget) budget.push_back(to_string(b));
  return json{{"stages", stages},
              {"budget", budget},
              {"source_profile", s.source_profile ? profile_to_json(*s.source_profile) : json(nullptr)},
              {"open_ended", s.open_ended}};
}

Schedule schedule_from_json(const json& j) {
  try {
    Schedule s;
    for (const auto& st : j.at("stages")) s.stages.push_back({st.at(0).get<int>(), st.at(1).get<int>()});
    const json& budget = j.at("budget");
    for (std::size_t i = 0; i < budget.size(); ++i) {
      s.budget.push_back(rational_from_json(budget[i], "budget[" + std::to_string(i) + "]"));
    }
    if (j.contains("source_profile") && !j.at("source_profile").is_null()) {
      s.source_profile = profile_from_json(j.at("source_profile"));
    }
    s.open_ended = j.value("open_ended", true);
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("schedule: ") + e.what());
  }
}

json plan_to_json(const HomeoPlan& plan) {
  json f = nullptr;
  if (plan.f) f = json{{"source", point_to_json(plan.f->source())}, {"target", point_to_json(plan.f->target())}};
  return json{{"case", std::string(to_string(plan.kind))},
              {"anchor_limit", plan.anchor_limit},
              {"f", f},
              {"fwd_schedule", plan.fwd_schedule ? schedule_to_json(*plan.fwd_schedule) : json(nullptr)},
              {"bwd_schedule", plan.bwd_schedule ? schedule_to_json(*plan.bwd_schedule) : json(nullptr)}};
}

HomeoPlan plan_from_json(const json& in) try {
  const json& j = in.contains("plan") ? in.at("plan") : in;
  if (!j.is_object() || !j.contains("case")) throw Error(ErrorCode::ParseError, "plan: missing \"case\"");
  HomeoPlan plan;
  plan.kind = plan_case_from_string(j.at("case").get<std::string>());
  plan.anchor_limit = j.value("anchor_limit", 0);
  if (j.contains("f") && !j.at("f").is_null()) {
    plan.f.emplace(point_from_json(j.at("f").at("source"), "f.source"),
                   point_from_json(j.at("f").at("target"), "f.target"));
  }
  if (j.contains("fwd_schedule") && !j.at("fwd_schedule").is_null()) {
    plan.fwd_schedule = schedule_from_json(j.at("fwd_schedule"));
  }
  if (j.contains("bwd_schedule") && !j.at("bwd_schedule").is_null()) {
    plan.bwd_schedule = schedule_from_json(j.at("bwd_schedule"));
  }
  return plan;
} catch (const json::exception& e) {
  throw Error(ErrorCode::ParseError, std::string("plan: ") + e.what());
}

json certified_to_json(const CertifiedPoint& c) {
  return json{{"value", point_to_json(c.value)},
              {"radius", to_string(c.radius)},
              {"stages_used", c.stages_used},
              {"lipschitz", to_string(c.lipschitz)}};
}

json report_to_json(const ErrataReport& report) {
  json findings = json::array();
  for (const auto& f : report.findings) {
    findings.push_back(json{{"check", f.check},
                            {"map", f.map},
                            {"witness", json::array({to_string(f.witness.x), to_string(f.witness.y)})},
                            {"expected", f.expected},
                            {"observed", f.observed}});
  }
  return json{{"variant", std::string(to_string(report.variant))},
              {"n", report.n},
              {"m", report.m},
              {"grid_step", to_string(report.grid_step)},
              {"finding_count", report.findings.size()},
              {"findings", findings}};
}

}  // namespace hcube::cli
