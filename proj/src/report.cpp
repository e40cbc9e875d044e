#include "stw/report.hpp"

#include <json.hpp>

#include "stw/error.hpp"

namespace stw {

using json = nlohmann::ordered_json;

namespace {

json instance_to_json(const InstanceClass& c) {
  json j = json::object();
  if (c.segments) j["segments"] = c.segments->lengths();
  if (c.n) j["n"] = *c.n;
  if (c.m) j["m"] = *c.m;
  j["k"] = c.k;
  if (c.samples) j["samples"] = *c.samples;
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

InstanceClass instance_from_json(const json& j) {
  InstanceClass c;
  if (j.contains("segments")) c.segments = SegmentSequence(j.at("segments").get<std::vector<int>>());
  if (j.contains("n")) c.n = j.at("n").get<int>();
  if (j.contains("m")) c.m = j.at("m").get<int>();
  c.k = j.at("k").get<std::vector<int>>();
  if (j.contains("samples")) c.samples = j.at("samples").get<long long>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  json out = json::array();
  for (const VerificationReport& r : reports) {
    json args = json::array();
    for (const ArgTree& a : r.arg_trees) {
      json preds = json::object();
      for (const NamedPredicate& p : a.predicates) preds[p.name] = p.value;
      args.push_back({{"code", a.code.code}, {"predicates", preds}});
    }
    out.push_back({{"theorem", r.theorem},
                   {"instanceClass", instance_to_json(r.instance)},
                   {"extremalValue", r.extremal_value.to_string()},
                   {"argTrees", args},
                   {"verdict", to_string(r.verdict)},
                   {"notes", r.notes}});
  }
  return out.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  std::vector<VerificationReport> out;
  try {
    const json doc = json::parse(text);
    if (!doc.is_array()) throw Error(ErrorKind::ParseError, "report root must be an array");
    for (const json& j : doc) {
      VerificationReport r;
      r.theorem = j.at("theorem").get<std::string>();
      r.instance = instance_from_json(j.at("instanceClass"));
      r.extremal_value = ExactCount::parse(j.at("extremalValue").get<std::string>());
      for (const json& a : j.at("argTrees")) {
        ArgTree arg{CanonicalCode{a.at("code").get<std::string>()}, {}};
        for (const auto& [name, value] : a.at("predicates").items()) {
          arg.predicates.push_back({name, value.get<bool>()});
        }
        r.arg_trees.push_back(std::move(arg));
      }
      r.verdict = parse_verdict(j.at("verdict").get<std::string>());
      r.notes = j.at("notes").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report JSON: ") + e.what());
  }
  return out;
}

}  // namespace stw
