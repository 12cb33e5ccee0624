#pragma once

#include "genus0/classify.hpp"
#include "genus0/group_io.hpp"
#include "genus0/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace genus0 {

/// Insertion-ordered so emitted documents are stable byte for byte.
using Json = nlohmann::ordered_json;

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json words_json(const FiniteGroup& g, const std::vector<Element>& xs) {
  Json w = Json::array();
  for (Element x : xs) w.push_back(g.word(x));
  return w;
}

inline Json to_json(const GeneratingVector& v) {
  return Json{{"group", group_spec(v.group)},
              {"signature", to_string(v.signature)},
              {"genus", rh_genus(v.group.order(), v.signature)},
              {"elements", v.elements},
              {"words", words_json(v.group, v.elements)}};
}

inline GeneratingVector vector_from_json(const Json& j) {
  GeneratingVector v{parse_group(j.at("group").get<std::string>()), parse_signature(j.at("signature").get<std::string>()),
                     j.at("elements").get<std::vector<Element>>()};
  return v;
}

inline Json to_json(const QuotientReport& q) {
  return Json{{"prime", q.prime},
              {"subgroup_generator", q.generator},
              {"subgroup_generator_word", q.subgroup.parent.word(q.generator)},
              {"fixed_points", q.fixed_points},
              {"quotient_genus", q.quotient_genus},
              {"gamma_prime_signature", to_string(q.gamma_prime_signature)}};
}

inline Json to_json(const TheoremCheck& c) { return Json{{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}}; }

inline Json to_json(const ClassificationReport& r) {
  Json admissible = Json::array();
  for (const auto& e : r.admissible)
    admissible.push_back(Json{{"signature", to_string(e.signature)},
                              {"genus", e.genus},
                              {"witness", e.witness},
                              {"witness_words", words_json(r.group, e.witness)},
                              {"raw_vector_count", e.raw_vector_count},
                              {"count_capped", e.count_capped}});
  Json theorems = Json::array();
  for (const auto& c : r.theorems) theorems.push_back(to_json(c));
  Json exhausted = Json::array();
  for (const auto& s : r.exhausted) exhausted.push_back(to_string(s));
  return Json{{"group", group_spec(r.group)},
              {"order", r.group.order()},
              {"max_genus", r.max_genus},
              {"admissible", admissible},
              {"verdict", to_string(r.verdict)},
              {"theorems", theorems},
              {"partial", r.partial()},
              {"exhausted_signatures", exhausted}};
}

inline Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "warn") return Status::Warn;
  throw std::invalid_argument("unknown status '" + s + "'");
}

/// Rebuilds a report; the group is re-created from its spec string, so
/// table-loaded groups need `group` passed in.
inline ClassificationReport report_from_json(const Json& j, std::optional<FiniteGroup> group = std::nullopt) {
  ClassificationReport r;
  r.group = group ? *group : parse_group(j.at("group").get<std::string>());
  r.max_genus = j.at("max_genus").get<long long>();
  for (const auto& e : j.at("admissible"))
    r.admissible.push_back({parse_signature(e.at("signature").get<std::string>()), e.at("genus").get<long long>(),
                            e.at("witness").get<std::vector<Element>>(), e.at("raw_vector_count").get<std::size_t>(),
                            e.at("count_capped").get<bool>()});
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "HasGenusZero")
    r.verdict = Verdict::HasGenusZero;
  else if (verdict == "NoneFound")
    r.verdict = Verdict::NoneFound;
  else
    throw std::invalid_argument("unknown verdict '" + verdict + "'");
  for (const auto& t : j.at("theorems"))
    r.theorems.push_back({t.at("name").get<std::string>(), status_from_string(t.at("status").get<std::string>()),
                          t.at("details").get<std::string>()});
  for (const auto& s : j.at("exhausted_signatures")) r.exhausted.push_back(parse_signature(s.get<std::string>()));
  return r;
}

/// Timings are left out so repeated runs emit identical documents.
inline Json to_json(const VerifyResult& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back(to_json(c));
  return Json{{"name", v.name}, {"passed", v.passed()}, {"checks", checks}};
}

}  // namespace genus0
