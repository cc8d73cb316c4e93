#pragma once

// nlohmann::json views of traces and reports, for line-delimited output.

#include <nlohmann/json.hpp>

#include "admon/confluence.hpp"
#include "admon/monoid.hpp"
#include "admon/rewrite.hpp"
#include "admon/word.hpp"

namespace admon {

inline nlohmann::json to_json(const trace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"position", s.position}, {"case", to_string(s.rule.which)}, {"after", print(s.after)}});
  return {{"start", print(t.start)}, {"steps", std::move(steps)}, {"normal_form", print(t.result())}};
}

inline nlohmann::json to_json(const identity_check& c) {
  nlohmann::json j{{"id", c.id}, {"status", c.passed() ? "PASS" : "FAIL"}, {"instances", c.instances}};
  if (c.failure) {
    nlohmann::json at = nlohmann::json::array();
    for (const auto& w : c.failure->at) at.push_back(print(w));
    j["at"] = std::move(at);
    j["lhs"] = print(c.failure->lhs);
    j["rhs"] = print(c.failure->rhs);
  }
  return j;
}

inline nlohmann::json to_json(const condition_result& c) {
  nlohmann::json j{{"id", c.id}, {"holds", c.holds}, {"lhs", print(c.lhs)}, {"rhs", print(c.rhs)}};
  if (c.at) j["at"] = print(*c.at);
  return j;
}

inline nlohmann::json to_json(const critical_pair& cp) {
  nlohmann::json j{{"family", to_string(cp.family)},
                   {"parent", print(cp.parent)},
                   {"left_reduct", print(cp.left_reduct)},
                   {"right_reduct", print(cp.right_reduct)},
                   {"joinable", cp.joinable()}};
  if (cp.bound_found) j["bound_found"] = print(*cp.bound_found);
  if (cp.stated) {
    j["stated_bound"] = print(*cp.stated);
    j["stated_bound_reached"] = cp.stated_reached;
  }
  if (cp.displayed_variant) {
    j["displayed_variant"] = print(*cp.displayed_variant);
    j["displayed_variant_reached"] = cp.displayed_variant_reached;
  }
  return j;
}

inline nlohmann::json to_json(const family_row& r) {
  nlohmann::json j{{"family", to_string(r.family)},
                   {"instances", r.instances},
                   {"joinable", r.joinable},
                   {"stated_checked", r.stated_checked},
                   {"stated_reached", r.stated_reached}};
  if (r.displayed_checked > 0) {
    j["displayed_checked"] = r.displayed_checked;
    j["displayed_reached"] = r.displayed_reached;
  }
  if (r.sample && r.sample->bound_found) {
    j["sample_parent"] = print(r.sample->parent);
    j["sample_bound"] = print(*r.sample->bound_found);
  }
  return j;
}

}  // namespace admon
