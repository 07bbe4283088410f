#include "grptool/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

namespace grptool {

namespace {

json permutation_json(const Permutation& p) { return p.cycle_string(); }

const char* method_name(NilpotencyMethod m) {
  return m == NilpotencyMethod::sylow_normality ? "sylow-normality"
                                                : "lower-central-series";
}

json sylow_system_json(const SylowSystem& system) {
  json subgroups = json::array();
  for (const auto& s : system.subgroups)
    subgroups.push_back(sylow_subgroup_json(s));
  return subgroups;
}

} // namespace

std::string iso8601_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json report_envelope(const std::string& command, const ReportOptions& opts) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  if (opts.timestamps)
    j["timestamp"] = iso8601_utc_now();
  return j;
}

json group_json(const NamedGroup& g) {
  json j;
  j["name"] = g.name;
  j["degree"] = g.group.degree();
  j["order"] = g.group.order();
  return j;
}

json permutation_list_json(const std::vector<Permutation>& perms) {
  json j = json::array();
  for (const auto& p : perms)
    j.push_back(permutation_json(p));
  return j;
}

json property_a_json(const PropertyAReport& r) {
  json j;
  j["holds"] = r.holds;
  j["pairs_checked"] = r.pairs_checked;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    json cj;
    cj["elements"] = permutation_list_json(c.elements);
    cj["orders"] = c.orders;
    cj["expected_order"] = c.expected_order;
    cj["observed_order"] = c.observed_order;
    j["counterexample"] = std::move(cj);
  }
  return j;
}

json nilpotency_json(const NilpotencyReport& r) {
  json j;
  j["method"] = method_name(r.method);
  j["nilpotent"] = r.nilpotent;
  if (r.witness_subgroup) {
    json w;
    if (r.method == NilpotencyMethod::sylow_normality) {
      w["non_normal_sylow"] = sylow_subgroup_json(*r.witness_subgroup);
      if (r.witness_conjugator)
        w["conjugator"] = permutation_json(*r.witness_conjugator);
    } else {
      w["stabilized_term_order"] = r.witness_subgroup->order();
      w["stabilized_term_generators"] =
          permutation_list_json(r.witness_subgroup->generators());
    }
    j["witness"] = std::move(w);
  }
  return j;
}

json sylow_subgroup_json(const Subgroup& s) {
  json j;
  j["order"] = s.order();
  j["generators"] = permutation_list_json(s.generators());
  return j;
}

json injectivity_json(const InjectivityReport& r) {
  json j;
  j["injective"] = r.injective;
  j["product_size"] = r.product_size;
  j["tuple_count"] = r.tuple_count;
  if (r.collision) {
    json cj;
    cj["first"] = permutation_list_json(r.collision->first);
    cj["second"] = permutation_list_json(r.collision->second);
    j["collision"] = std::move(cj);
  }
  return j;
}

json factorization_json(const FactorizationResult& r) {
  json j;
  j["found"] = r.found;
  j["product_size"] = r.product_size;
  j["systems_tried"] = r.systems_tried;
  j["systems_succeeded"] = r.systems_succeeded;
  j["multiplications"] = r.multiplications;
  if (r.system) {
    json primes = json::array();
    for (const auto& f : r.system->primes.factors)
      primes.push_back(f.prime);
    j["system"] = {{"primes", std::move(primes)},
                   {"subgroups", sylow_system_json(*r.system)}};
  }
  if (r.failing_example) {
    json fj;
    fj["product_size"] = r.failing_example->second;
    fj["subgroups"] = sylow_system_json(r.failing_example->first);
    j["failing_example"] = std::move(fj);
  }
  return j;
}

json theorem_row_json(const std::string& name, const GroupTable& g,
                      const TheoremVerdict& v,
                      const std::optional<double>& wall_ms) {
  json j;
  j["name"] = name;
  j["order"] = g.order();
  j["property_a"] = v.property_a.holds;
  j["nilpotent_sylow"] = v.sylow.nilpotent;
  j["nilpotent_lcs"] = v.lcs.nilpotent;
  j["consistent"] = v.consistent;
  if (v.property_a.counterexample) {
    const auto& c = *v.property_a.counterexample;
    j["counterexample"] = {{"elements", permutation_list_json(c.elements)},
                           {"orders", c.orders},
                           {"expected_order", c.expected_order},
                           {"observed_order", c.observed_order}};
  }
  if (wall_ms)
    j["wall_ms"] = std::round(*wall_ms * 1000.0) / 1000.0;
  return j;
}

} // namespace grptool
