#ifndef GRPTOOL_REPORT_HPP
#define GRPTOOL_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "grptool/catalog.hpp"
#include "grptool/factorization.hpp"
#include "grptool/properties.hpp"
#include "grptool/sylow.hpp"

namespace grptool {

inline constexpr const char* kToolName = "grptool";
inline constexpr const char* kToolVersion = "0.1.0";

// Insertion-ordered JSON keeps key order stable across runs, which is what
// makes golden-file comparison of reports possible.
using json = nlohmann::ordered_json;

struct ReportOptions {
  // When false, the timestamp and all wall-time fields are omitted so that
  // identical inputs produce byte-identical reports.
  bool timestamps = true;
};

std::string iso8601_utc_now();

// Common report head: tool, version, command, optional timestamp.
json report_envelope(const std::string& command, const ReportOptions& opts);

json group_json(const NamedGroup& g);
json permutation_list_json(const std::vector<Permutation>& perms);

json property_a_json(const PropertyAReport& r);
json nilpotency_json(const NilpotencyReport& r);
json sylow_subgroup_json(const Subgroup& s);
json injectivity_json(const InjectivityReport& r);
json factorization_json(const FactorizationResult& r);

// One verify-theorem table row; wall_ms fields are included only when
// opts.timestamps is set.
json theorem_row_json(const std::string& name, const GroupTable& g,
                      const TheoremVerdict& v,
                      const std::optional<double>& wall_ms);

} // namespace grptool

#endif
