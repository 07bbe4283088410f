#include "grptool/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "grptool/catalog.hpp"
#include "grptool/error.hpp"
#include "grptool/factorization.hpp"
#include "grptool/properties.hpp"
#include "grptool/report.hpp"
#include "grptool/sylow.hpp"

namespace grptool {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_order(std::ostream& out, const std::string& group_arg,
              std::size_t max_elements) {
  const NamedGroup ng = load_group_argument(group_arg, max_elements);
  out << ng.group.order() << "\n";
  return 0;
}

int cmd_property_a(std::ostream& out, const std::string& group_arg,
                   std::size_t max_elements, const ReportOptions& opts) {
  const NamedGroup ng = load_group_argument(group_arg, max_elements);
  const auto start = std::chrono::steady_clock::now();
  const PropertyAReport report = check_property_a(ng.group);
  json j = report_envelope("check property-a", opts);
  j["group"] = group_json(ng);
  j["property_a"] = property_a_json(report);
  if (opts.timestamps)
    j["wall_ms"] = elapsed_ms(start);
  emit(out, j);
  return report.holds ? 0 : 1;
}

int cmd_nilpotent(std::ostream& out, const std::string& group_arg,
                  const std::string& method, std::size_t max_elements,
                  const ReportOptions& opts) {
  const NamedGroup ng = load_group_argument(group_arg, max_elements);
  const auto start = std::chrono::steady_clock::now();
  std::vector<NilpotencyReport> reports;
  if (method == "sylow" || method == "both")
    reports.push_back(is_nilpotent_sylow(ng.group));
  if (method == "lcs" || method == "both")
    reports.push_back(is_nilpotent_lcs(ng.group));
  for (const auto& r : reports)
    if (r.nilpotent != reports.front().nilpotent)
      throw invariant_error(
          "nilpotency methods disagree on '" + ng.name +
          "'; this is a bug in the tool, not new group theory");
  json j = report_envelope("check nilpotent", opts);
  j["group"] = group_json(ng);
  json checks = json::array();
  for (const auto& r : reports)
    checks.push_back(nilpotency_json(r));
  j["checks"] = std::move(checks);
  j["nilpotent"] = reports.front().nilpotent;
  if (opts.timestamps)
    j["wall_ms"] = elapsed_ms(start);
  emit(out, j);
  return reports.front().nilpotent ? 0 : 1;
}

int cmd_sylow(std::ostream& out, const std::string& group_arg,
              std::uint64_t prime, bool all_conjugates,
              std::size_t max_elements, const ReportOptions& opts) {
  if (!is_prime(prime))
    throw usage_error(std::to_string(prime) + " is not prime");
  const NamedGroup ng = load_group_argument(group_arg, max_elements);
  json j = report_envelope("sylow", opts);
  j["group"] = group_json(ng);
  j["prime"] = prime;
  j["subgroup"] = sylow_subgroup_json(sylow_subgroup(ng.group, prime));
  if (all_conjugates) {
    const auto all = all_sylow_subgroups(ng.group, prime);
    json cj = json::array();
    for (const auto& s : all)
      cj.push_back(sylow_subgroup_json(s));
    j["conjugates"] = std::move(cj);
    j["count"] = all.size();
  }
  emit(out, j);
  return 0;
}

int cmd_factorize(std::ostream& out, const std::string& group_arg,
                  bool exhaustive, std::size_t max_elements,
                  std::uint64_t budget, const ReportOptions& opts) {
  const NamedGroup ng = load_group_argument(group_arg, max_elements);
  const auto mode =
      exhaustive ? SearchMode::exhaustive : SearchMode::first_hit;
  const auto start = std::chrono::steady_clock::now();
  const FactorizationResult result =
      search_sylow_factorization(ng.group, mode, budget);
  json j = report_envelope("factorize", opts);
  j["group"] = group_json(ng);
  j["mode"] = exhaustive ? "exhaustive" : "first-hit";
  j["factorization"] = factorization_json(result);
  if (opts.timestamps)
    j["wall_ms"] = elapsed_ms(start);
  emit(out, j);
  return result.found ? 0 : 1;
}

int cmd_verify_theorem(std::ostream& out, const std::string& catalog_arg,
                       std::size_t max_elements, const ReportOptions& opts) {
  CatalogSpec spec;
  std::string base_dir;
  if (catalog_arg == "default") {
    spec = parse_catalog_spec(default_catalog_text(), "default");
  } else {
    std::ifstream in(catalog_arg);
    if (!in)
      throw usage_error("cannot open catalog spec '" + catalog_arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    spec = parse_catalog_spec(
        buf.str(), std::filesystem::path(catalog_arg).filename().string());
    base_dir = std::filesystem::path(catalog_arg).parent_path().string();
  }
  const auto groups = expand_catalog(spec, max_elements, base_dir);

  json rows = json::array();
  std::uint64_t consistent = 0, property_a_holds = 0;
  for (const auto& ng : groups) {
    const auto start = std::chrono::steady_clock::now();
    const TheoremVerdict v = verify_theorem(ng.group);
    std::optional<double> wall;
    if (opts.timestamps)
      wall = elapsed_ms(start);
    rows.push_back(theorem_row_json(ng.name, ng.group, v, wall));
    consistent += v.consistent ? 1 : 0;
    property_a_holds += v.property_a.holds ? 1 : 0;
  }

  json j = report_envelope("verify-theorem", opts);
  j["catalog"] = catalog_arg;
  j["groups"] = std::move(rows);
  j["summary"] = {{"groups", groups.size()},
                  {"property_a_holds", property_a_holds},
                  {"consistent", consistent},
                  {"all_consistent", consistent == groups.size()}};
  emit(out, j);
  return consistent == groups.size() ? 0 : 1;
}

} // namespace

int run_command(std::vector<std::string> args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Finite-group toolkit: coprime-order products, nilpotency, "
               "Sylow systems, and exact factorizations",
               "grptool"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::size_t max_elements = kDefaultMaxElements;
  std::uint64_t budget = kDefaultSearchBudget;
  bool no_timestamp = false;
  app.add_option("--max-elements", max_elements,
                 "Cap on enumerated group elements")
      ->capture_default_str();
  app.add_option("--budget", budget,
                 "Multiplication budget for factorization searches")
      ->capture_default_str();
  app.add_flag("--no-timestamp", no_timestamp,
               "Omit timestamp and wall-time fields for byte-stable reports");

  std::string group_arg;
  std::string method = "both";
  std::string catalog_arg;
  std::uint64_t prime = 0;
  bool all_conjugates = false;
  bool exhaustive = false;

  auto* order_cmd = app.add_subcommand("order", "Print the group order");
  order_cmd->add_option("group", group_arg, "Builtin name or .grp file")
      ->required();

  auto* check_cmd =
      app.add_subcommand("check", "Property A and nilpotency checks");
  check_cmd->require_subcommand(1);
  auto* pa_cmd = check_cmd->add_subcommand(
      "property-a", "Products of coprime-order elements have product order");
  pa_cmd->add_option("group", group_arg, "Builtin name or .grp file")
      ->required();
  auto* nil_cmd = check_cmd->add_subcommand(
      "nilpotent", "Nilpotency via Sylow normality and lower central series");
  nil_cmd->add_option("group", group_arg, "Builtin name or .grp file")
      ->required();
  nil_cmd->add_option("--method", method, "sylow, lcs, or both")
      ->check(CLI::IsMember({"sylow", "lcs", "both"}))
      ->capture_default_str();

  auto* sylow_cmd =
      app.add_subcommand("sylow", "Compute a Sylow p-subgroup");
  sylow_cmd->add_option("-p,--prime", prime, "The prime p")->required();
  sylow_cmd->add_option("group", group_arg, "Builtin name or .grp file")
      ->required();
  sylow_cmd->add_flag("--all", all_conjugates, "List all conjugates");

  auto* fact_cmd = app.add_subcommand(
      "factorize", "Search for Sylow subgroups with G = S1 S2 ... Sr");
  fact_cmd->add_option("group", group_arg, "Builtin name or .grp file")
      ->required();
  fact_cmd->add_flag("--exhaustive", exhaustive,
                     "Try every Sylow system and count successes");

  auto* verify_cmd = app.add_subcommand(
      "verify-theorem", "Property A <=> nilpotency over a whole catalog");
  verify_cmd->add_option("--catalog", catalog_arg,
                         "Catalog spec file, or 'default'")
      ->required();

  for (auto* sub :
       {order_cmd, check_cmd, pa_cmd, nil_cmd, sylow_cmd, fact_cmd,
        verify_cmd})
    sub->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));

    const ReportOptions opts{.timestamps = !no_timestamp};
    if (order_cmd->parsed())
      return cmd_order(out, group_arg, max_elements);
    if (pa_cmd->parsed())
      return cmd_property_a(out, group_arg, max_elements, opts);
    if (nil_cmd->parsed())
      return cmd_nilpotent(out, group_arg, method, max_elements, opts);
    if (sylow_cmd->parsed())
      return cmd_sylow(out, group_arg, prime, all_conjugates, max_elements,
                       opts);
    if (fact_cmd->parsed())
      return cmd_factorize(out, group_arg, exhaustive, max_elements, budget,
                           opts);
    if (verify_cmd->parsed())
      return cmd_verify_theorem(out, catalog_arg, max_elements, opts);
    err << "error: no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace grptool
