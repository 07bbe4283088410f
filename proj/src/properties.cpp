#include "grptool/properties.hpp"

#include <numeric>
#include <utility>

#include "grptool/error.hpp"
#include "grptool/sylow.hpp"

namespace grptool {

namespace {

std::vector<std::uint64_t> element_orders(const GroupTable& g) {
  std::vector<std::uint64_t> orders;
  orders.reserve(g.elements().size());
  for (const auto& x : g.elements())
    orders.push_back(x.order());
  return orders;
}

} // namespace

PropertyAReport check_property_a(const GroupTable& g) {
  const auto& els = g.elements();
  const auto orders = element_orders(g);
  PropertyAReport report;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (orders[i] == 1)
      continue;
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (orders[j] == 1)
        continue;
      if (std::gcd(orders[i], orders[j]) != 1)
        continue;
      ++report.pairs_checked;
      const std::uint64_t expected = orders[i] * orders[j];
      const std::uint64_t observed = (els[i] * els[j]).order();
      if (observed != expected) {
        report.holds = false;
        report.counterexample = CoprimeProductCounterexample{
            {els[i], els[j]}, {orders[i], orders[j]}, expected, observed};
        return report;
      }
    }
  }
  return report;
}

PropertyAReport check_property_a_tuples(const GroupTable& g, unsigned k) {
  if (k < 2 || k > 3)
    throw usage_error("tuple size must be 2 or 3, got " + std::to_string(k));
  PropertyAReport pairwise = check_property_a(g);
  if (k == 2 || !pairwise.holds)
    return pairwise;

  const auto& els = g.elements();
  const auto orders = element_orders(g);
  PropertyAReport report;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (orders[i] == 1)
      continue;
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (orders[j] == 1 || std::gcd(orders[i], orders[j]) != 1)
        continue;
      const Permutation ij = els[i] * els[j];
      for (std::size_t l = 0; l < els.size(); ++l) {
        if (orders[l] == 1 || std::gcd(orders[i], orders[l]) != 1 ||
            std::gcd(orders[j], orders[l]) != 1)
          continue;
        ++report.pairs_checked;
        const std::uint64_t expected = orders[i] * orders[j] * orders[l];
        const std::uint64_t observed = (ij * els[l]).order();
        if (observed != expected) {
          report.holds = false;
          report.counterexample = CoprimeProductCounterexample{
              {els[i], els[j], els[l]},
              {orders[i], orders[j], orders[l]},
              expected,
              observed};
          return report;
        }
      }
    }
  }
  return report;
}

NilpotencyReport is_nilpotent_sylow(const GroupTable& g) {
  NilpotencyReport report;
  report.method = NilpotencyMethod::sylow_normality;
  const SylowSystem system = default_sylow_system(g);
  for (const auto& s : system.subgroups) {
    if (auto mover = non_normalizing_generator(s)) {
      report.nilpotent = false;
      report.witness_subgroup = s;
      report.witness_conjugator = std::move(*mover);
      return report;
    }
  }
  return report;
}

NilpotencyReport is_nilpotent_lcs(const GroupTable& g) {
  NilpotencyReport report;
  report.method = NilpotencyMethod::lower_central_series;
  auto series = lower_central_series(g);
  if (!series.back().is_trivial()) {
    report.nilpotent = false;
    report.witness_subgroup = std::move(series.back());
  }
  return report;
}

TheoremVerdict verify_theorem(const GroupTable& g) {
  TheoremVerdict verdict{check_property_a(g), is_nilpotent_sylow(g),
                         is_nilpotent_lcs(g), false};
  verdict.consistent =
      verdict.property_a.holds == verdict.sylow.nilpotent &&
      verdict.sylow.nilpotent == verdict.lcs.nilpotent;
  return verdict;
}

} // namespace grptool
