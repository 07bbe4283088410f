#ifndef GRPTOOL_PROPERTIES_HPP
#define GRPTOOL_PROPERTIES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "grptool/group.hpp"

namespace grptool {

// A tuple of nontrivial elements of pairwise coprime orders whose product
// has the wrong order. `expected_order` is the product of the orders.
struct CoprimeProductCounterexample {
  std::vector<Permutation> elements;
  std::vector<std::uint64_t> orders;
  std::uint64_t expected_order = 0;
  std::uint64_t observed_order = 0;
};

struct PropertyAReport {
  bool holds = true;
  std::optional<CoprimeProductCounterexample> counterexample;
  // Ordered coprime tuples examined, including the failing one. The scan
  // stops at the first violation in enumeration order.
  std::uint64_t pairs_checked = 0;
};

// Does the order of x*y equal order(x)*order(y) for every ordered pair of
// nontrivial elements of coprime orders? Identity factors are skipped:
// they satisfy the condition trivially.
PropertyAReport check_property_a(const GroupTable& g);

// The k-tuple extension, k in {2, 3}. Evaluated only when the pairwise
// check holds; otherwise the pairwise report is returned as-is.
PropertyAReport check_property_a_tuples(const GroupTable& g, unsigned k);

enum class NilpotencyMethod { sylow_normality, lower_central_series };

struct NilpotencyReport {
  bool nilpotent = true;
  NilpotencyMethod method = NilpotencyMethod::sylow_normality;
  // Non-normal Sylow subgroup, or the nontrivial term the lower central
  // series stabilized at. Present exactly when nilpotent is false.
  std::optional<Subgroup> witness_subgroup;
  // For the Sylow method: a parent generator moving the witness subgroup.
  std::optional<Permutation> witness_conjugator;
};

// Nilpotent iff every subgroup of the default Sylow system is normal.
// A normal Sylow p-subgroup is the unique one, so checking the default
// choice loses no generality.
NilpotencyReport is_nilpotent_sylow(const GroupTable& g);

// Independent route: nilpotent iff the lower central series hits the
// trivial subgroup.
NilpotencyReport is_nilpotent_lcs(const GroupTable& g);

struct TheoremVerdict {
  PropertyAReport property_a;
  NilpotencyReport sylow;
  NilpotencyReport lcs;
  // All three flags agree. Disagreement signals an implementation bug.
  bool consistent = false;
};

TheoremVerdict verify_theorem(const GroupTable& g);

} // namespace grptool

#endif
