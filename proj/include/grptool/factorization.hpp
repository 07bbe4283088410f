#ifndef GRPTOOL_FACTORIZATION_HPP
#define GRPTOOL_FACTORIZATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grptool/group.hpp"
#include "grptool/sylow.hpp"

namespace grptool {

// Default budget for factorization searches, counted in subgroup-element
// multiplications across all product sets formed during the search.
inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Product set S1 S2 ... Sr as a sorted, deduplicated element list. All
// subgroups must share a parent; the span must be nonempty.
std::vector<Permutation> product_set(std::span<const Subgroup> subgroups);

// Same, but also accumulates the number of multiplications performed into
// `mults` and throws resource_error once it would exceed `budget`.
std::vector<Permutation> product_set(std::span<const Subgroup> subgroups,
                                     std::uint64_t& mults,
                                     std::uint64_t budget);

// Whether the multiplication map S1 x ... x Sr -> G is injective, i.e.
// whether |S1 S2 ... Sr| equals |S1||S2|...|Sr|. For an empty list the
// product is the singleton {1}, so the map is injective iff |G| = 1.
struct InjectivityReport {
  bool injective = false;
  std::uint64_t product_size = 0;
  std::uint64_t tuple_count = 0;
  // When not injective: two distinct tuples with the same product, each
  // tuple listing one element per subgroup in order.
  std::optional<std::pair<std::vector<Permutation>, std::vector<Permutation>>>
      collision;
};

InjectivityReport check_injectivity(const GroupTable& g,
                                    std::span<const Subgroup> subgroups);

// Injectivity of a Sylow system's multiplication map into its parent.
InjectivityReport verify_product_injectivity(const SylowSystem& system);

enum class SearchMode { first_hit, exhaustive };

struct FactorizationResult {
  bool found = false;
  std::optional<SylowSystem> system;  // first successful system, if any
  std::uint64_t product_size = 0;     // |G| when found, else largest seen
  std::uint64_t systems_tried = 0;
  std::uint64_t systems_succeeded = 0;  // exhaustive mode only
  // Exhaustive mode: a failing system together with its product size,
  // when at least one system fails.
  std::optional<std::pair<SylowSystem, std::uint64_t>> failing_example;
  std::uint64_t multiplications = 0;
};

// Searches over all choices of one Sylow p-subgroup per prime (primes in
// ascending order) for a system whose product, taken in that order, is all
// of G. Systems are tried in lexicographic order over the conjugate lists,
// last prime varying fastest. first_hit stops at the first success;
// exhaustive tries every combination and counts successes.
FactorizationResult search_sylow_factorization(
    const GroupTable& g, SearchMode mode = SearchMode::first_hit,
    std::uint64_t budget = kDefaultSearchBudget);

} // namespace grptool

#endif
