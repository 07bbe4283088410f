#ifndef GRPTOOL_SYLOW_HPP
#define GRPTOOL_SYLOW_HPP

#include <cstdint>
#include <vector>

#include "grptool/group.hpp"

namespace grptool {

struct PrimeFactor {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

// Prime factorization with ascending primes; 1 factors to the empty list.
struct PrimeDecomposition {
  std::vector<PrimeFactor> factors;

  unsigned count() const { return static_cast<unsigned>(factors.size()); }
  // p^e for the exponent e of p in the factored value (1 when p is absent).
  std::uint64_t p_part(std::uint64_t p) const;
  std::uint64_t value() const;
};

bool is_prime(std::uint64_t n);

PrimeDecomposition prime_decomposition(std::uint64_t n);

// One chosen Sylow p-subgroup per prime dividing the parent order,
// ascending by prime. Empty for the trivial group.
struct SylowSystem {
  const GroupTable* parent = nullptr;
  PrimeDecomposition primes;
  std::vector<Subgroup> subgroups;
};

// Some element of order exactly p, deterministically: the first element in
// enumeration order whose order p divides, raised to order/p.
Permutation element_of_prime_order(const GroupTable& g, std::uint64_t p);

// A Sylow p-subgroup, constructed deterministically: seed with an element
// of order p, then repeatedly extend inside the normalizer until the full
// p-part of |G| is reached.
Subgroup sylow_subgroup(const GroupTable& g, std::uint64_t p);

// All conjugates of sylow_subgroup(g, p), deduplicated by element set, in
// discovery order. The count n_p is checked against n_p = 1 (mod p) and
// n_p | |G| / p^a.
std::vector<Subgroup> all_sylow_subgroups(const GroupTable& g,
                                          std::uint64_t p);

SylowSystem default_sylow_system(const GroupTable& g);

} // namespace grptool

#endif
