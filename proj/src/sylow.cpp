#include "grptool/sylow.hpp"

#include <set>
#include <string>
#include <utility>

#include "grptool/error.hpp"

namespace grptool {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeDecomposition prime_decomposition(std::uint64_t n) {
  if (n == 0)
    throw usage_error("prime_decomposition requires n >= 1");
  PrimeDecomposition out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (n > 1)
    out.factors.push_back({n, 1});
  return out;
}

std::uint64_t PrimeDecomposition::p_part(std::uint64_t p) const {
  for (const auto& f : factors) {
    if (f.prime != p)
      continue;
    std::uint64_t part = 1;
    for (unsigned i = 0; i < f.exponent; ++i)
      part *= p;
    return part;
  }
  return 1;
}

std::uint64_t PrimeDecomposition::value() const {
  std::uint64_t v = 1;
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.exponent; ++i)
      v *= f.prime;
  return v;
}

namespace {

void check_prime_divides(const GroupTable& g, std::uint64_t p) {
  if (!is_prime(p))
    throw usage_error(std::to_string(p) + " is not prime");
  if (g.order() % p != 0)
    throw usage_error("prime " + std::to_string(p) +
                      " does not divide the group order " +
                      std::to_string(g.order()));
}

} // namespace

Permutation element_of_prime_order(const GroupTable& g, std::uint64_t p) {
  check_prime_divides(g, p);
  for (const auto& h : g.elements()) {
    const std::uint64_t o = h.order();
    if (o % p == 0)
      return h.pow(static_cast<std::int64_t>(o / p));
  }
  // unreachable: p | |G| guarantees an element of order divisible by p
  throw invariant_error("no element of order divisible by " +
                        std::to_string(p) + " found");
}

Subgroup sylow_subgroup(const GroupTable& g, std::uint64_t p) {
  check_prime_divides(g, p);
  const std::uint64_t target = prime_decomposition(g.order()).p_part(p);

  std::vector<Permutation> gens{element_of_prime_order(g, p)};
  Subgroup current = subgroup_from(g, gens);
  while (current.order() < target) {
    // While |P| < p^a, p divides [N(P):P], so N(P)/P has an element of
    // order p; any lift x (x not in P, x^p in P) extends P to a p-group
    // of order p*|P|. Scan the normalizer in its canonical order and take
    // the first lift, which pins the default subgroup for golden tests.
    const Subgroup norm = normalizer(current);
    bool extended = false;
    for (const auto& candidate : norm.elements()) {
      if (current.contains(candidate))
        continue;
      if (!current.contains(candidate.pow(static_cast<std::int64_t>(p))))
        continue;
      gens.push_back(candidate);
      Subgroup bigger = subgroup_from(g, gens);
      if (bigger.order() != current.order() * p)
        throw invariant_error("Sylow extension produced order " +
                              std::to_string(bigger.order()) +
                              ", expected " +
                              std::to_string(current.order() * p));
      current = std::move(bigger);
      extended = true;
      break;
    }
    if (!extended)
      throw invariant_error("failed to extend a p-subgroup of order " +
                            std::to_string(current.order()) + " toward " +
                            std::to_string(target));
  }
  return current;
}

std::vector<Subgroup> all_sylow_subgroups(const GroupTable& g,
                                          std::uint64_t p) {
  const Subgroup base = sylow_subgroup(g, p);
  std::vector<Subgroup> out;
  std::set<std::vector<Permutation>> seen;
  for (const auto& h : g.elements()) {
    Subgroup conj = conjugate_subgroup(base, h);
    if (seen.insert(conj.elements()).second)
      out.push_back(std::move(conj));
  }
  const std::uint64_t n_p = out.size();
  if (n_p % p != 1)
    throw invariant_error("Sylow count " + std::to_string(n_p) +
                          " is not 1 mod " + std::to_string(p));
  if ((g.order() / base.order()) % n_p != 0)
    throw invariant_error("Sylow count " + std::to_string(n_p) +
                          " does not divide the index " +
                          std::to_string(g.order() / base.order()));
  return out;
}

SylowSystem default_sylow_system(const GroupTable& g) {
  SylowSystem system;
  system.parent = &g;
  system.primes = prime_decomposition(g.order());
  system.subgroups.reserve(system.primes.count());
  for (const auto& f : system.primes.factors)
    system.subgroups.push_back(sylow_subgroup(g, f.prime));
  return system;
}

} // namespace grptool
