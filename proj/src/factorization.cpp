#include "grptool/factorization.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "grptool/error.hpp"

namespace grptool {

namespace {

void check_same_parent(std::span<const Subgroup> subgroups) {
  if (subgroups.empty())
    throw usage_error("product of an empty list of subgroups");
  const GroupTable* parent = &subgroups.front().parent();
  for (const auto& s : subgroups)
    if (&s.parent() != parent)
      throw usage_error("subgroups in a product must share a parent group");
}

std::vector<Permutation> product_set_impl(std::span<const Subgroup> subgroups,
                                          std::uint64_t* mults,
                                          std::uint64_t budget) {
  check_same_parent(subgroups);
  std::vector<Permutation> current = subgroups.front().elements();
  for (std::size_t i = 1; i < subgroups.size(); ++i) {
    const auto& next = subgroups[i].elements();
    std::unordered_set<Permutation, PermHash> seen;
    seen.reserve(current.size() * next.size());
    std::vector<Permutation> result;
    for (const auto& a : current) {
      for (const auto& b : next) {
        if (mults) {
          if (*mults >= budget)
            throw resource_error(
                "multiplication budget of " + std::to_string(budget) +
                " exceeded while forming a product set");
          ++*mults;
        }
        Permutation ab = a * b;
        if (seen.insert(ab).second)
          result.push_back(std::move(ab));
      }
    }
    current = std::move(result);
  }
  std::sort(current.begin(), current.end());
  return current;
}

} // namespace

std::vector<Permutation> product_set(std::span<const Subgroup> subgroups) {
  return product_set_impl(subgroups, nullptr, 0);
}

std::vector<Permutation> product_set(std::span<const Subgroup> subgroups,
                                     std::uint64_t& mults,
                                     std::uint64_t budget) {
  return product_set_impl(subgroups, &mults, budget);
}

InjectivityReport check_injectivity(const GroupTable& g,
                                    std::span<const Subgroup> subgroups) {
  InjectivityReport report;
  if (subgroups.empty()) {
    report.product_size = 1;
    report.tuple_count = 1;
    report.injective = g.order() == 1;
    return report;
  }
  check_same_parent(subgroups);
  if (&subgroups.front().parent() != &g)
    throw usage_error("subgroups must live in the group being checked");

  report.tuple_count = 1;
  for (const auto& s : subgroups)
    report.tuple_count *= s.order();

  // Walk tuples in odometer order; the first repeated product gives the
  // collision witness.
  std::unordered_map<Permutation, std::vector<std::size_t>, PermHash> first;
  std::vector<std::size_t> idx(subgroups.size(), 0);
  auto tuple_elements = [&](const std::vector<std::size_t>& ix) {
    std::vector<Permutation> t;
    t.reserve(ix.size());
    for (std::size_t i = 0; i < ix.size(); ++i)
      t.push_back(subgroups[i].elements()[ix[i]]);
    return t;
  };
  for (std::uint64_t n = 0; n < report.tuple_count; ++n) {
    Permutation prod = subgroups.front().elements()[idx[0]];
    for (std::size_t i = 1; i < subgroups.size(); ++i)
      prod = prod * subgroups[i].elements()[idx[i]];
    auto [it, inserted] = first.try_emplace(std::move(prod), idx);
    if (!inserted && !report.collision)
      report.collision = {tuple_elements(it->second), tuple_elements(idx)};
    for (std::size_t i = subgroups.size(); i-- > 0;) {
      if (++idx[i] < subgroups[i].order())
        break;
      idx[i] = 0;
    }
  }
  report.product_size = first.size();
  report.injective = !report.collision.has_value();
  return report;
}

InjectivityReport verify_product_injectivity(const SylowSystem& system) {
  if (!system.parent)
    throw usage_error("Sylow system has no parent group");
  return check_injectivity(*system.parent, system.subgroups);
}

FactorizationResult search_sylow_factorization(const GroupTable& g,
                                               SearchMode mode,
                                               std::uint64_t budget) {
  FactorizationResult result;
  const auto decomp = prime_decomposition(g.order());
  if (decomp.factors.empty()) {
    // Trivial group: the empty product is already everything.
    result.found = true;
    result.system = SylowSystem{&g, {}, {}};
    result.product_size = 1;
    result.systems_tried = 1;
    result.systems_succeeded = 1;
    return result;
  }

  std::vector<std::vector<Subgroup>> choices;
  for (const auto& f : decomp.factors)
    choices.push_back(all_sylow_subgroups(g, f.prime));

  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<Subgroup> system;
    system.reserve(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i)
      system.push_back(choices[i][idx[i]]);

    ++result.systems_tried;
    const auto product =
        product_set(system, result.multiplications, budget);
    const std::uint64_t size = product.size();
    if (size == g.order()) {
      ++result.systems_succeeded;
      if (!result.system) {
        result.found = true;
        result.system = SylowSystem{&g, decomp, system};
        result.product_size = size;
      }
      if (mode == SearchMode::first_hit)
        return result;
    } else {
      if (!result.failing_example)
        result.failing_example = {SylowSystem{&g, decomp, system}, size};
      if (!result.found)
        result.product_size = std::max(result.product_size, size);
    }

    std::size_t i = idx.size();
    while (i-- > 0) {
      if (++idx[i] < choices[i].size())
        break;
      idx[i] = 0;
      if (i == 0)
        return result;
    }
  }
}

} // namespace grptool
