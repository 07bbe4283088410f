#ifndef GRPTOOL_GROUP_HPP
#define GRPTOOL_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "grptool/perm.hpp"

namespace grptool {

// Hard ceiling on full enumeration; exceeding it is a clean resource error.
inline constexpr std::size_t kDefaultMaxElements = 1'000'000;

// A finite permutation group with its element set fully enumerated.
// Immutable after construction. The element order is the breadth-first
// discovery order (identity first) and is the library's fixed enumeration
// order: every "first hit" reported by later modules refers to it.
class GroupTable {
public:
  // Enumerates the group generated by `generators`: breadth-first closure,
  // i.e. the orbit of the identity under right-multiplication by the
  // generators. Throws resource_error past max_elements.
  static GroupTable close(unsigned degree, std::vector<Permutation> generators,
                          std::size_t max_elements = kDefaultMaxElements);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& identity() const { return elements_.front(); }
  bool contains(const Permutation& p) const { return index_.count(p) != 0; }

private:
  GroupTable() = default;

  unsigned degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermHash> index_;
};

// A subgroup of an enumerated group. Elements are stored sorted by image
// table, so equality of subgroups is plain vector equality and the sorted
// set doubles as a canonical deduplication key. The parent GroupTable must
// outlive the subgroup.
class Subgroup {
public:
  const GroupTable& parent() const { return *parent_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return elements_.size() == 1; }

  // A generating set when one is known (closure generators, Sylow seeds,
  // conjugated generators); falls back to the full element list.
  const std::vector<Permutation>& generators() const;

  // The subgroup re-enumerated as a standalone group.
  GroupTable as_group(std::size_t max_elements = kDefaultMaxElements) const;

  static Subgroup whole(const GroupTable& parent);

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

  // Internal: `elements` must already be closed. Sorts and checks Lagrange.
  static Subgroup from_elements(const GroupTable& parent,
                                std::vector<Permutation> elements,
                                std::vector<Permutation> generators = {});

private:
  Subgroup() = default;

  const GroupTable* parent_ = nullptr;
  std::vector<Permutation> elements_;   // sorted
  std::vector<Permutation> generators_; // possibly empty
};

// Closure of `generators` inside `parent`; every generator must be an
// element of the parent group.
Subgroup subgroup_from(const GroupTable& parent,
                       std::vector<Permutation> generators);

// g^-1 * s * g under the left-to-right convention.
Permutation conjugate(const Permutation& s, const Permutation& g);

// { g^-1 s g : s in S }; g must lie in the parent group.
Subgroup conjugate_subgroup(const Subgroup& s, const Permutation& g);

// First parent generator that fails to normalize S, if any.
std::optional<Permutation> non_normalizing_generator(const Subgroup& s);

// True iff S^g = S for every parent generator. Conjugation by any group
// element factors through the generators, so the generator test decides
// normality in the whole parent.
bool is_normal(const Subgroup& s);

// { g in parent : S^g = S }, by scan over all parent elements.
Subgroup normalizer(const Subgroup& s);

// <[A, B]>: the subgroup generated by all commutators a^-1 b^-1 a b.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

// gamma_1 = G, gamma_{k+1} = <[gamma_k, G]>, returned up to stabilization:
// the last term is either trivial or the first term equal to its successor.
std::vector<Subgroup> lower_central_series(const GroupTable& g);

// G = G^(0) >= [G,G] >= [[G,G],[G,G]] >= ..., up to stabilization.
std::vector<Subgroup> derived_series(const GroupTable& g);

bool is_soluble(const GroupTable& g);

// Catalog constructors.
GroupTable cyclic(unsigned n, std::size_t max_elements = kDefaultMaxElements);
// Order 2n on n points; requires n >= 3 (smaller n degenerates on n points).
GroupTable dihedral(unsigned n, std::size_t max_elements = kDefaultMaxElements);
GroupTable symmetric(unsigned n, std::size_t max_elements = kDefaultMaxElements);
GroupTable alternating(unsigned n,
                       std::size_t max_elements = kDefaultMaxElements);
// Regular representation on 8 points of the order-8 quaternion group.
GroupTable quaternion8();
// Acts on the disjoint union of the two point sets; order |G| * |H|.
GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                          std::size_t max_elements = kDefaultMaxElements);

} // namespace grptool

#endif
