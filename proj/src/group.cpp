#include "grptool/group.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>
#include <utility>

#include "grptool/error.hpp"

namespace grptool {

namespace {

// Breadth-first orbit of the identity under right-multiplication by the
// generators. Discovery order is deterministic given the generator order.
std::vector<Permutation> bfs_closure(unsigned degree,
                                     std::span<const Permutation> generators,
                                     std::size_t max_elements) {
  std::vector<Permutation> elements;
  std::unordered_set<Permutation, PermHash> seen;
  elements.push_back(Permutation::identity(degree));
  seen.insert(elements.front());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = elements[i] * g;
      if (seen.insert(next).second) {
        if (elements.size() >= max_elements)
          throw resource_error("enumeration cap of " +
                               std::to_string(max_elements) +
                               " elements exceeded");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

void check_generators(unsigned degree,
                      const std::vector<Permutation>& generators) {
  if (degree == 0)
    throw usage_error("group degree must be positive");
  // An empty generator list is allowed and closes to the trivial group.
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw usage_error("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " +
                        std::to_string(degree));
}

} // namespace

GroupTable GroupTable::close(unsigned degree,
                             std::vector<Permutation> generators,
                             std::size_t max_elements) {
  check_generators(degree, generators);
  GroupTable t;
  t.degree_ = degree;
  t.elements_ = bfs_closure(degree, generators, max_elements);
  t.generators_ = std::move(generators);
  t.index_.reserve(t.elements_.size());
  for (std::uint32_t i = 0; i < t.elements_.size(); ++i)
    t.index_.emplace(t.elements_[i], i);
  return t;
}

bool Subgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

const std::vector<Permutation>& Subgroup::generators() const {
  return generators_.empty() ? elements_ : generators_;
}

GroupTable Subgroup::as_group(std::size_t max_elements) const {
  return GroupTable::close(parent_->degree(), generators(), max_elements);
}

Subgroup Subgroup::whole(const GroupTable& parent) {
  std::vector<Permutation> sorted = parent.elements();
  std::sort(sorted.begin(), sorted.end());
  return from_elements(parent, std::move(sorted), parent.generators());
}

Subgroup Subgroup::from_elements(const GroupTable& parent,
                                 std::vector<Permutation> elements,
                                 std::vector<Permutation> generators) {
  if (elements.empty())
    throw invariant_error("subgroup element set must be nonempty");
  std::sort(elements.begin(), elements.end());
  if (parent.order() % elements.size() != 0)
    throw invariant_error("subgroup order " +
                          std::to_string(elements.size()) +
                          " does not divide parent order " +
                          std::to_string(parent.order()));
  Subgroup s;
  s.parent_ = &parent;
  s.elements_ = std::move(elements);
  s.generators_ = std::move(generators);
  return s;
}

Subgroup subgroup_from(const GroupTable& parent,
                       std::vector<Permutation> generators) {
  check_generators(parent.degree(), generators);
  for (const auto& g : generators)
    if (!parent.contains(g))
      throw usage_error("generator " + g.cycle_string() +
                        " is not an element of the parent group");
  // Cannot exceed the parent, so the cap is the parent order.
  auto elements = bfs_closure(parent.degree(), generators,
                              static_cast<std::size_t>(parent.order()));
  return Subgroup::from_elements(parent, std::move(elements),
                                 std::move(generators));
}

Permutation conjugate(const Permutation& s, const Permutation& g) {
  return g.inverse() * s * g;
}

Subgroup conjugate_subgroup(const Subgroup& s, const Permutation& g) {
  if (!s.parent().contains(g))
    throw usage_error("conjugating element " + g.cycle_string() +
                      " is not in the parent group");
  const Permutation gi = g.inverse();
  std::vector<Permutation> mapped;
  mapped.reserve(s.elements().size());
  for (const auto& x : s.elements())
    mapped.push_back(gi * x * g);
  std::vector<Permutation> gens;
  gens.reserve(s.generators().size());
  for (const auto& x : s.generators())
    gens.push_back(gi * x * g);
  return Subgroup::from_elements(s.parent(), std::move(mapped),
                                 std::move(gens));
}

std::optional<Permutation> non_normalizing_generator(const Subgroup& s) {
  for (const auto& g : s.parent().generators()) {
    const Permutation gi = g.inverse();
    for (const auto& x : s.elements()) {
      // |S^g| = |S|, so containment one way settles set equality
      if (!s.contains(gi * x * g))
        return g;
    }
  }
  return std::nullopt;
}

bool is_normal(const Subgroup& s) {
  return !non_normalizing_generator(s).has_value();
}

Subgroup normalizer(const Subgroup& s) {
  std::vector<Permutation> result;
  for (const auto& g : s.parent().elements()) {
    const Permutation gi = g.inverse();
    bool fixes = true;
    for (const auto& x : s.elements()) {
      if (!s.contains(gi * x * g)) {
        fixes = false;
        break;
      }
    }
    if (fixes)
      result.push_back(g);
  }
  return Subgroup::from_elements(s.parent(), std::move(result));
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  if (&a.parent() != &b.parent())
    throw usage_error("commutator subgroup needs a common parent group");
  const auto& bs = b.elements();
  std::vector<Permutation> binv;
  binv.reserve(bs.size());
  for (const auto& y : bs)
    binv.push_back(y.inverse());

  // Keep only commutators that enlarge the closure so far; each kept one
  // at least doubles the subgroup, so the generating set stays small.
  const unsigned degree = a.parent().degree();
  const auto cap = static_cast<std::size_t>(a.parent().order());
  std::vector<Permutation> gens;
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermHash> seen{elements.front()};
  for (const auto& x : a.elements()) {
    const Permutation xi = x.inverse();
    for (std::size_t t = 0; t < bs.size(); ++t) {
      Permutation c = xi * binv[t] * x * bs[t];
      if (seen.contains(c))
        continue;
      gens.push_back(std::move(c));
      elements = bfs_closure(degree, gens, cap);
      seen = {elements.begin(), elements.end()};
    }
  }
  return Subgroup::from_elements(a.parent(), std::move(elements),
                                 std::move(gens));
}

std::vector<Subgroup> lower_central_series(const GroupTable& g) {
  std::vector<Subgroup> series;
  series.push_back(Subgroup::whole(g));
  const Subgroup whole = series.front();
  for (;;) {
    const Subgroup& cur = series.back();
    if (cur.is_trivial())
      break;
    Subgroup next = commutator_subgroup(cur, whole);
    if (next == cur)
      break; // stabilized above the trivial subgroup
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> derived_series(const GroupTable& g) {
  std::vector<Subgroup> series;
  series.push_back(Subgroup::whole(g));
  for (;;) {
    const Subgroup& cur = series.back();
    if (cur.is_trivial())
      break;
    Subgroup next = commutator_subgroup(cur, cur);
    if (next == cur)
      break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_soluble(const GroupTable& g) {
  return derived_series(g).back().is_trivial();
}

namespace {

Permutation rotation(unsigned n) {
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i)
    img[i] = (i + 1) % n;
  return Permutation::from_images(std::move(img));
}

void check_projected_order(const char* family, std::uint64_t order,
                           std::size_t max_elements) {
  if (order > max_elements)
    throw resource_error(std::string(family) + " group of order " +
                         std::to_string(order) +
                         " exceeds the enumeration cap of " +
                         std::to_string(max_elements));
}

} // namespace

GroupTable cyclic(unsigned n, std::size_t max_elements) {
  if (n == 0)
    throw usage_error("cyclic(n) requires n >= 1");
  check_projected_order("cyclic", n, max_elements);
  return GroupTable::close(n, {rotation(n)}, max_elements);
}

GroupTable dihedral(unsigned n, std::size_t max_elements) {
  if (n < 3)
    throw usage_error("dihedral(n) requires n >= 3");
  check_projected_order("dihedral", 2ull * n, max_elements);
  std::vector<unsigned> reflect(n);
  for (unsigned i = 0; i < n; ++i)
    reflect[i] = n - 1 - i;
  return GroupTable::close(
      n, {rotation(n), Permutation::from_images(std::move(reflect))},
      max_elements);
}

GroupTable symmetric(unsigned n, std::size_t max_elements) {
  if (n == 0)
    throw usage_error("symmetric(n) requires n >= 1");
  std::uint64_t fact = 1;
  for (unsigned k = 2; k <= n; ++k) {
    fact *= k;
    check_projected_order("symmetric", fact, max_elements);
  }
  if (n == 1)
    return GroupTable::close(1, {Permutation::identity(1)}, max_elements);
  std::vector<unsigned> swap01(n);
  for (unsigned i = 0; i < n; ++i)
    swap01[i] = i;
  swap01[0] = 1;
  swap01[1] = 0;
  std::vector<Permutation> gens{Permutation::from_images(std::move(swap01))};
  if (n >= 3)
    gens.push_back(rotation(n));
  return GroupTable::close(n, std::move(gens), max_elements);
}

GroupTable alternating(unsigned n, std::size_t max_elements) {
  if (n == 0)
    throw usage_error("alternating(n) requires n >= 1");
  if (n <= 2)
    return GroupTable::close(n, {Permutation::identity(n)}, max_elements);
  std::uint64_t half_fact = 1;
  for (unsigned k = 3; k <= n; ++k) {
    half_fact *= k;
    check_projected_order("alternating", half_fact, max_elements);
  }
  // consecutive 3-cycles generate the full alternating group
  std::vector<Permutation> gens;
  for (unsigned i = 0; i + 2 < n; ++i) {
    std::vector<unsigned> img(n);
    for (unsigned j = 0; j < n; ++j)
      img[j] = j;
    img[i] = i + 1;
    img[i + 1] = i + 2;
    img[i + 2] = i;
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return GroupTable::close(n, std::move(gens), max_elements);
}

GroupTable quaternion8() {
  // Elements indexed 1, -1, i, -i, j, -j, k, -k; table[a][b] = a*b.
  static constexpr std::array<std::array<unsigned, 8>, 8> table = {{
      {0, 1, 2, 3, 4, 5, 6, 7},
      {1, 0, 3, 2, 5, 4, 7, 6},
      {2, 3, 1, 0, 6, 7, 5, 4},
      {3, 2, 0, 1, 7, 6, 4, 5},
      {4, 5, 7, 6, 1, 0, 2, 3},
      {5, 4, 6, 7, 0, 1, 3, 2},
      {6, 7, 4, 5, 3, 2, 1, 0},
      {7, 6, 5, 4, 2, 3, 0, 1},
  }};
  // Validate the table: identity, inverses, associativity.
  for (unsigned x = 0; x < 8; ++x) {
    if (table[0][x] != x || table[x][0] != x)
      throw invariant_error("quaternion table: 1 is not the identity");
    bool has_inverse = false;
    for (unsigned y = 0; y < 8; ++y)
      has_inverse |= table[x][y] == 0;
    if (!has_inverse)
      throw invariant_error("quaternion table: missing inverse");
  }
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y)
      for (unsigned z = 0; z < 8; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw invariant_error("quaternion table is not associative");

  // Right-regular representation: the permutation of g maps x to x*g.
  auto regular = [&](unsigned g) {
    std::vector<unsigned> img(8);
    for (unsigned x = 0; x < 8; ++x)
      img[x] = table[x][g];
    return Permutation::from_images(std::move(img));
  };
  GroupTable q = GroupTable::close(8, {regular(2), regular(4)});
  if (q.order() != 8)
    throw invariant_error("quaternion regular representation has order " +
                          std::to_string(q.order()));
  return q;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                          std::size_t max_elements) {
  const std::uint64_t projected = g.order() * h.order();
  check_projected_order("direct product", projected, max_elements);
  const unsigned dg = g.degree();
  const unsigned dh = h.degree();
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<unsigned> img(dg + dh);
    for (unsigned i = 0; i < dg; ++i)
      img[i] = x.apply(i);
    for (unsigned i = 0; i < dh; ++i)
      img[dg + i] = dg + i;
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  for (const auto& y : h.generators()) {
    std::vector<unsigned> img(dg + dh);
    for (unsigned i = 0; i < dg; ++i)
      img[i] = i;
    for (unsigned i = 0; i < dh; ++i)
      img[dg + i] = dg + y.apply(i);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  GroupTable p = GroupTable::close(dg + dh, std::move(gens), max_elements);
  if (p.order() != projected)
    throw invariant_error("direct product closure has order " +
                          std::to_string(p.order()) + ", expected " +
                          std::to_string(projected));
  return p;
}

} // namespace grptool
