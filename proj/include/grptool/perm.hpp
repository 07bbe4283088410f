#ifndef GRPTOOL_PERM_HPP
#define GRPTOOL_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace grptool {

// A permutation of the points 1..n, stored as a 0-based image table.
// Immutable after construction; every operation returns a new value, so
// instances are safe to share across threads.
//
// Composition is left-to-right throughout the library: (p * q) applies p
// first, then q. Conjugation g^-1 * s * g is evaluated under the same
// convention.
class Permutation {
public:
  // Identity on `degree` points.
  explicit Permutation(unsigned degree);

  static Permutation identity(unsigned degree) { return Permutation(degree); }

  // From a 0-based image table (images[i] = image of point i). The table
  // must be a bijection on 0..n-1.
  static Permutation from_images(std::vector<unsigned> images);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  unsigned apply(unsigned point) const { return img_[point]; }
  const std::vector<unsigned>& images() const { return img_; }

  bool is_identity() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;

  // Least k >= 1 with p^k = identity; the lcm of the cycle lengths.
  std::uint64_t order() const;

  // Disjoint cycles over 1-based points, fixed points omitted. Each cycle
  // starts at its smallest point and cycles are sorted by first point, so
  // the decomposition is canonical.
  std::vector<std::vector<unsigned>> cycles() const;

  // Canonical cycle notation, e.g. "(1,2)(3,4)"; the identity prints "()".
  std::string cycle_string() const;

  // Parses cycle notation over 1-based points:
  //   expression := "()" | cycle+
  //   cycle      := "(" int ("," int)+ ")"
  // Whitespace is allowed between cycles only. Points must be distinct
  // across the whole expression and lie in 1..degree.
  static Permutation parse_cycles(const std::string& text, unsigned degree);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&,
                                          const Permutation&) = default;

private:
  Permutation() = default;

  std::vector<unsigned> img_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace grptool

#endif
