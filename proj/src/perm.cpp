#include "grptool/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "grptool/error.hpp"

namespace grptool {

Permutation::Permutation(unsigned degree) {
  if (degree == 0)
    throw usage_error("permutation degree must be positive");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<unsigned> images) {
  if (images.empty())
    throw usage_error("permutation degree must be positive");
  std::vector<bool> seen(images.size(), false);
  for (unsigned v : images) {
    if (v >= images.size() || seen[v])
      throw usage_error("image table is not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw usage_error("degree mismatch in composition: " +
                      std::to_string(degree()) + " vs " +
                      std::to_string(rhs.degree()));
  Permutation r;
  r.img_.resize(img_.size());
  for (unsigned i = 0; i < img_.size(); ++i)
    r.img_[i] = rhs.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (unsigned i = 0; i < img_.size(); ++i)
    r.img_[img_[i]] = i;
  return r;
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e =
      k < 0 ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  Permutation acc(degree());
  while (e != 0) {
    if (e & 1)
      acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(img_.size(), false);
  for (unsigned i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::uint64_t len = 0;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(img_.size(), false);
  // ascending scan: each cycle begins at its smallest point
  for (unsigned i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i)
      continue;
    std::vector<unsigned> cycle;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k)
        os << ',';
      os << cycle[k];
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::parse_cycles(const std::string& text, unsigned degree) {
  if (degree == 0)
    throw usage_error("permutation degree must be positive");

  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](const std::string& what) -> void {
    throw parse_error(what + " at position " + std::to_string(i + 1));
  };

  skip_ws();
  if (i >= text.size())
    throw parse_error("empty cycle expression");

  // "()" is the identity and must stand alone.
  if (text.compare(i, 2, "()") == 0) {
    i += 2;
    skip_ws();
    if (i != text.size())
      fail("unexpected text after \"()\"");
    return identity(degree);
  }

  while (i < text.size()) {
    if (text[i] != '(')
      fail(std::string("expected '(' but found '") + text[i] + "'");
    ++i;
    std::vector<unsigned> cycle;
    for (;;) {
      std::size_t start = i;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start)
        fail(i < text.size()
                 ? std::string("expected a point number but found '") +
                       text[i] + "'"
                 : std::string("expected a point number"));
      const std::string token = text.substr(start, i - start);
      std::uint64_t v = 0;
      for (char c : token) {
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > degree)
          break; // already out of range; avoid overflow on long tokens
      }
      if (v == 0)
        fail("point 0 is invalid; points are numbered from 1");
      if (v > degree)
        throw parse_error("point " + token + " out of range for degree " +
                          std::to_string(degree) + " at position " +
                          std::to_string(start + 1));
      unsigned point = static_cast<unsigned>(v - 1);
      if (used[point])
        throw parse_error("repeated point " + std::to_string(v) +
                          " in cycle expression at position " +
                          std::to_string(start + 1));
      used[point] = true;
      cycle.push_back(point);
      if (i >= text.size())
        fail("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      fail(std::string("expected ',' or ')' but found '") + text[i] + "'");
    }
    if (cycle.size() < 2)
      fail("a cycle needs at least two points");
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }

  Permutation p;
  p.img_ = std::move(img);
  return p;
}

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (unsigned v : p.images())
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

} // namespace grptool
