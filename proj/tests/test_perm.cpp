#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "grptool/error.hpp"
#include "grptool/perm.hpp"

using namespace grptool;

namespace {

Permutation parse(const std::string& s, unsigned degree) {
  return Permutation::parse_cycles(s, degree);
}

Permutation random_permutation(unsigned degree, std::mt19937& rng) {
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(std::move(img));
}

} // namespace

TEST_CASE("identity basics") {
  const auto e = Permutation::identity(4);
  CHECK(e.degree() == 4);
  CHECK(e.is_identity());
  CHECK(e.order() == 1);
  CHECK(e.cycles().empty());
  CHECK(e.cycle_string() == "()");
  for (unsigned i = 0; i < 4; ++i)
    CHECK(e.apply(i) == i);
}

TEST_CASE("from_images validates bijectivity") {
  CHECK_NOTHROW(Permutation::from_images({1, 0, 2}));
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), error);
  CHECK_THROWS_AS(Permutation::from_images({0, 1, 3}), error);
  CHECK_THROWS_AS(Permutation::from_images({}), error);
}

TEST_CASE("composition is left to right") {
  // (1,2) then (2,3): 1 -> 2 -> 3, so the product is (1,3,2).
  const auto p = parse("(1,2)", 3);
  const auto q = parse("(2,3)", 3);
  CHECK((p * q).cycle_string() == "(1,3,2)");
  CHECK((q * p).cycle_string() == "(1,2,3)");
}

TEST_CASE("composition degree mismatch") {
  CHECK_THROWS_AS(parse("(1,2)", 3) * parse("(1,2)", 4), error);
}

TEST_CASE("inverse and powers") {
  const auto p = parse("(1,2,3,4,5)", 5);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.pow(0).is_identity());
  CHECK(p.pow(5).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p.pow(7) == p.pow(2));
  CHECK(p.pow(-3) == p.inverse().pow(3));
}

TEST_CASE("order is the lcm of cycle lengths") {
  CHECK(parse("(1,2)", 5).order() == 2);
  CHECK(parse("(1,2)(3,4,5)", 5).order() == 6);
  CHECK(parse("(1,2,3,4,5,6)", 6).order() == 6);
  CHECK(parse("(1,2)(3,4)", 5).order() == 2);
}

TEST_CASE("order matches brute-force powering on small degrees") {
  std::mt19937 rng(20260819);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_permutation(8, rng);
    const std::uint64_t o = p.order();
    CHECK(p.pow(static_cast<std::int64_t>(o)).is_identity());
    Permutation acc = Permutation::identity(8);
    for (std::uint64_t k = 1; k < o; ++k) {
      acc = acc * p;
      CHECK_FALSE(acc.is_identity());
    }
  }
}

TEST_CASE("cycle decomposition is canonical") {
  const auto p = parse("(3,4)(1,2)", 5);
  const auto cycles = p.cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<unsigned>{1, 2});
  CHECK(cycles[1] == std::vector<unsigned>{3, 4});
  CHECK(p.cycle_string() == "(1,2)(3,4)");

  // Cycle rotation does not change the permutation or its printing.
  CHECK(parse("(2,3,1)", 3) == parse("(1,2,3)", 3));
  CHECK(parse("(2,3,1)", 3).cycle_string() == "(1,2,3)");
}

TEST_CASE("parse accepts the paper-style expressions") {
  const auto p = parse("(1,2)(3,4)", 5);
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(1) == 0);
  CHECK(p.apply(2) == 3);
  CHECK(p.apply(3) == 2);
  CHECK(p.apply(4) == 4);

  CHECK(parse("()", 4).is_identity());
  CHECK(parse(" (1,2) (3,4) ", 4) == parse("(1,2)(3,4)", 4));
}

TEST_CASE("parse rejects malformed expressions") {
  CHECK_THROWS_AS(parse("", 3), parse_error);
  CHECK_THROWS_AS(parse("(1,5)", 4), parse_error);
  CHECK_THROWS_AS(parse("(1,500)", 4), parse_error);
  CHECK_THROWS_AS(parse("(0,1)", 4), parse_error);
  CHECK_THROWS_AS(parse("(1,2)(2,3)", 4), parse_error); // repeated point
  CHECK_THROWS_AS(parse("(3)", 4), parse_error);        // singleton cycle
  CHECK_THROWS_AS(parse("(1,2", 4), parse_error);
  CHECK_THROWS_AS(parse("1,2)", 4), parse_error);
  CHECK_THROWS_AS(parse("(1,,2)", 4), parse_error);
  CHECK_THROWS_AS(parse("()(1,2)", 4), parse_error); // "()" must stand alone
  CHECK_THROWS_AS(parse("(a,b)", 4), parse_error);
  CHECK_THROWS_AS(parse("(1, 2)", 4), parse_error); // spaces only between cycles
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("(1,2)(2,3)", 4);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  try {
    parse("(1,500)", 4);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("500") != std::string::npos);
  }
}

TEST_CASE("cycle_string round-trips") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_permutation(9, rng);
    CHECK(Permutation::parse_cycles(p.cycle_string(), 9) == p);
  }
}

TEST_CASE("algebraic identities on random permutations") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_permutation(7, rng);
    const auto q = random_permutation(7, rng);
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
    const auto r = random_permutation(7, rng);
    CHECK(((p * q) * r) == (p * (q * r)));
  }
}
