// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failures. Each criterion is independent and failure of one does not stop
// the others.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grptool/catalog.hpp"
#include "grptool/cli.hpp"
#include "grptool/error.hpp"
#include "grptool/factorization.hpp"
#include "grptool/group.hpp"
#include "grptool/properties.hpp"
#include "grptool/sylow.hpp"

using namespace grptool;

namespace {

// Frozen statistics for the exhaustive A5 search: 5 * 10 * 6 = 300 systems,
// of which exactly this many have |S2 S3 S5| = 60. The value was computed
// once by the independent oracle below and pinned; a change means changed
// enumeration order or a bug, either of which must be looked at.
constexpr std::uint64_t kA5Systems = 300;
constexpr std::uint64_t kA5SystemsSucceeded = 120;

int failures = 0;

void verdict(int criterion, bool pass, const std::string& detail) {
  std::cout << "[" << criterion << "] " << (pass ? "PASS" : "FAIL") << "  "
            << detail << "\n";
  if (!pass)
    ++failures;
}

template <typename Fn>
void criterion(int number, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    verdict(number, false, std::string("unexpected exception: ") + e.what());
  }
}

std::vector<NamedGroup> default_groups() {
  return expand_catalog(
      parse_catalog_spec(default_catalog_text(), "default"));
}

// 1. Property A <=> nilpotency (both routes) over the default catalog.
void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const auto groups = default_groups();
  std::size_t agree = 0;
  std::string first_disagreement;
  for (const auto& ng : groups) {
    const TheoremVerdict v = verify_theorem(ng.group);
    if (v.consistent)
      ++agree;
    else if (first_disagreement.empty())
      first_disagreement = ng.name;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::ostringstream detail;
  detail << "theorem biconditional: " << agree << "/" << groups.size()
         << " groups agree on all three checks in " << secs << "s";
  if (!first_disagreement.empty())
    detail << " (first disagreement: " << first_disagreement << ")";
  verdict(1, groups.size() == 61 && agree == groups.size() && secs < 300.0,
          detail.str());
}

// 2. The A5 remark, reproduced from the printed generators.
void criterion2() {
  const auto a5 = alternating(5);
  const auto parse5 = [](const char* s) {
    return Permutation::parse_cycles(s, 5);
  };
  const auto p = subgroup_from(a5, {parse5("(1,2)(3,4)"), parse5("(1,3)(2,4)")});
  const auto q = subgroup_from(a5, {parse5("(1,2,3)")});
  const auto r = subgroup_from(a5, {parse5("(1,2,3,4,5)")});

  const std::vector<Subgroup> pq{p, q};
  const auto prod_pq = product_set(pq);
  const bool fixes5 = std::all_of(prod_pq.begin(), prod_pq.end(),
                                  [](const Permutation& x) {
                                    return x.apply(4) == 4;
                                  });
  const std::vector<Subgroup> pqr{p, q, r};
  const auto prod_pqr = product_set(pqr);
  auto whole = a5.elements();
  std::sort(whole.begin(), whole.end());

  std::ostringstream detail;
  detail << "A5 reproduction: |P|=" << p.order() << " |Q|=" << q.order()
         << " |R|=" << r.order() << " |PQ|=" << prod_pq.size()
         << (fixes5 ? " (fixes 5)" : " (moves 5!)")
         << " |PQR|=" << prod_pqr.size();
  verdict(2,
          p.order() == 4 && q.order() == 3 && r.order() == 5 &&
              prod_pq.size() == 12 && fixes5 && prod_pqr.size() == 60 &&
              prod_pqr == whole,
          detail.str());
}

// 3. "Not every choice will do": exhaustive search over all 300 A5 systems.
void criterion3() {
  const auto a5 = alternating(5);

  const auto syl2 = all_sylow_subgroups(a5, 2);
  const auto syl3 = all_sylow_subgroups(a5, 3);
  const auto syl5 = all_sylow_subgroups(a5, 5);
  const bool counts_ok =
      syl2.size() == 5 && syl3.size() == 10 && syl5.size() == 6;
  // Congruence and divisibility, re-checked here rather than trusted.
  bool invariants_ok = true;
  const std::uint64_t order = a5.order();
  for (const auto& [subs, p] :
       {std::pair{&syl2, 2u}, std::pair{&syl3, 3u}, std::pair{&syl5, 5u}}) {
    const std::uint64_t n_p = subs->size();
    const std::uint64_t p_part = prime_decomposition(order).p_part(p);
    invariants_ok &= n_p % p == 1 && (order / p_part) % n_p == 0;
  }

  // Independent oracle: form each triple product directly with one flat
  // set, no shared code with product_set.
  std::uint64_t oracle_successes = 0;
  for (const auto& s2 : syl2)
    for (const auto& s3 : syl3)
      for (const auto& s5 : syl5) {
        std::set<Permutation> prods;
        for (const auto& a : s2.elements())
          for (const auto& b : s3.elements())
            for (const auto& c : s5.elements())
              prods.insert(a * b * c);
        if (prods.size() == order)
          ++oracle_successes;
      }

  const auto run1 = search_sylow_factorization(a5, SearchMode::exhaustive);
  const auto run2 = search_sylow_factorization(a5, SearchMode::exhaustive);
  const bool stable = run1.systems_tried == run2.systems_tried &&
                      run1.systems_succeeded == run2.systems_succeeded &&
                      run1.multiplications == run2.multiplications;

  std::ostringstream detail;
  detail << "A5 exhaustive: n_2=" << syl2.size() << " n_3=" << syl3.size()
         << " n_5=" << syl5.size() << ", " << run1.systems_succeeded << "/"
         << run1.systems_tried << " systems factorize (oracle "
         << oracle_successes << ", frozen " << kA5SystemsSucceeded << ")";
  verdict(3,
          counts_ok && invariants_ok && run1.systems_tried == kA5Systems &&
              run1.found && run1.failing_example.has_value() &&
              run1.systems_succeeded >= 1 &&
              run1.systems_succeeded < kA5Systems &&
              run1.systems_succeeded == oracle_successes &&
              run1.systems_succeeded == kA5SystemsSucceeded && stable,
          detail.str());
}

// 4. Every soluble catalog group factorizes in first-hit mode.
void criterion4() {
  const auto groups = default_groups();
  std::vector<std::string> insoluble;
  std::size_t soluble_count = 0, factorized = 0;
  std::string first_failure;
  for (const auto& ng : groups) {
    if (!is_soluble(ng.group)) {
      insoluble.push_back(ng.name);
      continue;
    }
    ++soluble_count;
    const auto result = search_sylow_factorization(ng.group);
    if (result.found && result.product_size == ng.group.order())
      ++factorized;
    else if (first_failure.empty())
      first_failure = ng.name;
  }
  // The catalog's insoluble members are exactly the non-soluble symmetric
  // and alternating tails; solubility is computed, not assumed.
  const std::vector<std::string> expected_insoluble{"S5", "S6", "A5", "A6"};
  auto sorted_insoluble = insoluble;
  std::sort(sorted_insoluble.begin(), sorted_insoluble.end());
  auto sorted_expected = expected_insoluble;
  std::sort(sorted_expected.begin(), sorted_expected.end());

  std::ostringstream detail;
  detail << "soluble factorization: " << factorized << "/" << soluble_count
         << " soluble groups found a first-hit system; insoluble: ";
  for (const auto& n : insoluble)
    detail << n << " ";
  if (!first_failure.empty())
    detail << "(first failure: " << first_failure << ")";
  verdict(4,
          sorted_insoluble == sorted_expected &&
              factorized == soluble_count,
          detail.str());
}

// 5. Injectivity of the default Sylow system on every nilpotent group.
void criterion5() {
  const auto groups = default_groups();
  std::size_t nilpotent_count = 0, injective_count = 0;
  std::string first_failure;
  for (const auto& ng : groups) {
    if (ng.group.order() > 2000)
      continue;
    if (!is_nilpotent_sylow(ng.group).nilpotent)
      continue;
    ++nilpotent_count;
    const auto report =
        verify_product_injectivity(default_sylow_system(ng.group));
    if (report.injective && report.product_size == ng.group.order())
      ++injective_count;
    else if (first_failure.empty())
      first_failure = ng.name;
  }
  std::ostringstream detail;
  detail << "injectivity: " << injective_count << "/" << nilpotent_count
         << " nilpotent groups have |S1...Sr| = |G| with injective tuples";
  if (!first_failure.empty())
    detail << " (first failure: " << first_failure << ")";
  verdict(5, nilpotent_count > 0 && injective_count == nilpotent_count,
          detail.str());
}

// 6. Counterexamples re-verify independently; S3's is (2,3) -> order 2.
void criterion6() {
  const auto groups = default_groups();
  std::size_t counterexamples = 0, verified = 0;
  bool s3_checked = false;
  for (const auto& ng : groups) {
    const auto report = check_property_a(ng.group);
    if (report.holds)
      continue;
    ++counterexamples;
    const auto& c = *report.counterexample;
    const std::uint64_t k = c.elements[0].order();
    const std::uint64_t m = c.elements[1].order();
    const std::uint64_t observed = (c.elements[0] * c.elements[1]).order();
    const bool ok = k > 1 && m > 1 && std::gcd(k, m) == 1 &&
                    c.orders == std::vector<std::uint64_t>{k, m} &&
                    c.expected_order == k * m && observed != k * m &&
                    observed == c.observed_order;
    if (ok)
      ++verified;
    if (ng.name == "S3")
      s3_checked = ok && c.expected_order == 6 && c.observed_order == 2;
  }
  std::ostringstream detail;
  detail << "counterexample audit: " << verified << "/" << counterexamples
         << " re-verified; S3 shows observed 2 vs expected 6: "
         << (s3_checked ? "yes" : "no");
  verdict(6,
          counterexamples > 0 && verified == counterexamples && s3_checked,
          detail.str());
}

// 7. Sylow order and counting laws over every catalog group and prime.
void criterion7() {
  const auto groups = default_groups();
  std::size_t checked = 0, passed = 0;
  std::string first_failure;
  for (const auto& ng : groups) {
    const auto decomp = prime_decomposition(ng.group.order());
    for (const auto& f : decomp.factors) {
      ++checked;
      const auto s = sylow_subgroup(ng.group, f.prime);
      const auto all = all_sylow_subgroups(ng.group, f.prime);
      const std::uint64_t n_p = all.size();
      const bool ok = s.order() == decomp.p_part(f.prime) &&
                      n_p % f.prime == 1 &&
                      (ng.group.order() / s.order()) % n_p == 0;
      if (ok)
        ++passed;
      else if (first_failure.empty())
        first_failure = ng.name + " p=" + std::to_string(f.prime);
    }
  }
  std::ostringstream detail;
  detail << "sylow laws: " << passed << "/" << checked
         << " (group, prime) pairs satisfy |S| = p^a, n_p = 1 mod p, "
            "n_p | |G|/p^a";
  if (!first_failure.empty())
    detail << " (first failure: " << first_failure << ")";
  verdict(7, checked > 0 && passed == checked, detail.str());
}

// 8. Byte-identical reports across two default-catalog runs.
void criterion8() {
  const std::vector<std::string> args{"verify-theorem", "--catalog",
                                      "default", "--no-timestamp"};
  std::ostringstream out1, err1, out2, err2;
  const int code1 = run_command(args, out1, err1);
  const int code2 = run_command(args, out2, err2);
  std::ostringstream detail;
  detail << "determinism: two verify-theorem runs, " << out1.str().size()
         << " bytes each, "
         << (out1.str() == out2.str() ? "byte-identical" : "DIFFERENT")
         << ", exit " << code1 << "/" << code2;
  verdict(8,
          code1 == 0 && code2 == 0 && out1.str() == out2.str() &&
              !out1.str().empty() && err1.str().empty(),
          detail.str());
}

} // namespace

int main() {
  criterion(1, criterion1);
  criterion(2, criterion2);
  criterion(3, criterion3);
  criterion(4, criterion4);
  criterion(5, criterion5);
  criterion(6, criterion6);
  criterion(7, criterion7);
  criterion(8, criterion8);
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
