#include <doctest.h>

#include <map>

#include "pathhom/closedform.hpp"
#include "pathhom/congruence.hpp"
#include "pathhom/oracle.hpp"
#include "support/brute.hpp"

using namespace pathhom;

namespace {

SetPartition to_partition(int n, const brute::Partition& p) { return SetPartition(n, p); }

} // namespace

TEST_CASE("kernel_partition") {
  CHECK(kernel_partition(PathHom(4, {3, 2, 1, 2})).to_string() == "{1}{2,4}{3}");
  CHECK(kernel_partition(PathHom(3, {1, 2, 3})).to_string() == "{1}{2}{3}");
  CHECK(kernel_partition(PathHom(2, {1, 2, 1, 2})).to_string() == "{1,3}{2,4}");
}

TEST_CASE("shift_normalize keeps the kernel and becomes surjective") {
  const PathHom f(6, {4, 5, 4, 3, 4});
  const auto g = shift_normalize(f);
  CHECK(g.k() == 3);
  CHECK(g.to_string() == "2,3,2,1,2");
  CHECK(g.is_surjective());
  CHECK(kernel_partition(g) == kernel_partition(f));
}

TEST_CASE("induced partitions match an independent enumeration") {
  for (int n = 1; n <= 9; ++n) {
    std::set<SetPartition> expected;
    for (const auto& p : brute::endomorphism_kernels(n)) {
      expected.insert(to_partition(n, p));
    }
    REQUIRE(induced_partitions(n) == expected);
  }
  CHECK_THROWS_AS(induced_partitions(15), SizeError);
}

TEST_CASE("epispectrum_brute") {
  CHECK(epispectrum_brute(2).to_string() == "1");
  CHECK(epispectrum_brute(4).to_string() == "1,2,1");
  // frozen from an exhaustive walk enumeration
  CHECK(epispectrum_brute(7).to_string() == "1,2,7,11,10,1");
  CHECK(epispectrum_brute(8).to_string() == "1,2,8,14,24,14,1");
  CHECK(epispectrum_brute(10).at(4) == 18);
  CHECK_THROWS_AS(epispectrum_brute(1), DomainError);
  CHECK_THROWS_AS(epispectrum_brute(15), SizeError);
}

TEST_CASE("epispectrum_formula") {
  CHECK(epispectrum_formula(2).to_string() == "1");
  CHECK(epispectrum_formula(4).to_string() == "1,2,1");
  CHECK(epispectrum_formula(12).at(5) == 66);
  CHECK_THROWS_AS(epispectrum_formula(1), DomainError);
}

TEST_CASE("epispectra agree and follow the low-degree list") {
  for (int n = 2; n <= 13; ++n) {
    const auto brute_spec = epispectrum_brute(n);
    const auto formula = epispectrum_formula(n);
    REQUIRE(brute_spec == formula);
    REQUIRE(brute_spec.at(1) == 1);
    if (n >= 4) {
      REQUIRE(brute_spec.at(2) == 2);
    }
    for (int k = 1; 2 * k <= n; ++k) {
      REQUIRE(brute_spec.at(k) == lk_closed(n, k));
    }
    // every induced partition is counted exactly once
    Count total;
    for (const auto& v : brute_spec.values) {
      total += v;
    }
    REQUIRE(total == induced_partitions(n).size());
  }
}

TEST_CASE("twice the number of r-block kernels is the epimorphism count") {
  for (int n = 2; n <= 12; ++n) {
    std::map<std::size_t, unsigned> by_blocks;
    for (const auto& p : induced_partitions(n)) {
      ++by_blocks[p.block_count()];
    }
    for (int k = 1; k <= n - 1; ++k) {
      const int r = n - k + 1;
      REQUIRE(epi_count_brute(n, r) == 2 * by_blocks[static_cast<std::size_t>(r)]);
    }
  }
}

TEST_CASE("arrangements reproduce the 11-vertex example") {
  const auto p = SetPartition::parse("{1,3,5,9}{2,4,10}{6,8}{7}{11}");
  const auto r = arrangements(p);
  REQUIRE(r.valid);
  REQUIRE(r.orderings.size() == 2);
  CHECK(r.ordering_text(p, 0) == "{7}{6,8}{1,3,5,9}{2,4,10}{11}");
  CHECK(r.ordering_text(p, 1) == "{11}{2,4,10}{1,3,5,9}{6,8}{7}");
  CHECK(r.witnesses[0].to_string() == "3,4,3,4,3,2,1,2,3,4,5");
  CHECK(kernel_partition(r.witnesses[1]) == p);
}

TEST_CASE("arrangements of small partitions") {
  auto r = arrangements(SetPartition::parse("{1}{2}{3}"));
  REQUIRE(r.valid);
  CHECK(r.orderings == std::vector<std::vector<int>>{{1, 2, 3}, {3, 2, 1}});

  r = arrangements(SetPartition::parse("{1,2}{3}"));
  CHECK_FALSE(r.valid);
  CHECK(r.orderings.empty());
  CHECK(r.reason.find("adjacent") != std::string::npos);

  // greedy attachment succeeds but 3 and 4 land in non-adjacent blocks
  r = arrangements(SetPartition::parse("{1,4}{2}{3}"));
  CHECK_FALSE(r.valid);

  // min(A_4) - 1 = 5 sits in the middle block of {4}{1,3,5}{2}
  r = arrangements(SetPartition::parse("{1,3,5}{2}{4}{6}"));
  CHECK_FALSE(r.valid);
  CHECK(r.reason.find("interior") != std::string::npos);

  r = arrangements(SetPartition::parse("{1,3}{2}{4}{5}"));
  REQUIRE(r.valid);
  CHECK(r.witnesses[0].to_string() == "3,4,3,2,1");

  r = arrangements(SetPartition::parse("{1}"));
  CHECK(r.valid);
  CHECK(r.orderings.size() == 2);
}

TEST_CASE("arrangements accept exactly the induced partitions") {
  for (int n = 2; n <= 9; ++n) {
    const auto induced = brute::endomorphism_kernels(n);
    for (const auto& bp : brute::all_partitions(n)) {
      auto sorted = bp;
      std::sort(sorted.begin(), sorted.end());
      const auto p = to_partition(n, bp);
      const auto r = arrangements(p);
      REQUIRE(r.valid == (induced.count(sorted) > 0));
      if (r.valid) {
        auto reversed = r.orderings[0];
        std::reverse(reversed.begin(), reversed.end());
        REQUIRE(r.orderings[1] == reversed);
        for (const auto& w : r.witnesses) {
          REQUIRE(w.is_surjective());
          REQUIRE(kernel_partition(w) == p);
        }
      } else {
        REQUIRE_FALSE(r.reason.empty());
      }
    }
  }
}
