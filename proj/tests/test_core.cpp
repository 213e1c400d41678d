#include <doctest.h>

#include <random>

#include "pathhom/core.hpp"

using namespace pathhom;

TEST_CASE("binom follows the extended zero convention") {
  CHECK(binom(6, 3) == 20);
  CHECK(binom(6, -1) == 0);
  CHECK(binom(6, 8) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(60, 30).to_string() == "118264581564861424");
  CHECK_THROWS_AS(binom(-1, 0), DomainError);
}

TEST_CASE("binom satisfies Pascal's rule and symmetry for a <= 64") {
  for (int a = 1; a <= 64; ++a) {
    for (int b = 1; b <= a - 1; ++b) {
      REQUIRE(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b));
    }
    for (int b = 0; b <= a; ++b) {
      REQUIRE(binom(a, b) == binom(a, a - b));
    }
  }
}

TEST_CASE("BinomialTable and binomial_row agree with binom") {
  const BinomialTable table(40);
  for (int a = 0; a <= 40; ++a) {
    const auto row = binomial_row(a);
    for (int b = -2; b <= a + 2; ++b) {
      REQUIRE(table(a, b) == binom(a, b).value());
      REQUIRE(binomial_at(row, b) == binom(a, b).value());
    }
  }
  CHECK_THROWS_AS(table(41, 0), DomainError);
}

TEST_CASE("floor_div and ceil_div round toward the right infinity") {
  CHECK(floor_div(-1, 2) == -1);
  CHECK(ceil_div(-1, 2) == 0);
  CHECK(floor_div(7, 2) == 3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
}

TEST_CASE("Count rejects negative values and stays exact") {
  CHECK_THROWS_AS(Count::from_signed(-1), std::domain_error);
  auto big = Count::pow2(200);
  CHECK(big.to_string() == "1606938044258990275541962092341162602522202993782792835301376");
  CHECK((big + Count(1u)) > big);
  CHECK(Count(0u).is_even());
  CHECK_FALSE(Count(3u).is_even());
}

TEST_CASE("PathHom validates adjacency and range") {
  PathHom f(3, {1, 2, 3, 2});
  CHECK(f.n() == 4);
  CHECK(f(3) == 3);
  CHECK(f.is_surjective());
  CHECK(f.to_string() == "1,2,3,2");
  CHECK(PathHom::parse("1, 2,1", 2) == PathHom(2, {1, 2, 1}));

  CHECK_THROWS_AS(PathHom(3, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(PathHom(3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PathHom(2, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(PathHom(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(PathHom::parse("1,x", 2), std::invalid_argument);
}

TEST_CASE("is_path_hom agrees with the definition on random sequences") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<int> seq;
    for (int i = 0; i < n; ++i) {
      seq.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(k)));
    }
    bool expected = true;
    for (int i = 0; i + 1 < n; ++i) {
      expected = expected && (seq[i + 1] - seq[i] == 1 || seq[i] - seq[i + 1] == 1);
    }
    REQUIRE(is_path_hom(seq, k) == expected);
  }
}

TEST_CASE("LatticeWord text form and endpoint") {
  auto w = LatticeWord::parse("EENEEENNEEENEN");
  CHECK(w.size() == 14);
  CHECK(w.endpoint() == LatticePoint{9, 5});
  CHECK(w.to_string() == "EENEEENNEEENEN");
  CHECK(LatticeWord{}.endpoint() == LatticePoint{0, 0});
  CHECK_THROWS_AS(LatticeWord::parse("ENX"), std::invalid_argument);
}

TEST_CASE("SetPartition canonicalizes and validates") {
  SetPartition p(5, {{4, 2}, {5}, {3, 1}});
  CHECK(p.to_string() == "{1,3}{2,4}{5}");
  CHECK(p == SetPartition::parse("{5}{2,4}{3,1}"));
  CHECK(SetPartition::from_labels(std::vector<int>{3, 2, 1, 2}).to_string() == "{1}{2,4}{3}");

  CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(2, {{1}, {}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(2, {{1}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::parse("{1,2"), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::parse("1,2}"), std::invalid_argument);
}

TEST_CASE("Epispectrum requires exactly n-1 entries") {
  CHECK_NOTHROW(Epispectrum(3, {Count(1u), Count(1u)}));
  CHECK_THROWS_AS(Epispectrum(3, {Count(1u)}), std::invalid_argument);
  CHECK_THROWS_AS(Epispectrum(1, {}), std::invalid_argument);
  CHECK(Epispectrum(4, {Count(1u), Count(2u), Count(1u)}).to_string() == "1,2,1");
}
