#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathhom/count.hpp"
#include "pathhom/errors.hpp"

namespace pathhom {

/// Binomial coefficient with the extended zero convention: C(a, b) = 0
/// whenever b < 0 or b > a. Throws DomainError for a < 0.
Count binom(int a, int b);

/// Row m of Pascal's triangle, C(m, 0) .. C(m, m).
std::vector<BigInt> binomial_row(int m);

/// Row lookup with the zero convention outside 0..row.size()-1.
const BigInt& binomial_at(const std::vector<BigInt>& row, int b);

/// Rows 0..max_row of Pascal's triangle, built once and read many times by
/// the closed-form evaluators. Out-of-range lookups yield zero.
class BinomialTable {
public:
  explicit BinomialTable(int max_row);

  const BigInt& operator()(int a, int b) const;
  int max_row() const noexcept { return static_cast<int>(rows_.size()) - 1; }

private:
  std::vector<std::vector<BigInt>> rows_;
};

inline int floor_div(int a, int b) {
  int q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

inline int ceil_div(int a, int b) { return -floor_div(-a, b); }

/// A homomorphism P_n -> P_k, stored as its image sequence f(1), ..., f(n).
/// Vertices are 1-based. Construction validates the adjacency condition.
class PathHom {
public:
  PathHom(int k, std::vector<int> images);

  int n() const noexcept { return static_cast<int>(images_.size()); }
  int k() const noexcept { return k_; }
  std::span<const int> images() const noexcept { return images_; }

  /// f(v) for 1 <= v <= n.
  int operator()(int v) const { return images_.at(static_cast<std::size_t>(v - 1)); }

  int min_image() const;
  int max_image() const;

  /// True when every vertex of P_k is hit.
  bool is_surjective() const;

  std::string to_string() const;

  /// Parses "1,2,3,2" into a homomorphism into P_k.
  static PathHom parse(std::string_view text, int k);

  friend bool operator==(const PathHom&, const PathHom&) = default;

private:
  int k_;
  std::vector<int> images_;
};

/// True if `images` is a valid image sequence for some homomorphism into P_k.
bool is_path_hom(std::span<const int> images, int k);

enum class Step : char { East = 'E', North = 'N' };

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// A lattice path from the origin written as a word over {East, North}.
class LatticeWord {
public:
  LatticeWord() = default;
  explicit LatticeWord(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  /// (#East, #North).
  LatticePoint endpoint() const;

  /// Text form over 'E' and 'N'.
  std::string to_string() const;
  static LatticeWord parse(std::string_view text);

  friend bool operator==(const LatticeWord&, const LatticeWord&) = default;
  friend auto operator<=>(const LatticeWord&, const LatticeWord&) = default;

private:
  std::vector<Step> steps_;
};

/// Partition of [1..n] held in canonical form: blocks ordered by their
/// minima, elements ascending inside each block.
class SetPartition {
public:
  using Block = std::vector<int>;

  /// Validates that `blocks` partition [1..n] and canonicalizes them.
  SetPartition(int n, std::vector<Block> blocks);

  /// Groups positions by equal label; labels[i] is the label of element i+1.
  static SetPartition from_labels(std::span<const int> labels);

  /// Parses the text form "{1,3}{2,4}".
  static SetPartition parse(std::string_view text);

  int n() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
  SetPartition() = default;

  int n_ = 0;
  std::vector<Block> blocks_;
};

std::string to_string(std::span<const SetPartition::Block> blocks);

/// (l_1(n), ..., l_{n-1}(n)): entry k counts the endomorphism-induced
/// partitions of [n] with n - k + 1 blocks.
struct Epispectrum {
  Epispectrum(int n, std::vector<Count> values);

  int n;
  std::vector<Count> values;

  /// l_k(n), 1-based.
  const Count& at(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }

  /// Comma-joined decimal entries, e.g. "1,2,1".
  std::string to_string() const;

  friend bool operator==(const Epispectrum&, const Epispectrum&) = default;
};

} // namespace pathhom
