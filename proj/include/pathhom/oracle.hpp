#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include "pathhom/core.hpp"

namespace pathhom {

inline constexpr int kDefaultHomEnumLimit = 16;

/// counts[j-1] = |Hom^j(P_n, P_k)|, the homomorphisms with f(1) = j.
struct StartCountVector {
  int k = 0;
  std::vector<Count> counts;

  /// 1-based access.
  const Count& operator[](int j) const { return counts.at(static_cast<std::size_t>(j - 1)); }
  Count total() const;
};

/// Transfer-matrix walk count: applies the adjacency step of P_k n-1 times
/// to the all-ones vector.
StartCountVector hom_start_counts_dp(int n, int k);

/// |Hom(P_n, P_k)|; zero for k = 0.
Count hom_count_dp(int n, int k);

/// Lexicographic stream of every homomorphism P_n -> P_k, optionally only
/// those with f(1) = start. Single consumer.
class HomStream {
public:
  HomStream(int n, int k, std::optional<int> start = std::nullopt);

  /// Next homomorphism, or nullopt once exhausted.
  std::optional<PathHom> next();

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PathHom;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(HomStream* s) : stream_(s) { advance(); }

    const PathHom& operator*() const { return *current_; }
    const PathHom* operator->() const { return &*current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    bool operator==(std::default_sentinel_t) const { return !current_.has_value(); }

  private:
    void advance() { current_ = stream_->next(); }

    HomStream* stream_ = nullptr;
    std::optional<PathHom> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

private:
  bool advance_candidate(std::size_t pos);

  int n_;
  int k_;
  std::optional<int> start_;
  std::vector<int> images_;
  bool started_ = false;
  bool done_ = false;
};

inline HomStream enumerate_homs(int n, int k, std::optional<int> start = std::nullopt) {
  return HomStream(n, k, start);
}

/// Counts surjective homomorphisms by filtering the enumeration. Throws
/// SizeError when n exceeds `limit`.
Count epi_count_brute(int n, int k, int limit = kDefaultHomEnumLimit);

} // namespace pathhom
