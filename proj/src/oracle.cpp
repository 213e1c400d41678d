#include "pathhom/oracle.hpp"

#include <stdexcept>
#include <string>

namespace pathhom {

namespace {

void require_sizes(int n, int k, const char* op) {
  if (n < 1 || k < 1) {
    throw DomainError(std::string(op) + ": need n >= 1 and k >= 1, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
}

} // namespace

Count StartCountVector::total() const {
  Count sum;
  for (const auto& c : counts) {
    sum += c;
  }
  return sum;
}

StartCountVector hom_start_counts_dp(int n, int k) {
  require_sizes(n, k, "hom_start_counts_dp");
  // walks are reversible, so counting by start vertex and by end vertex
  // iterate the same symmetric step
  std::vector<BigInt> cur(static_cast<std::size_t>(k), BigInt(1));
  std::vector<BigInt> nxt(cur.size());
  for (int step = 1; step < n; ++step) {
    for (int j = 0; j < k; ++j) {
      BigInt v = 0;
      if (j > 0) {
        v += cur[j - 1];
      }
      if (j + 1 < k) {
        v += cur[j + 1];
      }
      nxt[j] = std::move(v);
    }
    std::swap(cur, nxt);
  }
  StartCountVector out;
  out.k = k;
  out.counts.reserve(cur.size());
  for (auto& v : cur) {
    out.counts.push_back(Count::from_signed(std::move(v)));
  }
  return out;
}

Count hom_count_dp(int n, int k) {
  if (n < 1 || k < 0) {
    throw DomainError("hom_count_dp: need n >= 1 and k >= 0, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  if (k == 0) {
    return Count{};
  }
  return hom_start_counts_dp(n, k).total();
}

HomStream::HomStream(int n, int k, std::optional<int> start) : n_(n), k_(k), start_(start) {
  require_sizes(n, k, "enumerate_homs");
  if (start && (*start < 1 || *start > k)) {
    throw DomainError("enumerate_homs: start vertex " + std::to_string(*start) + " outside [1.." +
                      std::to_string(k) + "]");
  }
}

// Moves position `pos` to its next admissible value above the current one
// (0 means "before the first candidate").
bool HomStream::advance_candidate(std::size_t pos) {
  int& cur = images_[pos];
  if (pos == 0) {
    if (start_) {
      if (cur == 0) {
        cur = *start_;
        return true;
      }
      return false;
    }
    if (cur < k_) {
      ++cur;
      return true;
    }
    return false;
  }
  const int prev = images_[pos - 1];
  for (int candidate : {prev - 1, prev + 1}) {
    if (candidate > cur && candidate >= 1 && candidate <= k_) {
      cur = candidate;
      return true;
    }
  }
  return false;
}

std::optional<PathHom> HomStream::next() {
  if (done_) {
    return std::nullopt;
  }
  const auto last = static_cast<std::ptrdiff_t>(n_) - 1;
  std::ptrdiff_t pos = last;
  if (!started_) {
    started_ = true;
    images_.assign(static_cast<std::size_t>(n_), 0);
    pos = 0;
  }
  while (pos >= 0) {
    if (advance_candidate(static_cast<std::size_t>(pos))) {
      if (pos == last) {
        return PathHom(k_, images_);
      }
      ++pos;
      images_[static_cast<std::size_t>(pos)] = 0;
    } else {
      --pos;
    }
  }
  done_ = true;
  return std::nullopt;
}

Count epi_count_brute(int n, int k, int limit) {
  require_sizes(n, k, "epi_count_brute");
  if (n > limit) {
    throw SizeError("epi_count_brute: n=" + std::to_string(n) + " exceeds enumeration limit " +
                    std::to_string(limit));
  }
  if (k > n) {
    return Count{};
  }
  unsigned long long hits = 0;
  for (const auto& f : enumerate_homs(n, k)) {
    if (f.is_surjective()) {
      ++hits;
    }
  }
  return Count(hits);
}

} // namespace pathhom
