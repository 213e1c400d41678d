#pragma once

#include <set>
#include <string>
#include <vector>

#include "pathhom/core.hpp"

namespace pathhom {

inline constexpr int kDefaultEndEnumLimit = 14;

/// Partition of [1..n] into the fibres of f.
SetPartition kernel_partition(const PathHom& f);

/// x -> f(x) - min(f) + 1, an epimorphism onto P_{|f([n])|} with the same
/// kernel.
PathHom shift_normalize(const PathHom& f);

/// Every distinct kernel partition of End(P_n). Throws SizeError above `limit`.
std::set<SetPartition> induced_partitions(int n, int limit = kDefaultEndEnumLimit);

/// Epispectrum by enumerating End(P_n) and bucketing kernel partitions by
/// block count.
Epispectrum epispectrum_brute(int n, int limit = kDefaultEndEnumLimit);

/// Epispectrum with every entry taken from lk_via_hom.
Epispectrum epispectrum_formula(int n);

/// Outcome of rebuilding the block order of an epimorphism from its kernel.
struct ArrangementResult {
  bool valid = false;
  /// Zero or two orderings of 1-based block indices (blocks sorted by
  /// minimum), the second the reverse of the first.
  std::vector<std::vector<int>> orderings;
  /// witnesses[i] maps each vertex to the position of its block in orderings[i].
  std::vector<PathHom> witnesses;
  /// Why the partition was rejected; empty when valid.
  std::string reason;

  /// "{7}{6,8}..." text of ordering i.
  std::string ordering_text(const SetPartition& p, std::size_t i) const;
};

/// Greedy two-seed arrangement: A_1 A_2 and A_2 A_1, then each later block
/// attaches at whichever end holds min(A_{i+1}) - 1. The result is checked
/// to be a homomorphism before it is returned.
ArrangementResult arrangements(const SetPartition& p);

} // namespace pathhom
