#pragma once

#include <vector>

#include "pathhom/core.hpp"

namespace pathhom {

inline constexpr int kDefaultLatticeBruteLimit = 30;

/// The strip between y = x + t (above) and y = x - s (below), boundaries
/// included.
struct BandSpec {
  int t = 0;
  int s = 0;

  /// Whether (e, nn) lies inside the strip.
  bool contains(int e, int nn) const { return nn <= e + t && nn >= e - s; }
};

/// Unconstrained paths from the origin to (e, nn): C(e + nn, e).
Count lattice_count_free(int e, int nn);

/// Paths from the origin to (e, nn) that stay inside `band`, by the
/// alternating reflection sum of period t + s + 2.
Count lattice_count_banded(int e, int nn, BandSpec band);

/// Same count by cell-by-cell dynamic programming over the strip. Throws
/// SizeError when e + nn exceeds `limit`.
Count lattice_count_banded_brute(int e, int nn, BandSpec band, int limit = kDefaultLatticeBruteLimit);

/// |Hom^1(P_n, P_k)| as a sum of banded counts over endpoints (l, n-1-l),
/// l = ceil((n-1)/2) .. min(floor((n+k)/2), n) - 1, strip t = 0, s = k - 1.
Count hom1_via_lattice(int n, int k);

/// The endpoints summed over by hom1_via_lattice, in increasing l.
std::vector<LatticePoint> hom1_lattice_endpoints(int n, int k);

/// Step i is East when f(i+1) = f(i) + 1 and North when f(i+1) = f(i) - 1.
/// Requires f(1) = 1.
LatticeWord encode_hom(const PathHom& f);

/// Inverse of encode_hom for target P_k. Throws DomainError naming the first
/// prefix that leaves the strip 0 <= #E - #N <= k - 1.
PathHom decode_word(const LatticeWord& w, int k);

} // namespace pathhom
