#pragma once

#include <optional>
#include <vector>

#include "pathhom/core.hpp"

namespace pathhom {

/// |Hom(P_n, P_k)| = k 2^{n-1} minus the reflection double sum over
/// i = 0..n-2 and j in Z (period k + 1).
Count hom_count_closed(int n, int k);

/// |Hom^1(P_n, P_k)| from the two-binomial alternating j-sum.
Count hom1_count_closed(int n, int k);

/// |Hom^j(P_n, P_k)| from the parity-split Arworn-Wojtylak sum.
///
/// The formula is stated for a zero-based start label j0 = j - 1. When
/// n - j0 is odd the inner sum runs u = 0..floor((k-1)/2) with a ceiling
/// shift; when n - j0 is even it runs u = 1..ceil((k-1)/2) with a floor
/// shift. The t-sum is cut to the window where some binomial can be nonzero.
Count hom_j_count_aw(int n, int k, int j);

/// |End(P_n)| via the odd/even closed forms with (n+1) 2^{n-1} leading term.
Count end_count_closed(int n);

/// |Hom(P_n, P_k)| for any integer k, defined as zero when k <= 0.
Count hom_count_or_zero(int n, int k);

enum class HomBackend { Closed, Dp };

/// |Epi(P_n, P_k)| = H(k) - 2 H(k-1) + H(k-2) with H = |Hom(P_n, .)|.
Count epi_count_ie(int n, int k, HomBackend backend = HomBackend::Closed);

/// l_k(n) = (H(n-k+1) + H(n-k-1)) / 2 - H(n-k), valid for 1 <= k <= n-1.
/// Throws InconsistencyError if the halved part is odd.
Count lk_via_hom(int n, int k, HomBackend backend = HomBackend::Closed);

/// C(n-1, ceil(k/2)-1) + C(n-1, floor(k/2)-1), evaluated for any n >= 1,
/// k >= 1 without checking where it equals l_k(n).
Count lk_polynomial(int n, int k);

/// l_k(n) for n >= 2k. Throws DomainError below that threshold.
Count lk_closed(int n, int k);

/// Degree of n -> l_k(n) on n >= 2k: ceil((k-2)/2), and 0 for k = 1.
int lk_degree(int k);

/// Forward differences of the given order of n -> lk_closed(n, k) over
/// n = n_first..n_last (n_first >= 2k).
std::vector<BigInt> lk_forward_differences(int k, int order, int n_first, int n_last);

/// Term-level view of l_k(n) as the weighted sum
///   sum_{i=0}^{n-2} 2^{n-i-2} sum_j (-A_ij + 2 B_ij - C_ij)
/// together with the telescoping sequence D_0..D_{n-1}.
struct LkTermBreakdown {
  struct Term {
    BigInt plus;
    BigInt minus;
    BigInt value() const { return plus - minus; }
  };

  int n = 0;
  int k = 0;
  int j_min = 0;
  int j_max = 0;

  // Indexed [i][j - j_min] for i = 0..n-2.
  std::vector<std::vector<Term>> terms_a;
  std::vector<std::vector<Term>> terms_b;
  std::vector<std::vector<Term>> terms_c;

  // D_0..D_{n-1}.
  std::vector<BigInt> d;

  /// sum_j (-A_ij + 2 B_ij - C_ij) for row i.
  BigInt row_sum(int i) const;

  /// 2^{n-i-2} row_sum(i), which equals D_{i+1} - D_i.
  BigInt weighted_row(int i) const;

  /// The full weighted sum, i.e. l_k(n).
  Count total() const;
};

/// Materializes the A/B/C grids and the D sequence. Requires n >= 2k.
LkTermBreakdown lk_telescope(int n, int k);

struct IdentityReport {
  bool ok = true;
  std::optional<int> first_failing_m;
  // 1 for sum C(2k,k) 4^{m-k}/2 = m C(2m,m); 2 for the odd-row companion.
  int failing_identity = 0;
};

/// Checks both central-binomial power-of-two identities for 1 <= m <= m_max.
IdentityReport check_binomial_identities(int m_max);

/// Left and right sides of the identities at one m, for tests and reporting.
struct IdentitySides {
  BigInt lhs;
  BigInt rhs;
};
IdentitySides central_identity_sides(int m);
IdentitySides odd_row_identity_sides(int m);

} // namespace pathhom
