#include "pathhom/closedform.hpp"

#include <algorithm>
#include <string>

#include "pathhom/oracle.hpp"

namespace pathhom {

namespace {

BigInt pow2(int e) {
  BigInt v = 1;
  v <<= e;
  return v;
}

void require_positive(int n, int k, const char* op) {
  if (n < 1 || k < 1) {
    throw DomainError(std::string(op) + ": need n >= 1 and k >= 1, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
}

// Largest |j| worth visiting for an alternating sum of period `period` whose
// binomial arguments are bounded by `reach`.
int j_window(int reach, int period) { return (reach + period) / period; }

} // namespace

Count hom_count_closed(int n, int k) {
  require_positive(n, k, "hom_count_closed");
  const BinomialTable binom_table(std::max(n - 2, 0));
  const int period = k + 1;
  const int jmax = j_window(n, period);

  BigInt correction = 0;
  for (int i = 0; i <= n - 2; ++i) {
    BigInt inner = 0;
    const int up = ceil_div(i, 2);
    const int down = floor_div(i + k + 1, 2);
    for (int j = -jmax; j <= jmax; ++j) {
      inner += binom_table(i, up - j * period);
      inner -= binom_table(i, down - j * period);
    }
    correction += pow2(n - 1 - i) * inner;
  }
  return Count::from_signed(BigInt(k) * pow2(n - 1) - correction);
}

Count hom1_count_closed(int n, int k) {
  require_positive(n, k, "hom1_count_closed");
  const auto row = binomial_row(n - 1);
  const int period = k + 1;
  const int jmax = j_window(n, period);
  const int up = ceil_div(n - 1, 2);
  const int down = floor_div(n + k, 2);

  BigInt sum = 0;
  for (int j = -jmax; j <= jmax; ++j) {
    sum += binomial_at(row, up - j * period);
    sum -= binomial_at(row, down - j * period);
  }
  return Count::from_signed(std::move(sum));
}

Count hom_j_count_aw(int n, int k, int j) {
  require_positive(n, k, "hom_j_count_aw");
  if (j < 1 || j > k) {
    throw DomainError("hom_j_count_aw: start vertex " + std::to_string(j) + " outside [1.." +
                      std::to_string(k) + "]");
  }
  const int m = n - 1;
  const auto row = binomial_row(m);
  const int j0 = j - 1;
  const bool odd_branch = (n - j0) % 2 != 0;

  const int base = floor_div(n - j0 - 1, 2);
  const int u_first = odd_branch ? 0 : 1;
  const int u_last = odd_branch ? floor_div(k - 1, 2) : ceil_div(k - 1, 2);
  auto shift = [&](int t) {
    return odd_branch ? ceil_div((k + 1) * t, 2) : floor_div((k + 1) * t, 2);
  };

  // the shift moves by at least one per unit of t, so both scans terminate
  int t_lo = 0;
  while (base + u_last + shift(t_lo - 1) >= 0) {
    --t_lo;
  }
  int t_hi = 0;
  while (base + u_first + shift(t_hi + 1) <= m) {
    ++t_hi;
  }

  BigInt total = 0;
  for (int t = t_lo; t <= t_hi; ++t) {
    BigInt inner = 0;
    for (int u = u_first; u <= u_last; ++u) {
      inner += binomial_at(row, base + u + shift(t));
    }
    if (t % 2 == 0) {
      total += inner;
    } else {
      total -= inner;
    }
  }
  return Count::from_signed(std::move(total));
}

Count end_count_closed(int n) {
  if (n < 1) {
    throw DomainError("end_count_closed: need n >= 1, got " + std::to_string(n));
  }
  BigInt lead = BigInt(n + 1) * pow2(n - 1);
  if (n % 2 != 0) {
    return Count::from_signed(lead - BigInt(2 * n - 1) * binom(n - 1, (n - 1) / 2).value());
  }
  return Count::from_signed(lead - BigInt(n) * binom(n, n / 2).value());
}

Count hom_count_or_zero(int n, int k) { return k <= 0 ? Count{} : hom_count_closed(n, k); }

namespace {

BigInt hom_value(int n, int k, HomBackend backend) {
  if (k <= 0) {
    return 0;
  }
  return backend == HomBackend::Closed ? hom_count_closed(n, k).value() : hom_count_dp(n, k).value();
}

} // namespace

Count epi_count_ie(int n, int k, HomBackend backend) {
  require_positive(n, k, "epi_count_ie");
  return Count::from_signed(hom_value(n, k, backend) - 2 * hom_value(n, k - 1, backend) +
                            hom_value(n, k - 2, backend));
}

Count lk_via_hom(int n, int k, HomBackend backend) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw DomainError("lk_via_hom: need n >= 2 and 1 <= k <= n-1, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  BigInt halved = hom_value(n, n - k + 1, backend) + hom_value(n, n - k - 1, backend);
  if (bit_test(halved, 0)) {
    throw InconsistencyError("lk_via_hom: odd outer sum " + halved.str() + " at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k));
  }
  halved >>= 1;
  return Count::from_signed(halved - hom_value(n, n - k, backend));
}

Count lk_polynomial(int n, int k) {
  require_positive(n, k, "lk_polynomial");
  return binom(n - 1, ceil_div(k, 2) - 1) + binom(n - 1, floor_div(k, 2) - 1);
}

Count lk_closed(int n, int k) {
  if (k < 1 || n < 2 * k) {
    throw DomainError("lk_closed: the binomial form is only established for n >= 2k, got n=" +
                      std::to_string(n) + ", k=" + std::to_string(k));
  }
  return lk_polynomial(n, k);
}

int lk_degree(int k) { return std::max(ceil_div(k - 2, 2), 0); }

std::vector<BigInt> lk_forward_differences(int k, int order, int n_first, int n_last) {
  std::vector<BigInt> seq;
  for (int n = n_first; n <= n_last; ++n) {
    seq.push_back(lk_closed(n, k).value());
  }
  for (int o = 0; o < order && !seq.empty(); ++o) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      seq[i] = seq[i + 1] - seq[i];
    }
    seq.pop_back();
  }
  return seq;
}

BigInt LkTermBreakdown::row_sum(int i) const {
  BigInt s = 0;
  const auto& a = terms_a.at(static_cast<std::size_t>(i));
  const auto& b = terms_b.at(static_cast<std::size_t>(i));
  const auto& c = terms_c.at(static_cast<std::size_t>(i));
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    s += -a[idx].value() + 2 * b[idx].value() - c[idx].value();
  }
  return s;
}

BigInt LkTermBreakdown::weighted_row(int i) const { return pow2(n - i - 2) * row_sum(i); }

Count LkTermBreakdown::total() const {
  BigInt s = 0;
  for (int i = 0; i <= n - 2; ++i) {
    s += weighted_row(i);
  }
  return Count::from_signed(std::move(s));
}

LkTermBreakdown lk_telescope(int n, int k) {
  if (k < 1 || n < 2 * k) {
    throw DomainError("lk_telescope: need n >= 2k, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  const BinomialTable binom_table(n - 1);
  const int pa = n - k + 2;
  const int pb = n - k + 1;
  const int pc = n - k;

  LkTermBreakdown out;
  out.n = n;
  out.k = k;
  out.j_max = j_window(n, pc);
  out.j_min = -out.j_max;

  auto grid_row = [&](int i, int period, int minus_offset) {
    std::vector<LkTermBreakdown::Term> row;
    const int up = ceil_div(i, 2);
    for (int j = out.j_min; j <= out.j_max; ++j) {
      row.push_back({binom_table(i, up - j * period), binom_table(i, minus_offset - j * period)});
    }
    return row;
  };

  for (int i = 0; i <= n - 2; ++i) {
    out.terms_a.push_back(grid_row(i, pa, floor_div(i + n - k, 2) + 1));
    out.terms_b.push_back(grid_row(i, pb, floor_div(i + n - k - 1, 2) + 1));
    out.terms_c.push_back(grid_row(i, pc, floor_div(i + n - k - 2, 2) + 1));
  }
  for (int i = 0; i <= n - 1; ++i) {
    const int h = floor_div(i + n - k - 1, 2);
    out.d.push_back(pow2(n - i - 1) * (binom_table(i, h + 1) + binom_table(i, h - n + k)));
  }
  return out;
}

namespace {

// central[k] = C(2k, k) for k = 0..count-1.
std::vector<BigInt> central_binomials(int count) {
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(count, 1)));
  c[0] = 1;
  for (int k = 0; k + 1 < count; ++k) {
    c[k + 1] = c[k] * (2 * k + 1) * (2 * k + 2) / ((k + 1) * (k + 1));
  }
  return c;
}

IdentitySides central_sides(int m, const std::vector<BigInt>& central) {
  IdentitySides s;
  for (int k = 0; k <= m - 1; ++k) {
    s.lhs += central[k] << (2 * m - 1 - 2 * k);
  }
  s.rhs = BigInt(m) * central[m];
  return s;
}

// C(2k+1, k) = C(2k+2, k+1) / 2.
IdentitySides odd_row_sides(int m, const std::vector<BigInt>& central) {
  IdentitySides s;
  for (int k = 0; k <= m - 1; ++k) {
    s.lhs += (central[k + 1] >> 1) << (2 * m - 1 - 2 * k);
  }
  s.rhs = BigInt(m + 1) * (central[m + 1] >> 1) - pow2(2 * m);
  return s;
}

} // namespace

IdentitySides central_identity_sides(int m) {
  if (m < 1) {
    throw DomainError("central_identity_sides: need m >= 1");
  }
  return central_sides(m, central_binomials(m + 2));
}

IdentitySides odd_row_identity_sides(int m) {
  if (m < 1) {
    throw DomainError("odd_row_identity_sides: need m >= 1");
  }
  return odd_row_sides(m, central_binomials(m + 2));
}

IdentityReport check_binomial_identities(int m_max) {
  if (m_max < 1) {
    throw DomainError("check_binomial_identities: need m_max >= 1");
  }
  const auto central = central_binomials(m_max + 2);
  IdentityReport report;
  for (int m = 1; m <= m_max; ++m) {
    auto first = central_sides(m, central);
    if (first.lhs != first.rhs) {
      return {false, m, 1};
    }
    auto second = odd_row_sides(m, central);
    if (second.lhs != second.rhs) {
      return {false, m, 2};
    }
  }
  return report;
}

} // namespace pathhom
