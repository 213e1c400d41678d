#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "pathhom/cli.hpp"
#include "pathhom/closedform.hpp"
#include "pathhom/congruence.hpp"
#include "pathhom/lattice.hpp"
#include "pathhom/oracle.hpp"

namespace pathhom::cli {

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

namespace {

class Suite {
public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  template <typename A, typename B>
  void expect_equal(const A& lhs, const B& rhs, const std::string& where) {
    ++result_.cases;
    if (!(lhs == rhs)) {
      fail(where);
    }
  }

  void expect(bool ok, const std::string& where) {
    ++result_.cases;
    if (!ok) {
      fail(where);
    }
  }

  SuiteResult finish(std::chrono::steady_clock::time_point start) {
    result_.elapsed_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
            .count();
    return std::move(result_);
  }

private:
  void fail(const std::string& where) {
    if (result_.failures++ == 0) {
      result_.first_failure = where;
    }
  }

  SuiteResult result_;
};

std::string at(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

// Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      visit(SetPartition::from_labels(labels));
      return;
    }
    const int cap = i == 0 ? 0 : prefix_max[i - 1] + 1;
    for (int v = 0; v <= cap; ++v) {
      labels[i] = v;
      prefix_max[i] = i == 0 ? v : std::max(prefix_max[i - 1], v);
      rec(i + 1);
    }
  };
  if (n > 0) {
    rec(0);
  }
}

} // namespace

VerifyReport run_verify(const VerifyOptions& o) {
  using clock = std::chrono::steady_clock;
  VerifyReport report;
  const int max_n = std::max(o.max_n, 1);
  const int max_k = std::max(o.max_k, 1);
  auto run_suite = [&](const std::string& name, const std::function<void(Suite&)>& body) {
    Suite s(name);
    auto start = clock::now();
    body(s);
    report.suites.push_back(s.finish(start));
  };

  run_suite("hom closed = dp", [&](Suite& s) {
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 1; k <= max_k; ++k) {
        s.expect_equal(hom_count_closed(n, k), hom_count_dp(n, k), at(n, k));
      }
    }
  });

  run_suite("hom1 closed = lattice = dp[1]", [&](Suite& s) {
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 1; k <= max_k; ++k) {
        const auto dp1 = hom_start_counts_dp(n, k)[1];
        s.expect_equal(hom1_count_closed(n, k), dp1, at(n, k));
        s.expect_equal(hom1_via_lattice(n, k), dp1, at(n, k));
      }
    }
  });

  run_suite("homj arworn-wojtylak = dp[j]", [&](Suite& s) {
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 1; k <= max_k; ++k) {
        const auto dp = hom_start_counts_dp(n, k);
        for (int j = 1; j <= k; ++j) {
          s.expect_equal(hom_j_count_aw(n, k, j), dp[j], at(n, k) + " j=" + std::to_string(j));
        }
      }
    }
  });

  run_suite("dp recurrence and start symmetry", [&](Suite& s) {
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 1; k <= max_k; ++k) {
        const auto dp = hom_start_counts_dp(n, k);
        for (int j = 1; j <= k; ++j) {
          s.expect_equal(dp[j], dp[k + 1 - j], at(n, k) + " j=" + std::to_string(j));
        }
        if (n >= 2 && k >= 2) {
          const auto prev = hom_start_counts_dp(n - 1, k);
          BigInt rhs = 2 * prev.total().value() - 2 * prev[1].value();
          s.expect_equal(dp.total().value(), rhs, at(n, k));
        }
      }
    }
  });

  run_suite("enumeration length = dp", [&](Suite& s) {
    const int bound_n = std::min({max_n, 12, o.hom_enum_limit});
    for (int n = 1; n <= bound_n; ++n) {
      for (int k = 1; k <= std::min(max_k, 12); ++k) {
        unsigned long long len = 0;
        for ([[maybe_unused]] const auto& f : enumerate_homs(n, k)) {
          ++len;
        }
        s.expect_equal(Count(len), hom_count_dp(n, k), at(n, k));
      }
    }
  });

  run_suite("end closed = dp", [&](Suite& s) {
    for (int n = 1; n <= max_n; ++n) {
      s.expect_equal(end_count_closed(n), hom_count_dp(n, n), "n=" + std::to_string(n));
    }
  });

  run_suite("epi inclusion-exclusion = brute", [&](Suite& s) {
    const int bound_n = std::min({max_n, 12, o.hom_enum_limit});
    for (int n = 1; n <= bound_n; ++n) {
      for (int k = 1; k <= std::min(n, max_k); ++k) {
        const auto brute = epi_count_brute(n, k, o.hom_enum_limit);
        s.expect_equal(epi_count_ie(n, k, HomBackend::Closed), brute, at(n, k));
        s.expect_equal(epi_count_ie(n, k, HomBackend::Dp), brute, at(n, k));
      }
    }
  });

  run_suite("lk via hom = lk closed = telescope", [&](Suite& s) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 1; 2 * k <= n && k <= max_k; ++k) {
        const auto closed = lk_closed(n, k);
        s.expect_equal(lk_via_hom(n, k), closed, at(n, k));
        const auto tb = lk_telescope(n, k);
        s.expect_equal(tb.total(), closed, at(n, k));
        s.expect_equal(tb.d.back(), closed.value(), at(n, k));
      }
    }
  });

  run_suite("reflection = band dp", [&](Suite& s) {
    const int len_bound = std::min({std::max(max_n, 2), 20, o.lattice_limit});
    const int band_bound = std::min(max_k, 8);
    for (int len = 0; len <= len_bound; ++len) {
      for (int e = 0; e <= len; ++e) {
        for (int t = 0; t <= band_bound; ++t) {
          for (int sv = 0; sv <= band_bound; ++sv) {
            BandSpec band{t, sv};
            s.expect_equal(lattice_count_banded(e, len - e, band),
                           lattice_count_banded_brute(e, len - e, band, o.lattice_limit),
                           "e=" + std::to_string(e) + " nn=" + std::to_string(len - e) +
                               " t=" + std::to_string(t) + " s=" + std::to_string(sv));
          }
        }
      }
    }
  });

  run_suite("hom1 <-> lattice word bijection", [&](Suite& s) {
    for (int n = 1; n <= std::min(max_n, 10); ++n) {
      for (int k = 1; k <= std::min(max_k, 10); ++k) {
        std::set<LatticeWord> words;
        unsigned long long homs = 0;
        for (const auto& f : enumerate_homs(n, k, 1)) {
          ++homs;
          auto w = encode_hom(f);
          s.expect(decode_word(w, k) == f, at(n, k) + " f=" + f.to_string());
          words.insert(std::move(w));
        }
        s.expect_equal(words.size(), homs, at(n, k) + " injective");
      }
    }
  });

  run_suite("binomial identities m <= 500", [&](Suite& s) {
    auto r = check_binomial_identities(500);
    s.expect(r.ok, r.first_failing_m ? "m=" + std::to_string(*r.first_failing_m) : "");
  });

  const int end_bound = std::min(max_n, o.end_enum_limit);
  std::map<int, Epispectrum> brute_spectra;
  run_suite("epispectrum brute = formula = closed", [&](Suite& s) {
    for (int n = 2; n <= end_bound; ++n) {
      auto brute = epispectrum_brute(n, o.end_enum_limit);
      s.expect_equal(brute, epispectrum_formula(n), "n=" + std::to_string(n));
      for (int k = 1; 2 * k <= n; ++k) {
        s.expect_equal(brute.at(k), lk_closed(n, k), at(n, k));
      }
      brute_spectra.emplace(n, std::move(brute));
    }
  });

  run_suite("kernel partitions x2 = epi brute", [&](Suite& s) {
    for (int n = 2; n <= std::min({end_bound, 12, o.hom_enum_limit}); ++n) {
      std::map<std::size_t, unsigned long long> by_blocks;
      for (const auto& p : induced_partitions(n, o.end_enum_limit)) {
        ++by_blocks[p.block_count()];
      }
      for (int k = 1; k <= n - 1; ++k) {
        const int r = n - k + 1;
        s.expect_equal(Count(2 * by_blocks[static_cast<std::size_t>(r)]),
                       epi_count_brute(n, r, o.hom_enum_limit), at(n, k));
      }
    }
  });

  run_suite("shift normalization keeps the kernel", [&](Suite& s) {
    for (int n = 1; n <= end_bound; ++n) {
      for (const auto& f : enumerate_homs(n, n)) {
        const auto g = shift_normalize(f);
        s.expect(g.is_surjective() && kernel_partition(g) == kernel_partition(f),
                 "f=" + f.to_string());
      }
    }
  });

  run_suite("arrangements accept exactly induced partitions", [&](Suite& s) {
    for (int n = 2; n <= std::min(end_bound, 11); ++n) {
      const auto induced = induced_partitions(n, o.end_enum_limit);
      for_each_set_partition(n, [&](const SetPartition& p) {
        const auto r = arrangements(p);
        const bool expected = induced.count(p) > 0;
        bool ok = r.valid == expected;
        if (ok && r.valid) {
          auto reversed = r.orderings[0];
          std::reverse(reversed.begin(), reversed.end());
          ok = r.orderings.size() == 2 && r.orderings[1] == reversed && r.witnesses.size() == 2 &&
               kernel_partition(r.witnesses[0]) == p && kernel_partition(r.witnesses[1]) == p &&
               r.witnesses[0].is_surjective();
        }
        s.expect(ok, "p=" + p.to_string());
      });
    }
  });

  run_suite("lk degree (forward differences vanish)", [&](Suite& s) {
    for (int k = 1; k <= std::min(max_k, 10); ++k) {
      const int order = lk_degree(k) + 1;
      for (const auto& d : lk_forward_differences(k, order, 2 * k, 3 * k + 4)) {
        s.expect(d == 0, "k=" + std::to_string(k));
      }
      // one order lower must not vanish identically
      const auto lower = lk_forward_differences(k, order - 1, 2 * k, 3 * k + 4);
      s.expect(std::any_of(lower.begin(), lower.end(), [](const BigInt& v) { return v != 0; }),
               "k=" + std::to_string(k) + " degree too low");
    }
  });

  for (int k = 1; k <= std::min(max_k, end_bound - 1); ++k) {
    ConjectureRow row{k, 0, end_bound};
    for (int n = end_bound; n >= k + 1; --n) {
      if (brute_spectra.at(n).at(k) != lk_polynomial(n, k)) {
        break;
      }
      row.first_agreeing_n = n;
    }
    report.conjecture.push_back(row);
  }
  return report;
}

} // namespace pathhom::cli
