#include <chrono>
#include <functional>

#include "pathhom/cli.hpp"
#include "pathhom/closedform.hpp"
#include "pathhom/congruence.hpp"
#include "pathhom/oracle.hpp"

namespace pathhom::cli {

namespace {

ResultRecord timed(const std::string& op, int n, int k, const std::string& method,
                   const std::function<Count()>& eval) {
  auto start = std::chrono::steady_clock::now();
  Count value = eval();
  auto stop = std::chrono::steady_clock::now();
  return ResultRecord{op,
                      {{"n", n}, {"k", k}},
                      method,
                      value.to_string(),
                      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()};
}

Count enum_count(int n, int k) {
  unsigned long long len = 0;
  for ([[maybe_unused]] const auto& f : enumerate_homs(n, k)) {
    ++len;
  }
  return Count(len);
}

} // namespace

BenchResult run_bench(const BenchOptions& o) {
  BenchResult out;
  auto cells = [&] {
    std::vector<std::pair<int, int>> c;
    for (int n : o.ns) {
      if (o.diagonal) {
        c.emplace_back(n, n);
      } else {
        for (int k : o.ks) {
          c.emplace_back(n, k);
        }
      }
    }
    return c;
  }();

  for (const auto& op : o.ops) {
    for (auto [n, k] : cells) {
      if (n < 1 || k < 1) {
        continue;
      }
      std::vector<ResultRecord> cell;
      if (op == "hom") {
        cell.push_back(timed(op, n, k, "closed", [=] { return hom_count_closed(n, k); }));
        cell.push_back(timed(op, n, k, "dp", [=] { return hom_count_dp(n, k); }));
        if (n <= o.hom_enum_limit) {
          cell.push_back(timed(op, n, k, "enum", [=] { return enum_count(n, k); }));
        }
      } else if (op == "epi") {
        cell.push_back(timed(op, n, k, "ie", [=] { return epi_count_ie(n, k, HomBackend::Closed); }));
        cell.push_back(timed(op, n, k, "ie-dp", [=] { return epi_count_ie(n, k, HomBackend::Dp); }));
        if (n <= o.hom_enum_limit) {
          const int limit = o.hom_enum_limit;
          cell.push_back(timed(op, n, k, "brute", [=] { return epi_count_brute(n, k, limit); }));
        }
      } else if (op == "lk") {
        if (k > n - 1) {
          continue;
        }
        if (n >= 2 * k) {
          cell.push_back(timed(op, n, k, "closed", [=] { return lk_closed(n, k); }));
          cell.push_back(timed(op, n, k, "telescope", [=] { return lk_telescope(n, k).total(); }));
        }
        cell.push_back(timed(op, n, k, "hom", [=] { return lk_via_hom(n, k, HomBackend::Closed); }));
        cell.push_back(timed(op, n, k, "hom-dp", [=] { return lk_via_hom(n, k, HomBackend::Dp); }));
        if (n <= o.end_enum_limit) {
          const int limit = o.end_enum_limit;
          cell.push_back(timed(op, n, k, "brute", [=] { return epispectrum_brute(n, limit).at(k); }));
        }
      } else {
        throw DomainError("bench: unknown op '" + op + "'");
      }
      for (const auto& r : cell) {
        if (r.value != cell.front().value) {
          out.disagreements.push_back(op + " n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                      cell.front().method + "=" + cell.front().value + " vs " +
                                      r.method + "=" + r.value);
        }
      }
      out.records.insert(out.records.end(), cell.begin(), cell.end());
    }
  }
  sort_records(out.records);
  return out;
}

} // namespace pathhom::cli
