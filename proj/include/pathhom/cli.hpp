#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathhom::cli {

enum class ExitCode : int { Ok = 0, Mismatch = 1, Usage = 2 };

enum class Format { Plain, Csv, Json };

/// One evaluated quantity. `value` is an exact decimal string for counts
/// (comma-joined for an epispectrum, a word or an ordering for the
/// structural subcommands).
struct ResultRecord {
  std::string op;
  std::vector<std::pair<std::string, long long>> params;
  std::string method;
  std::string value;
  std::int64_t elapsed_ns = 0;

  /// Parameter value or nullptr when absent.
  const long long* param(std::string_view name) const;
};

/// Orders records by (op, params, method) so output is reproducible.
void sort_records(std::vector<ResultRecord>& records);

/// plain: one value per line. csv: header `op,n,k,j,method,value,elapsed_ns`.
/// json: one object per line.
void write_records(std::ostream& out, std::span<const ResultRecord> records, Format format);

std::string csv_header();

/// Cross-checks every formula against its oracles within the given bounds.
struct VerifyOptions {
  int max_n = 12;
  int max_k = 12;
  int hom_enum_limit = 16;
  int end_enum_limit = 14;
  int lattice_limit = 30;
};

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;
  std::int64_t elapsed_ns = 0;
  bool passed() const { return failures == 0; }
};

struct ConjectureRow {
  int k = 0;
  // Smallest n from which brute force matches the binomial form up to the
  // run's bound; 0 when no such n was observed.
  int first_agreeing_n = 0;
  int checked_up_to = 0;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  std::vector<ConjectureRow> conjecture;
  bool passed() const;
};

VerifyReport run_verify(const VerifyOptions& options);

/// Timing grid. An empty `ns` list yields an empty table.
struct BenchOptions {
  std::vector<int> ns;
  std::vector<int> ks;  // ignored when diagonal
  bool diagonal = false;
  std::vector<std::string> ops{"hom", "epi", "lk"};
  int hom_enum_limit = 16;
  int end_enum_limit = 14;
};

struct BenchResult {
  std::vector<ResultRecord> records;
  std::vector<std::string> disagreements;
};

BenchResult run_bench(const BenchOptions& options);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace pathhom::cli
