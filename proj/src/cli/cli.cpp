#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pathhom/cli.hpp"
#include "pathhom/closedform.hpp"
#include "pathhom/congruence.hpp"
#include "pathhom/lattice.hpp"
#include "pathhom/oracle.hpp"

namespace pathhom::cli {

namespace {

struct Common {
  std::string method;
  std::string format = "plain";
  std::optional<int> limit_enum;

  Format parsed_format() const {
    if (format == "csv") {
      return Format::Csv;
    }
    if (format == "json") {
      return Format::Json;
    }
    return Format::Plain;
  }
  int limit(int fallback) const { return limit_enum.value_or(fallback); }
};

void add_common(CLI::App* sub, Common& c, std::vector<std::string> methods) {
  auto* opt = sub->add_option("--method", c.method, "Evaluation strategy");
  if (!methods.empty()) {
    opt->check(CLI::IsMember(std::move(methods)));
  }
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  sub->add_option("--limit-enum", c.limit_enum, "Enumeration size limit for brute-force methods")
      ->check(CLI::PositiveNumber);
}

template <typename F>
ResultRecord time_record(std::string op, std::vector<std::pair<std::string, long long>> params,
                         std::string method, F&& eval) {
  auto start = std::chrono::steady_clock::now();
  std::string value = eval();
  auto stop = std::chrono::steady_clock::now();
  return ResultRecord{std::move(op), std::move(params), std::move(method), std::move(value),
                      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()};
}

Count enumeration_length(HomStream stream) {
  unsigned long long len = 0;
  for ([[maybe_unused]] const auto& f : stream) {
    ++len;
  }
  return Count(len);
}

void require_enum(int n, int limit, const char* what) {
  if (n > limit) {
    throw SizeError(std::string(what) + ": n=" + std::to_string(n) + " exceeds enumeration limit " +
                    std::to_string(limit) + " (raise with --limit-enum)");
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) {
      continue;
    }
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

void write_verify(std::ostream& out, const VerifyReport& report, const VerifyOptions& o, Format format) {
  if (format == Format::Plain) {
    for (const auto& s : report.suites) {
      out << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " cases, "
          << s.elapsed_ns / 1000000 << " ms)";
      if (!s.passed()) {
        out << " first failure: " << s.first_failure << ", " << s.failures << " failures";
      }
      out << '\n';
    }
    out << "smallest n from which brute force matches the binomial form (checked up to n="
        << std::min(o.max_n, o.end_enum_limit) << "):\n";
    for (const auto& row : report.conjecture) {
      out << "  k=" << row.k << "  n=" << (row.first_agreeing_n ? std::to_string(row.first_agreeing_n) : "-")
          << "  (2k=" << 2 * row.k << ")\n";
    }
    out << (report.passed() ? "all suites passed\n" : "verification FAILED\n");
    return;
  }
  std::vector<ResultRecord> records;
  for (const auto& s : report.suites) {
    records.push_back({"verify", {{"max_n", o.max_n}, {"max_k", o.max_k}, {"cases", s.cases}},
                       s.name, std::to_string(s.failures), s.elapsed_ns});
  }
  for (const auto& row : report.conjecture) {
    records.push_back({"first-agreeing-n", {{"k", row.k}, {"checked_up_to", row.checked_up_to}},
                       "brute-vs-binomial", std::to_string(row.first_agreeing_n), 0});
  }
  write_records(out, records, format);
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homomorphism, epimorphism and congruence-class counts for paths", "pathhom"};
  app.require_subcommand(1);

  Common common;
  int n = 0;
  int k = 0;
  int j = 0;
  int e = 0;
  int nn = 0;
  int t = 0;
  int s = 0;
  std::string images;
  std::string word;
  std::string partition;
  int max_n = 12;
  int max_k = 12;
  std::string bench_ns = "";
  std::string bench_ks = "n";
  std::string bench_ops = "hom,epi,lk";

  auto* hom = app.add_subcommand("hom", "|Hom(P_n, P_k)|");
  hom->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  hom->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  add_common(hom, common, {"closed", "dp", "enum"});

  auto* homj = app.add_subcommand("homj", "|Hom^j(P_n, P_k)|, homomorphisms with f(1) = j");
  homj->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  homj->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  homj->add_option("--j", j)->required()->check(CLI::PositiveNumber);
  add_common(homj, common, {"aw", "dp", "enum"});

  auto* hom1 = app.add_subcommand("hom1", "|Hom^1(P_n, P_k)|");
  hom1->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  hom1->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  add_common(hom1, common, {"closed", "lattice", "dp", "enum"});

  auto* end = app.add_subcommand("end", "|End(P_n)|");
  end->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  add_common(end, common, {"closed", "dp", "enum"});

  auto* epi = app.add_subcommand("epi", "|Epi(P_n, P_k)|");
  epi->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  epi->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  add_common(epi, common, {"ie", "ie-dp", "brute"});

  auto* lk = app.add_subcommand("lk", "l_k(n), induced partitions with n-k+1 blocks");
  lk->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  lk->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  add_common(lk, common, {"closed", "hom", "hom-dp", "telescope", "brute"});

  auto* spectrum = app.add_subcommand("epispectrum", "(l_1(n), ..., l_{n-1}(n))");
  spectrum->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  add_common(spectrum, common, {"formula", "brute"});

  auto* lattice = app.add_subcommand("lattice", "Lattice paths to (e, nn) inside the band y-x in [-s, t]");
  lattice->add_option("--e", e)->required()->check(CLI::NonNegativeNumber);
  lattice->add_option("--nn", nn)->required()->check(CLI::NonNegativeNumber);
  lattice->add_option("--t", t)->check(CLI::NonNegativeNumber);
  lattice->add_option("--s", s)->check(CLI::NonNegativeNumber);
  add_common(lattice, common, {"reflection", "brute", "free"});

  auto* encode = app.add_subcommand("encode", "Lattice word of a homomorphism with f(1) = 1");
  encode->add_option("--images", images, "Comma-separated images f(1),...,f(n)")->required();
  encode->add_option("--k", k, "Target path size (default: largest image)")->check(CLI::PositiveNumber);
  add_common(encode, common, {"lattice"});

  auto* decode = app.add_subcommand("decode", "Homomorphism P_n -> P_k of an E/N word");
  decode->add_option("--word", word)->required();
  decode->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  add_common(decode, common, {"lattice"});

  auto* arrange = app.add_subcommand("arrange", "Block orderings realizing a partition as an epimorphism kernel");
  arrange->add_option("--partition", partition, "e.g. {1,3}{2}")->required();
  add_common(arrange, common, {"greedy"});

  auto* verify = app.add_subcommand("verify", "Cross-check every formula against its oracles");
  verify->add_option("--max-n", max_n)->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--max-k", max_k)->capture_default_str()->check(CLI::PositiveNumber);
  add_common(verify, common, {});

  auto* bench = app.add_subcommand("bench", "Time closed form vs DP vs enumeration over a grid");
  bench->add_option("--n", bench_ns, "Comma-separated n values");
  bench->add_option("--k", bench_ks, "Comma-separated k values, or 'n' for the diagonal")->capture_default_str();
  bench->add_option("--ops", bench_ops, "Subset of hom,epi,lk")->capture_default_str();
  add_common(bench, common, {});

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return static_cast<int>(ExitCode::Usage);
  }

  const Format format = common.parsed_format();
  auto method_or = [&](const std::string& fallback) { return common.method.empty() ? fallback : common.method; };
  std::vector<ResultRecord> records;

  try {
    if (hom->parsed()) {
      const auto m = method_or("closed");
      records.push_back(time_record("hom", {{"n", n}, {"k", k}}, m, [&] {
        if (m == "dp") {
          return hom_count_dp(n, k).to_string();
        }
        if (m == "enum") {
          require_enum(n, common.limit(kDefaultHomEnumLimit), "hom");
          return enumeration_length(enumerate_homs(n, k)).to_string();
        }
        return hom_count_closed(n, k).to_string();
      }));
    } else if (homj->parsed()) {
      const auto m = method_or("aw");
      records.push_back(time_record("homj", {{"n", n}, {"k", k}, {"j", j}}, m, [&] {
        if (j > k) {
          throw DomainError("homj: need 1 <= j <= k");
        }
        if (m == "dp") {
          return hom_start_counts_dp(n, k)[j].to_string();
        }
        if (m == "enum") {
          require_enum(n, common.limit(kDefaultHomEnumLimit), "homj");
          return enumeration_length(enumerate_homs(n, k, j)).to_string();
        }
        return hom_j_count_aw(n, k, j).to_string();
      }));
    } else if (hom1->parsed()) {
      const auto m = method_or("closed");
      records.push_back(time_record("hom1", {{"n", n}, {"k", k}}, m, [&] {
        if (m == "lattice") {
          return hom1_via_lattice(n, k).to_string();
        }
        if (m == "dp") {
          return hom_start_counts_dp(n, k)[1].to_string();
        }
        if (m == "enum") {
          require_enum(n, common.limit(kDefaultHomEnumLimit), "hom1");
          return enumeration_length(enumerate_homs(n, k, 1)).to_string();
        }
        return hom1_count_closed(n, k).to_string();
      }));
    } else if (end->parsed()) {
      const auto m = method_or("closed");
      records.push_back(time_record("end", {{"n", n}}, m, [&] {
        if (m == "dp") {
          return hom_count_dp(n, n).to_string();
        }
        if (m == "enum") {
          require_enum(n, common.limit(kDefaultHomEnumLimit), "end");
          return enumeration_length(enumerate_homs(n, n)).to_string();
        }
        return end_count_closed(n).to_string();
      }));
    } else if (epi->parsed()) {
      const auto m = method_or("ie");
      records.push_back(time_record("epi", {{"n", n}, {"k", k}}, m, [&] {
        if (m == "ie-dp") {
          return epi_count_ie(n, k, HomBackend::Dp).to_string();
        }
        if (m == "brute") {
          return epi_count_brute(n, k, common.limit(kDefaultHomEnumLimit)).to_string();
        }
        return epi_count_ie(n, k, HomBackend::Closed).to_string();
      }));
    } else if (lk->parsed()) {
      // the binomial form is used only where it is established
      const auto m = method_or(n >= 2 * k ? "closed" : "hom");
      records.push_back(time_record("lk", {{"n", n}, {"k", k}}, m, [&] {
        if (m == "hom") {
          return lk_via_hom(n, k, HomBackend::Closed).to_string();
        }
        if (m == "hom-dp") {
          return lk_via_hom(n, k, HomBackend::Dp).to_string();
        }
        if (m == "telescope") {
          return lk_telescope(n, k).total().to_string();
        }
        if (m == "brute") {
          if (k > n - 1) {
            throw DomainError("lk: need 1 <= k <= n-1");
          }
          return epispectrum_brute(n, common.limit(kDefaultEndEnumLimit)).at(k).to_string();
        }
        return lk_closed(n, k).to_string();
      }));
    } else if (spectrum->parsed()) {
      const auto m = method_or("formula");
      records.push_back(time_record("epispectrum", {{"n", n}}, m, [&] {
        if (m == "brute") {
          return epispectrum_brute(n, common.limit(kDefaultEndEnumLimit)).to_string();
        }
        return epispectrum_formula(n).to_string();
      }));
    } else if (lattice->parsed()) {
      const auto m = method_or("reflection");
      records.push_back(time_record("lattice", {{"e", e}, {"nn", nn}, {"t", t}, {"s", s}}, m, [&] {
        if (m == "brute") {
          return lattice_count_banded_brute(e, nn, {t, s}, common.limit(kDefaultLatticeBruteLimit)).to_string();
        }
        if (m == "free") {
          return lattice_count_free(e, nn).to_string();
        }
        return lattice_count_banded(e, nn, {t, s}).to_string();
      }));
    } else if (encode->parsed()) {
      std::vector<int> imgs = parse_int_list(images);
      const int target = k > 0 ? k : (imgs.empty() ? 1 : *std::max_element(imgs.begin(), imgs.end()));
      PathHom f(target, std::move(imgs));
      records.push_back(time_record("encode", {{"n", f.n()}, {"k", target}}, method_or("lattice"),
                                    [&] { return encode_hom(f).to_string(); }));
    } else if (decode->parsed()) {
      const auto w = LatticeWord::parse(word);
      records.push_back(time_record("decode", {{"n", static_cast<long long>(w.size()) + 1}, {"k", k}},
                                    method_or("lattice"), [&] { return decode_word(w, k).to_string(); }));
    } else if (arrange->parsed()) {
      const auto p = SetPartition::parse(partition);
      const auto result = arrangements(p);
      if (!result.valid) {
        err << "not an induced partition: " << result.reason << '\n';
        records.push_back({"arrange", {{"n", p.n()}}, method_or("greedy"), "invalid", 0});
      }
      for (std::size_t i = 0; i < result.orderings.size(); ++i) {
        records.push_back({"arrange",
                           {{"n", p.n()}, {"ordering", static_cast<long long>(i) + 1}},
                           method_or("greedy"),
                           result.ordering_text(p, i),
                           0});
      }
    } else if (verify->parsed()) {
      VerifyOptions o;
      o.max_n = max_n;
      o.max_k = max_k;
      if (common.limit_enum) {
        o.hom_enum_limit = *common.limit_enum;
        o.end_enum_limit = *common.limit_enum;
      }
      const auto report = run_verify(o);
      write_verify(out, report, o, format);
      return static_cast<int>(report.passed() ? ExitCode::Ok : ExitCode::Mismatch);
    } else if (bench->parsed()) {
      BenchOptions o;
      o.ns = parse_int_list(bench_ns);
      if (bench_ks == "n") {
        o.diagonal = true;
      } else {
        o.ks = parse_int_list(bench_ks);
      }
      o.ops.clear();
      std::stringstream ss(bench_ops);
      for (std::string op; std::getline(ss, op, ',');) {
        if (op != "hom" && op != "epi" && op != "lk") {
          throw DomainError("bench: unknown op '" + op + "'");
        }
        o.ops.push_back(op);
      }
      if (common.limit_enum) {
        o.hom_enum_limit = *common.limit_enum;
        o.end_enum_limit = *common.limit_enum;
      }
      const auto result = run_bench(o);
      // bench defaults to CSV unless a format was asked for
      const Format bench_format = bench->count("--format") ? format : Format::Csv;
      write_records(out, result.records, bench_format);
      for (const auto& d : result.disagreements) {
        err << "disagreement: " << d << '\n';
      }
      return static_cast<int>(result.disagreements.empty() ? ExitCode::Ok : ExitCode::Mismatch);
    }
  } catch (const InconsistencyError& ex) {
    err << "error: " << ex.what() << '\n';
    return static_cast<int>(ExitCode::Mismatch);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  }

  write_records(out, records, format);
  return static_cast<int>(ExitCode::Ok);
}

} // namespace pathhom::cli
