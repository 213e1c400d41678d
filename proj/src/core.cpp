#include "pathhom/core.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace pathhom {

Count Count::from_signed(BigInt v) {
  if (v < 0) {
    throw std::domain_error("Count cannot hold negative value " + v.str());
  }
  return Count(std::move(v));
}

Count Count::pow2(unsigned e) {
  BigInt v = 1;
  v <<= e;
  return Count(std::move(v));
}

Count binom(int a, int b) {
  if (a < 0) {
    throw DomainError("binom: top argument must be nonnegative, got " + std::to_string(a));
  }
  if (b < 0 || b > a) {
    return Count{};
  }
  b = std::min(b, a - b);
  BigInt r = 1;
  for (int i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return Count::from_signed(std::move(r));
}

std::vector<BigInt> binomial_row(int m) {
  if (m < 0) {
    throw DomainError("binomial_row: negative row " + std::to_string(m));
  }
  std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
  row[0] = 1;
  for (int b = 0; b < m; ++b) {
    row[b + 1] = row[b] * (m - b) / (b + 1);
  }
  return row;
}

const BigInt& binomial_at(const std::vector<BigInt>& row, int b) {
  static const BigInt zero = 0;
  return (b < 0 || b >= static_cast<int>(row.size())) ? zero : row[b];
}

BinomialTable::BinomialTable(int max_row) {
  if (max_row < 0) {
    max_row = 0;
  }
  rows_.reserve(static_cast<std::size_t>(max_row) + 1);
  rows_.push_back({BigInt(1)});
  for (int a = 1; a <= max_row; ++a) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<std::size_t>(a) + 1);
    row.front() = 1;
    row.back() = 1;
    for (int b = 1; b < a; ++b) {
      row[b] = prev[b - 1] + prev[b];
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& BinomialTable::operator()(int a, int b) const {
  static const BigInt zero = 0;
  if (a < 0 || a > max_row()) {
    throw DomainError("BinomialTable: row " + std::to_string(a) + " not tabulated");
  }
  if (b < 0 || b > a) {
    return zero;
  }
  return rows_[a][b];
}

bool is_path_hom(std::span<const int> images, int k) {
  if (images.empty() || k < 1) {
    return false;
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || images[i] > k) {
      return false;
    }
    if (i > 0 && std::abs(images[i] - images[i - 1]) != 1) {
      return false;
    }
  }
  return true;
}

PathHom::PathHom(int k, std::vector<int> images) : k_(k), images_(std::move(images)) {
  if (!is_path_hom(images_, k_)) {
    throw std::invalid_argument("not a homomorphism into P_" + std::to_string(k_) + ": " +
                                (images_.empty() ? std::string("<empty>") : to_string()));
  }
}

int PathHom::min_image() const { return *std::min_element(images_.begin(), images_.end()); }
int PathHom::max_image() const { return *std::max_element(images_.begin(), images_.end()); }

bool PathHom::is_surjective() const {
  // images of a walk form an interval, so the extremes decide surjectivity
  return min_image() == 1 && max_image() == k_;
}

namespace {

std::string join_ints(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(values[i]);
  }
  return out;
}

int parse_int(std::string_view token) {
  while (!token.empty() && token.front() == ' ') {
    token.remove_prefix(1);
  }
  while (!token.empty() && token.back() == ' ') {
    token.remove_suffix(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) {
    return out;
  }
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    out.push_back(parse_int(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return out;
}

} // namespace

std::string PathHom::to_string() const { return join_ints(images_); }

PathHom PathHom::parse(std::string_view text, int k) { return PathHom(k, parse_int_list(text)); }

LatticePoint LatticeWord::endpoint() const {
  LatticePoint p;
  for (Step s : steps_) {
    (s == Step::East ? p.x : p.y) += 1;
  }
  return p;
}

std::string LatticeWord::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) {
    out += static_cast<char>(s);
  }
  return out;
}

LatticeWord LatticeWord::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'E') {
      steps.push_back(Step::East);
    } else if (c == 'N') {
      steps.push_back(Step::North);
    } else {
      throw std::invalid_argument(std::string("lattice word may only contain 'E' and 'N', got '") + c +
                                  "'");
    }
  }
  return LatticeWord(std::move(steps));
}

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 0) {
    throw std::invalid_argument("SetPartition: negative ground set size");
  }
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  for (auto& block : blocks_) {
    if (block.empty()) {
      throw std::invalid_argument("SetPartition: empty block");
    }
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > n_) {
        throw std::invalid_argument("SetPartition: element " + std::to_string(x) + " outside [1.." +
                                    std::to_string(n_) + "]");
      }
      if (seen[x]) {
        throw std::invalid_argument("SetPartition: element " + std::to_string(x) + " repeated");
      }
      seen[x] = 1;
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), 1) != n_) {
    throw std::invalid_argument("SetPartition: blocks do not cover [1.." + std::to_string(n_) + "]");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  std::map<int, std::size_t> index;
  SetPartition p;
  p.n_ = static_cast<int>(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = index.try_emplace(labels[i], p.blocks_.size());
    if (inserted) {
      p.blocks_.emplace_back();
    }
    p.blocks_[it->second].push_back(static_cast<int>(i) + 1);
  }
  // first occurrences appear in increasing order, so blocks are already canonical
  return p;
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<Block> blocks;
  int n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '{') {
      throw std::invalid_argument("partition text: expected '{' at offset " + std::to_string(pos));
    }
    auto close = text.find('}', pos);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("partition text: unterminated block");
    }
    Block block = parse_int_list(text.substr(pos + 1, close - pos - 1));
    for (int x : block) {
      n = std::max(n, x);
    }
    blocks.push_back(std::move(block));
    pos = close + 1;
  }
  return SetPartition(n, std::move(blocks));
}

std::string to_string(std::span<const SetPartition::Block> blocks) {
  std::string out;
  for (const auto& block : blocks) {
    out += '{';
    out += join_ints(block);
    out += '}';
  }
  return out;
}

std::string SetPartition::to_string() const { return pathhom::to_string(blocks_); }

Epispectrum::Epispectrum(int n_, std::vector<Count> values_) : n(n_), values(std::move(values_)) {
  if (n < 2 || values.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("Epispectrum of P_" + std::to_string(n) + " needs exactly " +
                                std::to_string(n - 1) + " entries");
  }
}

std::string Epispectrum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += values[i].to_string();
  }
  return out;
}

} // namespace pathhom
