#include "pathhom/congruence.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pathhom/closedform.hpp"
#include "pathhom/oracle.hpp"

namespace pathhom {

SetPartition kernel_partition(const PathHom& f) { return SetPartition::from_labels(f.images()); }

PathHom shift_normalize(const PathHom& f) {
  const int lo = f.min_image();
  std::vector<int> images(f.images().begin(), f.images().end());
  for (int& v : images) {
    v -= lo - 1;
  }
  return PathHom(f.max_image() - lo + 1, std::move(images));
}

std::set<SetPartition> induced_partitions(int n, int limit) {
  if (n < 1) {
    throw DomainError("induced_partitions: need n >= 1");
  }
  if (n > limit) {
    throw SizeError("induced_partitions: n=" + std::to_string(n) + " exceeds enumeration limit " +
                    std::to_string(limit));
  }
  std::set<SetPartition> out;
  for (const auto& f : enumerate_homs(n, n)) {
    out.insert(kernel_partition(f));
  }
  return out;
}

Epispectrum epispectrum_brute(int n, int limit) {
  if (n < 2) {
    throw DomainError("epispectrum_brute: need n >= 2, got " + std::to_string(n));
  }
  std::vector<unsigned long long> by_blocks(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : induced_partitions(n, limit)) {
    ++by_blocks[p.block_count()];
  }
  std::vector<Count> values;
  for (int k = 1; k <= n - 1; ++k) {
    values.emplace_back(by_blocks[static_cast<std::size_t>(n - k + 1)]);
  }
  return Epispectrum(n, std::move(values));
}

Epispectrum epispectrum_formula(int n) {
  if (n < 2) {
    throw DomainError("epispectrum_formula: need n >= 2, got " + std::to_string(n));
  }
  std::vector<Count> values;
  for (int k = 1; k <= n - 1; ++k) {
    values.push_back(lk_via_hom(n, k));
  }
  return Epispectrum(n, std::move(values));
}

std::string ArrangementResult::ordering_text(const SetPartition& p, std::size_t i) const {
  std::vector<SetPartition::Block> blocks;
  for (int idx : orderings.at(i)) {
    blocks.push_back(p.blocks()[static_cast<std::size_t>(idx - 1)]);
  }
  return pathhom::to_string(blocks);
}

namespace {

ArrangementResult rejected(std::string reason) {
  ArrangementResult r;
  r.reason = std::move(reason);
  return r;
}

} // namespace

ArrangementResult arrangements(const SetPartition& p) {
  const auto& blocks = p.blocks();
  const int n = p.n();
  const int r = static_cast<int>(blocks.size());
  if (r == 0) {
    return rejected("empty partition");
  }

  // block_of[v] is the 1-based index of the block holding v
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1, 0);
  for (int b = 0; b < r; ++b) {
    for (std::size_t e = 0; e < blocks[b].size(); ++e) {
      if (e > 0 && blocks[b][e] == blocks[b][e - 1] + 1) {
        return rejected("block " + pathhom::to_string(std::span(&blocks[b], 1)) +
                        " contains adjacent vertices " + std::to_string(blocks[b][e - 1]) + "," +
                        std::to_string(blocks[b][e]));
      }
      block_of[static_cast<std::size_t>(blocks[b][e])] = b + 1;
    }
  }

  std::deque<int> order;
  if (r == 1) {
    order.push_back(1);
  } else {
    order = {1, 2};
    for (int b = 3; b <= r; ++b) {
      const int anchor = block_of[static_cast<std::size_t>(blocks[b - 1].front() - 1)];
      if (anchor == order.front()) {
        order.push_front(b);
      } else if (anchor == order.back()) {
        order.push_back(b);
      } else {
        return rejected("vertex " + std::to_string(blocks[b - 1].front() - 1) + " preceding block " +
                        std::to_string(b) + " lies in an interior block");
      }
    }
  }

  ArrangementResult out;
  std::vector<int> seq(order.begin(), order.end());
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<int> position(static_cast<std::size_t>(r) + 1, 0);
    for (int i = 0; i < r; ++i) {
      position[static_cast<std::size_t>(seq[i])] = i + 1;
    }
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      images.push_back(position[static_cast<std::size_t>(block_of[static_cast<std::size_t>(v)])]);
    }
    if (!is_path_hom(images, r)) {
      return rejected("induced block map is not a homomorphism onto P_" + std::to_string(r));
    }
    out.witnesses.emplace_back(r, std::move(images));
    out.orderings.push_back(seq);
    std::reverse(seq.begin(), seq.end());
  }
  out.valid = true;
  return out;
}

} // namespace pathhom
