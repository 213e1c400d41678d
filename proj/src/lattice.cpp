#include "pathhom/lattice.hpp"

#include <algorithm>
#include <string>

namespace pathhom {

namespace {

void require_endpoint(int e, int nn, BandSpec band, const char* op) {
  if (e < 0 || nn < 0 || band.t < 0 || band.s < 0) {
    throw DomainError(std::string(op) + ": endpoint and band offsets must be nonnegative");
  }
}

} // namespace

Count lattice_count_free(int e, int nn) {
  require_endpoint(e, nn, {}, "lattice_count_free");
  return binom(e + nn, e);
}

Count lattice_count_banded(int e, int nn, BandSpec band) {
  require_endpoint(e, nn, band, "lattice_count_banded");
  if (!band.contains(e, nn)) {
    return Count{};
  }
  const int len = e + nn;
  const int period = band.t + band.s + 2;
  const int jmax = (len + period) / period;
  const auto row = binomial_row(len);

  BigInt sum = 0;
  for (int j = -jmax; j <= jmax; ++j) {
    sum += binomial_at(row, e - j * period);
    sum -= binomial_at(row, e - j * period + band.t + 1);
  }
  return Count::from_signed(std::move(sum));
}

Count lattice_count_banded_brute(int e, int nn, BandSpec band, int limit) {
  require_endpoint(e, nn, band, "lattice_count_banded_brute");
  if (e + nn > limit) {
    throw SizeError("lattice_count_banded_brute: e+nn=" + std::to_string(e + nn) +
                    " exceeds limit " + std::to_string(limit));
  }
  // ways[x][y], zero outside the strip
  std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(e) + 1,
                                        std::vector<BigInt>(static_cast<std::size_t>(nn) + 1));
  for (int x = 0; x <= e; ++x) {
    for (int y = 0; y <= nn; ++y) {
      if (!band.contains(x, y)) {
        continue;
      }
      if (x == 0 && y == 0) {
        ways[0][0] = 1;
        continue;
      }
      BigInt v = 0;
      if (x > 0) {
        v += ways[x - 1][y];
      }
      if (y > 0) {
        v += ways[x][y - 1];
      }
      ways[x][y] = std::move(v);
    }
  }
  return Count::from_signed(ways[e][nn]);
}

std::vector<LatticePoint> hom1_lattice_endpoints(int n, int k) {
  if (n < 1 || k < 1) {
    throw DomainError("hom1_lattice_endpoints: need n >= 1 and k >= 1");
  }
  const int upper = std::min(floor_div(n + k, 2), n);
  std::vector<LatticePoint> out;
  for (int l = ceil_div(n - 1, 2); l <= upper - 1; ++l) {
    out.push_back({l, n - 1 - l});
  }
  return out;
}

Count hom1_via_lattice(int n, int k) {
  Count sum;
  for (auto p : hom1_lattice_endpoints(n, k)) {
    sum += lattice_count_banded(p.x, p.y, {0, k - 1});
  }
  return sum;
}

LatticeWord encode_hom(const PathHom& f) {
  if (f(1) != 1) {
    throw DomainError("encode_hom: lattice encoding needs f(1) = 1, got " + std::to_string(f(1)));
  }
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(f.n()) - 1);
  for (int i = 1; i < f.n(); ++i) {
    steps.push_back(f(i + 1) > f(i) ? Step::East : Step::North);
  }
  return LatticeWord(std::move(steps));
}

PathHom decode_word(const LatticeWord& w, int k) {
  if (k < 1) {
    throw DomainError("decode_word: need k >= 1");
  }
  std::vector<int> images{1};
  images.reserve(w.size() + 1);
  std::size_t prefix = 0;
  for (Step s : w.steps()) {
    ++prefix;
    const int next = images.back() + (s == Step::East ? 1 : -1);
    // f - 1 is the offset #E - #N of the prefix
    if (next < 1 || next > k) {
      throw DomainError("decode_word: prefix of length " + std::to_string(prefix) + " (" +
                        w.to_string().substr(0, prefix) + ") leaves the strip 0 <= x-y <= " +
                        std::to_string(k - 1));
    }
    images.push_back(next);
  }
  return PathHom(k, std::move(images));
}

} // namespace pathhom
