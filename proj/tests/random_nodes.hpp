#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

namespace testutil {

/// Random node multiset of size 1..max_size inside |z| <= radius: clusters
/// of multiplicity up to max_mult, cluster centres at least min_sep apart,
/// list order shuffled so equal nodes are generally not adjacent.
inline std::vector<std::complex<double>> random_multiset(std::mt19937_64& gen, double radius, int max_size = 9,
                                                         int max_mult = 4, double min_sep = 0.05) {
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int size = size_dist(gen);
  std::vector<std::complex<double>> centres, out;
  while (static_cast<int>(out.size()) < size) {
    std::complex<double> c;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      c = std::polar(radius * std::sqrt(unit(gen)), 2.0 * 3.141592653589793 * unit(gen));
      bool ok = true;
      for (auto d : centres) ok = ok && std::abs(c - d) >= min_sep;
      if (ok) break;
    }
    centres.push_back(c);
    std::uniform_int_distribution<int> mult_dist(1, std::min(max_mult, size - static_cast<int>(out.size())));
    const int mult = mult_dist(gen);
    for (int k = 0; k < mult; ++k) out.push_back(c);
  }
  std::shuffle(out.begin(), out.end(), gen);
  return out;
}

}  // namespace testutil
