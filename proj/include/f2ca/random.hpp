#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "f2ca/state.hpp"
#include "f2ca/types.hpp"

namespace f2ca {

// Seeded state generator for property suites. Draws go through the raw
// engine so runs are reproducible from the seed alone.
class StateGen {
 public:
  explicit StateGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  Site range(Site lo, Site hi) { return lo + Site(below(std::uint64_t(hi - lo + 1))); }

  // Uniform single island of width <= max_width at a random offset: border
  // cells occupied, no interior run of three zeros.
  CaState island(int max_width) {
    const int width = int(1 + below(std::uint64_t(max_width)));
    return translate(island_pattern(width), range(-8, 8));
  }

  // Several islands separated by support gaps >= 4 (three or more zeros).
  CaState multi_island(int max_width, int max_islands = 3, int min_islands = 1) {
    const int count =
        int(min_islands + Site(below(std::uint64_t(max_islands - min_islands + 1))));
    std::vector<std::uint8_t> bits;
    for (int i = 0; i < count; ++i) {
      if (i > 0) bits.insert(bits.end(), std::size_t(3 + below(4)), 0);
      const CaState isl = island_pattern(int(1 + below(std::uint64_t(max_width))));
      bits.insert(bits.end(), isl.cells.begin(), isl.cells.end());
    }
    return make_state(range(-8, 8), std::move(bits));
  }

  // Arbitrary finite support: N <= max_n sites with consecutive gaps in
  // [1, max_gap]. Not restricted to islands.
  CaState support_state(int max_n = 10, int max_gap = 6) {
    const int n = int(1 + below(std::uint64_t(max_n)));
    std::vector<Site> sites;
    Site site = range(-5, 5);
    for (int i = 0; i < n; ++i) {
      sites.push_back(site);
      site += 1 + Site(below(std::uint64_t(max_gap)));
    }
    std::vector<std::uint8_t> bits(std::size_t(sites.back() - sites.front() + 1), 0);
    for (Site k : sites) bits[std::size_t(k - sites.front())] = 1;
    return make_state(sites.front(), std::move(bits));
  }

  // Uniform bits over a window; may be the zero state or several islands.
  CaState window_state(int width) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(width));
    for (auto& b : bits) b = std::uint8_t(below(2));
    return make_state(range(-8, 8), std::move(bits));
  }

 private:
  CaState island_pattern(int width) {
    if (width == 1) return make_state(0, {1});
    for (int attempt = 0; attempt < 100000; ++attempt) {
      std::vector<std::uint8_t> bits(std::size_t(width), 0);
      bits.front() = bits.back() = 1;
      for (int i = 1; i + 1 < width; ++i) bits[std::size_t(i)] = std::uint8_t(below(2));
      int zero_run = 0;
      bool valid = true;
      for (std::uint8_t b : bits) {
        zero_run = b ? 0 : zero_run + 1;
        if (zero_run >= 3) {
          valid = false;
          break;
        }
      }
      if (valid) return make_state(0, std::move(bits));
    }
    throw std::logic_error("StateGen: island rejection sampling failed");
  }

  std::mt19937_64 rng_;
};

}  // namespace f2ca
