#pragma once

#include <cstdint>
#include <random>

#include "pgg/graph.hpp"
#include "pgg/rational.hpp"

namespace pgg {

// Deterministic seeded source. Only standardized engine output is used, so
// identical seeds give identical graphs on any platform.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : eng_(seed) {}

  uint64_t u64() { return eng_(); }

  uint64_t below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below(0)");
    uint64_t span = (~uint64_t{0} / bound) * bound;
    while (true) {
      uint64_t r = eng_();
      if (r < span) return r % bound;
    }
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  double unit() { return (eng_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  // nonnegative rational with numerator 0..max_num, denominator 1..max_den
  Rat small_rat(long max_num, long max_den) {
    long num = static_cast<long>(below(static_cast<uint64_t>(max_num + 1)));
    long den = 1 + static_cast<long>(below(static_cast<uint64_t>(max_den)));
    return rat(num, den);
  }

 private:
  std::mt19937_64 eng_;
};

Graph gen_gnp(int n, double p, SeededRng& rng);

// Uniform labeled tree decoded from a random Pruefer sequence.
Graph gen_tree(int n, SeededRng& rng);

// Each vertex after the first either attaches to a uniformly random earlier
// vertex (probability attach_p) or starts a new component.
Graph gen_forest(int n, double attach_p, SeededRng& rng);

// Random tree plus one pendant per original vertex; the pendant edges form a
// perfect matching, so every maximal independent set has exactly `pairs`
// members. Validated before returning.
Graph gen_well_covered_forest(int pairs, SeededRng& rng);

// Random tree plus extra random edges; connected by construction.
Graph gen_connected(int n, double extra_p, SeededRng& rng);

}  // namespace pgg
