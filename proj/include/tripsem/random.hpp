#ifndef TRIPSEM_RANDOM_HPP
#define TRIPSEM_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace tripsem {

/// Seeded generator behind every random lexicon and fixture.
///
/// Raw bits come from std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Conversions are done here rather than through <random>
/// distributions, which are implementation-defined:
///   uniform01   = (bits >> 11) * 2^-53            in [0, 1)
///   uniform_pm1 = 2 * uniform01 - 1               in [-1, 1)
///   normal      = sqrt(-2 ln(1 - u1)) cos(2 pi u2) with u1, u2 = uniform01
/// Each normal draw consumes exactly two raw words.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double standard_normal() {
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform integer in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tripsem

#endif  // TRIPSEM_RANDOM_HPP
