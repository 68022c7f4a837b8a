#ifndef STARLAB_RNG_HPP
#define STARLAB_RNG_HPP

#include <complex>
#include <cstdint>
#include <string_view>

namespace starlab {

// splitmix64 generator.  Deliberately self-contained: report bytes must be
// reproducible from the seed alone, independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [lo, hi] inclusive
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::complex<double> complex_in_disc(double radius) {
    for (;;) {
      double x = uniform(-1.0, 1.0);
      double y = uniform(-1.0, 1.0);
      if (x * x + y * y <= 1.0) return {radius * x, radius * y};
    }
  }

  // Derive a stream for a named sub-task so suites stay independent of the
  // order in which they run.
  static Rng for_task(std::uint64_t seed, std::string_view task) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : task) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    return Rng(seed ^ h);
  }

 private:
  std::uint64_t state_;
};

}  // namespace starlab

#endif
