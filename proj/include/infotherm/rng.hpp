#ifndef INFOTHERM_RNG_HPP
#define INFOTHERM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace infotherm {

// One master seed per run; every trajectory/stream derives its own seed by
// counter so that results do not depend on thread scheduling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  splitmix64(s);
  std::uint64_t out = splitmix64(s);
  return out;
}

// mt19937_64 gives a sequence pinned by the standard; uniform/normal mappings
// are done by hand so that trajectories are bit-reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0,1)
  double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

  // uniform in (0,1]
  double uniform_pos() { return ((engine_() >> 11) + 1) * 0x1.0p-53; }

  // standard normal, Box-Muller (pairs cached)
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.28318530717958647692 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace infotherm

#endif
