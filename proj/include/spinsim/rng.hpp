#ifndef SPINSIM_RNG_HPP
#define SPINSIM_RNG_HPP

#include <cmath>
#include <cstdint>

// Deterministic, platform-independent RNG. Each Monte Carlo trajectory owns a
// substream derived from (master seed, trajectory index) so that results do
// not depend on thread count or execution order. std:: distributions are
// avoided on purpose: their output is implementation-defined.

namespace spinsim {

inline uint64_t splitmix64(uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derive a well-mixed substream seed from a master seed and stream indices.
inline uint64_t substream_seed(uint64_t master, uint64_t a, uint64_t b = 0) {
  uint64_t x = master;
  (void)splitmix64(x);
  x ^= 0x632be59bd9b4e019ull + a;
  (void)splitmix64(x);
  x ^= 0x9e3779b97f4a7c15ull * (b + 1);
  return splitmix64(x);
}

class Pcg32 {
 public:
  explicit Pcg32(uint64_t seed = 0x853c49e6748fea9bull, uint64_t stream = 0xda3e39cb94b95bdbull) {
    state_ = 0u;
    inc_ = (stream << 1u) | 1u;
    next();
    state_ += seed;
    next();
  }

  uint32_t next() {
    uint64_t old = state_;
    state_ = old * 6364136223846793005ull + inc_;
    uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  // uniform in [0, 1)
  double uniform() { return next() * (1.0 / 4294967296.0); }

  // uniform in (0, 1] (safe for log())
  double uniform_pos() { return (next() + 1.0) * (1.0 / 4294967296.0); }

  double sym() { return next() & 1u ? 1.0 : -1.0; }

  // Box-Muller, one value per call (the partner draw is cached).
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform_pos();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = k2PiLocal * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

 private:
  static constexpr double k2PiLocal = 6.283185307179586476925286766559;
  uint64_t state_ = 0;
  uint64_t inc_ = 0;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace spinsim

#endif
