#pragma once

#include <cstdint>
#include <random>

#include "relax/types.hpp"

namespace relax {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One independent, seed-derived stream per (run, substream).  Substreams keep
// per-round draws independent of each other (fresh-draw contract).
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t stream_id = 0)
      : gen_(splitmix64(splitmix64(seed) ^ splitmix64(stream_id * 0x9e3779b97f4a7c15ULL + 1))),
        base_(splitmix64(seed) ^ splitmix64(stream_id + 0x632be59bd9b4e019ULL)) {}

  RngStream derive(uint64_t substream) const { return RngStream(base_, substream); }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  int sign() { return uniform_int(0, 1) == 0 ? -1 : 1; }

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
  uint64_t base_ = 0;
};

// Uniform draw from the surface of the unit sphere (normalized isotropic
// Gaussian).  dim=1 degenerates to a fair ±1 coin.
inline Vec unit_sphere_draw(int dim, RngStream& rng) {
  Vec v(dim);
  double n = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v[i] = rng.gaussian();
    n = norm_l2(v);
  } while (n < 1e-300);
  for (int i = 0; i < dim; ++i) v[i] /= n;
  return v;
}

}  // namespace relax
