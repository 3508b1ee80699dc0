#ifndef MAJORLAB_RNG_HPP
#define MAJORLAB_RNG_HPP

#include <cstdint>
#include <string_view>

#include "majorlab/matrix.hpp"

namespace majorlab {

// Counter-based splittable generator. Each draw hashes (key, counter), so
// substreams derived from labels or indices are independent of evaluation
// order and scheduling; the same key always replays the same stream.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  RandomStream substream(uint64_t id) const;
  RandomStream substream(std::string_view label) const;

  uint64_t next_u64();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive bounds
  double gaussian();
  Complex complex_gaussian();  // independent N(0,1) real and imaginary parts

  static uint64_t mix(uint64_t x);

 private:
  RandomStream(uint64_t key, int) : key_(key) {}
  uint64_t key_ = 0;
  uint64_t counter_ = 0;
};

}  // namespace majorlab

#endif
