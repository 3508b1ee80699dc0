#include "majorlab/rng.hpp"

#include <cmath>

namespace majorlab {

uint64_t RandomStream::mix(uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

RandomStream RandomStream::substream(uint64_t id) const {
  return RandomStream(mix(key_ ^ mix(id ^ 0x243f6a8885a308d3ull)), 0);
}

RandomStream RandomStream::substream(std::string_view label) const {
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return substream(h);
}

uint64_t RandomStream::next_u64() { return mix(key_ ^ mix(counter_++)); }

double RandomStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int RandomStream::uniform_int(int lo, int hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

double RandomStream::gaussian() {
  // Box-Muller, cosine branch only; u1 kept away from zero
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex RandomStream::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

}  // namespace majorlab
