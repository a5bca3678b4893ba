#ifndef HANKELMC_RNG_HPP
#define HANKELMC_RNG_HPP

#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <random>

namespace hankelmc {

/// SplitMix64 finalizer. Used to derive independent child seeds so that
/// extending a sweep grid never changes the stream of an existing cell.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Fold a list of 64-bit words into one seed. Order-sensitive.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x8f1bbcdcbfa53e0bULL;
  for (std::uint64_t p : parts) h = splitmix64(h ^ p);
  return h;
}

inline std::uint64_t double_bits(double v) {
  std::uint64_t b = 0;
  std::memcpy(&b, &v, sizeof(b));
  return b;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

}  // namespace hankelmc

#endif
