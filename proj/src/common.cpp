#include "epwb/common.hpp"

#include <array>

namespace epwb {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::pair<int, int> prime_power_decompose(int q) {
  if (q < 2) throw SpecError("prime power expected, got " + std::to_string(q));
  int p = 0;
  for (int c = 2; c * c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  if (p == 0) return {q, 1};  // q itself is prime
  int d = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++d;
  }
  if (rest != 1)
    throw SpecError("not a prime power: " + std::to_string(q));
  return {p, d};
}

}  // namespace epwb
