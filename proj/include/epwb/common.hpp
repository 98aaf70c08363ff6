#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epwb {

// Element index within a finite ring or module (0 .. order-1).
using Elem = int;

// A tuple in A^n, one element index per coordinate.
using Word = std::vector<Elem>;

// Invalid or inconsistent input specification.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A consistency check the underlying mathematics guarantees has failed; this
// signals a bug, not bad input.
class InternalInconsistency : public std::runtime_error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : std::runtime_error(what) {}
};

// Hard limit on ring and module orders.  Every enumeration here is exact and
// table-driven, with quadratic or cubic cost in the order.
inline constexpr int kMaxOrder = 256;

std::uint64_t fnv1a(const void* data, std::size_t len,
                    std::uint64_t seed = 14695981039346656037ull);

inline std::uint64_t fnv1a(const std::string& s) {
  return fnv1a(s.data(), s.size());
}

std::string hex64(std::uint64_t v);

// q = p^d with p prime, d >= 1; returns {p, d} or throws SpecError.
std::pair<int, int> prime_power_decompose(int q);

}  // namespace epwb
