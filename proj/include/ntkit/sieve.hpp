#pragma once

// Lazily grown, internally synchronized prime sieve plus Chebyshev's
// theta function theta(x) = sum_{p <= x} log p.

#include <cstdint>
#include <memory>
#include <vector>

namespace ntkit {

inline constexpr uint64_t kDefaultSieveCeiling = 100'000'000;

// Primes up to at least `limit`, ascending. Snapshots are immutable and
// safe to hold across threads; the cache only ever grows.
std::shared_ptr<const std::vector<uint32_t>> primes_upto(uint64_t limit);

// theta(x); 0 for x < 2. Throws capacity_error when x exceeds the
// ceiling instead of silently sieving gigabytes.
double chebyshev_theta(double x, uint64_t ceiling = kDefaultSieveCeiling);

}  // namespace ntkit
