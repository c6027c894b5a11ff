#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grsdual/linalg.hpp"

// Hot enumeration kernels. Each has an OpenMP-parallel version used by the
// library and a plain serial reference kept for cross-checking and the
// benchmark target; results are identical and thread-count independent.
namespace grsdual::kernels {

// Minimum Hamming weight over all nonzero words of the row space of G.
size_t min_weight_serial(const Matrix& G);
size_t min_weight_parallel(const Matrix& G);

struct MinorScan {
  uint64_t tested = 0;
  uint64_t singular = 0;
  std::optional<std::vector<size_t>> witness;  // first singular column set
};

// Rank tests on all (or sampled) k-column submatrices, k = G.rows().
MinorScan scan_minors_exhaustive_serial(const Matrix& G);
MinorScan scan_minors_exhaustive_parallel(const Matrix& G);
MinorScan scan_minors_sampled_serial(const Matrix& G, uint64_t samples, uint64_t seed);
MinorScan scan_minors_sampled_parallel(const Matrix& G, uint64_t samples, uint64_t seed);

// C(n,k) and q^k, clamped to cap+1 on overflow.
uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap);
uint64_t pow_capped(uint64_t base, uint64_t e, uint64_t cap);

// The t-th sampled k-subset of {0..n-1} for a given seed, sorted ascending.
// Pure function of (n, k, seed, t), so parallel and serial scans agree.
std::vector<size_t> sample_subset(size_t n, size_t k, uint64_t seed, uint64_t t);

struct SplitMix64 {
  uint64_t s;
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n) by 128-bit multiply
  uint64_t bounded(uint64_t n) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
  }
};

}  // namespace grsdual::kernels
