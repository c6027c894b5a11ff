#pragma once

// Shared helpers for the test binaries: a naive polynomial-arithmetic field
// implementation used as an independent oracle for the table-driven one, a
// slow minimum-distance enumerator, and seeded random generators for sets
// and scalings.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "grsdual/grs.hpp"
#include "grsdual/kernels.hpp"

namespace testsupport {

using grsdual::EvalPoint;
using grsdual::EvaluationSet;
using grsdual::FieldContext;
using grsdual::FieldElement;
using grsdual::FieldPtr;
using grsdual::GrsCode;
using grsdual::ScalingVector;

// GF(p^m) arithmetic done directly on coefficient vectors, sharing nothing
// with FieldContext beyond p, m and the modulus read out of it.
struct NaiveField {
  uint32_t p;
  uint32_t m;
  std::vector<uint32_t> mod;  // constant term first, length m+1, monic

  explicit NaiveField(const FieldContext& F) : p(F.p()), m(F.m()), mod(F.modulus()) {}
  NaiveField(uint32_t p_, uint32_t m_, std::vector<uint32_t> mod_)
      : p(p_), m(m_), mod(std::move(mod_)) {}

  uint64_t q() const {
    uint64_t r = 1;
    for (uint32_t i = 0; i < m; ++i) r *= p;
    return r;
  }

  std::vector<uint32_t> zero() const { return std::vector<uint32_t>(m, 0); }
  std::vector<uint32_t> one() const {
    auto v = zero();
    v[0] = 1;
    return v;
  }

  std::vector<uint32_t> from_index(uint32_t idx) const {
    auto v = zero();
    for (uint32_t i = 0; i < m; ++i) {
      v[i] = idx % p;
      idx /= p;
    }
    return v;
  }
  uint32_t to_index(const std::vector<uint32_t>& v) const {
    uint32_t idx = 0;
    for (uint32_t i = m; i-- > 0;) idx = idx * p + v[i];
    return idx;
  }

  std::vector<uint32_t> add(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
    auto r = zero();
    for (uint32_t i = 0; i < m; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }
  std::vector<uint32_t> neg(const std::vector<uint32_t>& a) const {
    auto r = zero();
    for (uint32_t i = 0; i < m; ++i) r[i] = (p - a[i]) % p;
    return r;
  }
  std::vector<uint32_t> mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
    std::vector<uint64_t> prod(2 * m - 1, 0);
    for (uint32_t i = 0; i < m; ++i)
      for (uint32_t j = 0; j < m; ++j) prod[i + j] += uint64_t(a[i]) * b[j];
    // reduce modulo the monic modulus: x^m = -(mod[0] + ... + mod[m-1] x^{m-1})
    for (size_t d = prod.size(); d-- > m;) {
      uint64_t c = prod[d] % p;
      prod[d] = 0;
      for (uint32_t i = 0; i < m; ++i)
        prod[d - m + i] += uint64_t(p - mod[i] % p) % p * c;
    }
    auto r = zero();
    for (uint32_t i = 0; i < m; ++i) r[i] = prod[i] % p;
    return r;
  }
  std::vector<uint32_t> pow(std::vector<uint32_t> a, uint64_t e) const {
    auto r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::vector<uint32_t> inv(const std::vector<uint32_t>& a) const { return pow(a, q() - 2); }
};

// Minimum distance by direct polynomial evaluation of every nonzero message,
// independent of the generator matrix and the enumeration kernels.
inline size_t slow_min_distance(const GrsCode& code) {
  const FieldContext& F = *code.field();
  size_t k = code.k(), n = code.n();
  std::vector<uint32_t> msg(k, 0);
  size_t best = n + 1;
  while (true) {
    size_t pos = 0;
    while (pos < k && msg[pos] == F.q() - 1) msg[pos++] = 0;
    if (pos == k) break;
    ++msg[pos];
    size_t w = 0;
    for (size_t j = 0; j < n; ++j) {
      const EvalPoint& pt = code.points()[j];
      FieldElement acc = F.zero();
      if (pt.is_infinity()) {
        acc = FieldElement(&F, msg[k - 1]);
      } else {
        for (size_t i = k; i-- > 0;) acc = acc * pt.value() + FieldElement(&F, msg[i]);
      }
      if (!(code.scaling()[j] * acc).is_zero()) ++w;
    }
    best = std::min(best, w);
  }
  return best;
}

// n distinct finite points, seeded.
inline EvaluationSet random_finite_set(const FieldPtr& F, size_t n, uint64_t seed) {
  grsdual::kernels::SplitMix64 rng{seed ^ 0x51a2b3c4d5e6f701ull};
  rng.next();
  std::vector<uint32_t> idx(F->q());
  for (uint32_t i = 0; i < F->q(); ++i) idx[i] = i;
  for (size_t i = 0; i < n; ++i) {
    size_t j = i + static_cast<size_t>(rng.bounded(F->q() - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<FieldElement> pts;
  for (size_t i = 0; i < n; ++i) pts.push_back(F->from_index(idx[i]));
  return EvaluationSet::finite(F, pts);
}

inline ScalingVector random_scaling(const FieldPtr& F, size_t n, uint64_t seed) {
  grsdual::kernels::SplitMix64 rng{seed ^ 0x0badcafe12345678ull};
  rng.next();
  std::vector<FieldElement> v;
  for (size_t i = 0; i < n; ++i)
    v.push_back(F->from_index(1 + static_cast<uint32_t>(rng.bounded(F->q() - 1))));
  return {F, std::move(v)};
}

}  // namespace testsupport
