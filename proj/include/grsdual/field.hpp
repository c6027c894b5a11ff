#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grsdual/errors.hpp"

namespace grsdual {

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

inline constexpr uint64_t kDefaultMaxField = 1u << 20;

// Element of GF(p^m) in the polynomial basis. idx is the base-p digit
// packing of the coefficient vector: idx = c0 + c1*p + ... + c_{m-1}*p^{m-1}.
class FieldElement {
 public:
  FieldElement() : ctx_(nullptr), idx_(0) {}
  FieldElement(const FieldContext* ctx, uint32_t idx) : ctx_(ctx), idx_(idx) {}

  uint32_t index() const { return idx_; }
  const FieldContext& field() const;
  const FieldContext* ctx() const { return ctx_; }
  bool valid() const { return ctx_ != nullptr; }
  bool is_zero() const { return idx_ == 0; }
  std::vector<uint32_t> coeffs() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inv() const;
  FieldElement pow(int64_t e) const;
  std::string str() const;  // "0" or "w^j"

 private:
  const FieldContext* ctx_;
  uint32_t idx_;
};

// Immutable GF(p^m) context: the canonical modulus plus full lookup tables
// (powers of the generator, discrete logs, Zech logs, negation). All
// arithmetic is table lookups; contexts are safe to share across threads.
class FieldContext {
 public:
  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t q() const { return q_; }
  // Modulus coefficients, constant term first, leading coefficient 1; length m+1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement omega() const { return {this, exp_[1]}; }
  FieldElement from_index(uint32_t idx) const;
  FieldElement from_coeffs(const std::vector<uint32_t>& c) const;
  FieldElement from_int(int64_t v) const;  // embed integer mod p as a constant
  // Canonical enumeration order: element_at(0) = 0, element_at(1+j) = w^j.
  FieldElement element_at(uint32_t i) const;

  // index-domain arithmetic (used by kernels and matrix code)
  uint32_t add_idx(uint32_t a, uint32_t b) const;
  uint32_t sub_idx(uint32_t a, uint32_t b) const;
  uint32_t neg_idx(uint32_t a) const { return neg_[a]; }
  uint32_t mul_idx(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t s = dlog_[a] + dlog_[b];
    return exp_[s >= qm1_ ? s - qm1_ : s];
  }
  uint32_t inv_idx(uint32_t a) const;
  uint32_t div_idx(uint32_t a, uint32_t b) const;
  uint32_t pow_idx(uint32_t a, int64_t e) const;
  uint32_t dlog_idx(uint32_t a) const;
  uint32_t exp_log(uint64_t e) const { return exp_[e % qm1_]; }

  int quadratic_character_idx(uint32_t a) const;
  uint32_t sqrt_idx(uint32_t a) const;

  // Log-domain view for elimination kernels. Values are discrete logs with
  // kZero as the zero sentinel; add resolves through the Zech table.
  struct LogView {
    static constexpr uint32_t kZero = 0xffffffffu;
    const uint32_t* zech;
    uint32_t qm1;
    uint32_t half;
    uint32_t mul(uint32_t a, uint32_t b) const {
      if (a == kZero || b == kZero) return kZero;
      uint32_t s = a + b;
      return s >= qm1 ? s - qm1 : s;
    }
    uint32_t neg(uint32_t a) const {
      if (a == kZero) return a;
      uint32_t s = a + half;
      return s >= qm1 ? s - qm1 : s;
    }
    uint32_t add(uint32_t x, uint32_t y) const {
      if (x == kZero) return y;
      if (y == kZero) return x;
      uint32_t d = y >= x ? y - x : y + qm1 - x;
      uint32_t z = zech[d];
      if (z == kZero) return kZero;
      uint32_t s = x + z;
      return s >= qm1 ? s - qm1 : s;
    }
    uint32_t sub(uint32_t x, uint32_t y) const { return add(x, neg(y)); }
  };
  LogView log_view() const { return {zech_.data(), qm1_, qm1_ / 2}; }
  uint32_t log_of_idx(uint32_t a) const { return a == 0 ? LogView::kZero : dlog_[a]; }
  uint32_t idx_of_log(uint32_t l) const { return l == LogView::kZero ? 0 : exp_[l]; }

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

 private:
  FieldContext() = default;
  friend FieldPtr build_field(uint32_t, uint32_t, uint64_t);

  uint32_t p_ = 0, m_ = 0, q_ = 0, qm1_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_;   // exp_[j] = idx of w^j, j in [0, q-1)
  std::vector<uint32_t> dlog_;  // dlog_[idx] = j with w^j = idx; dlog_[0] unused
  std::vector<uint32_t> zech_;  // zech_[d] = dlog(1 + w^d), kZero when 1 + w^d = 0
  std::vector<uint32_t> neg_;   // neg_[idx] = idx of the additive inverse
};

// Builds GF(p^m) for odd prime p. The modulus is the lexicographically
// smallest monic irreducible polynomial of degree m (coefficient lists
// compared highest degree first) whose residue class x is primitive; the
// distinguished generator w is that residue (for m = 1, w = -c0 mod p).
FieldPtr build_field(uint32_t p, uint32_t m, uint64_t max_q = kDefaultMaxField);
// Same, from q = p^m.
FieldPtr build_field_q(uint64_t q, uint64_t max_q = kDefaultMaxField);

uint32_t dlog(const FieldElement& x);              // ZeroArgument on 0
int quadratic_character(const FieldElement& x);    // +1 squares, -1 non-squares
FieldElement sqrt(const FieldElement& x);          // root with dlog in [0, (q-1)/2)
// The unique subgroup of F_q^* of order d (d | q-1), listed as w^0, w^s, w^2s, ...
std::vector<FieldElement> subgroup(const FieldContext& F, uint32_t d);

namespace nt {
bool is_prime(uint64_t n);
uint64_t isqrt(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);  // distinct primes, ascending
// If n = p^e for a prime p, reports (p, e) and returns true.
bool prime_power(uint64_t n, uint64_t* p, uint32_t* e);
}  // namespace nt

}  // namespace grsdual
