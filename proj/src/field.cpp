#include "grsdual/field.hpp"

#include <algorithm>
#include <cmath>

namespace grsdual {

namespace nt {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint64_t isqrt(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool prime_power(uint64_t n, uint64_t* p, uint32_t* e) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      uint32_t k = 0;
      while (n % d == 0) {
        n /= d;
        ++k;
      }
      if (n != 1) return false;
      if (p) *p = d;
      if (e) *e = k;
      return true;
    }
  }
  if (p) *p = n;
  if (e) *e = 1;
  return true;
}

}  // namespace nt

namespace {

// Dense polynomials over F_p, coefficients ascending in degree, no trailing zeros.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + uint64_t(a[i]) * b[j]) % p;
  // reduce mod monic f of degree deg
  size_t deg = f.size() - 1;
  for (size_t i = acc.size(); i-- > deg;) {
    uint64_t c = acc[i];
    if (c == 0) continue;
    acc[i] = 0;
    for (size_t j = 0; j < deg; ++j) acc[i - deg + j] = (acc[i - deg + j] + c * (p - f[j])) % p;
  }
  Poly r(acc.begin(), acc.begin() + std::min(acc.size(), deg));
  trim(r);
  return r;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    int64_t qu = r / nr;
    int64_t tmp = t - qu * nt;
    t = nt;
    nt = tmp;
    tmp = r - qu * nr;
    r = nr;
    nr = tmp;
  }
  return static_cast<uint32_t>(t < 0 ? t + p : t);
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    uint32_t lead_inv = mod_inv(b.back(), p);
    while (a.size() >= b.size()) {
      uint64_t c = (uint64_t(a.back()) * lead_inv) % p;
      if (c) {
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
          a[off + j] = (a[off + j] + c * (p - b[j])) % p;
      } else {
        a.pop_back();
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& f, uint32_t p) {
  uint32_t m = static_cast<uint32_t>(f.size() - 1);
  if (m == 1) return true;
  Poly x{0, 1};
  // x^(p^m) == x mod f, and gcd(x^(p^(m/l)) - x, f) = 1 for prime l | m
  std::vector<Poly> iterates(m + 1);  // iterates[i] = x^(p^i) mod f
  iterates[0] = x;
  for (uint32_t i = 1; i <= m; ++i) iterates[i] = poly_powmod(iterates[i - 1], p, f, p);
  if (iterates[m] != x) return false;
  for (uint64_t l : nt::prime_factors(m)) {
    Poly g = iterates[m / l];
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    Poly d = poly_gcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

bool x_is_primitive(const Poly& f, uint32_t p, uint64_t q) {
  if (f[0] == 0) return false;  // x divides f, residue of x not a unit
  Poly x = (f.size() == 2) ? Poly{(p - f[0]) % p} : Poly{0, 1};
  if (x.empty() || (x.size() == 1 && x[0] == 1)) return false;
  for (uint64_t l : nt::prime_factors(q - 1)) {
    Poly r = poly_powmod(x, (q - 1) / l, f, p);
    if (r.size() == 1 && r[0] == 1) return false;
  }
  return true;
}

}  // namespace

FieldPtr build_field(uint32_t p, uint32_t m, uint64_t max_q) {
  if (p < 3 || p % 2 == 0 || !nt::is_prime(p))
    raise(Errc::NotPrime, "characteristic must be an odd prime, got " + std::to_string(p));
  if (m < 1) raise(Errc::InvalidParams, "extension degree must be at least 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > max_q)
      raise(Errc::FieldTooLarge, "p^m exceeds the field bound " + std::to_string(max_q));
  }

  // Scan monic degree-m candidates in lexicographic order on
  // (c_{m-1}, ..., c_0); the base-p digit packing enumerates exactly that.
  Poly f;
  for (uint64_t cnt = 0; cnt < q; ++cnt) {
    Poly cand(m + 1, 0);
    uint64_t t = cnt;
    for (uint32_t i = 0; i < m; ++i) {
      cand[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
    cand[m] = 1;
    if (cand[0] == 0) continue;
    if (!is_irreducible(cand, p)) continue;
    if (!x_is_primitive(cand, p, q)) continue;
    f = cand;
    break;
  }
  if (f.empty()) raise(Errc::InternalVerificationFailed, "no primitive modulus found");

  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->p_ = p;
  ctx->m_ = m;
  ctx->q_ = static_cast<uint32_t>(q);
  ctx->qm1_ = static_cast<uint32_t>(q - 1);
  ctx->modulus_ = f;

  // Walk powers of x mod f, packing coefficient vectors into indices.
  auto pack = [&](const Poly& a) {
    uint32_t idx = 0, scale = 1;
    for (uint32_t i = 0; i < m; ++i) {
      idx += (i < a.size() ? a[i] : 0) * scale;
      scale *= p;
    }
    return idx;
  };
  Poly x = (m == 1) ? Poly{(p - f[0]) % p} : Poly{0, 1};
  ctx->exp_.assign(q - 1, 0);
  ctx->dlog_.assign(q, 0);
  Poly cur{1};
  for (uint32_t j = 0; j < q - 1; ++j) {
    uint32_t idx = pack(cur);
    ctx->exp_[j] = idx;
    ctx->dlog_[idx] = j;
    cur = poly_mulmod(cur, x, f, p);
  }
  if (!(cur.size() == 1 && cur[0] == 1))
    raise(Errc::InternalVerificationFailed, "generator order mismatch");

  ctx->neg_.assign(q, 0);
  for (uint32_t a = 0; a < q; ++a) {
    uint32_t r = 0, scale = 1, t = a;
    for (uint32_t i = 0; i < m; ++i) {
      uint32_t d = t % p;
      r += (d ? p - d : 0) * scale;
      t /= p;
      scale *= p;
    }
    ctx->neg_[a] = r;
  }

  ctx->zech_.assign(q - 1, FieldContext::LogView::kZero);
  for (uint32_t d = 0; d < q - 1; ++d) {
    uint32_t s = ctx->add_idx(1, ctx->exp_[d]);
    if (s != 0) ctx->zech_[d] = ctx->dlog_[s];
  }
  return ctx;
}

FieldPtr build_field_q(uint64_t q, uint64_t max_q) {
  uint64_t p;
  uint32_t m;
  if (!nt::prime_power(q, &p, &m) || p == 2)
    raise(Errc::NotPrime, std::to_string(q) + " is not an odd prime power");
  if (p > 0xffffffffu) raise(Errc::FieldTooLarge, "characteristic out of range");
  return build_field(static_cast<uint32_t>(p), m, max_q);
}

FieldElement FieldContext::from_index(uint32_t idx) const {
  if (idx >= q_) raise(Errc::InvalidParams, "element index out of range");
  return {this, idx};
}

FieldElement FieldContext::from_coeffs(const std::vector<uint32_t>& c) const {
  if (c.size() > m_) raise(Errc::InvalidParams, "coefficient list longer than extension degree");
  uint32_t idx = 0, scale = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t d = i < c.size() ? c[i] : 0;
    if (d >= p_) raise(Errc::InvalidParams, "coefficient not reduced mod p");
    idx += d * scale;
    scale *= p_;
  }
  return {this, idx};
}

FieldElement FieldContext::from_int(int64_t v) const {
  int64_t r = v % p_;
  if (r < 0) r += p_;
  return {this, static_cast<uint32_t>(r)};
}

FieldElement FieldContext::element_at(uint32_t i) const {
  if (i >= q_) raise(Errc::InvalidParams, "enumeration index out of range");
  return {this, i == 0 ? 0 : exp_[i - 1]};
}

uint32_t FieldContext::add_idx(uint32_t a, uint32_t b) const {
  uint32_t r = 0, scale = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

uint32_t FieldContext::sub_idx(uint32_t a, uint32_t b) const { return add_idx(a, neg_[b]); }

uint32_t FieldContext::inv_idx(uint32_t a) const {
  if (a == 0) raise(Errc::DivisionByZero, "inverse of zero");
  uint32_t d = dlog_[a];
  return exp_[d == 0 ? 0 : qm1_ - d];
}

uint32_t FieldContext::div_idx(uint32_t a, uint32_t b) const {
  if (b == 0) raise(Errc::DivisionByZero, "division by zero");
  return mul_idx(a, inv_idx(b));
}

uint32_t FieldContext::pow_idx(uint32_t a, int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) raise(Errc::DivisionByZero, "zero to a negative power");
    return 0;
  }
  int64_t d = (int64_t(dlog_[a]) * (e % qm1_)) % qm1_;
  if (d < 0) d += qm1_;
  return exp_[d];
}

uint32_t FieldContext::dlog_idx(uint32_t a) const {
  if (a == 0) raise(Errc::ZeroArgument, "discrete log of zero");
  return dlog_[a];
}

int FieldContext::quadratic_character_idx(uint32_t a) const {
  if (a == 0) raise(Errc::ZeroArgument, "quadratic character of zero");
  return dlog_[a] % 2 == 0 ? 1 : -1;
}

uint32_t FieldContext::sqrt_idx(uint32_t a) const {
  if (a == 0) raise(Errc::ZeroArgument, "square root of zero");
  uint32_t d = dlog_[a];
  if (d % 2 != 0) raise(Errc::NotASquare, "element has odd discrete log");
  return exp_[d / 2];
}

const FieldContext& FieldElement::field() const {
  if (!ctx_) raise(Errc::ContextMismatch, "element has no field context");
  return *ctx_;
}

std::vector<uint32_t> FieldElement::coeffs() const {
  const FieldContext& F = field();
  std::vector<uint32_t> c(F.m());
  uint32_t t = idx_;
  for (uint32_t i = 0; i < F.m(); ++i) {
    c[i] = t % F.p();
    t /= F.p();
  }
  return c;
}

namespace {
const FieldContext& common_ctx(const FieldElement& a, const FieldElement& b) {
  const FieldContext& F = a.field();
  if (&F != &b.field()) raise(Errc::ContextMismatch, "elements from different field contexts");
  return F;
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const FieldContext& F = common_ctx(*this, o);
  return {&F, F.add_idx(idx_, o.idx_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const FieldContext& F = common_ctx(*this, o);
  return {&F, F.sub_idx(idx_, o.idx_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const FieldContext& F = common_ctx(*this, o);
  return {&F, F.mul_idx(idx_, o.idx_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  const FieldContext& F = common_ctx(*this, o);
  return {&F, F.div_idx(idx_, o.idx_)};
}

FieldElement FieldElement::operator-() const {
  const FieldContext& F = field();
  return {&F, F.neg_idx(idx_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  common_ctx(*this, o);
  return idx_ == o.idx_;
}

FieldElement FieldElement::inv() const {
  const FieldContext& F = field();
  return {&F, F.inv_idx(idx_)};
}

FieldElement FieldElement::pow(int64_t e) const {
  const FieldContext& F = field();
  return {&F, F.pow_idx(idx_, e)};
}

std::string FieldElement::str() const {
  if (idx_ == 0) return "0";
  uint32_t d = field().dlog_idx(idx_);
  return d == 0 ? "1" : "w^" + std::to_string(d);
}

uint32_t dlog(const FieldElement& x) { return x.field().dlog_idx(x.index()); }

int quadratic_character(const FieldElement& x) {
  return x.field().quadratic_character_idx(x.index());
}

FieldElement sqrt(const FieldElement& x) {
  return {&x.field(), x.field().sqrt_idx(x.index())};
}

std::vector<FieldElement> subgroup(const FieldContext& F, uint32_t d) {
  if (d == 0 || (F.q() - 1) % d != 0)
    raise(Errc::NotADivisor, std::to_string(d) + " does not divide q-1");
  uint32_t step = (F.q() - 1) / d;
  std::vector<FieldElement> out;
  out.reserve(d);
  for (uint32_t j = 0; j < d; ++j) out.push_back({&F, F.exp_log(uint64_t(j) * step)});
  return out;
}

}  // namespace grsdual
