#include "grsdual/mobius.hpp"

#include "grsdual/kernels.hpp"
#include "grsdual/selfdual.hpp"

namespace grsdual {

namespace {
void check_same_ctx(const FieldElement& x, const FieldElement& y) {
  if (&x.field() != &y.field()) raise(Errc::ContextMismatch, "coefficients mix contexts");
}
}  // namespace

MobiusTransform::MobiusTransform(const FieldElement& a, const FieldElement& b,
                                 const FieldElement& c, const FieldElement& d)
    : a_(a), b_(b), c_(c), d_(d) {
  check_same_ctx(a_, b_);
  check_same_ctx(a_, c_);
  check_same_ctx(a_, d_);
  if (det().is_zero()) raise(Errc::InvalidParams, "transform determinant is zero");
  // Canonical representative of the projective class: first nonzero
  // coefficient scaled to 1.
  FieldElement* coeff[4] = {&a_, &b_, &c_, &d_};
  for (auto* x : coeff) {
    if (x->is_zero()) continue;
    FieldElement s = x->inv();
    for (auto* y : coeff) *y = *y * s;
    break;
  }
}

MobiusTransform MobiusTransform::identity(const FieldContext& F) {
  return {F.one(), F.zero(), F.zero(), F.one()};
}

MobiusTransform MobiusTransform::random(const FieldContext& F, uint64_t seed) {
  kernels::SplitMix64 rng{seed ^ 0x6a09e667f3bcc909ull};
  rng.next();
  while (true) {
    FieldElement a{&F, static_cast<uint32_t>(rng.bounded(F.q()))};
    FieldElement b{&F, static_cast<uint32_t>(rng.bounded(F.q()))};
    FieldElement c{&F, static_cast<uint32_t>(rng.bounded(F.q()))};
    FieldElement d{&F, static_cast<uint32_t>(rng.bounded(F.q()))};
    if (!(a * d - b * c).is_zero()) return {a, b, c, d};
  }
}

EvalPoint MobiusTransform::apply(const EvalPoint& t) const {
  if (t.is_infinity()) {
    if (b_.is_zero()) return EvalPoint::infinity();
    return EvalPoint::finite(d_ / b_);
  }
  const FieldElement& x = t.value();
  if (&x.field() != &field()) raise(Errc::ContextMismatch, "point from different context");
  FieldElement den = a_ + b_ * x;
  if (den.is_zero()) return EvalPoint::infinity();
  return EvalPoint::finite((c_ + d_ * x) / den);
}

MobiusTransform MobiusTransform::compose(const MobiusTransform& h) const {
  check_same_ctx(a_, h.a_);
  return {a_ * h.a_ + b_ * h.c_, a_ * h.b_ + b_ * h.d_,
          c_ * h.a_ + d_ * h.c_, c_ * h.b_ + d_ * h.d_};
}

MobiusTransform MobiusTransform::inverse() const { return {d_, -b_, -c_, a_}; }

bool MobiusTransform::same_map(const MobiusTransform& o) const {
  check_same_ctx(a_, o.a_);
  // Both sides are canonical representatives, so class equality is
  // componentwise equality.
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

Matrix induced_matrix(const MobiusTransform& g, size_t k) {
  const FieldContext& F = g.field();
  if (k < 2 || k > F.q()) raise(Errc::BadDimension, "induced matrix needs 2 <= k <= q");
  Matrix M(&F, k, k);
  for (size_t i = 0; i < k; ++i) {
    // coefficients of (a + bX)^{k-1-i} (c + dX)^{i}
    std::vector<FieldElement> poly{F.one()};
    auto mul_linear = [&](const FieldElement& u, const FieldElement& v) {
      std::vector<FieldElement> next(poly.size() + 1, F.zero());
      for (size_t s = 0; s < poly.size(); ++s) {
        next[s] += poly[s] * u;
        next[s + 1] += poly[s] * v;
      }
      poly = std::move(next);
    };
    for (size_t s = 0; s + 1 + i < k; ++s) mul_linear(g.a(), g.b());
    for (size_t s = 0; s < i; ++s) mul_linear(g.c(), g.d());
    for (size_t j = 0; j < k; ++j) M.set(i, j, poly[j]);
  }
  if (!M.nonsingular())
    raise(Errc::InternalVerificationFailed, "induced matrix is singular");
  return M;
}

FieldElement induced_column_scalar(const MobiusTransform& g, size_t k, const EvalPoint& t) {
  int64_t e = static_cast<int64_t>(k) - 1;
  if (t.is_infinity()) {
    if (g.b().is_zero()) return g.d().pow(e);
    return g.b().pow(e);
  }
  FieldElement den = g.a() + g.b() * t.value();
  if (!den.is_zero()) return den.pow(e);
  // t = -a/b, which lands on infinity; b != 0 here since det != 0
  return (g.c() - g.d() * g.a() / g.b()).pow(e);
}

std::vector<FieldElement> delta_diagonal(const MobiusTransform& g, size_t k,
                                         const std::vector<EvalPoint>& pts) {
  std::vector<FieldElement> out;
  out.reserve(pts.size());
  for (const auto& pt : pts) out.push_back(induced_column_scalar(g, k, pt));
  return out;
}

namespace {
size_t line_position(const FieldContext& F, const EvalPoint& pt) {
  if (pt.is_infinity()) return F.q();
  if (pt.value().is_zero()) return 0;
  return 1 + dlog(pt.value());
}

EvalPoint line_point(const FieldContext& F, size_t pos) {
  if (pos == F.q()) return EvalPoint::infinity();
  return EvalPoint::finite(F.element_at(static_cast<uint32_t>(pos)));
}
}  // namespace

std::vector<size_t> point_permutation(const MobiusTransform& g) {
  const FieldContext& F = g.field();
  std::vector<size_t> perm(F.q() + 1);
  for (size_t j = 0; j <= F.q(); ++j) perm[j] = line_position(F, g.apply(line_point(F, j)));
  return perm;
}

bool automorphism_identity_check(const MobiusTransform& g, size_t k) {
  const FieldContext& F = g.field();
  if (F.q() > kMaxAutomorphismCheckField)
    raise(Errc::FieldTooLarge, "projective line too large for the full matrix identity");
  size_t np = F.q() + 1;
  Matrix Gk(&F, k, np);
  for (size_t j = 0; j < np; ++j) {
    auto col = eval_column(F, k, line_point(F, j));
    for (size_t i = 0; i < k; ++i) Gk.set(i, j, col[i]);
  }
  Matrix lhs = induced_matrix(g, k).mul(Gk);
  auto perm = point_permutation(g);
  for (size_t j = 0; j < np; ++j) {
    FieldElement scale = induced_column_scalar(g, k, line_point(F, j));
    for (size_t i = 0; i < k; ++i)
      if (lhs.get(i, j) != Gk.get(i, perm[j]) * scale) return false;
  }
  return true;
}

TransportCertificate transport(const GrsCode& code, const MobiusTransform& g) {
  const FieldContext& F = *code.field();
  if (&g.field() != &F) raise(Errc::ContextMismatch, "transform from different context");
  if (!is_self_dual(code).verdict)
    raise(Errc::NotSelfDual, "transport requires a self-dual input code");

  std::vector<EvalPoint> new_pts;
  std::vector<FieldElement> new_v;
  std::vector<FieldElement> mult;
  new_pts.reserve(code.n());
  new_v.reserve(code.n());
  mult.reserve(code.n());
  for (size_t i = 0; i < code.n(); ++i) {
    const EvalPoint& pt = code.points()[i];
    FieldElement di = induced_column_scalar(g, code.k(), pt);
    new_pts.push_back(g.apply(pt));
    mult.push_back(di);
    new_v.push_back(di * code.scaling()[i]);
  }
  Provenance prov{{"kind", "mobius"}};
  prov["from"] = code.provenance();
  GrsCode moved(code.field(), code.k(), EvaluationSet(code.field(), std::move(new_pts)),
                ScalingVector(code.field(), std::move(new_v)), std::move(prov));

  TransportCertificate cert{code, g, std::move(moved), std::move(mult), false, false};
  cert.row_space_equal = grsdual::row_space_equal(code.generator(), cert.transported.generator());
  cert.self_dual = is_self_dual(cert.transported).verdict;
  if (!cert.row_space_equal)
    raise(Errc::InternalVerificationFailed, "transported code spans a different space");
  if (!cert.self_dual)
    raise(Errc::InternalVerificationFailed, "transported code lost self-duality");
  return cert;
}

TransportCertificate remove_infinity(const GrsCode& code) {
  const FieldContext& F = *code.field();
  if (!code.points().has_infinity())
    raise(Errc::NoInfinity, "code has no infinity coordinate");
  if (!is_self_dual(code).verdict)
    raise(Errc::NotSelfDual, "infinity removal requires a self-dual input code");
  for (uint32_t i = 0; i < F.q(); ++i) {
    FieldElement a = F.element_at(i);
    if (code.points().contains(EvalPoint::finite(-a))) continue;
    MobiusTransform g{a, F.one(), F.one(), F.zero()};
    return transport(code, g);
  }
  raise(Errc::FullProjectiveLine, "every candidate pole lies in the evaluation set");
}

}  // namespace grsdual
