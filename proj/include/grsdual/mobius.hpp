#pragma once

#include "grsdual/grs.hpp"

namespace grsdual {

// Fractional-linear map t -> (c + d*t) / (a + b*t) on the projective line,
// kept as the coefficient matrix ((a, b), (c, d)) with a*d - b*c != 0.
// Composition is the matrix product; two coefficient tuples that differ by a
// nonzero scalar define the same map, and the stored tuple is always the
// canonical class representative (first nonzero of a, b, c, d scaled to 1).
class MobiusTransform {
 public:
  MobiusTransform(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                  const FieldElement& d);
  static MobiusTransform identity(const FieldContext& F);
  static MobiusTransform random(const FieldContext& F, uint64_t seed);

  const FieldContext& field() const { return *a_.ctx(); }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldElement& c() const { return c_; }
  const FieldElement& d() const { return d_; }
  FieldElement det() const { return a_ * d_ - b_ * c_; }

  // g(-a/b) = infinity; g(infinity) = d/b, or infinity itself when b = 0.
  EvalPoint apply(const EvalPoint& t) const;
  MobiusTransform compose(const MobiusTransform& h) const;  // this after h
  MobiusTransform inverse() const;
  bool same_map(const MobiusTransform& o) const;  // equal up to a scalar

 private:
  FieldElement a_, b_, c_, d_;
};

// Induced k x k matrix: entry (i, j) is the coefficient of X^{j-1} in
// (a + b X)^{k-i} (c + d X)^{i-1}. Invertible, and g -> g_k is multiplicative.
Matrix induced_matrix(const MobiusTransform& g, size_t k);

// Column scalars relating g_k * c_k(t) to c_k(g(t)):
//   (a + b t)^{k-1}          for finite t with a + b t != 0
//   (c - d a / b)^{k-1}      at t = -a/b (the preimage of infinity)
//   b^{k-1} or d^{k-1}       at t = infinity, by b != 0 / b = 0
FieldElement induced_column_scalar(const MobiusTransform& g, size_t k, const EvalPoint& t);
std::vector<FieldElement> delta_diagonal(const MobiusTransform& g, size_t k,
                                         const std::vector<EvalPoint>& pts);

// Permutation of the canonical projective line order (0, w^0, ..., w^{q-2},
// infinity): perm[j] = position of g(point j).
std::vector<size_t> point_permutation(const MobiusTransform& g);

// Largest field for which the full-line matrix identity is materialized.
inline constexpr uint64_t kMaxAutomorphismCheckField = 1ull << 16;

// Verifies g_k * G_k = G_k * P(g) * Delta_k(g) over the whole projective
// line, with G_k the k x (q+1) matrix of canonical columns.
bool automorphism_identity_check(const MobiusTransform& g, size_t k);

struct TransportCertificate {
  GrsCode original;
  MobiusTransform g;
  GrsCode transported;
  std::vector<FieldElement> multipliers;  // per-coordinate scaling change
  bool row_space_equal = false;
  bool self_dual = false;
};

// Moves a self-dual code along g: points g(a_i), scaling delta_i * v_i. The
// result is the same code; both that equality and self-duality are verified.
TransportCertificate transport(const GrsCode& code, const MobiusTransform& g);

// Picks the first a in canonical field order with -a outside the evaluation
// set and transports by t -> 1/(a + t), yielding an all-finite equal code.
TransportCertificate remove_infinity(const GrsCode& code);

}  // namespace grsdual
