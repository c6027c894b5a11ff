#include "grsdual/selfdual.hpp"

namespace grsdual {

CharacterProfile character_profile(const EvaluationSet& A) {
  CharacterProfile prof;
  size_t n = A.size();
  if (n < 2) raise(Errc::InvalidParams, "character profile needs at least two points");
  prof.delta_values.reserve(n);
  prof.eta_delta.reserve(n);
  prof.eta_neg_delta.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (A[i].is_infinity()) raise(Errc::InfinityInSet, "character profile needs finite points");
    FieldElement d = delta(A, A[i].value());
    prof.delta_values.push_back(d);
    prof.eta_delta.push_back(quadratic_character(d));
    prof.eta_neg_delta.push_back(quadratic_character(-d));
  }
  prof.eta_constant = true;
  for (int e : prof.eta_delta) prof.eta_constant = prof.eta_constant && e == prof.eta_delta[0];
  prof.common_eta = prof.eta_constant ? prof.eta_delta[0] : 0;
  prof.neg_all_square = true;
  for (int e : prof.eta_neg_delta) prof.neg_all_square = prof.neg_all_square && e == 1;
  return prof;
}

SelfDualReport is_self_dual(const GrsCode& code) {
  SelfDualReport rep;
  const FieldContext& F = *code.field();
  const Matrix& G = code.generator();
  size_t k = code.k(), n = code.n();
  rep.length_ok = n == 2 * k;
  rep.rank_ok = G.rank() == k;
  rep.gram_zero = true;
  for (size_t i = 0; i < k && rep.gram_zero; ++i)
    for (size_t j = i; j < k; ++j) {
      uint32_t acc = 0;
      for (size_t c = 0; c < n; ++c) acc = F.add_idx(acc, F.mul_idx(G.at(i, c), G.at(j, c)));
      if (acc != 0) {
        rep.gram_zero = false;
        rep.witness_rows = {i, j};
        rep.witness_value = FieldElement(&F, acc);
        break;
      }
    }
  rep.verdict = rep.length_ok && rep.rank_ok && rep.gram_zero;
  return rep;
}

namespace {
ScalingVector even_scaling_impl(const EvaluationSet& A, const CharacterProfile& prof) {
  const FieldContext& F = *A.field();
  if (!prof.eta_constant)
    raise(Errc::CharactersNotEqual, "delta characters differ across the set");
  FieldElement lambda = prof.common_eta == 1 ? F.one() : F.omega();
  std::vector<FieldElement> v;
  v.reserve(A.size());
  for (const auto& d : prof.delta_values) v.push_back(sqrt(lambda / d));
  return {A.field(), std::move(v)};
}
}  // namespace

ScalingVector even_set_scaling(const EvaluationSet& A) {
  if (A.size() % 2 != 0) raise(Errc::OddLength, "set size must be even");
  ScalingVector v = even_scaling_impl(A, character_profile(A));
  GrsCode code(A.field(), A.size() / 2, A, v, Provenance{{"kind", "lemma2"}});
  if (!is_self_dual(code).verdict)
    raise(Errc::InternalVerificationFailed, "scaled code failed the self-dual certificate");
  return v;
}

GrsCode even_set_code(const EvaluationSet& A, Provenance provenance) {
  if (A.size() % 2 != 0) raise(Errc::OddLength, "set size must be even");
  ScalingVector v = even_scaling_impl(A, character_profile(A));
  GrsCode code(A.field(), A.size() / 2, A, std::move(v), std::move(provenance));
  if (!is_self_dual(code).verdict)
    raise(Errc::InternalVerificationFailed, "scaled code failed the self-dual certificate");
  return code;
}

namespace {
std::pair<EvaluationSet, ScalingVector> extended_scaling_impl(const EvaluationSet& A,
                                                              const CharacterProfile& prof) {
  const FieldContext& F = *A.field();
  if (!prof.neg_all_square)
    raise(Errc::NegCharacterNotSquare, "-delta has a non-square value on the set");
  std::vector<FieldElement> v;
  v.reserve(A.size() + 1);
  for (const auto& d : prof.delta_values) v.push_back(sqrt((-d).inv()));
  v.push_back(F.one());
  return {A.with_appended(EvalPoint::infinity()), ScalingVector(A.field(), std::move(v))};
}
}  // namespace

std::pair<EvaluationSet, ScalingVector> extended_set_scaling(const EvaluationSet& A) {
  if (A.size() % 2 != 1) raise(Errc::EvenLength, "set size must be odd");
  auto [pts, v] = extended_scaling_impl(A, character_profile(A));
  GrsCode code(A.field(), (A.size() + 1) / 2, pts, v, Provenance{{"kind", "lemma3"}});
  if (!is_self_dual(code).verdict)
    raise(Errc::InternalVerificationFailed, "extended code failed the self-dual certificate");
  return {std::move(pts), std::move(v)};
}

GrsCode extended_set_code(const EvaluationSet& A, Provenance provenance) {
  if (A.size() % 2 != 1) raise(Errc::EvenLength, "set size must be odd");
  auto [pts, v] = extended_scaling_impl(A, character_profile(A));
  GrsCode code(A.field(), (A.size() + 1) / 2, std::move(pts), std::move(v),
               std::move(provenance));
  if (!is_self_dual(code).verdict)
    raise(Errc::InternalVerificationFailed, "extended code failed the self-dual certificate");
  return code;
}

bool pless_exists(uint64_t q, uint64_t n) {
  uint64_t p = 0;
  uint32_t e = 0;
  if (!nt::prime_power(q, &p, &e) || p == 2)
    raise(Errc::InvalidParams, std::to_string(q) + " is not an odd prime power");
  if (n == 0 || n % 2 != 0) raise(Errc::OddN, "length must be even and positive");
  return (n / 2) % 2 == 0 || q % 4 == 1;
}

}  // namespace grsdual
