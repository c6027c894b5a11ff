#pragma once

#include <optional>
#include <utility>

#include "grsdual/grs.hpp"

namespace grsdual {

// Quadratic-character data of delta_A over a finite evaluation set.
struct CharacterProfile {
  std::vector<FieldElement> delta_values;
  std::vector<int> eta_delta;        // quadratic character of delta_A(a_i)
  std::vector<int> eta_neg_delta;    // quadratic character of -delta_A(a_i)
  bool eta_constant = false;         // all eta_delta agree
  int common_eta = 0;                // the shared value when eta_constant
  bool neg_all_square = false;       // all eta_neg_delta are +1
};
CharacterProfile character_profile(const EvaluationSet& A);

struct SelfDualReport {
  bool verdict = false;
  bool length_ok = false;  // n == 2k
  bool rank_ok = false;    // rank(G) == k
  bool gram_zero = false;  // G * G^T == 0
  std::optional<std::pair<size_t, size_t>> witness_rows;  // first nonzero inner product
  std::optional<FieldElement> witness_value;
};
// Exact certificate: length, full rank, and a zero Gram matrix.
SelfDualReport is_self_dual(const GrsCode& code);

// Scaling turning an even-size finite set into a self-dual code of rate 1/2.
// Exists iff the character of delta_A is constant on A; v_i is a square root
// of lambda / delta_A(a_i) with lambda = 1 or w by that common character.
ScalingVector even_set_scaling(const EvaluationSet& A);
GrsCode even_set_code(const EvaluationSet& A, Provenance provenance);

// Scaling turning an odd-size finite set plus the point at infinity into a
// self-dual code. Needs -delta_A(a) to be a square for every a; the finite
// coordinates get sqrt(-1/delta_A(a_i)) and the infinity coordinate 1.
std::pair<EvaluationSet, ScalingVector> extended_set_scaling(const EvaluationSet& A);
GrsCode extended_set_code(const EvaluationSet& A, Provenance provenance);

// Pless existence criterion: a self-dual code of even length n over GF(q)
// exists iff (-1)^{n/2} is a square, i.e. n/2 is even or q = 1 mod 4.
bool pless_exists(uint64_t q, uint64_t n);

}  // namespace grsdual
