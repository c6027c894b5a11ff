#pragma once

#include <string>
#include <vector>

#include "grsdual/selfdual.hpp"

namespace grsdual {

// Parameters for the two coset-union code families over GF(q), q = r^2.
// Family 1 tiles cosets of H inside the subgroup of order n1*(r-1) whose
// generator is w^{(r+1)/n1}; family 2 uses order n1*(r+1) and w^{(r-1)/n1}.
struct CosetParams {
  uint64_t q = 0;
  uint64_t r = 0;
  int family = 0;            // serialized as "theorem": 1 or 2
  std::string case_tag;      // "i", "ii" (family 1 also "iii")
  uint64_t n_prime = 0;      // |H|, a divisor of q-1
  uint64_t t = 0;            // number of cosets
  uint64_t n1 = 0, n2 = 0;   // n_prime = n1*n2 split along gcd
  uint64_t n() const { return n_prime * t; }
  uint64_t coset_index() const;  // [G:H] = (r -+ 1)/n2
};

CosetParams make_params(uint64_t q, int family, const std::string& case_tag,
                        uint64_t n_prime, uint64_t t);

struct CosetSelection {
  std::vector<uint64_t> mu;        // exponents of the ambient generator
  std::vector<FieldElement> reps;  // coset representatives beta_b
};
// Default representatives mu = (0, 1, ..., t-1); in the family-2 case (ii)
// branch with n2 odd, the last exponent is bumped to t when the proof's
// parity constraint (r+1)/2 + sum(mu) would otherwise be odd.
CosetSelection select_cosets(const FieldContext& F, const CosetParams& params);

// Union of the t cosets beta_b * H, blocks in b order, each block walking H
// in power order; optionally followed by 0.
EvaluationSet coset_eval_set(const FieldPtr& F, const CosetParams& params, bool include_zero);

// Self-dual MDS code for the given family and case:
//   family 1: (i) even n on A, (ii) odd n on A+{0}, (iii) even n on A+{0,inf}
//   family 2: (i) even parity data on A, (ii) on A+{0,inf}
GrsCode coset_code(const FieldPtr& F, const CosetParams& params);

struct LengthWitness {
  uint64_t N = 0;            // code length
  int family = 0;
  std::string case_tag;
  uint64_t n_prime = 0, t = 0, r = 0;
};
// Every reachable even length N <= max_n with one witness per distinct
// (N, family, case), smallest (n_prime, t) in scan order; sorted by
// (N, family, case).
std::vector<LengthWitness> enumerate_lengths(uint64_t q, uint64_t max_n);

GrsCode construct_from_witness(const FieldPtr& F, const LengthWitness& w);

}  // namespace grsdual
