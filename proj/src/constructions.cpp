#include "grsdual/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace grsdual {

uint64_t CosetParams::coset_index() const {
  return (family == 1 ? r - 1 : r + 1) / n2;
}

CosetParams make_params(uint64_t q, int family, const std::string& case_tag,
                        uint64_t n_prime, uint64_t t) {
  CosetParams P;
  P.q = q;
  uint64_t root = nt::isqrt(q);
  uint64_t p = 0;
  uint32_t e = 0;
  if (root * root != q || !nt::prime_power(root, &p, &e) || p == 2)
    raise(Errc::InvalidParams, "q must be the square of an odd prime power");
  P.r = root;
  if (family != 1 && family != 2) raise(Errc::InvalidParams, "family must be 1 or 2");
  P.family = family;
  bool tag_ok = case_tag == "i" || case_tag == "ii" || (family == 1 && case_tag == "iii");
  if (!tag_ok) raise(Errc::InvalidParams, "unknown case tag '" + case_tag + "'");
  P.case_tag = case_tag;
  if (n_prime == 0 || (q - 1) % n_prime != 0)
    raise(Errc::InvalidParams, "n_prime must divide q-1");
  P.n_prime = n_prime;
  uint64_t half = family == 1 ? P.r + 1 : P.r - 1;
  uint64_t other = family == 1 ? P.r - 1 : P.r + 1;
  P.n1 = std::gcd(n_prime, half);
  P.n2 = n_prime / P.n1;
  if (other % P.n2 != 0)
    raise(Errc::InternalVerificationFailed, "coset split leaves a non-divisor");
  if (t == 0 || t > other / P.n2)
    raise(Errc::InvalidParams, "t must lie in [1, " + std::to_string(other / P.n2) + "]");
  P.t = t;
  return P;
}

CosetSelection select_cosets(const FieldContext& F, const CosetParams& P) {
  CosetSelection sel;
  sel.mu.resize(P.t);
  std::iota(sel.mu.begin(), sel.mu.end(), 0);
  if (P.family == 2 && P.case_tag == "ii" && P.n2 % 2 == 1 && P.t % 2 == 0) {
    // This branch of the construction needs t <= (r+1)/n2 - 1 so that a
    // spare coset exists for the parity fix below.
    if (P.t == P.coset_index())
      raise(Errc::InvalidParams, "no spare coset to fix the exponent parity");
    uint64_t parity = (P.r + 1) / 2 + std::accumulate(sel.mu.begin(), sel.mu.end(), uint64_t{0});
    if (parity % 2 == 1) sel.mu.back() = P.t;
  }
  // beta_b = g^{mu_b} for the ambient generator g = w^{(q-1) / (n1 * |G|/n1)}
  uint64_t gexp = (P.family == 1 ? P.r + 1 : P.r - 1) / P.n1;
  uint64_t index = P.coset_index();
  sel.reps.reserve(P.t);
  for (uint64_t b = 0; b < P.t; ++b) {
    sel.reps.push_back({&F, F.exp_log(sel.mu[b] * gexp)});
    for (uint64_t b2 = 0; b2 < b; ++b2)
      if (sel.mu[b] % index == sel.mu[b2] % index)
        raise(Errc::InternalVerificationFailed, "coset representatives collide");
  }
  return sel;
}

EvaluationSet coset_eval_set(const FieldPtr& F, const CosetParams& P, bool include_zero) {
  if (F->q() != P.q) raise(Errc::ContextMismatch, "params built for a different field");
  CosetSelection sel = select_cosets(*F, P);
  uint64_t hstep = (P.q - 1) / P.n_prime;
  std::vector<FieldElement> pts;
  pts.reserve(P.n() + (include_zero ? 1 : 0));
  for (uint64_t b = 0; b < P.t; ++b)
    for (uint64_t j = 0; j < P.n_prime; ++j)
      pts.push_back(sel.reps[b] * FieldElement(F.get(), F->exp_log(j * hstep)));
  if (include_zero) pts.push_back(F->zero());
  return EvaluationSet::finite(F, pts);
}

namespace {
Provenance coset_provenance(const CosetParams& P, const CosetSelection& sel) {
  Provenance prov{{"kind", "theorem"},
                  {"theorem", P.family},
                  {"case", P.case_tag},
                  {"q", P.q},
                  {"r", P.r},
                  {"n_prime", P.n_prime},
                  {"t", P.t}};
  prov["mu"] = sel.mu;
  return prov;
}

[[noreturn]] void fail_case(const std::string& why) {
  raise(Errc::CaseConditionViolated, why);
}
}  // namespace

GrsCode coset_code(const FieldPtr& F, const CosetParams& P) {
  uint64_t n = P.n();
  Provenance prov = coset_provenance(P, select_cosets(*F, P));
  if (P.family == 1) {
    if (P.case_tag == "i") {
      if (n % 2 != 0) fail_case("family 1 case i needs even n");
      if (((P.r + 1) / P.n1) % 2 != 0) fail_case("family 1 case i needs (r+1)/n1 even");
      return even_set_code(coset_eval_set(F, P, false), std::move(prov));
    }
    if (P.case_tag == "ii") {
      if (n % 2 != 1) fail_case("family 1 case ii needs odd n");
      return even_set_code(coset_eval_set(F, P, true), std::move(prov));
    }
    if (n % 2 != 0) fail_case("family 1 case iii needs even n");
    return extended_set_code(coset_eval_set(F, P, true), std::move(prov));
  }
  if (P.case_tag == "i") {
    if (((P.r - 1) / P.n1) % 2 != 0) fail_case("family 2 case i needs (r-1)/n1 even");
    if ((P.t * P.n2) % 2 != 0) fail_case("family 2 case i needs t*n2 even");
    return even_set_code(coset_eval_set(F, P, false), std::move(prov));
  }
  bool even_branch = P.n2 % 2 == 0 && (((P.r + 1) / 2) * (P.t - 1)) % 2 == 0;
  bool odd_branch = P.n2 % 2 == 1 && P.t % 2 == 0 && P.t + 1 <= P.coset_index();
  if (!even_branch && !odd_branch)
    fail_case("family 2 case ii parity conditions not met");
  return extended_set_code(coset_eval_set(F, P, true), std::move(prov));
}

std::vector<LengthWitness> enumerate_lengths(uint64_t q, uint64_t max_n) {
  uint64_t r = nt::isqrt(q);
  if (r * r != q) raise(Errc::NotASquare, std::to_string(q) + " is not a square");
  make_params(q, 1, "i", 1, 1);  // validates that r is an odd prime power
  std::vector<uint64_t> divisors;
  for (uint64_t d = 1; d <= q - 1; ++d)
    if ((q - 1) % d == 0) divisors.push_back(d);

  auto case_rank = [](const std::string& tag) { return tag == "i" ? 0 : tag == "ii" ? 1 : 2; };
  std::vector<LengthWitness> out;
  auto seen = [&](uint64_t N, int family, const std::string& tag) {
    return std::any_of(out.begin(), out.end(), [&](const LengthWitness& w) {
      return w.N == N && w.family == family && w.case_tag == tag;
    });
  };

  for (int family : {1, 2}) {
    std::vector<std::string> tags =
        family == 1 ? std::vector<std::string>{"i", "ii", "iii"} : std::vector<std::string>{"i", "ii"};
    for (const auto& tag : tags)
      for (uint64_t np : divisors)
        for (uint64_t t = 1;; ++t) {
          CosetParams P;
          try {
            P = make_params(q, family, tag, np, t);
          } catch (const Error&) {
            break;  // t beyond range
          }
          uint64_t n = P.n();
          uint64_t N = 0;
          bool ok = true;
          if (family == 1 && tag == "i") {
            ok = n % 2 == 0 && ((P.r + 1) / P.n1) % 2 == 0;
            N = n;
          } else if (family == 1 && tag == "ii") {
            ok = n % 2 == 1;
            N = n + 1;
          } else if (family == 1 && tag == "iii") {
            ok = n % 2 == 0;
            N = n + 2;
          } else if (tag == "i") {
            ok = ((P.r - 1) / P.n1) % 2 == 0 && (t * P.n2) % 2 == 0;
            N = n;
          } else {
            bool even_branch = P.n2 % 2 == 0 && (((P.r + 1) / 2) * (t - 1)) % 2 == 0;
            bool odd_branch = P.n2 % 2 == 1 && t % 2 == 0 && t + 1 <= P.coset_index();
            ok = even_branch || odd_branch;
            N = n + 2;
          }
          if (!ok || N > max_n || seen(N, family, tag)) continue;
          out.push_back({N, family, tag, np, t, r});
        }
  }
  std::sort(out.begin(), out.end(), [&](const LengthWitness& a, const LengthWitness& b) {
    if (a.N != b.N) return a.N < b.N;
    if (a.family != b.family) return a.family < b.family;
    return case_rank(a.case_tag) < case_rank(b.case_tag);
  });
  return out;
}

GrsCode construct_from_witness(const FieldPtr& F, const LengthWitness& w) {
  return coset_code(F, make_params(F->q(), w.family, w.case_tag, w.n_prime, w.t));
}

}  // namespace grsdual
