#include <algorithm>
#include <optional>

#include "doctest.h"
#include "grsdual/grs.hpp"
#include "grsdual/kernels.hpp"
#include "grsdual/selfdual.hpp"
#include "support.hpp"

using namespace grsdual;
using testsupport::NaiveField;

namespace {

GrsCode random_code(const FieldPtr& F, size_t n, size_t k, uint64_t seed, bool with_inf = false) {
  if (with_inf) {
    EvaluationSet A = testsupport::random_finite_set(F, n - 1, seed);
    return make_code(F, k, A.with_appended(EvalPoint::infinity()),
                     testsupport::random_scaling(F, n, seed + 1));
  }
  return make_code(F, k, testsupport::random_finite_set(F, n, seed),
                   testsupport::random_scaling(F, n, seed + 1));
}

// pi_A as an explicit coefficient vector, built by convolution in NaiveField.
std::vector<std::vector<uint32_t>> vanishing_poly(const NaiveField& N, const EvaluationSet& A) {
  std::vector<std::vector<uint32_t>> poly{N.one()};
  for (const auto& pt : A) {
    std::vector<std::vector<uint32_t>> next(poly.size() + 1, N.zero());
    auto root = N.from_index(pt.value().index());
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = N.add(next[i + 1], poly[i]);
      next[i] = N.add(next[i], N.mul(N.neg(root), poly[i]));
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<uint32_t> poly_eval(const NaiveField& N, const std::vector<std::vector<uint32_t>>& poly,
                                const std::vector<uint32_t>& x) {
  auto acc = N.zero();
  for (size_t i = poly.size(); i-- > 0;) acc = N.add(N.mul(acc, x), poly[i]);
  return acc;
}

}  // namespace

TEST_SUITE("grs") {

TEST_CASE("evaluation columns") {
  FieldPtr F = build_field(3, 2);
  FieldElement w = F->omega();
  auto col = eval_column(*F, 4, EvalPoint::finite(w));
  REQUIRE(col.size() == 4);
  CHECK(col[0] == F->one());
  CHECK(col[1] == w);
  CHECK(col[2] == w * w);
  CHECK(col[3] == w.pow(3));

  auto inf = eval_column(*F, 3, EvalPoint::infinity());
  CHECK(inf[0].is_zero());
  CHECK(inf[1].is_zero());
  CHECK(inf[2] == F->one());

  CHECK_THROWS_AS(eval_column(*F, 0, EvalPoint::finite(w)), Error);
  FieldPtr G5 = build_field(5, 1);
  CHECK_THROWS_AS(eval_column(*F, 2, EvalPoint::finite(G5->one())), Error);
}

TEST_CASE("evaluation set invariants") {
  FieldPtr F = build_field(3, 2);
  CHECK_THROWS_WITH_AS(EvaluationSet::finite(F, {F->one(), F->omega(), F->one()}),
                       doctest::Contains("repeated"), Error);
  std::vector<EvalPoint> two_inf{EvalPoint::infinity(), EvalPoint::infinity()};
  CHECK_THROWS_AS(EvaluationSet(F, two_inf), Error);
  CHECK_THROWS_AS(EvaluationSet(F, {}), Error);
  FieldPtr G = build_field(3, 2);  // same parameters, distinct context
  CHECK_THROWS_AS(EvaluationSet::finite(F, {G->one()}), Error);

  EvaluationSet A = EvaluationSet::finite(F, {F->zero(), F->one()});
  CHECK(!A.has_infinity());
  CHECK(A.contains(EvalPoint::finite(F->zero())));
  CHECK(!A.contains(EvalPoint::infinity()));
  EvaluationSet B = A.with_appended(EvalPoint::infinity());
  CHECK(B.size() == 3);
  CHECK(B.has_infinity());
  CHECK_THROWS_AS(B.with_appended(EvalPoint::infinity()), Error);
}

TEST_CASE("scaling vector invariants") {
  FieldPtr F = build_field(5, 1);
  try {
    ScalingVector sv(F, {F->one(), F->zero()});
    FAIL("zero scaling accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroScaling);
  }
  FieldPtr G = build_field(5, 1);
  CHECK_THROWS_AS(ScalingVector(F, {G->one()}), Error);
}

TEST_CASE("code construction and generator") {
  FieldPtr F = build_field(3, 2);
  FieldElement w = F->omega();
  EvaluationSet A = EvaluationSet::finite(F, {F->zero(), F->one(), w, w * w});
  ScalingVector v(F, std::vector<FieldElement>(4, F->one()));
  GrsCode code = make_code(F, 2, A, v);
  CHECK(code.n() == 4);
  CHECK(code.k() == 2);
  CHECK(code.generator_consistent());
  const Matrix& G = code.generator();
  // rows (1,1,1,1) and (0,1,w,w^2)
  for (size_t j = 0; j < 4; ++j) CHECK(G.get(0, j) == F->one());
  CHECK(G.get(1, 0) == F->zero());
  CHECK(G.get(1, 1) == F->one());
  CHECK(G.get(1, 2) == w);
  CHECK(G.get(1, 3) == w * w);

  // scaled columns: v = (1, w, w^2, w^3) multiplies each column
  ScalingVector vw(F, {F->one(), w, w.pow(2), w.pow(3)});
  GrsCode scaled = make_code(F, 2, A, vw);
  for (size_t j = 0; j < 4; ++j) {
    CHECK(scaled.generator().get(0, j) == vw[j]);
    CHECK(scaled.generator().get(1, j) == vw[j] * G.get(1, j));
  }

  CHECK_THROWS_AS(make_code(F, 5, A, v), Error);          // k > n
  CHECK_THROWS_AS(make_code(F, 0, A, v), Error);          // k < 1
  ScalingVector v3(F, std::vector<FieldElement>(3, F->one()));
  CHECK_THROWS_AS(make_code(F, 2, A, v3), Error);         // length mismatch
  EvaluationSet single = EvaluationSet::finite(F, {F->one()});
  ScalingVector v1(F, {F->one()});
  CHECK_THROWS_AS(make_code(F, 1, single, v1), Error);    // n < 2

  // with_generator skips regeneration, generator_consistent detects tampering
  Matrix T = G;
  T.at(0, 0) = w.index();
  GrsCode tampered = GrsCode::with_generator(F, 2, A, v, T, Provenance::object());
  CHECK(!tampered.generator_consistent());
  CHECK(code.generator_consistent());
  Matrix bad(F.get(), 3, 4);
  CHECK_THROWS_AS(GrsCode::with_generator(F, 2, A, v, bad, Provenance::object()), Error);
}

TEST_CASE("vanishing polynomial evaluation") {
  // a subgroup of order d has vanishing polynomial x^d - 1
  FieldPtr F = build_field(3, 2);
  auto H = subgroup(*F, 4);
  EvaluationSet A = EvaluationSet::finite(F, H);
  for (uint32_t i = 0; i < F->q(); ++i) {
    FieldElement x = F->from_index(i);
    CHECK(pi_eval(A, x) == x.pow(4) - F->one());
  }

  // GF(7): cubes {1, 2, 4} give x^3 - 1; at x = 3 that is 26 = 5 mod 7
  FieldPtr F7 = build_field(7, 1);
  EvaluationSet C = EvaluationSet::finite(F7, {F7->from_int(1), F7->from_int(2), F7->from_int(4)});
  CHECK(pi_eval(C, F7->from_int(3)) == F7->from_int(5));

  // cross-check against explicit coefficient convolution on random sets
  NaiveField N(*F);
  for (uint64_t seed = 0; seed < 8; ++seed) {
    EvaluationSet R = testsupport::random_finite_set(F, 2 + seed % 5, seed);
    auto poly = vanishing_poly(N, R);
    for (uint32_t i = 0; i < F->q(); ++i) {
      uint32_t expect = N.to_index(poly_eval(N, poly, N.from_index(i)));
      CHECK(pi_eval(R, F->from_index(i)).index() == expect);
    }
  }

  EvaluationSet withinf = A.with_appended(EvalPoint::infinity());
  CHECK_THROWS_AS(pi_eval(withinf, F->one()), Error);
}

TEST_CASE("delta values") {
  FieldPtr F3 = build_field(3, 1);
  EvaluationSet A = EvaluationSet::finite(F3, {F3->zero(), F3->one()});
  CHECK(delta(A, F3->zero()) == F3->from_int(2));
  CHECK(delta(A, F3->one()) == F3->one());

  // fourth roots of unity in GF(9): delta(a) = 4a^3 = a^3
  FieldPtr F = build_field(3, 2);
  EvaluationSet H = EvaluationSet::finite(F, subgroup(*F, 4));
  for (const auto& pt : H) CHECK(delta(H, pt.value()) == pt.value().pow(3));

  try {
    delta(A, F3->from_int(2));
    FAIL("non-member accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAMember);
  }
  EvaluationSet withinf = A.with_appended(EvalPoint::infinity());
  CHECK_THROWS_AS(delta(withinf, F3->zero()), Error);
}

TEST_CASE("delta is the derivative of the vanishing polynomial") {
  FieldPtr F = build_field(5, 2);
  NaiveField N(*F);
  for (uint64_t seed = 20; seed < 35; ++seed) {
    EvaluationSet A = testsupport::random_finite_set(F, 2 + seed % 7, seed);
    auto poly = vanishing_poly(N, A);
    // formal derivative
    std::vector<std::vector<uint32_t>> der;
    for (size_t i = 1; i < poly.size(); ++i) {
      auto c = N.zero();
      for (uint32_t rep = 0; rep < i % N.p; ++rep) c = N.add(c, poly[i]);
      der.push_back(c);
    }
    for (const auto& pt : A) {
      uint32_t expect = N.to_index(poly_eval(N, der, N.from_index(pt.value().index())));
      CHECK(delta(A, pt.value()).index() == expect);
    }
  }
}

TEST_CASE("delta respects set partitions") {
  // A = B union C disjoint: delta_A(b) = delta_B(b) * pi_C(b)
  FieldPtr F = build_field(7, 2);
  for (uint64_t seed = 40; seed < 52; ++seed) {
    size_t n = 4 + seed % 6;
    EvaluationSet A = testsupport::random_finite_set(F, n, seed);
    size_t cut = 1 + seed % (n - 1);
    std::vector<FieldElement> b, c;
    for (size_t i = 0; i < n; ++i)
      (i < cut ? b : c).push_back(A[i].value());
    EvaluationSet B = EvaluationSet::finite(F, b);
    EvaluationSet C = EvaluationSet::finite(F, c);
    for (const auto& x : b) CHECK(delta(A, x) == delta(B, x) * pi_eval(C, x));
  }
}

TEST_CASE("delta after adjoining zero") {
  FieldPtr F = build_field(3, 2);
  for (uint64_t seed = 60; seed < 70; ++seed) {
    EvaluationSet A = testsupport::random_finite_set(F, 3 + seed % 4, seed);
    if (A.contains(EvalPoint::finite(F->zero()))) continue;
    std::vector<FieldElement> ext{F->zero()};
    for (const auto& pt : A) ext.push_back(pt.value());
    EvaluationSet B = EvaluationSet::finite(F, ext);
    for (const auto& pt : A)
      CHECK(delta(B, pt.value()) == pt.value() * delta(A, pt.value()));
    // and at the new point, delta_B(0) = pi_A(0)... up to the sign convention
    FieldElement d0 = F->one();
    for (const auto& pt : A) d0 = d0 * (F->zero() - pt.value());
    CHECK(delta(B, F->zero()) == d0);
    CHECK(d0 == pi_eval(A, F->zero()));
  }
}

TEST_CASE("power sums against inverse delta") {
  // sum_i a_i^s / delta_A(a_i) = 0 for s <= n-2 and = 1 for s = n-1
  for (uint64_t q : {5, 9, 27}) {
    FieldPtr F = build_field_q(q);
    for (uint64_t seed = 80; seed < 90; ++seed) {
      size_t n = 2 + seed % 5;
      if (n > q) continue;
      EvaluationSet A = testsupport::random_finite_set(F, n, seed + q);
      for (size_t s = 0; s < n; ++s) {
        FieldElement acc = F->zero();
        for (const auto& pt : A) acc += pt.value().pow(s) / delta(A, pt.value());
        CHECK(acc == (s + 1 == n ? F->one() : F->zero()));
      }
    }
  }
}

TEST_CASE("dual scaling") {
  FieldPtr F3 = build_field(3, 1);
  GrsCode c3 = make_code(F3, 1, EvaluationSet::finite(F3, {F3->zero(), F3->one()}),
                         ScalingVector(F3, {F3->one(), F3->one()}));
  ScalingVector u3 = dual_scaling(c3);
  CHECK(u3[0] == F3->from_int(2));
  CHECK(u3[1] == F3->one());

  FieldPtr F7 = build_field(7, 1);
  GrsCode c7 = make_code(F7, 1, EvaluationSet::finite(F7, {F7->one(), F7->from_int(2)}),
                         ScalingVector(F7, {F7->one(), F7->one()}));
  ScalingVector u7 = dual_scaling(c7);
  CHECK(u7[0] == F7->from_int(6));
  CHECK(u7[1] == F7->one());

  // GRS_k(A, v) and GRS_{n-k}(A, u) are orthogonal complements
  FieldPtr F = build_field(5, 2);
  for (uint64_t seed = 100; seed < 110; ++seed) {
    size_t n = 4 + seed % 4, k = 1 + seed % (n - 1);
    GrsCode code = random_code(F, n, k, seed);
    ScalingVector u = dual_scaling(code);
    GrsCode dual = make_code(F, n - k, code.points(), u);
    CHECK(code.generator().mul(dual.generator().transposed()).is_zero());
    CHECK(code.generator().rank() + dual.generator().rank() == n);
  }

  GrsCode winf = random_code(F, 5, 2, 3, true);
  try {
    dual_scaling(winf);
    FAIL("infinity accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfinityUnsupported);
  }
}

TEST_CASE("dual scaling of a self-dual code is proportional to the scaling") {
  FieldPtr F = build_field(3, 2);
  EvaluationSet A = EvaluationSet::finite(F, subgroup(*F, 4));
  GrsCode code = even_set_code(A, Provenance::object());
  ScalingVector u = dual_scaling(code);
  FieldElement ratio = u[0] / code.scaling()[0];
  for (size_t i = 0; i < code.n(); ++i) CHECK(u[i] == ratio * code.scaling()[i]);
}

TEST_CASE("encode") {
  FieldPtr F = build_field(5, 1);
  std::vector<FieldElement> pts;
  for (int i = 0; i < 4; ++i) pts.push_back(F->from_int(i));
  GrsCode code = make_code(F, 2, EvaluationSet::finite(F, pts),
                           ScalingVector(F, std::vector<FieldElement>(4, F->one())));
  auto word = encode(code, {F->from_int(1), F->from_int(2)});
  // 1 + 2a at a = 0,1,2,3: (1, 3, 0, 2)
  CHECK(word[0] == F->from_int(1));
  CHECK(word[1] == F->from_int(3));
  CHECK(word[2] == F->from_int(0));
  CHECK(word[3] == F->from_int(2));

  CHECK_THROWS_AS(encode(code, {F->one()}), Error);

  // Horner evaluation agrees with the matrix product, including at infinity
  FieldPtr F9 = build_field(3, 2);
  GrsCode r9 = random_code(F9, 6, 3, 7, true);
  std::vector<FieldElement> msg{F9->omega(), F9->zero(), F9->from_int(2)};
  auto w9 = encode(r9, msg);
  for (size_t j = 0; j < r9.n(); ++j) {
    FieldElement acc = F9->zero();
    if (r9.points()[j].is_infinity()) {
      acc = msg.back();
    } else {
      for (size_t i = msg.size(); i-- > 0;) acc = acc * r9.points()[j].value() + msg[i];
    }
    CHECK(w9[j] == r9.scaling()[j] * acc);
  }
}

TEST_CASE("erasure decoding round-trips") {
  FieldPtr F = build_field(7, 1);
  GrsCode code = random_code(F, 5, 2, 11);
  std::vector<FieldElement> msg{F->from_int(3), F->from_int(6)};
  auto word = encode(code, msg);

  // every erasure pattern with at most n-k = 3 erasures recovers the message
  for (uint32_t mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    std::vector<std::optional<FieldElement>> recv;
    for (size_t j = 0; j < 5; ++j)
      recv.push_back((mask >> j) & 1 ? std::nullopt : std::optional<FieldElement>(word[j]));
    auto decoded = erasure_decode(code, recv);
    CHECK(decoded == msg);
    CHECK(encode(code, decoded) == word);
  }

  // same with an infinity coordinate in play
  GrsCode winf = random_code(F, 6, 3, 13, true);
  std::vector<FieldElement> m3{F->one(), F->from_int(5), F->from_int(2)};
  auto w3 = encode(winf, m3);
  for (uint32_t mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    std::vector<std::optional<FieldElement>> recv;
    for (size_t j = 0; j < 6; ++j)
      recv.push_back((mask >> j) & 1 ? std::nullopt : std::optional<FieldElement>(w3[j]));
    CHECK(erasure_decode(winf, recv) == m3);
  }
}

TEST_CASE("erasure decoding failures") {
  FieldPtr F = build_field(7, 1);
  GrsCode code = random_code(F, 5, 2, 17);
  auto word = encode(code, {F->one(), F->from_int(2)});
  std::vector<std::optional<FieldElement>> recv(word.begin(), word.end());

  auto four_erased = recv;
  for (size_t j = 0; j < 4; ++j) four_erased[j] = std::nullopt;
  try {
    erasure_decode(code, four_erased);
    FAIL("too many erasures accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooManyErasures);
  }

  auto corrupted = recv;
  corrupted[0] = *corrupted[0] + F->one();
  try {
    erasure_decode(code, corrupted);
    FAIL("inconsistent word accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InconsistentWord);
  }

  recv.pop_back();
  CHECK_THROWS_AS(erasure_decode(code, recv), Error);  // length mismatch

  // a rank-deficient generator can leave the message undetermined
  EvaluationSet A = EvaluationSet::finite(F, {F->zero(), F->one(), F->from_int(2)});
  ScalingVector v(F, std::vector<FieldElement>(3, F->one()));
  Matrix G(F.get(), 2, 3);
  for (size_t j = 0; j < 3; ++j) G.set(0, j, F->one());  // row 1 stays zero
  GrsCode degen = GrsCode::with_generator(F, 2, A, v, G, Provenance::object());
  std::vector<std::optional<FieldElement>> dw{F->one(), F->one(), F->one()};
  try {
    erasure_decode(degen, dw);
    FAIL("undetermined system accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooManyErasures);
  }
}

TEST_CASE("minimum distance equals the independent oracle") {
  FieldPtr F5 = build_field(5, 1);
  FieldPtr F9 = build_field(3, 2);
  for (uint64_t seed = 200; seed < 212; ++seed) {
    const FieldPtr& F = seed % 2 ? F5 : F9;
    size_t n = 3 + seed % 4, k = 1 + seed % 3;
    if (n > F->q()) n = F->q();
    if (k >= n) k = n - 1;
    GrsCode code = random_code(F, n, k, seed, seed % 3 == 0);
    size_t d = min_distance_bruteforce(code);
    CHECK(d == testsupport::slow_min_distance(code));
    CHECK(d == n - k + 1);  // GRS codes are MDS
    CHECK(d == min_distance_support(code));
  }

  // [2,1] codes have distance 2
  GrsCode tiny = make_code(F9, 1, EvaluationSet::finite(F9, {F9->one(), F9->omega()}),
                           ScalingVector(F9, {F9->one(), F9->omega().pow(2)}));
  CHECK(min_distance_bruteforce(tiny) == 2);

  DistanceOptions tight;
  tight.max_words = 10;
  GrsCode big = random_code(F5, 5, 3, 300);
  try {
    min_distance_bruteforce(big, tight);
    FAIL("enumeration bound ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  CHECK_THROWS_AS(min_distance_support(big, 1), Error);
}

TEST_CASE("distance methods agree on a tampered generator") {
  FieldPtr F = build_field(5, 1);
  GrsCode code = random_code(F, 5, 2, 31);
  Matrix G = code.generator();
  for (size_t i = 0; i < 2; ++i) G.at(i, 3) = G.at(i, 1);  // duplicate a column
  GrsCode dup = GrsCode::with_generator(F, 2, code.points(), code.scaling(), G,
                                        Provenance::object());
  // Duplicating a column forces coordinates 1 and 3 equal, so there is no
  // weight-2 word in odd characteristic; the distance drops from 4 to 3
  // (a word vanishing at point 1 of the punctured [4,2] code).
  CHECK(min_distance_support(dup) == 3);
  CHECK(min_distance_bruteforce(dup) == 3);
}

TEST_CASE("mds_check modes") {
  FieldPtr F = build_field(5, 1);
  std::vector<FieldElement> pts;
  for (int i = 0; i < 4; ++i) pts.push_back(F->from_int(i));
  GrsCode code = make_code(F, 2, EvaluationSet::finite(F, pts),
                           ScalingVector(F, std::vector<FieldElement>(4, F->one())));

  MdsOptions opt;
  opt.mode = MdsMode::Bruteforce;
  MdsReport rb = mds_check(code, opt);
  CHECK(rb.verdict);
  CHECK(rb.mode == "bruteforce");
  CHECK(rb.tested == 25);

  opt.mode = MdsMode::Exhaustive;
  MdsReport re = mds_check(code, opt);
  CHECK(re.verdict);
  CHECK(re.mode == "exhaustive");
  CHECK(re.tested == 6);
  CHECK(!re.witness.has_value());

  opt.mode = MdsMode::Skip;
  MdsReport rs = mds_check(code, opt);
  CHECK(rs.verdict);
  CHECK(rs.mode == "skip");
  CHECK(rs.tested == 0);

  // Auto picks bruteforce here (q^k = 25 is tiny)
  MdsReport ra = mds_check(code);
  CHECK(ra.mode == "bruteforce");
  CHECK(ra.verdict);
}

TEST_CASE("mds_check rejects a tampered generator with a witness") {
  FieldPtr F = build_field(5, 1);
  GrsCode code = random_code(F, 5, 2, 37);
  Matrix G = code.generator();
  for (size_t i = 0; i < 2; ++i) G.at(i, 2) = G.at(i, 0);
  GrsCode dup = GrsCode::with_generator(F, 2, code.points(), code.scaling(), G,
                                        Provenance::object());
  MdsOptions opt;
  opt.mode = MdsMode::Exhaustive;
  MdsReport rep = mds_check(dup, opt);
  CHECK(!rep.verdict);
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == std::vector<size_t>{0, 2});

  opt.mode = MdsMode::Bruteforce;
  CHECK(!mds_check(dup, opt).verdict);

  opt.mode = MdsMode::Sampled;
  opt.samples = 10;  // C(5,2) = 10, sampling with replacement still covers
  opt.seed = 5;
  MdsReport rs1 = mds_check(dup, opt);
  MdsReport rs2 = mds_check(dup, opt);
  CHECK(rs1.verdict == rs2.verdict);
  CHECK(rs1.tested == rs2.tested);
  CHECK(rs1.witness == rs2.witness);
}

TEST_CASE("sampled mds_check is deterministic in the seed") {
  FieldPtr F = build_field(5, 2);
  GrsCode code = random_code(F, 12, 6, 41);
  MdsOptions opt;
  opt.mode = MdsMode::Sampled;
  opt.samples = 200;
  opt.seed = 99;
  MdsReport a = mds_check(code, opt);
  MdsReport b = mds_check(code, opt);
  CHECK(a.verdict);
  CHECK(a.tested == 200);
  CHECK(a.samples == 200);
  CHECK(a.seed == 99);
  CHECK(b.tested == a.tested);
  // sample count past C(n,k) is clamped
  GrsCode small = random_code(F, 4, 2, 43);
  opt.samples = 50;
  MdsReport c = mds_check(small, opt);
  CHECK(c.samples == 6);
}

TEST_CASE("serial and parallel kernels agree") {
  FieldPtr F = build_field(5, 2);
  GrsCode code = random_code(F, 8, 4, 53);
  const Matrix& G = code.generator();
  CHECK(kernels::min_weight_serial(G) == kernels::min_weight_parallel(G));

  auto es = kernels::scan_minors_exhaustive_serial(G);
  auto ep = kernels::scan_minors_exhaustive_parallel(G);
  CHECK(es.tested == ep.tested);
  CHECK(es.singular == ep.singular);
  CHECK(es.witness == ep.witness);

  auto ss = kernels::scan_minors_sampled_serial(G, 64, 7);
  auto sp = kernels::scan_minors_sampled_parallel(G, 64, 7);
  CHECK(ss.tested == sp.tested);
  CHECK(ss.singular == sp.singular);
  CHECK(ss.witness == sp.witness);
}

TEST_CASE("subset sampling is well-formed and reproducible") {
  for (uint64_t t = 0; t < 50; ++t) {
    auto s = kernels::sample_subset(12, 5, 77, t);
    REQUIRE(s.size() == 5);
    CHECK(std::is_sorted(s.begin(), s.end()));
    for (size_t i = 0; i + 1 < s.size(); ++i) CHECK(s[i] != s[i + 1]);
    CHECK(s.back() < 12);
    CHECK(s == kernels::sample_subset(12, 5, 77, t));
  }
  CHECK(kernels::sample_subset(12, 5, 77, 0) != kernels::sample_subset(12, 5, 78, 0));
}

TEST_CASE("capped arithmetic helpers") {
  CHECK(kernels::binomial_capped(4, 2, 100) == 6);
  CHECK(kernels::binomial_capped(529, 78, 1000) == 1001);
  CHECK(kernels::binomial_capped(5, 0, 10) == 1);
  CHECK(kernels::pow_capped(5, 2, 100) == 25);
  CHECK(kernels::pow_capped(23, 10, 1000) == 1001);
  CHECK(kernels::pow_capped(9, 0, 10) == 1);
}

}  // TEST_SUITE
