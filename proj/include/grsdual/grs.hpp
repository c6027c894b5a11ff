#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "grsdual/field.hpp"
#include "grsdual/linalg.hpp"

namespace grsdual {

using Provenance = nlohmann::ordered_json;

// Point on the projective line over GF(q): a field element or infinity.
class EvalPoint {
 public:
  static EvalPoint finite(FieldElement v) { return EvalPoint(std::move(v)); }
  static EvalPoint infinity() { return EvalPoint(); }

  bool is_infinity() const { return !v_.has_value(); }
  const FieldElement& value() const {
    if (!v_) raise(Errc::InfinityUnsupported, "infinity has no field value");
    return *v_;
  }
  bool operator==(const EvalPoint& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return *v_ == *o.v_;
  }
  bool operator!=(const EvalPoint& o) const { return !(*this == o); }

 private:
  EvalPoint() = default;
  explicit EvalPoint(FieldElement v) : v_(std::move(v)) {}
  std::optional<FieldElement> v_;
};

// Ordered list of pairwise distinct evaluation points, at most one infinity.
class EvaluationSet {
 public:
  EvaluationSet(FieldPtr F, std::vector<EvalPoint> pts);
  static EvaluationSet finite(FieldPtr F, const std::vector<FieldElement>& vals);

  size_t size() const { return pts_.size(); }
  const EvalPoint& operator[](size_t i) const { return pts_[i]; }
  const std::vector<EvalPoint>& points() const { return pts_; }
  const FieldPtr& field() const { return F_; }
  bool has_infinity() const;
  bool contains(const EvalPoint& p) const;
  EvaluationSet with_appended(const EvalPoint& p) const;

  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

 private:
  FieldPtr F_;
  std::vector<EvalPoint> pts_;
};

// Per-coordinate column multipliers, all nonzero, one field context.
class ScalingVector {
 public:
  ScalingVector(FieldPtr F, std::vector<FieldElement> v);

  size_t size() const { return v_.size(); }
  const FieldElement& operator[](size_t i) const { return v_[i]; }
  const std::vector<FieldElement>& values() const { return v_; }
  const FieldPtr& field() const { return F_; }

 private:
  FieldPtr F_;
  std::vector<FieldElement> v_;
};

// Column of the canonical generator at one point: (1, a, ..., a^{k-1}) for
// finite a, (0, ..., 0, 1) at infinity.
std::vector<FieldElement> eval_column(const FieldContext& F, size_t k, const EvalPoint& pt);

// Generalized Reed-Solomon code with an explicit k x n generator whose j-th
// column is scaling[j] * eval_column(points[j]).
class GrsCode {
 public:
  GrsCode(FieldPtr F, size_t k, EvaluationSet points, ScalingVector scaling,
          Provenance provenance = Provenance::object());
  // Deserialization path: the generator is taken as given (shape-checked
  // only), so verification can report on tampered descriptors.
  static GrsCode with_generator(FieldPtr F, size_t k, EvaluationSet points,
                                ScalingVector scaling, Matrix generator,
                                Provenance provenance);

  size_t n() const { return points_.size(); }
  size_t k() const { return k_; }
  const FieldPtr& field() const { return F_; }
  const EvaluationSet& points() const { return points_; }
  const ScalingVector& scaling() const { return scaling_; }
  const Matrix& generator() const { return G_; }
  const Provenance& provenance() const { return provenance_; }
  // True when the stored generator matches the one derived from points and
  // scaling (always true for constructed codes).
  bool generator_consistent() const;

 private:
  GrsCode(FieldPtr F, size_t k, EvaluationSet points, ScalingVector scaling, Matrix G,
          Provenance provenance, bool verify_rank);
  FieldPtr F_;
  size_t k_;
  EvaluationSet points_;
  ScalingVector scaling_;
  Matrix G_;
  Provenance provenance_;
};

GrsCode make_code(FieldPtr F, size_t k, EvaluationSet points, ScalingVector scaling,
                  Provenance provenance = Provenance::object());

// pi_A(x) = prod_{a in A} (x - a); A must be all finite.
FieldElement pi_eval(const EvaluationSet& A, const FieldElement& x);
// delta_A(a) = prod_{a' in A, a' != a} (a - a'); a must belong to A.
FieldElement delta(const EvaluationSet& A, const FieldElement& a);

// Scaling u with GRS_k(A, v)^perp = GRS_{n-k}(A, u): u_i = (v_i * delta_A(a_i))^{-1}.
// Orthogonality of the two generators is verified before returning.
ScalingVector dual_scaling(const GrsCode& code);

std::vector<FieldElement> encode(const GrsCode& code, const std::vector<FieldElement>& message);
// Recovers the unique message consistent with the unerased coordinates
// (erasures are nullopt); at most n-k erasures.
std::vector<FieldElement> erasure_decode(const GrsCode& code,
                                         const std::vector<std::optional<FieldElement>>& word);

struct DistanceOptions {
  uint64_t max_words = 1ull << 22;  // bound on q^k for codeword enumeration
};
// Exact minimum distance by enumerating all q^k codewords (TooLarge beyond bound).
size_t min_distance_bruteforce(const GrsCode& code, const DistanceOptions& opts = {});
// Exact minimum distance as the smallest dependent column set of a parity
// check basis; feasible for short codes regardless of q^k.
size_t min_distance_support(const GrsCode& code, uint64_t max_subsets = 10'000'000);

enum class MdsMode { Auto, Exhaustive, Bruteforce, Sampled, Skip };

struct MdsOptions {
  MdsMode mode = MdsMode::Auto;
  uint64_t samples = 10'000;
  uint64_t seed = 0;
  uint64_t bruteforce_bound = 1ull << 22;   // q^k cap for codeword enumeration
  uint64_t exhaustive_bound = 100'000;      // C(n,k) cap for full minor scan
};

struct MdsReport {
  bool verdict = false;
  std::string mode;          // "bruteforce" | "exhaustive" | "sampled" | "skip"
  uint64_t tested = 0;       // minors examined or codewords enumerated
  uint64_t samples = 0;      // requested sample count (sampled mode)
  uint64_t seed = 0;
  std::optional<std::vector<size_t>> witness;  // singular column set, if found
};

// MDS certification: distance check when q^k is small, otherwise k x k minor
// scans (exhaustive under the C(n,k) bound, else seeded uniform sampling).
MdsReport mds_check(const GrsCode& code, const MdsOptions& opts = {});

}  // namespace grsdual
