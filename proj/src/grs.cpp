#include "grsdual/grs.hpp"

#include <algorithm>
#include <unordered_set>

#include "grsdual/kernels.hpp"

namespace grsdual {

EvaluationSet::EvaluationSet(FieldPtr F, std::vector<EvalPoint> pts)
    : F_(std::move(F)), pts_(std::move(pts)) {
  if (!F_) raise(Errc::ContextMismatch, "evaluation set needs a field context");
  if (pts_.empty()) raise(Errc::BadDimension, "evaluation set is empty");
  bool seen_inf = false;
  std::unordered_set<uint32_t> seen;
  for (const auto& pt : pts_) {
    if (pt.is_infinity()) {
      if (seen_inf) raise(Errc::DuplicatePoints, "infinity listed twice");
      seen_inf = true;
      continue;
    }
    if (&pt.value().field() != F_.get())
      raise(Errc::ContextMismatch, "evaluation point from different context");
    if (!seen.insert(pt.value().index()).second)
      raise(Errc::DuplicatePoints, "repeated evaluation point " + pt.value().str());
  }
}

EvaluationSet EvaluationSet::finite(FieldPtr F, const std::vector<FieldElement>& vals) {
  std::vector<EvalPoint> pts;
  pts.reserve(vals.size());
  for (const auto& v : vals) pts.push_back(EvalPoint::finite(v));
  return {std::move(F), std::move(pts)};
}

bool EvaluationSet::has_infinity() const {
  return std::any_of(pts_.begin(), pts_.end(), [](const EvalPoint& p) { return p.is_infinity(); });
}

bool EvaluationSet::contains(const EvalPoint& p) const {
  return std::find(pts_.begin(), pts_.end(), p) != pts_.end();
}

EvaluationSet EvaluationSet::with_appended(const EvalPoint& p) const {
  auto pts = pts_;
  pts.push_back(p);
  return {F_, std::move(pts)};
}

ScalingVector::ScalingVector(FieldPtr F, std::vector<FieldElement> v)
    : F_(std::move(F)), v_(std::move(v)) {
  if (!F_) raise(Errc::ContextMismatch, "scaling vector needs a field context");
  for (size_t i = 0; i < v_.size(); ++i) {
    if (&v_[i].field() != F_.get())
      raise(Errc::ContextMismatch, "scaling entry from different context");
    if (v_[i].is_zero())
      raise(Errc::ZeroScaling, "scaling coordinate " + std::to_string(i) + " is zero");
  }
}

std::vector<FieldElement> eval_column(const FieldContext& F, size_t k, const EvalPoint& pt) {
  if (k < 1) raise(Errc::BadDimension, "column height must be at least 1");
  std::vector<FieldElement> col(k, F.zero());
  if (pt.is_infinity()) {
    col[k - 1] = F.one();
    return col;
  }
  const FieldElement& a = pt.value();
  if (&a.field() != &F) raise(Errc::ContextMismatch, "point from different context");
  FieldElement pw = F.one();
  for (size_t i = 0; i < k; ++i) {
    col[i] = pw;
    pw = pw * a;
  }
  return col;
}

namespace {
Matrix build_generator(const FieldContext& F, size_t k, const EvaluationSet& pts,
                       const ScalingVector& v) {
  Matrix G(&F, k, pts.size());
  for (size_t j = 0; j < pts.size(); ++j) {
    auto col = eval_column(F, k, pts[j]);
    for (size_t i = 0; i < k; ++i) G.at(i, j) = F.mul_idx(v[j].index(), col[i].index());
  }
  return G;
}
}  // namespace

GrsCode::GrsCode(FieldPtr F, size_t k, EvaluationSet points, ScalingVector scaling,
                 Matrix G, Provenance provenance, bool verify_rank)
    : F_(std::move(F)),
      k_(k),
      points_(std::move(points)),
      scaling_(std::move(scaling)),
      G_(std::move(G)),
      provenance_(std::move(provenance)) {
  size_t n = points_.size();
  if (n < 2) raise(Errc::BadDimension, "length must be at least 2");
  if (k_ < 1 || k_ > n) raise(Errc::BadDimension, "dimension must satisfy 1 <= k <= n");
  if (scaling_.size() != n) raise(Errc::LengthMismatch, "scaling length differs from point count");
  if (points_.field().get() != F_.get() || scaling_.field().get() != F_.get())
    raise(Errc::ContextMismatch, "points and scaling must share the code's context");
  if (G_.rows() != k_ || G_.cols() != n) raise(Errc::BadDimension, "generator shape mismatch");
  if (verify_rank && G_.rank() != k_)
    raise(Errc::InternalVerificationFailed, "generator rank below dimension");
}

GrsCode::GrsCode(FieldPtr F, size_t k, EvaluationSet points, ScalingVector scaling,
                 Provenance provenance)
    : GrsCode(F, k, points, scaling, build_generator(*F, k, points, scaling),
              std::move(provenance), true) {}

GrsCode GrsCode::with_generator(FieldPtr F, size_t k, EvaluationSet points,
                                ScalingVector scaling, Matrix generator, Provenance provenance) {
  return GrsCode(std::move(F), k, std::move(points), std::move(scaling), std::move(generator),
                 std::move(provenance), false);
}

bool GrsCode::generator_consistent() const {
  return G_ == build_generator(*F_, k_, points_, scaling_);
}

GrsCode make_code(FieldPtr F, size_t k, EvaluationSet points, ScalingVector scaling,
                  Provenance provenance) {
  return GrsCode(std::move(F), k, std::move(points), std::move(scaling), std::move(provenance));
}

FieldElement pi_eval(const EvaluationSet& A, const FieldElement& x) {
  const FieldContext& F = *A.field();
  if (&x.field() != &F) raise(Errc::ContextMismatch, "argument from different context");
  FieldElement r = F.one();
  for (const auto& pt : A) {
    if (pt.is_infinity()) raise(Errc::InfinityInSet, "vanishing polynomial needs finite points");
    r = r * (x - pt.value());
  }
  return r;
}

FieldElement delta(const EvaluationSet& A, const FieldElement& a) {
  const FieldContext& F = *A.field();
  if (&a.field() != &F) raise(Errc::ContextMismatch, "argument from different context");
  bool member = false;
  FieldElement r = F.one();
  for (const auto& pt : A) {
    if (pt.is_infinity()) raise(Errc::InfinityInSet, "delta needs finite points");
    if (pt.value() == a) {
      member = true;
      continue;
    }
    r = r * (a - pt.value());
  }
  if (!member) raise(Errc::NotAMember, a.str() + " is not an evaluation point");
  return r;
}

ScalingVector dual_scaling(const GrsCode& code) {
  if (code.points().has_infinity())
    raise(Errc::InfinityUnsupported, "dual scaling requires all-finite points");
  const FieldContext& F = *code.field();
  std::vector<FieldElement> u;
  u.reserve(code.n());
  for (size_t i = 0; i < code.n(); ++i) {
    FieldElement d = delta(code.points(), code.points()[i].value());
    u.push_back((code.scaling()[i] * d).inv());
  }
  ScalingVector sv(code.field(), std::move(u));
  if (code.k() < code.n()) {
    Matrix D = build_generator(F, code.n() - code.k(), code.points(), sv);
    if (!code.generator().mul(D.transposed()).is_zero())
      raise(Errc::InternalVerificationFailed, "dual scaling fails orthogonality");
  }
  return sv;
}

std::vector<FieldElement> encode(const GrsCode& code, const std::vector<FieldElement>& message) {
  const FieldContext& F = *code.field();
  if (message.size() != code.k()) raise(Errc::LengthMismatch, "message length must equal k");
  for (const auto& m : message)
    if (&m.field() != &F) raise(Errc::ContextMismatch, "message entry from different context");
  std::vector<FieldElement> word(code.n(), F.zero());
  const Matrix& G = code.generator();
  for (size_t j = 0; j < code.n(); ++j) {
    uint32_t acc = 0;
    for (size_t i = 0; i < code.k(); ++i)
      acc = F.add_idx(acc, F.mul_idx(message[i].index(), G.at(i, j)));
    word[j] = {&F, acc};
  }
  return word;
}

std::vector<FieldElement> erasure_decode(const GrsCode& code,
                                         const std::vector<std::optional<FieldElement>>& word) {
  const FieldContext& F = *code.field();
  if (word.size() != code.n()) raise(Errc::LengthMismatch, "word length must equal n");
  std::vector<size_t> known;
  for (size_t j = 0; j < word.size(); ++j) {
    if (!word[j]) continue;
    if (&word[j]->field() != &F) raise(Errc::ContextMismatch, "word entry from different context");
    known.push_back(j);
  }
  size_t erased = word.size() - known.size();
  if (erased > code.n() - code.k())
    raise(Errc::TooManyErasures, std::to_string(erased) + " erasures exceed n-k");
  // message * G restricted to known columns = known values
  Matrix A(&F, known.size(), code.k());
  std::vector<uint32_t> rhs(known.size());
  for (size_t r = 0; r < known.size(); ++r) {
    for (size_t i = 0; i < code.k(); ++i) A.at(r, i) = code.generator().at(i, known[r]);
    rhs[r] = word[known[r]]->index();
  }
  size_t free_cols = 0;
  auto sol = A.solve(rhs, &free_cols);
  if (!sol) raise(Errc::InconsistentWord, "known coordinates lie outside the code");
  if (free_cols > 0)
    raise(Errc::TooManyErasures, "known coordinates do not determine the codeword");
  std::vector<FieldElement> msg;
  msg.reserve(code.k());
  for (uint32_t idx : *sol) msg.push_back({&F, idx});
  return msg;
}

size_t min_distance_bruteforce(const GrsCode& code, const DistanceOptions& opts) {
  uint64_t words = kernels::pow_capped(code.field()->q(), code.k(), opts.max_words);
  if (words > opts.max_words)
    raise(Errc::TooLarge, "q^k exceeds the enumeration bound " + std::to_string(opts.max_words));
  return kernels::min_weight_parallel(code.generator());
}

size_t min_distance_support(const GrsCode& code, uint64_t max_subsets) {
  const Matrix& G = code.generator();
  Matrix H = G.right_kernel();
  size_t n = G.cols(), hr = H.rows();
  auto lv = code.field()->log_view();
  std::vector<uint32_t> Hlog(hr * n);
  for (size_t i = 0; i < hr; ++i)
    for (size_t j = 0; j < n; ++j) Hlog[i * n + j] = code.field()->log_of_idx(H.at(i, j));
  uint64_t budget = 0;
  for (size_t s = 1; s <= n; ++s) {
    if (s > hr) return s;  // more columns than parity rows: always dependent
    budget += kernels::binomial_capped(n, s, max_subsets);
    if (budget > max_subsets) raise(Errc::TooLarge, "support search beyond subset budget");
    std::vector<size_t> comb(s);
    for (size_t i = 0; i < s; ++i) comb[i] = i;
    std::vector<uint32_t> buf(hr * s);
    auto advance = [&]() {
      for (size_t i = s; i-- > 0;) {
        if (comb[i] < n - s + i) {
          ++comb[i];
          for (size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    do {
      for (size_t i = 0; i < hr; ++i)
        for (size_t j = 0; j < s; ++j) buf[i * s + j] = Hlog[i * n + comb[j]];
      if (rank_log_inplace(buf.data(), hr, s, lv) < s) return s;
    } while (advance());
  }
  raise(Errc::InternalVerificationFailed, "no dependent column set found");
}

MdsReport mds_check(const GrsCode& code, const MdsOptions& opts) {
  const size_t n = code.n(), k = code.k();
  uint64_t q = code.field()->q();
  MdsMode mode = opts.mode;
  if (mode == MdsMode::Auto) {
    if (kernels::pow_capped(q, k, opts.bruteforce_bound) <= opts.bruteforce_bound)
      mode = MdsMode::Bruteforce;
    else if (kernels::binomial_capped(n, k, opts.exhaustive_bound) <= opts.exhaustive_bound)
      mode = MdsMode::Exhaustive;
    else
      mode = MdsMode::Sampled;
  }
  MdsReport rep;
  rep.seed = opts.seed;
  switch (mode) {
    case MdsMode::Skip:
      rep.mode = "skip";
      rep.verdict = true;
      return rep;
    case MdsMode::Bruteforce: {
      rep.mode = "bruteforce";
      DistanceOptions dopts;
      dopts.max_words = opts.bruteforce_bound;
      size_t d = min_distance_bruteforce(code, dopts);
      rep.tested = kernels::pow_capped(q, k, opts.bruteforce_bound);
      rep.verdict = d == n - k + 1;
      return rep;
    }
    case MdsMode::Exhaustive: {
      rep.mode = "exhaustive";
      auto scan = kernels::scan_minors_exhaustive_parallel(code.generator());
      rep.tested = scan.tested;
      rep.verdict = scan.singular == 0;
      rep.witness = scan.witness;
      return rep;
    }
    case MdsMode::Sampled:
    default: {
      rep.mode = "sampled";
      uint64_t total = kernels::binomial_capped(n, k, opts.samples);
      uint64_t samples = std::min<uint64_t>(opts.samples, total);
      rep.samples = samples;
      auto scan = kernels::scan_minors_sampled_parallel(code.generator(), samples, opts.seed);
      rep.tested = scan.tested;
      rep.verdict = scan.singular == 0;
      rep.witness = scan.witness;
      return rep;
    }
  }
}

}  // namespace grsdual
