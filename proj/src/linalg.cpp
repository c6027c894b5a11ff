#include "grsdual/linalg.hpp"

#include <algorithm>

namespace grsdual {

void Matrix::set(size_t r, size_t c, const FieldElement& v) {
  if (&v.field() != F_) raise(Errc::ContextMismatch, "matrix entry from different context");
  at(r, c) = v.index();
}

bool Matrix::operator==(const Matrix& o) const {
  return F_ == o.F_ && rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
}

bool Matrix::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](uint32_t v) { return v == 0; });
}

Matrix Matrix::transposed() const {
  Matrix t(F_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (F_ != o.F_) raise(Errc::ContextMismatch, "matrix product across contexts");
  if (cols_ != o.rows_) raise(Errc::BadDimension, "inner dimensions disagree");
  Matrix r(F_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t l = 0; l < cols_; ++l) {
      uint32_t a = at(i, l);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        uint32_t t = F_->mul_idx(a, o.at(l, j));
        if (t) r.at(i, j) = F_->add_idx(r.at(i, j), t);
      }
    }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (F_ != o.F_ || cols_ != o.cols_) raise(Errc::BadDimension, "vstack shape mismatch");
  Matrix r(F_, rows_ + o.rows_, cols_);
  std::copy(d_.begin(), d_.end(), r.d_.begin());
  std::copy(o.d_.begin(), o.d_.end(), r.d_.begin() + d_.size());
  return r;
}

Matrix Matrix::columns(const std::vector<size_t>& idx) const {
  Matrix r(F_, rows_, idx.size());
  for (size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) raise(Errc::BadDimension, "column index out of range");
    for (size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  }
  return r;
}

size_t rank_log_inplace(uint32_t* M, size_t rows, size_t cols,
                        const FieldContext::LogView& lv) {
  constexpr uint32_t kZero = FieldContext::LogView::kZero;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rows;
    for (size_t r = rank; r < rows; ++r)
      if (M[r * cols + col] != kZero) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(M + piv * cols + col, M + piv * cols + cols, M + rank * cols + col);
    const uint32_t* prow = M + rank * cols;
    uint32_t plog = prow[col];
    for (size_t r = rank + 1; r < rows; ++r) {
      uint32_t* row = M + r * cols;
      uint32_t e = row[col];
      if (e == kZero) continue;
      // row += (-e / pivot) * pivot_row, all in log domain
      uint32_t f = e >= plog ? e - plog : e + lv.qm1 - plog;
      f += lv.half;
      if (f >= lv.qm1) f -= lv.qm1;
      row[col] = kZero;
      for (size_t c = col + 1; c < cols; ++c) {
        uint32_t pe = prow[c];
        if (pe == kZero) continue;
        uint32_t t = f + pe;
        if (t >= lv.qm1) t -= lv.qm1;
        row[c] = lv.add(row[c], t);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {
std::vector<uint32_t> to_log(const Matrix& M) {
  std::vector<uint32_t> out(M.rows() * M.cols());
  const FieldContext& F = M.field();
  const auto& d = M.data();
  for (size_t i = 0; i < d.size(); ++i) out[i] = F.log_of_idx(d[i]);
  return out;
}

// Reduced row echelon form in index domain; returns pivot column list.
std::vector<size_t> rref_inplace(Matrix& M) {
  const FieldContext& F = M.field();
  std::vector<size_t> pivots;
  size_t lead = 0;
  for (size_t col = 0; col < M.cols() && lead < M.rows(); ++col) {
    size_t piv = M.rows();
    for (size_t r = lead; r < M.rows(); ++r)
      if (M.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv == M.rows()) continue;
    if (piv != lead)
      for (size_t c = 0; c < M.cols(); ++c) std::swap(M.at(piv, c), M.at(lead, c));
    uint32_t inv = F.inv_idx(M.at(lead, col));
    for (size_t c = col; c < M.cols(); ++c) M.at(lead, c) = F.mul_idx(M.at(lead, c), inv);
    for (size_t r = 0; r < M.rows(); ++r) {
      if (r == lead) continue;
      uint32_t f = M.at(r, col);
      if (f == 0) continue;
      for (size_t c = col; c < M.cols(); ++c)
        M.at(r, c) = F.sub_idx(M.at(r, c), F.mul_idx(f, M.at(lead, c)));
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}
}  // namespace

size_t Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  auto buf = to_log(*this);
  return rank_log_inplace(buf.data(), rows_, cols_, F_->log_view());
}

bool Matrix::nonsingular() const {
  if (rows_ != cols_) raise(Errc::BadDimension, "nonsingular check on non-square matrix");
  return rank() == rows_;
}

Matrix Matrix::right_kernel() const {
  Matrix R = *this;
  std::vector<size_t> pivots = rref_inplace(R);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;
  Matrix K(F_, cols_ - pivots.size(), cols_);
  size_t kr = 0;
  for (size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    K.at(kr, fc) = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      K.at(kr, pivots[pr]) = F_->neg_idx(R.at(pr, fc));
    ++kr;
  }
  return K;
}

std::optional<std::vector<uint32_t>> Matrix::solve(const std::vector<uint32_t>& rhs,
                                                   size_t* free_cols) const {
  if (rhs.size() != rows_) raise(Errc::BadDimension, "rhs length mismatch");
  Matrix aug(F_, rows_, cols_ + 1);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = rhs[r];
  }
  std::vector<size_t> pivots = rref_inplace(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = nonzero row
  if (free_cols) *free_cols = cols_ - pivots.size();
  std::vector<uint32_t> x(cols_, 0);
  for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(pr, cols_);
  return x;
}

Matrix gram(const Matrix& G) { return G.mul(G.transposed()); }

bool row_space_equal(const Matrix& A, const Matrix& B) {
  if (A.ctx() != B.ctx() || A.cols() != B.cols()) return false;
  size_t ra = A.rank(), rb = B.rank();
  if (ra != rb) return false;
  return A.vstack(B).rank() == ra;
}

}  // namespace grsdual
