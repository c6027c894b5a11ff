#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grsdual/field.hpp"

namespace grsdual {

// Dense row-major matrix over a fixed field context. Entries are stored as
// element indices; the hot elimination paths convert to discrete logs and
// resolve additions through the Zech table.
class Matrix {
 public:
  Matrix(const FieldContext* F, size_t rows, size_t cols)
      : F_(F), rows_(rows), cols_(cols), d_(rows * cols, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldContext& field() const { return *F_; }
  const FieldContext* ctx() const { return F_; }

  uint32_t& at(size_t r, size_t c) { return d_[r * cols_ + c]; }
  uint32_t at(size_t r, size_t c) const { return d_[r * cols_ + c]; }
  FieldElement get(size_t r, size_t c) const { return {F_, at(r, c)}; }
  void set(size_t r, size_t c, const FieldElement& v);
  const std::vector<uint32_t>& data() const { return d_; }

  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  Matrix transposed() const;
  Matrix mul(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix columns(const std::vector<size_t>& idx) const;

  size_t rank() const;
  bool nonsingular() const;  // square only
  // Basis of the right kernel {u : M u^T = 0}, one vector per row (RREF-derived).
  Matrix right_kernel() const;
  // Solves M x = rhs. Empty optional when inconsistent; under-determined
  // systems report rank via *free_cols when requested.
  std::optional<std::vector<uint32_t>> solve(const std::vector<uint32_t>& rhs,
                                             size_t* free_cols = nullptr) const;

 private:
  const FieldContext* F_;
  size_t rows_, cols_;
  std::vector<uint32_t> d_;
};

Matrix gram(const Matrix& G);  // G * G^T
bool row_space_equal(const Matrix& A, const Matrix& B);

// Rank of a matrix given in log-domain flat storage (kZero = zero entry);
// destroys the buffer. Shared by Matrix::rank and the minor-scan kernels.
size_t rank_log_inplace(uint32_t* M, size_t rows, size_t cols, const FieldContext::LogView& lv);

}  // namespace grsdual
