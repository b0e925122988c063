#include "adhm/poly_matrix.hpp"

#include <algorithm>

namespace adhm {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarList vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)) {
  data_.assign(rows * cols, Poly(vars_));
}

PolyMatrix PolyMatrix::constant(const Matrix& m, const VarList& vars) {
  PolyMatrix p(m.rows(), m.cols(), vars);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) p(r, c) = Poly(vars, m(r, c));
  return p;
}

PolyMatrix PolyMatrix::linear(std::span<const Matrix> coeffs, const VarList& vars) {
  if (coeffs.size() != vars->size()) throw InputError("PolyMatrix::linear: arity mismatch");
  const std::size_t rows = coeffs.empty() ? 0 : coeffs[0].rows();
  const std::size_t cols = coeffs.empty() ? 0 : coeffs[0].cols();
  PolyMatrix p(rows, cols, vars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].rows() != rows || coeffs[k].cols() != cols) {
      throw InputError("PolyMatrix::linear: coefficient shape mismatch");
    }
    Monomial m(vars->size(), 0);
    m[k] = 1;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) p(r, c).add_term(m, coeffs[k](r, c));
  }
  return p;
}

PolyMatrix PolyMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<Poly> entries) {
  if (entries.size() != rows * cols) throw InputError("PolyMatrix: entry count mismatch");
  VarList vars = entries.empty() ? vars_p1() : entries.front().vars();
  PolyMatrix p(rows, cols, vars);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    p.data_[k] = Poly(vars) + entries[k];  // lifts bare constants
  }
  return p;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_homogeneous(int degree) const {
  return std::all_of(data_.begin(), data_.end(),
                     [&](const Poly& p) { return p.is_zero() || p.is_homogeneous(degree); });
}

Matrix PolyMatrix::coefficient(const Monomial& m) const {
  Matrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).coeff(m);
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, vars_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("PolyMatrix::block");
  PolyMatrix b(nr, nc, vars_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

PolyMatrix PolyMatrix::hcat(const std::vector<PolyMatrix>& parts, std::size_t rows,
                            const VarList& vars) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw InputError("PolyMatrix::hcat: row mismatch");
    total += p.cols();
  }
  PolyMatrix m(rows, total, vars);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) m(r, off + c) = p(r, c);
    off += p.cols();
  }
  return m;
}

PolyMatrix PolyMatrix::vcat(const std::vector<PolyMatrix>& parts, std::size_t cols,
                            const VarList& vars) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw InputError("PolyMatrix::vcat: column mismatch");
    total += p.rows();
  }
  PolyMatrix m(total, cols, vars);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(off + r, c) = p(r, c);
    off += p.rows();
  }
  return m;
}

Matrix PolyMatrix::evaluate(std::span<const Scalar> point) const {
  Matrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).evaluate(point);
  return out;
}

PolyMatrix PolyMatrix::substitute(std::span<const Poly> images) const {
  VarList target = images.empty() ? vars_ : images.front().vars();
  PolyMatrix out(rows_, cols_, target);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].substitute(images);
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("PolyMatrix +: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("PolyMatrix -: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("PolyMatrix *: dimension mismatch");
  PolyMatrix p(a.rows_, b.cols_, a.vars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) p(i, j) += a(i, k) * b(k, j);
      }
    }
  return p;
}

PolyMatrix operator*(const Matrix& a, const PolyMatrix& b) {
  return PolyMatrix::constant(a, b.vars()) * b;
}

PolyMatrix operator*(const PolyMatrix& a, const Matrix& b) {
  return a * PolyMatrix::constant(b, a.vars());
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix m = *this;
  for (auto& p : m.data_) p = -p;
  return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

Poly det_rec(const PolyMatrix& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
  if (rows.empty()) return Poly(m.vars(), 1);
  if (rows.size() == 1) return m(rows[0], cols[0]);
  const std::size_t r0 = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  Poly sum(m.vars());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& e = m(r0, cols[k]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(k));
    Poly term = e * det_rec(m, sub_rows, sub_cols);
    if (k % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant: non-square matrix");
  std::vector<std::size_t> rows(m.rows());
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k] = cols[k] = k;
  return det_rec(m, rows, cols);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Poly> minors(const PolyMatrix& m, std::size_t size) {
  if (size > std::min(m.rows(), m.cols())) throw InputError("minors: size out of range");
  std::vector<Poly> out;
  for (auto rs : subsets(m.rows(), size)) {
    for (auto cs : subsets(m.cols(), size)) out.push_back(det_rec(m, rs, cs));
  }
  return out;
}

}  // namespace adhm
