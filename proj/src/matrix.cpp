#include "adhm/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace adhm {

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw InputError("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::column(std::span<const Scalar> v) {
  Matrix m(v.size(), 1);
  for (std::size_t k = 0; k < v.size(); ++k) m(k, 0) = v[k];
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Scalar> Matrix::col(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw std::out_of_range("Matrix::set_block");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("Matrix +: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("Matrix -: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("Matrix *: dimension mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw InputError("Matrix::apply: dimension mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  return out;
}

Matrix Matrix::hcat(const std::vector<Matrix>& parts, std::size_t rows) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw InputError("Matrix::hcat: row mismatch");
    total += p.cols();
  }
  Matrix m(rows, total);
  std::size_t off = 0;
  for (const auto& p : parts) {
    m.set_block(0, off, p);
    off += p.cols();
  }
  return m;
}

Matrix Matrix::vcat(const std::vector<Matrix>& parts, std::size_t cols) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw InputError("Matrix::vcat: column mismatch");
    total += p.rows();
  }
  Matrix m(total, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    m.set_block(off, 0, p);
    off += p.rows();
  }
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Scalar trace(const Matrix& m) {
  if (!m.is_square()) throw InputError("trace: non-square matrix");
  Scalar t;
  for (std::size_t k = 0; k < m.rows(); ++k) t += m(k, k);
  return t;
}

namespace {

// Bareiss forward elimination in place. Returns the pivot columns; the sign
// of the row permutation is accumulated in `sign` when non-null.
std::vector<std::size_t> bareiss(Matrix& a, int* sign) {
  std::vector<std::size_t> pivots;
  Scalar prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      if (sign) *sign = -*sign;
    }
    const Scalar piv = a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const Scalar lead = a(i, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        a(i, j) = (piv * a(i, j) - lead * a(r, j)) / prev;
      }
      a(i, c) = Scalar();
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return bareiss(a, nullptr).size();
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw InputError("determinant: non-square matrix");
  if (m.rows() == 0) return 1;
  Matrix a = m;
  int sign = 1;
  auto piv = bareiss(a, &sign);
  if (piv.size() < m.rows()) return {};
  // With full rank every column is a pivot and the last pivot is the
  // determinant up to the permutation sign.
  Scalar d = a(m.rows() - 1, m.cols() - 1);
  return sign < 0 ? -d : d;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots_out) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivots_out) *pivots_out = pivots;
  return a.block(0, 0, r, a.cols());
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw InputError("inverse: non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug = Matrix::hcat({m, Matrix::identity(n)}, n);
  std::vector<std::size_t> piv;
  Matrix red = rref(aug, &piv);
  if (red.rows() < n || (n > 0 && piv[n - 1] != n - 1)) {
    throw std::domain_error("inverse: singular matrix");
  }
  return red.block(0, n, n, n);
}

Subspace Subspace::zero(std::size_t n) {
  Subspace s;
  s.ambient_ = n;
  s.basis_ = Matrix(0, n);
  return s;
}

Subspace Subspace::full(std::size_t n) { return row_span(Matrix::identity(n)); }

Subspace Subspace::row_span(const Matrix& m) {
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = rref(m, &s.pivots_);
  return s;
}

Subspace Subspace::column_span(const Matrix& m) {
  if (m.cols() == 0) return zero(m.rows());
  return row_span(m.transpose());
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw InputError("Subspace::contains: dimension mismatch");
  std::vector<Scalar> w(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    const Scalar f = w[pivots_[k]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_(k, j).is_zero()) w[j] -= f * basis_(k, j);
    }
  }
  for (const auto& s : w) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient_ != ambient_) throw InputError("Subspace::contains: ambient mismatch");
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (!contains(s.basis_.row(k))) return false;
  }
  return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw InputError("Subspace +: ambient mismatch");
  return row_span(Matrix::vcat({basis_, o.basis_}, ambient_));
}

Subspace Subspace::annihilator() const {
  // Rows y with basis * y = 0.
  return kernel(basis_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw InputError("Subspace::intersect: ambient mismatch");
  return (annihilator() + o.annihilator()).annihilator();
}

Subspace Subspace::image(const Matrix& a) const {
  if (a.cols() != ambient_) throw InputError("Subspace::image: dimension mismatch");
  return column_span(a * basis_columns());
}

Subspace Subspace::preimage(const Matrix& a) const {
  if (a.rows() != ambient_) throw InputError("Subspace::preimage: dimension mismatch");
  return kernel(annihilator().basis() * a);
}

Matrix Subspace::complement_columns() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  Matrix m(ambient_, ambient_ - dim());
  std::size_t c = 0;
  for (std::size_t k = 0; k < ambient_; ++k) {
    if (!is_pivot[k]) m(k, c++) = 1;
  }
  return m;
}

Subspace kernel(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix red = rref(m, &piv);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  Matrix vecs(n - piv.size(), n);
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    vecs(row, f) = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) vecs(row, piv[k]) = -red(k, f);
    ++row;
  }
  return Subspace::row_span(vecs);
}

Subspace closure(const Subspace& generators, std::span<const Matrix> operators) {
  const std::size_t n = generators.ambient_dim();
  for (const auto& op : operators) {
    if (op.rows() != n || op.cols() != n) throw InputError("closure: operator dimension mismatch");
  }
  Subspace cur = generators;
  while (!cur.is_full()) {
    std::vector<Matrix> parts{cur.basis()};
    const Matrix cols = cur.basis_columns();
    for (const auto& op : operators) parts.push_back((op * cols).transpose());
    Subspace next = Subspace::row_span(Matrix::vcat(parts, n));
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return cur;
}

Subspace invariant_core(const Subspace& s, std::span<const Matrix> operators) {
  const std::size_t n = s.ambient_dim();
  for (const auto& op : operators) {
    if (op.rows() != n || op.cols() != n) {
      throw InputError("invariant_core: operator dimension mismatch");
    }
  }
  Subspace cur = s;
  while (!cur.is_zero()) {
    Subspace next = cur;
    for (const auto& op : operators) next = next.intersect(cur.preimage(op));
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace adhm
