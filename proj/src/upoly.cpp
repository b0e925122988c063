#include "adhm/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace adhm::upoly {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly scale(const UPoly& a, const Scalar& s) {
  UPoly r = a;
  for (auto& c : r) c *= s;
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("upoly::divmod: division by zero polynomial");
  UPoly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {{}, rem};
  UPoly quo(rem.size() - b.size() + 1);
  const Scalar lead_inv = b.back().inverse();
  while (rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Scalar f = rem.back() * lead_inv;
    quo[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) rem[shift + k] -= f * b[k];
    rem.pop_back();  // leading term cancels exactly
    trim(rem);
  }
  trim(quo);
  return {quo, rem};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::domain_error("upoly::exact_div: nonzero remainder");
  return q;
}

UPoly monic(const UPoly& p) {
  if (p.empty()) return {};
  return scale(p, p.back().inverse());
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

UPoly derivative(const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * Scalar(static_cast<long>(k));
  trim(d);
  return d;
}

UPoly squarefree(const UPoly& p) {
  if (p.empty()) return {};
  return monic(exact_div(p, gcd(p, derivative(p))));
}

Scalar evaluate(const UPoly& p, const Scalar& t) {
  Scalar v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
  return v;
}

UPoly from_poly(const Poly& p) {
  if (p.nvars() > 1) throw InputError("univariate polynomial expected");
  UPoly out;
  for (const auto& [m, c] : p.terms()) {
    const std::size_t e = m.empty() ? 0 : m[0];
    if (out.size() <= e) out.resize(e + 1);
    out[e] = c;
  }
  trim(out);
  return out;
}

Poly to_poly(const UPoly& p, const VarList& vars) {
  if (vars->size() != 1) throw InputError("univariate variable list expected");
  Poly out(vars);
  for (std::size_t k = 0; k < p.size(); ++k) out.add_term(Monomial{static_cast<unsigned>(k)}, p[k]);
  return out;
}

namespace {

using RPoly = std::vector<Rational>;

int sign_at(const RPoly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return sgn(v);
}

RPoly rem(const RPoly& a, const RPoly& b) {
  RPoly r = a;
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t shift = r.size() - b.size();
    const Rational f = r.back() / b.back();
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= f * b[k];
    r.pop_back();
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
  }
  return r;
}

std::vector<RPoly> sturm_chain(const RPoly& p) {
  std::vector<RPoly> chain{p};
  RPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
  while (!d.empty()) {
    chain.push_back(d);
    RPoly r = rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    d = std::move(r);
  }
  return chain;
}

int variations(const std::vector<RPoly>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Integer roots of a squarefree polynomial inside (lo, hi), lo and hi being
// half-integers, hence never roots themselves.
void integer_roots(const std::vector<RPoly>& chain, const Rational& lo, const Rational& hi,
                   std::vector<mpz_class>& out) {
  if (variations(chain, lo) - variations(chain, hi) == 0) return;
  Rational width = hi - lo;
  if (width <= 1) {
    Rational cand = lo + Rational(1, 2);
    cand.canonicalize();
    if (sign_at(chain.front(), cand) == 0) out.push_back(cand.get_num());
    return;
  }
  const Rational sum = lo + hi;  // an integer
  const mpz_class mid_int = mpz_class(sum.get_num()) / 2;
  Rational mid = Rational(mid_int) + Rational(1, 2);
  mid.canonicalize();
  if (mid >= hi) mid -= 1;
  integer_roots(chain, lo, mid, out);
  integer_roots(chain, mid, hi, out);
}

std::vector<Rational> rational_roots_of(const RPoly& squarefree_rational) {
  const RPoly& p = squarefree_rational;
  if (p.size() <= 1) return {};
  // Clear denominators.
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.emplace_back(c.get_num() * (l / c.get_den()));
  const std::size_t d = ints.size() - 1;
  const mpz_class lead = ints[d];
  // u = lead * t turns the polynomial into a monic one with integer
  // coefficients, whose rational roots are integers.
  RPoly q(d + 1);
  mpz_class pw = 1;  // lead^(d-1-k), built from k = d-1 downwards
  q[d] = 1;
  for (std::size_t kk = d; kk-- > 0;) {
    q[kk] = Rational(mpz_class(ints[kk] * pw));
    pw *= lead;
  }
  mpz_class bound = 0;
  for (std::size_t k = 0; k < d; ++k) {
    mpz_class a = abs(q[k].get_num());
    if (a > bound) bound = a;
  }
  bound += 1;
  Rational lo = Rational(-bound) - Rational(1, 2);
  Rational hi = Rational(bound) + Rational(1, 2);
  lo.canonicalize();
  hi.canonicalize();
  std::vector<mpz_class> us;
  integer_roots(sturm_chain(q), lo, hi, us);
  std::vector<Rational> roots;
  for (const auto& u : us) {
    Rational r(u, lead);
    r.canonicalize();
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

RootSplit split_rational_roots(const UPoly& p) {
  if (p.empty()) throw InputError("split_rational_roots: zero polynomial");
  RootSplit out;
  out.squarefree = squarefree(p);
  // Rational roots of a Q(i)-polynomial are the common rational roots of its
  // real and imaginary parts.
  UPoly re_part;
  UPoly im_part;
  for (const auto& c : out.squarefree) {
    re_part.emplace_back(c.re());
    im_part.emplace_back(c.im());
  }
  trim(re_part);
  trim(im_part);
  UPoly real_factor = gcd(re_part, im_part);
  RPoly rp;
  for (const auto& c : real_factor) rp.push_back(c.re());
  out.roots = rational_roots_of(rp);
  out.residual = out.squarefree;
  for (const auto& r : out.roots) {
    out.residual = exact_div(out.residual, UPoly{Scalar(-r), Scalar(1)});
  }
  out.residual = monic(out.residual);
  return out;
}

UMatrix UMatrix::pencil(const Matrix& a0, const Matrix& a1) {
  if (a0.rows() != a1.rows() || a0.cols() != a1.cols()) {
    throw InputError("UMatrix::pencil: dimension mismatch");
  }
  UMatrix m(a0.rows(), a0.cols());
  for (std::size_t r = 0; r < a0.rows(); ++r)
    for (std::size_t c = 0; c < a0.cols(); ++c) {
      UPoly p{a0(r, c), a1(r, c)};
      trim(p);
      m(r, c) = std::move(p);
    }
  return m;
}

UMatrix UMatrix::from_poly_entries(std::size_t rows, std::size_t cols,
                                   const std::vector<Poly>& entries) {
  if (entries.size() != rows * cols) throw InputError("UMatrix: entry count mismatch");
  UMatrix m(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = from_poly(entries[k]);
  return m;
}

UMatrix UMatrix::transpose() const {
  UMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix UMatrix::evaluate(const Scalar& t) const {
  Matrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = upoly::evaluate((*this)(r, c), t);
  return m;
}

UMatrix operator*(const UMatrix& a, const UMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("UMatrix *: dimension mismatch");
  UMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).empty()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).empty()) p(i, j) = add(p(i, j), mul(a(i, k), b(k, j)));
      }
    }
  return p;
}

UMatrix UMatrix::hcat(const std::vector<UMatrix>& parts, std::size_t rows) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw InputError("UMatrix::hcat: row mismatch");
    total += p.cols();
  }
  UMatrix m(rows, total);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) m(r, off + c) = p(r, c);
    off += p.cols();
  }
  return m;
}

UMatrix column_echelon(const UMatrix& input) {
  UMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, a), m(r, b));
  };
  std::size_t p = 0;
  for (std::size_t k = 0; k < rows && p < cols; ++k) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = p; j < cols; ++j) {
        if (m(k, j).empty()) continue;
        if (best == cols || degree(m(k, j)) < degree(m(k, best))) best = j;
      }
      if (best == cols) break;  // no pivot in this row
      if (best != p) swap_cols(best, p);
      bool cleared = true;
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (m(k, j).empty()) continue;
        UPoly q = divmod(m(k, j), m(k, p)).first;
        for (std::size_t r = k; r < rows; ++r) {
          if (!m(r, p).empty()) m(r, j) = sub(m(r, j), mul(q, m(r, p)));
        }
        if (!m(k, j).empty()) cleared = false;
      }
      if (cleared) {
        ++p;
        break;
      }
    }
  }
  UMatrix out(rows, p);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < p; ++c) out(r, c) = std::move(m(r, c));
  return out;
}

UPoly maximal_minor_gcd(const UMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {Scalar(1)};
  UMatrix e = column_echelon(m.rows() <= m.cols() ? m : m.transpose());
  if (e.cols() < e.rows()) return {};
  UPoly d{Scalar(1)};
  for (std::size_t k = 0; k < e.rows(); ++k) d = mul(d, e(k, k));
  return monic(d);
}

}  // namespace adhm::upoly
