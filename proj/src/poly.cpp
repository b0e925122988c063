#include "adhm/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "adhm/upoly.hpp"

namespace adhm {

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

const VarList& vars_p1() {
  static const VarList v = make_vars({"x0", "x1"});
  return v;
}

const VarList& vars_p3() {
  static const VarList v = make_vars({"x0", "x1", "x2", "x3"});
  return v;
}

const VarList& vars_t() {
  static const VarList v = make_vars({"t"});
  return v;
}

namespace {

const VarList& no_vars() {
  static const VarList v = make_vars({});
  return v;
}

unsigned degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

bool same_vars(const VarList& a, const VarList& b) { return a == b || *a == *b; }

// Lifts a constant without variables into the ring of `vars`.
Poly lift(const Poly& p, const VarList& vars) {
  Poly out(vars);
  if (!p.is_zero()) out.add_term(Monomial(vars->size(), 0), p.constant_term());
  return out;
}

}  // namespace

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = degree_of(a);
  unsigned db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly() : vars_(no_vars()) {}

Poly::Poly(VarList vars) : vars_(std::move(vars)) {}

Poly::Poly(VarList vars, const Scalar& constant) : vars_(std::move(vars)) {
  add_term(Monomial(vars_->size(), 0), constant);
}

Poly Poly::variable(const VarList& vars, std::size_t index) {
  if (index >= vars->size()) throw InputError("Poly::variable: index out of range");
  Monomial m(vars->size(), 0);
  m[index] = 1;
  Poly p(vars);
  p.add_term(m, 1);
  return p;
}

Poly Poly::variable(const VarList& vars, const std::string& name) {
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw InputError("Poly::variable: unknown variable '" + name + "'");
  return variable(vars, static_cast<std::size_t>(it - vars->begin()));
}

Poly Poly::linear(const VarList& vars, std::span<const Scalar> coeffs) {
  if (coeffs.size() != vars->size()) throw InputError("Poly::linear: arity mismatch");
  Poly p(vars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial m(vars->size(), 0);
    m[k] = 1;
    p.add_term(m, coeffs[k]);
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(degree_of(terms_.begin()->first));
}

bool Poly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return static_cast<int>(degree_of(t.first)) == degree;
  });
}

Scalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar Poly::constant_term() const { return coeff(Monomial(nvars(), 0)); }

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != nvars()) throw InputError("Poly::add_term: arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (!same_vars(vars_, o.vars_)) {
    if (o.nvars() == 0) return *this += lift(o, vars_);
    if (nvars() == 0) {
      *this = lift(*this, o.vars_);
      return *this += o;
    }
    throw InputError("Poly: variable lists differ");
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!same_vars(a.vars_, b.vars_)) {
    if (b.nvars() == 0) return a * lift(b, a.vars_);
    if (a.nvars() == 0) return lift(a, b.vars_) * b;
    throw InputError("Poly: variable lists differ");
  }
  Poly p(a.vars_);
  Monomial m(a.nvars());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      p.add_term(m, ca * cb);
    }
  }
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (same_vars(a.vars_, b.vars_)) return a.terms_ == b.terms_;
  // A bare constant equals the same constant in any ring.
  if (a.nvars() == 0 || b.nvars() == 0) {
    return a.is_constant() && b.is_constant() && a.constant_term() == b.constant_term();
  }
  return false;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars()) throw InputError("Poly::evaluate: arity mismatch");
  Scalar sum;
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (std::size_t k = 0; k < m.size(); ++k) {
      for (unsigned e = 0; e < m[k]; ++e) v *= point[k];
    }
    sum += v;
  }
  return sum;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != nvars()) throw InputError("Poly::substitute: arity mismatch");
  VarList target = images.empty() ? no_vars() : images.front().vars();
  for (const auto& img : images) {
    if (!same_vars(img.vars(), target)) throw InputError("Poly::substitute: mixed variable lists");
  }
  Poly out(target);
  for (const auto& [m, c] : terms_) {
    Poly term(target, c);
    for (std::size_t k = 0; k < m.size(); ++k) {
      for (unsigned e = 0; e < m[k]; ++e) term = term * images[k];
    }
    out += term;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += (*vars_)[k];
      if (m[k] > 1) mono += '^' + std::to_string(m[k]);
    }
    Scalar coef = c;
    bool negative = coef.is_rational() && sgn(coef.re()) < 0;
    if (negative) coef = -coef;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string cs = coef.to_string();
    if (!coef.is_rational()) cs = "(" + cs + ")";
    if (mono.empty()) {
      os << cs;
    } else if (coef.is_one()) {
      os << mono;
    } else {
      os << cs << '*' << mono;
    }
  }
  return os.str();
}

Poly gcd_univariate(std::span<const Poly> ps) {
  upoly::UPoly g;
  VarList vars = vars_t();
  for (const auto& p : ps) {
    if (p.nvars() > 1) throw InputError("gcd_univariate: multivariate input");
    if (p.nvars() == 1) vars = p.vars();
    g = upoly::gcd(g, upoly::from_poly(p));
  }
  return upoly::to_poly(upoly::monic(g), vars);
}

}  // namespace adhm
