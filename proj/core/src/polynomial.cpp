#include "algkit/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace algkit {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  // Equal total degree: smaller exponent on the earliest differing variable
  // means the smaller monomial (x1^2 > x1*x2 > x2^2).
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

Polynomial Polynomial::constant(const VarSpace& space, Rational c) {
  Polynomial p(space);
  if (!c.is_zero()) p.terms_.emplace(Monomial(space.dim(), 0u), std::move(c));
  return p;
}

Polynomial Polynomial::variable(const VarSpace& space, Variable v) {
  Polynomial p(space);
  Monomial m(space.dim(), 0u);
  m[space.offset(v)] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

Rational Polynomial::constant_value() const {
  auto it = terms_.find(Monomial(space_.dim(), 0u));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  const Monomial& m = terms_.rbegin()->first;  // grlex maximum has maximal degree
  return static_cast<int>(std::accumulate(m.begin(), m.end(), 0u));
}

int Polynomial::degree_in_kind(VarKind kind) const {
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (space_.variable_at(static_cast<int>(i)).kind == kind) d += static_cast<int>(m[i]);
    deg = std::max(deg, d);
  }
  return deg;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  if (m.size() != static_cast<std::size_t>(space_.dim()))
    throw std::invalid_argument("monomial length does not match the variable space");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_space(const Polynomial& o) const {
  if (space_ != o.space_)
    throw std::invalid_argument("variable-space mismatch between polynomial operands");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.require_same_space(b);
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  a.require_same_space(b);
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_space(b);
  Polynomial r(a.space_);
  Monomial prod(a.space_.dim(), 0u);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
      r.add_term(prod, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(space_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r(p.space_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : p.terms_) r.terms_.emplace(m, c * k);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(space_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::partial(Variable v) const {
  const int at = space_.offset(v);  // validates membership
  Polynomial r(space_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[at];
    if (e == 0) continue;
    Monomial d = m;
    d[at] = e - 1;
    r.add_term(d, c * Rational(static_cast<long>(e)));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& bindings,
                                  const VarSpace& target) const {
  for (const auto& [v, value] : bindings) {
    if (!space_.contains(v))
      throw std::invalid_argument("binding for variable not in the source space");
    if (value.space() != target)
      throw std::invalid_argument("substitution value is not over the target space");
  }
  // Images of the variables this polynomial actually uses.
  std::vector<const Polynomial*> bound(space_.dim(), nullptr);
  std::vector<Polynomial> identity(space_.dim(), Polynomial(target));
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0 || bound[i]) continue;
      Variable v = space_.variable_at(static_cast<int>(i));
      auto it = bindings.find(v);
      if (it != bindings.end()) {
        bound[i] = &it->second;
      } else {
        if (!target.contains(v))
          throw std::invalid_argument("variable " + space_.name(v) +
                                      " occurs but is neither bound nor in the target space");
        identity[i] = Polynomial::variable(target, v);
        bound[i] = &identity[i];
      }
    }
  }
  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * bound[i]->pow(m[i]);
    result += term;
  }
  return result;
}

Polynomial Polynomial::promoted_to(const VarSpace& target) const {
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial image(target.dim(), 0u);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Variable v = space_.variable_at(static_cast<int>(i));
      image[target.offset(v)] = m[i];  // offset() throws if v is absent
    }
    r.add_term(image, c);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? '-' : '+');
    }
    first = false;
    const Rational mag = c.abs();
    const bool is_const_term =
        std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
    bool printed_factor = false;
    if (!mag.is_one() || is_const_term) {
      out << mag.to_string();
      printed_factor = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed_factor) out << '*';
      out << space_.name(space_.variable_at(static_cast<int>(i)));
      if (m[i] > 1) out << '^' << m[i];
      printed_factor = true;
    }
  }
  return out.str();
}

}  // namespace algkit
