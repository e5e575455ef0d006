// Exact multivariate polynomials with rational coefficients over a VarSpace.
//
// Canonical form: a term map keyed by exponent vectors under the graded
// lexicographic order (total degree first, ties broken by the canonical
// variable order), with no zero coefficients stored. Equality of canonical
// forms is plain map equality, and printing/parsing round-trips.
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "algkit/rational.hpp"
#include "algkit/variable.hpp"

namespace algkit {

// Dense exponent vector, one slot per variable of the space.
using Monomial = std::vector<unsigned>;

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() = default;  // zero over the empty space
  explicit Polynomial(VarSpace space) : space_(std::move(space)) {}

  static Polynomial constant(const VarSpace& space, Rational c);
  static Polynomial variable(const VarSpace& space, Variable v);
  static Polynomial zero(const VarSpace& space) { return Polynomial(space); }

  const VarSpace& space() const { return space_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of the constant term (zero if absent).
  Rational constant_value() const;

  int total_degree() const;  // 0 for the zero polynomial
  int degree_in_kind(VarKind kind) const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  Polynomial pow(unsigned e) const;

  // Exact partial derivative; v must belong to the space.
  Polynomial partial(Variable v) const;

  // Simultaneous substitution into `target`. Every binding value must live on
  // `target`; variables of this polynomial that are not bound must exist in
  // `target` (identity embedding), otherwise the substitution is rejected.
  Polynomial substitute(const std::map<Variable, Polynomial>& bindings,
                        const VarSpace& target) const;

  // Identity embedding into a larger space (all variables must carry over).
  Polynomial promoted_to(const VarSpace& target) const;

  // Canonical printing: terms descending in the monomial order, '-' folded
  // into coefficients, unit coefficients omitted except on the constant term,
  // zero prints "0".
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  void require_same_space(const Polynomial& o) const;

  VarSpace space_;
  TermMap terms_;
};

// Expression-grammar error with a 0-based input position.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), pos(position) {}
  std::size_t pos;
};

// Recursive-descent parser for the expression grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | identifier | '(' expr ')'
// Identifiers are the declared coordinate names of `space`.
Polynomial parse_polynomial(std::string_view src, const VarSpace& space);

}  // namespace algkit
