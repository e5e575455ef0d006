// Pseudo-/pre-/Lie algebroid structures given by structure functions c^k_ij
// and anchors d^a_i (left), s^a_i (right), all polynomial in the base
// coordinates, together with the fiber-level exterior algebra types that the
// Cartan/Schouten calculus acts on.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algkit/polynomial.hpp"

namespace algkit {

enum class Carrier { on_E, on_E_dual };

// Strictly increasing 1-based index tuple; the empty tuple keys degree 0.
using IndexTuple = std::vector<int>;

// Sorts a tuple, counting the permutation sign; returns 0 on a repeated index.
int normalize_tuple(IndexTuple& t);

class Section;

class Algebroid {
public:
  Algebroid(std::vector<std::string> base_coords, int rank, bool skew,
            Carrier carrier = Carrier::on_E);

  int base_dim() const { return m_; }
  int rank() const { return n_; }
  bool skew() const { return skew_; }
  Carrier carrier() const { return carrier_; }
  const VarSpace& base_space() const { return base_; }

  const Polynomial& c(int k, int i, int j) const { return c_[c_at(k, i, j)]; }
  const Polynomial& anchor_left(int a, int i) const { return dl_[m_at(a, i)]; }
  const Polynomial& anchor_right(int a, int i) const { return dr_[m_at(a, i)]; }

  // Raw setters; validate() reports inconsistencies, construction never hides them.
  void set_c(int k, int i, int j, Polynomial value);
  void set_anchor_left(int a, int i, Polynomial value);
  void set_anchor_right(int a, int i, Polynomial value);
  void set_anchor(int a, int i, const Polynomial& value);  // both sides

  // Adds value to c^k_ij and -value to c^k_ji (skew structures only).
  void add_bracket_term(int i, int j, int k, const Polynomial& value);

  friend bool operator==(const Algebroid& a, const Algebroid& b);

private:
  int c_at(int k, int i, int j) const;
  int m_at(int a, int i) const;

  int m_, n_;
  bool skew_;
  Carrier carrier_;
  VarSpace base_;
  std::vector<Polynomial> c_;        // n*n*n
  std::vector<Polynomial> dl_, dr_;  // m*n
};

class Section {
public:
  Section(const Algebroid& A, std::vector<Polynomial> components);
  static Section zero(const Algebroid& A);
  static Section basis(const Algebroid& A, int i);

  int rank() const { return static_cast<int>(comps_.size()); }
  const Polynomial& operator[](int i) const { return comps_[i - 1]; }  // 1-based
  Polynomial& operator[](int i) { return comps_[i - 1]; }
  const std::vector<Polynomial>& components() const { return comps_; }

  bool is_zero() const;
  Section operator+(const Section& o) const;
  Section operator-(const Section& o) const;
  Section operator-() const;
  Section scaled(const Polynomial& f) const;

  friend bool operator==(const Section& a, const Section& b) { return a.comps_ == b.comps_; }
  friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }

  // "2*e1+x1*e3"; the token is "e" on E, "e*" for form-side values.
  std::string to_string(const char* token = "e") const;

private:
  std::vector<Polynomial> comps_;
};

// Homogeneous element of the exterior algebra over the fiber (∧E or ∧E*),
// with base-polynomial components in skew normal form: only strictly
// increasing index tuples are stored and zero components are dropped.
template <class BasisTag>
class FiberElement {
public:
  using Components = std::map<IndexTuple, Polynomial>;

  FiberElement(VarSpace base, int rank, int degree)
      : base_(std::move(base)), rank_(rank), degree_(degree) {
    if (degree_ < 0) throw std::invalid_argument("negative degree");
  }

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const VarSpace& base_space() const { return base_; }
  const Components& components() const { return comps_; }

  bool is_zero() const { return comps_.empty(); }

  // Signed accumulate: the tuple may be unsorted; repeated indices vanish.
  void add_term(IndexTuple tuple, const Polynomial& coeff) {
    if (coeff.is_zero()) return;
    if (static_cast<int>(tuple.size()) != degree_)
      throw std::invalid_argument("tuple length does not match degree");
    for (int i : tuple)
      if (i < 1 || i > rank_) throw std::invalid_argument("basis index out of range");
    const int sign = normalize_tuple(tuple);
    if (sign == 0) return;
    Polynomial value = sign > 0 ? coeff : -coeff;
    auto [it, inserted] = comps_.emplace(std::move(tuple), std::move(value));
    if (!inserted) {
      it->second += (sign > 0 ? coeff : -coeff);
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  // Signed lookup for an arbitrary tuple (zero if a repeated index).
  Polynomial component(IndexTuple tuple) const {
    const int sign = normalize_tuple(tuple);
    if (sign == 0) return Polynomial(base_);
    auto it = comps_.find(tuple);
    if (it == comps_.end()) return Polynomial(base_);
    return sign > 0 ? it->second : -it->second;
  }

  FiberElement operator+(const FiberElement& o) const {
    require_compatible(o, true);
    FiberElement r = *this;
    for (const auto& [t, p] : o.comps_) r.add_term(t, p);
    return r;
  }
  FiberElement operator-(const FiberElement& o) const { return *this + (-o); }
  FiberElement operator-() const {
    FiberElement r(base_, rank_, degree_);
    for (const auto& [t, p] : comps_) r.comps_.emplace(t, -p);
    return r;
  }
  FiberElement scaled(const Polynomial& f) const {
    FiberElement r(base_, rank_, degree_);
    for (const auto& [t, p] : comps_) r.add_term(t, f * p);
    return r;
  }
  FiberElement scaled(const Rational& c) const {
    return scaled(Polynomial::constant(base_, c));
  }

  friend bool operator==(const FiberElement& a, const FiberElement& b) {
    return a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const FiberElement& a, const FiberElement& b) { return !(a == b); }

  std::string to_string() const;

private:
  void require_compatible(const FiberElement& o, bool same_degree) const {
    if (base_ != o.base_ || rank_ != o.rank_)
      throw std::invalid_argument("fiber elements over different algebroid contexts");
    if (same_degree && degree_ != o.degree_)
      throw std::invalid_argument("degree mismatch");
  }

  VarSpace base_;
  int rank_;
  int degree_;
  Components comps_;
};

struct MultivectorBasis {
  static constexpr const char* token = "e";
};
struct FormBasis {
  static constexpr const char* token = "e*";
};

using FiberMultivector = FiberElement<MultivectorBasis>;  // sections of ∧E
using FiberForm = FiberElement<FormBasis>;                // sections of ∧E*

// Element of Φ^1_1: fiber endomorphism with base-polynomial entries N^i_j
// (row i = output component, column j = input component).
class EndoTensor {
public:
  EndoTensor(VarSpace base, int rank);
  static EndoTensor identity(const Algebroid& A);
  static EndoTensor zero(const Algebroid& A);

  int rank() const { return n_; }
  const VarSpace& base_space() const { return base_; }
  const Polynomial& at(int i, int j) const { return m_[(i - 1) * n_ + (j - 1)]; }
  void set(int i, int j, Polynomial value);

  EndoTensor operator*(const EndoTensor& o) const;  // matrix product
  bool is_zero() const;

  friend bool operator==(const EndoTensor& a, const EndoTensor& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }

  std::string to_string() const;

private:
  VarSpace base_;
  int n_;
  std::vector<Polynomial> m_;
};

// --- algebroid operations ---------------------------------------------------

struct CheckReport {
  std::string name;
  bool pass = true;
  std::optional<std::string> witness;  // present on failure, or informational
  std::string notes;
};

struct ValidationReport {
  std::vector<CheckReport> checks;
  bool all_pass = true;
  bool is_pre_lie = false;
};

// Reports whether the skew flag matches c-antisymmetry and anchor equality.
ValidationReport validate(const Algebroid& A);

// [X,Y]^k = X^i Y^j c^k_ij + X^i d^a_i ∂Y^k/∂x^a − Y^j s^a_j ∂X^k/∂x^a.
Section bracket_sections(const Algebroid& A, const Section& X, const Section& Y);

enum class AnchorSide { left, right };

// α(X)(f) = X^i d^a_i ∂f/∂x^a (or s for the right anchor).
Polynomial anchor_apply(const Algebroid& A, const Section& X, const Polynomial& f,
                        AnchorSide side = AnchorSide::left);

// [[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y]; requires a skew structure.
Section jacobiator(const Algebroid& A, const Section& X, const Section& Y, const Section& Z);

struct LieCheck {
  bool is_lie = false;
  std::optional<std::array<int, 3>> witness_triple;  // 1-based basis indices
  std::optional<Section> witness_value;
};

// True iff A is skew and the jacobiator vanishes on all basis triples.
LieCheck is_lie(const Algebroid& A);

template <class Tag>
FiberElement<Tag> wedge(const FiberElement<Tag>& u, const FiberElement<Tag>& v);

FiberMultivector multivector_of(const Algebroid& A, const Section& X);
Section section_of(const Algebroid& A, const FiberMultivector& u);  // degree 1 only
FiberMultivector basis_multivector(const Algebroid& A, IndexTuple tuple);
FiberForm basis_form(const Algebroid& A, IndexTuple tuple);
FiberMultivector scalar_multivector(const Algebroid& A, Polynomial f);
FiberForm scalar_form(const Algebroid& A, Polynomial f);

}  // namespace algkit
