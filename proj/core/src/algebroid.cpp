#include "algkit/algebroid.hpp"

#include <algorithm>
#include <sstream>

namespace algkit {

int normalize_tuple(IndexTuple& t) {
  int sign = 1;
  // Insertion sort, counting swaps; tuples are tiny.
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  return sign;
}

Algebroid::Algebroid(std::vector<std::string> base_coords, int rank, bool skew, Carrier carrier)
    : m_(static_cast<int>(base_coords.size())),
      n_(rank),
      skew_(skew),
      carrier_(carrier),
      base_(VarSpace::base_only(std::move(base_coords))) {
  if (n_ < 1) throw std::invalid_argument("rank must be positive");
  c_.assign(static_cast<std::size_t>(n_) * n_ * n_, Polynomial(base_));
  dl_.assign(static_cast<std::size_t>(m_) * n_, Polynomial(base_));
  dr_ = dl_;
}

int Algebroid::c_at(int k, int i, int j) const {
  if (k < 1 || k > n_ || i < 1 || i > n_ || j < 1 || j > n_)
    throw std::out_of_range("structure-function index out of range");
  return ((k - 1) * n_ + (i - 1)) * n_ + (j - 1);
}

int Algebroid::m_at(int a, int i) const {
  if (a < 1 || a > m_ || i < 1 || i > n_)
    throw std::out_of_range("anchor index out of range");
  return (a - 1) * n_ + (i - 1);
}

void Algebroid::set_c(int k, int i, int j, Polynomial value) {
  if (value.space() != base_)
    throw std::invalid_argument("structure function must be a base polynomial");
  c_[c_at(k, i, j)] = std::move(value);
}

void Algebroid::set_anchor_left(int a, int i, Polynomial value) {
  if (value.space() != base_) throw std::invalid_argument("anchor must be a base polynomial");
  dl_[m_at(a, i)] = std::move(value);
}

void Algebroid::set_anchor_right(int a, int i, Polynomial value) {
  if (value.space() != base_) throw std::invalid_argument("anchor must be a base polynomial");
  dr_[m_at(a, i)] = std::move(value);
}

void Algebroid::set_anchor(int a, int i, const Polynomial& value) {
  set_anchor_left(a, i, value);
  set_anchor_right(a, i, value);
}

void Algebroid::add_bracket_term(int i, int j, int k, const Polynomial& value) {
  if (!skew_) throw std::logic_error("add_bracket_term is for skew structures");
  c_[c_at(k, i, j)] += value;
  c_[c_at(k, j, i)] -= value;
}

bool operator==(const Algebroid& a, const Algebroid& b) {
  return a.m_ == b.m_ && a.n_ == b.n_ && a.skew_ == b.skew_ && a.carrier_ == b.carrier_ &&
         a.base_ == b.base_ && a.c_ == b.c_ && a.dl_ == b.dl_ && a.dr_ == b.dr_;
}

Section::Section(const Algebroid& A, std::vector<Polynomial> components)
    : comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != A.rank())
    throw std::invalid_argument("section component count does not match rank");
  for (const auto& p : comps_)
    if (p.space() != A.base_space())
      throw std::invalid_argument("section components must be base polynomials");
}

Section Section::zero(const Algebroid& A) {
  return Section(A, std::vector<Polynomial>(A.rank(), Polynomial(A.base_space())));
}

Section Section::basis(const Algebroid& A, int i) {
  Section s = zero(A);
  s[i] = Polynomial::constant(A.base_space(), Rational(1));
  return s;
}

bool Section::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Section Section::operator+(const Section& o) const {
  Section r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] += o.comps_[i];
  return r;
}

Section Section::operator-(const Section& o) const {
  Section r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] -= o.comps_[i];
  return r;
}

Section Section::operator-() const {
  Section r = *this;
  for (auto& p : r.comps_) p = -p;
  return r;
}

Section Section::scaled(const Polynomial& f) const {
  Section r = *this;
  for (auto& p : r.comps_) p = f * p;
  return r;
}

std::string Section::to_string(const char* token) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    std::string coeff = comps_[i].to_string();
    std::string body;
    if (coeff == "1") {
      body = std::string(token) + std::to_string(i + 1);
    } else if (coeff == "-1") {
      body = "-" + std::string(token) + std::to_string(i + 1);
    } else if (comps_[i].terms().size() == 1) {
      body = coeff + "*" + token + std::to_string(i + 1);
    } else {
      body = "(" + coeff + ")*" + token + std::to_string(i + 1);
    }
    if (first) {
      out << body;
    } else if (!body.empty() && body[0] == '-') {
      out << " - " << body.substr(1);
    } else {
      out << " + " << body;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

EndoTensor::EndoTensor(VarSpace base, int rank) : base_(std::move(base)), n_(rank) {
  if (n_ < 1) throw std::invalid_argument("rank must be positive");
  m_.assign(static_cast<std::size_t>(n_) * n_, Polynomial(base_));
}

EndoTensor EndoTensor::identity(const Algebroid& A) {
  EndoTensor t(A.base_space(), A.rank());
  for (int i = 1; i <= A.rank(); ++i)
    t.set(i, i, Polynomial::constant(A.base_space(), Rational(1)));
  return t;
}

EndoTensor EndoTensor::zero(const Algebroid& A) { return EndoTensor(A.base_space(), A.rank()); }

void EndoTensor::set(int i, int j, Polynomial value) {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("endomorphism index");
  if (value.space() != base_)
    throw std::invalid_argument("endomorphism entries must be base polynomials");
  m_[(i - 1) * n_ + (j - 1)] = std::move(value);
}

EndoTensor EndoTensor::operator*(const EndoTensor& o) const {
  if (n_ != o.n_ || base_ != o.base_) throw std::invalid_argument("endomorphism shape mismatch");
  EndoTensor r(base_, n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      Polynomial acc(base_);
      for (int l = 1; l <= n_; ++l) acc += at(i, l) * o.at(l, j);
      r.set(i, j, std::move(acc));
    }
  return r;
}

bool EndoTensor::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string EndoTensor::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out << "; ";
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) out << ", ";
      out << at(i, j).to_string();
    }
  }
  out << "]";
  return out.str();
}

// --- operations --------------------------------------------------------------

ValidationReport validate(const Algebroid& A) {
  ValidationReport report;
  const int n = A.rank();
  const int m = A.base_dim();

  CheckReport skew_c{"skew_structure_functions", true, std::nullopt, ""};
  if (A.skew()) {
    for (int k = 1; k <= n && skew_c.pass; ++k)
      for (int i = 1; i <= n && skew_c.pass; ++i)
        for (int j = 1; j <= n && skew_c.pass; ++j) {
          if (!(A.c(k, i, j) + A.c(k, j, i)).is_zero()) {
            skew_c.pass = false;
            skew_c.witness = "c^" + std::to_string(k) + "_" + std::to_string(i) +
                             std::to_string(j) + " + c^" + std::to_string(k) + "_" +
                             std::to_string(j) + std::to_string(i) + " = " +
                             (A.c(k, i, j) + A.c(k, j, i)).to_string();
          }
        }
    skew_c.notes = "skew flag requires c^k_ij = -c^k_ji";
  } else {
    skew_c.notes = "structure declared non-skew; antisymmetry not required";
  }
  report.checks.push_back(skew_c);

  CheckReport anchors{"anchor_consistency", true, std::nullopt, ""};
  if (A.skew()) {
    for (int a = 1; a <= m && anchors.pass; ++a)
      for (int i = 1; i <= n && anchors.pass; ++i)
        if (A.anchor_left(a, i) != A.anchor_right(a, i)) {
          anchors.pass = false;
          anchors.witness = "d^" + std::to_string(a) + "_" + std::to_string(i) + " = " +
                            A.anchor_left(a, i).to_string() + " vs s = " +
                            A.anchor_right(a, i).to_string();
        }
    anchors.notes = "skew structures carry one anchor";
  } else {
    anchors.notes = "left and right anchors are independent";
  }
  report.checks.push_back(anchors);

  report.all_pass = skew_c.pass && anchors.pass;
  report.is_pre_lie = A.skew() && report.all_pass;
  report.checks.push_back(
      {"is_pre_lie", true, std::nullopt, report.is_pre_lie ? "pre-Lie (skew)" : "pseudo-Lie only"});
  return report;
}

Section bracket_sections(const Algebroid& A, const Section& X, const Section& Y) {
  if (X.rank() != A.rank() || Y.rank() != A.rank())
    throw std::invalid_argument("section rank mismatch");
  const VarSpace& B = A.base_space();
  Section result = Section::zero(A);
  for (int k = 1; k <= A.rank(); ++k) {
    Polynomial acc(B);
    for (int i = 1; i <= A.rank(); ++i)
      for (int j = 1; j <= A.rank(); ++j) {
        const Polynomial& ck = A.c(k, i, j);
        if (!ck.is_zero()) acc += X[i] * Y[j] * ck;
      }
    for (int i = 1; i <= A.rank(); ++i)
      for (int a = 1; a <= A.base_dim(); ++a) {
        const Polynomial& d = A.anchor_left(a, i);
        if (!d.is_zero()) acc += X[i] * d * Y[k].partial(base_var(a));
      }
    for (int j = 1; j <= A.rank(); ++j)
      for (int a = 1; a <= A.base_dim(); ++a) {
        const Polynomial& s = A.anchor_right(a, j);
        if (!s.is_zero()) acc -= Y[j] * s * X[k].partial(base_var(a));
      }
    result[k] = std::move(acc);
  }
  return result;
}

Polynomial anchor_apply(const Algebroid& A, const Section& X, const Polynomial& f,
                        AnchorSide side) {
  if (f.space() != A.base_space())
    throw std::invalid_argument("anchor acts on base polynomials only");
  Polynomial acc(A.base_space());
  for (int i = 1; i <= A.rank(); ++i)
    for (int a = 1; a <= A.base_dim(); ++a) {
      const Polynomial& anchor =
          side == AnchorSide::left ? A.anchor_left(a, i) : A.anchor_right(a, i);
      if (!anchor.is_zero()) acc += X[i] * anchor * f.partial(base_var(a));
    }
  return acc;
}

Section jacobiator(const Algebroid& A, const Section& X, const Section& Y, const Section& Z) {
  if (!A.skew()) throw std::invalid_argument("jacobiator requires a skew structure");
  return bracket_sections(A, bracket_sections(A, X, Y), Z) +
         bracket_sections(A, bracket_sections(A, Y, Z), X) +
         bracket_sections(A, bracket_sections(A, Z, X), Y);
}

LieCheck is_lie(const Algebroid& A) {
  LieCheck result;
  if (!A.skew()) return result;
  if (!validate(A).all_pass) return result;
  for (int i = 1; i <= A.rank(); ++i)
    for (int j = i + 1; j <= A.rank(); ++j)
      for (int k = j + 1; k <= A.rank(); ++k) {
        Section J = jacobiator(A, Section::basis(A, i), Section::basis(A, j),
                               Section::basis(A, k));
        if (!J.is_zero()) {
          result.witness_triple = {{i, j, k}};
          result.witness_value = J;
          return result;
        }
      }
  result.is_lie = true;
  return result;
}

template <class Tag>
FiberElement<Tag> wedge(const FiberElement<Tag>& u, const FiberElement<Tag>& v) {
  if (u.base_space() != v.base_space() || u.rank() != v.rank())
    throw std::invalid_argument("wedge of elements over different contexts");
  FiberElement<Tag> r(u.base_space(), u.rank(), u.degree() + v.degree());
  if (u.degree() + v.degree() > u.rank()) return r;  // exceeds rank: zero
  for (const auto& [tu, pu] : u.components())
    for (const auto& [tv, pv] : v.components()) {
      IndexTuple merged = tu;
      merged.insert(merged.end(), tv.begin(), tv.end());
      r.add_term(std::move(merged), pu * pv);
    }
  return r;
}

template FiberMultivector wedge(const FiberMultivector&, const FiberMultivector&);
template FiberForm wedge(const FiberForm&, const FiberForm&);

template <class Tag>
std::string FiberElement<Tag>::to_string() const {
  if (comps_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [tuple, p] : comps_) {
    std::string basis;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i > 0) basis += "^";
      basis += Tag::token + std::to_string(tuple[i]);
    }
    std::string coeff = p.to_string();
    std::string body;
    if (tuple.empty()) {
      body = coeff;
    } else if (coeff == "1") {
      body = basis;
    } else if (coeff == "-1") {
      body = "-" + basis;
    } else if (p.terms().size() == 1) {
      body = coeff + "*" + basis;
    } else {
      body = "(" + coeff + ")*" + basis;
    }
    if (first) {
      out << body;
    } else if (!body.empty() && body[0] == '-') {
      out << " - " << body.substr(1);
    } else {
      out << " + " << body;
    }
    first = false;
  }
  return out.str();
}

template std::string FiberElement<MultivectorBasis>::to_string() const;
template std::string FiberElement<FormBasis>::to_string() const;

FiberMultivector multivector_of(const Algebroid& A, const Section& X) {
  FiberMultivector u(A.base_space(), A.rank(), 1);
  for (int i = 1; i <= A.rank(); ++i) u.add_term({i}, X[i]);
  return u;
}

Section section_of(const Algebroid& A, const FiberMultivector& u) {
  if (u.degree() != 1) throw std::invalid_argument("section_of needs a degree-1 multivector");
  Section s = Section::zero(A);
  for (const auto& [tuple, p] : u.components()) s[tuple[0]] = p;
  return s;
}

FiberMultivector basis_multivector(const Algebroid& A, IndexTuple tuple) {
  FiberMultivector u(A.base_space(), A.rank(), static_cast<int>(tuple.size()));
  u.add_term(std::move(tuple), Polynomial::constant(A.base_space(), Rational(1)));
  return u;
}

FiberForm basis_form(const Algebroid& A, IndexTuple tuple) {
  FiberForm u(A.base_space(), A.rank(), static_cast<int>(tuple.size()));
  u.add_term(std::move(tuple), Polynomial::constant(A.base_space(), Rational(1)));
  return u;
}

FiberMultivector scalar_multivector(const Algebroid& A, Polynomial f) {
  FiberMultivector u(A.base_space(), A.rank(), 0);
  u.add_term({}, std::move(f));
  return u;
}

FiberForm scalar_form(const Algebroid& A, Polynomial f) {
  FiberForm u(A.base_space(), A.rank(), 0);
  u.add_term({}, std::move(f));
  return u;
}

}  // namespace algkit
