// Coordinate variables and variable spaces.
//
// A VarSpace is the declared coordinate chart a polynomial lives on: m base
// coordinates x^a (user-named), and optionally n fiber coordinates y^i (on E)
// or n dual-fiber coordinates xi_i (on E*). Variables are ordered base first
// (by index), then fiber, then dual fiber; this order is the tie-break order
// of the graded-lexicographic monomial order and the order used for printing.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace algkit {

enum class VarKind { base, fiber, dual_fiber };

struct Variable {
  VarKind kind;
  int index;  // 1-based

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  friend bool operator<(const Variable& a, const Variable& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.index < b.index;
  }
};

inline Variable base_var(int index) { return {VarKind::base, index}; }
inline Variable fiber_var(int index) { return {VarKind::fiber, index}; }
inline Variable dual_var(int index) { return {VarKind::dual_fiber, index}; }

class VarSpace {
public:
  VarSpace() = default;

  static VarSpace base_only(std::vector<std::string> base_names);
  static VarSpace on_E(std::vector<std::string> base_names, int rank);
  static VarSpace on_E_dual(std::vector<std::string> base_names, int rank);

  int base_dim() const { return static_cast<int>(base_names_.size()); }
  int fiber_dim() const { return fiber_dim_; }
  int dual_dim() const { return dual_dim_; }
  int dim() const { return base_dim() + fiber_dim_ + dual_dim_; }

  bool contains(Variable v) const;

  // 0-based position of v in the canonical variable order; throws if absent.
  int offset(Variable v) const;
  Variable variable_at(int offset) const;

  std::string name(Variable v) const;
  // Resolves a declared coordinate name ("x1", "y2", "xi3", ...).
  std::optional<Variable> lookup(std::string_view ident) const;

  const std::vector<std::string>& base_names() const { return base_names_; }

  friend bool operator==(const VarSpace& a, const VarSpace& b) {
    return a.base_names_ == b.base_names_ && a.fiber_dim_ == b.fiber_dim_ &&
           a.dual_dim_ == b.dual_dim_;
  }
  friend bool operator!=(const VarSpace& a, const VarSpace& b) { return !(a == b); }

private:
  std::vector<std::string> base_names_;
  int fiber_dim_ = 0;
  int dual_dim_ = 0;
};

}  // namespace algkit
