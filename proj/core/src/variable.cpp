#include "algkit/variable.hpp"

#include <charconv>

namespace algkit {

namespace {

void check_base_names(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw std::invalid_argument("empty base coordinate name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[j] == names[i])
        throw std::invalid_argument("duplicate base coordinate name '" + names[i] + "'");
  }
}

// Parses "y<k>" / "xi<k>" reserved names; 0 if the text is not of that shape.
int reserved_index(std::string_view ident, std::string_view prefix, int limit) {
  if (ident.size() <= prefix.size() || ident.substr(0, prefix.size()) != prefix) return 0;
  std::string_view digits = ident.substr(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return 0;
  if (value < 1 || value > limit) return 0;
  return value;
}

}  // namespace

VarSpace VarSpace::base_only(std::vector<std::string> base_names) {
  check_base_names(base_names);
  VarSpace s;
  s.base_names_ = std::move(base_names);
  return s;
}

VarSpace VarSpace::on_E(std::vector<std::string> base_names, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  VarSpace s = base_only(std::move(base_names));
  s.fiber_dim_ = rank;
  return s;
}

VarSpace VarSpace::on_E_dual(std::vector<std::string> base_names, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  VarSpace s = base_only(std::move(base_names));
  s.dual_dim_ = rank;
  return s;
}

bool VarSpace::contains(Variable v) const {
  if (v.index < 1) return false;
  switch (v.kind) {
    case VarKind::base: return v.index <= base_dim();
    case VarKind::fiber: return v.index <= fiber_dim_;
    case VarKind::dual_fiber: return v.index <= dual_dim_;
  }
  return false;
}

int VarSpace::offset(Variable v) const {
  if (!contains(v))
    throw std::invalid_argument("variable " + name(v) + " is not in this variable space");
  switch (v.kind) {
    case VarKind::base: return v.index - 1;
    case VarKind::fiber: return base_dim() + v.index - 1;
    case VarKind::dual_fiber: return base_dim() + fiber_dim_ + v.index - 1;
  }
  return -1;
}

Variable VarSpace::variable_at(int offset) const {
  if (offset < 0 || offset >= dim()) throw std::out_of_range("variable offset out of range");
  if (offset < base_dim()) return base_var(offset + 1);
  offset -= base_dim();
  if (offset < fiber_dim_) return fiber_var(offset + 1);
  return dual_var(offset - fiber_dim_ + 1);
}

std::string VarSpace::name(Variable v) const {
  switch (v.kind) {
    case VarKind::base:
      if (v.index >= 1 && v.index <= base_dim()) return base_names_[v.index - 1];
      return "x" + std::to_string(v.index);
    case VarKind::fiber: return "y" + std::to_string(v.index);
    case VarKind::dual_fiber: return "xi" + std::to_string(v.index);
  }
  return "?";
}

std::optional<Variable> VarSpace::lookup(std::string_view ident) const {
  for (int i = 0; i < base_dim(); ++i)
    if (base_names_[i] == ident) return base_var(i + 1);
  if (int k = reserved_index(ident, "xi", dual_dim_); k > 0) return dual_var(k);
  if (int k = reserved_index(ident, "y", fiber_dim_); k > 0) return fiber_var(k);
  return std::nullopt;
}

}  // namespace algkit
