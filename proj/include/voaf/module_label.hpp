#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "voaf/fock.hpp"

namespace voaf {

enum class ModuleKind { plus, minus, lambda, theta_plus, theta_minus };

// Irreducible M(1)^+ module.  M(1, lambda) is keyed by s = lambda^2; an
// absent s means s is formal.
struct ModuleLabel {
  ModuleKind kind = ModuleKind::plus;
  std::optional<Rat> s;

  static ModuleLabel m_plus() { return {ModuleKind::plus, std::nullopt}; }
  static ModuleLabel m_minus() { return {ModuleKind::minus, std::nullopt}; }
  static ModuleLabel m_lambda(const Rat& s);
  static ModuleLabel m_lambda_formal() { return {ModuleKind::lambda, std::nullopt}; }
  static ModuleLabel theta_plus() { return {ModuleKind::theta_plus, std::nullopt}; }
  static ModuleLabel theta_minus() { return {ModuleKind::theta_minus, std::nullopt}; }

  bool is_lambda() const { return kind == ModuleKind::lambda; }
  bool is_twisted() const { return kind == ModuleKind::theta_plus || kind == ModuleKind::theta_minus; }
  bool is_formal() const { return is_lambda() && !s; }
  Sector sector() const;
  FockVector top_vector() const;  // the lowest weight vector v_M
  Scalar top_weight() const;      // a_M
  Scalar top_j_value() const;     // b_M as listed in the table of top levels
  // required parity of the partition length, if the module is a theta eigenspace
  std::optional<int> parity() const;
  bool contains(const Partition& p) const;
  std::string name() const;

  bool operator==(const ModuleLabel& o) const { return kind == o.kind && s == o.s; }
  bool operator<(const ModuleLabel& o) const;
};

ModuleLabel parse_label(std::string_view text);

}  // namespace voaf
