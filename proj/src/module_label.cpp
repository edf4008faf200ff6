#include "voaf/module_label.hpp"

#include <algorithm>
#include <cctype>

namespace voaf {

ModuleLabel ModuleLabel::m_lambda(const Rat& s) {
  if (s <= 0) throw MathError("M(1, lambda) needs s = lambda^2 > 0");
  return {ModuleKind::lambda, s};
}

Sector ModuleLabel::sector() const {
  switch (kind) {
    case ModuleKind::plus:
    case ModuleKind::minus: return Sector::untwisted();
    case ModuleKind::lambda: return s ? Sector::lambda(*s) : Sector::lambda_formal();
    default: return Sector::twisted();
  }
}

FockVector ModuleLabel::top_vector() const {
  Sector sec = sector();
  if (kind == ModuleKind::minus) return FockVector::basis(sec, Partition({2}));
  if (kind == ModuleKind::theta_minus) return FockVector::basis(sec, Partition({1}));
  return FockVector::vacuum(sec);
}

Scalar ModuleLabel::top_weight() const {
  switch (kind) {
    case ModuleKind::plus: return Scalar();
    case ModuleKind::minus: return Scalar(Rat(1));
    case ModuleKind::theta_plus: return Scalar(rat(1, 16));
    case ModuleKind::theta_minus: return Scalar(rat(9, 16));
    default: return sector().offset();
  }
}

Scalar ModuleLabel::top_j_value() const {
  switch (kind) {
    case ModuleKind::plus: return Scalar();
    case ModuleKind::minus: return Scalar(Rat(-6));
    case ModuleKind::theta_plus: return Scalar(rat(3, 128));
    case ModuleKind::theta_minus: return Scalar(rat(-45, 128));
    default: {
      Scalar l2 = sector().momentum() * sector().momentum();
      return l2 * l2 - Scalar(rat(1, 2)) * l2;
    }
  }
}

std::optional<int> ModuleLabel::parity() const {
  switch (kind) {
    case ModuleKind::plus:
    case ModuleKind::theta_plus: return 0;
    case ModuleKind::minus:
    case ModuleKind::theta_minus: return 1;
    default: return std::nullopt;
  }
}

bool ModuleLabel::contains(const Partition& p) const {
  auto par = parity();
  return !par || static_cast<int>(p.length() % 2) == *par;
}

std::string ModuleLabel::name() const {
  switch (kind) {
    case ModuleKind::plus: return "M+";
    case ModuleKind::minus: return "M-";
    case ModuleKind::theta_plus: return "Mtheta+";
    case ModuleKind::theta_minus: return "Mtheta-";
    default: return s ? "M(s=" + to_string(*s) + ")" : "M(s)";
  }
}

bool ModuleLabel::operator<(const ModuleLabel& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (s.has_value() != o.s.has_value()) return !s.has_value();
  return s && *s < *o.s;
}

ModuleLabel parse_label(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "M+") return ModuleLabel::m_plus();
  if (t == "M-") return ModuleLabel::m_minus();
  if (t == "Mtheta+") return ModuleLabel::theta_plus();
  if (t == "Mtheta-") return ModuleLabel::theta_minus();
  if (t == "M(s)") return ModuleLabel::m_lambda_formal();
  if (t.size() > 5 && t.rfind("M(s=", 0) == 0 && t.back() == ')') return ModuleLabel::m_lambda(parse_rat(t.substr(4, t.size() - 5)));
  throw MathError("unknown module label: " + std::string(text));
}

}  // namespace voaf
