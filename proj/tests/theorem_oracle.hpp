#pragma once

#include "voaf/module_label.hpp"

namespace oracle {

using voaf::ModuleKind;
using voaf::ModuleLabel;
using voaf::Rat;

inline bool plus_minus(const ModuleLabel& m) { return m.kind == ModuleKind::plus || m.kind == ModuleKind::minus; }

// nu^2 = (lambda +- mu)^2  <=>  (nu^2 - s - t)^2 = 4 s t
inline bool sum_rule(const Rat& s, const Rat& t, const Rat& v) {
  Rat d = v - s - t;
  return d * d == 4 * s * t;
}

// the main theorem, clause by clause; pairs (N, L) are listed up to order
inline int clause(const ModuleLabel& m, const ModuleLabel& n, const ModuleLabel& l) {
  switch (m.kind) {
    case ModuleKind::plus:
      return n == l ? 1 : 0;
    case ModuleKind::minus:
      if (plus_minus(n) && plus_minus(l)) return n.kind != l.kind;
      if (n.is_twisted() && l.is_twisted()) return n.kind != l.kind;
      if (n.is_lambda() && l.is_lambda()) return *n.s == *l.s;
      return 0;
    case ModuleKind::lambda:
      if (plus_minus(n) && l.is_lambda()) return *l.s == *m.s;
      if (n.is_lambda() && l.is_lambda()) return sum_rule(*m.s, *n.s, *l.s);
      if (n.is_twisted() && l.is_twisted()) return 1;
      return 0;
    case ModuleKind::theta_plus:
      if (plus_minus(n) && l.is_twisted())
        return (n.kind == ModuleKind::plus) == (l.kind == ModuleKind::theta_plus);
      if (n.is_lambda() && l.is_twisted()) return 1;
      return 0;
    case ModuleKind::theta_minus:
      if (plus_minus(n) && l.is_twisted())
        return (n.kind == ModuleKind::plus) == (l.kind == ModuleKind::theta_minus);
      if (n.is_lambda() && l.is_twisted()) return 1;
      return 0;
  }
  return 0;
}

inline int fusion(const ModuleLabel& m, const ModuleLabel& n, const ModuleLabel& l) {
  return clause(m, n, l) || clause(m, l, n) ? 1 : 0;
}

}  // namespace oracle
