#include "voaf/quadext.hpp"

namespace voaf {

QuadElem quad_add(const QuadElem& x, const QuadElem& y) { return {x.a + y.a, x.b + y.b}; }

QuadElem quad_mul(const QuadExtPoint& pt, const QuadElem& x, const QuadElem& y) {
  Rat bb = x.b * y.b;
  return {x.a * y.a - pt.beta * bb, x.a * y.b + x.b * y.a + pt.alpha * bb};
}

QuadElem quadext_eval(const MultiPoly& p, const QuadExtPoint& pt, Var root_var, Var conj_var,
                      const std::map<Var, Rat>& others) {
  if (root_var == conj_var) throw MathError("quadext_eval needs two distinct variables");
  std::map<Var, QuadElem> value;
  value[root_var] = {Rat(0), Rat(1)};
  value[conj_var] = {pt.alpha, Rat(-1)};
  for (const auto& [v, r] : others) {
    if (v == root_var || v == conj_var) throw MathError("quadext_eval assignment overlaps the root variables");
    value[v] = {r, Rat(0)};
  }
  QuadElem acc;
  for (const auto& [m, c] : p.terms()) {
    QuadElem term{c, Rat(0)};
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      auto it = value.find(static_cast<Var>(i));
      if (it == value.end()) throw MathError(std::string("unassigned variable ") + var_name(static_cast<Var>(i)));
      for (int k = 0; k < m[i]; ++k) term = quad_mul(pt, term, it->second);
    }
    acc = quad_add(acc, term);
  }
  return acc;
}

bool quadext_nonvanishing(const MultiPoly& p, const QuadExtPoint& pt, Var v1, Var v2,
                          const std::map<Var, Rat>& others) {
  return !quadext_eval(p, pt, v1, v2, others).is_zero() && !quadext_eval(p, pt, v2, v1, others).is_zero();
}

}  // namespace voaf
