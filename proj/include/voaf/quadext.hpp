#pragma once

#include <map>
#include <utility>

#include "voaf/multipoly.hpp"

namespace voaf {

// Arithmetic in Q[w]/(w^2 - alpha w + beta).
struct QuadExtPoint {
  Rat alpha;
  Rat beta;
};

struct QuadElem {
  Rat a{0};
  Rat b{0};  // value a + b w
  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
};

QuadElem quad_add(const QuadElem& x, const QuadElem& y);
QuadElem quad_mul(const QuadExtPoint& pt, const QuadElem& x, const QuadElem& y);

// Evaluates p with root_var = w, conj_var = alpha - w, and the remaining
// variables taken from `others`.
QuadElem quadext_eval(const MultiPoly& p, const QuadExtPoint& pt, Var root_var, Var conj_var,
                      const std::map<Var, Rat>& others = {});

// true iff p is nonzero at both orderings of the two roots
bool quadext_nonvanishing(const MultiPoly& p, const QuadExtPoint& pt, Var v1, Var v2,
                          const std::map<Var, Rat>& others = {});

}  // namespace voaf
