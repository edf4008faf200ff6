#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voaf/fock.hpp"
#include "voaf/module_label.hpp"
#include "voaf/multipoly.hpp"
#include "voaf/phase.hpp"
#include "voaf/virasoro.hpp"

namespace voaf {

// a * u, a o u and u * a for a homogeneous state a of M(1)
FockVector star_left(const FockVector& a, const FockVector& u);
FockVector circ(const FockVector& a, const FockVector& u);
FockVector star_right(const FockVector& u, const FockVector& a);
// Res_z (1+z)^{wt(a)+m} / z^{2+n} Y(a, z) u
FockVector residue_product(const FockVector& a, const FockVector& u, int m, int n);

struct CircTerm {
  Scalar coefficient;
  Partition a;  // basis state of M(1)^+
  Partition u;  // basis state of the module
};

struct Membership {
  bool member = false;
  std::vector<CircTerm> witness;  // v = sum coefficient * (a o u) when member
};

// Is v in O(M)?  Generators a o u with a in M(1)^+ of weight <= W and
// wt(a) + deg(u) + 1 <= W.  A negative answer is inconclusive.
Membership o_membership(const FockVector& v, const ModuleLabel& module, int W);

MultiPoly descendant_to_poly(const std::vector<int>& ms, const MultiPoly& base_weight);

struct PhiImage {
  FockVector vector;
  Phase phase;
};

PhiImage phi(const FockVector& v);

// weight of a homogeneous vector of a module: offset + degree
Rat conformal_weight(const FockVector& v);

struct ContractionElement {
  std::map<int, MultiPoly> coeffs;     // generator index -> polynomial in x, y (and s)
  MultiPoly denominator{Rat(1)};       // the element is coeffs / denominator

  MultiPoly coefficient(int g) const;
  std::string to_json(const std::vector<std::string>& generator_names) const;
};

// v'_L (x) [element] (x) v_N written against the generator classes, with
// x = a_L, y = a_N.  For formal s the coefficients carry s and a common
// denominator in s.
ContractionElement contraction_eval(const ModuleLabel& module, const FockVector& element,
                                    const std::vector<FockVector>& generators);

// the same with x, y (and s) replaced by the top weights of L, N and M
ContractionElement contraction_eval(const ModuleLabel& M, const ModuleLabel& N, const ModuleLabel& L,
                                    const FockVector& element, const std::vector<FockVector>& generators);

}  // namespace voaf
