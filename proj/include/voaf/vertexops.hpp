#pragma once

#include <map>
#include <utility>
#include <vector>

#include "voaf/fock.hpp"
#include "voaf/linalg.hpp"
#include "voaf/module_label.hpp"

namespace voaf {

// Taylor coefficients of -log(((1+x)^{1/2} + (1+y)^{1/2})/2).
struct CmnTable {
  int cutoff = 0;
  std::map<std::pair<int, int>, Rat> c;
  Rat at(int m, int n) const;
};

CmnTable cmn(int cutoff);

// e^{Delta_z} a, returned as a map d -> b_d with e^{Delta_z} a = sum_d z^{-d} b_d
std::map<int, FockVector> exp_delta(const FockVector& a);

// Coefficient of z^{base + offset} in the field of a (a state of M(1, lambda))
// acting on u.  base is lambda*mu for an untwisted u in M(1, mu), and
// -lambda^2/2 for a twisted u (the field is then I^theta).  offset is in Z/2.
FockVector field_coefficient(const FockVector& a, const Rat& offset, const FockVector& u);

// a_n u, the coefficient of z^{-n-1}
FockVector untwisted_mode(const FockVector& a, const Rat& n, const FockVector& u);
FockVector twisted_mode(const FockVector& a, const Rat& n, const FockVector& u);
FockVector mode(const FockVector& a, const Rat& n, const FockVector& u);

// standard states of M(1)
FockVector omega_state();
FockVector j_state();

struct ZeroModeBlock {
  std::vector<Partition> basis;
  Matrix<Scalar> matrix;  // matrix[i][j]: coefficient of basis[i] in o(a) basis[j]
};

// o(a) = a_{wt(a) - 1} restricted to the module's degrees <= cutoff
ZeroModeBlock zero_mode(const FockVector& a, const ModuleLabel& module, const Rat& cutoff);
// eigenvalue of o(a) on the top level of the module
Scalar top_eigenvalue(const FockVector& a, const ModuleLabel& module);

}  // namespace voaf
