#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "voaf/rational.hpp"
#include "voaf/scalar.hpp"
#include "voaf/upoly.hpp"

namespace voaf {

enum class Var { x = 0, y, z, s, t, u, w };
constexpr int kNumVars = 7;
char var_name(Var v);
Var var_from_name(char c);

using Monomial = std::array<int, kNumVars>;

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rat, GrlexLess>;

  MultiPoly() = default;
  MultiPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rat(c)) {}   // NOLINT(google-explicit-constructor)
  static MultiPoly var(Var v);
  static MultiPoly term(const Rat& c, const Monomial& m);
  static MultiPoly from_upoly(const UPoly& p, Var v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // throws unless is_constant()
  int degree(Var v) const;
  int total_degree() const;
  std::set<Var> variables() const;
  // leading term in grlex order
  std::pair<Monomial, Rat> leading() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rat& c) const;
  MultiPoly pow(int k) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // coefficient list in v: result[k] is the coefficient of v^k
  std::vector<MultiPoly> coefficients_in(Var v) const;
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  // simultaneous renaming, e.g. swap x and y
  MultiPoly rename(const std::map<Var, Var>& mapping) const;
  UPoly to_upoly(Var v) const;  // throws if other variables occur

  std::string to_string() const;

 private:
  Terms terms_;
};

MultiPoly parse_poly(std::string_view text);

Scalar poly_eval(const MultiPoly& p, const std::map<Var, Scalar>& assignment);
// quotient when b divides a exactly, nullopt otherwise
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v);
std::set<Rat> rational_roots(const MultiPoly& p);

// if a = c * b for a nonzero rational c, returns c
std::optional<Rat> proportionality(const MultiPoly& a, const MultiPoly& b);

}  // namespace voaf
