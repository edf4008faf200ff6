#pragma once

#include <string>
#include <utility>
#include <vector>

#include "voaf/rational.hpp"

namespace voaf {

// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly monomial(const Rat& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rat& operator[](int i) const;
  Rat coeff(int i) const;
  const Rat& lead() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Rat& c) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  Rat eval(const Rat& x) const;
  UPoly monic() const;
  // p(x) -> p(x^2)... and the reverse for even polynomials
  bool is_even() const;
  bool is_odd() const;
  UPoly compress_even() const;  // q with q(x^2) = p(x)
  UPoly expand_square() const;  // p(x^2)

  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);

}  // namespace voaf
