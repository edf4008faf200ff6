#pragma once

#include <optional>
#include <string>
#include <utility>

#include "voaf/rational.hpp"
#include "voaf/upoly.hpp"

namespace voaf {

// Element of Q[lam]/(lam^2 - s) when a modulus is present, otherwise of the
// rational function field Q(lam).  Scalars that do not involve lam are
// compatible with every modulus.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rat& r);  // NOLINT(google-explicit-constructor)
  Scalar(long v) : Scalar(Rat(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(Rat(v)) {}   // NOLINT(google-explicit-constructor)

  static Scalar lam(std::optional<Rat> modulus = std::nullopt);
  static Scalar linear(const Rat& c0, const Rat& c1, std::optional<Rat> modulus);
  static Scalar fraction(UPoly num, UPoly den);  // formal lam only

  const std::optional<Rat>& modulus() const { return modulus_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rat to_rat() const;  // throws unless is_rational()
  // value as c0 + c1 lam, valid when the denominator is constant and num has degree <= 1
  std::pair<Rat, Rat> linear_parts() const;
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  // for formal lam: writes this even function of lam as N(s)/D(s) with s = lam^2
  std::pair<UPoly, UPoly> as_function_of_s() const;
  // substitute a concrete modulus into a formal scalar
  Scalar with_modulus(const Rat& s) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(int k) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  static std::optional<Rat> joint_modulus(const Scalar& a, const Scalar& b);
  void normalize();

  std::optional<Rat> modulus_;
  UPoly num_;
  UPoly den_{Rat(1)};
};

Scalar parse_scalar(std::string_view text, std::optional<Rat> modulus);

}  // namespace voaf
