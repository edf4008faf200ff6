#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "voaf/rational.hpp"
#include "voaf/scalar.hpp"

namespace voaf {

// Multiset of mode depths.  Depths are stored in half-units (depth 3/2 is 3),
// sorted descending.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> halves);
  static Partition from_depths(const std::vector<Rat>& depths);

  const std::vector<int>& halves() const { return h_; }
  int weight_halves() const { return weight_; }
  Rat weight() const { return rat(weight_, 2); }
  size_t length() const { return h_.size(); }
  bool empty() const { return h_.empty(); }
  int multiplicity(int half) const;
  std::vector<std::pair<Rat, int>> parts() const;
  Partition with(int half) const;
  Partition without(int half) const;

  bool operator==(const Partition& o) const { return h_ == o.h_; }
  std::string to_string() const;  // e.g. h(-3)h(-1)

 private:
  std::vector<int> h_;
  int weight_ = 0;
};

// weight ascending, then descending-lex within a weight
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

class Sector {
 public:
  enum class Kind { untwisted, twisted };

  static Sector untwisted(Scalar momentum = Scalar());
  static Sector lambda(const Rat& s);  // momentum lam with lam^2 = s
  static Sector lambda_formal();
  static Sector twisted();

  Kind kind() const { return kind_; }
  bool is_twisted() const { return kind_ == Kind::twisted; }
  const Scalar& momentum() const { return momentum_; }
  Scalar offset() const;  // conformal weight of the vacuum
  bool legal_half(int half) const;  // is a mode with this many half-units allowed
  bool operator==(const Sector& o) const;
  bool operator!=(const Sector& o) const { return !(*this == o); }
  std::string terminal() const;

 private:
  Kind kind_ = Kind::untwisted;
  Scalar momentum_;
};

class FockVector {
 public:
  using Terms = std::map<Partition, Scalar, PartitionOrder>;

  FockVector() = default;
  explicit FockVector(Sector sector) : sector_(std::move(sector)) {}
  static FockVector vacuum(const Sector& sector, const Scalar& c = Scalar(Rat(1)));
  static FockVector basis(const Sector& sector, const Partition& p, const Scalar& c = Scalar(Rat(1)));

  const Sector& sector() const { return sector_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Partition& p) const;
  void add(const Partition& p, const Scalar& c);

  FockVector operator-() const;
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& c, const FockVector& v);
  bool operator==(const FockVector& o) const;
  bool operator!=(const FockVector& o) const { return !(*this == o); }

  // degrees are relative to the sector vacuum
  std::optional<Rat> homogeneous_degree() const;
  Rat max_degree() const;
  std::map<Rat, FockVector> components() const;
  FockVector component(const Rat& degree) const;
  FockVector with_sector(const Sector& s) const;

  std::string to_string() const;

 private:
  Sector sector_;
  Terms terms_;
};

FockVector apply_mode(const Rat& n, const FockVector& v);
FockVector apply_mode_halves(int twice_n, const FockVector& v);
FockVector theta(const FockVector& v);
std::vector<Partition> basis_at_degree(const Sector& sector, const Rat& d);
std::vector<Partition> basis_at_degree(Sector::Kind kind, const Rat& d);
Scalar contravariant_form(const FockVector& u, const FockVector& v);

// State grammar: sums of `coef h(-a)h(-b)... terminal` with terminal one of
// |0>, e^lam, 1theta.
FockVector parse_state(std::string_view text, std::optional<Rat> modulus = std::nullopt);

}  // namespace voaf
