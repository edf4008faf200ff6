#pragma once

#include <string>

#include "voaf/rational.hpp"

namespace voaf {

// The unit e^{i pi r}, with r kept in [0, 2).
class Phase {
 public:
  Phase() = default;
  explicit Phase(const Rat& r);

  const Rat& exponent() const { return r_; }
  Phase operator*(const Phase& o) const { return Phase(r_ + o.r_); }
  Phase inverse() const { return Phase(-r_); }
  Phase pow(long k) const { return Phase(r_ * k); }
  bool operator==(const Phase& o) const { return r_ == o.r_; }
  bool operator!=(const Phase& o) const { return r_ != o.r_; }
  // +1 or -1 when the phase is real, 0 otherwise
  int real_sign() const;
  std::string to_string() const;

 private:
  Rat r_{0};
};

}  // namespace voaf
