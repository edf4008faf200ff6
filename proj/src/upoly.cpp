#include "voaf/upoly.hpp"

#include <sstream>

namespace voaf {

UPoly::UPoly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UPoly::operator[](int i) const { return c_.at(i); }

Rat UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly UPoly::scaled(const Rat& c) const {
  if (c == 0) return UPoly();
  UPoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rat l = lead();
  return scaled(1 / l);
}

bool UPoly::is_even() const {
  for (size_t i = 1; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

bool UPoly::is_odd() const {
  for (size_t i = 0; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

UPoly UPoly::compress_even() const {
  if (!is_even()) throw MathError("polynomial is not even");
  std::vector<Rat> v;
  for (size_t i = 0; i < c_.size(); i += 2) v.push_back(c_[i]);
  return UPoly(std::move(v));
}

UPoly UPoly::expand_square() const {
  if (is_zero()) return *this;
  std::vector<Rat> v(2 * c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[2 * i] = c_[i];
  return UPoly(std::move(v));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << voaf::to_string(a);
      continue;
    }
    if (a != 1) os << voaf::to_string(a) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  UPoly q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rat c = r.lead() / b.lead();
    UPoly t = UPoly::monomial(c, r.degree() - b.degree());
    q += t;
    r -= t * b;
  }
  return {q, r};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace voaf
