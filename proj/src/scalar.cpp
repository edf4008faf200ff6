#include "voaf/scalar.hpp"

#include <cctype>

namespace voaf {

Scalar::Scalar(const Rat& r) : num_(r) {}

Scalar Scalar::lam(std::optional<Rat> modulus) {
  Scalar s;
  s.modulus_ = std::move(modulus);
  s.num_ = UPoly::monomial(Rat(1), 1);
  return s;
}

Scalar Scalar::linear(const Rat& c0, const Rat& c1, std::optional<Rat> modulus) {
  Scalar s;
  s.modulus_ = std::move(modulus);
  s.num_ = UPoly(std::vector<Rat>{c0, c1});
  s.normalize();
  return s;
}

Scalar Scalar::fraction(UPoly num, UPoly den) {
  if (den.is_zero()) throw MathError("zero denominator");
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(Rat(1));
    return;
  }
  if (modulus_) {
    if (den_.degree() > 0) throw MathError("unreduced denominator under modulus");
    if (num_.degree() > 1) {
      const Rat& s = *modulus_;
      Rat c0(0), c1(0), pw(1);
      for (int i = 0; i <= num_.degree(); i += 2) {
        c0 += num_.coeff(i) * pw;
        c1 += num_.coeff(i + 1) * pw;
        pw *= s;
      }
      num_ = UPoly(std::vector<Rat>{c0, c1});
    }
    if (den_.degree() == 0 && den_[0] != 1) {
      num_ = num_.scaled(1 / den_[0]);
      den_ = UPoly(Rat(1));
    }
    return;
  }
  if (den_.degree() > 0) {
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  Rat l = den_.lead();
  if (l != 1) {
    num_ = num_.scaled(1 / l);
    den_ = den_.scaled(1 / l);
  }
}

std::optional<Rat> Scalar::joint_modulus(const Scalar& a, const Scalar& b) {
  bool ra = a.is_rational(), rb = b.is_rational();
  if (ra) return b.modulus_ ? b.modulus_ : a.modulus_;
  if (rb) return a.modulus_ ? a.modulus_ : b.modulus_;
  if (a.modulus_ != b.modulus_) throw MathError("incompatible scalar moduli");
  return a.modulus_;
}

Rat Scalar::to_rat() const {
  if (!is_rational()) throw MathError("scalar is not rational: " + to_string());
  return num_.coeff(0) / den_[0];
}

std::pair<Rat, Rat> Scalar::linear_parts() const {
  if (den_.degree() != 0 || num_.degree() > 1) throw MathError("scalar is not lam-linear: " + to_string());
  return {num_.coeff(0) / den_[0], num_.coeff(1) / den_[0]};
}

std::pair<UPoly, UPoly> Scalar::as_function_of_s() const {
  if (modulus_ && !is_rational()) throw MathError("as_function_of_s needs a formal scalar");
  UPoly n = num_, d = den_;
  if (n.is_zero()) return {UPoly(), UPoly(Rat(1))};
  if (!(n.is_even() && d.is_even())) {
    if (n.is_odd() && d.is_odd()) {
      n = divmod(n, UPoly::monomial(Rat(1), 1)).first;
      d = divmod(d, UPoly::monomial(Rat(1), 1)).first;
    } else {
      throw MathError("scalar is not an even function of lam: " + to_string());
    }
  }
  return {n.compress_even(), d.compress_even()};
}

Scalar Scalar::with_modulus(const Rat& s) const {
  if (modulus_) {
    if (*modulus_ != s && !is_rational()) throw MathError("incompatible scalar moduli");
    Scalar c = *this;
    c.modulus_ = s;
    return c;
  }
  Scalar n;
  n.modulus_ = s;
  n.num_ = num_;
  n.normalize();
  Scalar d;
  d.modulus_ = s;
  d.num_ = den_;
  d.normalize();
  return n / d;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  auto m = joint_modulus(*this, o);
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  modulus_ = m;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  auto m = joint_modulus(*this, o);
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  modulus_ = m;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero scalar");
  if (modulus_ && !is_rational()) {
    auto [a, b] = linear_parts();
    Rat norm = a * a - b * b * *modulus_;
    if (norm == 0) throw MathError("scalar is a zero divisor (perfect-square modulus)");
    return linear(a / norm, -b / norm, modulus_);
  }
  Scalar r;
  r.modulus_ = modulus_;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar out(Rat(1)), b = *this;
  while (k) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return to_rat() == o.to_rat();
  if (modulus_ != o.modulus_) return false;
  return num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::to_string() const {
  if (den_.degree() == 0) {
    if (num_.degree() <= 0) return voaf::to_string(num_.coeff(0));
    return num_.to_string("lam");
  }
  return "(" + num_.to_string("lam") + ")/(" + den_.to_string("lam") + ")";
}

namespace {

struct ScalarParser {
  std::string_view t;
  size_t i = 0;
  std::optional<Rat> modulus;

  void skip() {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < t.size() && t[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  Scalar atom() {
    skip();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) throw MathError("expected ')' in scalar");
      return v;
    }
    if (t.substr(i, 3) == "lam") {
      i += 3;
      return Scalar::lam(modulus);
    }
    size_t j = i;
    while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) || t[j] == '/')) ++j;
    if (j == i) throw MathError("bad scalar near: " + std::string(t.substr(i)));
    Rat r = parse_rat(t.substr(i, j - i));
    i = j;
    return Scalar(r);
  }
  Scalar term() {
    Scalar v = atom();
    for (;;) {
      skip();
      if (eat('*')) {
        v *= atom();
        continue;
      }
      if (i < t.size() && (t[i] == 'l' || t[i] == '(' || std::isdigit(static_cast<unsigned char>(t[i])))) {
        v *= atom();
        continue;
      }
      return v;
    }
  }
  Scalar expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Scalar v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, std::optional<Rat> modulus) {
  ScalarParser p{text, 0, std::move(modulus)};
  Scalar v = p.expr();
  p.skip();
  if (p.i != text.size()) throw MathError("trailing characters in scalar: " + std::string(text));
  return v;
}

}  // namespace voaf
