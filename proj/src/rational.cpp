#include "voaf/rational.hpp"

#include <cctype>

namespace voaf {

Rat rat(long num, long den) {
  if (den == 0) throw MathError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw MathError("empty rational literal");
  if (s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw MathError("bad rational literal: " + std::string(text));
    return Rat(Int(s));
  }
  std::string a = s.substr(0, slash), b = s.substr(slash + 1);
  if (!valid_int(a) || !valid_int(b) || b[0] == '-')
    throw MathError("bad rational literal: " + std::string(text));
  Int den(b);
  if (den == 0) throw MathError("zero denominator");
  Rat r(Int(a), den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

long to_long(const Rat& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) throw MathError("not a small integer: " + to_string(r));
  return r.get_num().get_si();
}

Rat binomial(const Rat& r, long k) {
  if (k < 0) return Rat(0);
  Rat out(1);
  for (long i = 0; i < k; ++i) {
    out *= (r - i);
    out /= (i + 1);
  }
  return out;
}

Rat factorial(long k) {
  Rat out(1);
  for (long i = 2; i <= k; ++i) out *= i;
  return out;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Int sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  Rat out(sn, sd);
  out.canonicalize();
  return out;
}

}  // namespace voaf

namespace voaf {

Rat floor_rat(const Rat& r) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(f);
}

}  // namespace voaf
