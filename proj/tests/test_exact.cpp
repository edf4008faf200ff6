#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>

#include "doctest.h"
#include "voaf/multipoly.hpp"
#include "voaf/phase.hpp"
#include "voaf/quadext.hpp"
#include "voaf/scalar.hpp"

using namespace voaf;
using Float = boost::multiprecision::cpp_dec_float_50;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

Float to_float(const Rat& r) { return Float(r.get_num().get_str()) / Float(r.get_den().get_str()); }

Float value_at(const Scalar& x, const Float& lam) {
  auto [a, b] = x.linear_parts();
  return to_float(a) + to_float(b) * lam;
}

MultiPoly random_poly(std::mt19937& rng, int vars, int deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), e(0, deg);
  MultiPoly p;
  for (int i = 0; i < terms; ++i) {
    Monomial m{};
    for (int v = 0; v < vars; ++v) m[v] = e(rng);
    p += MultiPoly::term(rat(coef(rng), 1 + std::abs(coef(rng))), m);
  }
  return p;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-0/7")) == "0");
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK(binomial(Rat(-1, 2), 2) == rat(3, 8));
  CHECK(*rational_sqrt(rat(9, 4)) == rat(3, 2));
  CHECK_FALSE(rational_sqrt(Rat(2)));
}

TEST_CASE("scalar arithmetic with modulus") {
  Scalar l = Scalar::lam(Rat(2));
  CHECK(l * l == Scalar(Rat(2)));
  Scalar x = Scalar::linear(Rat(3), Rat(1), Rat(2));
  Scalar y = x.inverse();
  CHECK(x * y == Scalar(Rat(1)));
  auto [a, b] = y.linear_parts();
  CHECK(a == rat(3, 7));
  CHECK(b == rat(-1, 7));
  CHECK_THROWS(Scalar::lam(Rat(2)) + Scalar::lam(Rat(3)));
  CHECK((Scalar::lam(Rat(4)) - Scalar(Rat(2))).is_zero() == false);
  CHECK_THROWS((Scalar::lam(Rat(4)) - Scalar(Rat(2))).inverse());
}

TEST_CASE("scalar arithmetic agrees with numeric lam = +-sqrt(s)") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9), pos(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    Rat s = rat(pos(rng), pos(rng));
    if (rational_sqrt(s)) continue;
    Scalar a = Scalar::linear(rat(d(rng), pos(rng)), rat(d(rng), pos(rng)), s);
    Scalar b = Scalar::linear(rat(d(rng), pos(rng)), rat(d(rng), pos(rng)), s);
    if (b.is_zero()) continue;
    for (int sign : {1, -1}) {
      Float lam = sign * sqrt(to_float(s));
      Float fa = value_at(a, lam), fb = value_at(b, lam);
      Float tol("1e-30");
      CHECK(abs(value_at(a * b, lam) - fa * fb) < tol);
      CHECK(abs(value_at(a + b, lam) - (fa + fb)) < tol);
      CHECK(abs(value_at(a / b, lam) - fa / fb) < tol);
    }
  }
}

TEST_CASE("formal lam scalars form a field") {
  Scalar l = Scalar::lam();
  Scalar f = (l * l - Scalar(Rat(1))) / (l - Scalar(Rat(1)));
  CHECK(f == l + Scalar(Rat(1)));
  auto [n, d] = (l * l / (l * l + Scalar(Rat(2)))).as_function_of_s();
  CHECK(n.to_string("s") == "s");
  CHECK(d.to_string("s") == "s + 2");
  CHECK(f.with_modulus(Rat(3)) == Scalar::linear(Rat(1), Rat(1), Rat(3)));
  CHECK(parse_scalar("(1/2 + 3 lam)", Rat(5)) == Scalar::linear(rat(1, 2), Rat(3), Rat(5)));
}

TEST_CASE("phase arithmetic") {
  Phase a(rat(3, 2)), b(rat(1, 2));
  CHECK((a * b).exponent() == 0);
  CHECK(Phase(Rat(1)).pow(2) == Phase());
  CHECK(Phase(rat(-1, 16)).exponent() == rat(31, 16));
  CHECK(Phase(Rat(1)).real_sign() == -1);
  CHECK(Phase(rat(5, 2)).exponent() == rat(1, 2));
}

TEST_CASE("polynomial parse, print and evaluation") {
  MultiPoly f = P("z - 4x^2 + x + 9/4(x-y)(6x^2-18xy-12y^2-21x-23y+11)");
  Scalar v = poly_eval(f, {{Var::x, Scalar(Rat(1))}, {Var::y, Scalar(Rat(1))}, {Var::z, Scalar(Rat(-6))}});
  CHECK(v == Scalar(Rat(-9)));
  CHECK(poly_eval(MultiPoly(), {}) == Scalar());
  MultiPoly ideal = P("(y-4x^2+x)(x-1)(x-1/16)(x-9/16)");
  CHECK(poly_eval(ideal, {{Var::x, Scalar(rat(1, 16))}, {Var::y, Scalar(rat(3, 128))}}).is_zero());
  CHECK_THROWS(poly_eval(f, {{Var::x, Scalar(Rat(1))}}));
  MultiPoly g = P("3/2 * x^2 y - y + 7");
  CHECK(g.to_string() == "3/2 * x^2 y - y + 7");
  CHECK(parse_poly(g.to_string()) == g);
  CHECK(f == parse_poly(f.to_string()));
}

TEST_CASE("polynomial ring axioms on random triples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    MultiPoly a = random_poly(rng, 3, 3, 4), b = random_poly(rng, 3, 3, 4), c = random_poly(rng, 3, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    auto q = exact_divide(a * b, b.is_zero() ? MultiPoly(1) : b);
    if (!b.is_zero()) CHECK(*q == a);
  }
}

TEST_CASE("resultants") {
  MultiPoly x = MultiPoly::var(Var::x);
  CHECK(resultant(x - MultiPoly::var(Var::s), x - MultiPoly::var(Var::t), Var::x) == P("s - t"));
  CHECK(resultant(P("x^2 - 1"), P("x - 1"), Var::x).is_zero());
  CHECK_THROWS(resultant(P("y"), P("x"), Var::x));
}

TEST_CASE("resultant vanishes iff the specialized gcd is nonconstant") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-3, 3);
  int common = 0;
  for (int trial = 0; trial < 60; ++trial) {
    // build p, q in x with coefficients linear in t, sometimes sharing a factor
    auto lin = [&]() { return MultiPoly(Rat(c(rng))) + MultiPoly::var(Var::t).scaled(Rat(c(rng))); };
    MultiPoly x = MultiPoly::var(Var::x);
    MultiPoly p = x * x + lin() * x + lin();
    MultiPoly q = x * x * x + lin() * x + lin();
    if (trial % 3 == 0) {
      MultiPoly shared = x - lin();
      p = p * shared;
      q = q * shared;
    }
    MultiPoly r = resultant(p, q, Var::x);
    for (int tv = -2; tv <= 2; ++tv) {
      auto ps = p.substitute(Var::t, MultiPoly(Rat(tv))).to_upoly(Var::x);
      auto qs = q.substitute(Var::t, MultiPoly(Rat(tv))).to_upoly(Var::x);
      if (ps.degree() != p.degree(Var::x) || qs.degree() != q.degree(Var::x)) continue;
      bool shared = gcd(ps, qs).degree() > 0;
      bool vanish = r.substitute(Var::t, MultiPoly(Rat(tv))).is_zero();
      CHECK(shared == vanish);
      common += shared;
    }
  }
  CHECK(common > 0);
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(P("2x^2 - 3x + 1")) == std::set<Rat>{Rat(1), rat(1, 2)});
  CHECK(rational_roots(P("x^2 + 1")).empty());
  CHECK(rational_roots(P("x^2 - 89/12 x + 30625/2304")).empty());
  Rat disc = rat(89, 12) * rat(89, 12) - 4 * rat(30625, 2304);
  CHECK(disc == rat(353, 192));
  CHECK_FALSE(rational_sqrt(disc));
  CHECK(rational_roots(P("t^3 - t")) == std::set<Rat>{Rat(-1), Rat(0), Rat(1)});
  CHECK_THROWS(rational_roots(MultiPoly()));
}

TEST_CASE("quadratic extension evaluation") {
  QuadExtPoint pt{rat(89, 12), rat(30625, 2304)};
  QuadElem sum = quadext_eval(P("t + u"), pt, Var::t, Var::u);
  CHECK(sum.a == rat(89, 12));
  CHECK(sum.b == 0);
  QuadElem prod = quadext_eval(P("t u"), pt, Var::t, Var::u);
  CHECK(prod.a == rat(30625, 2304));
  CHECK(prod.b == 0);
  CHECK(quadext_eval(P("t^2 - 89/12 t + 30625/2304"), pt, Var::t, Var::u).is_zero());
  CHECK_THROWS(quadext_eval(P("t"), pt, Var::t, Var::t));
}
