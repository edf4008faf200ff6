#include "doctest.h"
#include "voaf/vertexops.hpp"
#include "voaf/zhu.hpp"

using namespace voaf;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

FockVector hh() { return parse_state("h(-3)h(-1)|0>"); }

FockVector combo(const WordCombo& c, const FockVector& g) {
  FockVector out(g.sector());
  for (const auto& [k, ms] : c) out += k * apply_word(ms, g);
  return out;
}

// v' (x) [element * v_M] (x) v for M(1)^-, mapped to x, y, z
MultiPoly direct_relation(const ModuleLabel& m) {
  FockVector v = m.top_vector();
  ContractionElement c = contraction_eval(m, star_left(hh(), v), {v});
  REQUIRE(c.denominator == MultiPoly(Rat(1)));
  return P("z - 4x^2 - 17x") + c.coefficient(0).scaled(Rat(9));
}

bool same_up_to_phase(const PhiImage& a, const FockVector& bv, const Phase& bp) {
  int sign = (bp * a.phase.inverse()).real_sign();
  if (sign == 0) return a.vector.is_zero() && bv.is_zero();
  return a.vector == Scalar(Rat(sign)) * bv;
}

Scalar o_top(const FockVector& a, const ModuleLabel& m) {
  Scalar out;
  for (const auto& [d, c] : a.components()) out += top_eigenvalue(c, m);
  return out;
}

}  // namespace

TEST_CASE("trivial Zhu products") {
  FockVector one = FockVector::vacuum(Sector::untwisted());
  for (const char* s : {"h(-2)h(-1)e^lam", "h(-1)^3|0>"}) {
    FockVector u = parse_state(s, Rat(3));
    if (u.sector() != Sector::lambda(Rat(3))) u = parse_state(s);
    CHECK(star_left(one, u) == u);
    CHECK(star_right(u, one) == u);
    CHECK(circ(one, u).is_zero());
  }
  FockVector t = parse_state("h(-3/2)h(-1/2) 1theta");
  CHECK(star_left(one, t) == t);
  CHECK(star_right(t, one) == t);
}

TEST_CASE("omega products on e^lam") {
  for (auto sec : {Sector::lambda(Rat(3)), Sector::lambda(rat(1, 2)), Sector::lambda_formal()}) {
    FockVector e = FockVector::vacuum(sec);
    FockVector w = omega_state();
    CHECK(star_left(w, e) == L(-2, e) + Scalar(Rat(2)) * L(-1, e) + L(0, e));
    CHECK(circ(w, e) == L(-3, e) + Scalar(Rat(2)) * L(-2, e) + L(-1, e));
    CHECK(star_right(e, w) == L(-2, e) + L(-1, e));
    FockVector u = L(-1, e);
    CHECK(star_left(w, u) - star_right(u, w) == L(-1, u) + L(0, u));
  }
}

TEST_CASE("h(-3)h(-1)1 * v_M in M(1)^-") {
  ModuleLabel m = ModuleLabel::m_minus();
  FockVector v = m.top_vector();
  WordCombo expected = {{Scalar(Rat(3)), {}},
                        {Scalar(Rat(12)), {1}},
                        {Scalar(Rat(12)), {1, 1}},
                        {Scalar(Rat(-8)), {3}},
                        {Scalar(Rat(16)), {2, 1}},
                        {Scalar(rat(-1, 2)), {4}},
                        {Scalar(rat(1, 4)), {3, 1}},
                        {Scalar(rat(3, 2)), {2, 1, 1}}};
  FockVector lhs = star_left(hh(), v);
  FockVector rhs = combo(expected, v);
  CHECK(lhs == rhs);
  DescendantCoords c = express_components(lhs, {v});
  // level 3 carries the singular vector, so the tie-break picks the coordinates
  CHECK_FALSE(c.unique);
  REQUIRE(c.coords.size() == expected.size());
  for (const auto& [k, ms] : expected) CHECK(c.coords.at(DescendantWord{ms, 0}) == k);
}

TEST_CASE("O(M(1)^+) membership of the J relation") {
  ModuleLabel m = ModuleLabel::m_plus();
  FockVector w = omega_state();
  FockVector rel = j_state() - Scalar(Rat(4)) * star_left(w, w) - Scalar(Rat(17)) * w + Scalar(Rat(9)) * hh();
  Membership res = o_membership(rel, m, 5);
  REQUIRE(res.member);
  FockVector rebuilt(rel.sector());
  for (const auto& t : res.witness)
    rebuilt += t.coefficient * circ(FockVector::basis(Sector::untwisted(), t.a), FockVector::basis(rel.sector(), t.u));
  CHECK(rebuilt == rel);
  CHECK(o_membership(FockVector(Sector::untwisted()), m, 3).member);
  // the vacuum is never in O(V)
  CHECK_FALSE(o_membership(FockVector::vacuum(Sector::untwisted()), m, 5).member);
}

TEST_CASE("L(-n) rewrite lands in O(M)") {
  FockVector w = omega_state();
  for (const auto& m : {ModuleLabel::m_plus(), ModuleLabel::m_minus()}) {
    Sector sec = m.sector();
    for (int d = 0; d <= 3; ++d)
      for (const auto& p : basis_at_degree(sec, Rat(d))) {
        if (!m.contains(p)) continue;
        FockVector v = FockVector::basis(sec, p);
        Rat wt = conformal_weight(v);
        for (int n = 1; d + n <= 4; ++n) {
          FockVector r = star_left(w, v) - Scalar(Rat(n)) * star_right(v, w) - Scalar(wt) * v;
          if (n % 2 == 0) r = -r;
          FockVector diff = L(-n, v) - r;
          CAPTURE(m.name());
          CAPTURE(v.to_string());
          CAPTURE(n);
          CHECK(o_membership(diff, m, 5).member);
        }
      }
  }
}

TEST_CASE("phi") {
  FockVector v = parse_state("h(-1)|0>");
  PhiImage im = phi(v);
  CHECK(im.phase.real_sign() == -1);
  CHECK(im.vector == v);
  ModuleLabel tm = ModuleLabel::theta_plus();
  FockVector u49 = parse_state("9 h(-5/2)h(-1/2) 1theta - 5 h(-3/2)^2 1theta - 10 h(-3/2)h(-1/2)^3 1theta + 4 h(-1/2)^6 1theta");
  REQUIRE(is_lowest_weight(u49));
  PhiImage p49 = phi(u49);
  CHECK(p49.phase == Phase(rat(49, 16)));
  CHECK(p49.vector == u49);
  CHECK(p49.phase == Phase(Rat(1)) * Phase(rat(1, 16)));
  for (const auto& m : {ModuleLabel::m_plus(), ModuleLabel::m_minus(), ModuleLabel::theta_plus(), ModuleLabel::theta_minus()}) {
    PhiImage t = phi(m.top_vector());
    CHECK(t.phase == Phase(m.top_weight().to_rat()));
    CHECK(t.vector == m.top_vector());
  }
  // e^{L(1)} acts on non-lowest-weight vectors
  FockVector x = parse_state("h(-2)|0>");
  CHECK(phi(x).vector == x + L(1, x));
  CHECK(L(1, x) == parse_state("2 h(-1)|0>"));
}

TEST_CASE("phi reverses Zhu products") {
  std::vector<FockVector> as = {omega_state(), j_state()};
  for (const auto& m : {ModuleLabel::m_plus(), ModuleLabel::m_minus()}) {
    FockVector v = m.top_vector();
    for (const auto& u : {v, L(-1, v), L(-2, v)}) {
      if (u.is_zero()) continue;
      for (const auto& a : as) {
        PhiImage pa = phi(a), pu = phi(u);
        CAPTURE(m.name());
        CAPTURE(u.to_string());
        CHECK(same_up_to_phase(phi(star_left(a, u)), star_right(pu.vector, pa.vector), pu.phase * pa.phase));
        CHECK(same_up_to_phase(phi(circ(a, u)), -circ(pa.vector, pu.vector), pa.phase * pu.phase));
      }
    }
  }
}

TEST_CASE("descendant polynomials") {
  CHECK(descendant_to_poly({}, MultiPoly(Rat(1))) == MultiPoly(Rat(1)));
  CHECK(descendant_to_poly({2}, MultiPoly(Rat(1))) == P("-(x - 2y - 1)"));
  CHECK(descendant_to_poly({3, 1}, MultiPoly(Rat(0))) == P("(x - 3y - 1)(x - y)"));
  CHECK(descendant_to_poly({1}, P("s/2")) == P("x - y - 1/2 s"));
}

TEST_CASE("contraction polynomials for M(1)^-") {
  ModuleLabel m = ModuleLabel::m_minus();
  FockVector v = m.top_vector();
  ContractionElement unit = contraction_eval(m, v, {v});
  CHECK(unit.coefficient(0) == MultiPoly(Rat(1)));

  MultiPoly f = direct_relation(m);
  // the reference form has + 9/4 and - 12y^2; both signs flip
  CHECK(f == P("z - 4x^2 + x - 9/4 (x - y)(6x^2 - 18x y + 12y^2 - 21x - 23y + 11)"));

  WordCombo sing = {{Scalar(Rat(2)), {3}}, {Scalar(Rat(-4)), {2, 1}}, {Scalar(Rat(1)), {1, 1, 1}}};
  CHECK(singular_vector_image(sing, v).is_zero());
  MultiPoly g(Rat(0));
  for (const auto& [k, ms] : sing) g += descendant_to_poly(ms, MultiPoly(Rat(1))).scaled(k.to_rat());
  // g is taken as g(a_N, a_L)
  MultiPoly g_reference = P("(x - y)(x^2 - 2x y + y^2 - 2x - 2y + 1)/2").rename({{Var::x, Var::y}, {Var::y, Var::x}});
  auto k = proportionality(g, g_reference);
  REQUIRE(k);
  CHECK(*k == Rat(-2));

  // symmetric combination of the direct and mirrored relations
  auto at = [](const MultiPoly& p, const char* x, const char* y, const char* z) {
    return p.substitute(Var::x, P(x)).substitute(Var::y, P(y)).substitute(Var::z, P(z));
  };
  MultiPoly sum = at(f, "s/2", "t/2", "s^2 - s/2") + at(f, "t/2", "s/2", "t^2 - t/2");
  CHECK(sum == P("9/16 (s - t)^2 (3s + 3t - 2)"));
  // downstream specializations agree with the reference factorizations up to a constant
  auto factor_match = [&](const MultiPoly& p, const char* reference) {
    auto k = proportionality(p, P(reference));
    CHECK(k);
  };
  factor_match(at(f, "s/2", "1/16", "s^2 - s/2"), "(8s - 1)(32s^2 - 236s + 205)");
  factor_match(at(f, "1/16", "s/2", "3/128"), "(8s - 9)(384s^2 - 1160s + 131)");
  factor_match(at(f, "s/2", "9/16", "s^2 - s/2"), "(8s - 9)(96s^2 - 996s + 119)");
  factor_match(at(f, "9/16", "s/2", "-45/128"), "(8s - 1)(384s^2 - 2504s + 2211)");
}

TEST_CASE("Zhu algebra ideal vanishes on top levels") {
  MultiPoly i1 = P("(y - 4x^2 + x)(70y + 908x^2 - 515x + 27)");
  MultiPoly i2 = P("(y - 4x^2 + x)(x - 1)(x - 1/16)(x - 9/16)");
  for (const auto& m : {ModuleLabel::m_plus(), ModuleLabel::m_minus(), ModuleLabel::theta_plus(),
                        ModuleLabel::theta_minus(), ModuleLabel::m_lambda(Rat(5))}) {
    std::map<Var, Scalar> at = {{Var::x, m.top_weight()}, {Var::y, m.top_j_value()}};
    CHECK(poly_eval(i1, at).is_zero());
    CHECK(poly_eval(i2, at).is_zero());
  }
  for (const auto& i : {i1, i2}) {
    MultiPoly r = i.substitute(Var::x, P("s/2")).substitute(Var::y, P("s^2 - s/2"));
    CHECK(r.is_zero());
  }
}

TEST_CASE("o is multiplicative on top levels") {
  std::vector<FockVector> as = {omega_state(), j_state()};
  for (const auto& m : {ModuleLabel::m_plus(), ModuleLabel::m_minus(), ModuleLabel::theta_plus(),
                        ModuleLabel::theta_minus(), ModuleLabel::m_lambda(rat(7, 3)),
                        ModuleLabel::m_lambda_formal()}) {
    for (const auto& a : as)
      for (const auto& b : as) {
        CAPTURE(m.name());
        CHECK(o_top(star_left(a, b), m) == top_eigenvalue(a, m) * top_eigenvalue(b, m));
      }
  }
}
