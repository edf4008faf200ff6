#include "voaf/zhu.hpp"

#include <nlohmann/json.hpp>

#include "voaf/linalg.hpp"
#include "voaf/vertexops.hpp"

namespace voaf {

namespace {

long state_weight(const FockVector& a) {
  if (a.sector().is_twisted() || !a.sector().momentum().is_zero()) throw MathError("Zhu products need a state of M(1)");
  auto wt = a.homogeneous_degree();
  if (!wt) throw MathError("Zhu products need a homogeneous state");
  return to_long(*wt);
}

FockVector zero_like(const FockVector& u) { return FockVector(u.sector()); }

}  // namespace

FockVector residue_product(const FockVector& a, const FockVector& u, int m, int n) {
  if (a.is_zero()) return zero_like(u);
  long wt = state_weight(a);
  FockVector out = zero_like(u);
  for (long i = 0; i <= wt + m; ++i) {
    Rat c = binomial(Rat(wt + m), i);
    if (c == 0) continue;
    out += Scalar(c) * mode(a, Rat(i - 2 - n), u);
  }
  return out;
}

FockVector star_left(const FockVector& a, const FockVector& u) { return residue_product(a, u, 0, -1); }

FockVector circ(const FockVector& a, const FockVector& u) { return residue_product(a, u, 0, 0); }

FockVector star_right(const FockVector& u, const FockVector& a) {
  if (a.is_zero() || u.is_zero()) return zero_like(u);
  long wt = state_weight(a);
  long top = wt + static_cast<long>(to_long(floor_rat(u.max_degree())));
  FockVector out = zero_like(u);
  for (long i = 0; i <= top; ++i) {
    Rat c = binomial(Rat(wt - 1), i);
    if (c == 0) continue;
    out += Scalar(c) * mode(a, Rat(i - 1), u);
  }
  return out;
}

Membership o_membership(const FockVector& v, const ModuleLabel& module, int W) {
  Membership res;
  if (v.is_zero()) {
    res.member = true;
    return res;
  }
  Sector sec = module.sector();
  if (v.sector() != sec) throw MathError("vector does not belong to the module");
  std::vector<Partition> basis;
  Rat step = sec.is_twisted() ? rat(1, 2) : Rat(1);
  for (Rat d(0); d <= W; d += step)
    for (auto& p : basis_at_degree(sec, d))
      if (module.contains(p)) basis.push_back(p);
  std::map<Partition, int, PartitionOrder> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
  auto coords = [&](const FockVector& w) -> std::optional<std::vector<Scalar>> {
    std::vector<Scalar> c(basis.size(), Scalar());
    for (const auto& [p, x] : w.terms()) {
      auto it = index.find(p);
      if (it == index.end()) return std::nullopt;
      c[it->second] = x;
    }
    return c;
  };
  auto target = coords(v);
  if (!target) return res;

  std::vector<CircTerm> gens;
  std::vector<std::vector<Scalar>> cols;
  for (int wa = 1; wa <= W; ++wa)
    for (auto& a : basis_at_degree(Sector::Kind::untwisted, Rat(wa))) {
      if (a.length() % 2) continue;
      FockVector av = FockVector::basis(Sector::untwisted(), a);
      for (const auto& u : basis) {
        if (wa + u.weight() + 1 > W) continue;
        FockVector c = circ(av, FockVector::basis(sec, u));
        if (c.is_zero()) continue;
        auto col = coords(c);
        if (!col) continue;
        gens.push_back({Scalar(Rat(1)), a, u});
        cols.push_back(std::move(*col));
      }
    }
  auto sol = solve_columns(cols, *target);
  if (!sol) return res;
  res.member = true;
  for (size_t j = 0; j < gens.size(); ++j)
    if (!(*sol)[j].is_zero()) res.witness.push_back({(*sol)[j], gens[j].a, gens[j].u});
  return res;
}

MultiPoly descendant_to_poly(const std::vector<int>& ms, const MultiPoly& base_weight) {
  MultiPoly x = MultiPoly::var(Var::x), y = MultiPoly::var(Var::y);
  MultiPoly out(Rat(1));
  int tail = 0;
  for (int i = static_cast<int>(ms.size()) - 1; i >= 0; --i) {
    MultiPoly f = x - y.scaled(Rat(ms[i])) - MultiPoly(Rat(tail)) - base_weight;
    if (ms[i] % 2 == 0) f = -f;
    out = f * out;
    tail += ms[i];
  }
  return out;
}

Rat conformal_weight(const FockVector& v) {
  auto d = v.homogeneous_degree();
  if (!d) throw MathError("conformal weight needs a homogeneous vector");
  Scalar w = v.sector().offset() + Scalar(*d);
  if (!w.is_rational()) throw MathError("conformal weight is not rational");
  return w.to_rat();
}

PhiImage phi(const FockVector& v) {
  PhiImage out{FockVector(v.sector()), Phase()};
  if (v.is_zero()) return out;
  Scalar offset = v.sector().offset();
  if (!offset.is_rational()) throw MathError("phi needs a rational conformal weight");
  auto comps = v.components();
  Rat ref = offset.to_rat() + comps.begin()->first;
  out.phase = Phase(ref);
  FockVector folded(v.sector());
  for (const auto& [d, c] : comps) {
    int sign = Phase(offset.to_rat() + d - ref).real_sign();
    if (sign == 0) throw MathError("phi: components are not separated by integral weights");
    folded += Scalar(Rat(sign)) * c;
  }
  // e^{L(1)}
  FockVector term = folded;
  out.vector = folded;
  for (int k = 1; !term.is_zero(); ++k) {
    term = Scalar(rat(1, k)) * L(1, term);
    out.vector += term;
  }
  return out;
}

MultiPoly ContractionElement::coefficient(int g) const {
  auto it = coeffs.find(g);
  return it == coeffs.end() ? MultiPoly() : it->second;
}

std::string ContractionElement::to_json(const std::vector<std::string>& names) const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [g, p] : coeffs) {
    std::string name = g < static_cast<int>(names.size()) ? names[g] : "g" + std::to_string(g);
    j.push_back({{"generator", name}, {"poly", p.to_string()}, {"denominator", denominator.to_string()}});
  }
  return j.dump();
}

namespace {

MultiPoly generator_weight(const FockVector& g) {
  auto d = g.homogeneous_degree();
  if (!d) throw MathError("generator is not homogeneous");
  Scalar off = g.sector().offset();
  if (off.is_rational()) return MultiPoly(off.to_rat() + *d);
  // formal M(1, lambda): offset lam^2/2 = s/2
  return MultiPoly::var(Var::s).scaled(rat(1, 2)) + MultiPoly(*d);
}

UPoly lcm(const UPoly& a, const UPoly& b) { return divmod(a * b, gcd(a, b)).first.monic(); }

}  // namespace

ContractionElement contraction_eval(const ModuleLabel& module, const FockVector& element,
                                    const std::vector<FockVector>& generators) {
  (void)module;
  ContractionElement out;
  DescendantCoords coords = express_components(element, generators);
  struct Piece {
    int g;
    MultiPoly f;
    UPoly num, den;
  };
  std::vector<Piece> pieces;
  UPoly common(Rat(1));
  for (const auto& [w, c] : coords.coords) {
    MultiPoly f = descendant_to_poly(w.ms, generator_weight(generators.at(w.generator)));
    UPoly num, den(Rat(1));
    if (c.is_rational()) {
      num = UPoly(c.to_rat());
    } else if (c.modulus()) {
      throw MathError("contraction coefficient is irrational: " + c.to_string());
    } else {
      std::tie(num, den) = c.as_function_of_s();
    }
    common = lcm(common, den);
    pieces.push_back({w.generator, f, num, den});
  }
  for (auto& p : pieces) {
    UPoly scale = divmod(common, p.den).first * p.num;
    MultiPoly term = p.f * MultiPoly::from_upoly(scale, Var::s);
    out.coeffs[p.g] += term;
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
  out.denominator = MultiPoly::from_upoly(common, Var::s);
  return out;
}

namespace {

MultiPoly weight_value(const ModuleLabel& m, Var formal_var) {
  if (m.is_formal()) return MultiPoly::var(formal_var).scaled(rat(1, 2));
  return MultiPoly(m.top_weight().to_rat());
}

}  // namespace

ContractionElement contraction_eval(const ModuleLabel& M, const ModuleLabel& N, const ModuleLabel& L,
                                    const FockVector& element, const std::vector<FockVector>& generators) {
  ContractionElement c = contraction_eval(M, element, generators);
  MultiPoly xv = weight_value(L, Var::t), yv = weight_value(N, Var::u);
  for (auto& [g, p] : c.coeffs) p = p.substitute(Var::x, xv).substitute(Var::y, yv);
  return c;
}

}  // namespace voaf
