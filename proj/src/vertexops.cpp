#include "voaf/vertexops.hpp"

#include <functional>

namespace voaf {

namespace {

using Graded = std::map<int, FockVector>;  // z-exponent in half-units -> vector

int max_halves(const FockVector& v) { return v.is_zero() ? -1 : v.terms().rbegin()->first.weight_halves(); }

void accumulate(Graded& g, int e, const FockVector& v) {
  if (v.is_zero()) return;
  auto it = g.find(e);
  if (it == g.end()) {
    g.emplace(e, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) g.erase(it);
}

// coefficient C(-j-1, k) of h(j) in the k-th divided derivative of h(z); J = 2j
Rat deriv_coeff(int J, int k) { return binomial(rat(-J - 2, 2), k); }

// z-exponent (half-units) attached to h(j) in the k-th divided derivative
int deriv_exponent(int J, int k) { return -J - 2 - 2 * k; }

int min_creation_exponent(const Sector& sec, int k) { return sec.is_twisted() ? -1 - 2 * k : 0; }

Graded apply_e_plus(Graded in, const Scalar& lam, const Sector& sec) {
  if (lam.is_zero()) return in;
  int top = -1;
  for (const auto& [e, v] : in) top = std::max(top, max_halves(v));
  for (int N = 1; N <= top; ++N) {
    if (!sec.legal_half(N)) continue;
    Scalar step = -lam * Scalar(rat(2, N));
    Graded next;
    for (const auto& [e, v] : in) {
      FockVector term = v;
      Scalar coef(Rat(1));
      for (int k = 0; !term.is_zero(); ++k) {
        accumulate(next, e - k * N, coef * term);
        term = apply_mode_halves(N, term);
        coef = coef * step * Scalar(rat(1, k + 1));
      }
    }
    in = std::move(next);
  }
  return in;
}

Graded apply_annihilator(const Graded& in, int k, const Sector& sec) {
  Graded out;
  for (const auto& [e, v] : in) {
    int top = max_halves(v);
    for (int J = 1; J <= top; ++J) {
      if (!sec.legal_half(J)) continue;
      FockVector w = apply_mode_halves(J, v);
      if (w.is_zero()) continue;
      accumulate(out, e + deriv_exponent(J, k), Scalar(deriv_coeff(J, k)) * w);
    }
  }
  return out;
}

struct CreationSide {
  const Sector& sec;
  Scalar lam;
  int target;
  FockVector& out;

  void e_minus(const FockVector& v, int remaining, int N, const Scalar& coef) {
    if (remaining == 0) {
      out += coef * v;
      return;
    }
    if (lam.is_zero() || N > remaining) return;
    e_minus(v, remaining, N + 1, coef);
    if (!sec.legal_half(N)) return;
    Scalar step = lam * Scalar(rat(2, N));
    FockVector w = v;
    Scalar c = coef;
    for (int j = 1; j * N <= remaining; ++j) {
      w = apply_mode_halves(-N, w);
      c = c * step * Scalar(rat(1, j));
      e_minus(w, remaining - j * N, N + 1, c);
    }
  }

  void factors(const FockVector& v, int e, const std::vector<int>& ks, size_t idx, int min_rest) {
    if (idx == ks.size()) {
      if (e <= target) e_minus(v, target - e, 1, Scalar(Rat(1)));
      return;
    }
    int k = ks[idx];
    int rest = min_rest - min_creation_exponent(sec, k);
    for (int J = -1;; --J) {
      if (!sec.legal_half(-J)) continue;
      int E = deriv_exponent(J, k);
      if (e + E + rest > target) break;
      Rat c = deriv_coeff(J, k);
      if (c == 0) continue;
      factors(Scalar(c) * apply_mode_halves(J, v), e + E, ks, idx + 1, rest);
    }
  }
};

// field of a single Fock basis state of M(1, lam) on u, coefficient of z^{base + T/2}
FockVector field_single(const Partition& part, const Scalar& lam, int T, const FockVector& u) {
  const Sector& usec = u.sector();
  bool tw = usec.is_twisted();
  Sector out_sector = tw ? Sector::twisted() : Sector::untwisted(lam + usec.momentum());
  FockVector out(out_sector);

  std::vector<std::pair<int, int>> groups;  // (derivative order, count)
  for (auto [depth, mult] : part.parts()) groups.emplace_back(static_cast<int>(to_long(depth)) - 1, mult);

  Graded start;
  start.emplace(0, u);
  start = apply_e_plus(std::move(start), lam, usec);

  std::vector<int> creation;
  std::function<void(size_t, const Graded&, const Rat&)> choose = [&](size_t g, const Graded& state, const Rat& mult) {
    if (state.empty()) return;
    if (g == groups.size()) {
      int min_total = 0;
      for (int k : creation) min_total += min_creation_exponent(usec, k);
      FockVector acc(out_sector);
      CreationSide side{out_sector, lam, T, acc};
      for (const auto& [e, v] : state) {
        if (e + min_total > T) continue;
        side.factors(v.with_sector(out_sector), e, creation, 0, min_total);
      }
      out += Scalar(mult) * acc;
      return;
    }
    auto [k, count] = groups[g];
    Graded ann = state;
    for (int na = 0; na <= count; ++na) {
      if (na > 0) ann = apply_annihilator(ann, k, usec);
      if (ann.empty()) break;
      for (int nz = 0; nz <= count - na; ++nz) {
        if (tw && nz > 0) break;
        int nc = count - na - nz;
        Rat m = mult * factorial(count) / (factorial(na) * factorial(nz) * factorial(nc));
        Graded cur;
        if (nz == 0) {
          cur = ann;
        } else {
          Scalar zf = usec.momentum();
          if (k % 2) zf = -zf;
          zf = zf.pow(nz);
          if (zf.is_zero()) continue;
          for (const auto& [e, v] : ann) accumulate(cur, e + nz * (-2 - 2 * k), zf * v);
        }
        for (int c = 0; c < nc; ++c) creation.push_back(k);
        choose(g + 1, cur, m);
        for (int c = 0; c < nc; ++c) creation.pop_back();
      }
    }
  };
  choose(0, start, Rat(1));
  return out;
}

int to_halves(const Rat& r) {
  Rat t = 2 * r;
  if (!is_integer(t)) throw MathError("exponent offset is not in Z/2: " + to_string(r));
  return static_cast<int>(to_long(t));
}

}  // namespace

Rat CmnTable::at(int m, int n) const {
  if (m + n > cutoff) throw MathError("c_mn requested beyond the table cutoff");
  auto it = c.find({m, n});
  return it == c.end() ? Rat(0) : it->second;
}

CmnTable cmn(int cutoff) {
  int D = cutoff;
  using Series = std::vector<std::vector<Rat>>;  // [i][j], i + j <= D
  auto zero = [&]() { return Series(D + 1, std::vector<Rat>(D + 1, Rat(0))); };
  auto mul = [&](const Series& a, const Series& b) {
    Series r = zero();
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j) {
        if (a[i][j] == 0) continue;
        for (int k = 0; i + k <= D; ++k)
          for (int l = 0; j + l <= D - i - k; ++l)
            if (b[k][l] != 0) r[i + k][j + l] += a[i][j] * b[k][l];
      }
    return r;
  };
  // A = ((1+x)^{1/2} - 1 + (1+y)^{1/2} - 1) / 2, no constant term
  Series A = zero();
  for (int k = 1; k <= D; ++k) {
    Rat b = binomial(rat(1, 2), k) / 2;
    A[k][0] += b;
    A[0][k] += b;
  }
  // -log(1 + A) = sum_j (-1)^j A^j / j
  Series total = zero(), power = A;
  for (int j = 1; j <= D; ++j) {
    Rat f = (j % 2 ? Rat(-1) : Rat(1)) / j;
    for (int a = 0; a <= D; ++a)
      for (int b = 0; a + b <= D; ++b) total[a][b] += f * power[a][b];
    power = mul(power, A);
  }
  CmnTable t;
  t.cutoff = cutoff;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b)
      if (total[a][b] != 0) t.c[{a, b}] = total[a][b];
  return t;
}

std::map<int, FockVector> exp_delta(const FockVector& a) {
  std::map<int, FockVector> result;
  if (a.is_zero()) return result;
  if (a.sector().is_twisted()) throw MathError("Delta_z acts on untwisted states");
  int D = static_cast<int>(to_long(a.max_degree()));
  CmnTable table = cmn(std::max(D, 1));
  Graded cur;
  cur.emplace(0, a);
  for (const auto& [d, v] : cur) result.emplace(d, v);
  for (int k = 1; !cur.empty(); ++k) {
    Graded next;
    for (const auto& [d, v] : cur) {
      int top = static_cast<int>(to_long(v.max_degree()));
      for (int m = 0; m <= top; ++m)
        for (int n = 0; m + n <= top; ++n) {
          if (m + n == 0) continue;
          Rat c = table.at(m, n);
          if (c == 0) continue;
          FockVector w = apply_mode_halves(2 * m, apply_mode_halves(2 * n, v));
          accumulate(next, d + m + n, Scalar(c / k) * w);
        }
    }
    for (const auto& [d, v] : next) {
      auto it = result.find(d);
      if (it == result.end()) result.emplace(d, v);
      else it->second += v;
    }
    cur = std::move(next);
  }
  for (auto it = result.begin(); it != result.end();) it = it->second.is_zero() ? result.erase(it) : std::next(it);
  return result;
}

FockVector field_coefficient(const FockVector& a, const Rat& offset, const FockVector& u) {
  if (a.sector().is_twisted()) throw MathError("field states must be untwisted");
  const Sector& usec = u.sector();
  Scalar lam = a.sector().momentum();
  Sector out_sector = usec.is_twisted() ? Sector::twisted() : Sector::untwisted(lam + usec.momentum());
  FockVector out(out_sector);
  int T = to_halves(offset);
  if (!usec.is_twisted() && T % 2 != 0) return out;
  if (u.is_zero() || a.is_zero()) return out;
  if (usec.is_twisted()) {
    for (const auto& [d, b] : exp_delta(a))
      for (const auto& [p, c] : b.terms()) out += c * field_single(p, lam, T + 2 * d, u);
    return out;
  }
  for (const auto& [p, c] : a.terms()) out += c * field_single(p, lam, T, u);
  return out;
}

FockVector untwisted_mode(const FockVector& a, const Rat& n, const FockVector& u) {
  if (u.sector().is_twisted()) throw MathError("untwisted_mode needs an untwisted target");
  Scalar base = a.sector().momentum() * u.sector().momentum();
  if (!base.is_rational()) throw MathError("mode index is not addressable: lambda*mu is irrational");
  Rat offset = -n - 1 - base.to_rat();
  if (!is_integer(offset)) throw MathError("ill-indexed mode: n - lambda*mu is not an integer");
  return field_coefficient(a, offset, u);
}

FockVector twisted_mode(const FockVector& a, const Rat& n, const FockVector& u) {
  if (!u.sector().is_twisted()) throw MathError("twisted_mode needs a twisted target");
  Scalar lam = a.sector().momentum();
  Scalar half_sq = Scalar(rat(1, 2)) * lam * lam;
  if (!half_sq.is_rational()) throw MathError("mode index is not addressable: lambda^2 is irrational");
  return field_coefficient(a, -n - 1 + half_sq.to_rat(), u);
}

FockVector mode(const FockVector& a, const Rat& n, const FockVector& u) {
  return u.sector().is_twisted() ? twisted_mode(a, n, u) : untwisted_mode(a, n, u);
}

FockVector omega_state() { return parse_state("1/2 h(-1)^2|0>"); }

FockVector j_state() { return parse_state("h(-1)^4|0> - 2 h(-3)h(-1)|0> + 3/2 h(-2)^2|0>"); }

ZeroModeBlock zero_mode(const FockVector& a, const ModuleLabel& module, const Rat& cutoff) {
  auto wt = a.homogeneous_degree();
  if (!wt) throw MathError("zero_mode needs a homogeneous state");
  if (!a.sector().momentum().is_zero() || a.sector().is_twisted()) throw MathError("zero_mode needs a state of M(1)");
  Sector sec = module.sector();
  ZeroModeBlock block;
  for (Rat d(0); d <= cutoff; d += rat(1, 2))
    for (auto& p : basis_at_degree(sec, d))
      if (module.contains(p)) block.basis.push_back(p);
  size_t n = block.basis.size();
  block.matrix.assign(n, std::vector<Scalar>(n, Scalar()));
  for (size_t j = 0; j < n; ++j) {
    FockVector img = mode(a, *wt - 1, FockVector::basis(sec, block.basis[j]));
    for (size_t i = 0; i < n; ++i) block.matrix[i][j] = img.coefficient(block.basis[i]);
  }
  return block;
}

Scalar top_eigenvalue(const FockVector& a, const ModuleLabel& module) {
  auto wt = a.homogeneous_degree();
  if (!wt) throw MathError("top_eigenvalue needs a homogeneous state");
  FockVector v = module.top_vector();
  FockVector img = mode(a, *wt - 1, v);
  const Partition& p = v.terms().begin()->first;
  Scalar c = img.coefficient(p) / v.terms().begin()->second;
  if (img != c * v) throw MathError("top level is not an eigenvector");
  return c;
}

}  // namespace voaf
