#include "voaf/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace voaf {

char var_name(Var v) {
  static const char names[] = {'x', 'y', 'z', 's', 't', 'u', 'w'};
  return names[static_cast<int>(v)];
}

Var var_from_name(char c) {
  switch (c) {
    case 'x': return Var::x;
    case 'y': return Var::y;
    case 'z': return Var::z;
    case 's': return Var::s;
    case 't': return Var::t;
    case 'u': return Var::u;
    case 'w': return Var::w;
    default: throw MathError(std::string("unknown variable ") + c);
  }
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = 0, db = 0;
  for (int i = 0; i < kNumVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  for (int i = 0; i < kNumVars; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MultiPoly::MultiPoly(const Rat& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::var(Var v) {
  Monomial m{};
  m[static_cast<int>(v)] = 1;
  return term(Rat(1), m);
}

MultiPoly MultiPoly::term(const Rat& c, const Monomial& m) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

MultiPoly MultiPoly::from_upoly(const UPoly& p, Var v) {
  MultiPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] == 0) continue;
    Monomial m{};
    m[static_cast<int>(v)] = k;
    out.terms_.emplace(m, p[k]);
  }
  return out;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rat MultiPoly::constant_value() const {
  if (!is_constant()) throw MathError("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

int MultiPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
  return d;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Monomial& m = terms_.rbegin()->first;
  int d = 0;
  for (int e : m) d += e;
  return d;
}

std::set<Var> MultiPoly::variables() const {
  std::set<Var> out;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < kNumVars; ++i)
      if (m[i] > 0) out.insert(static_cast<Var>(i));
  return out;
}

std::pair<Monomial, Rat> MultiPoly::leading() const {
  if (terms_.empty()) throw MathError("leading term of zero polynomial");
  return *terms_.rbegin();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
      Rat c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  if (c == 0) return MultiPoly();
  MultiPoly r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw MathError("negative polynomial power");
  MultiPoly out(Rat(1)), b = *this;
  while (k) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  int d = degree(v);
  std::vector<MultiPoly> out(std::max(d + 1, 0));
  int vi = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    r[vi] = 0;
    out[m[vi]].terms_.emplace(r, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  auto cs = coefficients_in(v);
  MultiPoly out;
  for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k) out = out * value + cs[k];
  return out;
}

MultiPoly MultiPoly::rename(const std::map<Var, Var>& mapping) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial r{};
    for (int i = 0; i < kNumVars; ++i) {
      auto it = mapping.find(static_cast<Var>(i));
      int j = it == mapping.end() ? i : static_cast<int>(it->second);
      r[j] += m[i];
    }
    out += term(c, r);
  }
  return out;
}

UPoly MultiPoly::to_upoly(Var v) const {
  std::vector<Rat> c(std::max(degree(v) + 1, 0), Rat(0));
  for (const auto& [m, val] : terms_) {
    for (int i = 0; i < kNumVars; ++i)
      if (i != static_cast<int>(v) && m[i] != 0) throw MathError("polynomial is not univariate: " + to_string());
    c[m[static_cast<int>(v)]] = val;
  }
  return UPoly(std::move(c));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m == Monomial{};
    if (a != 1 || constant) {
      os << voaf::to_string(a);
      if (!constant) os << " * ";
    }
    bool first_var = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << " ";
      first_var = false;
      os << var_name(static_cast<Var>(i));
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  std::string_view t;
  size_t i = 0;

  void skip() {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  }
  bool peek(char c) {
    skip();
    return i < t.size() && t[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }
  bool starts_atom() {
    skip();
    if (i >= t.size()) return false;
    char c = t[i];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::string_view("xyzstu").find(c) != std::string_view::npos;
  }
  MultiPoly atom() {
    skip();
    if (i >= t.size()) throw MathError("unexpected end of polynomial");
    MultiPoly base;
    if (eat('(')) {
      base = expr();
      if (!eat(')')) throw MathError("expected ')' in polynomial");
    } else if (std::isdigit(static_cast<unsigned char>(t[i]))) {
      size_t j = i;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      if (j < t.size() && t[j] == '/') {
        ++j;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      }
      base = MultiPoly(parse_rat(t.substr(i, j - i)));
      i = j;
    } else {
      base = MultiPoly::var(var_from_name(t[i]));
      ++i;
    }
    if (eat('^')) {
      skip();
      size_t j = i;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      if (j == i) throw MathError("expected exponent in polynomial");
      int e = std::stoi(std::string(t.substr(i, j - i)));
      i = j;
      base = base.pow(e);
    }
    return base;
  }
  MultiPoly term() {
    MultiPoly v = atom();
    for (;;) {
      if (eat('*')) v *= atom();
      else if (eat('/')) {
        MultiPoly d = atom();
        if (!d.is_constant() || d.is_zero()) throw MathError("division by non-constant in polynomial");
        v = v.scaled(1 / d.constant_value());
      } else if (starts_atom()) v *= atom();
      else return v;
    }
  }
  MultiPoly expr() {
    bool neg = eat('-');
    if (!neg) eat('+');
    MultiPoly v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
};

}  // namespace

MultiPoly parse_poly(std::string_view text) {
  PolyParser p{text};
  MultiPoly v = p.expr();
  p.skip();
  if (p.i != text.size()) throw MathError("trailing characters in polynomial: " + std::string(text.substr(p.i)));
  return v;
}

Scalar poly_eval(const MultiPoly& p, const std::map<Var, Scalar>& assignment) {
  std::map<Var, std::vector<Scalar>> powers;
  for (Var v : p.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw MathError(std::string("unassigned variable ") + var_name(v));
    std::vector<Scalar> pw{Scalar(Rat(1))};
    for (int k = 1; k <= p.degree(v); ++k) pw.push_back(pw.back() * it->second);
    powers[v] = std::move(pw);
  }
  Scalar acc;
  for (const auto& [m, c] : p.terms()) {
    Scalar term(c);
    for (int i = 0; i < kNumVars; ++i)
      if (m[i] > 0) term *= powers[static_cast<Var>(i)][m[i]];
    acc += term;
  }
  return acc;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  auto [lm, lc] = b.leading();
  MultiPoly q, r = a;
  while (!r.is_zero()) {
    auto [rm, rc] = r.leading();
    Monomial d;
    for (int i = 0; i < kNumVars; ++i) {
      d[i] = rm[i] - lm[i];
      if (d[i] < 0) return std::nullopt;
    }
    MultiPoly t = MultiPoly::term(rc / lc, d);
    q += t;
    r -= t * b;
  }
  return q;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
  int m = p.degree(v), n = q.degree(v);
  if (p.is_zero() || q.is_zero()) throw MathError("resultant of zero polynomial");
  if (m < 1 || n < 1) throw MathError(std::string("resultant needs positive degree in ") + var_name(v));
  auto pc = p.coefficients_in(v), qc = q.coefficients_in(v);
  int N = m + n;
  std::vector<std::vector<MultiPoly>> a(N, std::vector<MultiPoly>(N));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = pc[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = qc[n - k];
  // fraction-free Bareiss elimination
  MultiPoly prev(Rat(1));
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (a[k][k].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < N; ++r)
        if (!a[r][k].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return MultiPoly();
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto quot = exact_divide(num, prev);
        if (!quot) throw MathError("Bareiss step is not exact");
        a[i][j] = std::move(*quot);
      }
      a[i][k] = MultiPoly();
    }
    prev = a[k][k];
  }
  MultiPoly det = a[N - 1][N - 1];
  return sign > 0 ? det : -det;
}

namespace {

std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::set<Rat> rational_roots(const MultiPoly& p) {
  if (p.is_zero()) throw MathError("rational_roots of zero polynomial");
  auto vars = p.variables();
  if (vars.size() > 1) throw MathError("rational_roots needs a univariate polynomial");
  std::set<Rat> roots;
  if (vars.empty()) return roots;
  Var v = *vars.begin();
  UPoly f = p.to_upoly(v);
  int low = 0;
  while (f.coeff(low) == 0) ++low;
  if (low > 0) {
    roots.insert(Rat(0));
    std::vector<Rat> c(f.coeffs().begin() + low, f.coeffs().end());
    f = UPoly(std::move(c));
  }
  if (f.degree() < 1) return roots;
  Int l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Rat s0 = f.coeff(0) * l, sn = f.lead() * l;
  Int a0 = s0.get_num(), an = sn.get_num();
  for (const Int& d : divisors(a0))
    for (const Int& e : divisors(an))
      for (int sg : {1, -1}) {
        Rat cand(sg * d, e);
        cand.canonicalize();
        if (f.eval(cand) == 0) roots.insert(cand);
      }
  return roots;
}

std::optional<Rat> proportionality(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  Rat c = a.leading().second / b.leading().second;
  if (a == b.scaled(c)) return c;
  return std::nullopt;
}

}  // namespace voaf
