#include "voaf/virasoro.hpp"

#include <algorithm>
#include <sstream>

#include "voaf/linalg.hpp"

namespace voaf {

FockVector L(int n, const FockVector& v) {
  FockVector out(v.sector());
  if (v.is_zero()) return out;
  const Sector& sec = v.sector();
  int twice_n = 2 * n;
  int top = std::max(v.terms().rbegin()->first.weight_halves(), 0);
  int first = twice_n / 2 + 1;  // smallest candidate strictly above n in half-units
  if (twice_n < 0) first = -((-twice_n) / 2) + 1;
  for (int b = first; b <= top; ++b) {
    int a = twice_n - b;
    if (a >= b || !sec.legal_half(std::abs(b)) || !sec.legal_half(std::abs(a))) continue;
    if (sec.is_twisted() && (a == 0 || b == 0)) continue;
    FockVector w = apply_mode_halves(b, v);
    if (w.is_zero()) continue;
    out += apply_mode_halves(a, w);
  }
  if (twice_n % 2 == 0 && sec.legal_half(std::abs(n)) && !(sec.is_twisted() && n == 0)) {
    FockVector w = apply_mode_halves(n, apply_mode_halves(n, v));
    out += Scalar(rat(1, 2)) * w;
  }
  if (n == 0 && sec.is_twisted()) out += Scalar(rat(1, 16)) * v;
  return out;
}

int DescendantWord::level() const {
  int s = 0;
  for (int m : ms) s += m;
  return s;
}

std::string DescendantWord::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < ms.size();) {
    size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    os << "L(-" << ms[i] << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  if (ms.empty()) os << "1";
  os << " @ g" << generator;
  return os.str();
}

bool DescendantWordOrder::operator()(const DescendantWord& a, const DescendantWord& b) const {
  if (a.generator != b.generator) return a.generator < b.generator;
  int la = a.level(), lb = b.level();
  if (la != lb) return la < lb;
  return std::lexicographical_compare(a.ms.begin(), a.ms.end(), b.ms.begin(), b.ms.end(), std::greater<int>());
}

FockVector DescendantCoords::evaluate() const {
  FockVector out;
  for (const auto& [w, c] : coords) out += c * apply_word(w.ms, generators.at(w.generator));
  return out;
}

std::string DescendantCoords::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : coords) {
    if (!first) os << "\n";
    first = false;
    os << c.to_string() << " * " << w.to_string();
  }
  return first ? "0" : os.str();
}

FockVector apply_word(const std::vector<int>& ms, const FockVector& g) {
  FockVector v = g;
  for (auto it = ms.rbegin(); it != ms.rend(); ++it) v = L(-*it, v);
  return v;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<DescendantWord> descendant_basis(int num_generators, int level) {
  std::vector<DescendantWord> out;
  for (int g = 0; g < num_generators; ++g)
    for (int l = 0; l <= level; ++l)
      for (auto& p : integer_partitions(l)) out.push_back({p, g});
  return out;
}

bool is_lowest_weight(const FockVector& g, int bound) {
  if (g.is_zero() || !g.homogeneous_degree()) return false;
  for (int n = 1; n <= bound; ++n)
    if (!L(n, g).is_zero()) return false;
  return true;
}

namespace {

std::vector<Scalar> coordinates(const FockVector& v, const std::vector<Partition>& basis) {
  std::vector<Scalar> out;
  out.reserve(basis.size());
  for (const auto& p : basis) out.push_back(v.coefficient(p));
  return out;
}

}  // namespace

DescendantCoords express_in_descendants(const FockVector& v, const std::vector<FockVector>& generators) {
  DescendantCoords res;
  res.generators = generators;
  if (v.is_zero()) return res;
  auto dv = v.homogeneous_degree();
  if (!dv) throw MathError("express_in_descendants needs a homogeneous vector");
  std::vector<DescendantWord> words;
  std::vector<std::vector<Scalar>> cols;
  auto basis = basis_at_degree(v.sector(), *dv);
  for (size_t g = 0; g < generators.size(); ++g) {
    const FockVector& gen = generators[g];
    if (gen.sector() != v.sector()) throw MathError("generator lives in a different sector");
    auto dg = gen.homogeneous_degree();
    if (!dg) throw MathError("generator is not homogeneous");
    Rat lvl = *dv - *dg;
    if (lvl < 0 || !is_integer(lvl)) continue;
    for (auto& p : integer_partitions(static_cast<int>(to_long(lvl)))) {
      FockVector image = apply_word(p, gen);
      if (image.is_zero()) continue;
      words.push_back({p, static_cast<int>(g)});
      cols.push_back(coordinates(image, basis));
    }
  }
  auto sol = solve_columns(cols, coordinates(v, basis));
  if (!sol) throw NotInSpan("vector is outside the Virasoro span of the generators: " + v.to_string());
  Matrix<Scalar> rows;
  for (auto& c : cols) rows.push_back(c);
  res.unique = rank(rows, static_cast<int>(basis.size())) == static_cast<int>(cols.size());
  for (size_t j = 0; j < words.size(); ++j)
    if (!(*sol)[j].is_zero()) res.coords.emplace(words[j], (*sol)[j]);
  return res;
}

DescendantCoords express_components(const FockVector& v, const std::vector<FockVector>& generators) {
  DescendantCoords res;
  res.generators = generators;
  for (const auto& [d, comp] : v.components()) {
    auto part = express_in_descendants(comp, generators);
    res.unique = res.unique && part.unique;
    for (auto& [w, c] : part.coords) res.coords.emplace(w, c);
  }
  return res;
}

FockVector singular_vector_image(const WordCombo& combo, const FockVector& generator) {
  FockVector out(generator.sector());
  for (const auto& [c, ms] : combo) out += c * apply_word(ms, generator);
  return out;
}

}  // namespace voaf
