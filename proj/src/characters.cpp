#include "voaf/characters.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "voaf/fock.hpp"

namespace voaf {

namespace {

// steps are 1 or 1/2
Rat finer_step(const Rat& a, const Rat& b) { return std::min(a, b); }

}  // namespace

QSeries::QSeries(Rat offset, Rat step, Rat cutoff)
    : offset_(std::move(offset)), step_(std::move(step)), cutoff_(std::move(cutoff)) {}

Rat QSeries::coefficient(const Rat& k) const {
  if (k > cutoff_) throw MathError("coefficient beyond the cutoff of a q-series");
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void QSeries::add(const Rat& k, const Rat& c) {
  if (k < 0 || k > cutoff_) return;
  Rat& slot = coeffs_[k];
  slot += c;
  if (slot == 0) coeffs_.erase(k);
}

QSeries QSeries::operator+(const QSeries& o) const {
  Rat off = std::min(offset_, o.offset_);
  Rat step = finer_step(step_, o.step_);
  Rat top = std::min(offset_ + cutoff_, o.offset_ + o.cutoff_) - off;
  QSeries out(off, step, top);
  for (const auto& [k, c] : coeffs_) out.add(k + offset_ - off, c);
  for (const auto& [k, c] : o.coeffs_) out.add(k + o.offset_ - off, c);
  return out;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o.scaled(Rat(-1)); }

QSeries QSeries::operator*(const QSeries& o) const {
  Rat top = std::min(cutoff_, o.cutoff_);
  QSeries out(offset_ + o.offset_, finer_step(step_, o.step_), top);
  for (const auto& [a, ca] : coeffs_) {
    if (a > top) break;
    for (const auto& [b, cb] : o.coeffs_) {
      if (a + b > top) break;
      out.add(a + b, ca * cb);
    }
  }
  return out;
}

QSeries QSeries::scaled(const Rat& c) const {
  QSeries out(offset_, step_, cutoff_);
  if (c != 0)
    for (const auto& [k, x] : coeffs_) out.coeffs_[k] = x * c;
  return out;
}

QSeries QSeries::truncated(const Rat& cutoff) const {
  QSeries out(offset_, step_, std::min(cutoff, cutoff_));
  for (const auto& [k, c] : coeffs_)
    if (k <= out.cutoff_) out.coeffs_[k] = c;
  return out;
}

std::optional<Rat> QSeries::first_difference(const QSeries& o) const {
  Rat hi = std::min(offset_ + cutoff_, o.offset_ + o.cutoff_);
  std::map<Rat, Rat> diff;
  for (const auto& [k, c] : coeffs_)
    if (k + offset_ <= hi) diff[k + offset_] += c;
  for (const auto& [k, c] : o.coeffs_)
    if (k + o.offset_ <= hi) diff[k + o.offset_] -= c;
  for (const auto& [e, c] : diff)
    if (c != 0) return e;
  return std::nullopt;
}

std::string QSeries::to_string(int max_terms) const {
  std::ostringstream os;
  os << "q^{" << voaf::to_string(offset_) << "}·(";
  int n = 0;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (n++ == max_terms) {
      os << " + …";
      break;
    }
    Rat a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = a == 1 && k != 0;
    if (!unit) os << voaf::to_string(a);
    if (k != 0) {
      if (!unit) os << " ";
      os << "q";
      if (k != 1) os << "^" << voaf::to_string(k);
    }
  }
  if (first) os << "0";
  os << " + O(q^" << voaf::to_string(cutoff_ + step_) << "))";
  return os.str();
}

std::string QSeries::to_json() const {
  nlohmann::json j;
  j["offset"] = voaf::to_string(offset_);
  j["step"] = voaf::to_string(step_);
  j["cutoff"] = voaf::to_string(cutoff_);
  std::vector<std::string> cs;
  for (Rat k(0); k <= cutoff_; k += step_) cs.push_back(voaf::to_string(coefficient(k)));
  j["coefficients"] = cs;
  return j.dump();
}

std::vector<Int> partition_counts(long n) {
  std::vector<Int> p(static_cast<size_t>(std::max(n, 0L)) + 1, 0);
  p[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long m = part; m <= n; ++m) p[m] += p[m - part];
  return p;
}

QSeries eta_inverse(const Rat& cutoff) {
  Rat top = floor_rat(cutoff);
  QSeries out(rat(-1, 24), Rat(1), cutoff);
  auto p = partition_counts(to_long(top));
  for (long n = 0; n <= to_long(top); ++n) out.add(Rat(n), Rat(p[n]));
  return out;
}

QSeries char_virasoro_c1(const Rat& h, const Rat& cutoff) {
  if (h < 0) throw MathError("negative lowest weight");
  QSeries out(h - rat(1, 24), Rat(1), cutoff);
  long top = to_long(floor_rat(cutoff));
  auto p = partition_counts(top);
  // h = n^2/4 for an integer n iff 4h is an integral square
  std::optional<long> gap;
  if (auto r = rational_sqrt(4 * h); r && is_integer(*r)) gap = to_long(*r) + 1;
  for (long k = 0; k <= top; ++k) {
    Int c = p[k];
    if (gap && k >= *gap) c -= p[k - *gap];
    out.add(Rat(k), Rat(c));
  }
  return out;
}

QSeries graded_dimension(const ModuleLabel& module, const Rat& cutoff) {
  Sector sec = module.sector();
  Scalar off = sec.offset();
  if (!off.is_rational()) throw MathError("graded dimension needs a concrete lambda^2");
  Rat step = sec.is_twisted() ? rat(1, 2) : Rat(1);
  QSeries out(off.to_rat() - rat(1, 24), step, cutoff);
  for (Rat d(0); d <= cutoff; d += step) {
    long n = 0;
    for (const auto& p : basis_at_degree(sec, d))
      if (module.contains(p)) ++n;
    out.add(d, Rat(n));
  }
  return out;
}

QSeries graded_dimension_twisted(const Rat& cutoff) {
  QSeries out(rat(1, 16) - rat(1, 24), rat(1, 2), cutoff);
  for (Rat d(0); d <= cutoff; d += rat(1, 2))
    out.add(d, Rat(static_cast<long>(basis_at_degree(Sector::twisted(), d).size())));
  return out;
}

DecompositionCheck verify_decomposition(const ModuleLabel& module, const std::vector<std::pair<Rat, long>>& parts,
                                        const Rat& cutoff) {
  QSeries lhs = graded_dimension(module, cutoff);
  Rat top = lhs.offset() + cutoff;
  QSeries rhs(lhs.offset(), lhs.step(), cutoff);
  for (const auto& [h, mult] : parts) {
    Rat rel = h - rat(1, 24) - lhs.offset();
    if (rel > cutoff) continue;
    if (rel < 0) {
      DecompositionCheck bad{false, "lowest weight " + to_string(h) + " lies below the module"};
      return bad;
    }
    QSeries ch = char_virasoro_c1(h, top + rat(1, 24) - h);
    for (const auto& [k, c] : ch.coeffs()) rhs.add(k + rel, c * mult);
  }
  DecompositionCheck res;
  if (auto e = lhs.first_difference(rhs)) {
    res.ok = false;
    Rat x = *e + rat(1, 24);
    std::ostringstream os;
    os << "mismatch at q^" << to_string(x) << ": module " << to_string(lhs.coefficient_at(*e)) << ", sum "
       << to_string(rhs.coefficient_at(*e));
    res.report = os.str();
  } else {
    res.report = "agree to q^" + to_string(top + rat(1, 24));
  }
  return res;
}

std::vector<std::pair<Rat, long>> known_decomposition(const ModuleLabel& module, const Rat& bound) {
  std::vector<std::pair<Rat, long>> out;
  auto push_while = [&](auto h_of) {
    for (long p = 0;; ++p) {
      Rat h = h_of(p);
      if (h > bound) break;
      out.emplace_back(h, 1);
    }
  };
  switch (module.kind) {
    case ModuleKind::plus:
      push_while([](long p) { return Rat(4 * p * p); });
      break;
    case ModuleKind::minus:
      push_while([](long p) { return Rat((2 * p + 1) * (2 * p + 1)); });
      break;
    case ModuleKind::theta_plus:
    case ModuleKind::theta_minus: {
      long a = module.kind == ModuleKind::theta_plus ? 1 : 3;
      for (long p = 0;; ++p) {
        Rat h1 = rat((8 * p + a) * (8 * p + a), 16), h2 = rat((8 * p + 8 - a) * (8 * p + 8 - a), 16);
        if (h1 > bound) break;
        out.emplace_back(h1, 1);
        if (h2 <= bound) out.emplace_back(h2, 1);
      }
      break;
    }
    case ModuleKind::lambda: {
      if (!module.s) throw MathError("decomposition needs a concrete lambda^2");
      Rat h = *module.s / 2;
      auto r = rational_sqrt(4 * h);
      if (r && is_integer(*r)) {
        long n = to_long(*r);
        push_while([n](long p) { return rat((n + 2 * p) * (n + 2 * p), 4); });
      } else {
        out.emplace_back(h, 1);
      }
      break;
    }
  }
  return out;
}

bool jacobi_triple_check(const Rat& cutoff) {
  // everything in half units
  long top = to_long(floor_rat(2 * cutoff));
  std::vector<Rat> lhs(top + 1, Rat(0));
  lhs[0] = 1;
  for (long k = 1; 2 * k - 1 <= top; ++k) {
    // divide by (1 - q^{k-1/2}): multiply by the geometric series
    long e = 2 * k - 1;
    for (long i = e; i <= top; ++i) lhs[i] += lhs[i - e];
  }
  for (long k = 1; 2 * k <= top; ++k) {
    long e = 2 * k;
    for (long i = top; i >= e; --i) lhs[i] -= lhs[i - e];
  }
  std::vector<Rat> rhs(top + 1, Rat(0));
  for (long p = 0; p * (p + 1) / 2 <= top; ++p) rhs[p * (p + 1) / 2] += 1;
  return lhs == rhs;
}

}  // namespace voaf
