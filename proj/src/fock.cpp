#include "voaf/fock.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace voaf {

Partition::Partition(std::vector<int> halves) : h_(std::move(halves)) {
  std::sort(h_.begin(), h_.end(), std::greater<int>());
  for (int x : h_) {
    if (x <= 0) throw MathError("partition parts must be positive");
    weight_ += x;
  }
}

Partition Partition::from_depths(const std::vector<Rat>& depths) {
  std::vector<int> h;
  for (const auto& d : depths) {
    Rat t = 2 * d;
    if (!is_integer(t)) throw MathError("depth is not a multiple of 1/2: " + voaf::to_string(d));
    h.push_back(static_cast<int>(to_long(t)));
  }
  return Partition(std::move(h));
}

int Partition::multiplicity(int half) const { return static_cast<int>(std::count(h_.begin(), h_.end(), half)); }

std::vector<std::pair<Rat, int>> Partition::parts() const {
  std::vector<std::pair<Rat, int>> out;
  for (int x : h_) {
    if (!out.empty() && out.back().first == rat(x, 2)) ++out.back().second;
    else out.emplace_back(rat(x, 2), 1);
  }
  for (auto& p : out) p.first.canonicalize();
  return out;
}

Partition Partition::with(int half) const {
  Partition p = *this;
  p.h_.insert(std::upper_bound(p.h_.begin(), p.h_.end(), half, std::greater<int>()), half);
  p.weight_ += half;
  return p;
}

Partition Partition::without(int half) const {
  Partition p = *this;
  auto it = std::find(p.h_.begin(), p.h_.end(), half);
  if (it == p.h_.end()) throw MathError("part not present");
  p.h_.erase(it);
  p.weight_ -= half;
  return p;
}

std::string Partition::to_string() const {
  std::string out;
  for (auto [d, m] : parts()) {
    std::string f = "h(-" + voaf::to_string(d) + ")";
    out += f;
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.weight_halves() != b.weight_halves()) return a.weight_halves() < b.weight_halves();
  return std::lexicographical_compare(a.halves().begin(), a.halves().end(), b.halves().begin(), b.halves().end(),
                                      std::greater<int>());
}

Sector Sector::untwisted(Scalar momentum) {
  Sector s;
  s.kind_ = Kind::untwisted;
  s.momentum_ = std::move(momentum);
  return s;
}

Sector Sector::lambda(const Rat& s) { return untwisted(Scalar::lam(s)); }

Sector Sector::lambda_formal() { return untwisted(Scalar::lam()); }

Sector Sector::twisted() {
  Sector s;
  s.kind_ = Kind::twisted;
  return s;
}

Scalar Sector::offset() const {
  if (is_twisted()) return Scalar(rat(1, 16));
  return momentum_ * momentum_ * Scalar(rat(1, 2));
}

bool Sector::legal_half(int half) const { return is_twisted() ? (half % 2 != 0) : (half % 2 == 0); }

bool Sector::operator==(const Sector& o) const { return kind_ == o.kind_ && momentum_ == o.momentum_; }

std::string Sector::terminal() const {
  if (is_twisted()) return "1theta";
  if (momentum_.is_zero()) return "|0>";
  if (momentum_ == Scalar::lam(momentum_.modulus())) return "e^lam";
  return "e^(" + momentum_.to_string() + ")";
}

FockVector FockVector::vacuum(const Sector& sector, const Scalar& c) { return basis(sector, Partition(), c); }

FockVector FockVector::basis(const Sector& sector, const Partition& p, const Scalar& c) {
  for (int h : p.halves())
    if (!sector.legal_half(h)) throw MathError("partition depth violates sector rule: " + p.to_string());
  FockVector v(sector);
  v.add(p, c);
  return v;
}

Scalar FockVector::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar() : it->second;
}

void FockVector::add(const Partition& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector FockVector::operator-() const {
  FockVector r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && sector_ != o.sector_) sector_ = o.sector_;
  if (sector_ != o.sector_) throw MathError("sector mismatch in Fock vector sum");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) { return *this += -o; }

FockVector operator*(const Scalar& c, const FockVector& v) {
  FockVector r(v.sector_);
  if (c.is_zero()) return r;
  for (const auto& [p, x] : v.terms_) r.add(p, c * x);
  return r;
}

bool FockVector::operator==(const FockVector& o) const {
  if (is_zero() && o.is_zero()) return true;
  return sector_ == o.sector_ && terms_.size() == o.terms_.size() &&
         std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first && a.second == b.second; });
}

std::optional<Rat> FockVector::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int w = terms_.begin()->first.weight_halves();
  if (terms_.rbegin()->first.weight_halves() != w) return std::nullopt;
  return rat(w, 2);
}

Rat FockVector::max_degree() const {
  if (terms_.empty()) return Rat(0);
  Rat r(terms_.rbegin()->first.weight_halves(), 2);
  r.canonicalize();
  return r;
}

std::map<Rat, FockVector> FockVector::components() const {
  std::map<Rat, FockVector> out;
  for (const auto& [p, c] : terms_) {
    Rat d = p.weight();
    d.canonicalize();
    auto it = out.try_emplace(d, FockVector(sector_)).first;
    it->second.add(p, c);
  }
  return out;
}

FockVector FockVector::component(const Rat& degree) const {
  FockVector r(sector_);
  for (const auto& [p, c] : terms_)
    if (p.weight() == degree) r.add(p, c);
  return r;
}

FockVector FockVector::with_sector(const Sector& s) const {
  FockVector r = *this;
  r.sector_ = s;
  return r;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Scalar shown = c;
    bool negative = c.is_rational() && c.to_rat() < 0;
    if (negative) shown = -c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    std::string cs = shown.to_string();
    if (!shown.is_rational()) os << "(" << cs << ") ";
    else if (cs != "1") os << cs << " ";
    if (!p.empty()) os << p.to_string() << " ";
    os << sector_.terminal();
  }
  return os.str();
}

FockVector apply_mode_halves(int twice_n, const FockVector& v) {
  const Sector& sec = v.sector();
  if (twice_n == 0) {
    if (sec.is_twisted()) throw MathError("h(0) does not act on the twisted sector");
    return sec.momentum() * v;
  }
  if (!sec.legal_half(twice_n < 0 ? -twice_n : twice_n))
    throw MathError("mode index violates sector rule");
  FockVector out(sec);
  if (twice_n < 0) {
    for (const auto& [p, c] : v.terms()) out.add(p.with(-twice_n), c);
    return out;
  }
  for (const auto& [p, c] : v.terms()) {
    int m = p.multiplicity(twice_n);
    if (m == 0) continue;
    Rat f(twice_n * m, 2);
    f.canonicalize();
    out.add(p.without(twice_n), c * Scalar(f));
  }
  return out;
}

FockVector apply_mode(const Rat& n, const FockVector& v) {
  Rat t = 2 * n;
  if (!is_integer(t)) throw MathError("mode index is not a multiple of 1/2");
  return apply_mode_halves(static_cast<int>(to_long(t)), v);
}

FockVector theta(const FockVector& v) {
  if (!v.sector().is_twisted() && !v.sector().momentum().is_zero())
    throw MathError("theta is only defined on M(1) and the twisted sector");
  FockVector out(v.sector());
  for (const auto& [p, c] : v.terms()) out.add(p, p.length() % 2 ? -c : c);
  return out;
}

namespace {

void enumerate(int remaining, int max_part, int parity, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  int part = std::min(max_part, remaining);
  if ((part & 1) != parity) --part;
  for (; part >= 1; part -= 2) {
    cur.push_back(part);
    enumerate(remaining - part, part, parity, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> basis_at_degree(Sector::Kind kind, const Rat& d) {
  std::vector<Partition> out;
  Rat t = 2 * d;
  if (d < 0 || !is_integer(t)) return out;
  int total = static_cast<int>(to_long(t));
  if (kind == Sector::Kind::untwisted && total % 2 != 0) return out;
  std::vector<int> cur;
  enumerate(total, total, kind == Sector::Kind::untwisted ? 0 : 1, cur, out);
  std::sort(out.begin(), out.end(), PartitionOrder());
  return out;
}

std::vector<Partition> basis_at_degree(const Sector& sector, const Rat& d) { return basis_at_degree(sector.kind(), d); }

Scalar contravariant_form(const FockVector& u, const FockVector& v) {
  if (!u.sector().is_twisted() || !v.sector().is_twisted()) throw MathError("contravariant form needs twisted-sector vectors");
  Scalar acc;
  for (const auto& [p, c] : u.terms()) {
    auto it = v.terms().find(p);
    if (it == v.terms().end()) continue;
    Rat norm(1);
    for (auto [d, m] : p.parts()) {
      for (int i = 0; i < m; ++i) norm *= d;
      norm *= factorial(m);
    }
    acc += c * it->second * Scalar(norm);
  }
  return acc;
}

namespace {

struct StateParser {
  std::string_view t;
  std::optional<Rat> modulus;
  size_t i = 0;

  void skip() {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  }
  bool at(std::string_view w) {
    skip();
    return t.substr(i, w.size()) == w;
  }
  // scalar text runs until the first mode factor or terminal
  size_t scalar_end(size_t from) {
    int depth = 0;
    for (size_t j = from; j < t.size(); ++j) {
      char c = t[j];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (depth == 0) {
        auto rest = t.substr(j);
        if (rest.substr(0, 2) == "h(" || rest.substr(0, 3) == "|0>" || rest.substr(0, 5) == "e^lam" ||
            rest.substr(0, 6) == "1theta")
          return j;
        if ((c == '+' || c == '-') && j > from) return j;
      }
    }
    return t.size();
  }
};

}  // namespace

FockVector parse_state(std::string_view text, std::optional<Rat> modulus) {
  StateParser ps{text, modulus};
  struct Term {
    Scalar c;
    std::vector<Rat> depths;
    Sector sector;
  };
  std::vector<Term> terms;
  ps.skip();
  while (ps.i < text.size()) {
    bool neg = false;
    ps.skip();
    if (ps.at("+")) ++ps.i;
    else if (ps.at("-")) {
      neg = true;
      ++ps.i;
    }
    ps.skip();
    Scalar c(Rat(1));
    size_t e = ps.scalar_end(ps.i);
    std::string_view cs = text.substr(ps.i, e - ps.i);
    bool blank = std::all_of(cs.begin(), cs.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == '*'; });
    if (!blank) {
      std::string trimmed(cs);
      while (!trimmed.empty() && (std::isspace(static_cast<unsigned char>(trimmed.back())) || trimmed.back() == '*'))
        trimmed.pop_back();
      c = parse_scalar(trimmed, modulus);
    }
    ps.i = e;
    if (neg) c = -c;
    std::vector<Rat> depths;
    for (;;) {
      ps.skip();
      if (!ps.at("h(")) break;
      ps.i += 2;
      ps.skip();
      if (!ps.at("-")) throw MathError("state grammar accepts creation modes h(-k) only");
      ++ps.i;
      size_t j = text.find(')', ps.i);
      if (j == std::string_view::npos) throw MathError("unterminated mode factor");
      Rat d = parse_rat(text.substr(ps.i, j - ps.i));
      ps.i = j + 1;
      int reps = 1;
      if (ps.i < text.size() && text[ps.i] == '^') {
        size_t k = ps.i + 1;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        reps = std::stoi(std::string(text.substr(ps.i + 1, k - ps.i - 1)));
        ps.i = k;
      }
      for (int r = 0; r < reps; ++r) depths.push_back(d);
    }
    ps.skip();
    Sector sector;
    if (ps.at("|0>")) {
      ps.i += 3;
      sector = Sector::untwisted();
    } else if (ps.at("e^lam")) {
      ps.i += 5;
      sector = modulus ? Sector::lambda(*modulus) : Sector::lambda_formal();
    } else if (ps.at("1theta")) {
      ps.i += 6;
      sector = Sector::twisted();
    } else {
      throw MathError("expected terminal |0>, e^lam or 1theta in state");
    }
    terms.push_back({c, depths, sector});
    ps.skip();
  }
  if (terms.empty()) throw MathError("empty state");
  FockVector out(terms.front().sector);
  for (auto& t : terms) {
    if (t.sector != out.sector()) throw MathError("mixed terminals in state");
    out += FockVector::basis(t.sector, Partition::from_depths(t.depths), t.c);
  }
  return out;
}

}  // namespace voaf
