#include <functional>
#include <set>

#include "doctest.h"
#include "voaf/fock.hpp"
#include "voaf/virasoro.hpp"

using namespace voaf;

namespace {

const Sector kVac = Sector::untwisted();
const Sector kTw = Sector::twisted();

std::vector<FockVector> basis_vectors(const Sector& sec, int max_halves) {
  std::vector<FockVector> out;
  for (int h = 0; h <= max_halves; ++h)
    for (auto& p : basis_at_degree(sec, rat(h, 2))) out.push_back(FockVector::basis(sec, p));
  return out;
}

// counts multisets of allowed depths by brute force over multiplicity vectors
int count_partitions_oracle(int total_halves, int parity) {
  std::vector<int> parts;
  for (int p = 1; p <= total_halves; ++p)
    if (p % 2 == parity) parts.push_back(p);
  std::function<int(size_t, int)> go = [&](size_t i, int rem) -> int {
    if (rem == 0) return 1;
    if (i == parts.size()) return 0;
    int n = 0;
    for (int k = 0; k * parts[i] <= rem; ++k) n += go(i + 1, rem - k * parts[i]);
    return n;
  };
  return go(0, total_halves);
}

}  // namespace

TEST_CASE("mode actions") {
  FockVector vac = FockVector::vacuum(kVac);
  FockVector h1 = apply_mode(Rat(-1), vac);
  CHECK(h1 == FockVector::basis(kVac, Partition({2})));
  CHECK(apply_mode(Rat(1), h1) == vac);
  FockVector one = FockVector::vacuum(kTw);
  CHECK(apply_mode(rat(1, 2), apply_mode(rat(-1, 2), one)) == Scalar(rat(1, 2)) * one);
  CHECK_THROWS(apply_mode(Rat(0), one));
  CHECK_THROWS(apply_mode(Rat(-1), one));
  CHECK_THROWS(apply_mode(rat(-1, 2), vac));
  FockVector e = FockVector::vacuum(Sector::lambda(Rat(3)));
  CHECK(apply_mode(Rat(0), e) == Scalar::lam(Rat(3)) * e);
}

TEST_CASE("Heisenberg commutation relations up to degree 6") {
  for (const Sector& sec : {kVac, kTw, Sector::lambda(rat(1, 3))}) {
    std::vector<int> modes;
    for (int m = -8; m <= 8; ++m)
      if (sec.legal_half(std::abs(m)) && !(sec.is_twisted() && m == 0)) modes.push_back(m);
    for (const auto& v : basis_vectors(sec, 12)) {
      for (int m : modes)
        for (int n : modes) {
          FockVector lhs = apply_mode_halves(m, apply_mode_halves(n, v)) - apply_mode_halves(n, apply_mode_halves(m, v));
          FockVector rhs(sec);
          if (m + n == 0) rhs = Scalar(rat(m, 2)) * v;
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("grading shifts by the mode index") {
  for (const auto& v : basis_vectors(kTw, 8)) {
    for (int m : {-3, -1, 1, 3}) {
      FockVector w = apply_mode_halves(m, v);
      if (w.is_zero()) continue;
      CHECK(*w.homogeneous_degree() == *v.homogeneous_degree() - rat(m, 2));
    }
  }
}

TEST_CASE("theta involution") {
  CHECK(theta(FockVector::vacuum(kVac)) == FockVector::vacuum(kVac));
  FockVector v = parse_state("h(-3)h(-1)|0>");
  CHECK(theta(v) == v);
  FockVector w = parse_state("h(-1/2)1theta");
  CHECK(theta(w) == -w);
  for (const Sector& sec : {kVac, kTw})
    for (const auto& b : basis_vectors(sec, 12)) CHECK(theta(theta(b)) == b);
  CHECK_THROWS(theta(FockVector::vacuum(Sector::lambda(Rat(2)))));
}

TEST_CASE("basis enumeration") {
  auto tw = basis_at_degree(kTw, rat(3, 2));
  REQUIRE(tw.size() == 2);
  CHECK(tw[0] == Partition({3}));
  CHECK(tw[1] == Partition({1, 1, 1}));
  CHECK(basis_at_degree(kVac, Rat(0)).size() == 1);
  auto b4 = basis_at_degree(kVac, Rat(4));
  REQUIRE(b4.size() == 5);
  CHECK(b4[0] == Partition({8}));
  CHECK(b4[1] == Partition({6, 2}));
  CHECK(b4[2] == Partition({4, 4}));
  CHECK(basis_at_degree(kVac, rat(1, 2)).empty());
  for (int h = 0; h <= 30; ++h) {
    if (h % 2 == 0) CHECK(static_cast<int>(basis_at_degree(kVac, rat(h, 2)).size()) == count_partitions_oracle(h, 0));
    CHECK(static_cast<int>(basis_at_degree(kTw, rat(h, 2)).size()) == count_partitions_oracle(h, 1));
  }
}

TEST_CASE("contravariant form") {
  FockVector one = FockVector::vacuum(kTw);
  CHECK(contravariant_form(one, one) == Scalar(Rat(1)));
  FockVector a = parse_state("h(-1/2)1theta");
  CHECK(contravariant_form(a, a) == Scalar(rat(1, 2)));
  CHECK(contravariant_form(parse_state("h(-3/2)1theta"), parse_state("h(-1/2)^3 1theta")).is_zero());
  CHECK_THROWS(contravariant_form(one, FockVector::vacuum(kVac)));
  // positive diagonal Gram matrix
  for (int h = 0; h <= 8; ++h) {
    auto b = basis_at_degree(kTw, rat(h, 2));
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) {
        Scalar g = contravariant_form(FockVector::basis(kTw, b[i]), FockVector::basis(kTw, b[j]));
        if (i == j) CHECK(g.to_rat() > 0);
        else CHECK(g.is_zero());
      }
  }
  // (L(n)u | v) = (u | L(-n)v)
  auto vs = basis_vectors(kTw, 8);
  for (const auto& u : vs)
    for (const auto& v : vs)
      for (int n = -3; n <= 3; ++n) CHECK(contravariant_form(L(n, u), v) == contravariant_form(u, L(-n, v)));
}

TEST_CASE("state grammar") {
  FockVector v = parse_state("3/2 h(-2)h(-2)|0>");
  CHECK(v == FockVector::basis(kVac, Partition({4, 4}), Scalar(rat(3, 2))));
  FockVector w = parse_state("lam h(-1/2) 1theta", Rat(2));
  CHECK(w.coefficient(Partition({1})) == Scalar::lam(Rat(2)));
  FockVector u = parse_state("-1/2 h(-3/2)1theta + h(-1/2)^3 1theta");
  CHECK(u.coefficient(Partition({1, 1, 1})) == Scalar(Rat(1)));
  CHECK(u.coefficient(Partition({3})) == Scalar(rat(-1, 2)));
  FockVector e = parse_state("(1/2 + lam) h(-1)e^lam - 2 e^lam", rat(1, 2));
  CHECK(e.sector() == Sector::lambda(rat(1, 2)));
  CHECK(e.coefficient(Partition()) == Scalar(Rat(-2)));
  CHECK(parse_state(v.to_string()) == v);
  CHECK(parse_state(u.to_string()) == u);
  CHECK_THROWS(parse_state("h(-1)|0> + 1theta"));
  CHECK_THROWS(parse_state("h(2)|0>"));
}
