#include "doctest.h"
#include "voaf/characters.hpp"
#include "voaf/fock.hpp"

using namespace voaf;

namespace {

// brute-force count of partitions of n
long count_partitions(long n, long max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (long k = std::min(n, max_part); k >= 1; --k) total += count_partitions(n - k, k);
  return total;
}

// partitions of 2d into odd parts, optionally of fixed length parity
long count_odd(long n, long max_part, int length, int parity) {
  if (n == 0) return parity < 0 || length % 2 == parity ? 1 : 0;
  long total = 0;
  for (long k = std::min(n, max_part); k >= 1; --k)
    if (k % 2) total += count_odd(n - k, k, length + 1, parity);
  return total;
}

}  // namespace

TEST_CASE("eta inverse") {
  QSeries e = eta_inverse(Rat(12));
  CHECK(e.offset() == rat(-1, 24));
  CHECK(e.coefficient(Rat(0)) == 1);
  CHECK(e.coefficient(Rat(4)) == 5);
  CHECK(e.coefficient(Rat(10)) == 42);
  for (long n = 0; n <= 12; ++n) CHECK(e.coefficient(Rat(n)) == Rat(count_partitions(n, n)));
}

TEST_CASE("Virasoro characters at c = 1") {
  QSeries g = char_virasoro_c1(rat(1, 16), Rat(6));
  QSeries plain = eta_inverse(Rat(6));
  for (long k = 0; k <= 6; ++k) CHECK(g.coefficient(Rat(k)) == plain.coefficient(Rat(k)));
  CHECK(g.offset() == rat(1, 16) - rat(1, 24));
  QSeries one = char_virasoro_c1(Rat(1), Rat(8));
  for (long k = 0; k <= 8; ++k)
    CHECK(one.coefficient(Rat(k)) == Rat(count_partitions(k, k) - (k >= 3 ? count_partitions(k - 3, k - 3) : 0)));
  QSeries zero = char_virasoro_c1(Rat(0), Rat(5));
  CHECK(zero.coefficient(Rat(0)) == 1);
  CHECK(zero.coefficient(Rat(1)) == 0);
  CHECK(zero.coefficient(Rat(2)) == 1);
}

TEST_CASE("graded dimensions") {
  QSeries t = graded_dimension_twisted(Rat(3));
  CHECK(t.coefficient(Rat(0)) == 1);
  CHECK(t.coefficient(rat(1, 2)) == 1);
  CHECK(t.coefficient(Rat(1)) == 1);
  CHECK(t.coefficient(rat(3, 2)) == 2);
  for (long n = 0; n <= 6; ++n) CHECK(t.coefficient(rat(n, 2)) == Rat(count_odd(n, n, 0, -1)));
  CHECK(graded_dimension(ModuleLabel::m_plus(), Rat(6)).coefficient(Rat(4)) == 3);
  CHECK(graded_dimension(ModuleLabel::m_lambda(rat(1, 3)), Rat(2)).coefficient(Rat(0)) == 1);
  QSeries tp = graded_dimension(ModuleLabel::theta_plus(), Rat(4));
  QSeries tm = graded_dimension(ModuleLabel::theta_minus(), Rat(4));
  for (long n = 0; n <= 8; ++n) {
    CHECK(tp.coefficient(rat(n, 2)) == Rat(count_odd(n, n, 0, 0)));
    CHECK(tm.coefficient(rat(n, 2)) == Rat(count_odd(n, n, 0, 1)));
  }
  CHECK(tm.offset() == rat(1, 16) - rat(1, 24));
}

TEST_CASE("twisted character identities") {
  Rat cut(20);
  QSeries t = graded_dimension_twisted(cut);
  // prod 1/(1 - q^{k-1/2})
  QSeries prod(rat(1, 16) - rat(1, 24), rat(1, 2), cut);
  prod.add(Rat(0), Rat(1));
  for (long k = 1; 2 * k - 1 <= 40; ++k) {
    QSeries geo(Rat(0), rat(1, 2), cut);
    for (Rat e(0); e <= cut; e += rat(2 * k - 1, 2)) geo.add(e, Rat(1));
    prod = prod * geo;
  }
  CHECK(t == prod);
  QSeries theta_sum(rat(1, 16), rat(1, 2), cut);
  for (long p = 0; rat(p * (p + 1), 4) <= cut; ++p) theta_sum.add(rat(p * (p + 1), 4), Rat(1));
  CHECK(t == eta_inverse(cut) * theta_sum);
  CHECK(jacobi_triple_check(cut));
  CHECK(jacobi_triple_check(rat(1, 2)));
}

TEST_CASE("Virasoro decompositions") {
  Rat cut(20);
  for (const auto& m : {ModuleLabel::m_plus(), ModuleLabel::m_minus(), ModuleLabel::theta_plus(),
                        ModuleLabel::theta_minus(), ModuleLabel::m_lambda(rat(1, 3)), ModuleLabel::m_lambda(Rat(2)),
                        ModuleLabel::m_lambda(rat(9, 2))}) {
    auto parts = known_decomposition(m, cut + 1 + m.top_weight().to_rat());
    auto res = verify_decomposition(m, parts, cut);
    CAPTURE(m.name());
    CAPTURE(res.report);
    CHECK(res.ok);
  }
  std::vector<std::pair<Rat, long>> wrong;
  for (long p = 0; p < 5; ++p) wrong.emplace_back(Rat((2 * p + 1) * (2 * p + 1)), 1);
  auto bad = verify_decomposition(ModuleLabel::m_plus(), wrong, cut);
  CHECK_FALSE(bad.ok);
  CHECK(bad.report.rfind("mismatch at q^0:", 0) == 0);
  CHECK(known_decomposition(ModuleLabel::m_lambda(Rat(2)), Rat(9)).size() == 3);
}

TEST_CASE("characters are pairwise distinct") {
  std::vector<QSeries> all;
  for (const auto& m : {ModuleLabel::m_plus(), ModuleLabel::m_minus(), ModuleLabel::theta_plus(),
                        ModuleLabel::theta_minus(), ModuleLabel::m_lambda(rat(1, 3))})
    all.push_back(graded_dimension(m, Rat(10)));
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) CHECK(all[i].first_difference(all[j]));
}

TEST_CASE("series printing") {
  QSeries e = eta_inverse(Rat(3));
  CHECK(e.to_string() == "q^{-1/24}·(1 + q + 2 q^2 + 3 q^3 + O(q^4))");
  CHECK(e.to_json() == R"({"coefficients":["1","1","2","3"],"cutoff":"3","offset":"-1/24","step":"1"})");
}
