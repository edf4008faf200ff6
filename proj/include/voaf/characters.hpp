#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "voaf/module_label.hpp"
#include "voaf/rational.hpp"

namespace voaf {

// q^offset * sum_k c_k q^k, k >= 0 a multiple of step, known for k <= cutoff
class QSeries {
 public:
  QSeries() = default;
  QSeries(Rat offset, Rat step, Rat cutoff);

  const Rat& offset() const { return offset_; }
  const Rat& step() const { return step_; }
  const Rat& cutoff() const { return cutoff_; }
  const std::map<Rat, Rat>& coeffs() const { return coeffs_; }

  Rat coefficient(const Rat& k) const;  // relative exponent
  Rat coefficient_at(const Rat& exponent) const { return coefficient(exponent - offset_); }
  void add(const Rat& k, const Rat& c);

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries scaled(const Rat& c) const;
  QSeries truncated(const Rat& cutoff) const;
  // first absolute exponent where two series differ, within the common range
  std::optional<Rat> first_difference(const QSeries& o) const;
  bool operator==(const QSeries& o) const { return !first_difference(o); }

  std::string to_string(int max_terms = 12) const;
  std::string to_json() const;

 private:
  Rat offset_{0}, step_{1}, cutoff_{0};
  std::map<Rat, Rat> coeffs_;
};

std::vector<Int> partition_counts(long n);

QSeries eta_inverse(const Rat& cutoff);
QSeries char_virasoro_c1(const Rat& h, const Rat& cutoff);
QSeries graded_dimension(const ModuleLabel& module, const Rat& cutoff);
// the whole twisted space M(1)(theta)
QSeries graded_dimension_twisted(const Rat& cutoff);

struct DecompositionCheck {
  bool ok = true;
  std::string report;
};

DecompositionCheck verify_decomposition(const ModuleLabel& module, const std::vector<std::pair<Rat, long>>& parts,
                                        const Rat& cutoff);
// Virasoro lowest weights of the known decompositions, all h <= bound
std::vector<std::pair<Rat, long>> known_decomposition(const ModuleLabel& module, const Rat& bound);

bool jacobi_triple_check(const Rat& cutoff);

}  // namespace voaf
