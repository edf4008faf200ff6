#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "voaf/fock.hpp"

namespace voaf {

// Sugawara L(n) with c = 1; includes 1/16 at n = 0 on the twisted sector.
FockVector L(int n, const FockVector& v);

struct DescendantWord {
  std::vector<int> ms;  // L(-m1)...L(-mk), m1 >= m2 >= ...
  int generator = 0;

  int level() const;
  std::string to_string() const;  // L(-3)L(-1)^2 @ g0
  bool operator==(const DescendantWord& o) const { return ms == o.ms && generator == o.generator; }
};

// generator first, then level, then descending-lex within a level
struct DescendantWordOrder {
  bool operator()(const DescendantWord& a, const DescendantWord& b) const;
};

using WordCombo = std::vector<std::pair<Scalar, std::vector<int>>>;

struct DescendantCoords {
  std::map<DescendantWord, Scalar, DescendantWordOrder> coords;
  std::vector<FockVector> generators;
  bool unique = true;  // false when the descendant images were linearly dependent

  FockVector evaluate() const;
  std::string to_string() const;
};

class NotInSpan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FockVector apply_word(const std::vector<int>& ms, const FockVector& g);
std::vector<DescendantWord> descendant_basis(int num_generators, int level);
std::vector<std::vector<int>> integer_partitions(int n);  // descending-lex

// checks L(n)g = 0 for 1 <= n <= bound and that g is homogeneous
bool is_lowest_weight(const FockVector& g, int bound = 4);

DescendantCoords express_in_descendants(const FockVector& v, const std::vector<FockVector>& generators);
// splits a non-homogeneous vector into degree components first
DescendantCoords express_components(const FockVector& v, const std::vector<FockVector>& generators);

FockVector singular_vector_image(const WordCombo& combo, const FockVector& generator);

}  // namespace voaf
