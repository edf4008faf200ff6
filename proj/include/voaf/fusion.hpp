#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "voaf/fock.hpp"
#include "voaf/linalg.hpp"
#include "voaf/module_label.hpp"
#include "voaf/multipoly.hpp"

namespace voaf {

class UnsupportedParameter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// generators of A(M) as a bimodule
std::vector<FockVector> generator_set(const ModuleLabel& m);
// generators used to write Zhu products in Virasoro coordinates; a superset of
// generator_set that adds the next lowest weight vector where it is needed
std::vector<FockVector> expression_generators(const ModuleLabel& m);
std::vector<std::string> generator_names(const ModuleLabel& m);

struct HypothesisCheck {
  bool ok = true;
  std::string report;
};
// J_n g lies in the Virasoro span of the generators for every generator g
HypothesisCheck verify_generator_hypothesis(const ModuleLabel& m);

// One relation sum_g coeffs[g] [g] = 0 in the contraction, written with
// x = a_L, y = a_N, z = b_L, w = b_N (and s for formal lambda^2).
struct Relation {
  std::string name;
  std::vector<MultiPoly> coeffs;
  MultiPoly denominator{Rat(1)};
};

struct RelationSet {
  ModuleLabel module;
  std::vector<FockVector> generators;
  std::vector<std::string> names;
  std::vector<Relation> relations;
  std::vector<std::string> notes;  // relations that could not be formed

  const Relation* find(const std::string& name) const;
};

RelationSet constraints(const ModuleLabel& m);
// rows of the relations at x = a_L, y = a_N, z = b_L, w = b_N
Matrix<Rat> evaluate_relations(const RelationSet& rs, const ModuleLabel& n, const ModuleLabel& l);

enum class WitnessKind { untwisted, vacuum_action, twisted_projection };
std::string to_string(WitnessKind k);

// a nonzero coefficient of an explicit intertwining operator of type (C over A, B)
struct Witness {
  WitnessKind kind;
  Rat offset;           // power of z relative to the leading exponent
  std::string coefficient;
};

std::optional<Witness> find_witness(const ModuleLabel& a, const ModuleLabel& b, const ModuleLabel& c);

struct FusionCertificate {
  ModuleLabel m, n, l;
  int verdict = 0;
  std::array<int, 3> permutation{0, 1, 2};  // the triple actually analysed, as indices into (m, n, l)
  // verdict 0
  std::vector<std::string> violated;  // relation names
  std::string evidence;               // nonzero value or determinant
  // verdict 1
  std::optional<Witness> witness;
  std::array<int, 3> witness_permutation{0, 1, 2};
  int bound = 1;

  std::string to_json() const;
};

FusionCertificate decide(const ModuleLabel& m, const ModuleLabel& n, const ModuleLabel& l);

// list together with every rational (sqrt(s) +- sqrt(t))^2, s, t in the list
std::vector<Rat> lambda_closure(const std::vector<Rat>& lambda_squares);

struct FusionTable {
  std::vector<ModuleLabel> labels;
  std::vector<FusionCertificate> entries;  // (m, n, l) in row-major order over labels

  const FusionCertificate& at(size_t m, size_t n, size_t l) const;
  std::string to_json() const;
  std::string to_csv() const;
};

FusionTable full_table(const std::vector<Rat>& lambda_squares);

struct IdentityCheck {
  std::string name;
  bool ok = false;
  std::string detail;
  bool note = false;  // an observation about the reference claims rather than a required identity
};

std::vector<IdentityCheck> verify_step3_generic();

}  // namespace voaf
