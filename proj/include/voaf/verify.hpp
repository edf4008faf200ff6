#pragma once

#include <string>
#include <vector>

#include "voaf/rational.hpp"

namespace voaf {

struct VerifyOptions {
  Rat char_cutoff{20};
  int membership_cutoff = 6;
};

struct CheckResult {
  std::string name;
  bool ok = false;
  bool inconclusive = false;  // a membership search ran out of room
  std::string detail;
};

// groups of checks, each usable on its own
std::vector<CheckResult> check_top_levels();
std::vector<CheckResult> check_zhu_ideal();
std::vector<CheckResult> check_j_relation_membership(int W);
std::vector<CheckResult> check_constraint_polynomials();
std::vector<CheckResult> check_step3();
std::vector<CheckResult> check_characters(const Rat& cutoff);
std::vector<CheckResult> check_singular_vectors();
std::vector<CheckResult> check_heisenberg_virasoro();
std::vector<CheckResult> check_zhu_structure(int W);
std::vector<CheckResult> check_twisted_modes();
std::vector<CheckResult> check_fusion_table();

std::vector<std::string> suite_names();  // characters zhu virasoro twisted fusion step3
// throws std::invalid_argument for an unknown name; "all" runs every suite
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace voaf
