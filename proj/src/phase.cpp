#include "voaf/phase.hpp"

namespace voaf {

Phase::Phase(const Rat& r) {
  // floor division of r by 2
  Rat q = r / 2;
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  r_ = r - 2 * Rat(f);
}

int Phase::real_sign() const {
  if (r_ == 0) return 1;
  if (r_ == 1) return -1;
  return 0;
}

std::string Phase::to_string() const { return "e^{i pi " + voaf::to_string(r_) + "}"; }

}  // namespace voaf
