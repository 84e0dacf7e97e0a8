#ifndef CTSEQ_ORACLE_HPP
#define CTSEQ_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "ctseq/laurent.hpp"

// Brute-force ground truth. Nothing here uses sections, windows or matrices:
// Q P^n is carried as a dense box of exponents and multiplied by P once per
// step. Terms that can no longer reach the zero exponent within the
// remaining steps are dropped, which leaves every requested constant term
// exact.
namespace ctseq::oracle {

  struct OracleConfig {
    std::uint64_t modulus = 0;
    std::uint64_t max_n = Limits{}.oracle_max_n;
    std::uint64_t cell_guard = 200'000'000;  // dense cells per step
  };

  // ct(P^n Q) mod modulus.
  Scalar ct_pow_mod(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t n,
                    const OracleConfig& config);

  // ct(P^n Q) mod modulus for n < count, from one running product.
  std::vector<Scalar> sequence(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t count,
                               const OracleConfig& config);

  // sum_k C(n,k)^2 C(n+k,k)^2 mod modulus for n < count, by Pascal's rule.
  // At most 6000 terms, modulus below 2^32.
  std::vector<Scalar> apery_numbers(std::uint64_t count, std::uint64_t modulus);

} // namespace ctseq::oracle

#endif // CTSEQ_ORACLE_HPP
