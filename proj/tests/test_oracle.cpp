#include <doctest.h>

#include "support.hpp"

using namespace test;

TEST_CASE("ct_pow_mod")
{
  CHECK(truth_at(preset_p("catalan"), preset_q("catalan"), 9, 4) == 5);
  CHECK(truth_at(P("x^-1 + 3 + x^4"), P("7*x^-2 + 11"), 5, 0) == 1);
  CHECK(truth_at(P("x^-1 + 3 + x^4"), P("7 + x"), 5, 0) == 2);
  CHECK(truth_at(preset_p("apery"), LaurentPoly::constant(3, 1), 7, 1) == 5);
  oracle::OracleConfig cfg;
  cfg.modulus = 7;
  cfg.max_n = 10;
  CHECK_THROWS_AS(oracle::ct_pow_mod(P("x + 1"), P("1"), 11, cfg), ResourceError);
  cfg.modulus = 1;
  CHECK_THROWS_AS(oracle::ct_pow_mod(P("x + 1"), P("1"), 1, cfg), ArgumentError);
}

TEST_CASE("sequence")
{
  CHECK(truth(preset_p("motzkin"), preset_q("motzkin"), 3, 6) == std::vector<Scalar>{1, 1, 2, 1, 0, 0});
  CHECK(truth(P("x^-1 + 1 + x"), LaurentPoly(1), 7, 10) == std::vector<Scalar>(10, 0));
  CHECK(truth(P("x^-1 + 1 + x"), P("1"), 2, 8) == std::vector<Scalar>(8, 1));
  // central trinomial coefficients 1,1,3,7,19,51,141,393
  CHECK(truth(P("x^-1 + 1 + x"), P("1"), 1000, 8) == std::vector<Scalar>{1, 1, 3, 7, 19, 51, 141, 393});
}

TEST_CASE("incremental consistency")
{
  std::mt19937_64 rng(61);
  for (int it = 0; it < 30; ++it) {
    const std::size_t r = 1 + it % 2;
    const auto p = random_poly(rng, r, 2, 4, 5);
    const auto q = random_poly(rng, r, 2, 4, 3);
    const std::uint64_t modulus = std::vector<std::uint64_t>{8, 27, 125, 7}[it % 4];
    const auto seq = truth(p, q, modulus, 40);
    for (int j = 0; j < 4; ++j) {
      const std::uint64_t n = rng() % 40;
      CHECK(seq[n] == truth_at(p, q, modulus, n));
    }
    // independent of the pruning: plain repeated multiplication
    LaurentPoly run = q;
    for (std::uint64_t n = 0; n < 12; ++n) {
      CHECK(seq[n] == ((run.constant_term() % static_cast<Scalar>(modulus)) + static_cast<Scalar>(modulus))
                          % static_cast<Scalar>(modulus));
      run = run * p;
    }
  }
}

TEST_CASE("apery closed form")
{
  const auto a = oracle::apery_numbers(8, 1000000007);
  CHECK(a == std::vector<Scalar>{1, 5, 73, 1445, 33001, 819005, 21460825, 584307365});
  const auto brute = truth(preset_p("apery"), LaurentPoly::constant(3, 1), 125, 30);
  CHECK(oracle::apery_numbers(30, 125) == brute);
  const auto big = oracle::apery_numbers(6000, 1000003);
  CHECK(big[29] == oracle::apery_numbers(30, 1000003)[29]);
  CHECK_THROWS_AS(oracle::apery_numbers(7000, 7), ResourceError);
}
