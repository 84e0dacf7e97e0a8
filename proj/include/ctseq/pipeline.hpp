#ifndef CTSEQ_PIPELINE_HPP
#define CTSEQ_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctseq/laurent.hpp"

namespace ctseq {

  // One sequence ct(P^n Q) mod p^a, as the CLI and the C API see it.
  struct Problem {
    LaurentPoly p;
    LaurentPoly q;
    std::uint64_t prime = 2;
    unsigned a = 1;
    std::string preset;  // set when P came from "@name"
  };

  // p_text is an expression or "@preset"; an empty q_text means the preset's
  // Q, or 1. Checks that p is prime and a >= 1.
  Problem make_problem(const std::string& p_text, const std::string& q_text,
                       std::uint64_t prime, unsigned a);

  enum class Engine { linrep, dfao, reverse_dfao, morphism, oracle };

  Engine parse_engine(const std::string& tag);
  std::string engine_name(Engine e);

  std::vector<Scalar> generate(const Problem& pr, Engine engine, std::uint64_t count,
                               const Limits& limits = {});

  // Ground truth for oracle comparisons: the brute-force expansion, or the
  // binomial sum when P is the Apery polynomial with Q = 1.
  std::vector<Scalar> reference_sequence(const LaurentPoly& p, const LaurentPoly& q,
                                         std::uint64_t modulus, std::uint64_t count,
                                         const Limits& limits = {});

  struct EngineCheck {
    Engine engine = Engine::linrep;
    bool ok = false;
    std::optional<std::uint64_t> first_mismatch;
    Scalar expected = 0;
    Scalar got = 0;
    std::string error;  // set when the engine could not run
  };

  struct OracleCheck {
    std::uint64_t count = 0;
    std::vector<EngineCheck> rows;
    bool ok = false;
  };

  OracleCheck oracle_check(const Problem& pr, std::uint64_t count, const Limits& limits = {});

} // namespace ctseq

#endif // CTSEQ_PIPELINE_HPP
