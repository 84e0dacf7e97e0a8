#ifndef CTSEQ_CLASSIFY_HPP
#define CTSEQ_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctseq/linrep.hpp"

namespace ctseq {

  enum class Status { exact, inconclusive };

  struct ReachableStates {
    std::vector<StateVector> states;  // BFS discovery order, V(0) first
    bool complete = false;            // closure finished under the state cap
    // Some reachable V has V[C] = 0 mod p.
    bool zero_constant = false;
    // Some V reached by a digit string with a nonzero digit has V[C] != 0.
    bool nonzero_after_start = false;
    // Least n with V(n)[C] = 0, from the first such state discovered.
    std::optional<std::uint64_t> witness;
  };

  // Breadth-first closure of {V(0)} under all gamma(k), digits ascending.
  // Discovery order is numeric order of the least index reaching each state.
  ReachableStates reachable_states(const LinRep& rep);

  struct ZeroWitness {
    Status status = Status::exact;
    std::optional<std::uint64_t> n0;
  };

  // Least n0 with p | ct(P^n0), or none when the closure proves there is
  // none. Found witnesses are confirmed minimal by scanning the sequence and
  // checked against the oracle when within its limits.
  ZeroWitness zero_witness(const LaurentPoly& p, std::uint64_t prime, const Limits& limits = {});

  struct Verdict {
    std::uint64_t p = 0;
    unsigned a = 1;
    std::int64_t m = 0;
    std::size_t window_size = 0;
    unsigned settle_s = 0;
    std::size_t reachable_states = 0;
    std::optional<std::uint64_t> zero_witness;
    Status status = Status::exact;
    // Unset when the state cap stopped the search before deciding.
    std::optional<bool> linearly_recurrent;
    std::optional<bool> recurrence_guaranteed;
    std::uint64_t conjecture_bound = 0;     // p^deg P, saturating
    std::uint64_t naive_bound_digits = 0;   // decimal digits of p^(p^|T|), saturating
  };

  // Depends on P mod p only; Q and a are carried for reporting.
  Verdict verdict(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t prime, unsigned a,
                  const Limits& limits = {});

  struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
  };

  // Zeros among the first n terms over n, in lowest terms.
  Rational zero_frequency(std::span<const Scalar> seq, std::uint64_t n);
  std::uint64_t zero_count(std::span<const Scalar> seq, std::uint64_t n);

  struct GapRow {
    std::vector<Scalar> word;
    std::uint64_t occurrences = 0;
    std::uint64_t first = 0;
    std::uint64_t max_gap = 0;  // 0 when the word occurs once
    bool censored = false;      // tail after the last start exceeds max_gap
  };

  struct GapReport {
    std::uint64_t word_length = 0;
    std::uint64_t prefix_length = 0;
    std::vector<GapRow> rows;   // ordered by first occurrence
  };

  GapReport gap_stats(std::span<const Scalar> seq, std::uint64_t length, std::uint64_t n);

  struct CombinationPart {
    std::uint64_t shift = 0;
    LaurentPoly q;
    Scalar coefficient = 1;
  };

  // Component values ct(P^(n + k_i) Q_i) mod p^a for n < count, one tuple per
  // n, read from one shared state stream.
  std::vector<std::vector<Scalar>> combine_tuples(const LaurentPoly& p,
                                                  std::span<const CombinationPart> parts,
                                                  std::uint64_t prime, unsigned a,
                                                  std::uint64_t count, const Limits& limits = {});

  // b_n = sum_i beta_i ct(P^(n + k_i) Q_i) mod p^a.
  std::vector<Scalar> combine(const LaurentPoly& p, std::span<const CombinationPart> parts,
                              std::uint64_t prime, unsigned a, std::uint64_t count,
                              const Limits& limits = {});

  struct ConjectureSpec {
    unsigned degree_max = 3;
    unsigned coeff_max = 3;
    std::size_t count = 200;
    std::vector<std::uint64_t> primes = {2, 3, 5};
    std::uint64_t seed = 1;
  };

  // Seeded univariate corpus: exponents in [-degree_max, degree_max],
  // coefficients in [-coeff_max, coeff_max], degree at least 1.
  std::vector<LaurentPoly> conjecture_corpus(const ConjectureSpec& spec);

  struct ConjectureItem {
    std::size_t index = 0;
    LaurentPoly poly;
    std::uint64_t p = 0;
    Status status = Status::exact;
    std::optional<std::uint64_t> n0;
    bool verified = false;     // p | ct(P^n0) checked by the oracle
    std::uint64_t bound = 0;   // p^deg P
    bool violation = false;    // n0 >= bound
  };

  struct ConjectureReport {
    ConjectureSpec spec;
    std::vector<ConjectureItem> items;  // corpus order, then prime order
    std::size_t witnesses = 0;
    std::size_t violations = 0;
    std::size_t inconclusive = 0;
  };

  ConjectureReport conjecture_scan(const ConjectureSpec& spec, const Limits& limits = {},
                                   unsigned workers = 0);

} // namespace ctseq

#endif // CTSEQ_CLASSIFY_HPP
