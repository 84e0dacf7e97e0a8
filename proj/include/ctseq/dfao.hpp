#ifndef CTSEQ_DFAO_HPP
#define CTSEQ_DFAO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctseq/linrep.hpp"
#include "ctseq/morphism.hpp"

namespace ctseq {

  enum class Direction { forward, reverse };
  enum class ExportFormat { dot, walnut };

  // Deterministic finite automaton with output over base-p digits.
  //
  // A forward machine reads the lsd-first digits of n and its states are
  // labeled by polynomials. A reverse machine has state vectors V as states
  // and consumes the same digit word from its last character, so that the
  // state reached on n is V(n).
  struct Dfao {
    Direction direction = Direction::forward;
    std::uint64_t base = 2;
    Ring ring = Ring::integers();
    std::uint32_t initial = 0;
    std::vector<std::uint32_t> transitions;  // state * base + digit
    std::vector<Scalar> outputs;
    std::vector<std::string> labels;
    std::vector<StateVector> vectors;        // reverse machines only

    std::size_t state_count() const { return outputs.size(); }
    std::uint32_t next(std::uint32_t state, unsigned digit) const
    {
      return transitions[static_cast<std::size_t>(state) * base + digit];
    }
  };

  // Closure of {Q} under Q -> Lambda_p(P^k Q), output ct(state). P must be
  // stable (P^p = P(x^p) in the ring), which always holds mod p.
  Dfao build_forward(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t prime,
                     Ring ring, const Limits& limits = {});

  // Forward machine whose first `depth` digits spell k = sum d_i p^i and
  // then continue from seeds[k]; seeds.size() must be p^depth. Prefix states
  // output ct(seeds[k]) for the partial value k read so far.
  Dfao build_forward_staged(const LaurentPoly& p, std::span<const LaurentPoly> seeds,
                            unsigned depth, std::uint64_t prime, Ring ring,
                            const Limits& limits = {});

  // The staged forward machine, expanded on demand: a state gets its
  // transitions the first time a digit is read from it. Expanding everything
  // from a fresh machine gives build_forward_staged.
  class ForwardMachine {
  public:
    ForwardMachine(const LaurentPoly& p, std::span<const LaurentPoly> seeds, unsigned depth,
                   std::uint64_t prime, Ring ring, const Limits& limits = {});

    std::uint32_t initial() const { return 0; }
    std::uint32_t next(std::uint32_t state, unsigned digit);
    Scalar output(std::uint32_t state) const { return d_.outputs[state]; }
    Scalar run(std::uint64_t n);
    std::size_t state_count() const { return d_.outputs.size(); }
    // Expands every state in id order.
    Dfao complete();

  private:
    struct Node {
      bool prefix;
      unsigned level;
      std::uint64_t value;  // partial digit value for prefix nodes
      std::size_t poly;     // index into polys_ otherwise
    };
    std::uint32_t add_state(Node n, std::string label, Scalar out);
    std::uint32_t poly_state(LaurentPoly q);
    std::uint32_t prefix_state(unsigned level, std::uint64_t value);
    LaurentPoly seed(std::uint64_t k) const;

    std::uint64_t p_;
    unsigned depth_;
    Ring ring_;
    Limits limits_;
    std::vector<LaurentPoly> seeds_;
    std::vector<LaurentPoly> powers_;
    Dfao d_;
    std::vector<Node> nodes_;
    std::vector<LaurentPoly> polys_;
    std::unordered_map<std::string, std::uint32_t> poly_ids_;
    std::unordered_map<std::uint64_t, std::uint32_t> prefix_ids_;
  };

  // The reverse machine expanded on demand over a representation that must
  // outlive it. Reading n visits V(n / p^j) for each j.
  class ReverseMachine {
  public:
    explicit ReverseMachine(const LinRep& rep) : table_(rep) {}
    // row . V(n) when row is given, else V(n)[C].
    Scalar run(std::uint64_t n, const RowVector* row = nullptr);
    std::size_t state_count() const { return table_.size(); }

  private:
    LetterTable table_;
  };

  // Closure of {V(0)} under V -> gamma(k) V; output is V[C]. State ids match
  // the letter ids of a MorphicStream over the same representation.
  Dfao build_reverse(const LinRep& rep);

  // Forward: output of the state reached on the lsd-first digits of n.
  // Reverse: row . V(n) when row is given, else V(n)[C].
  Scalar run(const Dfao& d, std::uint64_t n, const RowVector* row = nullptr);

  std::string export_dfao(const Dfao& d, ExportFormat format);
  ExportFormat parse_export_format(const std::string& tag);

} // namespace ctseq

#endif // CTSEQ_DFAO_HPP
