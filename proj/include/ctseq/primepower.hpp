#ifndef CTSEQ_PRIMEPOWER_HPP
#define CTSEQ_PRIMEPOWER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ctseq/dfao.hpp"
#include "ctseq/linrep.hpp"
#include "ctseq/morphism.hpp"

namespace ctseq {

  bool is_prime(std::uint64_t n);
  // p^a, rejecting results at or above 2^62.
  std::uint64_t prime_power(std::uint64_t p, unsigned a);

  struct PTilde {
    LaurentPoly poly;
    unsigned ell = 0;
  };

  // P^(p^(a-1)) = P~(x^(p^ell)) mod p^a with ell maximal. A constant
  // P^(p^(a-1)) gives ell = 0; a = 1 gives (P mod p, 0).
  PTilde reduce_p_tilde(const LaurentPoly& p, std::uint64_t prime, unsigned a,
                        const Limits& limits = {});

  // Everything needed to read ct(P^n' Q) mod p^a off the stable P~: the
  // residue k = n' mod p^(a-1) picks the coding row vec(Lambda_{p^ell}(P^k Q))
  // and n = n' / p^(a-1) indexes the state vector V~(n).
  class TildeReduction {
  public:
    TildeReduction(const LaurentPoly& p, std::span<const LaurentPoly> qs,
                   std::uint64_t prime, unsigned a, const Limits& limits = {});

    std::uint64_t prime() const { return p_; }
    unsigned exponent() const { return a_; }
    const Ring& ring() const { return ring_; }
    std::uint64_t block_count() const { return blocks_; }
    const LaurentPoly& p_tilde() const { return tilde_.poly; }
    unsigned ell() const { return tilde_.ell; }
    std::size_t q_count() const { return block_polys_.size(); }
    const std::vector<LaurentPoly>& block_polys(std::size_t qi = 0) const { return block_polys_.at(qi); }
    const std::vector<RowVector>& block_rows(std::size_t qi = 0) const { return block_rows_.at(qi); }
    const LinRep& tilde_rep() const { return rep_; }

    Scalar term(std::uint64_t n_prime, std::size_t qi = 0) const;
    // Same value read from an already extended stream over tilde_rep().
    Scalar term(const MorphicStream& stream, std::uint64_t n_prime, std::size_t qi = 0) const;
    std::vector<Scalar> prefix(std::uint64_t count, std::size_t qi = 0) const;

    Dfao forward_dfao(std::size_t qi = 0) const;
    // Reverse machine over tilde_rep(); pair with reverse_term.
    Dfao reverse_dfao() const { return build_reverse(rep_); }
    Scalar reverse_term(const Dfao& reverse, std::uint64_t n_prime, std::size_t qi = 0) const;

    // On-demand versions of the two machines; the reverse one refers to
    // tilde_rep() and must not outlive this object.
    ForwardMachine forward_machine(std::size_t qi = 0) const;
    ReverseMachine reverse_machine() const { return ReverseMachine(rep_); }
    Scalar reverse_term(ReverseMachine& reverse, std::uint64_t n_prime, std::size_t qi = 0) const;

  private:
    std::uint64_t p_;
    unsigned a_;
    Ring ring_;
    std::uint64_t blocks_;
    Limits limits_;
    PTilde tilde_;
    std::vector<std::vector<LaurentPoly>> block_polys_;
    std::vector<std::vector<RowVector>> block_rows_;
    LinRep rep_;
  };

  TildeReduction build_reduction(const LaurentPoly& p, const LaurentPoly& q,
                                 std::uint64_t prime, unsigned a, const Limits& limits = {});

} // namespace ctseq

#endif // CTSEQ_PRIMEPOWER_HPP
