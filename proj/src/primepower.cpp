#include "ctseq/primepower.hpp"

#include <algorithm>
#include <climits>

namespace ctseq {

  bool is_prime(std::uint64_t n)
  {
    if (n < 2)
      return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0)
        return false;
    }
    return true;
  }

  std::uint64_t prime_power(std::uint64_t p, unsigned a)
  {
    if (a == 0)
      throw ArgumentError("exponent a must be positive");
    std::uint64_t m = 1;
    for (unsigned i = 0; i < a; ++i) {
      if (m > ((std::uint64_t{1} << 62) - 1) / p)
        throw ResourceError("modulus p^a must stay below 2^62");
      m *= p;
    }
    return m;
  }

  namespace {

    unsigned valuation(std::int64_t v, std::uint64_t p)
    {
      auto u = static_cast<std::uint64_t>(v < 0 ? -v : v);
      unsigned k = 0;
      while (u % p == 0) {
        u /= p;
        ++k;
      }
      return k;
    }

    std::int64_t ipow(std::uint64_t p, unsigned e)
    {
      std::int64_t r = 1;
      for (unsigned i = 0; i < e; ++i)
        r *= static_cast<std::int64_t>(p);
      return r;
    }

    // Least p-adic valuation over the nonzero exponent entries; r must not be
    // constant.
    unsigned min_valuation(const LaurentPoly& r, std::uint64_t p)
    {
      unsigned ell = UINT_MAX;
      for (std::size_t t = 0; t < r.term_count(); ++t) {
        for (Exponent e : r.exponent(t)) {
          if (e != 0)
            ell = std::min(ell, valuation(e, p));
        }
      }
      return ell;
    }

  } // namespace

  PTilde reduce_p_tilde(const LaurentPoly& p, std::uint64_t prime, unsigned a, const Limits& limits)
  {
    const Ring ring = Ring::modular(prime_power(prime, a));
    const LaurentPoly pr = p.ring() == ring ? p : p.reduced(ring);
    if (a == 1)
      return {pr, 0};
    // P^(p^(a-1)) by a-1 p-th powers. Whenever every exponent is divisible
    // by p^v the power is taken on the compressed polynomial, where X^p is
    // (Lambda_{p^v} X)^p substituted back.
    LaurentPoly r = pr;
    for (unsigned i = 0; i + 1 < a; ++i) {
      const unsigned v = r.is_constant() ? 0 : min_valuation(r, prime);
      const std::int64_t g = ipow(prime, v);
      r = pow(lambda(r, g), prime, limits.term_guard).substitute_power(g);
    }
    if (r.is_constant())
      return {r, 0};
    const unsigned ell = min_valuation(r, prime);
    return {lambda(r, ipow(prime, ell)), ell};
  }

  TildeReduction::TildeReduction(const LaurentPoly& p, std::span<const LaurentPoly> qs,
                                 std::uint64_t prime, unsigned a, const Limits& limits)
    : p_(prime), a_(a), ring_(Ring::modular(prime_power(prime, a))),
      blocks_(prime_power(prime, a) / prime), limits_(limits),
      tilde_(reduce_p_tilde(p, prime, a, limits)),
      block_polys_([&] {
        if (blocks_ > limits.block_cap)
          throw ResourceError("p^(a-1) residue blocks exceed the block cap");
        if (qs.empty())
          throw ArgumentError("at least one Q is required");
        const LaurentPoly pr = p.reduced(ring_);
        const std::int64_t section = ipow(prime, tilde_.ell);
        std::vector<std::vector<LaurentPoly>> out;
        for (const auto& q : qs) {
          if (q.variable_count() != p.variable_count())
            throw ArgumentError("variable count mismatch between P and Q");
          std::vector<LaurentPoly> rows;
          rows.reserve(blocks_);
          LaurentPoly running = q.ring() == ring_ ? q : q.reduced(ring_);
          for (std::uint64_t k = 0; k < blocks_; ++k) {
            rows.push_back(lambda(running, section));
            if (k + 1 < blocks_)
              running = mul(running, pr, limits.term_guard);
          }
          out.push_back(std::move(rows));
        }
        return out;
      }()),
      rep_([&] {
        std::vector<LaurentPoly> all;
        for (const auto& rows : block_polys_)
          all.insert(all.end(), rows.begin(), rows.end());
        IndexSet window = build_index(tilde_.poly, all, limits);
        return LinRep(tilde_.poly, block_polys_[0][0], window, prime, ring_, limits);
      }())
  {
    for (const auto& rows : block_polys_) {
      std::vector<RowVector> coded;
      coded.reserve(rows.size());
      for (const auto& b : rows)
        coded.push_back(rep_.row_vector(b));
      block_rows_.push_back(std::move(coded));
    }
  }

  Scalar TildeReduction::term(std::uint64_t n_prime, std::size_t qi) const
  {
    const auto& rows = block_rows_.at(qi);
    return rep_.code(rows[n_prime % blocks_], rep_.state_vector(n_prime / blocks_));
  }

  Scalar TildeReduction::term(const MorphicStream& stream, std::uint64_t n_prime, std::size_t qi) const
  {
    const auto& rows = block_rows_.at(qi);
    return rep_.code(rows[n_prime % blocks_], stream.at(n_prime / blocks_));
  }

  std::vector<Scalar> TildeReduction::prefix(std::uint64_t count, std::size_t qi) const
  {
    MorphicStream stream(rep_);
    stream.extend((count + blocks_ - 1) / blocks_);
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n)
      out.push_back(term(stream, n, qi));
    return out;
  }

  Dfao TildeReduction::forward_dfao(std::size_t qi) const
  {
    return build_forward_staged(tilde_.poly, block_polys_.at(qi), a_ - 1, p_, ring_, limits_);
  }

  Scalar TildeReduction::reverse_term(const Dfao& reverse, std::uint64_t n_prime, std::size_t qi) const
  {
    if (reverse.direction != Direction::reverse)
      throw ArgumentError("expected a reverse automaton");
    return run(reverse, n_prime / blocks_, &block_rows_.at(qi)[n_prime % blocks_]);
  }

  ForwardMachine TildeReduction::forward_machine(std::size_t qi) const
  {
    return ForwardMachine(tilde_.poly, block_polys_.at(qi), a_ - 1, p_, ring_, limits_);
  }

  Scalar TildeReduction::reverse_term(ReverseMachine& reverse, std::uint64_t n_prime, std::size_t qi) const
  {
    return reverse.run(n_prime / blocks_, &block_rows_.at(qi)[n_prime % blocks_]);
  }

  TildeReduction build_reduction(const LaurentPoly& p, const LaurentPoly& q,
                                 std::uint64_t prime, unsigned a, const Limits& limits)
  {
    const LaurentPoly qs[] = {q};
    return TildeReduction(p, qs, prime, a, limits);
  }

} // namespace ctseq
