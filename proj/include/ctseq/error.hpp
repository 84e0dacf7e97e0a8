#ifndef CTSEQ_ERROR_HPP
#define CTSEQ_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ctseq {

  // Caller-side mistakes: arity or ring mismatch, digit out of range,
  // a polynomial that does not fit a window.
  class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
  };

  class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
    std::size_t position() const noexcept { return position_; }
  private:
    std::size_t position_;
  };

  // A configured cap (terms, window, states, blocks, stream length) was hit.
  class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
  };

  // Broken internal invariant.
  class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
  };

  struct Limits {
    std::size_t term_guard = 10'000'000;     // terms per polynomial product; 256x in term pairs
    std::size_t window_cap = 5000;           // |T|
    std::uint64_t prime_cap = 101;           // p when all gamma(k) are forced
    std::uint64_t block_cap = 1u << 16;      // p^(a-1) residue blocks
    std::size_t state_cap = 1u << 20;        // automaton / reachability states
    std::uint64_t stream_cap = 50'000'000;   // letters in a morphic prefix
    std::uint64_t oracle_max_n = 1'000'000;  // largest exponent the oracle expands
  };

} // namespace ctseq

#endif // CTSEQ_ERROR_HPP
