#ifndef CTSEQ_POLYTEXT_HPP
#define CTSEQ_POLYTEXT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctseq/laurent.hpp"

namespace ctseq {

  // Grammar (whitespace insignificant):
  //   poly     := term (('+' | '-') term)*
  //   term     := sign? factor (('*' | '/') factor)*
  //   factor   := integer | variable ('^' signed-integer)? | '(' poly ')' ('^' integer)?
  //   variable := 'x' | 'y' | 'z' | 'x' digits
  // Division is exact only by monomials with coefficient +-1. The result has
  // at least `min_variables` variables; x, y, z are x1, x2, x3.
  LaurentPoly parse_poly(std::string_view text, std::size_t min_variables = 1);

  // Canonical text: lexicographic term order, '*' between factors, '^' for
  // exponents other than 1. Variables are x, y, z for r <= 3, else x1..xr.
  std::string format_poly(const LaurentPoly& a);

  struct Preset {
    std::string name;
    std::string p_text;
    std::string q_text;
  };

  const std::vector<Preset>& presets();
  std::optional<Preset> find_preset(std::string_view name);

} // namespace ctseq

#endif // CTSEQ_POLYTEXT_HPP
