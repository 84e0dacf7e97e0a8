#ifndef CTSEQ_TEST_SUPPORT_HPP
#define CTSEQ_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "ctseq/laurent.hpp"
#include "ctseq/oracle.hpp"
#include "ctseq/polytext.hpp"

namespace test {

  using namespace ctseq;

  inline LaurentPoly P(const std::string& text, std::size_t r = 1) { return parse_poly(text, r); }

  inline LaurentPoly preset_p(const std::string& name)
  {
    return parse_poly(find_preset(name)->p_text);
  }
  inline LaurentPoly preset_q(const std::string& name)
  {
    return parse_poly(find_preset(name)->q_text, preset_p(name).variable_count());
  }

  inline std::vector<Scalar> truth(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t modulus,
                                   std::uint64_t count)
  {
    oracle::OracleConfig cfg;
    cfg.modulus = modulus;
    return oracle::sequence(p, q, count, cfg);
  }

  inline Scalar truth_at(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t modulus, std::uint64_t n)
  {
    oracle::OracleConfig cfg;
    cfg.modulus = modulus;
    return oracle::ct_pow_mod(p, q, n, cfg);
  }

  // Random Laurent polynomial with up to `terms` terms.
  inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t r, int deg, int coeff, std::size_t terms)
  {
    std::uniform_int_distribution<int> e(-deg, deg), c(-coeff, coeff);
    std::uniform_int_distribution<std::size_t> t(0, terms);
    std::vector<std::pair<ExponentVector, Scalar>> list;
    const std::size_t count = t(rng);
    for (std::size_t i = 0; i < count; ++i) {
      ExponentVector v(r);
      for (std::size_t d = 0; d < r; ++d)
        v[d] = e(rng);
      list.emplace_back(v, c(rng));
    }
    return LaurentPoly::from_terms(r, Ring::integers(), std::move(list));
  }

  inline const std::vector<std::string>& preset_names()
  {
    static const std::vector<std::string> names{"pascal", "catalan", "motzkin", "trinomial", "apery"};
    return names;
  }

} // namespace test

#endif
