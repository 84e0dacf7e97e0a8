#ifndef CTSEQ_LAURENT_HPP
#define CTSEQ_LAURENT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "ctseq/error.hpp"

namespace ctseq {

  using Scalar = std::int64_t;
  using Exponent = std::int32_t;

  // Coefficient ring: the integers (modulus 0) or Z/MZ with 2 <= M < 2^62.
  // Residues are stored in [0, M).
  class Ring {
  public:
    static Ring integers() { return Ring(0); }
    static Ring modular(std::uint64_t modulus);

    bool is_modular() const { return modulus_ != 0; }
    std::uint64_t modulus() const { return modulus_; }

    Scalar reduce(Scalar v) const;
    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar mul(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const { return sub(0, a); }

    friend bool operator==(const Ring&, const Ring&) = default;

  private:
    explicit Ring(std::uint64_t m) : modulus_(m) {}
    std::uint64_t modulus_;
  };

  class ExponentVector {
  public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t r) : e_(r, 0) {}
    ExponentVector(std::initializer_list<Exponent> e) : e_(e) {}
    explicit ExponentVector(std::span<const Exponent> e) : e_(e.begin(), e.end()) {}

    std::size_t size() const { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    Exponent& operator[](std::size_t i) { return e_[i]; }
    std::span<const Exponent> view() const { return e_; }
    bool is_zero() const;

    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  private:
    std::vector<Exponent> e_;
  };

  // Sparse Laurent polynomial in r >= 1 variables. Terms are kept sorted in
  // lexicographic exponent order and no stored coefficient is zero.
  class LaurentPoly {
  public:
    explicit LaurentPoly(std::size_t variables = 1, Ring ring = Ring::integers());

    static LaurentPoly constant(std::size_t variables, Scalar c, Ring ring = Ring::integers());
    static LaurentPoly monomial(const ExponentVector& e, Scalar c, Ring ring = Ring::integers());
    // Duplicate exponents are summed.
    static LaurentPoly from_terms(std::size_t variables, Ring ring,
                                  std::vector<std::pair<ExponentVector, Scalar>> terms);

    std::size_t variable_count() const { return vars_; }
    const Ring& ring() const { return ring_; }
    std::size_t term_count() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;

    std::span<const Exponent> exponent(std::size_t t) const {
      return {exps_.data() + t * vars_, vars_};
    }
    Scalar coefficient(std::size_t t) const { return coeffs_[t]; }

    Scalar coeff(std::span<const Exponent> e) const;
    Scalar coeff(const ExponentVector& e) const { return coeff(e.view()); }
    Scalar constant_term() const;

    // Largest absolute exponent entry; 0 for constants and for 0.
    std::int64_t degree() const;

    // Coefficients mapped into `target` (integers -> Z/MZ, or Z/MZ -> Z/M'Z
    // with M' | M).
    LaurentPoly reduced(Ring target) const;
    // Pads exponent vectors with zeros up to r variables.
    LaurentPoly with_variable_count(std::size_t r) const;
    // x_i -> x_i^k for every variable.
    LaurentPoly substitute_power(std::int64_t k) const;
    LaurentPoly scaled(Scalar c) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  private:
    friend class TermBuilder;
    std::size_t vars_;
    Ring ring_;
    std::vector<Exponent> exps_;  // vars_ entries per term
    std::vector<Scalar> coeffs_;
  };

  LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b,
                  std::size_t term_guard = Limits{}.term_guard);
  // lambda(mul(a, b), k) without forming the discarded terms.
  LaurentPoly lambda_mul(const LaurentPoly& a, const LaurentPoly& b, std::int64_t k,
                         std::size_t term_guard = Limits{}.term_guard);
  // Repeated squaring with reduction at every step.
  LaurentPoly pow(const LaurentPoly& a, std::uint64_t n,
                  std::size_t term_guard = Limits{}.term_guard);
  // Keeps terms whose exponents are all divisible by k and divides them by k.
  LaurentPoly lambda(const LaurentPoly& a, std::int64_t k);

  inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
  inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
  inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

} // namespace ctseq

#endif // CTSEQ_LAURENT_HPP
