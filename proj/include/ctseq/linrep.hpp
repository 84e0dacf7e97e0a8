#ifndef CTSEQ_LINREP_HPP
#define CTSEQ_LINREP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ctseq/laurent.hpp"

namespace ctseq {

  // The coefficient window [-m, m]^r in lexicographic order.
  class IndexSet {
  public:
    IndexSet(std::size_t variables, std::int64_t radius);

    std::size_t variable_count() const { return r_; }
    std::int64_t radius() const { return m_; }
    std::size_t size() const { return size_; }
    // Position of the all-zero exponent vector.
    std::size_t center() const { return center_; }

    std::optional<std::size_t> position(std::span<const Exponent> e) const;
    ExponentVector at(std::size_t pos) const;

  private:
    std::size_t r_;
    std::int64_t m_;
    std::size_t side_;
    std::size_t size_;
    std::size_t center_;
  };

  // m = max(deg P - 1, max deg Q_i, 0).
  IndexSet build_index(const LaurentPoly& p, std::span<const LaurentPoly> qs,
                       const Limits& limits = {});

  // A column of windowed coefficients, entries in [0, modulus).
  class StateVector {
  public:
    StateVector() = default;
    StateVector(std::vector<Scalar> entries, std::size_t center)
      : entries_(std::move(entries)), center_(center) {}

    std::size_t size() const { return entries_.size(); }
    Scalar operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Scalar>& entries() const { return entries_; }
    std::size_t center() const { return center_; }
    Scalar constant_entry() const { return entries_[center_]; }
    bool is_zero() const;

    friend bool operator==(const StateVector& a, const StateVector& b)
    {
      return a.entries_ == b.entries_;
    }

  private:
    std::vector<Scalar> entries_;
    std::size_t center_ = 0;
  };

  struct StateVectorHash {
    std::size_t operator()(const StateVector& v) const noexcept;
  };

  using RowVector = std::vector<Scalar>;

  // Square sparse matrix over a Z/MZ ring, compressed by rows.
  class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t n, std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> rows);

    std::size_t dimension() const { return n_; }
    std::size_t nonzeros() const { return cols_.size(); }
    Scalar at(std::size_t i, std::size_t j) const;

    // M * u
    std::vector<Scalar> apply(std::span<const Scalar> u, const Ring& ring) const;
    // v * M
    std::vector<Scalar> apply_row(std::span<const Scalar> v, const Ring& ring) const;

    static SparseMatrix product(const SparseMatrix& a, const SparseMatrix& b, const Ring& ring);
    // True when the matrix is e_{c,c}.
    bool is_unit_at(std::size_t c) const;
    std::vector<std::vector<Scalar>> dense() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<std::size_t> row_start_{0};
    std::vector<std::uint32_t> cols_;
    std::vector<Scalar> vals_;
  };

  // The p-linear representation (vec(Q), gamma, V(0)) of ct(P^n Q) over
  // Z/MZ. gamma(k) is built on first use and shared between copies.
  class LinRep {
  public:
    LinRep(const LaurentPoly& p, const LaurentPoly& q, IndexSet window,
           std::uint64_t prime, Ring ring, Limits limits = {});

    // Window from build_index(P, {Q}).
    static LinRep build(const LaurentPoly& p, const LaurentPoly& q,
                        std::uint64_t prime, Ring ring, Limits limits = {});

    std::uint64_t prime() const { return p_; }
    const Ring& ring() const { return ring_; }
    const IndexSet& index_set() const { return window_; }
    const LaurentPoly& poly() const { return poly_; }
    const RowVector& row_q() const { return row_q_; }
    const Limits& limits() const { return limits_; }

    const SparseMatrix& gamma(std::uint64_t k) const;
    // Forces every digit matrix; refuses primes above the configured cap.
    void materialize_all() const;

    StateVector v0() const;
    StateVector apply(std::uint64_t k, const StateVector& u) const;
    StateVector state_vector(std::uint64_t n) const;

    // vec(Q) in this window; Q must fit.
    RowVector row_vector(const LaurentPoly& q) const;
    Scalar code(const RowVector& row, const StateVector& u) const;
    Scalar eval_term(std::uint64_t n) const { return code(row_q_, state_vector(n)); }
    Scalar eval_term(const RowVector& row, std::uint64_t n) const { return code(row, state_vector(n)); }

    // Least s >= 1 with gamma(0)^s = e_{C,C}.
    unsigned settle_exponent() const;

  private:
    struct Cache;
    LaurentPoly poly_;
    IndexSet window_;
    std::uint64_t p_;
    Ring ring_;
    Limits limits_;
    RowVector row_q_;
    std::shared_ptr<Cache> cache_;
  };

  // lsd-first base-p digits of n; empty for n = 0.
  std::vector<unsigned> digits_lsd(std::uint64_t n, std::uint64_t base);

} // namespace ctseq

#endif // CTSEQ_LINREP_HPP
