#include "ctseq/linrep.hpp"

#include <algorithm>
#include <mutex>

namespace ctseq {

  std::vector<unsigned> digits_lsd(std::uint64_t n, std::uint64_t base)
  {
    if (base < 2)
      throw ArgumentError("digit base must be at least 2");
    std::vector<unsigned> d;
    while (n) {
      d.push_back(static_cast<unsigned>(n % base));
      n /= base;
    }
    return d;
  }

  // ------------------------------------------------------------ IndexSet

  IndexSet::IndexSet(std::size_t variables, std::int64_t radius)
    : r_(variables), m_(radius)
  {
    if (r_ == 0 || m_ < 0)
      throw ArgumentError("window needs r >= 1 and m >= 0");
    if (m_ > (1 << 20))
      throw ResourceError("window radius too large");
    side_ = static_cast<std::size_t>(2 * m_ + 1);
    long double size = 1;
    for (std::size_t d = 0; d < r_; ++d)
      size *= static_cast<long double>(side_);
    if (size > 1.0e12L)
      throw ResourceError("window too large");
    size_ = 1;
    for (std::size_t d = 0; d < r_; ++d)
      size_ *= side_;
    center_ = (size_ - 1) / 2;
  }

  std::optional<std::size_t> IndexSet::position(std::span<const Exponent> e) const
  {
    if (e.size() != r_)
      throw ArgumentError("exponent vector length does not match window");
    std::size_t pos = 0;
    for (std::size_t d = 0; d < r_; ++d) {
      if (e[d] < -m_ || e[d] > m_)
        return std::nullopt;
      pos = pos * side_ + static_cast<std::size_t>(e[d] + m_);
    }
    return pos;
  }

  ExponentVector IndexSet::at(std::size_t pos) const
  {
    if (pos >= size_)
      throw ArgumentError("window position out of range");
    ExponentVector e(r_);
    for (std::size_t d = r_; d-- > 0;) {
      e[d] = static_cast<Exponent>(static_cast<std::int64_t>(pos % side_) - m_);
      pos /= side_;
    }
    return e;
  }

  IndexSet build_index(const LaurentPoly& p, std::span<const LaurentPoly> qs, const Limits& limits)
  {
    std::int64_t m = std::max<std::int64_t>(p.degree() - 1, 0);
    for (const auto& q : qs) {
      if (q.variable_count() != p.variable_count())
        throw ArgumentError("variable count mismatch between P and Q");
      m = std::max(m, q.degree());
    }
    IndexSet window(p.variable_count(), m);
    if (window.size() > limits.window_cap)
      throw ResourceError("window size " + std::to_string(window.size())
                          + " exceeds the cap " + std::to_string(limits.window_cap));
    return window;
  }

  // --------------------------------------------------------- StateVector

  bool StateVector::is_zero() const
  {
    return std::all_of(entries_.begin(), entries_.end(), [](Scalar v) { return v == 0; });
  }

  std::size_t StateVectorHash::operator()(const StateVector& v) const noexcept
  {
    std::uint64_t h = 1469598103934665603ull;
    for (Scalar x : v.entries()) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  // -------------------------------------------------------- SparseMatrix

  SparseMatrix::SparseMatrix(std::size_t n,
                             std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> rows)
    : n_(n)
  {
    if (rows.size() != n)
      throw ArgumentError("row count does not match dimension");
    row_start_.reserve(n + 1);
    for (auto& row : rows) {
      std::sort(row.begin(), row.end());
      for (const auto& [j, v] : row) {
        if (v == 0)
          continue;
        cols_.push_back(j);
        vals_.push_back(v);
      }
      row_start_.push_back(cols_.size());
    }
  }

  Scalar SparseMatrix::at(std::size_t i, std::size_t j) const
  {
    auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[i]);
    auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[i + 1]);
    auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(j));
    if (it == last || *it != j)
      return 0;
    return vals_[static_cast<std::size_t>(it - cols_.begin())];
  }

  std::vector<Scalar> SparseMatrix::apply(std::span<const Scalar> u, const Ring& ring) const
  {
    if (u.size() != n_)
      throw ArgumentError("vector length does not match matrix dimension");
    std::vector<Scalar> out(n_, 0);
    const std::uint64_t m = ring.modulus();
    if (m < (std::uint64_t{1} << 32)) {
      for (std::size_t i = 0; i < n_; ++i) {
        unsigned __int128 acc = 0;
        for (std::size_t t = row_start_[i]; t < row_start_[i + 1]; ++t)
          acc += static_cast<std::uint64_t>(vals_[t]) * static_cast<std::uint64_t>(u[cols_[t]]);
        out[i] = static_cast<Scalar>(acc % m);
      }
    } else {
      for (std::size_t i = 0; i < n_; ++i) {
        Scalar acc = 0;
        for (std::size_t t = row_start_[i]; t < row_start_[i + 1]; ++t)
          acc = ring.add(acc, ring.mul(vals_[t], u[cols_[t]]));
        out[i] = acc;
      }
    }
    return out;
  }

  std::vector<Scalar> SparseMatrix::apply_row(std::span<const Scalar> v, const Ring& ring) const
  {
    if (v.size() != n_)
      throw ArgumentError("vector length does not match matrix dimension");
    std::vector<Scalar> out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (v[i] == 0)
        continue;
      for (std::size_t t = row_start_[i]; t < row_start_[i + 1]; ++t)
        out[cols_[t]] = ring.add(out[cols_[t]], ring.mul(v[i], vals_[t]));
    }
    return out;
  }

  SparseMatrix SparseMatrix::product(const SparseMatrix& a, const SparseMatrix& b, const Ring& ring)
  {
    if (a.n_ != b.n_)
      throw ArgumentError("matrix dimension mismatch");
    const std::size_t n = a.n_;
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> rows(n);
    std::vector<Scalar> acc(n, 0);
    std::vector<char> used(n, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < n; ++i) {
      touched.clear();
      for (std::size_t t = a.row_start_[i]; t < a.row_start_[i + 1]; ++t) {
        const std::size_t k = a.cols_[t];
        for (std::size_t s = b.row_start_[k]; s < b.row_start_[k + 1]; ++s) {
          const std::uint32_t j = b.cols_[s];
          if (!used[j]) {
            used[j] = 1;
            touched.push_back(j);
          }
          acc[j] = ring.add(acc[j], ring.mul(a.vals_[t], b.vals_[s]));
        }
      }
      for (std::uint32_t j : touched) {
        rows[i].emplace_back(j, acc[j]);
        acc[j] = 0;
        used[j] = 0;
      }
    }
    return SparseMatrix(n, std::move(rows));
  }

  bool SparseMatrix::is_unit_at(std::size_t c) const
  {
    return nonzeros() == 1 && at(c, c) == 1;
  }

  std::vector<std::vector<Scalar>> SparseMatrix::dense() const
  {
    std::vector<std::vector<Scalar>> d(n_, std::vector<Scalar>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t t = row_start_[i]; t < row_start_[i + 1]; ++t)
        d[i][cols_[t]] = vals_[t];
    }
    return d;
  }

  // --------------------------------------------------------------- LinRep

  struct LinRep::Cache {
    std::mutex mu;
    std::vector<std::shared_ptr<const SparseMatrix>> mats;
  };

  LinRep::LinRep(const LaurentPoly& p, const LaurentPoly& q, IndexSet window,
                 std::uint64_t prime, Ring ring, Limits limits)
    : poly_(p.ring() == ring ? p : p.reduced(ring)),
      window_(window), p_(prime), ring_(ring), limits_(limits),
      cache_(std::make_shared<Cache>())
  {
    if (!ring_.is_modular())
      throw ArgumentError("a linear representation needs a modular ring");
    if (prime < 2)
      throw ArgumentError("base must be a prime");
    if (p.variable_count() != window.variable_count())
      throw ArgumentError("window and polynomial variable counts differ");
    if (window_.size() > limits_.window_cap)
      throw ResourceError("window exceeds the cap");
    cache_->mats.resize(static_cast<std::size_t>(std::min<std::uint64_t>(prime, 1u << 20)));
    row_q_ = row_vector(q);
  }

  LinRep LinRep::build(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t prime,
                       Ring ring, Limits limits)
  {
    const LaurentPoly qs[] = {q};
    return LinRep(p, q, build_index(p, qs, limits), prime, ring, limits);
  }

  const SparseMatrix& LinRep::gamma(std::uint64_t k) const
  {
    if (k >= p_)
      throw ArgumentError("digit out of range");
    {
      std::lock_guard lock(cache_->mu);
      if (cache_->mats[k])
        return *cache_->mats[k];
    }

    // gamma(k)[i][j] = coefficient of x^(p j - i) in P^k. For a term x^e of
    // P^k the admissible j satisfy |p j_d - e_d| <= m in every coordinate.
    const LaurentPoly pk = pow(poly_, k, limits_.term_guard);
    const std::size_t r = window_.variable_count();
    const std::int64_t m = window_.radius();
    const auto p = static_cast<std::int64_t>(p_);
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> rows(window_.size());
    std::vector<std::int64_t> jlo(r), jhi(r);
    std::vector<Exponent> j(r), i(r);
    auto ceil_div = [](std::int64_t a, std::int64_t b) {
      return a >= 0 ? (a + b - 1) / b : -((-a) / b);
    };
    auto floor_div = [](std::int64_t a, std::int64_t b) {
      return a >= 0 ? a / b : -((-a + b - 1) / b);
    };
    for (std::size_t t = 0; t < pk.term_count(); ++t) {
      auto e = pk.exponent(t);
      bool empty = false;
      for (std::size_t d = 0; d < r; ++d) {
        jlo[d] = std::max(-m, ceil_div(e[d] - m, p));
        jhi[d] = std::min(m, floor_div(e[d] + m, p));
        empty |= jlo[d] > jhi[d];
      }
      if (empty)
        continue;
      for (std::size_t d = 0; d < r; ++d)
        j[d] = static_cast<Exponent>(jlo[d]);
      while (true) {
        for (std::size_t d = 0; d < r; ++d)
          i[d] = static_cast<Exponent>(p * j[d] - e[d]);
        const auto ip = window_.position(i);
        const auto jp = window_.position(j);
        rows[*ip].emplace_back(static_cast<std::uint32_t>(*jp), pk.coefficient(t));
        bool done = true;
        for (std::size_t d = r; d-- > 0;) {
          if (j[d] < jhi[d]) {
            ++j[d];
            done = false;
            break;
          }
          j[d] = static_cast<Exponent>(jlo[d]);
        }
        if (done)
          break;
      }
    }
    auto built = std::make_shared<const SparseMatrix>(window_.size(), std::move(rows));

    std::lock_guard lock(cache_->mu);
    if (!cache_->mats[k])
      cache_->mats[k] = std::move(built);
    return *cache_->mats[k];
  }

  void LinRep::materialize_all() const
  {
    if (p_ > limits_.prime_cap)
      throw ResourceError("prime " + std::to_string(p_) + " exceeds the materialization cap "
                          + std::to_string(limits_.prime_cap));
    for (std::uint64_t k = 0; k < p_; ++k)
      gamma(k);
  }

  StateVector LinRep::v0() const
  {
    std::vector<Scalar> e(window_.size(), 0);
    e[window_.center()] = 1;
    return StateVector(std::move(e), window_.center());
  }

  StateVector LinRep::apply(std::uint64_t k, const StateVector& u) const
  {
    if (u.size() != window_.size())
      throw ArgumentError("state vector does not match the window");
    return StateVector(gamma(k).apply(u.entries(), ring_), window_.center());
  }

  StateVector LinRep::state_vector(std::uint64_t n) const
  {
    const auto d = digits_lsd(n, p_);
    StateVector u = v0();
    for (auto it = d.rbegin(); it != d.rend(); ++it)
      u = apply(*it, u);
    return u;
  }

  RowVector LinRep::row_vector(const LaurentPoly& q) const
  {
    if (q.variable_count() != window_.variable_count())
      throw ArgumentError("variable count mismatch between Q and the window");
    const LaurentPoly qr = q.ring() == ring_ ? q : q.reduced(ring_);
    RowVector row(window_.size(), 0);
    for (std::size_t t = 0; t < qr.term_count(); ++t) {
      const auto pos = window_.position(qr.exponent(t));
      if (!pos)
        throw ArgumentError("polynomial does not fit the coefficient window");
      row[*pos] = qr.coefficient(t);
    }
    return row;
  }

  Scalar LinRep::code(const RowVector& row, const StateVector& u) const
  {
    if (row.size() != u.size())
      throw ArgumentError("row length does not match the window");
    Scalar acc = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0 && u[i] != 0)
        acc = ring_.add(acc, ring_.mul(row[i], u[i]));
    }
    return acc;
  }

  unsigned LinRep::settle_exponent() const
  {
    const std::int64_t m = std::max<std::int64_t>(window_.radius(), 1);
    const auto bound = digits_lsd(static_cast<std::uint64_t>(m), p_).size();
    const SparseMatrix& g0 = gamma(0);
    SparseMatrix power = g0;
    unsigned s = 1;
    while (!power.is_unit_at(window_.center())) {
      if (++s > bound)
        throw InternalError("gamma(0) failed to settle within the degree bound");
      power = SparseMatrix::product(power, g0, ring_);
    }
    return s;
  }

} // namespace ctseq
