#include "ctseq/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace ctseq::oracle {

  namespace {

    struct Box {
      std::vector<std::int64_t> lo, hi, stride;
      std::vector<std::uint64_t> cells;
      bool empty = true;

      void shape(std::size_t r)
      {
        stride.assign(r, 0);
        std::uint64_t s = 1;
        for (std::size_t d = r; d-- > 0;) {
          stride[d] = static_cast<std::int64_t>(s);
          s *= static_cast<std::uint64_t>(hi[d] - lo[d] + 1);
        }
        cells.assign(s, 0);
      }

      std::uint64_t at_origin() const
      {
        if (empty)
          return 0;
        std::int64_t idx = 0;
        for (std::size_t d = 0; d < lo.size(); ++d) {
          if (lo[d] > 0 || hi[d] < 0)
            return 0;
          idx += -lo[d] * stride[d];
        }
        return cells[static_cast<std::size_t>(idx)];
      }
    };

    class Expander {
    public:
      Expander(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t horizon,
               const OracleConfig& cfg)
        : r_(p.variable_count()), m_(cfg.modulus), guard_(cfg.cell_guard)
      {
        if (m_ < 2)
          throw ArgumentError("oracle modulus must be at least 2");
        if (q.variable_count() != r_)
          throw ArgumentError("variable count mismatch between P and Q");
        if (horizon > cfg.max_n)
          throw ResourceError("oracle exponent exceeds max_n");
        pmin_.assign(r_, 0);
        pmax_.assign(r_, 0);
        bool first = true;
        for (std::size_t t = 0; t < p.term_count(); ++t) {
          const std::uint64_t c = residue(p.coefficient(t));
          if (!c)
            continue;
          auto e = p.exponent(t);
          for (std::size_t d = 0; d < r_; ++d) {
            pexp_.push_back(e[d]);
            pmin_[d] = first ? e[d] : std::min<std::int64_t>(pmin_[d], e[d]);
            pmax_[d] = first ? e[d] : std::max<std::int64_t>(pmax_[d], e[d]);
          }
          pcoef_.push_back(c);
          first = false;
        }
        const unsigned __int128 worst = static_cast<unsigned __int128>(m_ - 1) * (m_ - 1)
                                      * (pcoef_.size() + 1);
        lazy_ = worst < (static_cast<unsigned __int128>(1) << 63);

        // Initial box: Q clipped to what P^s, s <= horizon, can bring to zero.
        box_.lo.assign(r_, 0);
        box_.hi.assign(r_, 0);
        std::vector<std::pair<std::vector<std::int64_t>, std::uint64_t>> qt;
        for (std::size_t t = 0; t < q.term_count(); ++t) {
          const std::uint64_t c = residue(q.coefficient(t));
          auto e = q.exponent(t);
          std::vector<std::int64_t> ev(e.begin(), e.end());
          if (c && reachable(ev, horizon))
            qt.emplace_back(std::move(ev), c);
        }
        if (!qt.empty()) {
          for (std::size_t d = 0; d < r_; ++d) {
            box_.lo[d] = box_.hi[d] = qt[0].first[d];
            for (const auto& [ev, c] : qt) {
              box_.lo[d] = std::min(box_.lo[d], ev[d]);
              box_.hi[d] = std::max(box_.hi[d], ev[d]);
            }
          }
          box_.shape(r_);
          check_guard();
          for (const auto& [ev, c] : qt) {
            std::int64_t idx = 0;
            for (std::size_t d = 0; d < r_; ++d)
              idx += (ev[d] - box_.lo[d]) * box_.stride[d];
            box_.cells[static_cast<std::size_t>(idx)] = c;
          }
          box_.empty = false;
        }
      }

      std::uint64_t constant_term() const { return box_.at_origin(); }

      // Multiplies by P; afterwards `remaining` multiplications are left.
      void step(std::uint64_t remaining)
      {
        if (box_.empty)
          return;
        if (pcoef_.empty()) {
          box_.empty = true;
          return;
        }
        Box next;
        next.lo.resize(r_);
        next.hi.resize(r_);
        const auto t = static_cast<std::int64_t>(remaining);
        for (std::size_t d = 0; d < r_; ++d) {
          next.lo[d] = std::max(box_.lo[d] + pmin_[d], std::min<std::int64_t>(0, -pmax_[d] * t));
          next.hi[d] = std::min(box_.hi[d] + pmax_[d], std::max<std::int64_t>(0, -pmin_[d] * t));
          if (next.lo[d] > next.hi[d]) {
            box_.empty = true;
            return;
          }
        }
        std::swap(box_, next);
        box_.empty = false;
        box_.shape(r_);
        check_guard();

        const std::size_t terms = pcoef_.size();
        std::vector<std::int64_t> coord(next.lo);
        for (std::size_t idx = 0; idx < next.cells.size(); ++idx) {
          const std::uint64_t v = next.cells[idx];
          if (v) {
            for (std::size_t k = 0; k < terms; ++k) {
              std::int64_t target = 0;
              bool inside = true;
              for (std::size_t d = 0; d < r_; ++d) {
                const std::int64_t e = coord[d] + pexp_[k * r_ + d];
                if (e < box_.lo[d] || e > box_.hi[d]) {
                  inside = false;
                  break;
                }
                target += (e - box_.lo[d]) * box_.stride[d];
              }
              if (!inside)
                continue;
              std::uint64_t& slot = box_.cells[static_cast<std::size_t>(target)];
              if (lazy_)
                slot += v * pcoef_[k];
              else
                slot = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * pcoef_[k] + slot) % m_);
            }
          }
          for (std::size_t d = r_; d-- > 0;) {
            if (++coord[d] <= next.hi[d])
              break;
            coord[d] = next.lo[d];
          }
        }
        if (lazy_) {
          bool any = false;
          for (auto& c : box_.cells) {
            c %= m_;
            any |= c != 0;
          }
          box_.empty = !any;
        }
      }

    private:
      std::uint64_t residue(Scalar c) const
      {
        const auto m = static_cast<Scalar>(m_);
        Scalar v = c % m;
        return static_cast<std::uint64_t>(v < 0 ? v + m : v);
      }

      bool reachable(const std::vector<std::int64_t>& e, std::uint64_t steps) const
      {
        const auto t = static_cast<std::int64_t>(steps);
        // Hull of the exponents that P^s, s <= steps, can cancel.
        for (std::size_t d = 0; d < r_; ++d) {
          if (e[d] < std::min<std::int64_t>(0, -pmax_[d] * t)
              || e[d] > std::max<std::int64_t>(0, -pmin_[d] * t))
            return false;
        }
        return true;
      }

      void check_guard() const
      {
        if (box_.cells.size() > guard_)
          throw ResourceError("oracle box exceeds the cell guard");
      }

      std::size_t r_;
      std::uint64_t m_;
      std::uint64_t guard_;
      std::vector<std::int64_t> pexp_;
      std::vector<std::uint64_t> pcoef_;
      std::vector<std::int64_t> pmin_, pmax_;
      bool lazy_ = false;
      Box box_;
    };

  } // namespace

  Scalar ct_pow_mod(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t n,
                    const OracleConfig& config)
  {
    Expander ex(p, q, n, config);
    for (std::uint64_t i = 0; i < n; ++i)
      ex.step(n - i - 1);
    return static_cast<Scalar>(ex.constant_term());
  }

  std::vector<Scalar> sequence(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t count,
                               const OracleConfig& config)
  {
    std::vector<Scalar> out;
    if (count == 0)
      return out;
    const std::uint64_t horizon = count - 1;
    Expander ex(p, q, horizon, config);
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      out.push_back(static_cast<Scalar>(ex.constant_term()));
      if (i < horizon)
        ex.step(horizon - i - 1);
    }
    return out;
  }

  std::vector<Scalar> apery_numbers(std::uint64_t count, std::uint64_t modulus)
  {
    if (modulus < 2)
      throw ArgumentError("modulus must be at least 2");
    if (count > 6000)
      throw ResourceError("closed-form oracle limited to 6000 terms");
    if (modulus > UINT32_MAX)
      throw ArgumentError("closed-form oracle needs a modulus below 2^32");
    std::vector<Scalar> out(count, 0);
    if (count == 0)
      return out;
    // only columns k <= i/2 are kept; the rest follow by symmetry
    const std::uint64_t rows = 2 * count;
    std::vector<std::vector<std::uint32_t>> half(rows);
    auto binom = [&](std::uint64_t i, std::uint64_t k) { return half[i][std::min(k, i - k)]; };
    for (std::uint64_t i = 0; i < rows; ++i) {
      half[i].assign(i / 2 + 1, static_cast<std::uint32_t>(1 % modulus));
      for (std::uint64_t k = 1; k <= i / 2; ++k)
        half[i][k] = static_cast<std::uint32_t>((std::uint64_t{binom(i - 1, k - 1)} + binom(i - 1, k)) % modulus);
    }
    using u128 = unsigned __int128;
    for (std::uint64_t n = 0; n < count; ++n) {
      u128 acc = 0;
      for (std::uint64_t k = 0; k <= n; ++k) {
        const u128 a = binom(n, k);
        const u128 b = binom(n + k, k);
        acc = (acc + (a * a % modulus) * (b * b % modulus)) % modulus;
      }
      out[n] = static_cast<Scalar>(acc);
    }
    return out;
  }

} // namespace ctseq::oracle
