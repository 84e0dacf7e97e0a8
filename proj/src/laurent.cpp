#include "ctseq/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace ctseq {

  // ---------------------------------------------------------------- Ring

  Ring Ring::modular(std::uint64_t modulus)
  {
    if (modulus < 2 || modulus >= (std::uint64_t{1} << 62))
      throw ArgumentError("modulus must lie in [2, 2^62)");
    return Ring(modulus);
  }

  Scalar Ring::reduce(Scalar v) const
  {
    if (!modulus_)
      return v;
    const auto m = static_cast<Scalar>(modulus_);
    Scalar r = v % m;
    return r < 0 ? r + m : r;
  }

  Scalar Ring::add(Scalar a, Scalar b) const
  {
    if (!modulus_) {
      Scalar r;
      if (__builtin_add_overflow(a, b, &r))
        throw ResourceError("integer coefficient overflow");
      return r;
    }
    Scalar r = a + b;
    return r >= static_cast<Scalar>(modulus_) ? r - static_cast<Scalar>(modulus_) : r;
  }

  Scalar Ring::sub(Scalar a, Scalar b) const
  {
    if (!modulus_) {
      Scalar r;
      if (__builtin_sub_overflow(a, b, &r))
        throw ResourceError("integer coefficient overflow");
      return r;
    }
    Scalar r = a - b;
    return r < 0 ? r + static_cast<Scalar>(modulus_) : r;
  }

  Scalar Ring::mul(Scalar a, Scalar b) const
  {
    if (!modulus_) {
      Scalar r;
      if (__builtin_mul_overflow(a, b, &r))
        throw ResourceError("integer coefficient overflow");
      return r;
    }
    if (modulus_ <= UINT32_MAX)
      return static_cast<Scalar>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b) % modulus_);
    using u128 = unsigned __int128;
    return static_cast<Scalar>(static_cast<u128>(a) * static_cast<u128>(b) % modulus_);
  }

  bool ExponentVector::is_zero() const
  {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
  }

  // --------------------------------------------------------- TermBuilder

  // Appends terms that the caller already produces in sorted order.
  class TermBuilder {
  public:
    TermBuilder(std::size_t vars, Ring ring) : poly_(vars, ring) {}
    void reserve(std::size_t n)
    {
      poly_.exps_.reserve(n * poly_.vars_);
      poly_.coeffs_.reserve(n);
    }
    void push(std::span<const Exponent> e, Scalar c)
    {
      if (c == 0)
        return;
      poly_.exps_.insert(poly_.exps_.end(), e.begin(), e.end());
      poly_.coeffs_.push_back(c);
    }
    LaurentPoly finish() && { return std::move(poly_); }
  private:
    LaurentPoly poly_;
  };

  namespace {

    int lex_compare(std::span<const Exponent> a, std::span<const Exponent> b)
    {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
          return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    }

    void check_compatible(const LaurentPoly& a, const LaurentPoly& b)
    {
      if (a.variable_count() != b.variable_count())
        throw ArgumentError("variable count mismatch");
      if (!(a.ring() == b.ring()))
        throw ArgumentError("coefficient ring mismatch");
    }

    std::int64_t floor_div(std::int64_t a, std::int64_t b)
    {
      std::int64_t q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
      return q;
    }

  } // namespace

  // --------------------------------------------------------- LaurentPoly

  LaurentPoly::LaurentPoly(std::size_t variables, Ring ring)
    : vars_(variables), ring_(ring)
  {
    if (vars_ == 0)
      throw ArgumentError("a Laurent polynomial needs at least one variable");
  }

  LaurentPoly LaurentPoly::constant(std::size_t variables, Scalar c, Ring ring)
  {
    TermBuilder b(variables, ring);
    ExponentVector zero(variables);
    b.push(zero.view(), ring.reduce(c));
    return std::move(b).finish();
  }

  LaurentPoly LaurentPoly::monomial(const ExponentVector& e, Scalar c, Ring ring)
  {
    TermBuilder b(e.size(), ring);
    b.push(e.view(), ring.reduce(c));
    return std::move(b).finish();
  }

  LaurentPoly LaurentPoly::from_terms(std::size_t variables, Ring ring,
                                      std::vector<std::pair<ExponentVector, Scalar>> terms)
  {
    for (const auto& t : terms) {
      if (t.first.size() != variables)
        throw ArgumentError("exponent vector length does not match variable count");
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    TermBuilder b(variables, ring);
    b.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
      Scalar c = ring.reduce(terms[i].second);
      std::size_t j = i + 1;
      for (; j < terms.size() && terms[j].first == terms[i].first; ++j)
        c = ring.add(c, ring.reduce(terms[j].second));
      b.push(terms[i].first.view(), c);
      i = j;
    }
    return std::move(b).finish();
  }

  bool LaurentPoly::is_constant() const
  {
    return coeffs_.empty() || (coeffs_.size() == 1 && ExponentVector(exponent(0)).is_zero());
  }

  Scalar LaurentPoly::coeff(std::span<const Exponent> e) const
  {
    if (e.size() != vars_)
      throw ArgumentError("exponent vector length does not match variable count");
    std::size_t lo = 0, hi = coeffs_.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      int c = lex_compare(exponent(mid), e);
      if (c == 0)
        return coeffs_[mid];
      if (c < 0)
        lo = mid + 1;
      else
        hi = mid;
    }
    return 0;
  }

  Scalar LaurentPoly::constant_term() const
  {
    ExponentVector zero(vars_);
    return coeff(zero.view());
  }

  std::int64_t LaurentPoly::degree() const
  {
    std::int64_t d = 0;
    for (Exponent e : exps_)
      d = std::max<std::int64_t>(d, e < 0 ? -static_cast<std::int64_t>(e) : e);
    return d;
  }

  LaurentPoly LaurentPoly::reduced(Ring target) const
  {
    if (ring_.is_modular() && target.is_modular()
        && ring_.modulus() % target.modulus() != 0)
      throw ArgumentError("target modulus must divide the source modulus");
    if (ring_.is_modular() && !target.is_modular())
      throw ArgumentError("cannot lift residues to the integers");
    TermBuilder b(vars_, target);
    b.reserve(coeffs_.size());
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
      b.push(exponent(t), target.reduce(coeffs_[t]));
    return std::move(b).finish();
  }

  LaurentPoly LaurentPoly::with_variable_count(std::size_t r) const
  {
    if (r < vars_)
      throw ArgumentError("cannot drop variables");
    if (r == vars_)
      return *this;
    TermBuilder b(r, ring_);
    b.reserve(coeffs_.size());
    std::vector<Exponent> e(r, 0);
    // Appending zeros keeps lexicographic order.
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      auto src = exponent(t);
      std::copy(src.begin(), src.end(), e.begin());
      b.push(e, coeffs_[t]);
    }
    return std::move(b).finish();
  }

  LaurentPoly LaurentPoly::substitute_power(std::int64_t k) const
  {
    if (k < 1)
      throw ArgumentError("substitution power must be positive");
    LaurentPoly out = *this;
    for (Exponent& e : out.exps_) {
      std::int64_t v = static_cast<std::int64_t>(e) * k;
      if (v > INT32_MAX || v < INT32_MIN)
        throw ResourceError("exponent overflow");
      e = static_cast<Exponent>(v);
    }
    return out;
  }

  LaurentPoly LaurentPoly::scaled(Scalar c) const
  {
    TermBuilder b(vars_, ring_);
    b.reserve(coeffs_.size());
    const Scalar rc = ring_.reduce(c);
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
      b.push(exponent(t), ring_.mul(coeffs_[t], rc));
    return std::move(b).finish();
  }

  // --------------------------------------------------------- arithmetic

  namespace {

    LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract)
    {
      check_compatible(a, b);
      const Ring& ring = a.ring();
      TermBuilder out(a.variable_count(), ring);
      out.reserve(a.term_count() + b.term_count());
      std::size_t i = 0, j = 0;
      while (i < a.term_count() || j < b.term_count()) {
        int c = i == a.term_count() ? 1
              : j == b.term_count() ? -1
              : lex_compare(a.exponent(i), b.exponent(j));
        if (c < 0) {
          out.push(a.exponent(i), a.coefficient(i));
          ++i;
        } else if (c > 0) {
          Scalar v = b.coefficient(j);
          out.push(b.exponent(j), subtract ? ring.neg(v) : v);
          ++j;
        } else {
          Scalar v = subtract ? ring.sub(a.coefficient(i), b.coefficient(j))
                              : ring.add(a.coefficient(i), b.coefficient(j));
          out.push(a.exponent(i), v);
          ++i;
          ++j;
        }
      }
      return std::move(out).finish();
    }

  } // namespace

  LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }

  LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b, std::size_t term_guard)
  {
    check_compatible(a, b);
    const std::size_t r = a.variable_count();
    const Ring& ring = a.ring();
    if (a.is_zero() || b.is_zero())
      return LaurentPoly(r, ring);

    // Bounding box of the product; cells are addressed in mixed radix with
    // the first variable most significant, so index order is lex order.
    std::vector<std::int64_t> lo_a(r, INT64_MAX), hi_a(r, INT64_MIN);
    std::vector<std::int64_t> lo_b(r, INT64_MAX), hi_b(r, INT64_MIN);
    auto bound = [r](const LaurentPoly& p, auto& lo, auto& hi) {
      for (std::size_t t = 0; t < p.term_count(); ++t) {
        auto e = p.exponent(t);
        for (std::size_t d = 0; d < r; ++d) {
          lo[d] = std::min<std::int64_t>(lo[d], e[d]);
          hi[d] = std::max<std::int64_t>(hi[d], e[d]);
        }
      }
    };
    bound(a, lo_a, hi_a);
    bound(b, lo_b, hi_b);

    std::vector<std::int64_t> lo(r), span(r), stride(r);
    long double cells_ld = 1;
    for (std::size_t d = 0; d < r; ++d) {
      lo[d] = lo_a[d] + lo_b[d];
      span[d] = hi_a[d] + hi_b[d] - lo[d] + 1;
      cells_ld *= static_cast<long double>(span[d]);
    }
    if (cells_ld > 9.0e18L)
      throw ResourceError("product exponent box too large");
    std::int64_t s = 1;
    for (std::size_t d = r; d-- > 0;) {
      stride[d] = s;
      s *= span[d];
    }
    const auto cells = static_cast<std::uint64_t>(s);

    auto offsets = [&](const LaurentPoly& p, const std::vector<std::int64_t>& base) {
      std::vector<std::int64_t> off(p.term_count());
      for (std::size_t t = 0; t < p.term_count(); ++t) {
        auto e = p.exponent(t);
        std::int64_t k = 0;
        for (std::size_t d = 0; d < r; ++d)
          k += (e[d] - base[d]) * stride[d];
        off[t] = k;
      }
      return off;
    };
    const auto off_a = offsets(a, lo_a);
    const auto off_b = offsets(b, lo_b);

    auto decode = [&](std::int64_t key, std::vector<Exponent>& e) {
      for (std::size_t d = 0; d < r; ++d) {
        e[d] = static_cast<Exponent>(key / stride[d] + lo[d]);
        key %= stride[d];
      }
    };

    const long double pairs = static_cast<long double>(a.term_count()) * b.term_count();
    // a few minutes of coefficient products at the default guard
    if (pairs > 256.0L * static_cast<long double>(term_guard))
      throw ResourceError("product needs too many term pairs");
    const bool dense = cells <= (std::uint64_t{1} << 26)
                    && static_cast<long double>(cells) <= std::max<long double>(8 * pairs, 1 << 20);

    TermBuilder out(r, ring);
    std::vector<Exponent> e(r);
    if (dense) {
      std::vector<Scalar> acc(cells, 0);
      for (std::size_t i = 0; i < a.term_count(); ++i) {
        const Scalar ca = a.coefficient(i);
        for (std::size_t j = 0; j < b.term_count(); ++j) {
          Scalar& slot = acc[off_a[i] + off_b[j]];
          slot = ring.add(slot, ring.mul(ca, b.coefficient(j)));
        }
      }
      std::size_t count = 0;
      for (Scalar v : acc)
        count += v != 0;
      if (count > term_guard)
        throw ResourceError("product exceeds the term guard");
      out.reserve(count);
      for (std::uint64_t k = 0; k < cells; ++k) {
        if (acc[k] != 0) {
          decode(static_cast<std::int64_t>(k), e);
          out.push(e, acc[k]);
        }
      }
    } else {
      std::unordered_map<std::int64_t, Scalar> acc;
      acc.reserve(static_cast<std::size_t>(std::min<long double>(pairs, 1 << 24)));
      for (std::size_t i = 0; i < a.term_count(); ++i) {
        const Scalar ca = a.coefficient(i);
        for (std::size_t j = 0; j < b.term_count(); ++j) {
          Scalar& slot = acc[off_a[i] + off_b[j]];
          slot = ring.add(slot, ring.mul(ca, b.coefficient(j)));
        }
        if (acc.size() > 2 * term_guard)
          throw ResourceError("product exceeds the term guard");
      }
      std::vector<std::pair<std::int64_t, Scalar>> sorted;
      sorted.reserve(acc.size());
      for (const auto& kv : acc) {
        if (kv.second != 0)
          sorted.push_back(kv);
      }
      if (sorted.size() > term_guard)
        throw ResourceError("product exceeds the term guard");
      std::sort(sorted.begin(), sorted.end());
      out.reserve(sorted.size());
      for (const auto& [key, v] : sorted) {
        decode(key, e);
        out.push(e, v);
      }
    }
    return std::move(out).finish();
  }

  LaurentPoly lambda_mul(const LaurentPoly& a, const LaurentPoly& b, std::int64_t k,
                         std::size_t term_guard)
  {
    check_compatible(a, b);
    if (k < 1)
      throw ArgumentError("section operator needs k >= 1");
    const std::size_t r = a.variable_count();
    long double classes_ld = 1;
    for (std::size_t d = 0; d < r; ++d)
      classes_ld *= static_cast<long double>(k);
    if (k == 1 || a.is_zero() || b.is_zero() || classes_ld > (1 << 20))
      return lambda(mul(a, b, term_guard), k);

    // Only pairs whose exponent sum is 0 mod k survive, so b is split by
    // residue class and each term of a meets a single class.
    auto residue = [k, r](std::span<const Exponent> e, bool negate) {
      std::uint64_t key = 0;
      for (std::size_t d = 0; d < r; ++d) {
        std::int64_t v = (negate ? -std::int64_t{e[d]} : std::int64_t{e[d]}) % k;
        if (v < 0)
          v += k;
        key = key * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(v);
      }
      return key;
    };
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> classes;
    for (std::size_t j = 0; j < b.term_count(); ++j)
      classes[residue(b.exponent(j), false)].push_back(j);

    const Ring& ring = a.ring();
    std::unordered_map<std::int64_t, Scalar> cells;
    // Quotient box over the surviving exponents, first variable most significant.
    std::vector<std::int64_t> lo(r, INT64_MAX), hi(r, INT64_MIN), stride(r);
    auto bound = [r](const LaurentPoly& p) {
      std::vector<std::int64_t> l(r, INT64_MAX), h(r, INT64_MIN);
      for (std::size_t t = 0; t < p.term_count(); ++t) {
        auto e = p.exponent(t);
        for (std::size_t d = 0; d < r; ++d) {
          l[d] = std::min<std::int64_t>(l[d], e[d]);
          h[d] = std::max<std::int64_t>(h[d], e[d]);
        }
      }
      return std::pair{l, h};
    };
    const auto [la, ha] = bound(a);
    const auto [lb, hb] = bound(b);
    std::int64_t s = 1;
    for (std::size_t d = r; d-- > 0;) {
      lo[d] = floor_div(la[d] + lb[d], k);
      hi[d] = floor_div(ha[d] + hb[d], k);
      stride[d] = s;
      if (s > (std::int64_t{1} << 40) / (hi[d] - lo[d] + 1))
        return lambda(mul(a, b, term_guard), k);
      s *= hi[d] - lo[d] + 1;
    }
    const auto box = static_cast<std::uint64_t>(s);
    const bool dense = box <= (std::uint64_t{1} << 26);
    std::vector<Scalar> grid(dense ? box : 0, 0);

    for (std::size_t i = 0; i < a.term_count(); ++i) {
      auto ea = a.exponent(i);
      auto it = classes.find(residue(ea, true));
      if (it == classes.end())
        continue;
      const Scalar ca = a.coefficient(i);
      for (std::size_t j : it->second) {
        auto eb = b.exponent(j);
        std::int64_t key = 0;
        for (std::size_t d = 0; d < r; ++d)
          key += ((std::int64_t{ea[d]} + eb[d]) / k - lo[d]) * stride[d];
        Scalar& slot = dense ? grid[static_cast<std::size_t>(key)] : cells[key];
        slot = ring.add(slot, ring.mul(ca, b.coefficient(j)));
      }
      if (!dense && cells.size() > 2 * term_guard)
        throw ResourceError("product exceeds the term guard");
    }

    std::vector<std::pair<std::int64_t, Scalar>> sorted;
    if (dense) {
      for (std::uint64_t c = 0; c < box; ++c) {
        if (grid[c] != 0)
          sorted.emplace_back(static_cast<std::int64_t>(c), grid[c]);
      }
    } else {
      for (const auto& kv : cells) {
        if (kv.second != 0)
          sorted.push_back(kv);
      }
      std::sort(sorted.begin(), sorted.end());
    }
    if (sorted.size() > term_guard)
      throw ResourceError("product exceeds the term guard");
    TermBuilder out(r, ring);
    out.reserve(sorted.size());
    std::vector<Exponent> e(r);
    for (auto [key, v] : sorted) {
      for (std::size_t d = 0; d < r; ++d) {
        e[d] = static_cast<Exponent>(key / stride[d] + lo[d]);
        key %= stride[d];
      }
      out.push(e, v);
    }
    return std::move(out).finish();
  }

  LaurentPoly pow(const LaurentPoly& a, std::uint64_t n, std::size_t term_guard)
  {
    LaurentPoly result = LaurentPoly::constant(a.variable_count(), 1, a.ring());
    LaurentPoly base = a;
    while (n) {
      if (n & 1)
        result = mul(result, base, term_guard);
      n >>= 1;
      if (n)
        base = mul(base, base, term_guard);
    }
    return result;
  }

  LaurentPoly lambda(const LaurentPoly& a, std::int64_t k)
  {
    if (k < 1)
      throw ArgumentError("section operator needs k >= 1");
    if (k == 1)
      return a;
    TermBuilder out(a.variable_count(), a.ring());
    std::vector<Exponent> e(a.variable_count());
    for (std::size_t t = 0; t < a.term_count(); ++t) {
      auto src = a.exponent(t);
      bool keep = true;
      for (std::size_t d = 0; d < src.size() && keep; ++d) {
        keep = src[d] % k == 0;
        e[d] = static_cast<Exponent>(floor_div(src[d], k));
      }
      if (keep)
        out.push(e, a.coefficient(t));
    }
    return std::move(out).finish();
  }

} // namespace ctseq
