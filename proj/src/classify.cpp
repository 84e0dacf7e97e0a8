#include "ctseq/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>

#include "ctseq/morphism.hpp"
#include "ctseq/oracle.hpp"
#include "ctseq/primepower.hpp"

namespace ctseq {

  namespace {

    constexpr std::uint64_t kSaturated = UINT64_MAX;

    std::uint64_t saturating_pow(std::uint64_t b, std::uint64_t e)
    {
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < e; ++i) {
        if (r > kSaturated / b)
          return kSaturated;
        r *= b;
      }
      return r;
    }

    struct Analysis {
      std::int64_t m = 0;
      std::size_t window_size = 0;
      unsigned settle_s = 0;
      ReachableStates reach;
      ZeroWitness witness;
    };

    const LaurentPoly& unit_q(const LaurentPoly& p)
    {
      thread_local LaurentPoly one;
      one = LaurentPoly::constant(p.variable_count(), 1, p.ring());
      return one;
    }

    Analysis analyze(const LaurentPoly& p, std::uint64_t prime, const Limits& limits)
    {
      if (!is_prime(prime))
        throw ArgumentError("p must be prime");
      const Ring ring = Ring::modular(prime);
      const LaurentPoly pm = p.ring() == ring ? p : p.reduced(ring);
      const LinRep rep = LinRep::build(pm, unit_q(pm), prime, ring, limits);
      Analysis a;
      a.m = rep.index_set().radius();
      a.window_size = rep.index_set().size();
      a.settle_s = rep.settle_exponent();
      a.reach = reachable_states(rep);
      a.witness.status = a.reach.complete || a.reach.witness ? Status::exact : Status::inconclusive;
      a.witness.n0 = a.reach.witness;

      if (a.reach.witness) {
        const std::uint64_t n0 = *a.reach.witness;
        // The stream's constant entries are ct(P^n) mod p.
        if (n0 < limits.stream_cap) {
          MorphicStream stream(rep);
          stream.extend(n0 + 1);
          for (std::uint64_t n = 0; n < n0; ++n) {
            if (stream.at(n).constant_entry() == 0)
              throw InternalError("zero witness is not minimal");
          }
          if (stream.at(n0).constant_entry() != 0)
            throw InternalError("zero witness does not vanish");
        }
      }
      return a;
    }

  } // namespace

  ReachableStates reachable_states(const LinRep& rep)
  {
    rep.materialize_all();
    const std::uint64_t p = rep.prime();
    const std::size_t cap = rep.limits().state_cap;
    ReachableStates out;
    std::unordered_map<StateVector, std::uint32_t, StateVectorHash> ids;
    std::vector<std::uint64_t> least;
    std::vector<std::uint32_t> next;

    auto residue_zero = [p](const StateVector& v) {
      return static_cast<std::uint64_t>(v.constant_entry()) % p == 0;
    };
    auto visit = [&](StateVector v, std::uint64_t n) -> std::optional<std::uint32_t> {
      auto it = ids.find(v);
      if (it != ids.end())
        return it->second;
      if (out.states.size() >= cap)
        return std::nullopt;
      const auto id = static_cast<std::uint32_t>(out.states.size());
      if (residue_zero(v)) {
        out.zero_constant = true;
        if (!out.witness) {
          if (n == kSaturated)
            throw ResourceError("zero witness exceeds 64-bit range");
          out.witness = n;
        }
      }
      ids.emplace(v, id);
      out.states.push_back(std::move(v));
      least.push_back(n);
      return id;
    };

    visit(rep.v0(), 0);
    out.complete = true;
    for (std::size_t s = 0; s < out.states.size() && out.complete; ++s) {
      for (std::uint64_t k = 0; k < p; ++k) {
        const std::uint64_t base = least[s];
        const std::uint64_t n = base > (kSaturated - k) / p ? kSaturated : base * p + k;
        auto id = visit(rep.apply(k, out.states[s]), n);
        if (!id) {
          out.complete = false;
          break;
        }
        next.push_back(*id);
      }
    }

    // States reachable along strings that contain a nonzero digit: closure of
    // the nonzero-digit successors of V(0).
    const std::size_t known = next.size() / p;
    std::vector<char> mark(out.states.size(), 0);
    std::vector<std::uint32_t> queue;
    for (std::uint64_t k = 1; k < p && k < next.size(); ++k) {
      if (!mark[next[k]]) {
        mark[next[k]] = 1;
        queue.push_back(next[k]);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::uint32_t s = queue[i];
      if (!residue_zero(out.states[s]))
        out.nonzero_after_start = true;
      if (s >= known)
        continue;
      for (std::uint64_t k = 0; k < p; ++k) {
        const std::uint32_t t = next[s * p + k];
        if (!mark[t]) {
          mark[t] = 1;
          queue.push_back(t);
        }
      }
    }
    return out;
  }

  ZeroWitness zero_witness(const LaurentPoly& p, std::uint64_t prime, const Limits& limits)
  {
    return analyze(p, prime, limits).witness;
  }

  Verdict verdict(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t prime, unsigned a,
                  const Limits& limits)
  {
    if (a == 0)
      throw ArgumentError("exponent a must be positive");
    if (q.variable_count() != p.variable_count())
      throw ArgumentError("variable count mismatch between P and Q");
    const Analysis an = analyze(p, prime, limits);
    Verdict v;
    v.p = prime;
    v.a = a;
    v.m = an.m;
    v.window_size = an.window_size;
    v.settle_s = an.settle_s;
    v.reachable_states = an.reach.states.size();
    v.zero_witness = an.witness.n0;
    if (an.reach.complete || an.reach.witness)
      v.linearly_recurrent = !an.reach.witness;
    if (an.reach.complete || an.reach.nonzero_after_start)
      v.recurrence_guaranteed = an.reach.nonzero_after_start;
    v.status = v.linearly_recurrent && v.recurrence_guaranteed ? Status::exact : Status::inconclusive;
    v.conjecture_bound = saturating_pow(prime, static_cast<std::uint64_t>(p.degree()));
    // digits(p^(p^|T|)) = floor(p^|T| log10 p) + 1
    const long double e = std::pow(static_cast<long double>(prime),
                                   static_cast<long double>(an.window_size));
    const long double digits = std::floor(e * std::log10(static_cast<long double>(prime))) + 1;
    v.naive_bound_digits = digits >= 1.8e19L ? kSaturated : static_cast<std::uint64_t>(digits);
    return v;
  }

  std::uint64_t zero_count(std::span<const Scalar> seq, std::uint64_t n)
  {
    if (n > seq.size())
      throw ArgumentError("sequence is shorter than the requested prefix");
    return static_cast<std::uint64_t>(std::count(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(n), 0));
  }

  Rational zero_frequency(std::span<const Scalar> seq, std::uint64_t n)
  {
    if (n == 0)
      throw ArgumentError("frequency needs a non-empty prefix");
    const std::uint64_t zeros = zero_count(seq, n);
    const std::uint64_t g = std::gcd(zeros, n);
    return {zeros / g, n / g};
  }

  GapReport gap_stats(std::span<const Scalar> seq, std::uint64_t length, std::uint64_t n)
  {
    if (length == 0 || length > n)
      throw ArgumentError("word length must satisfy 1 <= L <= N");
    if (n > seq.size())
      throw ArgumentError("sequence is shorter than the requested prefix");
    GapReport report{length, n, {}};
    std::map<std::vector<Scalar>, std::size_t> index;
    std::vector<std::uint64_t> last;
    const std::uint64_t starts = n - length + 1;
    for (std::uint64_t i = 0; i < starts; ++i) {
      std::vector<Scalar> w(seq.begin() + static_cast<std::ptrdiff_t>(i),
                            seq.begin() + static_cast<std::ptrdiff_t>(i + length));
      auto [it, inserted] = index.emplace(std::move(w), report.rows.size());
      if (inserted) {
        report.rows.push_back(GapRow{it->first, 1, i, 0, false});
        last.push_back(i);
        continue;
      }
      GapRow& row = report.rows[it->second];
      row.max_gap = std::max(row.max_gap, i - last[it->second]);
      row.occurrences++;
      last[it->second] = i;
    }
    for (std::size_t r = 0; r < report.rows.size(); ++r)
      report.rows[r].censored = starts - last[r] > report.rows[r].max_gap;
    return report;
  }

  std::vector<std::vector<Scalar>> combine_tuples(const LaurentPoly& p,
                                                  std::span<const CombinationPart> parts,
                                                  std::uint64_t prime, unsigned a,
                                                  std::uint64_t count, const Limits& limits)
  {
    if (parts.empty())
      throw ArgumentError("a combination needs at least one part");
    std::vector<LaurentPoly> qs;
    std::uint64_t lookahead = 0;
    for (const auto& part : parts) {
      if (part.q.variable_count() != p.variable_count())
        throw ArgumentError("variable count mismatch between P and Q");
      qs.push_back(part.q);
      lookahead = std::max(lookahead, part.shift);
    }
    const TildeReduction red(p, qs, prime, a, limits);
    MorphicStream stream(red.tilde_rep());
    const std::uint64_t blocks = red.block_count();
    stream.extend((count + lookahead + blocks - 1) / blocks);
    std::vector<std::vector<Scalar>> out(count, std::vector<Scalar>(parts.size()));
    for (std::uint64_t n = 0; n < count; ++n) {
      for (std::size_t i = 0; i < parts.size(); ++i)
        out[n][i] = red.term(stream, n + parts[i].shift, i);
    }
    return out;
  }

  std::vector<Scalar> combine(const LaurentPoly& p, std::span<const CombinationPart> parts,
                              std::uint64_t prime, unsigned a, std::uint64_t count,
                              const Limits& limits)
  {
    const auto tuples = combine_tuples(p, parts, prime, a, count, limits);
    const Ring ring = Ring::modular(prime_power(prime, a));
    std::vector<Scalar> out(count, 0);
    for (std::uint64_t n = 0; n < count; ++n) {
      for (std::size_t i = 0; i < parts.size(); ++i)
        out[n] = ring.add(out[n], ring.mul(ring.reduce(parts[i].coefficient), tuples[n][i]));
    }
    return out;
  }

  std::vector<LaurentPoly> conjecture_corpus(const ConjectureSpec& spec)
  {
    if (spec.degree_max < 1)
      throw ArgumentError("degree bound must be at least 1");
    std::mt19937_64 rng(spec.seed);
    const auto c = static_cast<Scalar>(spec.coeff_max);
    std::uniform_int_distribution<Scalar> coeff(-c, c);
    const auto d = static_cast<Exponent>(spec.degree_max);
    std::vector<LaurentPoly> corpus;
    corpus.reserve(spec.count);
    while (corpus.size() < spec.count) {
      std::vector<std::pair<ExponentVector, Scalar>> terms;
      for (Exponent e = -d; e <= d; ++e)
        terms.emplace_back(ExponentVector{e}, coeff(rng));
      LaurentPoly poly = LaurentPoly::from_terms(1, Ring::integers(), std::move(terms));
      if (poly.degree() >= 1)
        corpus.push_back(std::move(poly));
    }
    return corpus;
  }

  ConjectureReport conjecture_scan(const ConjectureSpec& spec, const Limits& limits, unsigned workers)
  {
    for (auto p : spec.primes) {
      if (!is_prime(p))
        throw ArgumentError("conjecture scan needs prime moduli");
    }
    ConjectureReport report;
    report.spec = spec;
    const auto corpus = conjecture_corpus(spec);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (auto p : spec.primes) {
        ConjectureItem item;
        item.index = i;
        item.poly = corpus[i];
        item.p = p;
        item.bound = saturating_pow(p, static_cast<std::uint64_t>(corpus[i].degree()));
        report.items.push_back(std::move(item));
      }
    }

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
      while (true) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= report.items.size() || failed)
          return;
        ConjectureItem& item = report.items[i];
        try {
          const ZeroWitness w = zero_witness(item.poly, item.p, limits);
          item.status = w.status;
          item.n0 = w.n0;
          if (w.n0) {
            oracle::OracleConfig cfg;
            cfg.modulus = item.p;
            cfg.max_n = limits.oracle_max_n;
            item.verified = oracle::ct_pow_mod(item.poly, unit_q(item.poly), *w.n0, cfg) == 0;
            item.violation = *w.n0 >= item.bound;
          }
        } catch (const ResourceError&) {
          item.status = Status::inconclusive;
        } catch (...) {
          if (!failed.exchange(true))
            failure = std::current_exception();
        }
      }
    };
    if (workers == 0)
      workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, report.items.size() + 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
      pool.emplace_back(work);
    work();
    for (auto& t : pool)
      t.join();
    if (failure)
      std::rethrow_exception(failure);

    for (const auto& item : report.items) {
      report.witnesses += item.n0.has_value();
      report.violations += item.violation;
      report.inconclusive += item.status == Status::inconclusive;
    }
    return report;
  }

} // namespace ctseq
