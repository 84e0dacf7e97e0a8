#include "ctseq/textio.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ctseq/polytext.hpp"

namespace ctseq {

  std::string status_name(Status s)
  {
    return s == Status::exact ? "exact" : "inconclusive";
  }

  namespace {

    template <class T>
    nlohmann::ordered_json maybe(const std::optional<T>& v)
    {
      return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    }

    std::string tri(const std::optional<bool>& b)
    {
      return b ? (*b ? "yes" : "no") : "undecided";
    }

    std::string word_text(const std::vector<Scalar>& w)
    {
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
          s += ',';
        s += std::to_string(w[i]);
      }
      return s;
    }

  } // namespace

  std::string verdict_json(const Verdict& v)
  {
    nlohmann::ordered_json j;
    j["p"] = v.p;
    j["a"] = v.a;
    j["m"] = v.m;
    j["window_size"] = v.window_size;
    j["settle_s"] = v.settle_s;
    j["reachable_states"] = v.reachable_states;
    j["zero_witness"] = maybe(v.zero_witness);
    j["linearly_recurrent"] = maybe(v.linearly_recurrent);
    j["recurrence_guaranteed"] = maybe(v.recurrence_guaranteed);
    j["conjecture_bound"] = v.conjecture_bound;
    j["naive_bound_digits"] = v.naive_bound_digits;
    j["status"] = status_name(v.status);
    return j.dump(2) + "\n";
  }

  std::string verdict_text(const Verdict& v)
  {
    std::ostringstream out;
    out << "modulus              " << v.p << '^' << v.a << '\n'
        << "window               m=" << v.m << " |T|=" << v.window_size << " s=" << v.settle_s << '\n'
        << "reachable states     " << v.reachable_states << '\n'
        << "zero witness         " << (v.zero_witness ? std::to_string(*v.zero_witness) : "none") << '\n'
        << "linearly recurrent   " << tri(v.linearly_recurrent) << '\n'
        << "recurrence certain   " << tri(v.recurrence_guaranteed) << '\n'
        << "conjectured bound    " << v.conjecture_bound << '\n'
        << "naive bound digits   " << v.naive_bound_digits << '\n'
        << "status               " << status_name(v.status) << '\n';
    return out.str();
  }

  std::string frequency_text(const Rational& f)
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", f.den ? static_cast<double>(f.num) / static_cast<double>(f.den) : 0.0);
    return std::to_string(f.num) + "/" + std::to_string(f.den) + " " + buf + "\n";
  }

  std::string gap_text(const GapReport& g)
  {
    std::ostringstream out;
    out << "# L=" << g.word_length << " N=" << g.prefix_length << " words=" << g.rows.size() << '\n';
    out << "word\toccurrences\tfirst\tmax_gap\tcensored\n";
    for (const auto& row : g.rows) {
      out << word_text(row.word) << '\t' << row.occurrences << '\t' << row.first << '\t'
          << row.max_gap << '\t' << (row.censored ? "yes" : "no") << '\n';
    }
    return out.str();
  }

  std::string conjecture_text(const ConjectureReport& r)
  {
    std::ostringstream out;
    out << "# corpus=" << r.spec.count << " degree<=" << r.spec.degree_max << " |c|<="
        << r.spec.coeff_max << " seed=" << r.spec.seed << " primes=";
    for (std::size_t i = 0; i < r.spec.primes.size(); ++i)
      out << (i ? "," : "") << r.spec.primes[i];
    out << '\n';
    out << "items " << r.items.size() << " witnesses " << r.witnesses << " violations "
        << r.violations << " inconclusive " << r.inconclusive << '\n';
    std::size_t unverified = 0;
    for (const auto& it : r.items)
      unverified += it.n0 && !it.verified;
    out << "unverified witnesses " << unverified << '\n';
    for (const auto& it : r.items) {
      if (it.violation || it.status == Status::inconclusive || (it.n0 && !it.verified)) {
        out << (it.violation ? "violation" : it.status == Status::inconclusive ? "inconclusive" : "unverified")
            << " #" << it.index << " p=" << it.p << " P=" << format_poly(it.poly)
            << " n0=" << (it.n0 ? std::to_string(*it.n0) : "-") << " bound=" << it.bound << '\n';
      }
    }
    return out.str();
  }

  std::string oracle_check_text(const OracleCheck& c)
  {
    std::ostringstream out;
    for (const auto& row : c.rows) {
      out << (row.ok ? "PASS " : "FAIL ") << engine_name(row.engine);
      if (!row.error.empty())
        out << " (" << row.error << ")";
      else if (row.first_mismatch)
        out << " n=" << *row.first_mismatch << " expected " << row.expected << " got " << row.got;
      out << '\n';
    }
    out << (c.ok ? "PASS" : "FAIL") << " " << c.count << " terms\n";
    return out.str();
  }

} // namespace ctseq
