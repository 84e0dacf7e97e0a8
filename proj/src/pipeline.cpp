#include "ctseq/pipeline.hpp"

#include "ctseq/dfao.hpp"
#include "ctseq/oracle.hpp"
#include "ctseq/polytext.hpp"
#include "ctseq/primepower.hpp"

namespace ctseq {

  Problem make_problem(const std::string& p_text, const std::string& q_text,
                       std::uint64_t prime, unsigned a)
  {
    if (!is_prime(prime))
      throw ArgumentError("p must be prime, got " + std::to_string(prime));
    if (a == 0)
      throw ArgumentError("exponent a must be positive");
    prime_power(prime, a);

    Problem pr;
    pr.prime = prime;
    pr.a = a;
    std::string ptext = p_text;
    std::string qtext = q_text;
    if (!ptext.empty() && ptext[0] == '@') {
      auto preset = find_preset(ptext.substr(1));
      if (!preset)
        throw ArgumentError("unknown preset '" + ptext.substr(1) + "'");
      pr.preset = preset->name;
      ptext = preset->p_text;
      if (qtext.empty())
        qtext = preset->q_text;
    }
    if (qtext.empty())
      qtext = "1";
    LaurentPoly p = parse_poly(ptext);
    LaurentPoly q = parse_poly(qtext);
    const std::size_t r = std::max(p.variable_count(), q.variable_count());
    pr.p = p.with_variable_count(r);
    pr.q = q.with_variable_count(r);
    return pr;
  }

  Engine parse_engine(const std::string& tag)
  {
    if (tag == "linrep")
      return Engine::linrep;
    if (tag == "dfao")
      return Engine::dfao;
    if (tag == "reverse-dfao")
      return Engine::reverse_dfao;
    if (tag == "morphism")
      return Engine::morphism;
    if (tag == "oracle")
      return Engine::oracle;
    throw ArgumentError("unknown engine '" + tag + "'");
  }

  std::string engine_name(Engine e)
  {
    switch (e) {
    case Engine::linrep: return "linrep";
    case Engine::dfao: return "dfao";
    case Engine::reverse_dfao: return "reverse-dfao";
    case Engine::morphism: return "morphism";
    case Engine::oracle: return "oracle";
    }
    return "?";
  }

  namespace {

    bool is_apery(const LaurentPoly& p, const LaurentPoly& q)
    {
      static const LaurentPoly apery = parse_poly(find_preset("apery")->p_text);
      if (p.variable_count() != 3 || p.ring().is_modular() || q.ring().is_modular())
        return false;
      return p == apery && q == LaurentPoly::constant(3, 1);
    }

  } // namespace

  std::vector<Scalar> reference_sequence(const LaurentPoly& p, const LaurentPoly& q,
                                         std::uint64_t modulus, std::uint64_t count,
                                         const Limits& limits)
  {
    if (is_apery(p, q) && count > 64)
      return oracle::apery_numbers(count, modulus);
    oracle::OracleConfig cfg;
    cfg.modulus = modulus;
    cfg.max_n = limits.oracle_max_n;
    return oracle::sequence(p, q, count, cfg);
  }

  std::vector<Scalar> generate(const Problem& pr, Engine engine, std::uint64_t count,
                               const Limits& limits)
  {
    const std::uint64_t modulus = prime_power(pr.prime, pr.a);
    if (engine == Engine::oracle)
      return reference_sequence(pr.p, pr.q, modulus, count, limits);
    if (count > limits.stream_cap)
      throw ResourceError("requested length exceeds the stream cap");

    const TildeReduction red = build_reduction(pr.p, pr.q, pr.prime, pr.a, limits);
    std::vector<Scalar> out;
    out.reserve(count);
    switch (engine) {
    case Engine::linrep:
      for (std::uint64_t n = 0; n < count; ++n)
        out.push_back(red.term(n));
      break;
    // the machines only build the states these n reach
    case Engine::dfao: {
      ForwardMachine d = red.forward_machine();
      for (std::uint64_t n = 0; n < count; ++n)
        out.push_back(d.run(n));
      break;
    }
    case Engine::reverse_dfao: {
      ReverseMachine d = red.reverse_machine();
      for (std::uint64_t n = 0; n < count; ++n)
        out.push_back(red.reverse_term(d, n));
      break;
    }
    case Engine::morphism:
      out = red.prefix(count);
      break;
    case Engine::oracle:
      break;
    }
    return out;
  }

  OracleCheck oracle_check(const Problem& pr, std::uint64_t count, const Limits& limits)
  {
    OracleCheck report;
    report.count = count;
    const auto truth = generate(pr, Engine::oracle, count, limits);
    report.ok = true;
    for (Engine e : {Engine::linrep, Engine::dfao, Engine::reverse_dfao, Engine::morphism}) {
      EngineCheck row;
      row.engine = e;
      try {
        const auto got = generate(pr, e, count, limits);
        row.ok = true;
        for (std::uint64_t n = 0; n < count; ++n) {
          if (got[n] != truth[n]) {
            row.ok = false;
            row.first_mismatch = n;
            row.expected = truth[n];
            row.got = got[n];
            break;
          }
        }
      } catch (const ResourceError& ex) {
        row.ok = false;
        row.error = ex.what();
      }
      report.ok = report.ok && row.ok;
      report.rows.push_back(std::move(row));
    }
    return report;
  }

} // namespace ctseq
