#include "ctseq/ctseq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ctseq/classify.hpp"
#include "ctseq/dfao.hpp"
#include "ctseq/pipeline.hpp"
#include "ctseq/polytext.hpp"
#include "ctseq/primepower.hpp"
#include "ctseq/textio.hpp"

struct ctseq_problem {
  ctseq::Problem problem;
};

namespace {

  thread_local std::string last_error;

  template <class F>
  ctseq_status guarded(F&& f)
  {
    try {
      last_error.clear();
      return f();
    } catch (const ctseq::ParseError& e) {
      last_error = e.what();
      return CTSEQ_E_PARSE;
    } catch (const ctseq::ArgumentError& e) {
      last_error = e.what();
      return CTSEQ_E_USAGE;
    } catch (const ctseq::ResourceError& e) {
      last_error = e.what();
      return CTSEQ_E_RESOURCE;
    } catch (const std::bad_alloc&) {
      last_error = "out of memory";
      return CTSEQ_E_RESOURCE;
    } catch (const std::exception& e) {
      last_error = e.what();
      return CTSEQ_E_INTERNAL;
    } catch (...) {
      last_error = "unknown failure";
      return CTSEQ_E_INTERNAL;
    }
  }

  char* dup(const std::string& s)
  {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
      throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  int64_t* dup_terms(const std::vector<ctseq::Scalar>& v)
  {
    auto* out = static_cast<int64_t*>(std::malloc(std::max<std::size_t>(v.size(), 1) * sizeof(int64_t)));
    if (!out)
      throw std::bad_alloc();
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = v[i];
    return out;
  }

  void need(const void* ptr, const char* what)
  {
    if (!ptr)
      throw ctseq::ArgumentError(std::string(what) + " must not be NULL");
  }

  std::vector<ctseq::Scalar> sequence_of(const ctseq_problem* pr, std::uint64_t n)
  {
    return ctseq::generate(pr->problem, ctseq::Engine::morphism, n);
  }

} // namespace

extern "C" {

const char* ctseq_last_error(void) { return last_error.c_str(); }

void ctseq_string_free(char* s) { std::free(s); }
void ctseq_terms_free(int64_t* terms) { std::free(terms); }

ctseq_status ctseq_problem_create(const char* poly, const char* q, uint64_t p, unsigned a,
                                  ctseq_problem** out)
{
  return guarded([&] {
    need(poly, "poly");
    need(out, "out");
    *out = nullptr;
    auto* pr = new ctseq_problem{ctseq::make_problem(poly, q ? q : "", p, a)};
    *out = pr;
    return CTSEQ_OK;
  });
}

void ctseq_problem_destroy(ctseq_problem* problem) { delete problem; }

ctseq_status ctseq_generate(const ctseq_problem* problem, const char* engine, uint64_t count,
                            int64_t** terms)
{
  return guarded([&] {
    need(problem, "problem");
    need(terms, "terms");
    const auto e = ctseq::parse_engine(engine ? engine : "linrep");
    *terms = dup_terms(ctseq::generate(problem->problem, e, count));
    return CTSEQ_OK;
  });
}

ctseq_status ctseq_classify(const ctseq_problem* problem, int json, char** text)
{
  return guarded([&] {
    need(problem, "problem");
    need(text, "text");
    const auto& pr = problem->problem;
    const ctseq::Verdict v = ctseq::verdict(pr.p, pr.q, pr.prime, pr.a);
    *text = dup(json ? ctseq::verdict_json(v) : ctseq::verdict_text(v));
    if (v.status == ctseq::Status::inconclusive) {
      last_error = "classification stopped at the state cap";
      return CTSEQ_E_INCONCLUSIVE;
    }
    return CTSEQ_OK;
  });
}

ctseq_status ctseq_export_dfao(const ctseq_problem* problem, const char* direction,
                               const char* format, char** text)
{
  return guarded([&] {
    need(problem, "problem");
    need(text, "text");
    const std::string dir = direction ? direction : "forward";
    if (dir != "forward" && dir != "reverse")
      throw ctseq::ArgumentError("unknown direction '" + dir + "'");
    const auto fmt = ctseq::parse_export_format(format ? format : "walnut");
    const auto& pr = problem->problem;
    const auto red = ctseq::build_reduction(pr.p, pr.q, pr.prime, pr.a);
    const ctseq::Dfao d = dir == "forward" ? red.forward_dfao() : red.reverse_dfao();
    *text = dup(ctseq::export_dfao(d, fmt));
    return CTSEQ_OK;
  });
}

ctseq_status ctseq_zero_frequency(const ctseq_problem* problem, uint64_t n, uint64_t* num,
                                  uint64_t* den, char** text)
{
  return guarded([&] {
    need(problem, "problem");
    const auto f = ctseq::zero_frequency(sequence_of(problem, n), n);
    if (num)
      *num = f.num;
    if (den)
      *den = f.den;
    if (text)
      *text = dup(ctseq::frequency_text(f));
    return CTSEQ_OK;
  });
}

ctseq_status ctseq_gap_report(const ctseq_problem* problem, uint64_t length, uint64_t n, char** text)
{
  return guarded([&] {
    need(problem, "problem");
    need(text, "text");
    *text = dup(ctseq::gap_text(ctseq::gap_stats(sequence_of(problem, n), length, n)));
    return CTSEQ_OK;
  });
}

ctseq_status ctseq_combine(const ctseq_problem* problem, size_t parts, const uint64_t* shifts,
                           const char* const* qs, const int64_t* coefficients, uint64_t count,
                           int64_t** terms)
{
  return guarded([&] {
    need(problem, "problem");
    need(terms, "terms");
    if (parts == 0)
      throw ctseq::ArgumentError("a combination needs at least one part");
    need(shifts, "shifts");
    need(qs, "qs");
    need(coefficients, "coefficients");
    const auto& pr = problem->problem;
    std::vector<ctseq::CombinationPart> list;
    for (std::size_t i = 0; i < parts; ++i) {
      need(qs[i], "part Q");
      ctseq::LaurentPoly q = ctseq::parse_poly(qs[i], pr.p.variable_count());
      if (q.variable_count() != pr.p.variable_count())
        throw ctseq::ArgumentError("part Q uses more variables than P");
      list.push_back({shifts[i], std::move(q), coefficients[i]});
    }
    *terms = dup_terms(ctseq::combine(pr.p, list, pr.prime, pr.a, count));
    return CTSEQ_OK;
  });
}

ctseq_status ctseq_conjecture_scan(unsigned degree_max, unsigned coeff_max, size_t count,
                                   const uint64_t* primes, size_t prime_count, uint64_t seed,
                                   unsigned workers, char** text)
{
  return guarded([&] {
    need(text, "text");
    ctseq::ConjectureSpec spec;
    spec.degree_max = degree_max;
    spec.coeff_max = coeff_max;
    spec.count = count;
    spec.seed = seed;
    if (prime_count) {
      need(primes, "primes");
      spec.primes.assign(primes, primes + prime_count);
    }
    *text = dup(ctseq::conjecture_text(ctseq::conjecture_scan(spec, {}, workers)));
    return CTSEQ_OK;
  });
}

ctseq_status ctseq_oracle_check(const ctseq_problem* problem, uint64_t n, char** text)
{
  return guarded([&] {
    need(problem, "problem");
    need(text, "text");
    const auto report = ctseq::oracle_check(problem->problem, n);
    *text = dup(ctseq::oracle_check_text(report));
    if (!report.ok) {
      last_error = "engines disagree with the oracle";
      return CTSEQ_E_MISMATCH;
    }
    return CTSEQ_OK;
  });
}

ctseq_status ctseq_format_poly(const char* poly, char** out)
{
  return guarded([&] {
    need(poly, "poly");
    need(out, "out");
    std::string text = poly;
    if (!text.empty() && text[0] == '@') {
      auto preset = ctseq::find_preset(text.substr(1));
      if (!preset)
        throw ctseq::ArgumentError("unknown preset '" + text.substr(1) + "'");
      text = preset->p_text;
    }
    *out = dup(ctseq::format_poly(ctseq::parse_poly(text)));
    return CTSEQ_OK;
  });
}

} // extern "C"
