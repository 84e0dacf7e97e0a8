// Command-line front end. Talks to the library only through ctseq.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctseq/ctseq.h"

namespace {

  enum Exit { ok = 0, usage = 1, resource = 2, mismatch = 3, internal = 4 };

  int exit_for(ctseq_status s)
  {
    switch (s) {
    case CTSEQ_OK: return ok;
    case CTSEQ_E_USAGE:
    case CTSEQ_E_PARSE: return usage;
    case CTSEQ_E_RESOURCE:
    case CTSEQ_E_INCONCLUSIVE: return resource;
    case CTSEQ_E_MISMATCH: return mismatch;
    default: return internal;
    }
  }

  int fail(ctseq_status s)
  {
    std::cerr << "ctseq: " << ctseq_last_error() << '\n';
    return exit_for(s);
  }

  struct Owned {
    char* s = nullptr;
    ~Owned() { ctseq_string_free(s); }
  };
  struct Terms {
    int64_t* v = nullptr;
    ~Terms() { ctseq_terms_free(v); }
  };
  using ProblemPtr = std::unique_ptr<ctseq_problem, decltype(&ctseq_problem_destroy)>;

  struct Common {
    std::string poly;
    std::string q;
    uint64_t p = 0;
    unsigned a = 1;
  };

  void add_common(CLI::App* cmd, Common& c, bool with_q = true)
  {
    cmd->add_option("--poly", c.poly, "P as an expression or @preset")->required();
    if (with_q)
      cmd->add_option("--q", c.q, "Q (default: the preset's Q, or 1)");
    cmd->add_option("-p", c.p, "prime")->required();
    cmd->add_option("-a", c.a, "exponent of the modulus p^a")->default_val(1);
  }

  // Parses "k,expr,beta"; the expression itself never contains a comma.
  bool split_part(const std::string& spec, uint64_t& shift, std::string& q, int64_t& beta)
  {
    const auto first = spec.find(',');
    const auto last = spec.rfind(',');
    if (first == std::string::npos || first == last)
      return false;
    try {
      std::size_t used = 0;
      const std::string k = spec.substr(0, first);
      const std::string b = spec.substr(last + 1);
      if (k.empty() || k[0] == '-')
        return false;
      shift = std::stoull(k, &used);
      if (used != k.size())
        return false;
      beta = std::stoll(b, &used);
      if (used != b.size())
        return false;
    } catch (const std::exception&) {
      return false;
    }
    q = spec.substr(first + 1, last - first - 1);
    return true;
  }

  int emit(const std::string& text, const std::string& path)
  {
    if (path.empty() || path == "-") {
      std::cout << text;
      return ok;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "ctseq: cannot open " << path << '\n';
      return usage;
    }
    f << text;
    return f ? ok : usage;
  }

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"constant-term sequences ct(P^n Q) mod p^a"};
  app.require_subcommand(1);

  Common c;
  bool json = false;
  uint64_t n = 100;
  std::string engine = "linrep";
  std::string format = "walnut";
  std::string direction = "forward";
  std::string out_path;
  uint64_t length = 1;
  std::vector<std::string> parts;
  unsigned degree_max = 3, coeff_max = 3, workers = 0;
  std::size_t count = 200;
  std::vector<uint64_t> primes{2, 3, 5};
  uint64_t seed = 1;

  auto* classify = app.add_subcommand("classify", "decide linear recurrence of the sequence");
  add_common(classify, c);
  classify->add_flag("--json", json, "print the verdict as JSON");

  auto* generate = app.add_subcommand("generate", "print the first N terms, one per line");
  add_common(generate, c);
  generate->add_option("-n", n, "number of terms")->default_val(100);
  generate->add_option("--engine", engine, "linrep|dfao|reverse-dfao|morphism|oracle")->default_val("linrep");

  auto* exporter = app.add_subcommand("export-dfao", "write the automaton");
  add_common(exporter, c);
  exporter->add_option("--format", format, "dot|walnut")->default_val("walnut");
  exporter->add_option("--direction", direction, "forward|reverse")->default_val("forward");
  exporter->add_option("-o", out_path, "output path (default stdout)");

  auto* freq = app.add_subcommand("freq", "frequency of 0 among the first N terms");
  add_common(freq, c);
  freq->add_option("-n", n, "prefix length")->required();

  auto* gaps = app.add_subcommand("gaps", "occurrence gaps of length-L words");
  add_common(gaps, c);
  gaps->add_option("-L", length, "word length")->required();
  gaps->add_option("-n", n, "prefix length")->required();

  auto* combine = app.add_subcommand("combine", "linear combination of shifted sequences");
  add_common(combine, c, false);
  combine->add_option("--part", parts, "k,Q,beta (repeatable)")->required();
  combine->add_option("-n", n, "number of terms")->default_val(100);

  auto* conjecture = app.add_subcommand("conjecture", "scan a seeded corpus for zero witnesses");
  conjecture->add_option("--degree-max", degree_max)->default_val(3);
  conjecture->add_option("--coeff-max", coeff_max)->default_val(3);
  conjecture->add_option("--count", count)->default_val(200);
  conjecture->add_option("--primes", primes)->delimiter(',');
  conjecture->add_option("--seed", seed)->default_val(1);
  conjecture->add_option("--workers", workers, "0 = hardware concurrency")->default_val(0);

  auto* check = app.add_subcommand("oracle-check", "compare every engine against the oracle");
  add_common(check, c);
  check->add_option("-n", n, "number of terms")->default_val(1000);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  if (conjecture->parsed()) {
    Owned text;
    const auto s = ctseq_conjecture_scan(degree_max, coeff_max, count, primes.data(), primes.size(),
                                         seed, workers, &text.s);
    if (s != CTSEQ_OK)
      return fail(s);
    std::cout << text.s;
    return ok;
  }

  ctseq_problem* raw = nullptr;
  if (auto s = ctseq_problem_create(c.poly.c_str(), c.q.empty() ? nullptr : c.q.c_str(), c.p, c.a, &raw))
    return fail(s);
  ProblemPtr problem(raw, &ctseq_problem_destroy);

  if (classify->parsed()) {
    Owned text;
    const auto s = ctseq_classify(problem.get(), json ? 1 : 0, &text.s);
    if (text.s)
      std::cout << text.s;
    return s == CTSEQ_OK ? ok : fail(s);
  }
  if (generate->parsed()) {
    Terms t;
    if (auto s = ctseq_generate(problem.get(), engine.c_str(), n, &t.v))
      return fail(s);
    std::string out;
    for (uint64_t i = 0; i < n; ++i)
      out += std::to_string(t.v[i]) + '\n';
    std::cout << out;
    return ok;
  }
  if (exporter->parsed()) {
    Owned text;
    if (auto s = ctseq_export_dfao(problem.get(), direction.c_str(), format.c_str(), &text.s))
      return fail(s);
    return emit(text.s, out_path);
  }
  if (freq->parsed()) {
    Owned text;
    if (auto s = ctseq_zero_frequency(problem.get(), n, nullptr, nullptr, &text.s))
      return fail(s);
    std::cout << text.s;
    return ok;
  }
  if (gaps->parsed()) {
    Owned text;
    if (auto s = ctseq_gap_report(problem.get(), length, n, &text.s))
      return fail(s);
    std::cout << text.s;
    return ok;
  }
  if (combine->parsed()) {
    std::vector<uint64_t> shifts;
    std::vector<std::string> qs;
    std::vector<int64_t> betas;
    for (const auto& spec : parts) {
      uint64_t k = 0;
      std::string q;
      int64_t beta = 0;
      if (!split_part(spec, k, q, beta)) {
        std::cerr << "ctseq: --part expects k,Q,beta, got '" << spec << "'\n";
        return usage;
      }
      shifts.push_back(k);
      qs.push_back(q);
      betas.push_back(beta);
    }
    std::vector<const char*> qptr;
    for (const auto& q : qs)
      qptr.push_back(q.c_str());
    Terms t;
    if (auto s = ctseq_combine(problem.get(), parts.size(), shifts.data(), qptr.data(), betas.data(), n, &t.v))
      return fail(s);
    std::string out;
    for (uint64_t i = 0; i < n; ++i)
      out += std::to_string(t.v[i]) + '\n';
    std::cout << out;
    return ok;
  }
  if (check->parsed()) {
    Owned text;
    const auto s = ctseq_oracle_check(problem.get(), n, &text.s);
    if (text.s)
      std::cout << text.s;
    return s == CTSEQ_OK ? ok : fail(s);
  }
  return usage;
}
