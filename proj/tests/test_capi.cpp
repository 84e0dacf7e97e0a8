#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "ctseq/ctseq.h"

namespace {

  struct Problem {
    ctseq_problem* h = nullptr;
    Problem(const char* poly, const char* q, uint64_t p, unsigned a)
    {
      REQUIRE(ctseq_problem_create(poly, q, p, a, &h) == CTSEQ_OK);
    }
    ~Problem() { ctseq_problem_destroy(h); }
  };

  std::string take(char* s)
  {
    std::string out = s ? s : "";
    ctseq_string_free(s);
    return out;
  }

  std::vector<int64_t> terms(const ctseq_problem* pr, const char* engine, uint64_t n)
  {
    int64_t* t = nullptr;
    REQUIRE(ctseq_generate(pr, engine, n, &t) == CTSEQ_OK);
    std::vector<int64_t> out(t, t + n);
    ctseq_terms_free(t);
    return out;
  }

} // namespace

TEST_CASE("problem handles and errors")
{
  ctseq_problem* h = nullptr;
  CHECK(ctseq_problem_create("x + ", nullptr, 3, 1, &h) == CTSEQ_E_PARSE);
  CHECK(h == nullptr);
  CHECK(std::strlen(ctseq_last_error()) > 0);
  CHECK(ctseq_problem_create("x", nullptr, 4, 1, &h) == CTSEQ_E_USAGE);
  CHECK(std::string(ctseq_last_error()).find("prime") != std::string::npos);
  CHECK(ctseq_problem_create("@nope", nullptr, 3, 1, &h) == CTSEQ_E_USAGE);
  CHECK(ctseq_problem_create("x", nullptr, 3, 1, nullptr) == CTSEQ_E_USAGE);
  ctseq_problem_destroy(nullptr);

  Problem pr("@catalan", nullptr, 3, 2);
  CHECK(terms(pr.h, "linrep", 5) == std::vector<int64_t>{1, 1, 2, 5, 5});
  int64_t* t = nullptr;
  CHECK(ctseq_generate(pr.h, "magic", 5, &t) == CTSEQ_E_USAGE);
  CHECK(t == nullptr);
}

TEST_CASE("engines agree")
{
  Problem pr("@motzkin", nullptr, 2, 3);
  const auto want = terms(pr.h, "oracle", 300);
  for (const char* e : {"linrep", "dfao", "reverse-dfao", "morphism"})
    CHECK(terms(pr.h, e, 300) == want);
  Problem mq("x^-1 + 1 + x", "1 - x^2", 2, 3);
  CHECK(terms(mq.h, "linrep", 300) == want);
}

TEST_CASE("classify")
{
  Problem pr("@trinomial", nullptr, 3, 1);
  char* text = nullptr;
  REQUIRE(ctseq_classify(pr.h, 1, &text) == CTSEQ_OK);
  const auto json = take(text);
  CHECK(json.find("\"zero_witness\": 2") != std::string::npos);
  CHECK(json.find("\"status\": \"exact\"") != std::string::npos);
  REQUIRE(ctseq_classify(pr.h, 0, &text) == CTSEQ_OK);
  CHECK_FALSE(take(text).empty());
}

TEST_CASE("export")
{
  Problem pr("x^-1 + x", nullptr, 2, 1);
  char* text = nullptr;
  REQUIRE(ctseq_export_dfao(pr.h, "forward", "walnut", &text) == CTSEQ_OK);
  CHECK(take(text) == "lsd_2\n0 1\n0 -> 0\n1 -> 1\n\n1 0\n0 -> 1\n1 -> 1\n");
  REQUIRE(ctseq_export_dfao(pr.h, "reverse", "dot", &text) == CTSEQ_OK);
  CHECK(take(text).rfind("digraph", 0) == 0);
  CHECK(ctseq_export_dfao(pr.h, "sideways", "dot", &text) == CTSEQ_E_USAGE);
}

TEST_CASE("frequency, gaps, combine")
{
  Problem tri("@trinomial", "1", 3, 1);
  uint64_t num = 0, den = 0;
  char* text = nullptr;
  REQUIRE(ctseq_zero_frequency(tri.h, 729, &num, &den, &text) == CTSEQ_OK);
  CHECK(num == 665);
  CHECK(den == 729);
  CHECK(take(text).rfind("665/729", 0) == 0);
  CHECK(ctseq_zero_frequency(tri.h, 0, &num, &den, nullptr) == CTSEQ_E_USAGE);

  REQUIRE(ctseq_gap_report(tri.h, 2, 100, &text) == CTSEQ_OK);
  CHECK(take(text).rfind("# L=2 N=100", 0) == 0);

  const uint64_t shifts[] = {0, 0};
  const char* qs[] = {"1", "1 - x^2"};
  const int64_t coefficients[] = {1, 1};
  int64_t* t = nullptr;
  REQUIRE(ctseq_combine(tri.h, 2, shifts, qs, coefficients, 5, &t) == CTSEQ_OK);
  CHECK(std::vector<int64_t>(t, t + 5) == std::vector<int64_t>{2, 2, 2, 2, 1});
  ctseq_terms_free(t);
  const char* bad[] = {"1", "1 +"};
  CHECK(ctseq_combine(tri.h, 2, shifts, bad, coefficients, 5, &t) == CTSEQ_E_PARSE);
}

TEST_CASE("conjecture scan and oracle check")
{
  const uint64_t primes[] = {2, 3};
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(ctseq_conjecture_scan(2, 2, 10, primes, 2, 5, 1, &a) == CTSEQ_OK);
  REQUIRE(ctseq_conjecture_scan(2, 2, 10, primes, 2, 5, 2, &b) == CTSEQ_OK);
  CHECK(take(a) == take(b));

  Problem pr("@pascal", nullptr, 2, 2);
  char* text = nullptr;
  REQUIRE(ctseq_oracle_check(pr.h, 200, &text) == CTSEQ_OK);
  CHECK(take(text).find("FAIL") == std::string::npos);

  char* out = nullptr;
  REQUIRE(ctseq_format_poly("x + 1/x", &out) == CTSEQ_OK);
  CHECK(take(out) == "x^-1 + x");
  CHECK(ctseq_format_poly("x/(1+y)", &out) == CTSEQ_E_PARSE);
}
