#include <doctest.h>

#include <json.hpp>

#include "ctseq/pipeline.hpp"
#include "ctseq/textio.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("parse_poly")
{
  CHECK(P("x^-1 + 2 + x") == LaurentPoly::from_terms(1, Ring::integers(), {{{-1}, 1}, {{0}, 2}, {{1}, 1}}));
  const auto apery = P("(1+x)*(1+y)*(1+z)*(1+y+z+y*z+x*y*z)/(x*y*z)");
  CHECK(apery.variable_count() == 3);
  CHECK(apery.constant_term() == 5);
  CHECK(apery == pow(P("1+x", 3), 1) * P("1+y", 3) * P("1+z", 3) * P("1+y+z+y*z+x*y*z", 3)
                   * LaurentPoly::monomial({-1, -1, -1}, 1));
  CHECK(P("x^-1 + x") == P("x + 1/x"));
  CHECK(P("-x^2 - -3") == P("3 - x^2"));
  CHECK(P("2*x/(-x)") == P("-2"));
  CHECK(P("(1+x)^3") == P("1 + 3*x + 3*x^2 + x^3"));
  CHECK(P("x3").variable_count() == 3);
  CHECK(P("x1*x4^-2").variable_count() == 4);
  CHECK(P("7", 2).variable_count() == 2);

  CHECK_THROWS_AS(P("x/(1+y)"), ParseError);
  try {
    P("x/(1+y)");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("non-monomial") != std::string::npos);
  }
  CHECK_THROWS_AS(P("x/(2*x)"), ParseError);
  CHECK_THROWS_AS(P("x + "), ParseError);
  CHECK_THROWS_AS(P("x + y + x2"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(P("w"), ParseError);
  try {
    P("1 + $");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("format_poly")
{
  CHECK(format_poly(P("x^-1 + x")) == "x^-1 + x");
  CHECK(format_poly(LaurentPoly(2)) == "0");
  CHECK(format_poly(P("3 - x^2")) == "3 - x^2");
  CHECK(format_poly(P("x1*x4^-2")) == "x1*x4^-2");
  CHECK(format_poly(P("-y + 2*x*z^3")) == "-y + 2*x*z^3");
}

TEST_CASE("round trip")
{
  std::mt19937_64 rng(71);
  for (int it = 0; it < 500; ++it) {
    const std::size_t r = 1 + it % 3;
    const auto a = random_poly(rng, r, 4, 9, 7);
    const auto b = parse_poly(format_poly(a), r);
    CHECK(b == a);
  }
  for (const auto& pr : presets()) {
    const auto a = parse_poly(pr.p_text);
    CHECK(parse_poly(format_poly(a), a.variable_count()) == a);
  }
}

TEST_CASE("presets")
{
  CHECK(presets().size() == 5);
  CHECK(find_preset("catalan")->p_text == "x^-1 + 2 + x");
  CHECK_FALSE(find_preset("fibonacci"));
  const auto pr = make_problem("@motzkin", "", 3, 2);
  CHECK(pr.q == P("1 - x^2"));
  CHECK(pr.preset == "motzkin");
  CHECK(make_problem("@motzkin", "1 + x", 3, 1).q == P("1 + x"));
  CHECK(make_problem("x", "y", 2, 1).p.variable_count() == 2);
  CHECK_THROWS_AS(make_problem("@nope", "", 3, 1), ArgumentError);
  CHECK_THROWS_AS(make_problem("x", "", 9, 1), ArgumentError);
  CHECK_THROWS_AS(make_problem("x", "", 3, 0), ArgumentError);
}

TEST_CASE("verdict json")
{
  const auto pr = make_problem("@trinomial", "", 3, 1);
  const auto v = verdict(pr.p, pr.q, pr.prime, pr.a);
  const auto text = verdict_json(v);
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"p", "a", "m", "window_size", "settle_s", "reachable_states",
                                         "zero_witness", "linearly_recurrent", "recurrence_guaranteed",
                                         "conjecture_bound", "naive_bound_digits", "status"});
  CHECK(j["zero_witness"] == 2);
  CHECK(j["linearly_recurrent"] == false);
  CHECK(j["status"] == "exact");
  CHECK(verdict_json(v) == text);

  const auto none = verdict(P("x^-1 + 1 + x"), P("1"), 2, 1);
  CHECK(nlohmann::json::parse(verdict_json(none))["zero_witness"].is_null());

  Verdict undecided = none;
  undecided.linearly_recurrent.reset();
  undecided.status = Status::inconclusive;
  const auto ju = nlohmann::json::parse(verdict_json(undecided));
  CHECK(ju["linearly_recurrent"].is_null());
  CHECK(ju["status"] == "inconclusive");
}

TEST_CASE("engines through the pipeline")
{
  const auto pr = make_problem("@catalan", "", 3, 2);
  const auto want = generate(pr, Engine::oracle, 200);
  for (Engine e : {Engine::linrep, Engine::dfao, Engine::reverse_dfao, Engine::morphism})
    CHECK(generate(pr, e, 200) == want);
  CHECK(parse_engine("reverse-dfao") == Engine::reverse_dfao);
  CHECK_THROWS_AS(parse_engine("magic"), ArgumentError);
  const auto check = oracle_check(pr, 300);
  CHECK(check.ok);
  CHECK(check.rows.size() == 4);
  CHECK(oracle_check_text(check).find("FAIL") == std::string::npos);
}

TEST_CASE("report text")
{
  CHECK(frequency_text(Rational{1, 2}) == "1/2 0.500000\n");
  GapReport g{1, 3, {{{1}, 3, 0, 1, false}}};
  CHECK(gap_text(g) == "# L=1 N=3 words=1\nword\toccurrences\tfirst\tmax_gap\tcensored\n1\t3\t0\t1\tno\n");
}
