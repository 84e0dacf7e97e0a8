#include <doctest.h>

#include <thread>

#include "ctseq/linrep.hpp"
#include "support.hpp"

using namespace test;

namespace {

  LinRep rep_mod(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t prime)
  {
    const Ring ring = Ring::modular(prime);
    return LinRep::build(p.reduced(ring), q.reduced(ring), prime, ring);
  }

  // Entry i of V(n) is ct(P^n x^i), the coefficient of x^-i in P^n.
  std::vector<Scalar> window_of_power(const LaurentPoly& p, std::uint64_t n, const IndexSet& w,
                                      std::uint64_t modulus)
  {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < w.size(); ++i)
      out.push_back(truth_at(p, LaurentPoly::monomial(w.at(i), 1), modulus, n));
    return out;
  }

} // namespace

TEST_CASE("build_index")
{
  const LaurentPoly qs1[] = {P("1 - x^2")};
  auto w = build_index(P("x^-1 + 1 + x"), qs1);
  CHECK(w.radius() == 2);
  CHECK(w.size() == 5);
  CHECK(w.center() == 2);
  const LaurentPoly qs2[] = {P("1")};
  auto w2 = build_index(P("x^-1 + x"), qs2);
  CHECK(w2.radius() == 0);
  CHECK(w2.size() == 1);
  CHECK(w2.center() == 0);
  const LaurentPoly qs3[] = {LaurentPoly::constant(3, 1)};
  auto w3 = build_index(preset_p("apery"), qs3);
  CHECK(w3.radius() == 0);
  CHECK(w3.size() == 1);
  // constant P and Q clamp to a 1x1 window
  const LaurentPoly qs4[] = {P("4")};
  CHECK(build_index(P("3"), qs4).size() == 1);
  // lexicographic order, first variable most significant
  IndexSet w4(2, 1);
  CHECK(w4.at(0) == ExponentVector{-1, -1});
  CHECK(w4.at(1) == ExponentVector{-1, 0});
  CHECK(w4.at(w4.center()) == ExponentVector{0, 0});
  for (std::size_t i = 0; i + 1 < w4.size(); ++i)
    CHECK(w4.at(i) < w4.at(i + 1));
  Limits small;
  small.window_cap = 100;
  const LaurentPoly qs5[] = {P("x^3*y^3*z^3", 3)};
  CHECK_THROWS_AS(build_index(P("x", 3), qs5, small), ResourceError);
}

TEST_CASE("gamma entries")
{
  const auto rep = rep_mod(P("x^-1 + 1 + x"), P("1 - x^2"), 3);
  const auto& g1 = rep.gamma(1);
  const auto& w = rep.index_set();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const auto ei = w.at(i)[0], ej = w.at(j)[0];
      const bool one = (ei == -2 && ej == -1) || (ei == -1 && ej == 0) || (ei == 0 && ej == 0)
                    || (ei == 1 && ej == 0) || (ei == 2 && ej == 1);
      CHECK(g1.at(i, j) == (one ? 1 : 0));
    }
  }
  CHECK(rep.gamma(0).is_unit_at(w.center()));
  CHECK_THROWS_AS(rep.gamma(3), ArgumentError);

  const auto pas = rep_mod(P("x^-1 + x"), P("1"), 2);
  CHECK(pas.gamma(0).at(0, 0) == 1);
  CHECK(pas.gamma(1).at(0, 0) == 0);
}

TEST_CASE("state vectors")
{
  const auto rep = rep_mod(P("x^-1 + 1 + x"), P("1"), 3);
  // the window here is 1x1; the trinomial with Q = 1 - x^2 spans [-2,2]
  const auto rep5 = rep_mod(P("x^-1 + 1 + x"), P("1 - x^2"), 3);
  const auto v2 = rep5.state_vector(2);
  CHECK(v2.entries() == std::vector<Scalar>{1, 2, 0, 2, 1});
  CHECK(v2.entries() == window_of_power(P("x^-1 + 1 + x"), 2, rep5.index_set(), 3));
  CHECK(rep5.state_vector(0) == rep5.v0());
  CHECK(rep5.state_vector(6) == rep5.apply(0, rep5.state_vector(2)));
  CHECK(rep5.state_vector(6).entries() == window_of_power(P("x^-1 + 1 + x"), 6, rep5.index_set(), 3));
  CHECK(rep.state_vector(2).constant_entry() == 0);

  // an asymmetric P pins down the sign convention
  const auto skew = P("2*x^-2 + x + 3*x^2*y - y^-1", 2);
  const auto rs = rep_mod(skew, P("x*y^2 + 1", 2), 5);
  for (std::uint64_t n : {1, 2, 7, 23})
    CHECK(rs.state_vector(n).entries() == window_of_power(skew, n, rs.index_set(), 5));
}

TEST_CASE("eval_term")
{
  const auto mot = rep_mod(preset_p("motzkin"), preset_q("motzkin"), 3);
  CHECK(mot.eval_term(2) == 2);
  CHECK(mot.eval_term(0) == 1);
  const auto cat = rep_mod(preset_p("catalan"), preset_q("catalan"), 2);
  CHECK(cat.eval_term(3) == 1);
  CHECK(truth_at(preset_p("catalan"), preset_q("catalan"), 2, 3) == 1);
}

TEST_CASE("settle exponent")
{
  CHECK(rep_mod(P("x^-1 + 1 + x"), P("1 - x^2"), 3).settle_exponent() == 1);
  CHECK(rep_mod(P("x^-1 + x"), P("1"), 2).settle_exponent() == 1);
  const auto rep = rep_mod(P("x^-1 + 1 + x"), P("x^9 + 1"), 2);
  CHECK(rep.index_set().radius() == 9);
  const unsigned s = rep.settle_exponent();
  CHECK(s <= 4);
  SparseMatrix power = rep.gamma(0);
  for (unsigned i = 1; i < s; ++i) {
    CHECK_FALSE(power.is_unit_at(rep.index_set().center()));
    power = SparseMatrix::product(power, rep.gamma(0), rep.ring());
  }
  for (int extra = 0; extra < 3; ++extra) {
    CHECK(power.is_unit_at(rep.index_set().center()));
    power = SparseMatrix::product(power, rep.gamma(0), rep.ring());
  }
}

TEST_CASE("oracle agreement on presets")
{
  for (const auto& name : preset_names()) {
    const auto p = preset_p(name), q = preset_q(name);
    for (std::uint64_t prime : {2, 3, 5}) {
      const auto rep = rep_mod(p, q, prime);
      const std::uint64_t count = name == "apery" ? 60 : 400;
      const auto want = truth(p, q, prime, count);
      for (std::uint64_t n = 0; n < count; ++n)
        REQUIRE(rep.eval_term(n) == want[n]);
    }
  }
}

TEST_CASE("row duality and degree closure")
{
  std::mt19937_64 rng(21);
  for (int it = 0; it < 40; ++it) {
    const std::uint64_t prime = std::vector<std::uint64_t>{2, 3, 5}[it % 3];
    const Ring ring = Ring::modular(prime);
    const std::size_t r = 1 + it % 2;
    auto p = random_poly(rng, r, 2, 4, 5).reduced(ring);
    auto q = random_poly(rng, r, 2, 4, 5).reduced(ring);
    const auto rep = LinRep::build(p, q, prime, ring);
    LaurentPoly state = q;
    for (int step = 0; step < 5; ++step) {
      const unsigned k = static_cast<unsigned>(rng() % prime);
      const auto next = lambda(pow(p, k) * state, static_cast<std::int64_t>(prime));
      CHECK(next.degree() <= rep.index_set().radius());
      const auto row = rep.row_vector(state);
      const auto& g = rep.gamma(k);
      CHECK(g.apply_row(row, ring) == rep.row_vector(next));
      state = next;
    }
  }
}

TEST_CASE("trailing zeros do not change terms")
{
  const auto rep = rep_mod(preset_p("motzkin"), preset_q("motzkin"), 3);
  for (std::uint64_t n = 1; n < 200; ++n) {
    // digits of n followed by zeros: multiply V(0) by gamma(0) first
    auto v = rep.apply(0, rep.apply(0, rep.v0()));
    const auto digits = digits_lsd(n, 3);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
      v = rep.apply(*it, v);
    CHECK(rep.code(rep.row_q(), v) == rep.eval_term(n));
  }
}

TEST_CASE("gamma cache is shared and thread safe")
{
  const auto rep = rep_mod(P("x^-2 + x + 3*x^2"), P("1 + x"), 7);
  std::vector<std::thread> pool;
  std::vector<std::size_t> nnz(7);
  for (unsigned k = 0; k < 7; ++k)
    pool.emplace_back([&, k] { nnz[k] = rep.gamma(k).nonzeros(); });
  for (auto& t : pool)
    t.join();
  const LinRep copy = rep;
  for (unsigned k = 0; k < 7; ++k)
    CHECK(&copy.gamma(k) == &rep.gamma(k));
}
