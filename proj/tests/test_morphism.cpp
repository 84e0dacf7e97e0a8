#include <doctest.h>

#include "ctseq/morphism.hpp"
#include "support.hpp"

using namespace test;

namespace {

  LinRep rep_mod(const LaurentPoly& p, const LaurentPoly& q, std::uint64_t prime)
  {
    const Ring ring = Ring::modular(prime);
    return LinRep::build(p.reduced(ring), q.reduced(ring), prime, ring);
  }

} // namespace

TEST_CASE("sigma image")
{
  const auto pas = rep_mod(P("x^-1 + x"), P("1"), 2);
  const auto img = sigma_image(pas, pas.v0());
  REQUIRE(img.size() == 2);
  CHECK(img[0].entries() == std::vector<Scalar>{1});
  CHECK(img[1].entries() == std::vector<Scalar>{0});

  const auto tri = rep_mod(P("x^-1 + 1 + x"), P("1 - x^2"), 3);
  CHECK(sigma_image(tri, tri.v0())[0] == tri.v0());
  std::mt19937_64 rng(31);
  for (int it = 0; it < 20; ++it) {
    const std::uint64_t j = rng() % 50;
    const auto word = sigma_image(tri, tri.state_vector(j));
    for (std::uint64_t k = 0; k < 3; ++k)
      CHECK(word[k] == tri.state_vector(3 * j + k));
  }
  CHECK_THROWS_AS(sigma_image(tri, StateVector({1}, 0)), ArgumentError);
}

TEST_CASE("extend")
{
  const auto tri2 = rep_mod(P("x^-1 + 1 + x"), P("1"), 2);
  MorphicStream s(tri2);
  s.extend(8);
  for (std::uint64_t n = 0; n < 8; ++n)
    CHECK(s.at(n).entries() == std::vector<Scalar>{1});

  const auto pas = rep_mod(P("x^-1 + x"), P("1"), 2);
  MorphicStream sp(pas);
  sp.extend(64);
  const auto coded = coded_prefix(sp, pas.row_q(), 64);
  const auto want = truth(P("x^-1 + x"), P("1"), 2, 64);
  CHECK(coded == want);
  CHECK(coded[0] == 1);
  for (std::uint64_t n = 1; n < 64; ++n)
    CHECK(coded[n] == 0);

  // length p^t prefix is sigma^t(V(0))
  const auto tri = rep_mod(P("x^-1 + 1 + x"), P("1 - x^2"), 3);
  MorphicStream st(tri);
  st.extend(27);
  std::vector<StateVector> word{tri.v0()};
  for (int t = 0; t < 3; ++t) {
    std::vector<StateVector> next;
    for (const auto& u : word)
      for (auto& v : sigma_image(tri, u))
        next.push_back(v);
    word = std::move(next);
  }
  REQUIRE(word.size() == 27);
  for (std::uint64_t n = 0; n < 27; ++n)
    CHECK(st.at(n) == word[n]);

  Limits tiny;
  tiny.stream_cap = 10;
  const auto capped = LinRep::build(P("x^-1 + 1 + x").reduced(Ring::modular(3)),
                                    LaurentPoly::constant(1, 1, Ring::modular(3)), 3,
                                    Ring::modular(3), tiny);
  MorphicStream sc(capped);
  CHECK_THROWS_AS(sc.extend(11), ResourceError);
}

TEST_CASE("coded prefixes")
{
  const auto mot = rep_mod(preset_p("motzkin"), preset_q("motzkin"), 3);
  MorphicStream sm(mot);
  sm.extend(6);
  CHECK(coded_prefix(sm, mot.row_q(), 6) == std::vector<Scalar>{1, 1, 2, 1, 0, 0});
  CHECK(truth(preset_p("motzkin"), preset_q("motzkin"), 3, 6) == std::vector<Scalar>{1, 1, 2, 1, 0, 0});

  const auto cat = rep_mod(preset_p("catalan"), preset_q("catalan"), 2);
  MorphicStream sc(cat);
  sc.extend(8);
  CHECK(coded_prefix(sc, cat.row_q(), 8) == std::vector<Scalar>{1, 1, 0, 1, 0, 0, 0, 1});
  CHECK(truth(preset_p("catalan"), preset_q("catalan"), 2, 8) == std::vector<Scalar>{1, 1, 0, 1, 0, 0, 0, 1});

  // the constant-entry row gives ct(P^n)
  RowVector unit(cat.index_set().size(), 0);
  unit[cat.index_set().center()] = 1;
  CHECK(coded_prefix(sc, unit, 8) == truth(preset_p("catalan"), P("1"), 2, 8));
  CHECK_THROWS_AS(coded_prefix(sc, unit, 9), ArgumentError);
  CHECK_THROWS_AS(coded_prefix(sc, RowVector{1}, 8), ArgumentError);
}

TEST_CASE("fixed point and oracle agreement")
{
  for (const auto& name : preset_names()) {
    const auto p = preset_p(name), q = preset_q(name);
    for (std::uint64_t prime : {2, 3, 5}) {
      const auto rep = rep_mod(p, q, prime);
      MorphicStream s(rep);
      const std::uint64_t count = name == "apery" ? 60 : 2000;
      s.extend(count * prime);
      // sigma(alpha) = alpha on the generated prefix
      for (std::uint64_t j = 0; j < count; ++j) {
        const auto word = sigma_image(rep, s.at(j));
        for (std::uint64_t k = 0; k < prime; ++k)
          REQUIRE(word[k] == s.at(prime * j + k));
      }
      std::mt19937_64 rng(prime * 7 + name.size());
      for (int it = 0; it < 50; ++it) {
        const std::uint64_t n = rng() % s.size();
        REQUIRE(s.at(n) == rep.state_vector(n));
      }
      CHECK(coded_prefix(s, rep.row_q(), count) == truth(p, q, prime, count));
    }
  }
}

TEST_CASE("letters are interned")
{
  const auto tri = rep_mod(P("x^-1 + 1 + x"), P("1"), 3);
  MorphicStream s(tri);
  s.extend(3000);
  CHECK(s.table().size() == 2);
  CHECK(s.id_at(0) == 0);
}
