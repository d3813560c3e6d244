#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace hecke;
using testing_support::Gen;

namespace {

std::vector<BasedRootDatum> sample_data() {
  return {BasedRootDatum::standard(Family::GL, 1), BasedRootDatum::standard(Family::GL, 2),
          BasedRootDatum::standard(Family::GL, 3), BasedRootDatum::standard(Family::GL, 4),
          BasedRootDatum::standard(Family::SL, 2), BasedRootDatum::standard(Family::SL, 3),
          BasedRootDatum::standard(Family::PGL, 2), BasedRootDatum::standard(Family::PGL, 3),
          BasedRootDatum::standard(Family::Sp, 4), BasedRootDatum::standard(Family::Sp, 6)};
}

IntMatrix simple_reflection(const BasedRootDatum& D, std::size_t i) {
  return D.weyl_group().element(D.weyl_group().generator(i)).matrix;
}

IntMatrix power(const IntMatrix& m, int k) {
  IntMatrix r = IntMatrix::identity(m.size());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

TEST_CASE("standard builders") {
  auto gl2 = BasedRootDatum::standard(Family::GL, 2);
  CHECK(gl2.simple_roots() == std::vector<IntVector>{{1, -1}});
  CHECK(gl2.weyl_group().order() == 2);
  CHECK(BasedRootDatum::standard(Family::GL, 3).weyl_group().order() == 6);
  CHECK(BasedRootDatum::standard(Family::GL, 4).weyl_group().order() == 24);
  CHECK(BasedRootDatum::standard(Family::Sp, 4).weyl_group().order() == 8);
  CHECK(BasedRootDatum::standard(Family::Sp, 6).weyl_group().order() == 48);
  CHECK(BasedRootDatum::standard(Family::SL, 3).weyl_group().order() == 6);
  CHECK(gl2.label() == "GL2");
  CHECK_THROWS_AS(BasedRootDatum::standard(Family::Sp, 3), ValidationError);
  CHECK_THROWS_AS(BasedRootDatum::standard(Family::GL, 0), ValidationError);
  CHECK_THROWS_AS(BasedRootDatum::standard(Family::SL, 1), ValidationError);
  CHECK_THROWS_AS(parse_family("XX"), ValidationError);
}

TEST_CASE("Weyl group order agrees with brute-force closure") {
  for (const auto& D : sample_data()) CHECK(D.weyl_group().order() == testing_support::weyl_closure(D).size());
}

TEST_CASE("custom data are validated") {
  auto d = BasedRootDatum::custom("A1", 2, {{1, -1}}, {{1, -1}});
  CHECK(d.weyl_group().order() == 2);
  CHECK_THROWS_AS(BasedRootDatum::custom("bad", 2, {{1, -1}}, {{1, 0}}), ValidationError);
  CHECK_THROWS_AS(BasedRootDatum::custom("bad", 2, {{1, 0}, {0, 1}}, {{2, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(BasedRootDatum::custom("bad", 2, {{1, -1, 0}}, {{1, -1}}), ValidationError);
}

TEST_CASE("property: involutions and braid relations") {
  for (const auto& D : sample_data()) {
    const std::size_t r = D.simple_roots().size();
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(power(simple_reflection(D, i), 2) == IntMatrix::identity(static_cast<std::size_t>(D.rank())));
      for (std::size_t j = i + 1; j < r; ++j) {
        int prod = D.cartan(i, j) * D.cartan(j, i);
        int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
        IntMatrix st = simple_reflection(D, i) * simple_reflection(D, j);
        CHECK(power(st, m) == IntMatrix::identity(static_cast<std::size_t>(D.rank())));
        for (int k = 1; k < m; ++k) CHECK_FALSE(power(st, k) == IntMatrix::identity(static_cast<std::size_t>(D.rank())));
      }
    }
  }
}

TEST_CASE("Weyl group tables") {
  for (const auto& D : sample_data()) {
    const WeylGroup& W = D.weyl_group();
    for (std::size_t a = 0; a < W.order(); ++a) {
      CHECK(W.multiply(a, W.inverse(a)) == W.identity());
      CHECK(W.element(W.multiply(a, a)).matrix == W.element(a).matrix * W.element(a).matrix);
      // the stored word multiplies out to the stored matrix
      IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(D.rank()));
      for (int g : W.element(a).word) m = m * W.element(W.generator(static_cast<std::size_t>(g))).matrix;
      CHECK(m == W.element(a).matrix);
    }
  }
}

TEST_CASE("orbits") {
  auto gl3 = BasedRootDatum::standard(Family::GL, 3);
  CHECK(gl3.weyl_orbit({1, 1, 0}) == std::vector<Coweight>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(BasedRootDatum::standard(Family::GL, 2).weyl_orbit({0, 0}) == std::vector<Coweight>{{0, 0}});
  CHECK(BasedRootDatum::standard(Family::GL, 4).weyl_orbit({1, 0, 0, 0}).size() == 4);
}

TEST_CASE("property: orbit sizes divide |W| and the dominant element maximizes <2rho, .>") {
  Gen g(11);
  for (const auto& D : sample_data())
    for (int t = 0; t < 25; ++t) {
      Coweight x = g.coweight(static_cast<std::size_t>(D.rank()), 3);
      auto orbit = D.weyl_orbit(x);
      CHECK(D.weyl_group().order() % orbit.size() == 0);
      Coweight dom = D.dominant_representative(x);
      CHECK(D.is_dominant(dom));
      CHECK(std::find(orbit.begin(), orbit.end(), dom) != orbit.end());
      int best = D.rho_pairing_exponent(dom);
      int count = 0;
      for (const Coweight& y : orbit) {
        CHECK(D.rho_pairing_exponent(y) <= best);
        if (D.is_dominant(y)) ++count;
      }
      CHECK(count == 1);
    }
}

TEST_CASE("minuscule test") {
  auto gl4 = BasedRootDatum::standard(Family::GL, 4);
  CHECK(gl4.is_minuscule({1, 1, 0, 0}));
  // all 12 roots e_i - e_j pair into {-1, 0, 1}
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) {
        IntVector a(4, 0);
        a[static_cast<std::size_t>(i)] = 1;
        a[static_cast<std::size_t>(j)] = -1;
        CHECK(std::abs(pairing(a, {1, 1, 0, 0})) <= 1);
      }
  CHECK_FALSE(BasedRootDatum::standard(Family::GL, 2).is_minuscule({2, 0}));
  for (const auto& D : sample_data()) CHECK(D.is_minuscule(Coweight::zero(static_cast<std::size_t>(D.rank()))));
}

TEST_CASE("property: minuscule orbits pair into {-1, 0, 1}") {
  for (const auto& D : sample_data())
    for (const Coweight& mu : D.minuscule_dominants())
      for (const Coweight& x : D.weyl_orbit(mu))
        for (const Root& a : D.positive_roots()) CHECK(std::abs(pairing(a.root, x)) <= 1);
}

TEST_CASE("dominance") {
  auto gl2 = BasedRootDatum::standard(Family::GL, 2);
  CHECK(gl2.dominant_representative({0, 1}) == Coweight{1, 0});
  CHECK(gl2.dominance_leq({1, 1}, {2, 0}));
  CHECK_FALSE(gl2.dominance_leq({1, 0}, {1, 1}));
  CHECK_FALSE(gl2.dominance_leq({2, 0}, {1, 1}));
  auto sl3 = BasedRootDatum::standard(Family::SL, 3);
  // coroot basis: (1,1) is the highest coroot
  CHECK(sl3.dominance_leq({0, 0}, {1, 1}));
  CHECK_FALSE(sl3.dominance_leq({1, 1}, {0, 0}));
}

TEST_CASE("rho pairing") {
  CHECK(BasedRootDatum::standard(Family::GL, 2).rho_pairing_exponent({1, 0}) == 1);
  CHECK(BasedRootDatum::standard(Family::GL, 3).rho_pairing_exponent({1, 0, 0}) == 2);
  CHECK(BasedRootDatum::standard(Family::GL, 3).rho_pairing_exponent({1, 1, 1}) == 0);
  CHECK(BasedRootDatum::standard(Family::GL, 3).two_rho_coroot() == Coweight{2, 0, -2});
}

TEST_CASE("coweight parsing") {
  CHECK(Coweight::parse("1,0,-1") == Coweight{1, 0, -1});
  CHECK(Coweight::parse("(1,0)") == Coweight{1, 0});
  CHECK(Coweight{1, -2}.str() == "(1,-2)");
  CHECK_THROWS_AS(Coweight::parse("1,,0"), ValidationError);
  CHECK_THROWS_AS(Coweight::parse("a"), ValidationError);
  CHECK_THROWS_AS(BasedRootDatum::standard(Family::GL, 2).check_coweight({1, 0, 0}), ValidationError);
}
