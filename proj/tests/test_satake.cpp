#include <doctest.h>

#include <algorithm>

#include "hecke/satake.hpp"
#include "support.hpp"

using namespace hecke;
using testing_support::Gen;

namespace {

const ScalarDomain F11 = ScalarDomain::prime_field(11, 4, 5);

SatakeParameter random_parameter(Gen& g, const ScalarDomain& dom, std::size_t n) {
  std::vector<Scalar> e;
  for (std::size_t j = 0; j < n; ++j) {
    if (dom.kind() == DomainKind::prime_field) e.push_back(dom.from_int(g.range(1, static_cast<long>(dom.ell()) - 1)));
    else e.push_back(Scalar(mpq_class(g.range(1, 9) * (g.coin() ? 1 : -1), g.range(1, 9))));
  }
  return SatakeParameter(dom, e);
}

}  // namespace

TEST_CASE("evaluation examples") {
  auto gl2 = BasedRootDatum::standard(Family::GL, 2);
  auto s = SatakeParameter::symbolic(2);
  CHECK(evaluate(orbit_character(gl2, {1, 0}), s) == s.entries()[0] + s.entries()[1]);

  SatakeParameter p(F11, {F11.from_int(2), F11.from_int(7)});
  CHECK(evaluate(Laurent::v_power(2) * orbit_character(gl2, {1, 1}), p) == F11.from_int(4));
  CHECK(evaluate(SymmetricFunction::constant(2, Laurent(1)), p) == F11.one());
}

TEST_CASE("parameters must be invertible and in one ring") {
  CHECK_THROWS_AS(SatakeParameter(F11, {F11.from_int(0), F11.one()}), ValidationError);
  CHECK_THROWS_AS(SatakeParameter(F11, {Scalar(mpq_class(2)), F11.one()}), DomainMismatch);
  auto gl2 = BasedRootDatum::standard(Family::GL, 2);
  SatakeParameter p(F11, {F11.from_int(2), F11.from_int(7)});
  CHECK_THROWS_AS(evaluate(reduce(orbit_character(gl2, {1, 0}), ScalarDomain::prime_field(7, 3)), p), DomainMismatch);
  CHECK_THROWS_AS(frobenius_matrix(BasedRootDatum::standard(Family::GL, 3), {1, 0, 0}, p, 0), ValidationError);
}

TEST_CASE("frobenius matrices and twists") {
  auto gl2 = BasedRootDatum::standard(Family::GL, 2);
  auto s = SatakeParameter::symbolic(2);
  const ScalarDomain& dom = s.domain();
  int paper = resolve_twist(gl2, {1, 0}, TwistConfig::parse("paper"), 1);
  CHECK(paper == 2);
  FrobeniusMatrix F = frobenius_matrix(gl2, {1, 0}, s, paper);
  CHECK(F.diagonal == std::vector<Scalar>{dom.v_power(2) * s.entries()[0], dom.v_power(2) * s.entries()[1]});
  int classical = resolve_twist(gl2, {1, 0}, TwistConfig::parse("classical"), 1);
  CHECK(classical == 1);
  CHECK(frobenius_matrix(gl2, {1, 0}, s, classical).diagonal[0] == dom.v_power(1) * s.entries()[0]);
  auto ones = SatakeParameter::ones(F11, 2);
  CHECK(frobenius_matrix(gl2, {1, 0}, ones, 0).dense() == ScalarMatrix::identity(F11, 2));
  CHECK(resolve_twist(gl2, {1, 0}, TwistConfig::parse("paper"), 3) == 6);
  CHECK(resolve_twist(gl2, {1, 0}, TwistConfig::parse("exp=-4"), 1) == -4);
  CHECK_THROWS_AS(TwistConfig::parse("exp=x"), ValidationError);
  CHECK_THROWS_AS(TwistConfig::parse("weird"), ValidationError);
  CHECK_THROWS_AS(resolve_twist(gl2, {1, 0}, TwistConfig::parse("paper"), 0), ValidationError);
}

TEST_CASE("trace_of") {
  auto s = SatakeParameter::symbolic(2);
  FrobeniusMatrix F{{{1, 0}, {0, 1}}, s.entries(), s.domain()};
  CHECK(trace_of(F, 0) == s.domain().one());
  CHECK(trace_of(F, 1) == s.entries()[0] + s.entries()[1]);
  CHECK(trace_of(F, 2) == s.entries()[0] * s.entries()[1]);
  CHECK_THROWS_AS(trace_of(F, 3), ValidationError);
}

TEST_CASE("property: evaluation is multiplicative") {
  Gen g(77);
  auto gl3 = BasedRootDatum::standard(Family::GL, 3);
  std::vector<Coweight> pool = {{1, 0, 0}, {1, 1, 0}, {2, 0, -1}, {1, 1, 1}, {0, 0, -1}, {2, 1, 0}};
  for (const ScalarDomain& dom : {F11, ScalarDomain::rational(3)})
    for (int t = 0; t < 40; ++t) {
      SymmetricFunction f = g.laurent(2, 2) * orbit_character(gl3, pool[static_cast<std::size_t>(g.range(0, 5))]);
      SymmetricFunction h = g.laurent(2, 2) * orbit_character(gl3, pool[static_cast<std::size_t>(g.range(0, 5))]);
      SatakeParameter s = random_parameter(g, dom, 3);
      CHECK(evaluate(f * h, s) == evaluate(f, s) * evaluate(h, s));
      CHECK(evaluate(f + h, s) == evaluate(f, s) + evaluate(h, s));
    }
}

TEST_CASE("property: values are invariant under permuting the parameter") {
  Gen g(78);
  auto gl3 = BasedRootDatum::standard(Family::GL, 3);
  SymmetricFunction f = weyl_character(gl3, {2, 1, 0}) + Laurent::v_power(3) * orbit_character(gl3, {1, 1, 0});
  for (int t = 0; t < 20; ++t) {
    SatakeParameter s = random_parameter(g, F11, 3);
    std::vector<Scalar> e = s.entries();
    std::vector<int> idx = {0, 1, 2};
    do {
      SatakeParameter p(F11, {e[static_cast<std::size_t>(idx[0])], e[static_cast<std::size_t>(idx[1])],
                              e[static_cast<std::size_t>(idx[2])]});
      CHECK(evaluate(f, p) == evaluate(f, s));
    } while (std::next_permutation(idx.begin(), idx.end()));
    for (const WeylElement& w : gl3.weyl_group().elements()) CHECK(evaluate(f, s.transformed(w.matrix)) == evaluate(f, s));
  }
}

TEST_CASE("property: trace bridge identity") {
  Gen g(79);
  auto gl4 = BasedRootDatum::standard(Family::GL, 4);
  Coweight mu{1, 1, 0, 0};
  auto w = minuscule_weights(gl4, mu);
  const int twist = resolve_twist(gl4, mu, TwistConfig::parse("paper"), 1);
  for (int t = 0; t < 20; ++t) {
    SatakeParameter s = random_parameter(g, t % 2 ? F11 : ScalarDomain::rational(3), 4);
    FrobeniusMatrix F = frobenius_matrix(gl4, mu, s, twist);
    for (int i = 0; i <= 6; ++i)
      CHECK(trace_of(F, i) == evaluate(Laurent::v_power(i * twist) * ext_power_character(gl4, w, i), s));
  }
}

TEST_CASE("property: reduction commutes with evaluation") {
  Gen g(80);
  auto gl3 = BasedRootDatum::standard(Family::GL, 3);
  for (int t = 0; t < 40; ++t) {
    SymmetricFunction f = g.laurent(3, 5) * orbit_character(gl3, {1, 0, 0}) + g.laurent(3, 5) * orbit_character(gl3, {2, 1, 1});
    SatakeParameter s = random_parameter(g, F11, 3);
    CHECK(evaluate(reduce(f, F11), s) == evaluate(f, s));
    // the formal value at the generic point, specialized afterwards
    Scalar generic = evaluate(f, SatakeParameter::symbolic(3));
    CHECK(F11.specialize(std::get<MultiLaurent>(generic.storage()), s.entries()) == evaluate(f, s));
  }
}
