#include <doctest.h>

#include "support.hpp"

using namespace hecke;
using testing_support::Gen;

namespace {

const Laurent v = Laurent::v_power(1);
const Laurent v_inv = Laurent::v_power(-1);

Scalar mod11(std::uint64_t x) { return Scalar(Residue{x % 11, 11}); }

}  // namespace

TEST_CASE("laurent products") {
  CHECK(v * v == Laurent::q_power(1));
  CHECK((v - v_inv) * (v + v_inv) == Laurent::v_power(2) - Laurent::v_power(-2));
  CHECK((Laurent(1) + v) * (Laurent(1) + v) == Laurent(1) + Laurent::monomial(2, 1) + Laurent::v_power(2));
  CHECK((Laurent(1) + v).pow(0) == Laurent(1));
  CHECK((v - v).is_zero());
}

TEST_CASE("laurent serialization") {
  CHECK(Laurent().str() == "0");
  CHECK((Laurent(1) + Laurent::monomial(-2, -3)).str() == "-2*v^-3+1*v^0");
  CHECK(Laurent::parse("-2*v^-3+1*v^0") == Laurent(1) + Laurent::monomial(-2, -3));
  CHECK(Laurent::parse("q - 1") == Laurent::v_power(2) - Laurent(1));
  CHECK(Laurent::parse("3") == Laurent(3));
  CHECK_THROWS_AS(Laurent::parse("v^"), ValidationError);
  CHECK_THROWS_AS(Laurent::parse(""), ValidationError);
  CHECK((Laurent::v_power(2) - Laurent(1)).pretty() == "q - 1");
  CHECK(Laurent::v_power(-1).pretty() == "v^-1");
}

TEST_CASE("laurent units") {
  CHECK(Laurent::monomial(-1, 3).unit_inverse() == Laurent::monomial(-1, -3));
  CHECK_THROWS_AS(Laurent(2).unit_inverse(), ConsistencyError);
  CHECK_THROWS_AS((Laurent(1) + v).unit_inverse(), ConsistencyError);
}

TEST_CASE("property: ring axioms on random Laurent polynomials") {
  Gen g(101);
  for (int t = 0; t < 300; ++t) {
    Laurent a = g.laurent(), b = g.laurent(), c = g.laurent();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + Laurent() == a);
    CHECK(a * Laurent(1) == a);
    CHECK(a - a == Laurent());
    CHECK(a.shifted(3) == a * Laurent::v_power(3));
  }
}

TEST_CASE("property: serialization round trip") {
  Gen g(202);
  for (int t = 0; t < 300; ++t) {
    Laurent a = g.laurent(6, 20);
    CHECK(Laurent::parse(a.str()) == a);
    CHECK(Laurent::parse(a.pretty()) == a);
  }
  for (int t = 0; t < 100; ++t) {
    MultiLaurent m;
    for (int k = 0; k < 3; ++k)
      m += MultiLaurent::monomial(g.range(-5, 5), {static_cast<int>(g.range(-3, 3)), static_cast<int>(g.range(-2, 2)),
                                                  static_cast<int>(g.range(-2, 2))});
    CHECK(MultiLaurent::parse(m.str()) == m);
  }
}

TEST_CASE("reduce into a prime field") {
  ScalarDomain F = ScalarDomain::prime_field(11, 4, 5);
  // squares of all residues mod 11: only 4 and 7 square to 5
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 1; x < 11; ++x)
    if (x * x % 11 == 5) roots.push_back(x);
  CHECK(roots == std::vector<std::uint64_t>{4, 7});

  CHECK(F.reduce(Laurent::v_power(2)) == mod11(5));
  CHECK(F.reduce(Laurent(1)) == mod11(1));
  CHECK(F.reduce(Laurent::v_power(-1)) == mod11(testing_support::slow_pow_mod(4, -1, 11)));
  CHECK(F.reduce(Laurent::v_power(-1)) == mod11(3));
  CHECK(F.q_residue() == 5);
  CHECK(ScalarDomain::prime_field(11, 4).q_residue() == 5);
  CHECK_THROWS_AS(ScalarDomain::prime_field(11, 1, 5), ValidationError);
  CHECK_THROWS_AS(ScalarDomain::prime_field(12, 4), ValidationError);
  CHECK_THROWS_AS(ScalarDomain::prime_field(11, 0), ValidationError);
}

TEST_CASE("validate_sqrt") {
  CHECK(validate_sqrt(11, 5, 4));
  CHECK(validate_sqrt(11, 5, 7));
  CHECK_FALSE(validate_sqrt(11, 5, 1));
  CHECK_FALSE(validate_sqrt(11, 0, 0));
  CHECK(validate_sqrt(7, 2, 3));
  CHECK_THROWS_AS(validate_sqrt(9, 4, 2), ValidationError);
}

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 3000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) trial = false;
    CHECK(is_prime(n) == trial);
  }
  CHECK(is_prime(1000000007ULL));
  CHECK_FALSE(is_prime(1000000007ULL * 3));
}

TEST_CASE("property: reduce is a ring homomorphism") {
  Gen g(303);
  const std::vector<ScalarDomain> doms = {ScalarDomain::prime_field(11, 4), ScalarDomain::prime_field(7, 3, 2),
                                          ScalarDomain::rational(3), ScalarDomain::rational(mpq_class(-2, 5)),
                                          ScalarDomain::formal()};
  for (const ScalarDomain& dom : doms)
    for (int t = 0; t < 150; ++t) {
      Laurent a = g.laurent(), b = g.laurent();
      CHECK(dom.reduce(a * b) == dom.reduce(a) * dom.reduce(b));
      CHECK(dom.reduce(a + b) == dom.reduce(a) + dom.reduce(b));
    }
}

TEST_CASE("prime-field reduction matches direct modular evaluation") {
  Gen g(404);
  ScalarDomain F = ScalarDomain::prime_field(13, 6);  // 36 = 10 mod 13
  for (int t = 0; t < 100; ++t) {
    Laurent a = g.laurent(5, 6);
    long acc = 0;
    for (const auto& [e, c] : a.terms()) {
      long cm = mpz_class(c % 13).get_si();
      acc += (cm + 13) % 13 * static_cast<long>(testing_support::slow_pow_mod(6, e, 13));
    }
    CHECK(F.reduce(a) == Scalar(Residue{static_cast<std::uint64_t>(acc % 13), 13}));
  }
}

TEST_CASE("rational domain") {
  ScalarDomain Q = ScalarDomain::rational(3);
  CHECK(Q.reduce(Laurent::v_power(-2) + Laurent(1)) == Scalar(mpq_class(10, 9)));
  CHECK(Q.parse("3/6") == Scalar(mpq_class(1, 2)));
  CHECK_THROWS_AS(Q.parse("1/0"), ValidationError);
  CHECK_THROWS_AS(ScalarDomain::rational(0), ValidationError);
  CHECK(Q.describe() == "rat:v=3");
}

TEST_CASE("scalar arithmetic and domain mismatch") {
  ScalarDomain F = ScalarDomain::prime_field(11, 4);
  Scalar a = F.from_int(7);
  CHECK(a * a.inverse() == F.one());
  CHECK(a.pow(-2) * a.pow(2) == F.one());
  CHECK(F.from_int(-1) == F.from_int(10));
  CHECK_FALSE(F.zero().is_invertible());
  CHECK_THROWS(F.zero().inverse());
  CHECK_THROWS_AS(a + Scalar(mpq_class(1)), DomainMismatch);
  CHECK_THROWS_AS(a * ScalarDomain::prime_field(7, 3).one(), DomainMismatch);
  CHECK_FALSE(ScalarDomain::prime_field(7, 3).contains(a));
  CHECK(F.describe() == "ell=11,v=4,q=5");
}

TEST_CASE("formal scalars specialize") {
  ScalarDomain formal = ScalarDomain::formal();
  Scalar x1 = formal.symbol(1), x2 = formal.symbol(2);
  Scalar f = formal.v_power(2) * x1 * x2.inverse() + formal.from_int(3);
  ScalarDomain F = ScalarDomain::prime_field(11, 4);
  std::vector<Scalar> at = {F.from_int(2), F.from_int(7)};
  // 5 * 2 * 7^-1 + 3 with 7^-1 = 8
  CHECK(F.specialize(std::get<MultiLaurent>(f.storage()), at) == F.from_int(5 * 2 * 8 + 3));
  CHECK_FALSE((x1 + x2).is_invertible());
  CHECK(formal.v_power(-3).is_invertible());
}

TEST_CASE("frac scaled") {
  FracScaled<Laurent> x{Laurent(5), Laurent(1)};
  CHECK(x.is_integral());
  FracScaled<Laurent> y{Laurent(5), Laurent(1) + v};
  CHECK_FALSE(y.is_integral());
}

TEST_CASE("rational scalars are stored in lowest terms") {
  CHECK(Scalar(mpq_class(2, 4)) == Scalar(mpq_class(1, 2)));
  CHECK(Scalar(mpq_class(-3, -6)).str() == "1/2");
}
