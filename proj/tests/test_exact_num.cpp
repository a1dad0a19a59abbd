#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "orbirr/errors.hpp"
#include "orbirr/exact_num.hpp"

using namespace orbirr;

namespace {

Cyclotomic z(std::uint32_t n, long k = 1) { return root_of_unity(n, k); }

Cyclotomic random_element(std::mt19937& rng, std::uint32_t n) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4), exp(0, static_cast<long>(n) - 1);
  Cyclotomic x;
  for (int t = 0; t < 3; ++t) x += Cyclotomic(make_rational(num(rng), den(rng))) * z(n, exp(rng));
  return x;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational(" -10 / 5 ")) == "-2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(is_integer(make_rational(8, 4)));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
  // Phi_105 is the first with a coefficient -2.
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(std::find(p105.begin(), p105.end(), BigInt(-2)) != p105.end());
  for (std::uint32_t n = 1; n <= 64; ++n) CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
}

TEST_CASE("roots of unity") {
  CHECK(z(1, 0) == Cyclotomic(1L));
  CHECK(z(2, 1) == Cyclotomic(-1L));
  CHECK(z(4) * z(4) == Cyclotomic(-1L));
  CHECK_THROWS_AS(root_of_unity(0, 1), InvalidInput);
  for (std::uint32_t n = 1; n <= 64; ++n) {
    CHECK(z(n).pow(n) == Cyclotomic(1L));
    Cyclotomic phi_at_zeta;
    const auto& phi = cyclotomic_polynomial(n);
    for (std::size_t i = 0; i < phi.size(); ++i) phi_at_zeta += Cyclotomic(BigRational(phi[i])) * z(n).pow(i);
    CHECK(phi_at_zeta.is_zero());
    CHECK(root_of_unity_order(z(n)) == n);
    CHECK(root_of_unity_order(z(n, 2)) == n / std::gcd(n, 2u));
  }
  CHECK(root_of_unity_order(Cyclotomic(2L)) == 0);
  CHECK(z(12, 5).times_root_of_unity(8, 3) == z(12, 5) * z(8, 3));
}

TEST_CASE("field operations") {
  const Cyclotomic x = Cyclotomic(1L) - z(3);
  CHECK(x * x.inverse() == Cyclotomic(1L));
  CHECK((Cyclotomic(1L) - z(5)) * (Cyclotomic(1L) - z(5, 2)) * (Cyclotomic(1L) - z(5, 3)) *
            (Cyclotomic(1L) - z(5, 4)) ==
        Cyclotomic(5L));
  CHECK(z(6) + z(6, 5) == Cyclotomic(1L));
  CHECK_THROWS_AS(Cyclotomic().inverse(), InvalidInput);
  CHECK_THROWS_AS(Cyclotomic(1L) / Cyclotomic(), InvalidInput);
  // Equality across conductors.
  CHECK(z(4, 2) == Cyclotomic(-1L));
  CHECK(z(6, 2) == z(3));
  CHECK(z(12, 3) == z(4));
  CHECK(z(3) + z(4) - z(4) == z(3));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20261015);
  const std::uint32_t conductors[] = {1, 3, 4, 5, 8, 9, 12, 15};
  for (int trial = 0; trial < 60; ++trial) {
    const Cyclotomic a = random_element(rng, conductors[trial % 8]);
    const Cyclotomic b = random_element(rng, conductors[(trial + 3) % 8]);
    const Cyclotomic c = random_element(rng, conductors[(trial + 5) % 8]);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclotomic());
    CHECK(a + (-a) == Cyclotomic());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    CHECK(a.conjugate().conjugate() == a);
    CHECK(a.lift_to(a.conductor() * 7) == a);
  }
}

TEST_CASE("conjugation") {
  CHECK(Cyclotomic(make_rational(3, 7)).conjugate() == Cyclotomic(make_rational(3, 7)));
  CHECK(z(3).conjugate() == Cyclotomic(-1L) - z(3));
  CHECK(z(3).conjugate().to_string() == "-z3 - 1");
}

TEST_CASE("complex approximation") {
  auto near = [](std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-12; };
  CHECK(near(Cyclotomic(1L).to_complex(), {1.0, 0.0}));
  CHECK(near(z(4).to_complex(), {0.0, 1.0}));
  CHECK(near(z(3).to_complex(), {-0.5, std::sqrt(3.0) / 2}));
}

TEST_CASE("text round trip") {
  CHECK(Cyclotomic::parse("3/2") == Cyclotomic(make_rational(3, 2)));
  CHECK(Cyclotomic::parse("z8^3 - 1/2*z8 + 1") == z(8, 3) - Cyclotomic(make_rational(1, 2)) * z(8) + Cyclotomic(1L));
  CHECK(Cyclotomic::parse(" z 8 ^ 3-1/2 z8+1 ") == Cyclotomic::parse("z8^3 - 1/2*z8 + 1"));
  CHECK(Cyclotomic::parse("z4^-1") == -z(4));
  CHECK(Cyclotomic::parse("z5^5") == Cyclotomic(1L));
  CHECK(Cyclotomic::parse("0").is_zero());
  CHECK(Cyclotomic(make_rational(-7, 3)).to_string() == "-7/3");
  CHECK_THROWS_AS(Cyclotomic::parse("z0"), InvalidInput);
  CHECK_THROWS_AS(Cyclotomic::parse("1 +"), InvalidInput);
  CHECK_THROWS_AS(Cyclotomic::parse("y3"), InvalidInput);

  std::mt19937 rng(7);
  for (std::uint32_t n : {1u, 2u, 3u, 5u, 7u, 8u, 12u, 16u, 24u, 60u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Cyclotomic x = random_element(rng, n);
      CHECK(Cyclotomic::parse(x.to_string()) == x);
    }
  }
}

TEST_CASE("conductor cap") {
  CHECK(conductor_cap() == 256);
  CHECK_THROWS_AS(root_of_unity(257, 1), CapExceeded);
  set_conductor_cap(512);
  CHECK_NOTHROW(root_of_unity(257, 1));
  set_conductor_cap(256);
  CHECK_THROWS_AS(z(128) * z(3), CapExceeded);
}

TEST_CASE("total order") {
  CHECK(Cyclotomic::compare(Cyclotomic(1L), Cyclotomic(2L)) < 0);
  CHECK(Cyclotomic::compare(z(3), z(6, 2)) == 0);
  CHECK(Cyclotomic::compare(z(4), Cyclotomic(1L)) != 0);
}
