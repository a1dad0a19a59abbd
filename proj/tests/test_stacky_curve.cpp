#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "orbirr/errors.hpp"
#include "orbirr/inertia.hpp"
#include "orbirr/stacky_curve.hpp"

using namespace orbirr;

namespace {

StackyCurve curve(long genus, std::vector<long> orders) {
  StackyCurve c;
  c.genus = genus;
  for (std::size_t j = 0; j < orders.size(); ++j) c.points.push_back({"x" + std::to_string(j + 1), orders[j]});
  return c;
}

const StackyCurve klein = curve(0, {2, 3, 7});

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(curve(-1, {}).validate(), InvalidInput);
  CHECK_THROWS_AS(curve(0, {1}).validate(), InvalidInput);
  StackyCurve dup{0, {{"p", 2}, {"p", 3}}};
  CHECK_THROWS_AS(dup.validate(), InvalidInput);
  CHECK_THROWS_AS(curve(0, {300}).validate(), CapExceeded);
  CHECK_THROWS_AS(QDivisor(klein, 0, {{"nope", 1}}), InvalidInput);
}

TEST_CASE("divisors") {
  const QDivisor d(klein, 0, {{"x1", 3}, {"x2", -1}});
  CHECK(d.free_degree() == 0);  // 3/2 -> 1 + 1/2, -1/3 -> -1 + 2/3
  CHECK(d.weights() == std::vector<long>{1, 2, 0});
  CHECK(d.degree(klein) == make_rational(7, 6));
  CHECK(d.floor_degree() == 0);
  CHECK(d.shifted(klein, 2).free_degree() == 2);

  const QDivisor k = canonical_divisor(klein);
  CHECK(k.free_degree() == -2);
  CHECK(k.weights() == std::vector<long>{1, 2, 6});
  CHECK(k.degree(klein) == make_rational(1, 42));
  CHECK(k.degree(klein) == -tangent_degree(klein));
  CHECK(serre_dual(klein, k) == QDivisor(klein));
  CHECK(serre_dual(klein, serre_dual(klein, d)) == d);
}

TEST_CASE("orbifold Euler characteristics") {
  CHECK(tangent_degree(klein) == make_rational(-1, 42));
  CHECK(tangent_degree(curve(0, {2, 2})) == 1);
  CHECK(euler_orb(klein) == make_rational(-1, 42));
  CHECK(euler_phy(klein) == 11);
  CHECK(gauss_bonnet_coarse(klein) == 2);
  CHECK(gauss_bonnet_coarse(curve(1, {3, 5})) == 0);
  CHECK(gauss_bonnet_coarse(curve(2, {})) == -2);
}

TEST_CASE("sector contributions") {
  const StackyCurve c = curve(0, {2});
  const auto sectors = curve_sectors(c);
  CHECK(sector_contribution(sectors[1], c, QDivisor(c, 0, {{"x1", 1}})) == Cyclotomic(make_rational(-1, 4)));
  CHECK_THROWS_AS(sector_contribution(sectors[0], c, QDivisor(c)), InvalidInput);

  const StackyCurve c3 = curve(0, {3});
  Cyclotomic sum;
  for (const auto& s : curve_sectors(c3)) {
    if (s.kind == CurveSector::Kind::twisted) sum += sector_contribution(s, c3, QDivisor(c3));
  }
  CHECK(sum == Cyclotomic(make_rational(1, 3)));

  const auto terms = hrr_terms(klein, curve_sectors(klein), canonical_divisor(klein));
  CHECK(terms.twisted.size() == 9);
  CHECK(terms.twisted.front().first == "x1[k=1]");
  CHECK(terms.total == -1);
}

TEST_CASE("e-sum") {
  for (std::uint32_t n = 2; n <= 50; ++n) {
    Cyclotomic sum;
    for (long k = 1; k < static_cast<long>(n); ++k) sum += (Cyclotomic(1L) - root_of_unity(n, -k)).inverse();
    CHECK(sum == Cyclotomic(make_rational(static_cast<long>(n) - 1, 2)));
  }
}

TEST_CASE("Riemann-Roch against the coarse floor") {
  CHECK(hrr_integral(klein, QDivisor(klein)) == 1);
  CHECK(hrr_integral(klein, canonical_divisor(klein)) == -1);
  for (long g = 0; g <= 2; ++g) {
    CHECK(hrr_integral(curve(g, {4, 6}), QDivisor(curve(g, {4, 6}))) == 1 - g);
  }

  std::size_t instances = 0;
  const std::vector<std::vector<long>> shapes{{}, {2}, {5}, {2, 3}, {4, 4}, {2, 3, 7}, {3, 6, 8}};
  for (long g = 0; g <= 2; ++g) {
    for (const auto& orders : shapes) {
      const StackyCurve c = curve(g, orders);
      const auto sectors = curve_sectors(c);
      std::vector<long> w(orders.size(), 0);
      while (true) {
        for (long d = -3; d <= 3; ++d) {
          // Raw weights may exceed n; shift them to exercise canonicalization.
          std::map<std::string, long> raw;
          std::vector<long> raw_w;
          for (std::size_t j = 0; j < orders.size(); ++j) {
            const long a = w[j] + (j % 2 == 0 ? orders[j] : -orders[j]);
            raw["x" + std::to_string(j + 1)] = a;
            raw_w.push_back(a);
          }
          const QDivisor div(c, d, raw);
          const long expected = 1 - g + oracle::coarse_floor_degree(d, raw_w, orders);
          CHECK(euler_char_oracle(c, div) == expected);
          CHECK(hrr_integral(c, sectors, div) == expected);
          ++instances;
        }
        std::size_t j = 0;
        while (j < w.size() && ++w[j] == orders[j]) w[j++] = 0;
        if (j == w.size()) break;
      }
    }
  }
  CHECK(instances > 1000);
}

TEST_CASE("quotients by group actions") {
  CHECK(from_group_action(0, {2, 2}, 2).cover_genus == 0);
  const auto k = from_group_action(0, {2, 3, 7}, 168);
  CHECK(k.cover_genus == 3);
  CHECK(k.curve.points.size() == 3);
  CHECK(tangent_degree(k.curve) * 168 == 2 - 2 * k.cover_genus);
  CHECK_THROWS_AS(from_group_action(0, {4}, 6), InvalidInput);
  CHECK_THROWS_AS(from_group_action(0, {2}, 2), InvalidInput);
  CHECK_THROWS_AS(from_group_action(-1, {}, 1), InvalidInput);
}
