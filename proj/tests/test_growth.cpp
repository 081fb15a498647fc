#include "coxgrowth/growth.hpp"

#include "group_oracle.hpp"
#include "word_oracle.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

using namespace coxgrowth;

namespace {

IntPoly core_of(const IntPoly& p) { return normalize_primitive(strip_cyclotomic(p).core); }

bool rate_near(const RootInterval& r, double expected, double tol = 1e-6) {
  return std::abs(r.approx() - expected) <= tol && r.width() <= Rational(1, 1000000);
}

std::size_t oracle_order(const SphericalType& t) {
  switch (t.family) {
    case Family::A: return oracle::order_A(t.rank);
    case Family::B: return oracle::order_B(t.rank);
    case Family::D: return oracle::order_D(t.rank);
    case Family::I2: return oracle::order_I2(t.dihedral_order);
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
    case Family::F4: return 1152;
    case Family::H3: return 120;
    case Family::H4: return 14400;
  }
  return 0;
}

}  // namespace

TEST_CASE("rational functions stay reduced") {
  RationalFunction f(IntPoly{-2, 0, 2}, IntPoly{2, -2});  // 2(t^2 - 1) / (-2(t - 1))
  CHECK(f.numerator() == IntPoly{-1, -1});
  CHECK(f.denominator() == IntPoly{1});
  RationalFunction g(IntPoly{1}, IntPoly{-1, 0, 1});
  CHECK(g.denominator().leading() > 0);
  CHECK((g + f) - f == g);
  CHECK((g * f) / f == g);
  CHECK(g.evaluate(Rational(2)) == Rational(1, 3));
  CHECK_THROWS(RationalFunction(IntPoly{1}, IntPoly{}));
  CHECK(RationalFunction(IntPoly{}, IntPoly{5, 1}).denominator() == IntPoly{1});
  // f(1/t) for 1/(1 - t) is t/(t - 1).
  RationalFunction h(IntPoly{1}, IntPoly{1, -1});
  CHECK(h.inverted_argument() == RationalFunction(IntPoly{0, 1}, IntPoly{-1, 1}));
}

TEST_CASE("solomon polynomials") {
  auto i2 = finite_type_recognize(parse_coxeter_symbol("[7]"));
  CHECK(solomon_poly(*i2) == bracket(2) * bracket(7));
  CoxeterDiagram a1(1);
  CHECK(solomon_poly(*finite_type_recognize(a1)) == bracket(2));
  auto h3 = *finite_type_recognize(parse_coxeter_symbol("[5,3]"));
  const IntPoly p = solomon_poly(h3);
  CHECK(p == bracket(2) * bracket(6) * bracket(10));
  CHECK(p.evaluate(Integer(1)) == 120);
}

TEST_CASE("steinberg growth of hyperbolic triangles and tetrahedra") {
  const IntPoly target38 = parse_poly("1,0,0,-1,0,-1,0,-1,0,0,1");
  auto f38 = steinberg_growth(parse_coxeter_symbol("[3,8]"));
  CHECK(try_divide(f38.denominator(), target38).has_value());
  CHECK(series_coefficients(f38, 1)[0] == 1);

  auto f353 = steinberg_growth(parse_coxeter_symbol("[3,5,3]"));
  CHECK(core_of(f353.denominator()) == parse_poly("1,-1,0,0,-1,1,-1,0,0,-1,1"));

  auto f435 = steinberg_growth(parse_coxeter_symbol("[4,3,5]"));
  CHECK(core_of(f435.denominator()) == parse_poly("1,-1,1,-2,1,-2,1,-1,1"));

  CHECK(f38 == polygon_growth({2, 3, 8}));
}

TEST_CASE("steinberg agrees with the polygon formula") {
  std::mt19937 rng(7);
  std::size_t checked = 0;
  for (const auto& angles : hyperbolic_polygons(6, 9)) {
    std::vector<unsigned> order = angles;
    std::shuffle(order.begin(), order.end(), rng);
    const auto f = steinberg_growth(polygon_diagram(order));
    REQUIRE_MESSAGE(f == polygon_growth(angles), "polygon size " << angles.size());
    CHECK(reciprocity_type(f.denominator()) == Reciprocity::reciprocal);
    ++checked;
  }
  CHECK(checked > 2000);
}

TEST_CASE("polygon delta") {
  for (std::size_t k = 1; k <= 8; ++k) {
    std::vector<unsigned> twos(k, 2);
    const IntPoly expected =
        pow(bracket(2), static_cast<unsigned>(k - 1)) * IntPoly{1, -(static_cast<long>(k) - 2), 1};
    CHECK(polygon_delta(twos) == expected);
  }
  CHECK(polygon_delta({3}) == bracket(4));
  const IntPoly d237 = polygon_delta({2, 3, 7});
  CHECK(d237.degree() == 10);
  CHECK(rate_near(isolate_largest_real_root(d237, Rational(1, 1000000000)), 1.176281));
  CHECK_THROWS(polygon_delta({1, 3}));
  CHECK_THROWS(polygon_growth({3, 3, 3}));
  CHECK_THROWS(polygon_growth({2, 3}));
}

TEST_CASE("delta recursions and symmetry") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> len(1, 6);
  std::uniform_int_distribution<unsigned> par(2, 12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<unsigned> p(len(rng));
    for (auto& x : p) x = par(rng);
    p.back() = std::max(p.back(), 3U);
    const IntPoly d = polygon_delta(p);
    auto with_last = [&](unsigned v) {
      auto q = p;
      q.back() = v;
      return polygon_delta(q);
    };
    if (p.back() >= 4) {
      CHECK(d == IntPoly{1, 1} * with_last(p.back() - 1) - IntPoly{0, 1} * with_last(p.back() - 2));
    } else if (p.size() >= 2) {
      auto shorter = p;
      shorter.pop_back();
      CHECK(d == IntPoly{1, 1} * with_last(2) - IntPoly{0, 1} * polygon_delta(shorter));
    }
    auto shuffled = p;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(polygon_delta(shuffled) == d);
  }
}

TEST_CASE("finite groups have polynomial growth equal to the group order") {
  std::mt19937 rng(3);
  const std::vector<Weight> weights{Weight(2), Weight(2), Weight(2), Weight(3), Weight(3),
                                    Weight(4), Weight(5), Weight(6), Weight(8)};
  std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
  std::size_t finite = 0;
  for (int trial = 0; trial < 3000 && finite < 150; ++trial) {
    const std::size_t n = 1 + trial % 6;
    CoxeterDiagram d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d.set_weight(i, j, weights[pick(rng)]);
    auto types = finite_type_recognize(d);
    if (!types) continue;
    ++finite;
    std::size_t order = 1;
    for (const auto& t : *types) order *= oracle_order(t);
    const auto f = steinberg_growth(d);
    CHECK(f.denominator() == IntPoly{1});
    CHECK(f.numerator().evaluate(Integer(1)) == Integer(static_cast<unsigned long>(order)));
  }
  CHECK(finite >= 100);
}

TEST_CASE("series against breadth-first word counts") {
  for (const auto& d : {parse_coxeter_symbol("[3,7]"), polygon_diagram({2, 2, 2, 2, 2})}) {
    const auto f = steinberg_growth(d);
    const auto series = series_coefficients(f, 10);
    const auto words = oracle::sphere_sizes(d, 10);
    REQUIRE(words.size() == 10);
    for (std::size_t k = 0; k < 10; ++k) CHECK(series[k] == words[k]);
  }
  CHECK(series_coefficients(steinberg_growth(parse_coxeter_symbol("[3,7]")), 2)[1] == 3);
}

TEST_CASE("reciprocity") {
  CHECK(reciprocity_check(steinberg_growth(parse_coxeter_symbol("[3,8]")), 2));
  CHECK_FALSE(reciprocity_check(steinberg_growth(parse_coxeter_symbol("[3,8]")), 3));
  CHECK(reciprocity_check(steinberg_growth(parse_coxeter_symbol("[3,5,3]")), 3));
  CHECK_FALSE(reciprocity_check(steinberg_growth(parse_coxeter_symbol("[3,5,3]")), 2));
  // Finite group: f(1/t) t^deg is the reversed numerator, which is the numerator itself.
  const auto h3 = steinberg_growth(parse_coxeter_symbol("[5,3]"));
  const IntPoly& p = h3.numerator();
  CHECK(h3.inverted_argument() == RationalFunction(p.reversed(), IntPoly::monomial(static_cast<std::size_t>(p.degree()))));
  CHECK(p.reversed() == p);
}

TEST_CASE("growth rates") {
  const Rational w(1, 1000000000);
  CHECK(rate_near(growth_rate(polygon_growth({2, 3, 7}), w), 1.176281));
  CHECK(rate_near(growth_rate(steinberg_growth(parse_coxeter_symbol("[3,7]")), w), 1.176281));
  CHECK(rate_near(growth_rate(steinberg_growth(parse_coxeter_symbol("[3,8]")), w), 1.230391));
  CHECK(rate_near(growth_rate(steinberg_growth(parse_coxeter_symbol("[3,5,3]")), w), 1.350980));
  CHECK(rate_near(growth_rate(steinberg_growth(parse_coxeter_symbol("[4,3,5]")), w), 1.359999));
  CHECK(rate_near(growth_rate(steinberg_growth(parse_coxeter_symbol("[8,3,4,3,8]")), w), 1.902812));

  // Right-angled pentagon: largest root of t^2 - 3t + 1.
  auto pent = growth_rate(polygon_growth({2, 2, 2, 2, 2}), w);
  CHECK(std::abs(pent.approx() - (3 + std::sqrt(5.0)) / 2) < 1e-8);

  CHECK_THROWS_AS(growth_rate(steinberg_growth(parse_coxeter_symbol("[5,3]"))), NotExponentialGrowth);
  CHECK_THROWS_AS(growth_rate(steinberg_growth(parse_coxeter_symbol("[(3^3)]"))), NotExponentialGrowth);
  CHECK_THROWS_AS(growth_rate(steinberg_growth(parse_coxeter_symbol("[inf]"))), NotExponentialGrowth);
}

TEST_CASE("monotonicity") {
  auto a = parse_coxeter_symbol("[3,8]");
  auto b = parse_coxeter_symbol("[3,inf]");
  auto c = parse_coxeter_symbol("[(3^2,inf)]");
  CHECK(monotonicity_check(a, b).pass);
  CHECK(monotonicity_check(b, c).pass);
  CHECK(monotonicity_check(parse_coxeter_symbol("[3,7]"), a).pass);
  CHECK_THROWS(monotonicity_check(b, a));
  CHECK_THROWS(monotonicity_check(parse_coxeter_symbol("[4,5]"), parse_coxeter_symbol("[3,8]")));
}

TEST_CASE("help functions") {
  for (unsigned k = 2; k <= 20; ++k) {
    const auto h = help_function(k);
    for (int i = 1; i <= 10; ++i) {
      const Rational v = h.evaluate(Rational(i, 10));
      CHECK(v > 0);
      CHECK(v < 1);
    }
  }
  CHECK(positive_on_unit_interval(help_function(3)));
  CHECK_FALSE(positive_on_unit_interval(RationalFunction(IntPoly{-1, 2}, IntPoly{1})));
}

TEST_CASE("second smallest polygon growth rate") {
  const auto rep = verify_second_minimal_polygon(5, 9, Rational(1, 1000000000), 4);
  CHECK(rep.f_roots_in_unit_interval == 0);
  CHECK(rate_near(rep.tau_38, 1.230391));
  CHECK_FALSE(rep.triangles.empty());
  CHECK_FALSE(rep.quadrilaterals.empty());
  CHECK_FALSE(rep.larger.empty());
  for (const auto& s : rep.certificates) CHECK_MESSAGE(s.pass, s.name);
  auto find = [&](const std::vector<unsigned>& angles) -> const PolygonComparison* {
    for (const auto* group : {&rep.triangles, &rep.quadrilaterals, &rep.larger})
      for (const auto& c : *group)
        if (c.angles == angles) return &c;
    return nullptr;
  };
  REQUIRE(find({2, 4, 5}));
  CHECK(find({2, 4, 5})->versus_minimum == 1);
  REQUIRE(find({2, 2, 2, 3}));
  CHECK(find({2, 2, 2, 3})->versus_minimum == 1);
  CHECK(find({2, 3, 7})->versus_minimum == -1);
  CHECK(find({2, 3, 8})->versus_minimum == 0);
  CHECK(rep.pass);
  CHECK_THROWS(verify_second_minimal_polygon(4, 9));
}

TEST_CASE("growth chain") {
  const auto chain = verify_growth_chain({"[3,8]", "[3,inf]", "[(3^2,inf)]"});
  CHECK(chain.pass);
  REQUIRE(chain.links.size() == 3);
  CHECK(chain.links[0].versus_next == Domination::less);
  CHECK(chain.links[1].versus_next == Domination::less);
  CHECK(std::abs(chain.links[1].rate.approx() - 1.3247180) < 1e-6);  // real root of t^3 - t - 1
  CHECK(std::abs(chain.links[2].rate.approx() - (1 + std::sqrt(5.0)) / 2) < 1e-8);
  CHECK_FALSE(verify_growth_chain({"[3,inf]", "[3,8]"}).pass);
}
