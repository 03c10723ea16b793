#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wjf/forms.hpp"
#include "wjf/series.hpp"

using namespace wjf;

namespace {

Rational frac(long long num, long long den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

// Rank-one series from (n24, r2, coeff) rows.
JacobiSeries series1(long long weight2, long long m2, long long prec24,
                     const std::vector<std::array<long long, 3>>& rows) {
  std::map<ExponentKey, Rational> terms;
  for (const auto& row : rows) terms[{row[0], row[1], 0}] = frac(row[2]);
  return {weight2, RankOneIndex{m2}, prec24, std::move(terms)};
}

const JacobiSeries kOne{0, RankOneIndex{0}, kExactPrec,
                        {{ExponentKey{0, 0, 0}, Rational(1)}}};

}  // namespace

TEST_CASE("constructor canonicalizes terms") {
  std::map<ExponentKey, Rational> terms;
  terms[{0, 0, 0}] = frac(0);
  terms[{24, 0, 0}] = frac(5);
  terms[{48, 0, 0}] = frac(7);
  const JacobiSeries f(0, RankOneIndex{0}, 48, std::move(terms));

  CHECK(f.terms().size() == 1);
  CHECK(f.coeff(24, 0) == frac(5));
  CHECK(f.coeff(0, 0) == frac(0));
  CHECK(f.valuation24() == 24);

  std::map<ExponentKey, Rational> bad;
  bad[{0, 0, 2}] = frac(1);
  CHECK_THROWS_AS(JacobiSeries(0, RankOneIndex{0}, 24, std::move(bad)),
                  std::invalid_argument);
}

TEST_CASE("valuation") {
  const JacobiSeries th = theta(100);
  CHECK(th.valuation24() == 3);
  REQUIRE(valuation(th).has_value());
  CHECK(*valuation(th) == frac(1, 8));

  const JacobiSeries zero(0, RankOneIndex{0}, 24, {});
  CHECK(zero.is_zero());
  CHECK(!valuation(zero).has_value());
  CHECK(zero.valuation24() == 0);
}

TEST_CASE("coeff respects the precision guarantee") {
  const JacobiSeries th = theta(10);
  CHECK(th.coeff(3, 1) == frac(1));
  CHECK(th.coeff(3, -1) == frac(-1));
  CHECK(th.coeff(9, 5) == frac(0));
  CHECK_THROWS_AS(th.coeff(10, 0), std::out_of_range);
}

TEST_CASE("sum and difference require matching metadata") {
  const JacobiSeries f = series1(0, 2, 48, {{0, 0, 1}});
  const JacobiSeries g = series1(0, 2, 72, {{0, 0, 3}, {24, 2, 1}});
  const JacobiSeries sum = f + g;
  CHECK(sum.prec24() == 48);
  CHECK(sum.coeff(0, 0) == frac(4));
  CHECK(sum.coeff(24, 2) == frac(1));
  CHECK((f - f).is_zero());

  const JacobiSeries wrong_weight = series1(2, 2, 48, {{0, 0, 1}});
  const JacobiSeries wrong_index = series1(0, 4, 48, {{0, 0, 1}});
  CHECK_THROWS_AS(f + wrong_weight, std::invalid_argument);
  CHECK_THROWS_AS(f - wrong_index, std::invalid_argument);
  CHECK_THROWS_AS(f + embed(f, Direction::z), std::invalid_argument);
}

TEST_CASE("scalar multiple keeps metadata") {
  const JacobiSeries th = theta(50);
  const JacobiSeries g = frac(-3, 2) * th;
  CHECK(g.weight2() == th.weight2());
  CHECK(index_equal(g.index(), th.index()));
  CHECK(g.prec24() == th.prec24());
  CHECK(g.coeff(3, 1) == frac(-3, 2));
  CHECK((frac(0) * th).is_zero());
}

TEST_CASE("theta squared: lowest slice") {
  const JacobiSeries sq = theta(100) * theta(100);
  CHECK(sq.weight2() == 2);
  CHECK(index_equal(sq.index(), SeriesIndex{RankOneIndex{2}}));
  CHECK(sq.valuation24() == 6);
  CHECK(sq.coeff(6, 2) == frac(1));
  CHECK(sq.coeff(6, 0) == frac(-2));
  CHECK(sq.coeff(6, -2) == frac(1));
}

TEST_CASE("product precision rule") {
  // f known below 48 with valuation 24, g known below 72 with valuation 0:
  // the product is only guaranteed below min(48 + 0, 72 + 24) = 48.
  const JacobiSeries f = series1(0, 0, 48, {{24, 0, 1}});
  const JacobiSeries g = series1(0, 0, 72, {{0, 0, 1}, {48, 0, 5}});
  CHECK((f * g).prec24() == 48);
  CHECK((g * f).prec24() == 48);
  CHECK((f * g).coeff(24, 0) == frac(1));

  // Exact precision saturates instead of overflowing.
  CHECK((kOne * kOne).prec24() == kExactPrec);
  CHECK((f * kOne).prec24() == f.prec24());
}

TEST_CASE("pow") {
  const JacobiSeries th = theta(80);
  const JacobiSeries p0 = pow(th, 0);
  CHECK(p0.weight2() == 0);
  CHECK(p0.prec24() == kExactPrec);
  CHECK(index_equal(p0.index(), SeriesIndex{RankOneIndex{0}}));
  CHECK(p0.coeff(0, 0) == frac(1));
  CHECK(p0.terms().size() == 1);

  const JacobiSeries p3 = pow(th, 3);
  const JacobiSeries ref = th * th * th;
  CHECK(p3.weight2() == 3);
  CHECK(index_equal(p3.index(), SeriesIndex{RankOneIndex{3}}));
  CHECK(equals_to_precision(p3, ref, ref.prec24()));

  CHECK_THROWS_AS(pow(th, -1), std::invalid_argument);
}

TEST_CASE("truncate only lowers the guarantee") {
  const JacobiSeries th = theta(100);
  const JacobiSeries cut = truncate(th, 10);
  CHECK(cut.prec24() == 10);
  CHECK(cut.terms().size() == 2);
  CHECK_THROWS_AS(truncate(cut, 50), std::invalid_argument);
}

TEST_CASE("equals_to_precision") {
  const JacobiSeries a = theta(100);
  const JacobiSeries b = truncate(theta(200), 60);
  CHECK(equals_to_precision(a, b, 60));
  CHECK_THROWS_AS(equals_to_precision(a, b, 61), std::invalid_argument);

  // Differ exactly at n24 = 27 (the second theta slice).
  const JacobiSeries c = series1(1, 1, 100, {{3, 1, 1}, {3, -1, -1}});
  CHECK(equals_to_precision(a, c, 27));
  CHECK(!equals_to_precision(a, c, 28));
}

TEST_CASE("invert_unit") {
  const JacobiSeries eta = eta_power(1, 97);
  const JacobiSeries inv = invert_unit(eta);
  CHECK(inv.prec24() == 97 - 2 * eta.valuation24());
  CHECK(inv.valuation24() == -1);
  const JacobiSeries prod = eta * inv;
  CHECK(equals_to_precision(prod, kOne, prod.prec24()));

  const JacobiSeries two_led = series1(0, 2, 48, {{0, -1, 1}, {0, 1, 1}});
  CHECK_THROWS_AS(invert_unit(two_led), std::domain_error);
  CHECK_THROWS_AS(invert_unit(series1(0, 0, 24, {})), std::domain_error);
}

TEST_CASE("divide_exact round trip") {
  const JacobiSeries th = theta(120);
  const JacobiSeries ph = phi_m1_half(120);
  const JacobiSeries prod = th * ph;
  const JacobiSeries back = divide_exact(prod, th);
  CHECK(back.weight2() == ph.weight2());
  CHECK(index_equal(back.index(), ph.index()));
  CHECK(equals_to_precision(back, ph, back.prec24()));

  // 1 / (z^1/2 + z^-1/2) has no Laurent-polynomial slice solution.
  const JacobiSeries sym = series1(0, 2, 48, {{0, -1, 1}, {0, 1, 1}});
  CHECK_THROWS_AS(divide_exact(kOne, sym), std::domain_error);
  CHECK_THROWS_AS(divide_exact(th, series1(0, 0, 24, {})),
                  std::invalid_argument);
}

TEST_CASE("divide_exact reports unbounded precision") {
  // Dividing two exact-precision series would promise exactness of an
  // infinite expansion; the operands must be truncated first.
  CHECK_THROWS_AS(divide_exact(kOne, series1(0, 0, kExactPrec, {{0, 0, 2}})),
                  std::invalid_argument);
}

TEST_CASE("derivatives satisfy the Leibniz rule") {
  const JacobiSeries th = theta(100);
  const JacobiSeries lhs = dz(th * th);
  const JacobiSeries rhs = dz(th) * th + th * dz(th);
  CHECK(lhs.weight2() == th.weight2() * 2 + 2);
  CHECK(equals_to_precision(lhs, rhs, lhs.prec24()));
  CHECK(dz(th).coeff(3, 1) == frac(1, 2));

  CHECK_THROWS_AS(dw(th), std::invalid_argument);
  const JacobiSeries fw = embed(th, Direction::w);
  CHECK(equals_to_precision(dw(fw), embed(dz(th), Direction::w),
                            fw.prec24()));
  CHECK(dw(embed(th, Direction::z)).is_zero());
}

TEST_CASE("substitute: unimodular maps and their inverses") {
  const JacobiSeries f = theta_block(1, 2, 3, 49);

  SUBCASE("involutions and the three-cycle") {
    const JacobiSeries g = substitute(substitute(f, map_negate_w), map_negate_w);
    CHECK(index_equal(g.index(), f.index()));
    CHECK(equals_to_precision(g, f, f.prec24()));

    const JacobiSeries h = substitute(substitute(f, map_zw_minus_w), map_zw_minus_w);
    CHECK(equals_to_precision(h, f, f.prec24()));

    JacobiSeries cyc = f;
    for (int i = 0; i < 3; ++i) cyc = substitute(cyc, map_zw_minus_z);
    CHECK(index_equal(cyc.index(), f.index()));
    CHECK(equals_to_precision(cyc, f, f.prec24()));
  }

  SUBCASE("triple action matches the documentation") {
    auto triple = [](const JacobiSeries& s) {
      const auto& g = std::get<GramMatrix>(s.index());
      return std::array<long long, 3>{g.a(), g.b(), g.c()};
    };
    CHECK(triple(substitute(f, map_zw_minus_w)) ==
          std::array<long long, 3>{2, 1, 3});
    CHECK(triple(substitute(f, map_w_minus_zw)) ==
          std::array<long long, 3>{2, 3, 1});
    CHECK(triple(substitute(f, map_zw_minus_z)) ==
          std::array<long long, 3>{3, 1, 2});
    CHECK(triple(substitute(f, map_swap)) ==
          std::array<long long, 3>{3, 2, 1});
  }

  SUBCASE("rejects rank-one series and non-unimodular maps") {
    CHECK_THROWS_AS(substitute(theta(20), map_swap), std::invalid_argument);
    CHECK_THROWS_AS(substitute(f, UnimodularMap{2, 0, 0, 1}),
                    std::invalid_argument);
  }
}

TEST_CASE("scale_z") {
  const JacobiSeries th = theta(100);
  const JacobiSeries s = scale_z(th, 2);
  CHECK(index_equal(s.index(), SeriesIndex{RankOneIndex{4}}));
  CHECK(s.coeff(3, 2) == frac(1));
  CHECK(s.coeff(3, -2) == frac(-1));
  CHECK(s.coeff(3, 1) == frac(0));
  CHECK_THROWS_AS(scale_z(embed(th, Direction::z), 2), std::invalid_argument);
  CHECK_THROWS_AS(scale_z(th, 0), std::invalid_argument);
}

TEST_CASE("embed maps exponents and Gram matrices") {
  const JacobiSeries th = theta(30);

  const JacobiSeries fz = embed(th, Direction::z);
  CHECK(std::get<GramMatrix>(fz.index()) == GramMatrix{1, 0, 0});
  CHECK(fz.coeff(3, 1, 0) == frac(1));

  const JacobiSeries fw = embed(th, Direction::w);
  CHECK(std::get<GramMatrix>(fw.index()) == GramMatrix{0, 0, 1});
  CHECK(fw.coeff(3, 0, 1) == frac(1));

  const JacobiSeries fzw = embed(th, Direction::zw);
  CHECK(std::get<GramMatrix>(fzw.index()) == GramMatrix{1, 1, 1});
  CHECK(fzw.coeff(3, 1, 1) == frac(1));
  CHECK(fzw.coeff(3, 1, 0) == frac(0));

  CHECK_THROWS_AS(embed(fz, Direction::z), std::invalid_argument);
}

TEST_CASE("embedding is multiplicative") {
  const JacobiSeries th = theta(60);
  const JacobiSeries eta3 = eta_power(3, 60);
  for (const Direction d : {Direction::z, Direction::w, Direction::zw}) {
    const JacobiSeries lhs = embed(th * eta3, d);
    const JacobiSeries rhs = embed(th, d) * embed(eta3, d);
    CHECK(index_equal(lhs.index(), rhs.index()));
    CHECK(equals_to_precision(lhs, rhs, lhs.prec24()));
  }
}

TEST_CASE("pullbacks are ring homomorphisms") {
  const JacobiSeries f = Phi_m2_A2(49);
  const JacobiSeries g = Phi_m3_A2(49);

  SUBCASE("w = 0") {
    const JacobiSeries lhs = pullback_q(f * g);
    const JacobiSeries rhs = pullback_q(f) * pullback_q(g);
    CHECK(index_equal(lhs.index(), rhs.index()));
    CHECK(equals_to_precision(lhs, rhs, lhs.prec24()));
    CHECK(std::get<RankOneIndex>(pullback_q(f).index()).m2 == 2);
  }

  SUBCASE("w = -z") {
    const JacobiSeries lhs = pullback_p(f * g);
    const JacobiSeries rhs = pullback_p(f) * pullback_p(g);
    CHECK(index_equal(lhs.index(), rhs.index()));
    CHECK(equals_to_precision(lhs, rhs, lhs.prec24()));
    CHECK(std::get<RankOneIndex>(pullback_p(f).index()).m2 == 2);
  }

  SUBCASE("rank-one input is rejected") {
    CHECK_THROWS_AS(pullback_q(theta(20)), std::invalid_argument);
    CHECK_THROWS_AS(pullback_p(theta(20)), std::invalid_argument);
  }
}

TEST_CASE("index helpers") {
  CHECK(index_rank(SeriesIndex{RankOneIndex{2}}) == 1);
  CHECK(index_rank(SeriesIndex{GramMatrix{2, 1, 2}}) == 2);
  CHECK(index_positive_definite(SeriesIndex{GramMatrix{2, 1, 2}}));
  CHECK(!index_positive_definite(SeriesIndex{GramMatrix{1, 1, 1}}));
  CHECK(index_positive_definite(SeriesIndex{RankOneIndex{1}}));
  CHECK(!index_positive_definite(SeriesIndex{RankOneIndex{0}}));
  CHECK(gram_of(IndexMatrix{1, 2, 1}) == GramMatrix{3, 2, 3});
  CHECK_THROWS_AS(index_sum(SeriesIndex{RankOneIndex{1}},
                            SeriesIndex{GramMatrix{1, 0, 0}}),
                  std::invalid_argument);
}
