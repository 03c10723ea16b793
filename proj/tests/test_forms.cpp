#include <map>
#include <stdexcept>
#include <utility>
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

// Dense coefficients of prod_{n=1}^{N-1} (1 - q^n) through q^{N-1}, by naive
// polynomial multiplication. Oracle for the pentagonal-number expansion.
std::vector<long long> euler_product(int N) {
  std::vector<long long> p(N, 0);
  p[0] = 1;
  for (int n = 1; n < N; ++n)
    for (int k = N - 1; k >= n; --k) p[k] -= p[k - n];
  return p;
}

long long sigma(long long n, int k) {
  long long s = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long long dp = 1;
    for (int i = 0; i < k; ++i) dp *= d;
    s += dp;
  }
  return s;
}

// Jacobi triple product: theta equals
// q^{1/8} (z^{1/2} - z^{-1/2}) prod_{n>=1} (1-q^n)(1-q^n z)(1-q^n z^{-1}).
// Built from two-term factors only, independently of the summation formula.
JacobiSeries theta_by_triple_product(long long prec24) {
  std::map<ExponentKey, Rational> pre;
  pre[{3, 1, 0}] = frac(1);
  pre[{3, -1, 0}] = frac(-1);
  JacobiSeries out(1, RankOneIndex{1}, prec24, std::move(pre));
  for (long long n = 1; 24 * n < prec24; ++n) {
    for (const long long e : {0LL, 2LL, -2LL}) {
      std::map<ExponentKey, Rational> t;
      t[{0, 0, 0}] = frac(1);
      t[{24 * n, e, 0}] = frac(-1);
      out = out * JacobiSeries(0, RankOneIndex{0}, prec24, std::move(t));
    }
  }
  return out;
}

struct RowTerm {
  long long r2 = 0;
  long long s2 = 0;
  long long num = 0;
  long long den = 1;
};

bool row_matches(const JacobiSeries& f, long long n24,
                 const std::vector<RowTerm>& expect) {
  std::map<std::pair<long long, long long>, Rational> want;
  for (const RowTerm& t : expect) want[{t.r2, t.s2}] = frac(t.num, t.den);
  std::map<std::pair<long long, long long>, Rational> got;
  for (const auto& [key, coeff] : f.terms())
    if (key.n24 == n24) got[{key.r2, key.s2}] = coeff;
  return got == want;
}

}  // namespace

TEST_CASE("eta against the Euler product") {
  const int N = 30;
  const std::vector<long long> p = euler_product(N);
  const JacobiSeries eta = eta_power(1, 24 * N + 1);
  CHECK(eta.weight2() == 1);
  CHECK(index_equal(eta.index(), SeriesIndex{RankOneIndex{0}}));
  for (int k = 0; k < N; ++k) CHECK(eta.coeff(24 * k + 1, 0) == frac(p[k]));
  for (const auto& [key, c] : eta.terms()) {
    CHECK(key.n24 % 24 == 1);
    CHECK(key.r2 == 0);
  }
}

TEST_CASE("eta powers") {
  const JacobiSeries e3 = eta_power(3, 97);
  CHECK(e3.weight2() == 3);
  CHECK(e3.valuation24() == 3);
  CHECK(equals_to_precision(e3, pow(eta_power(1, 100), 3), 97));

  const JacobiSeries em3 = eta_power(-3, 97);
  CHECK(em3.weight2() == -3);
  CHECK(em3.valuation24() == -3);
  const JacobiSeries prod = e3 * em3;
  const JacobiSeries one(0, RankOneIndex{0}, kExactPrec,
                         {{ExponentKey{0, 0, 0}, Rational(1)}});
  // Product precision follows the valuation shift: min(97 - 3, 97 + 3).
  CHECK(prod.prec24() == 94);
  CHECK(equals_to_precision(prod, one, prod.prec24()));
}

TEST_CASE("Eisenstein series by divisor sums") {
  const long long prec = 481;
  const JacobiSeries e2 = eisenstein(2, prec);
  const JacobiSeries e4 = eisenstein(4, prec);
  const JacobiSeries e6 = eisenstein(6, prec);
  CHECK(e2.weight2() == 4);
  CHECK(e4.weight2() == 8);
  CHECK(e6.weight2() == 12);
  CHECK(e4.coeff(0, 0) == frac(1));
  for (long long n = 1; n <= 20; ++n) {
    CHECK(e2.coeff(24 * n, 0) == frac(-24 * sigma(n, 1)));
    CHECK(e4.coeff(24 * n, 0) == frac(240 * sigma(n, 3)));
    CHECK(e6.coeff(24 * n, 0) == frac(-504 * sigma(n, 5)));
  }
  CHECK(e4.coeff(48, 0) == frac(2160));
  CHECK(e6.coeff(48, 0) == frac(-16632));
  CHECK_THROWS_AS(eisenstein(3, prec), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein(8, prec), std::invalid_argument);
}

TEST_CASE("theta against the triple product") {
  const long long prec = 241;
  const JacobiSeries th = theta(prec);
  const JacobiSeries oracle = theta_by_triple_product(prec);
  CHECK(th.weight2() == oracle.weight2());
  CHECK(index_equal(th.index(), oracle.index()));
  CHECK(equals_to_precision(th, oracle, prec));
}

TEST_CASE("theta derivatives in the doubled normalization") {
  const long long prec = 121;
  const JacobiSeries th = theta(prec);
  CHECK(equals_to_precision(theta_derivative(0, prec), th, prec));

  const JacobiSeries d1 = theta_derivative(1, prec);
  CHECK(d1.weight2() == 3);
  CHECK(equals_to_precision(d1, frac(2) * dz(th), prec));

  const JacobiSeries d2 = theta_derivative(2, prec);
  CHECK(d2.weight2() == 5);
  CHECK(equals_to_precision(d2, frac(4) * dz(dz(th)), prec));

  CHECK_THROWS_AS(theta_derivative(-1, prec), std::invalid_argument);
}

TEST_CASE("theta at z = 0") {
  const long long prec = 241;
  // theta is odd, its first derivative restricts to eta^3.
  const JacobiSeries at0 = pullback_q(embed(theta(prec), Direction::w));
  CHECK(at0.is_zero());

  const JacobiSeries d_at0 =
      pullback_q(embed(dz(theta(prec)), Direction::w));
  CHECK(equals_to_precision(d_at0, eta_power(3, prec), prec));

  const JacobiSeries dd_at0 =
      pullback_q(embed(theta_derivative(1, prec), Direction::w));
  CHECK(equals_to_precision(dd_at0, frac(2) * eta_power(3, prec), prec));
}

TEST_CASE("rank-one generators: golden rows and metadata") {
  const long long prec = 49;
  const JacobiSeries ph = phi_m1_half(prec);
  CHECK(ph.weight2() == -2);
  CHECK(index_equal(ph.index(), SeriesIndex{RankOneIndex{1}}));
  CHECK(row_matches(ph, 0, {{-1, 0, -1}, {1, 0, 1}}));
  CHECK(row_matches(ph, 24, {{-3, 0, 1}, {-1, 0, -3}, {1, 0, 3}, {3, 0, -1}}));

  const JacobiSeries p2 = phi_m2_1(prec);
  CHECK(p2.weight2() == -4);
  CHECK(index_equal(p2.index(), SeriesIndex{RankOneIndex{2}}));
  CHECK(equals_to_precision(p2, ph * ph, prec));

  const JacobiSeries p01 = phi_0_1(prec);
  CHECK(p01.weight2() == 0);
  CHECK(index_equal(p01.index(), SeriesIndex{RankOneIndex{2}}));
  CHECK(row_matches(p01, 0, {{-2, 0, 1}, {0, 0, 10}, {2, 0, 1}}));
  CHECK(row_matches(
      p01, 24, {{-4, 0, 10}, {-2, 0, -64}, {0, 0, 108}, {2, 0, -64}, {4, 0, 10}}));

  const JacobiSeries p03 = phi_0_3half(prec);
  CHECK(p03.weight2() == 0);
  CHECK(index_equal(p03.index(), SeriesIndex{RankOneIndex{3}}));
  CHECK(row_matches(p03, 0, {{-1, 0, 1}, {1, 0, 1}}));
  CHECK(row_matches(p03, 24, {{-5, 0, -1}, {-1, 0, 1}, {1, 0, 1}, {5, 0, -1}}));

  const JacobiSeries p12 = phi_m1_2(prec);
  CHECK(p12.weight2() == -2);
  CHECK(index_equal(p12.index(), SeriesIndex{RankOneIndex{4}}));
  CHECK(equals_to_precision(p12, ph * p03, prec));
}

TEST_CASE("theta(2z) equals phi_0_3/2 times theta") {
  const long long prec = 52;
  const JacobiSeries lhs = phi_0_3half(prec) * theta(prec);
  const JacobiSeries rhs = scale_z(theta(prec), 2);
  CHECK(index_equal(lhs.index(), rhs.index()));
  CHECK(equals_to_precision(lhs, rhs, prec));
}

TEST_CASE("heat operator") {
  const JacobiSeries p2 = phi_m2_1(49);
  const JacobiSeries h = heat(p2, SeriesIndex{RankOneIndex{2}});
  CHECK(h.weight2() == 0);
  CHECK(index_equal(h.index(), p2.index()));
  CHECK(row_matches(h, 0, {{-2, 0, -1, 4}, {2, 0, -1, 4}}));

  CHECK(heat(theta(97), SeriesIndex{RankOneIndex{1}}).is_zero());

  CHECK_THROWS_AS(heat(theta(25), SeriesIndex{GramMatrix{2, 1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(heat(theta(25), SeriesIndex{RankOneIndex{0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(heat(Phi_m2_A2(25), SeriesIndex{GramMatrix{1, 1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("Serre derivative") {
  const JacobiSeries p2 = phi_m2_1(73);
  const JacobiSeries s = serre(p2, -4, SeriesIndex{RankOneIndex{2}});
  CHECK(s.weight2() == 0);
  CHECK(row_matches(s, 0, {{-2, 0, -1, 24}, {0, 0, -10, 24}, {2, 0, -1, 24}}));
  CHECK(equals_to_precision(frac(-24) * s, phi_0_1(49), 49));

  CHECK(serre(theta(97), 1, SeriesIndex{RankOneIndex{1}}).is_zero());

  CHECK_THROWS_AS(serre(pow(theta(25), 0), 0, SeriesIndex{RankOneIndex{1}}),
                  std::invalid_argument);
}

TEST_CASE("two-variable generators: golden rows and metadata") {
  const long long prec = 49;
  const JacobiSeries a3 = Phi_m3_A2(prec);
  CHECK(a3.weight2() == -6);
  CHECK(std::get<GramMatrix>(a3.index()) == GramMatrix{2, 1, 2});
  CHECK(row_matches(a3, 0, {{-2, -2, -1},
                            {-2, 0, 1},
                            {0, -2, 1},
                            {0, 2, -1},
                            {2, 0, -1},
                            {2, 2, 1}}));

  const JacobiSeries a2 = Phi_m2_A2(prec);
  CHECK(a2.weight2() == -4);
  CHECK(std::get<GramMatrix>(a2.index()) == GramMatrix{2, 1, 2});
  CHECK(row_matches(a2, 0, {{-2, -2, 1},
                            {-2, 0, 1},
                            {0, -2, 1},
                            {0, 0, -6},
                            {0, 2, 1},
                            {2, 0, 1},
                            {2, 2, 1}}));

  const JacobiSeries a0 = Phi_0_A2(prec);
  CHECK(a0.weight2() == 0);
  CHECK(std::get<GramMatrix>(a0.index()) == GramMatrix{2, 1, 2});
  CHECK(row_matches(a0, 0, {{-2, -2, 1},
                            {-2, 0, 1},
                            {0, -2, 1},
                            {0, 0, 18},
                            {0, 2, 1},
                            {2, 0, 1},
                            {2, 2, 1}}));

  const JacobiSeries d5 = Phi_0_323(prec);
  CHECK(d5.weight2() == 0);
  CHECK(std::get<GramMatrix>(d5.index()) == GramMatrix{3, 2, 3});
  CHECK(row_matches(d5, 0, {{-3, -3, -1, 2},
                            {-3, -1, 1, 2},
                            {-1, -3, 1, 2},
                            {-1, -1, 11, 2},
                            {1, 1, 11, 2},
                            {1, 3, 1, 2},
                            {3, 1, 1, 2},
                            {3, 3, -1, 2}}));

  const JacobiSeries d8 = Phi_0_313(prec);
  CHECK(d8.weight2() == 0);
  CHECK(std::get<GramMatrix>(d8.index()) == GramMatrix{3, 1, 3});
  CHECK(row_matches(d8, 0, {{-3, -3, -1, 2},
                            {-3, 1, 1, 2},
                            {-1, -1, 103, 2},
                            {-1, 1, 20},
                            {-1, 3, 1, 2},
                            {1, -3, 1, 2},
                            {1, -1, 20},
                            {1, 1, 103, 2},
                            {3, -1, 1, 2},
                            {3, 3, -1, 2}}));
}

TEST_CASE("theta blocks") {
  const JacobiSeries tb = theta_block(2, 0, 1, 49);
  CHECK(tb.weight2() == -6);
  const auto& g = std::get<GramMatrix>(tb.index());
  CHECK(g.a() == 2);
  CHECK(g.b() == 0);
  CHECK(g.c() == 1);
  CHECK(tb.valuation24() >= 0);

  CHECK(equals_to_precision(theta_block(1, 1, 1, 49), Phi_m3_A2(49), 49));
  CHECK(equals_to_precision(theta_block_plus(1, 1, 1, 49), Phi_m2_A2(49), 49));

  const JacobiSeries unit = theta_block(0, 0, 0, 49);
  CHECK(unit.weight2() == 0);
  CHECK(unit.rank() == 2);
  CHECK(unit.coeff(0, 0, 0) == frac(1));

  CHECK_THROWS_AS(theta_block(-1, 1, 1, 25), std::invalid_argument);
  CHECK_THROWS_AS(theta_block_plus(0, 1, 1, 25), std::domain_error);
  CHECK_THROWS_AS(theta_block_plus(1, 1, 0, 25), std::domain_error);
}

TEST_CASE("discriminant identity at low order") {
  const long long prec = 49;
  const JacobiSeries lhs =
      pow(eisenstein(4, prec), 3) - pow(eisenstein(6, prec), 2);
  CHECK(equals_to_precision(lhs, frac(1728) * eta_power(24, prec), prec));
}

TEST_CASE("pullback identities at low order") {
  const long long prec = 49;
  const JacobiSeries d5 = Phi_0_323(prec);
  const JacobiSeries d8 = Phi_0_313(prec);
  const JacobiSeries p01 = phi_0_1(prec);
  const JacobiSeries p03 = phi_0_3half(prec);
  CHECK(equals_to_precision(pullback_p(d5), p01, prec));
  CHECK(equals_to_precision(pullback_q(d5), frac(6) * p03, prec));
  CHECK(equals_to_precision(pullback_p(d8), p01 * p01, prec));
  CHECK(equals_to_precision(pullback_q(d8), frac(72) * p03, prec));
}

TEST_CASE("phi product identity at low order") {
  const long long prec = 49;
  const JacobiSeries sum = embed(phi_m1_half(prec), Direction::zw);
  const JacobiSeries lhs = sum * substitute(sum, map_negate_w);
  const JacobiSeries p2 = phi_m2_1(prec);
  const JacobiSeries p0 = phi_0_1(prec);
  const JacobiSeries rhs = embed(p2, Direction::z) * embed(p0, Direction::w) -
                           embed(p0, Direction::z) * embed(p2, Direction::w);
  CHECK(equals_to_precision(lhs, frac(1, 12) * rhs, prec));
}
