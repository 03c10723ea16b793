#include "wjf/forms.hpp"

#include <stdexcept>
#include <vector>

namespace wjf {

namespace {

// All named constructions compute at a padded working precision and truncate
// to the requested one, so every catalog form reports a uniform guarantee no
// matter how many valuation-shifting steps its recipe takes.
constexpr long long kPad = 24;

long long ll_pow(long long base, int e) {
  long long p = 1;
  while (e-- > 0) p *= base;
  return p;
}

}  // namespace

JacobiSeries embed(const JacobiSeries& f, Direction d) {
  if (f.rank() != 1)
    throw std::invalid_argument("embed: requires a rank-one series");
  const long long m2 = std::get<RankOneIndex>(f.index()).m2;
  GramMatrix gram{0, 0, 0};
  switch (d) {
    case Direction::z:
      gram = {m2, 0, 0};
      break;
    case Direction::w:
      gram = {0, 0, m2};
      break;
    case Direction::zw:
      gram = {m2, m2, m2};
      break;
  }
  std::map<ExponentKey, Rational> out;
  for (const auto& [key, c] : f.terms()) {
    switch (d) {
      case Direction::z:
        out.emplace(ExponentKey{key.n24, key.r2, 0}, c);
        break;
      case Direction::w:
        out.emplace(ExponentKey{key.n24, 0, key.r2}, c);
        break;
      case Direction::zw:
        out.emplace(ExponentKey{key.n24, key.r2, key.r2}, c);
        break;
    }
  }
  return {f.weight2(), gram, f.prec24(), std::move(out)};
}

JacobiSeries eta_power(long long e, long long prec24) {
  // Pentagonal-number expansion: eta = q^{1/24} sum_k (-1)^k q^{k(3k-1)/2}.
  const long long work = e < 0 ? prec24 + kPad + 2 * (-e) : prec24 + kPad;
  std::map<ExponentKey, Rational> terms;
  for (long long k = 0;; ++k) {
    const long long n24 = 1 + 12 * k * (3 * k - 1);
    const long long n24_neg = 1 + 12 * k * (3 * k + 1);
    if (n24 >= work && n24_neg >= work) break;
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    if (n24 < work) terms.emplace(ExponentKey{n24, 0, 0}, sign);
    if (k > 0 && n24_neg < work) terms.emplace(ExponentKey{n24_neg, 0, 0}, sign);
  }
  JacobiSeries eta(1, RankOneIndex{0}, work, std::move(terms));
  JacobiSeries p = e >= 0 ? pow(eta, e) : pow(invert_unit(eta), -e);
  return truncate(p, prec24);
}

JacobiSeries eisenstein(int weight, long long prec24) {
  long scale;
  int power;
  switch (weight) {
    case 2:
      scale = -24, power = 1;
      break;
    case 4:
      scale = 240, power = 3;
      break;
    case 6:
      scale = -504, power = 5;
      break;
    default:
      throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
  }
  const long long nmax = prec24 <= 0 ? 0 : (prec24 - 1) / 24;
  std::vector<mpz_class> sigma(nmax + 1, mpz_class(0));
  for (long long d = 1; d <= nmax; ++d) {
    mpz_class dp(1);
    for (int i = 0; i < power; ++i) dp *= static_cast<long>(d);
    for (long long m = d; m <= nmax; m += d) sigma[m] += dp;
  }
  std::map<ExponentKey, Rational> terms;
  if (prec24 > 0) terms.emplace(ExponentKey{0, 0, 0}, 1);
  for (long long n = 1; n <= nmax; ++n)
    terms.emplace(ExponentKey{24 * n, 0, 0}, Rational(mpz_class(sigma[n] * scale)));
  return {2 * weight, RankOneIndex{0}, prec24, std::move(terms)};
}

JacobiSeries theta(long long prec24) {
  std::map<ExponentKey, Rational> terms;
  for (long long n = 0;; ++n) {
    const long long n24 = 3 + 12 * n * (n + 1);
    if (n24 >= prec24) break;
    const Rational sign = (n % 2 == 0) ? 1 : -1;
    terms.emplace(ExponentKey{n24, 2 * n + 1, 0}, sign);
    terms.emplace(ExponentKey{n24, -(2 * n + 1), 0}, Rational(-sign));
  }
  return {1, RankOneIndex{1}, prec24, std::move(terms)};
}

JacobiSeries theta_derivative(int k, long long prec24) {
  if (k < 0) throw std::invalid_argument("theta_derivative: negative order");
  std::map<ExponentKey, Rational> terms;
  for (long long n = 0;; ++n) {
    const long long n24 = 3 + 12 * n * (n + 1);
    if (n24 >= prec24) break;
    const long long s = (n % 2 == 0) ? 1 : -1;
    const long long r2 = 2 * n + 1;
    terms.emplace(ExponentKey{n24, r2, 0},
                  Rational(static_cast<long>(s * ll_pow(r2, k))));
    terms.emplace(ExponentKey{n24, -r2, 0},
                  Rational(static_cast<long>(-s * ll_pow(-r2, k))));
  }
  return {1 + 2 * k, RankOneIndex{1}, prec24, std::move(terms)};
}

JacobiSeries phi_m1_half(long long prec24) {
  const long long work = prec24 + kPad;
  return truncate(theta(work) * eta_power(-3, work), prec24);
}

JacobiSeries phi_m2_1(long long prec24) {
  const long long work = prec24 + kPad;
  const JacobiSeries phi = phi_m1_half(work);
  return truncate(phi * phi, prec24);
}

JacobiSeries phi_0_3half(long long prec24) {
  const long long work = prec24 + kPad;
  const JacobiSeries t = theta(work);
  return truncate(divide_exact(scale_z(t, 2), t), prec24);
}

JacobiSeries phi_m1_2(long long prec24) {
  const long long work = prec24 + kPad;
  return truncate(phi_m1_half(work) * phi_0_3half(work), prec24);
}

JacobiSeries heat(const JacobiSeries& f, const SeriesIndex& index) {
  if (index_rank(index) != f.rank())
    throw std::invalid_argument("heat: index rank differs from series rank");
  if (!index_positive_definite(index))
    throw std::invalid_argument("heat: index must be positive definite");
  std::map<ExponentKey, Rational> out;
  if (const auto* m = std::get_if<RankOneIndex>(&index)) {
    for (const auto& [key, c] : f.terms()) {
      Rational qpart(static_cast<long>(key.n24), 24L);
      qpart.canonicalize();
      Rational rpart(static_cast<long>(key.r2 * key.r2),
                     static_cast<long>(8 * m->m2));
      rpart.canonicalize();
      out.emplace(key, Rational(c * (qpart - rpart)));
    }
  } else {
    const auto& g = std::get<GramMatrix>(index);
    const long long det = g.det();
    for (const auto& [key, c] : f.terms()) {
      const long long quad = g.g22 * key.r2 * key.r2 -
                             2 * g.g12 * key.r2 * key.s2 +
                             g.g11 * key.s2 * key.s2;
      Rational qpart(static_cast<long>(key.n24), 24L);
      qpart.canonicalize();
      Rational rpart(static_cast<long>(quad), static_cast<long>(8 * det));
      rpart.canonicalize();
      out.emplace(key, Rational(c * (qpart - rpart)));
    }
  }
  return {f.weight2() + 4, f.index(), f.prec24(), std::move(out)};
}

JacobiSeries serre(const JacobiSeries& f, long long weight2,
                   const SeriesIndex& index) {
  if (f.prec24() >= kExactPrec)
    throw std::invalid_argument("serre: operand must carry finite precision");
  const int rank = index_rank(index);
  // (k/12 - rank/24) with k = weight2/2
  Rational factor(static_cast<long>(weight2 - rank), 24L);
  factor.canonicalize();
  const long long e2_prec = f.prec24() - std::min(f.valuation24(), 0LL);
  JacobiSeries e2 = eisenstein(2, e2_prec);
  if (f.rank() == 2) e2 = embed(e2, Direction::z);
  return heat(f, index) - factor * (e2 * f);
}

JacobiSeries phi_0_1(long long prec24) {
  const long long work = prec24 + kPad;
  return truncate(Rational(-24) * serre(phi_m2_1(work), -4, RankOneIndex{2}),
                  prec24);
}

JacobiSeries Phi_m3_A2(long long prec24) {
  const long long work = prec24 + kPad;
  const JacobiSeries t = theta(work);
  const JacobiSeries e9 = embed(eta_power(-9, work), Direction::z);
  return truncate(
      embed(t, Direction::z) * embed(t, Direction::w) * embed(t, Direction::zw) * e9,
      prec24);
}

JacobiSeries Phi_m2_A2(long long prec24) {
  return theta_block_plus(1, 1, 1, prec24);
}

JacobiSeries Phi_0_A2(long long prec24) {
  const long long work = prec24 + kPad;
  return truncate(
      Rational(-12) * serre(Phi_m2_A2(work), -4, GramMatrix{2, 1, 2}), prec24);
}

JacobiSeries Phi_0_323(long long prec24) {
  const long long work = prec24 + kPad;
  const JacobiSeries phi = phi_m1_half(work);
  const JacobiSeries u = embed(phi, Direction::z) * embed(phi, Direction::w) *
                         embed(phi_0_1(work), Direction::zw);
  Rational half5(5, 2);
  half5.canonicalize();
  return truncate(half5 * serre(u, -4, GramMatrix{3, 2, 3}), prec24);
}

JacobiSeries Phi_0_313(long long prec24) {
  const long long work = prec24 + kPad;
  const JacobiSeries phi = phi_m1_half(work);
  const JacobiSeries pp = embed(phi, Direction::z) * embed(phi, Direction::w);
  Rational c29(29, 2);
  c29.canonicalize();
  const JacobiSeries first =
      c29 * (embed(eisenstein(4, work), Direction::z) * pp * Phi_m2_A2(work));
  const JacobiSeries second =
      Rational(48) * serre(pp * Phi_0_A2(work), -4, GramMatrix{3, 1, 3});
  return truncate(first + second, prec24);
}

JacobiSeries theta_block(long long a, long long b, long long c,
                         long long prec24) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("theta_block: negative exponent");
  const long long eps = a + b + c;
  const long long work = prec24 + kPad + 3 * eps;
  const JacobiSeries t = theta(work);
  const JacobiSeries numer = pow(embed(t, Direction::z), a) *
                             pow(embed(t, Direction::zw), b) *
                             pow(embed(t, Direction::w), c);
  return truncate(numer * embed(eta_power(-3 * eps, work), Direction::z),
                  prec24);
}

JacobiSeries theta_block_plus(long long a, long long b, long long c,
                              long long prec24) {
  if (a < 1 || b < 1 || c < 1)
    throw std::domain_error("theta_block_plus: requires a, b, c >= 1");
  const long long eps = a + b + c;
  const long long work = prec24 + kPad + 3 * eps;
  const JacobiSeries t = theta(work);
  const JacobiSeries tp = theta_derivative(1, work);
  const JacobiSeries tz = embed(t, Direction::z);
  const JacobiSeries tw = embed(t, Direction::w);
  const JacobiSeries tzw = embed(t, Direction::zw);
  JacobiSeries numer =
      embed(tp, Direction::z) * pow(tz, a - 1) * pow(tzw, b) * pow(tw, c);
  numer = numer + pow(tz, a) * pow(tzw, b) * embed(tp, Direction::w) * pow(tw, c - 1);
  numer = numer - pow(tz, a) * embed(tp, Direction::zw) * pow(tzw, b - 1) * pow(tw, c);
  return truncate(numer * embed(eta_power(-3 * eps, work), Direction::z),
                  prec24);
}

}  // namespace wjf
