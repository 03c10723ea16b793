#pragma once

#include "wjf/series.hpp"

namespace wjf {

// Which elliptic variable a rank-one series occupies after embedding into
// two variables: f(tau, z), f(tau, w) or f(tau, z+w).
enum class Direction { z, w, zw };

// Rank-one to rank-two. Exponent r2 lands on (r2, 0), (0, r2) or (r2, r2);
// index m2 lands on the Gram matrix [[m2,0],[0,0]], [[0,0],[0,m2]] or
// [[m2,m2],[m2,m2]] respectively.
JacobiSeries embed(const JacobiSeries& f, Direction d);

// eta^e with valuation e/24; negative powers go through invert_unit. The
// result is exact below prec24 regardless of sign.
JacobiSeries eta_power(long long e, long long prec24);

// E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n,
// E6 = 1 - 504 sum sigma_5(n) q^n. Rank one, index 0. Only weights 2, 4, 6.
JacobiSeries eisenstein(int weight, long long prec24);

// theta(tau, z) = sum_{n in Z} (-1)^n q^{(2n+1)^2/8} z^{(2n+1)/2}:
// rank one, index m2 = 1, twice-weight 1.
JacobiSeries theta(long long prec24);

// k-th derivative in the normalization (2 dz)^k: each theta term picks up
// the factor r2^k. Twice-weight 1 + 2k.
JacobiSeries theta_derivative(int k, long long prec24);

// The rank-one generators:
//   phi_m1_half = theta / eta^3            (weight -1, index 1/2)
//   phi_m2_1    = phi_m1_half^2            (weight -2, index 1)
//   phi_0_1     = -24 serre(phi_m2_1)      (weight  0, index 1)
//   phi_0_3half = theta(2z) / theta(z)     (weight  0, index 3/2)
//   phi_m1_2    = phi_m1_half * phi_0_3half (weight -1, index 2)
JacobiSeries phi_m1_half(long long prec24);
JacobiSeries phi_m2_1(long long prec24);
JacobiSeries phi_0_1(long long prec24);
JacobiSeries phi_0_3half(long long prec24);
JacobiSeries phi_m1_2(long long prec24);

// Heat operator: multiplies the coefficient at q^n z^r w^s by
// n - (r,s) M^{-1} (r,s)^T / 2, taken with the given index, which must be
// positive definite and of f's rank. Twice-weight rises by 4. The index is
// a parameter rather than read from f so the operator can be applied to
// intermediates whose bookkeeping is synthetic.
JacobiSeries heat(const JacobiSeries& f, const SeriesIndex& index);

// Serre derivative: heat(f, index) - (weight2 - rank)/24 * E2 * f, where
// weight2 is twice the weight the caller ascribes to f. Annihilates theta.
JacobiSeries serre(const JacobiSeries& f, long long weight2,
                   const SeriesIndex& index);

// The five rank-two generators over the A2-type indices:
//   Phi_m3_A2 = theta(z) theta(w) theta(z+w) / eta^9      (weight -3)
//   Phi_m2_A2 = theta_block_plus(1, 1, 1)                 (weight -2)
//   Phi_0_A2  = -12 serre(Phi_m2_A2)                      (weight  0)
// plus the two forms of determinant 5 and 8:
//   Phi_0_323 = (5/2) serre(phi(z) phi(w) phi_0_1(z+w))
//   Phi_0_313 = (29/2) E4 phi(z) phi(w) Phi_m2_A2
//               + 48 serre(phi(z) phi(w) Phi_0_A2)
// with phi = phi_m1_half throughout.
JacobiSeries Phi_m3_A2(long long prec24);
JacobiSeries Phi_m2_A2(long long prec24);
JacobiSeries Phi_0_A2(long long prec24);
JacobiSeries Phi_0_323(long long prec24);
JacobiSeries Phi_0_313(long long prec24);

// theta(z)^a theta(z+w)^b theta(w)^c / eta^{3(a+b+c)}: weight -(a+b+c),
// index (a, b, c), holomorphic at q^0.
JacobiSeries theta_block(long long a, long long b, long long c,
                         long long prec24);

// The weight -(a+b+c)+1 companion: the log-derivative sum
// theta'(z)/theta(z) + theta'(w)/theta(w) - theta'(z+w)/theta(z+w) times the
// theta block, with numerators cleared so no division happens. Requires
// a, b, c >= 1.
JacobiSeries theta_block_plus(long long a, long long b, long long c,
                              long long prec24);

}  // namespace wjf
