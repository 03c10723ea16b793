#pragma once

#include <array>
#include <vector>

#include "wjf/index.hpp"
#include "wjf/laurent.hpp"

namespace wjf {

// Building blocks of the graded dimension formula. p_poly(a) is the weight
// numerator of the rank-one weak space of index a/2:
//   p_poly(0) = 1,  p_poly(1) = t^-1,  p_poly(a) = t^-a + t^{2-a} + ... + 1.
// q_poly(a) vanishes for a <= 0 and is t^{1-a} + t^{2-a} + ... + 1 otherwise.
LaurentPoly p_poly(long long a);
LaurentPoly q_poly(long long a);

// Weight numerator of the free module of weak forms of index m: the space of
// weight k has dimension [t^k] generator_weights(m) / ((1-t^4)(1-t^6)).
// Symmetric in (a, b, c); coefficients are nonnegative.
LaurentPoly generator_weights(const IndexMatrix& m);

// Rank-one counterpart (index a/2); coincides with p_poly for every a >= 0.
LaurentPoly rank_one_numerator(long long a);

// dim of the weight-k weak space of index m, from the numerator expanded
// against 1/((1-t^4)(1-t^6)).
long long dim_weak(long long k, const IndexMatrix& m);

// Dimensions in the three lowest weights -(a+b+c), -(a+b+c)+1, -(a+b+c)+2:
//   (1,  [abc != 0],  [a>=2] + [b>=2] + [c>=2]).
std::array<long long, 3> min_weight_dims(const IndexMatrix& m);

// Truncated expansion of the four-variable generating function
//
//   F(q,r,s,t) = q r s t^-2 / ((1-q/t)(1-r/t)(1-s/t))
//              + [ (1-q+q^2)(1-r+r^2)(1-s+s^2)
//                  - q r s t^-1 (qr+qs+rs-2qrs) + q r s (1-qrs) ]
//                / ((1-q)(1-q/t)(1-r)(1-r/t)(1-s)(1-s/t)),
//
// whose q^a r^b s^c coefficient is the weight numerator of index (a, b, c).
// Expanded once up to a fixed order in each of q, r, s; the coefficients are
// Laurent polynomials in t. This is an independent route to the same data as
// generator_weights.
class HilbertNumeratorTable {
 public:
  explicit HilbertNumeratorTable(int order);

  int order() const { return order_; }
  const LaurentPoly& coefficient(int a, int b, int c) const;

 private:
  int order_;
  std::vector<LaurentPoly> cells_;
};

// Single coefficient of the generating function above. Convenience wrapper
// that builds a table of order max(a, b, c); prefer the table for grids.
LaurentPoly F_coefficient(int a, int b, int c);

// Coefficient table of the t = 1 specialization
//
//   [ (1-q+q^2)(1-r+r^2)(1-s+s^2) + qrs(2-q-r-s) ] / ((1-q)(1-r)(1-s))^2,
//
// which generates det of the index away from determinant-zero exponents.
class DeterminantTable {
 public:
  explicit DeterminantTable(int order);

  int order() const { return order_; }
  long long coefficient(int a, int b, int c) const;

 private:
  int order_;
  std::vector<long long> cells_;
};

}  // namespace wjf
