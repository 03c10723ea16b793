#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "wjf/index.hpp"
#include "wjf/rational.hpp"

namespace wjf {

// Precision sentinel for series that are exact at every order (constants,
// freshly built monomials). Saturates under the arithmetic in this module.
inline constexpr long long kExactPrec = std::numeric_limits<long long>::max() / 4;

// Exponent of one Fourier term q^{n24/24} z^{r2/2} w^{s2/2}. All q-exponents
// live in (1/24)Z and all elliptic exponents in (1/2)Z, so the scaled values
// are plain integers. Rank-one series keep s2 = 0.
struct ExponentKey {
  long long n24 = 0;
  long long r2 = 0;
  long long s2 = 0;

  friend auto operator<=>(const ExponentKey&, const ExponentKey&) = default;
};

// Index of a rank-one series: twice the scalar index, so theta (index 1/2)
// has m2 = 1 and phi_{0,1} (index 1) has m2 = 2.
struct RankOneIndex {
  long long m2 = 0;

  friend bool operator==(const RankOneIndex&, const RankOneIndex&) = default;
};

// Index of a rank-two series, in the same doubled units as m2: the cone
// matrices of index.hpp appear as [[a+b, b], [b, c+b]]. Intermediates of
// variable substitutions may leave the cone (negative g12), so this type
// does not enforce cone membership.
struct GramMatrix {
  long long g11 = 0;
  long long g12 = 0;
  long long g22 = 0;

  long long det() const { return g11 * g22 - g12 * g12; }
  long long a() const { return g11 - g12; }
  long long b() const { return g12; }
  long long c() const { return g22 - g12; }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;
};

GramMatrix gram_of(const IndexMatrix& m);

using SeriesIndex = std::variant<RankOneIndex, GramMatrix>;

int index_rank(const SeriesIndex& idx);
bool index_equal(const SeriesIndex& x, const SeriesIndex& y);
SeriesIndex index_sum(const SeriesIndex& x, const SeriesIndex& y);
SeriesIndex index_difference(const SeriesIndex& x, const SeriesIndex& y);
SeriesIndex zero_index(int rank);
bool index_positive_definite(const SeriesIndex& idx);
std::string index_describe(const SeriesIndex& idx);

// Truncated Fourier expansion of a Jacobi form: finitely many exact terms
// plus a guarantee that every absent exponent with n24 < prec24 is genuinely
// zero. weight2 is twice the weight (theta and eta have half-integer weight).
// Values are immutable after construction; all operations on them are pure
// functions, so instances may be shared freely across threads.
class JacobiSeries {
 public:
  JacobiSeries() = default;

  // Canonicalizes: drops zero coefficients and terms at or above prec24.
  // Requires rank-one terms to have s2 = 0.
  JacobiSeries(long long weight2, SeriesIndex index, long long prec24,
               std::map<ExponentKey, Rational> terms);

  long long weight2() const { return weight2_; }
  long long prec24() const { return prec24_; }
  const SeriesIndex& index() const { return index_; }
  int rank() const { return index_rank(index_); }
  const std::map<ExponentKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Minimal stored n24; 0 for the zero series (used for precision shifts).
  long long valuation24() const;

  Rational coeff(long long n24, long long r2, long long s2 = 0) const;

 private:
  std::map<ExponentKey, Rational> terms_;
  SeriesIndex index_ = RankOneIndex{0};
  long long weight2_ = 0;
  long long prec24_ = kExactPrec;
};

// Minimal q-exponent as an exact rational (theta -> 1/8); nullopt for the
// zero series.
std::optional<Rational> valuation(const JacobiSeries& f);

// Sum/difference require equal weight, index and rank; the error message
// names the differing field. Result precision is the minimum of the two.
JacobiSeries operator+(const JacobiSeries& f, const JacobiSeries& g);
JacobiSeries operator-(const JacobiSeries& f, const JacobiSeries& g);
JacobiSeries operator-(const JacobiSeries& f);

// Scalar multiple keeps metadata and precision.
JacobiSeries operator*(const Rational& c, const JacobiSeries& f);

// Convolution product. Requires equal rank; weights and indices add.
// Result precision: min(f.prec24 + val24(g), g.prec24 + val24(f)).
JacobiSeries operator*(const JacobiSeries& f, const JacobiSeries& g);

// Exponentiation by squaring; pow(f, 0) is the constant 1 of weight zero and
// zero index at exact precision.
JacobiSeries pow(const JacobiSeries& f, long long e);

// Lowers the precision bound, dropping any terms above it. Raising the bound
// is an error: exactness beyond the guarantee cannot be manufactured.
JacobiSeries truncate(const JacobiSeries& f, long long new_prec24);

// Coefficient-wise equality for every exponent with n24 < bound24. Both
// operands must guarantee that range. Metadata is not compared.
bool equals_to_precision(const JacobiSeries& f, const JacobiSeries& g,
                         long long bound24);

// Multiplicative inverse of a series whose lowest q-slice is a single
// monomial. Result precision: f.prec24 - 2 val24(f).
JacobiSeries invert_unit(const JacobiSeries& f);

// Exact quotient f / g, computed q-slice by q-slice: each slice of the
// quotient solves T = H_n * G_lowest by two-variable Laurent-polynomial
// division (per-variable minimal exponents stripped, then graded-lex long
// division with zero remainder demanded). A nonzero remainder at any slice
// aborts with an error naming the first failing q-exponent. Result
// precision: min(f.prec24 - val24(g), g.prec24 - 2 val24(g) + val24(f)).
JacobiSeries divide_exact(const JacobiSeries& f, const JacobiSeries& g);

// Differentiation (2 pi i)^{-1} d/dz: multiplies each term by its z-exponent
// r2/2. dw acts on the w-exponent and requires rank two. Weight rises by 1.
JacobiSeries dz(const JacobiSeries& f);
JacobiSeries dw(const JacobiSeries& f);

// Integer 2x2 substitution of the elliptic variables, (z, w) -> U (z, w):
//   z -> u11 z + u12 w,  w -> u21 z + u22 w.
// Exponents map by U^T and the index by M -> U^T M U. Must be unimodular.
struct UnimodularMap {
  long long u11, u12, u21, u22;

  long long det() const { return u11 * u22 - u12 * u21; }
};

// The three substitutions generating the permutation action on (a, b, c),
// plus the w-negation used to form f(tau, z, -w).
inline constexpr UnimodularMap map_zw_minus_w{1, 1, 0, -1};   // (a,b,c) -> (b,a,c)
inline constexpr UnimodularMap map_w_minus_zw{0, 1, -1, -1};  // (a,b,c) -> (b,c,a)
inline constexpr UnimodularMap map_zw_minus_z{1, 1, -1, 0};   // (a,b,c) -> (c,a,b)
inline constexpr UnimodularMap map_swap{0, 1, 1, 0};          // (a,b,c) -> (c,b,a)
inline constexpr UnimodularMap map_negate_w{1, 0, 0, -1};

JacobiSeries substitute(const JacobiSeries& f, const UnimodularMap& u);

// z -> n z on a rank-one series: exponents scale by n, index by n^2.
JacobiSeries scale_z(const JacobiSeries& f, long long n);

// Specialization w = -z of a rank-two series: exponents collapse to r2 - s2,
// index to m2 = g11 + g22 - 2 g12.
JacobiSeries pullback_p(const JacobiSeries& f);

// Specialization w = 0: coefficients are summed over s2, index m2 = g11.
JacobiSeries pullback_q(const JacobiSeries& f);

}  // namespace wjf
