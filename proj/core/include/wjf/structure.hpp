#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wjf/catalog.hpp"
#include "wjf/index.hpp"
#include "wjf/series.hpp"

namespace wjf {

// Product of catalog generators, stored as the exponent vector parallel to
// the catalog list it was enumerated against.
struct Monomial {
  std::vector<int> exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Display name like "E4^2 phi_0_1@z"; the empty product renders as "1".
std::string monomial_name(const Monomial& m,
                          const std::vector<CatalogEntry>& catalog);

// All catalog monomials of the given weight whose index triples sum to
// exactly the given index. The index constraint is solved first over the
// index-carrying generators (each contributes a nonnegative triple of
// positive total, so the search is finite); the leftover weight is then
// filled with powers E4^i E6^j.
std::vector<Monomial> enumerate_monomials(
    long long weight, const IndexMatrix& index,
    const std::vector<CatalogEntry>& catalog);

// Expands the product at the cache's precision. One-variable entries (E4,
// E6) are embedded first, so expansions are uniformly two-variable whatever
// the index.
JacobiSeries expand_monomial(const Monomial& m,
                             const std::vector<CatalogEntry>& catalog,
                             FormCache& cache);

// Rank over the rationals of the coefficient matrix of the expansions,
// restricted to q-exponents below prec24. Elimination is fraction-free over
// integers after clearing denominators row by row. Throws
// std::invalid_argument when a row's guarantee falls short of prec24.
int span_rank(const std::vector<JacobiSeries>& rows, long long prec24);

struct Decomposition {
  bool ok = false;
  std::vector<Monomial> monomials;
  std::vector<Rational> coefficients;
  // First exponent, in key order, at which the linear system is
  // inconsistent. Set exactly when ok is false.
  std::optional<ExponentKey> first_unmatched;
};

// Exact rational solution of
//     target = sum_i coefficients[i] * expand(monomials[i])
// matching every coefficient with q-exponent below prec24. Underdetermined
// directions are pinned to zero, so the reported coefficients reproduce the
// target exactly on all computed terms whenever ok is true. Inconsistency is
// a result, not an exception. Throws std::invalid_argument when weights,
// indices or precisions do not line up.
Decomposition decompose(const JacobiSeries& target,
                        const std::vector<Monomial>& monomials,
                        const std::vector<CatalogEntry>& catalog,
                        FormCache& cache, long long prec24);

struct CellCheck {
  IndexMatrix index;
  long long weight = 0;
  std::size_t monomials = 0;
  int rank_lo = 0;    // span rank at prec24
  int rank_hi = 0;    // span rank one q-order higher
  long long dim = 0;  // dim_weak(weight, index)
  bool pass = false;  // both ranks equal the dimension
};

// Spans enumerate_monomials(weight, index) against dim_weak. Expansions are
// computed one q-order above prec24 and ranked at both precisions, so a rank
// still moving with the cutoff is flagged rather than accepted. A rank
// exceeding the dimension throws std::logic_error: expansions cannot leave
// the space, so that means a bug, not a mathematical finding.
CellCheck verify_dimension(long long weight, const IndexMatrix& index,
                           long long prec24, bool even_only = false);

// verify_dimension over every triple with a + b + c <= grid_bound and the
// nine weights upward from the minimal weight -(a+b+c); with even_only set,
// only all-even triples and even weights, over the even catalog. Generator
// and monomial expansions are shared across cells.
std::vector<CellCheck> verify_grid(long long grid_bound, bool even_only,
                                   long long prec24);

}  // namespace wjf
