#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace wjf {

// Lattice index of a rank-two Jacobi form, encoded by a triple (a, b, c) of
// nonnegative integers with Gram matrix
//
//     [ a+b   b  ]
//     [  b   c+b ].
//
// Entrywise addition of Gram matrices corresponds to entrywise addition of
// triples, so multiplying forms adds indices in either encoding. The
// anharmonic group acts by permuting (a, b, c); det and the minimal weight
// -(a+b+c) are orbit invariants.
struct IndexMatrix {
  long long a = 0;
  long long b = 0;
  long long c = 0;

  long long gram11() const { return a + b; }
  long long gram12() const { return b; }
  long long gram22() const { return c + b; }

  long long det() const { return a * b + a * c + b * c; }
  long long total() const { return a + b + c; }
  long long min_weight() const { return -total(); }

  // With a, b, c >= 0 the Gram matrix is positive semidefinite; it is
  // definite exactly when the determinant is nonzero.
  bool is_positive_definite() const { return det() > 0; }

  friend auto operator<=>(const IndexMatrix&, const IndexMatrix&) = default;
};

// Inverse of the Gram encoding. Requires g11 >= g12 >= 0 and g22 >= g12 so
// that the triple lands in the nonnegative cone; other matrices must first be
// brought to this shape by a change of basis.
IndexMatrix index_from_gram(long long g11, long long g12, long long g22);

// The distinct permutations of (a, b, c): six triples in general position,
// fewer when entries coincide. Sorted ascending.
std::vector<IndexMatrix> anharmonic_orbit(const IndexMatrix& m);

struct ReducedIndex {
  IndexMatrix index;
  // out(i) = in(perm[i]) as positions into the triple (a, b, c).
  std::array<int, 3> perm;
};

// Orbit representative with b <= a <= c, ties broken by the lexicographically
// least (b, a, c), together with a permutation realizing it.
ReducedIndex reduce(const IndexMatrix& m);

// Accepts "a,b,c" or "gram:g11,g12,g22". Throws std::invalid_argument on
// malformed text or a Gram matrix outside the nonnegative cone.
IndexMatrix parse_index(const std::string& text);

std::string index_str(const IndexMatrix& m);

}  // namespace wjf
