#include "wjf/dimension.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace wjf {

std::string LaurentPoly::str() const {
  if (coef_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coef_) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const long long mag = std::llabs(c);
    if (mag != 1 || e == 0) out += std::to_string(mag);
    if (e != 0) {
      if (mag != 1) out += " ";
      out += e == 1 ? "t" : "t^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly p_poly(long long a) {
  if (a < 0) throw std::invalid_argument("p_poly: negative index");
  if (a == 0) return LaurentPoly::monomial(0);
  LaurentPoly p = LaurentPoly::monomial(-a);
  for (long long e = 2 - a; e <= 0; ++e) p += LaurentPoly::monomial(e);
  return p;
}

LaurentPoly q_poly(long long a) {
  if (a < -1) throw std::invalid_argument("q_poly: index below -1");
  LaurentPoly p;
  for (long long e = 1 - a; e <= 0; ++e) p += LaurentPoly::monomial(e);
  return p;
}

LaurentPoly generator_weights(const IndexMatrix& m) {
  const long long a = m.a, b = m.b, c = m.c;

  LaurentPoly n = p_poly(a) * p_poly(b) * p_poly(c);
  n += q_poly(a) * q_poly(b) * q_poly(c);

  const LaurentPoly two_over_t_minus_1 =
      LaurentPoly::monomial(-1, 2) - LaurentPoly::monomial(0);
  n += two_over_t_minus_1 * (q_poly(a - 1) * q_poly(b - 1) * q_poly(c - 1));

  LaurentPoly mixed = q_poly(a) * q_poly(b - 1) * q_poly(c - 1);
  mixed += q_poly(a - 1) * q_poly(b) * q_poly(c - 1);
  mixed += q_poly(a - 1) * q_poly(b - 1) * q_poly(c);
  n -= LaurentPoly::monomial(-1) * mixed;

  if (a != 0 && b != 0 && c != 0) n += LaurentPoly::monomial(1 - a - b - c);
  return n;
}

LaurentPoly rank_one_numerator(long long a) { return p_poly(a); }

long long dim_weak(long long k, const IndexMatrix& m) {
  // [t^k] of numerator / ((1 - t^4)(1 - t^6)): count pairs i, j >= 0 with
  // 4i + 6j equal to the gap above each numerator exponent.
  long long dim = 0;
  const LaurentPoly numerator = generator_weights(m);
  for (const auto& [e, coeff] : numerator.coefficients()) {
    const long long gap = k - e;
    if (gap < 0) continue;
    for (long long i = 0; 4 * i <= gap; ++i)
      if ((gap - 4 * i) % 6 == 0) dim += coeff;
  }
  return dim;
}

std::array<long long, 3> min_weight_dims(const IndexMatrix& m) {
  return {1, (m.a != 0 && m.b != 0 && m.c != 0) ? 1LL : 0LL,
          static_cast<long long>(m.a >= 2) + (m.b >= 2) + (m.c >= 2)};
}

namespace {

// Power series in q, r, s truncated at a common per-variable order, with
// Laurent-in-t coefficients. Dense cube indexed by (a, b, c).
class TriSeries {
 public:
  explicit TriSeries(int order)
      : order_(order),
        cells_(static_cast<std::size_t>(order + 1) * (order + 1) * (order + 1)) {}

  LaurentPoly& at(int a, int b, int c) { return cells_[idx(a, b, c)]; }
  const LaurentPoly& at(int a, int b, int c) const { return cells_[idx(a, b, c)]; }
  int order() const { return order_; }

  std::vector<LaurentPoly> take_cells() && { return std::move(cells_); }

  TriSeries operator+(const TriSeries& o) const {
    TriSeries out(order_);
    for (std::size_t i = 0; i < cells_.size(); ++i)
      out.cells_[i] = cells_[i] + o.cells_[i];
    return out;
  }

  TriSeries operator*(const TriSeries& o) const {
    TriSeries out(order_);
    // Iterate nonzero cells only; the factors used here live on a single
    // variable axis or a sparse handful of cells, so this stays far below
    // the dense cube squared.
    const auto lhs = support(), rhs = o.support();
    for (const auto& [a1, b1, c1] : lhs)
      for (const auto& [a2, b2, c2] : rhs) {
        const int a = a1 + a2, b = b1 + b2, c = c1 + c2;
        if (a > order_ || b > order_ || c > order_) continue;
        out.at(a, b, c) += at(a1, b1, c1) * o.at(a2, b2, c2);
      }
    return out;
  }

 private:
  std::size_t idx(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * (order_ + 1) + b) * (order_ + 1) + c;
  }

  std::vector<std::array<int, 3>> support() const {
    std::vector<std::array<int, 3>> s;
    for (int a = 0; a <= order_; ++a)
      for (int b = 0; b <= order_; ++b)
        for (int c = 0; c <= order_; ++c)
          if (!at(a, b, c).is_zero()) s.push_back({a, b, c});
    return s;
  }

  int order_;
  std::vector<LaurentPoly> cells_;
};

enum Var { kQ = 0, kR = 1, kS = 2 };

TriSeries tri_monomial(int order, int a, int b, int c, LaurentPoly t_part) {
  TriSeries out(order);
  if (a <= order && b <= order && c <= order) out.at(a, b, c) = std::move(t_part);
  return out;
}

// 1 / (1 - x t^e) = sum_i x^i t^{e i} in the chosen variable.
TriSeries tri_geometric(int order, Var v, long long t_exp) {
  TriSeries out(order);
  for (int i = 0; i <= order; ++i) {
    const int a = v == kQ ? i : 0, b = v == kR ? i : 0, c = v == kS ? i : 0;
    out.at(a, b, c) = LaurentPoly::monomial(t_exp * i);
  }
  return out;
}

// 1 - x + x^2 in the chosen variable.
TriSeries tri_quad(int order, Var v) {
  TriSeries out = tri_monomial(order, 0, 0, 0, LaurentPoly::monomial(0));
  const int a = v == kQ, b = v == kR, c = v == kS;
  if (order >= 1) out.at(a, b, c) = LaurentPoly::monomial(0, -1);
  if (order >= 2) out.at(2 * a, 2 * b, 2 * c) = LaurentPoly::monomial(0);
  return out;
}

// Full generating function: both closed-form terms expanded to the cube.
TriSeries expand_weight_table(int order) {
  TriSeries term1 = tri_monomial(order, 1, 1, 1, LaurentPoly::monomial(-2));
  term1 = term1 * tri_geometric(order, kQ, -1);
  term1 = term1 * tri_geometric(order, kR, -1);
  term1 = term1 * tri_geometric(order, kS, -1);

  TriSeries num = tri_quad(order, kQ) * tri_quad(order, kR) * tri_quad(order, kS);

  TriSeries cross = tri_monomial(order, 1, 1, 0, LaurentPoly::monomial(0));
  cross = cross + tri_monomial(order, 1, 0, 1, LaurentPoly::monomial(0));
  cross = cross + tri_monomial(order, 0, 1, 1, LaurentPoly::monomial(0));
  cross = cross + tri_monomial(order, 1, 1, 1, LaurentPoly::monomial(0, -2));
  num = num + tri_monomial(order, 1, 1, 1, LaurentPoly::monomial(-1, -1)) * cross;

  num = num + tri_monomial(order, 1, 1, 1, LaurentPoly::monomial(0));
  num = num + tri_monomial(order, 2, 2, 2, LaurentPoly::monomial(0, -1));

  TriSeries term2 = num;
  for (Var v : {kQ, kR, kS}) {
    term2 = term2 * tri_geometric(order, v, 0);
    term2 = term2 * tri_geometric(order, v, -1);
  }

  return term1 + term2;
}

}  // namespace

HilbertNumeratorTable::HilbertNumeratorTable(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("HilbertNumeratorTable: negative order");
  cells_ = std::move(expand_weight_table(order)).take_cells();
}

const LaurentPoly& HilbertNumeratorTable::coefficient(int a, int b, int c) const {
  if (a < 0 || b < 0 || c < 0 || a > order_ || b > order_ || c > order_)
    throw std::out_of_range("HilbertNumeratorTable: exponent outside table");
  return cells_[(static_cast<std::size_t>(a) * (order_ + 1) + b) * (order_ + 1) + c];
}

DeterminantTable::DeterminantTable(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("DeterminantTable: negative order");

  // Specialization of the weight table at t = 1:
  // [(1-q+q^2)(1-r+r^2)(1-s+s^2) + qrs(2-q-r-s)] / ((1-q)(1-r)(1-s))^2.
  TriSeries g = tri_quad(order, kQ) * tri_quad(order, kR) * tri_quad(order, kS);
  g = g + tri_monomial(order, 1, 1, 1, LaurentPoly::monomial(0, 2));
  g = g + tri_monomial(order, 2, 1, 1, LaurentPoly::monomial(0, -1));
  g = g + tri_monomial(order, 1, 2, 1, LaurentPoly::monomial(0, -1));
  g = g + tri_monomial(order, 1, 1, 2, LaurentPoly::monomial(0, -1));
  for (Var v : {kQ, kR, kS}) {
    g = g * tri_geometric(order, v, 0);
    g = g * tri_geometric(order, v, 0);
  }

  cells_.assign(static_cast<std::size_t>(order + 1) * (order + 1) * (order + 1), 0);
  for (int a = 0; a <= order; ++a)
    for (int b = 0; b <= order; ++b)
      for (int c = 0; c <= order; ++c)
        cells_[(static_cast<std::size_t>(a) * (order + 1) + b) * (order + 1) + c] =
            g.at(a, b, c).eval_at_one();
}

long long DeterminantTable::coefficient(int a, int b, int c) const {
  if (a < 0 || b < 0 || c < 0 || a > order_ || b > order_ || c > order_)
    throw std::out_of_range("DeterminantTable: exponent outside table");
  return cells_[(static_cast<std::size_t>(a) * (order_ + 1) + b) * (order_ + 1) + c];
}

LaurentPoly F_coefficient(int a, int b, int c) {
  const int order = std::max(a, std::max(b, c));
  return HilbertNumeratorTable(order).coefficient(a, b, c);
}

}  // namespace wjf
