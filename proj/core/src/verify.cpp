#include "wjf/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wjf/dimension.hpp"
#include "wjf/forms.hpp"
#include "wjf/index.hpp"
#include "wjf/series.hpp"
#include "wjf/structure.hpp"

namespace wjf {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rational frac(long long num, long long den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

std::string join_bad(const std::vector<std::string>& bad) {
  std::string out;
  const std::size_t shown = std::min<std::size_t>(bad.size(), 3);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) out += "; ";
    out += bad[i];
  }
  if (bad.size() > shown)
    out += " (+" + std::to_string(bad.size() - shown) + " more)";
  return out;
}

// Fills pass and detail from a failure list, the elapsed time, and an
// optional hard time budget in seconds (0 disables the budget).
void finish(CriterionResult& r, const std::vector<std::string>& bad, double dt,
            int budget_s, const std::string& pass_text) {
  r.seconds = dt;
  if (!bad.empty()) {
    r.pass = false;
    r.detail = join_bad(bad);
    return;
  }
  if (budget_s > 0 && dt >= budget_s) {
    r.pass = false;
    r.detail = "exceeded the " + std::to_string(budget_s) + " s budget";
    return;
  }
  r.pass = true;
  r.detail = pass_text;
}

// One expected term of a printed Fourier row.
struct RowTerm {
  long long r2 = 0;
  long long s2 = 0;
  long long num = 0;
  long long den = 1;
};

// The stored slice of f at q^{n24/24} must have exactly the expected support
// and coefficients.
bool row_matches(const JacobiSeries& f, long long n24,
                 const std::vector<RowTerm>& expect) {
  std::map<std::pair<long long, long long>, Rational> want;
  for (const RowTerm& t : expect) want[{t.r2, t.s2}] = frac(t.num, t.den);
  std::map<std::pair<long long, long long>, Rational> got;
  for (const auto& [key, coeff] : f.terms())
    if (key.n24 == n24) got[{key.r2, key.s2}] = coeff;
  return got == want;
}

void golden_rows(long long, CriterionResult& r) {
  const auto t0 = Clock::now();
  const long long prec = 96;
  const JacobiSeries ph = phi_m1_half(prec);
  const JacobiSeries p01 = phi_0_1(prec);
  const JacobiSeries p03 = phi_0_3half(prec);
  const JacobiSeries a3 = Phi_m3_A2(prec);
  const JacobiSeries a2 = Phi_m2_A2(prec);
  const JacobiSeries a0 = Phi_0_A2(prec);
  const JacobiSeries d5 = Phi_0_323(prec);
  const JacobiSeries d8 = Phi_0_313(prec);

  std::vector<std::string> bad;
  auto check = [&bad](const char* label, const JacobiSeries& f, long long n24,
                      const std::vector<RowTerm>& row) {
    if (!row_matches(f, n24, row))
      bad.push_back(std::string(label) + " row at q^" +
                    std::to_string(n24 / 24));
  };

  check("phi_-1_1/2", ph, 0, {{-1, 0, -1}, {1, 0, 1}});
  check("phi_-1_1/2", ph, 24,
        {{-3, 0, 1}, {-1, 0, -3}, {1, 0, 3}, {3, 0, -1}});
  check("phi_0_1", p01, 0, {{-2, 0, 1}, {0, 0, 10}, {2, 0, 1}});
  check("phi_0_1", p01, 24,
        {{-4, 0, 10}, {-2, 0, -64}, {0, 0, 108}, {2, 0, -64}, {4, 0, 10}});
  check("phi_0_3/2", p03, 0, {{-1, 0, 1}, {1, 0, 1}});
  check("phi_0_3/2", p03, 24,
        {{-5, 0, -1}, {-1, 0, 1}, {1, 0, 1}, {5, 0, -1}});
  check("Phi_-3_A2", a3, 0,
        {{-2, -2, -1}, {-2, 0, 1}, {0, -2, 1}, {0, 2, -1}, {2, 0, -1},
         {2, 2, 1}});
  check("Phi_-2_A2", a2, 0,
        {{-2, -2, 1}, {-2, 0, 1}, {0, -2, 1}, {0, 0, -6}, {0, 2, 1},
         {2, 0, 1}, {2, 2, 1}});
  check("Phi_0_A2", a0, 0,
        {{-2, -2, 1}, {-2, 0, 1}, {0, -2, 1}, {0, 0, 18}, {0, 2, 1},
         {2, 0, 1}, {2, 2, 1}});
  check("Phi_0_323", d5, 0,
        {{-3, -3, -1, 2}, {-3, -1, 1, 2}, {-1, -3, 1, 2}, {-1, -1, 11, 2},
         {1, 1, 11, 2}, {1, 3, 1, 2}, {3, 1, 1, 2}, {3, 3, -1, 2}});
  check("Phi_0_313", d8, 0,
        {{-3, -3, -1, 2}, {-3, 1, 1, 2}, {-1, -1, 103, 2}, {-1, 1, 20},
         {-1, 3, 1, 2}, {1, -3, 1, 2}, {1, -1, 20}, {1, 1, 103, 2},
         {3, -1, 1, 2}, {3, 3, -1, 2}});

  finish(r, bad, seconds_since(t0), 10, "11 rows reproduced exactly");
}

void pullback_identities(long long, CriterionResult& r) {
  const auto t0 = Clock::now();
  const long long prec = 241;
  const JacobiSeries d5 = Phi_0_323(prec);
  const JacobiSeries d8 = Phi_0_313(prec);
  const JacobiSeries p01 = phi_0_1(prec);
  const JacobiSeries p03 = phi_0_3half(prec);

  std::vector<std::string> bad;
  if (!equals_to_precision(pullback_p(d5), p01, prec))
    bad.push_back("Phi_0_323 at w = -z");
  if (!equals_to_precision(pullback_q(d5), frac(6) * p03, prec))
    bad.push_back("Phi_0_323 at w = 0");
  if (!equals_to_precision(pullback_p(d8), p01 * p01, prec))
    bad.push_back("Phi_0_313 at w = -z");
  if (!equals_to_precision(pullback_q(d8), frac(72) * p03, prec))
    bad.push_back("Phi_0_313 at w = 0");
  finish(r, bad, seconds_since(t0), 30, "four pullbacks exact through q^10");
}

void phi_product_identity(long long, CriterionResult& r) {
  const auto t0 = Clock::now();
  const long long prec = 193;
  const JacobiSeries sum = embed(phi_m1_half(prec), Direction::zw);
  const JacobiSeries lhs = sum * substitute(sum, map_negate_w);
  const JacobiSeries p2 = phi_m2_1(prec);
  const JacobiSeries p0 = phi_0_1(prec);
  const JacobiSeries rhs = embed(p2, Direction::z) * embed(p0, Direction::w) -
                           embed(p0, Direction::z) * embed(p2, Direction::w);
  std::vector<std::string> bad;
  if (!equals_to_precision(lhs, frac(1, 12) * rhs, prec))
    bad.push_back("the two sides differ below q^8");
  finish(r, bad, seconds_since(t0), 0, "product identity exact through q^8");
}

void operator_kernels(long long, CriterionResult& r) {
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  const JacobiSeries th = theta(481);
  const SeriesIndex half{RankOneIndex{1}};
  if (!heat(th, half).is_zero()) bad.push_back("heat does not annihilate theta");
  if (!serre(th, 1, half).is_zero())
    bad.push_back("Serre derivative does not annihilate theta");
  const long long prec = 241;
  const JacobiSeries lhs =
      pow(eisenstein(4, prec), 3) - pow(eisenstein(6, prec), 2);
  if (!equals_to_precision(lhs, frac(1728) * eta_power(24, prec), prec))
    bad.push_back("E4^3 - E6^2 differs from 1728 eta^24");
  finish(r, bad, seconds_since(t0), 0,
         "kernels vanish through q^20, discriminant matches through q^10");
}

void hilbert_cross_check(long long, CriterionResult& r) {
  const auto t0 = Clock::now();
  const int order = 6;
  const HilbertNumeratorTable table(order);
  std::vector<LaurentPoly> grid((order + 1) * (order + 1) * (order + 1));
  auto at = [&grid](int a, int b, int c) -> LaurentPoly& {
    return grid[(a * (order + 1) + b) * (order + 1) + c];
  };
  for (int a = 0; a <= order; ++a)
    for (int b = 0; b <= order; ++b)
      for (int c = 0; c <= order; ++c)
        at(a, b, c) = generator_weights(IndexMatrix{a, b, c});

  std::vector<std::string> bad;
  for (int a = 0; a <= order; ++a)
    for (int b = 0; b <= order; ++b)
      for (int c = 0; c <= order; ++c) {
        const std::string cell = index_str(IndexMatrix{a, b, c});
        if (at(a, b, c) != table.coefficient(a, b, c))
          bad.push_back("generating function differs at " + cell);
        std::array<int, 3> s{a, b, c};
        std::sort(s.begin(), s.end());
        if (at(a, b, c) != at(s[0], s[1], s[2]))
          bad.push_back("not symmetric at " + cell);
      }
  for (int a = 0; a <= order; ++a)
    for (int c = 0; c <= order; ++c)
      if (at(a, 0, c) != rank_one_numerator(a) * rank_one_numerator(c))
        bad.push_back("b = 0 numerator does not split at " +
                      index_str(IndexMatrix{a, 0, c}));
  finish(r, bad, seconds_since(t0), 60,
         "343 weight numerators match, S3-symmetric, b = 0 row splits");
}

void determinant_specialization(long long, CriterionResult& r) {
  const auto t0 = Clock::now();
  const int order = 6;
  const DeterminantTable table(order);
  std::vector<std::string> bad;
  for (int a = 0; a <= order; ++a)
    for (int b = 0; b <= order; ++b)
      for (int c = 0; c <= order; ++c) {
        const IndexMatrix m{a, b, c};
        if (m.det() == 0) continue;
        if (generator_weights(m).eval_at_one() != m.det())
          bad.push_back("t = 1 value differs at " + index_str(m));
        if (table.coefficient(a, b, c) != m.det())
          bad.push_back("table value differs at " + index_str(m));
      }
  finish(r, bad, seconds_since(t0), 0,
         "t = 1 specialization equals the determinant on the order-6 grid");
}

void minimal_weight_dims(long long, CriterionResult& r) {
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  const int order = 6;
  for (int a = 0; a <= order; ++a)
    for (int b = 0; b <= order; ++b)
      for (int c = 0; c <= order; ++c) {
        const IndexMatrix m{a, b, c};
        const std::array<long long, 3> want{
            1, (a != 0 && b != 0 && c != 0) ? 1LL : 0LL,
            static_cast<long long>((a >= 2) + (b >= 2) + (c >= 2))};
        if (min_weight_dims(m) != want) {
          bad.push_back("closed form differs at " + index_str(m));
          continue;
        }
        const LaurentPoly w = generator_weights(m);
        const long long e = m.min_weight();
        if (w.coeff(e) != want[0] || w.coeff(e + 1) != want[1] ||
            w.coeff(e + 2) != want[2])
          bad.push_back("numerator differs at " + index_str(m));
      }

  // Every theta block on the a + b + c <= 6 grid is a weak form of the
  // advertised weight and index; the companion block exists exactly when all
  // three exponents are positive.
  const long long prec = 241;
  for (int a = 0; a <= order; ++a)
    for (int b = 0; a + b <= order; ++b)
      for (int c = 0; a + b + c <= order; ++c) {
        const IndexMatrix m{a, b, c};
        const JacobiSeries tb = theta_block(a, b, c, prec);
        const GramMatrix* g = std::get_if<GramMatrix>(&tb.index());
        if (tb.weight2() != 2 * m.min_weight() || g == nullptr ||
            g->a() != a || g->b() != b || g->c() != c) {
          bad.push_back("theta block metadata at " + index_str(m));
        } else if (tb.is_zero() || tb.valuation24() < 0) {
          bad.push_back("theta block not weak at " + index_str(m));
        }
        bool threw = false;
        try {
          theta_block_plus(a, b, c, 25);
        } catch (const std::domain_error&) {
          threw = true;
        }
        if (threw != (a == 0 || b == 0 || c == 0))
          bad.push_back("companion block domain at " + index_str(m));
      }
  finish(r, bad, seconds_since(t0), 0,
         "lowest three dimensions match, 84 theta blocks weak through q^10");
}

void structure_grid(long long grid_bound, CriterionResult& r) {
  const auto t0 = Clock::now();
  const auto cells = verify_grid(grid_bound, false, 144);
  std::vector<std::string> bad;
  for (const CellCheck& cell : cells)
    if (!cell.pass)
      bad.push_back("rank " + std::to_string(cell.rank_lo) + "/" +
                    std::to_string(cell.rank_hi) + " vs dim " +
                    std::to_string(cell.dim) + " at weight " +
                    std::to_string(cell.weight) + ", index " +
                    index_str(cell.index));
  finish(r, bad, seconds_since(t0), 900,
         std::to_string(cells.size()) +
             " cells: span rank equals dimension at q^6 and q^7");
}

void even_structure_grid(long long grid_bound, CriterionResult& r) {
  const auto t0 = Clock::now();
  const auto cells = verify_grid(grid_bound, true, 144);
  std::vector<std::string> bad;
  for (const CellCheck& cell : cells)
    if (!cell.pass)
      bad.push_back("rank " + std::to_string(cell.rank_lo) + "/" +
                    std::to_string(cell.rank_hi) + " vs dim " +
                    std::to_string(cell.dim) + " at weight " +
                    std::to_string(cell.weight) + ", index " +
                    index_str(cell.index));
  finish(r, bad, seconds_since(t0), 0,
         std::to_string(cells.size()) +
             " even cells: span rank equals dimension over the even catalog");
}

void odd_weight_shift(long long, CriterionResult& r) {
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  for (long long a = 1; a <= 3; ++a) {
    const IndexMatrix odd{1, 2 * a, 1};
    const IndexMatrix even{1, 2 * a - 1, 1};
    const long long kmin = odd.min_weight();
    for (long long k = kmin; k <= kmin + 8; ++k) {
      if (k % 2 == 0) continue;
      if (dim_weak(k, odd) != dim_weak(k + 1, even))
        bad.push_back("dimension mismatch at weight " + std::to_string(k) +
                      ", index " + index_str(odd));
    }
  }
  finish(r, bad, seconds_since(t0), 0,
         "odd dimensions at (1,2a,1) match even ones at (1,2a-1,1)");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(long long grid_bound) {
  struct Check {
    const char* id;
    const char* name;
    void (*body)(long long, CriterionResult&);
  };
  static constexpr Check checks[] = {
      {"fourier-rows", "golden Fourier rows", &golden_rows},
      {"pullbacks", "pullbacks of the determinant 5 and 8 forms",
       &pullback_identities},
      {"phi-identity", "two-variable phi product identity",
       &phi_product_identity},
      {"kernels-and-delta", "heat and Serre kernels, discriminant identity",
       &operator_kernels},
      {"hilbert-grid", "weight numerators against the generating function",
       &hilbert_cross_check},
      {"det-specialization", "t = 1 specialization equals the determinant",
       &determinant_specialization},
      {"minimal-weights", "lowest-weight dimensions and theta blocks",
       &minimal_weight_dims},
      {"structure-grid", "span rank equals dimension, full catalog",
       &structure_grid},
      {"even-structure-grid", "span rank equals dimension, even subring",
       &even_structure_grid},
      {"odd-index-dims", "odd-weight dimensions shift to even ones",
       &odd_weight_shift},
  };

  std::vector<CriterionResult> out;
  out.reserve(std::size(checks));
  for (const Check& c : checks) {
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    try {
      c.body(grid_bound, r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("unexpected error: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace wjf
