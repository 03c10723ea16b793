#include "wjf/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "wjf/dimension.hpp"
#include "wjf/forms.hpp"

namespace wjf {

namespace {

int find_entry(const std::vector<CatalogEntry>& catalog, const std::string& id) {
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (catalog[i].id == id) return static_cast<int>(i);
  return -1;
}

JacobiSeries rank2_one() {
  return {0, zero_index(2), kExactPrec,
          {{ExponentKey{0, 0, 0}, Rational(1)}}};
}

// Sparse integer row for fraction-free elimination, sorted by exponent.
using IntRow = std::vector<std::pair<ExponentKey, mpz_class>>;

void strip_content(IntRow& r) {
  mpz_class g(0);
  for (const auto& [key, v] : r) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [key, v] : r) v /= g;
}

// lead(p) * r - lead(r) * p; the shared leading exponent cancels.
IntRow eliminate_lead(const IntRow& r, const IntRow& p) {
  const mpz_class lr = r.front().second;
  const mpz_class lp = p.front().second;
  IntRow out;
  out.reserve(r.size() + p.size() - 2);
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, mpz_class(lp * r[i].second));
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, mpz_class(-lr * p[j].second));
      ++j;
    } else {
      mpz_class v(lp * r[i].second - lr * p[j].second);
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  strip_content(out);
  return out;
}

}  // namespace

std::string monomial_name(const Monomial& m,
                          const std::vector<CatalogEntry>& catalog) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size() && i < catalog.size(); ++i) {
    const int e = m.exponents[i];
    if (e == 0) continue;
    if (!out.empty()) out += ' ';
    out += catalog[i].id;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> enumerate_monomials(
    long long weight, const IndexMatrix& index,
    const std::vector<CatalogEntry>& catalog) {
  const int e4 = find_entry(catalog, "E4");
  const int e6 = find_entry(catalog, "E6");
  std::vector<std::size_t> carriers;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (catalog[i].index.total() > 0) carriers.push_back(i);

  std::vector<Monomial> out;
  std::vector<int> expo(catalog.size(), 0);

  auto dfs = [&](auto&& self, std::size_t ci, IndexMatrix rem,
                 long long w2) -> void {
    if (ci == carriers.size()) {
      if (rem.a != 0 || rem.b != 0 || rem.c != 0) return;
      const long long gap2 = 2 * weight - w2;
      if (gap2 < 0 || gap2 % 2 != 0) return;
      const long long gap = gap2 / 2;
      for (long long i = gap / 4; i >= 0; --i) {
        const long long rest = gap - 4 * i;
        if (rest % 6 != 0) continue;
        const long long j = rest / 6;
        if ((i > 0 && e4 < 0) || (j > 0 && e6 < 0)) continue;
        Monomial m{expo};
        if (i > 0) m.exponents[e4] = static_cast<int>(i);
        if (j > 0) m.exponents[e6] = static_cast<int>(j);
        out.push_back(std::move(m));
      }
      return;
    }
    const auto& ent = catalog[carriers[ci]];
    long long bound = rem.total();  // finite: ent has positive total
    if (ent.index.a > 0) bound = std::min(bound, rem.a / ent.index.a);
    if (ent.index.b > 0) bound = std::min(bound, rem.b / ent.index.b);
    if (ent.index.c > 0) bound = std::min(bound, rem.c / ent.index.c);
    for (long long e = bound; e >= 0; --e) {
      expo[carriers[ci]] = static_cast<int>(e);
      self(self, ci + 1,
           IndexMatrix{rem.a - e * ent.index.a, rem.b - e * ent.index.b,
                       rem.c - e * ent.index.c},
           w2 + e * ent.weight2);
    }
    expo[carriers[ci]] = 0;
  };
  dfs(dfs, 0, index, 0);
  return out;
}

JacobiSeries expand_monomial(const Monomial& m,
                             const std::vector<CatalogEntry>& catalog,
                             FormCache& cache) {
  if (m.exponents.size() != catalog.size())
    throw std::invalid_argument(
        "expand_monomial: exponent vector does not match the catalog");
  JacobiSeries acc = rank2_one();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const int e = m.exponents[i];
    if (e == 0) continue;
    JacobiSeries g = cache.get(catalog[i].id);
    if (g.rank() == 1) g = embed(g, Direction::z);
    acc = acc * pow(g, e);
  }
  return acc;
}

int span_rank(const std::vector<JacobiSeries>& rows, long long prec24) {
  std::vector<IntRow> mat;
  for (const auto& f : rows) {
    if (f.prec24() < prec24)
      throw std::invalid_argument(
          "span_rank: row precision below the requested bound");
    mpz_class denom(1);
    for (const auto& [key, c] : f.terms()) {
      if (key.n24 >= prec24) break;
      denom = lcm(denom, mpz_class(c.get_den()));
    }
    IntRow r;
    for (const auto& [key, c] : f.terms()) {
      if (key.n24 >= prec24) break;
      r.emplace_back(key, mpz_class(mpq_class(c * denom).get_num()));
    }
    if (r.empty()) continue;
    strip_content(r);
    mat.push_back(std::move(r));
  }

  std::stable_sort(mat.begin(), mat.end(),
                   [](const IntRow& x, const IntRow& y) {
                     return x.size() > y.size();
                   });

  std::map<ExponentKey, IntRow> pivots;
  int rank = 0;
  for (auto& r : mat) {
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) break;
      r = eliminate_lead(r, it->second);
    }
    if (r.empty()) continue;
    ++rank;
    pivots.emplace(r.front().first, std::move(r));
  }
  return rank;
}

Decomposition decompose(const JacobiSeries& target,
                        const std::vector<Monomial>& monomials,
                        const std::vector<CatalogEntry>& catalog,
                        FormCache& cache, long long prec24) {
  if (target.prec24() < prec24)
    throw std::invalid_argument(
        "decompose: target precision below the requested bound");

  std::vector<JacobiSeries> cols;
  cols.reserve(monomials.size());
  for (const auto& m : monomials) {
    JacobiSeries f = expand_monomial(m, catalog, cache);
    if (f.prec24() < prec24)
      throw std::invalid_argument(
          "decompose: expansion precision below the requested bound");
    if (f.weight2() != target.weight2() ||
        !index_equal(f.index(), target.index()))
      throw std::invalid_argument("decompose: monomial " +
                                  monomial_name(m, catalog) +
                                  " does not match the target weight/index");
    cols.push_back(std::move(f));
  }

  std::set<ExponentKey> keys;
  auto collect = [&](const JacobiSeries& f) {
    for (const auto& [key, c] : f.terms()) {
      if (key.n24 >= prec24) break;
      keys.insert(key);
    }
  };
  collect(target);
  for (const auto& f : cols) collect(f);

  const std::size_t m = monomials.size();
  struct Eq {
    std::vector<Rational> a;
    Rational rhs;
    std::size_t pivot = 0;
  };
  std::vector<Eq> echelon;

  auto coeff_at = [](const JacobiSeries& f, const ExponentKey& key) {
    const auto it = f.terms().find(key);
    return it == f.terms().end() ? Rational(0) : it->second;
  };

  Decomposition result;
  result.monomials = monomials;

  for (const auto& key : keys) {
    Eq eq;
    eq.a.resize(m);
    for (std::size_t j = 0; j < m; ++j) eq.a[j] = coeff_at(cols[j], key);
    eq.rhs = coeff_at(target, key);

    for (const auto& row : echelon) {
      if (eq.a[row.pivot] == 0) continue;
      const Rational f(eq.a[row.pivot] / row.a[row.pivot]);
      for (std::size_t j = 0; j < m; ++j)
        eq.a[j] = Rational(eq.a[j] - f * row.a[j]);
      eq.rhs = Rational(eq.rhs - f * row.rhs);
    }

    std::size_t pivot = m;
    for (std::size_t j = 0; j < m; ++j)
      if (eq.a[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot == m) {
      if (eq.rhs != 0) {
        result.ok = false;
        result.first_unmatched = key;
        return result;
      }
      continue;
    }
    eq.pivot = pivot;
    echelon.push_back(std::move(eq));
  }

  std::vector<Rational> x(m, Rational(0));
  for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
    Rational acc = it->rhs;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == it->pivot) continue;
      if (it->a[j] != 0) acc = Rational(acc - it->a[j] * x[j]);
    }
    x[it->pivot] = Rational(acc / it->a[it->pivot]);
  }

  result.ok = true;
  result.coefficients = std::move(x);
  return result;
}

namespace {

CellCheck finish_cell(long long weight, const IndexMatrix& index,
                      const std::vector<JacobiSeries>& rows,
                      std::size_t monomial_count, long long prec24) {
  CellCheck cell;
  cell.index = index;
  cell.weight = weight;
  cell.monomials = monomial_count;
  cell.rank_lo = span_rank(rows, prec24);
  cell.rank_hi = span_rank(rows, prec24 + 24);
  cell.dim = dim_weak(weight, index);
  if (cell.rank_lo > cell.dim || cell.rank_hi > cell.dim)
    throw std::logic_error("span rank exceeds the dimension at weight " +
                           std::to_string(weight) + ", index " +
                           index_str(index));
  cell.pass = cell.rank_lo == cell.dim && cell.rank_hi == cell.dim;
  return cell;
}

// Splits each monomial into its index-carrying part and the E4^i E6^j
// filler; both factors are memoized so grid cells share expansions.
class GridExpander {
 public:
  GridExpander(const std::vector<CatalogEntry>& catalog, long long prec24)
      : catalog_(catalog),
        cache_(prec24),
        e4_(find_entry(catalog, "E4")),
        e6_(find_entry(catalog, "E6")) {}

  FormCache& cache() { return cache_; }

  JacobiSeries expand(const Monomial& m) {
    std::vector<int> part = m.exponents;
    int i = 0, j = 0;
    if (e4_ >= 0) {
      i = part[e4_];
      part[e4_] = 0;
    }
    if (e6_ >= 0) {
      j = part[e6_];
      part[e6_] = 0;
    }
    auto it = parts_.find(part);
    if (it == parts_.end())
      it = parts_.emplace(part, expand_monomial(Monomial{part}, catalog_, cache_))
               .first;
    if (i == 0 && j == 0) return it->second;
    return it->second * filler(i, j);
  }

 private:
  const JacobiSeries& filler(int i, int j) {
    auto it = fillers_.find({i, j});
    if (it == fillers_.end()) {
      JacobiSeries f = pow(embed(cache_.get("E4"), Direction::z), i) *
                       pow(embed(cache_.get("E6"), Direction::z), j);
      it = fillers_.emplace(std::make_pair(i, j), std::move(f)).first;
    }
    return it->second;
  }

  const std::vector<CatalogEntry>& catalog_;
  FormCache cache_;
  int e4_;
  int e6_;
  std::map<std::vector<int>, JacobiSeries> parts_;
  std::map<std::pair<int, int>, JacobiSeries> fillers_;
};

}  // namespace

CellCheck verify_dimension(long long weight, const IndexMatrix& index,
                           long long prec24, bool even_only) {
  const auto& catalog =
      even_only ? even_generator_catalog() : generator_catalog();
  FormCache cache(prec24 + 24);
  const auto monomials = enumerate_monomials(weight, index, catalog);
  std::vector<JacobiSeries> rows;
  rows.reserve(monomials.size());
  for (const auto& m : monomials)
    rows.push_back(expand_monomial(m, catalog, cache));
  return finish_cell(weight, index, rows, monomials.size(), prec24);
}

std::vector<CellCheck> verify_grid(long long grid_bound, bool even_only,
                                   long long prec24) {
  const auto& catalog =
      even_only ? even_generator_catalog() : generator_catalog();
  GridExpander expander(catalog, prec24 + 24);
  std::vector<CellCheck> out;
  const long long step = even_only ? 2 : 1;
  for (long long a = 0; a <= grid_bound; ++a) {
    for (long long b = 0; a + b <= grid_bound; ++b) {
      for (long long c = 0; a + b + c <= grid_bound; ++c) {
        if (even_only && (a % 2 || b % 2 || c % 2)) continue;
        const IndexMatrix index{a, b, c};
        const long long kmin = index.min_weight();
        for (long long k = kmin; k <= kmin + 8; k += step) {
          const auto monomials = enumerate_monomials(k, index, catalog);
          std::vector<JacobiSeries> rows;
          rows.reserve(monomials.size());
          for (const auto& m : monomials) rows.push_back(expander.expand(m));
          out.push_back(finish_cell(k, index, rows, monomials.size(), prec24));
        }
      }
    }
  }
  return out;
}

}  // namespace wjf
