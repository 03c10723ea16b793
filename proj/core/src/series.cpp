#include "wjf/series.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

namespace wjf {

GramMatrix gram_of(const IndexMatrix& m) { return {m.a + m.b, m.b, m.c + m.b}; }

int index_rank(const SeriesIndex& idx) {
  return std::holds_alternative<RankOneIndex>(idx) ? 1 : 2;
}

bool index_equal(const SeriesIndex& x, const SeriesIndex& y) { return x == y; }

SeriesIndex index_sum(const SeriesIndex& x, const SeriesIndex& y) {
  if (index_rank(x) != index_rank(y))
    throw std::invalid_argument("index_sum: rank mismatch");
  if (const auto* a = std::get_if<RankOneIndex>(&x))
    return RankOneIndex{a->m2 + std::get<RankOneIndex>(y).m2};
  const auto& a = std::get<GramMatrix>(x);
  const auto& b = std::get<GramMatrix>(y);
  return GramMatrix{a.g11 + b.g11, a.g12 + b.g12, a.g22 + b.g22};
}

SeriesIndex index_difference(const SeriesIndex& x, const SeriesIndex& y) {
  if (index_rank(x) != index_rank(y))
    throw std::invalid_argument("index_difference: rank mismatch");
  if (const auto* a = std::get_if<RankOneIndex>(&x))
    return RankOneIndex{a->m2 - std::get<RankOneIndex>(y).m2};
  const auto& a = std::get<GramMatrix>(x);
  const auto& b = std::get<GramMatrix>(y);
  return GramMatrix{a.g11 - b.g11, a.g12 - b.g12, a.g22 - b.g22};
}

SeriesIndex zero_index(int rank) {
  if (rank == 1) return RankOneIndex{0};
  if (rank == 2) return GramMatrix{0, 0, 0};
  throw std::invalid_argument("zero_index: rank must be 1 or 2");
}

bool index_positive_definite(const SeriesIndex& idx) {
  if (const auto* a = std::get_if<RankOneIndex>(&idx)) return a->m2 > 0;
  const auto& g = std::get<GramMatrix>(idx);
  return g.g11 > 0 && g.det() > 0;
}

std::string index_describe(const SeriesIndex& idx) {
  if (const auto* a = std::get_if<RankOneIndex>(&idx))
    return "m2=" + std::to_string(a->m2);
  const auto& g = std::get<GramMatrix>(idx);
  return "gram[" + std::to_string(g.g11) + "," + std::to_string(g.g12) + "," +
         std::to_string(g.g22) + "]";
}

namespace {

long long sat_shift(long long prec, long long shift) {
  if (prec >= kExactPrec) return kExactPrec;
  return prec + shift;
}

std::string q_exponent_str(long long n24) {
  long long g = std::gcd(n24 < 0 ? -n24 : n24, 24LL);
  if (g == 0) g = 24;
  const long long num = n24 / g, den = 24 / g;
  std::string s = std::to_string(num);
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

}  // namespace

JacobiSeries::JacobiSeries(long long weight2, SeriesIndex index, long long prec24,
                           std::map<ExponentKey, Rational> terms)
    : index_(std::move(index)), weight2_(weight2), prec24_(prec24) {
  const int r = index_rank(index_);
  for (auto& [key, c] : terms) {
    if (r == 1 && key.s2 != 0)
      throw std::invalid_argument("JacobiSeries: rank-one term with w-exponent");
    if (key.n24 >= prec24_ || c == 0) continue;
    terms_.emplace(key, std::move(c));
  }
}

long long JacobiSeries::valuation24() const {
  return terms_.empty() ? 0 : terms_.begin()->first.n24;
}

Rational JacobiSeries::coeff(long long n24, long long r2, long long s2) const {
  if (n24 >= prec24_)
    throw std::out_of_range("coeff: exponent beyond precision guarantee");
  auto it = terms_.find(ExponentKey{n24, r2, s2});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> valuation(const JacobiSeries& f) {
  if (f.is_zero()) return std::nullopt;
  const long long v = f.valuation24();
  Rational x(static_cast<long>(v), 24L);
  x.canonicalize();
  return x;
}

namespace {

void require_same_metadata(const JacobiSeries& f, const JacobiSeries& g,
                           const char* op) {
  if (f.rank() != g.rank())
    throw std::invalid_argument(std::string(op) + ": rank mismatch (" +
                                std::to_string(f.rank()) + " vs " +
                                std::to_string(g.rank()) + ")");
  if (f.weight2() != g.weight2())
    throw std::invalid_argument(std::string(op) + ": weight mismatch (2*weight " +
                                std::to_string(f.weight2()) + " vs " +
                                std::to_string(g.weight2()) + ")");
  if (!index_equal(f.index(), g.index()))
    throw std::invalid_argument(std::string(op) + ": index mismatch (" +
                                index_describe(f.index()) + " vs " +
                                index_describe(g.index()) + ")");
}

}  // namespace

JacobiSeries operator+(const JacobiSeries& f, const JacobiSeries& g) {
  require_same_metadata(f, g, "add");
  std::map<ExponentKey, Rational> out = f.terms();
  for (const auto& [key, c] : g.terms()) out[key] += c;
  return {f.weight2(), f.index(), std::min(f.prec24(), g.prec24()), std::move(out)};
}

JacobiSeries operator-(const JacobiSeries& f, const JacobiSeries& g) {
  require_same_metadata(f, g, "sub");
  std::map<ExponentKey, Rational> out = f.terms();
  for (const auto& [key, c] : g.terms()) out[key] -= c;
  return {f.weight2(), f.index(), std::min(f.prec24(), g.prec24()), std::move(out)};
}

JacobiSeries operator-(const JacobiSeries& f) { return Rational(-1) * f; }

JacobiSeries operator*(const Rational& c, const JacobiSeries& f) {
  std::map<ExponentKey, Rational> out;
  if (c != 0)
    for (const auto& [key, x] : f.terms()) out.emplace(key, Rational(c * x));
  return {f.weight2(), f.index(), f.prec24(), std::move(out)};
}

JacobiSeries operator*(const JacobiSeries& f, const JacobiSeries& g) {
  SeriesIndex idx = index_sum(f.index(), g.index());
  const long long prec = std::min(sat_shift(f.prec24(), g.valuation24()),
                                  sat_shift(g.prec24(), f.valuation24()));
  std::map<ExponentKey, Rational> out;
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      // terms are ordered n24-major, so the remaining products all overflow
      if (kf.n24 + kg.n24 >= prec) break;
      out[ExponentKey{kf.n24 + kg.n24, kf.r2 + kg.r2, kf.s2 + kg.s2}] += cf * cg;
    }
  }
  return {f.weight2() + g.weight2(), std::move(idx), prec, std::move(out)};
}

JacobiSeries pow(const JacobiSeries& f, long long e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  JacobiSeries result(0, zero_index(f.rank()), kExactPrec,
                      {{ExponentKey{0, 0, 0}, Rational(1)}});
  JacobiSeries base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

JacobiSeries truncate(const JacobiSeries& f, long long new_prec24) {
  if (new_prec24 > f.prec24())
    throw std::invalid_argument("truncate: cannot raise precision guarantee");
  std::map<ExponentKey, Rational> out;
  for (const auto& [key, c] : f.terms()) {
    if (key.n24 >= new_prec24) break;
    out.emplace(key, c);
  }
  return {f.weight2(), f.index(), new_prec24, std::move(out)};
}

bool equals_to_precision(const JacobiSeries& f, const JacobiSeries& g,
                         long long bound24) {
  if (bound24 > f.prec24() || bound24 > g.prec24())
    throw std::invalid_argument("equals_to_precision: bound exceeds a guarantee");
  auto it = f.terms().begin(), jt = g.terms().begin();
  const auto fend = f.terms().end(), gend = g.terms().end();
  while (true) {
    const bool fa = it != fend && it->first.n24 < bound24;
    const bool ga = jt != gend && jt->first.n24 < bound24;
    if (!fa && !ga) return true;
    if (fa && ga && it->first == jt->first) {
      if (it->second != jt->second) return false;
      ++it, ++jt;
      continue;
    }
    // one side has a key the other lacks below the bound
    return false;
  }
}

namespace {

// One q-slice as a Laurent polynomial in the elliptic variables, ordered by
// total degree then r2 so the graded-lex leading term is the map maximum.
struct GradedLex {
  bool operator()(const std::pair<long long, long long>& x,
                  const std::pair<long long, long long>& y) const {
    const long long dx = x.first + x.second, dy = y.first + y.second;
    if (dx != dy) return dx < dy;
    return x.first < y.first;
  }
};

using SlicePoly = std::map<std::pair<long long, long long>, Rational, GradedLex>;

// Exact division of Laurent polynomials: strip each variable's minimal
// exponent from both operands (minimal exponents are additive under
// multiplication, so a genuine quotient survives the shift), then run long
// division by the single divisor. A leading term not divisible by the
// divisor's leading term proves non-divisibility.
std::optional<SlicePoly> slice_divide(SlicePoly t, const SlicePoly& d) {
  long long dr = d.begin()->first.first, ds = d.begin()->first.second;
  for (const auto& [e, c] : d) {
    dr = std::min(dr, e.first);
    ds = std::min(ds, e.second);
  }
  long long tr = t.begin()->first.first, ts = t.begin()->first.second;
  for (const auto& [e, c] : t) {
    tr = std::min(tr, e.first);
    ts = std::min(ts, e.second);
  }
  SlicePoly dd;
  for (const auto& [e, c] : d) dd.emplace(std::make_pair(e.first - dr, e.second - ds), c);
  SlicePoly tt;
  for (const auto& [e, c] : t) tt.emplace(std::make_pair(e.first - tr, e.second - ts), c);

  const auto& lead_d = *dd.rbegin();
  SlicePoly q;
  while (!tt.empty()) {
    const auto lead_t = *tt.rbegin();
    const long long qr = lead_t.first.first - lead_d.first.first;
    const long long qs = lead_t.first.second - lead_d.first.second;
    if (qr < 0 || qs < 0) return std::nullopt;
    Rational qc(lead_t.second / lead_d.second);
    for (const auto& [e, c] : dd) {
      const auto key = std::make_pair(e.first + qr, e.second + qs);
      auto it = tt.find(key);
      if (it == tt.end()) {
        tt.emplace(key, Rational(-qc * c));
      } else {
        it->second -= qc * c;
        if (it->second == 0) tt.erase(it);
      }
    }
    q.emplace(std::make_pair(qr + tr - dr, qs + ts - ds), std::move(qc));
  }
  return q;
}

std::map<long long, SlicePoly> slices_of(const JacobiSeries& f) {
  std::map<long long, SlicePoly> s;
  for (const auto& [key, c] : f.terms())
    s[key.n24].emplace(std::make_pair(key.r2, key.s2), c);
  return s;
}

}  // namespace

JacobiSeries divide_exact(const JacobiSeries& f, const JacobiSeries& g) {
  if (g.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (f.rank() != g.rank())
    throw std::invalid_argument("divide_exact: rank mismatch");
  const long long vg = g.valuation24();
  const long long vf = f.valuation24();
  const long long prec = std::min(sat_shift(f.prec24(), -vg),
                                  sat_shift(g.prec24(), vf - 2 * vg));
  if (prec >= kExactPrec)
    throw std::invalid_argument(
        "divide_exact: unbounded result precision; truncate the operands first");

  const long long weight2 = f.weight2() - g.weight2();
  SeriesIndex idx = index_difference(f.index(), g.index());

  const auto fs = slices_of(f);
  const auto gs = slices_of(g);
  const SlicePoly& g0 = gs.begin()->second;

  std::map<long long, SlicePoly> h;
  for (long long n = vf - vg; n < prec; ++n) {
    SlicePoly t;
    if (auto it = fs.find(n + vg); it != fs.end()) t = it->second;
    for (const auto& [m, hm] : h) {
      auto it = gs.find(n + vg - m);
      if (it == gs.end()) continue;
      for (const auto& [eh, ch] : hm)
        for (const auto& [eg, cg] : it->second) {
          const auto key =
              std::make_pair(eh.first + eg.first, eh.second + eg.second);
          auto slot = t.find(key);
          if (slot == t.end()) {
            t.emplace(key, Rational(-ch * cg));
          } else {
            slot->second -= ch * cg;
            if (slot->second == 0) t.erase(slot);
          }
        }
    }
    if (t.empty()) continue;
    auto quotient = slice_divide(std::move(t), g0);
    if (!quotient)
      throw std::domain_error("divide_exact: not divisible at q^" +
                              q_exponent_str(n + vg));
    h.emplace(n, std::move(*quotient));
  }

  std::map<ExponentKey, Rational> out;
  for (const auto& [n, poly] : h)
    for (const auto& [e, c] : poly)
      out.emplace(ExponentKey{n, e.first, e.second}, c);
  return {weight2, std::move(idx), prec, std::move(out)};
}

JacobiSeries invert_unit(const JacobiSeries& f) {
  if (f.is_zero()) throw std::domain_error("invert_unit: not unit-led");
  const long long v = f.valuation24();
  auto it = f.terms().begin();
  ++it;
  if (it != f.terms().end() && it->first.n24 == v)
    throw std::domain_error("invert_unit: not unit-led");
  JacobiSeries one(0, zero_index(f.rank()), kExactPrec,
                   {{ExponentKey{0, 0, 0}, Rational(1)}});
  return divide_exact(one, f);
}

JacobiSeries dz(const JacobiSeries& f) {
  std::map<ExponentKey, Rational> out;
  for (const auto& [key, c] : f.terms()) {
    if (key.r2 == 0) continue;
    Rational x(static_cast<long>(key.r2), 2L);
    x.canonicalize();
    out.emplace(key, Rational(c * x));
  }
  return {f.weight2() + 2, f.index(), f.prec24(), std::move(out)};
}

JacobiSeries dw(const JacobiSeries& f) {
  if (f.rank() != 2) throw std::invalid_argument("dw: requires a rank-two series");
  std::map<ExponentKey, Rational> out;
  for (const auto& [key, c] : f.terms()) {
    if (key.s2 == 0) continue;
    Rational x(static_cast<long>(key.s2), 2L);
    x.canonicalize();
    out.emplace(key, Rational(c * x));
  }
  return {f.weight2() + 2, f.index(), f.prec24(), std::move(out)};
}

JacobiSeries substitute(const JacobiSeries& f, const UnimodularMap& u) {
  if (f.rank() != 2)
    throw std::invalid_argument("substitute: requires a rank-two series");
  if (u.det() != 1 && u.det() != -1)
    throw std::invalid_argument("substitute: map is not unimodular");
  const auto& m = std::get<GramMatrix>(f.index());
  GramMatrix out_index{
      m.g11 * u.u11 * u.u11 + 2 * m.g12 * u.u11 * u.u21 + m.g22 * u.u21 * u.u21,
      m.g11 * u.u11 * u.u12 + m.g12 * (u.u11 * u.u22 + u.u12 * u.u21) +
          m.g22 * u.u21 * u.u22,
      m.g11 * u.u12 * u.u12 + 2 * m.g12 * u.u12 * u.u22 + m.g22 * u.u22 * u.u22};
  std::map<ExponentKey, Rational> out;
  for (const auto& [key, c] : f.terms())
    out.emplace(ExponentKey{key.n24, u.u11 * key.r2 + u.u21 * key.s2,
                            u.u12 * key.r2 + u.u22 * key.s2},
                c);
  return {f.weight2(), out_index, f.prec24(), std::move(out)};
}

JacobiSeries scale_z(const JacobiSeries& f, long long n) {
  if (f.rank() != 1)
    throw std::invalid_argument("scale_z: requires a rank-one series");
  if (n <= 0) throw std::invalid_argument("scale_z: factor must be positive");
  const long long m2 = std::get<RankOneIndex>(f.index()).m2;
  std::map<ExponentKey, Rational> out;
  for (const auto& [key, c] : f.terms())
    out.emplace(ExponentKey{key.n24, n * key.r2, 0}, c);
  return {f.weight2(), RankOneIndex{n * n * m2}, f.prec24(), std::move(out)};
}

JacobiSeries pullback_p(const JacobiSeries& f) {
  if (f.rank() != 2)
    throw std::invalid_argument("pullback_p: requires a rank-two series");
  const auto& m = std::get<GramMatrix>(f.index());
  std::map<ExponentKey, Rational> out;
  for (const auto& [key, c] : f.terms())
    out[ExponentKey{key.n24, key.r2 - key.s2, 0}] += c;
  return {f.weight2(), RankOneIndex{m.g11 + m.g22 - 2 * m.g12}, f.prec24(),
          std::move(out)};
}

JacobiSeries pullback_q(const JacobiSeries& f) {
  if (f.rank() != 2)
    throw std::invalid_argument("pullback_q: requires a rank-two series");
  const auto& m = std::get<GramMatrix>(f.index());
  std::map<ExponentKey, Rational> out;
  for (const auto& [key, c] : f.terms())
    out[ExponentKey{key.n24, key.r2, 0}] += c;
  return {f.weight2(), RankOneIndex{m.g11}, f.prec24(), std::move(out)};
}

}  // namespace wjf
