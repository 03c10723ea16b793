#include "wjf/series_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "wjf/rational.hpp"

namespace wjf {

namespace {

// Exponent in half-integer units: 2 -> "z", -2 -> "z^-1", -3 -> "z^-3/2".
std::string var_str(const char* name, long long e2) {
  if (e2 == 2) return name;
  std::string s(name);
  s += '^';
  if (e2 % 2 == 0)
    s += std::to_string(e2 / 2);
  else
    s += std::to_string(e2) + "/2";
  return s;
}

std::string q_exp_str(long long n24) {
  const long long g = std::gcd(std::llabs(n24), 24LL);
  const long long num = n24 / g, den = 24 / g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

struct SliceTerm {
  long long r2;
  long long s2;
  Rational coeff;
};

long long sgn(long long x) { return (x > 0) - (x < 0); }

// Total elliptic degree ascending, then distance from the diagonal signed to
// put z-heavy terms first, then plain (r2, s2).
bool term_before(const SliceTerm& x, const SliceTerm& y) {
  const long long sx = x.r2 + x.s2, sy = y.r2 + y.s2;
  if (sx != sy) return sx < sy;
  const long long dx = (x.r2 - x.s2) * sgn(sx), dy = (y.r2 - y.s2) * sgn(sy);
  if (dx != dy) return dx > dy;
  if (x.r2 != y.r2) return x.r2 < y.r2;
  return x.s2 < y.s2;
}

std::string slice_str(std::vector<SliceTerm>& terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool neg = t.coeff < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    Rational mag(abs(t.coeff));
    std::string vars;
    if (t.r2 != 0) vars = var_str("z", t.r2);
    if (t.s2 != 0) {
      if (!vars.empty()) vars += ' ';
      vars += var_str("w", t.s2);
    }
    if (vars.empty())
      out += rational_str(mag);
    else if (mag == 1)
      out += vars;
    else
      out += rational_str(mag) + " " + vars;
  }
  return out;
}

}  // namespace

std::string render_text(const JacobiSeries& f) {
  if (f.terms().empty()) return "0";
  std::map<long long, std::vector<SliceTerm>> slices;
  for (const auto& [key, c] : f.terms())
    slices[key.n24].push_back({key.r2, key.s2, c});
  std::string out;
  bool first = true;
  for (auto& [n24, terms] : slices) {
    if (!first) out += " +\n";
    first = false;
    out += "(" + slice_str(terms) + ") q^" + q_exp_str(n24);
  }
  return out;
}

std::string to_json(const JacobiSeries& f) {
  nlohmann::json j;
  if (f.weight2() % 2 == 0)
    j["weight"] = f.weight2() / 2;
  else
    j["weight2"] = f.weight2();
  j["rank"] = f.rank();
  if (f.rank() == 1) {
    j["index"] = {{"m2", std::get<RankOneIndex>(f.index()).m2}};
  } else {
    const auto& g = std::get<GramMatrix>(f.index());
    j["index"] = {{"a", g.a()}, {"b", g.b()}, {"c", g.c()}};
  }
  j["prec24"] = f.prec24();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : f.terms()) {
    terms.push_back({{"n24", key.n24},
                     {"r2", key.r2},
                     {"s2", key.s2},
                     {"coeff", rational_str(c)}});
  }
  j["terms"] = std::move(terms);
  return j.dump(1);
}

JacobiSeries series_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object())
      throw std::invalid_argument("series_from_json: top level must be an object");

    const bool has_w = j.contains("weight"), has_w2 = j.contains("weight2");
    if (has_w == has_w2)
      throw std::invalid_argument(
          "series_from_json: exactly one of weight and weight2 is required");
    const long long weight2 = has_w ? 2 * j.at("weight").get<long long>()
                                    : j.at("weight2").get<long long>();

    const int rank = j.at("rank").get<int>();
    if (rank != 1 && rank != 2)
      throw std::invalid_argument("series_from_json: rank must be 1 or 2");

    const auto& idx = j.at("index");
    SeriesIndex index = zero_index(rank);
    if (rank == 1) {
      if (!idx.contains("m2"))
        throw std::invalid_argument(
            "series_from_json: rank-one index needs field m2");
      index = RankOneIndex{idx.at("m2").get<long long>()};
    } else {
      if (!idx.contains("a") || !idx.contains("b") || !idx.contains("c"))
        throw std::invalid_argument(
            "series_from_json: rank-two index needs fields a, b, c");
      const long long a = idx.at("a").get<long long>();
      const long long b = idx.at("b").get<long long>();
      const long long c = idx.at("c").get<long long>();
      index = GramMatrix{a + b, b, c + b};
    }

    const long long prec24 = j.at("prec24").get<long long>();

    std::map<ExponentKey, Rational> terms;
    for (const auto& t : j.at("terms")) {
      ExponentKey key{t.at("n24").get<long long>(), t.at("r2").get<long long>(),
                      t.at("s2").get<long long>()};
      const Rational c = parse_rational(t.at("coeff").get<std::string>());
      if (!terms.emplace(key, c).second)
        throw std::invalid_argument("series_from_json: duplicate term");
    }
    return {weight2, index, prec24, std::move(terms)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("series_from_json: ") + e.what());
  }
}

}  // namespace wjf
