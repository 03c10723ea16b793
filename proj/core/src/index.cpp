#include "wjf/index.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace wjf {

namespace {

const std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

IndexMatrix apply_perm(const IndexMatrix& m, const std::array<int, 3>& p) {
  const std::array<long long, 3> in = {m.a, m.b, m.c};
  return IndexMatrix{in[p[0]], in[p[1]], in[p[2]]};
}

}  // namespace

IndexMatrix index_from_gram(long long g11, long long g12, long long g22) {
  if (g12 < 0 || g11 < g12 || g22 < g12)
    throw std::invalid_argument(
        "index_from_gram: matrix is outside the nonnegative-triple cone "
        "(need g11 >= g12 >= 0 and g22 >= g12); change basis first");
  return IndexMatrix{g11 - g12, g12, g22 - g12};
}

std::vector<IndexMatrix> anharmonic_orbit(const IndexMatrix& m) {
  std::set<IndexMatrix> seen;
  for (const auto& p : kPerms) seen.insert(apply_perm(m, p));
  return {seen.begin(), seen.end()};
}

ReducedIndex reduce(const IndexMatrix& m) {
  ReducedIndex best{apply_perm(m, kPerms[0]), kPerms[0]};
  auto key = [](const IndexMatrix& x) { return std::array<long long, 3>{x.b, x.a, x.c}; };
  for (const auto& p : kPerms) {
    const IndexMatrix cand = apply_perm(m, p);
    if (key(cand) < key(best.index)) best = ReducedIndex{cand, p};
  }
  return best;
}

IndexMatrix parse_index(const std::string& text) {
  std::string body = text;
  bool gram = false;
  if (body.rfind("gram:", 0) == 0) {
    gram = true;
    body = body.substr(5);
  }

  std::array<long long, 3> v{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t next = body.find(',', pos);
    if ((i < 2) != (next != std::string::npos))
      throw std::invalid_argument("parse_index: expected three comma-separated integers in '" + text + "'");
    const std::string piece = body.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      std::size_t used = 0;
      v[i] = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_index: malformed integer '" + piece + "' in '" + text + "'");
    }
    pos = next == std::string::npos ? body.size() : next + 1;
  }

  if (gram) return index_from_gram(v[0], v[1], v[2]);
  if (v[0] < 0 || v[1] < 0 || v[2] < 0)
    throw std::invalid_argument("parse_index: triple entries must be nonnegative in '" + text + "'");
  return IndexMatrix{v[0], v[1], v[2]};
}

std::string index_str(const IndexMatrix& m) {
  return std::to_string(m.a) + "," + std::to_string(m.b) + "," + std::to_string(m.c);
}

}  // namespace wjf
