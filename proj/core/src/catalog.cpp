#include "wjf/catalog.hpp"

#include <stdexcept>

#include "wjf/forms.hpp"

namespace wjf {

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> v;
  v.push_back({"E4", 8, {0, 0, 0}});
  v.push_back({"E6", 12, {0, 0, 0}});
  v.push_back({"phi_-1_1/2@z", -2, {1, 0, 0}});
  v.push_back({"phi_-1_1/2@w", -2, {0, 0, 1}});
  v.push_back({"phi_-1_1/2@zw", -2, {0, 1, 0}});
  v.push_back({"phi_0_1@z", 0, {2, 0, 0}});
  v.push_back({"phi_0_1@w", 0, {0, 0, 2}});
  v.push_back({"phi_0_1@zw", 0, {0, 2, 0}});
  v.push_back({"phi_0_3/2@z", 0, {3, 0, 0}});
  v.push_back({"phi_0_3/2@w", 0, {0, 0, 3}});
  v.push_back({"phi_0_3/2@zw", 0, {0, 3, 0}});
  v.push_back({"Phi_-2_A2", -4, {1, 1, 1}});
  v.push_back({"Phi_0_A2", 0, {1, 1, 1}});
  v.push_back({"Phi_0_323", 0, {1, 2, 1}});
  v.push_back({"Phi_0_323|sub1", 0, {2, 1, 1}});
  v.push_back({"Phi_0_323|sub2", 0, {1, 1, 2}});
  v.push_back({"Phi_0_313", 0, {2, 1, 2}});
  v.push_back({"Phi_0_313|sub1", 0, {1, 2, 2}});
  v.push_back({"Phi_0_313|sub2", 0, {2, 2, 1}});
  return v;
}

std::vector<CatalogEntry> build_even_catalog() {
  std::vector<CatalogEntry> v;
  v.push_back({"E4", 8, {0, 0, 0}});
  v.push_back({"E6", 12, {0, 0, 0}});
  v.push_back({"phi_-2_1@z", -4, {2, 0, 0}});
  v.push_back({"phi_-2_1@w", -4, {0, 0, 2}});
  v.push_back({"phi_-2_1@zw", -4, {0, 2, 0}});
  v.push_back({"phi_0_1@z", 0, {2, 0, 0}});
  v.push_back({"phi_0_1@w", 0, {0, 0, 2}});
  v.push_back({"phi_0_1@zw", 0, {0, 2, 0}});
  v.push_back({"phi_-1_2@z", -2, {4, 0, 0}});
  v.push_back({"phi_-1_2@w", -2, {0, 0, 4}});
  v.push_back({"phi_-1_2@zw", -2, {0, 4, 0}});
  return v;
}

JacobiSeries make_base(const std::string& name, long long prec24) {
  if (name == "eta") return eta_power(1, prec24);
  if (name == "E2") return eisenstein(2, prec24);
  if (name == "E4") return eisenstein(4, prec24);
  if (name == "E6") return eisenstein(6, prec24);
  if (name == "theta") return theta(prec24);
  if (name == "phi_-1_1/2") return phi_m1_half(prec24);
  if (name == "phi_-2_1") return phi_m2_1(prec24);
  if (name == "phi_0_1") return phi_0_1(prec24);
  if (name == "phi_0_3/2") return phi_0_3half(prec24);
  if (name == "phi_-1_2") return phi_m1_2(prec24);
  if (name == "Phi_-3_A2") return Phi_m3_A2(prec24);
  if (name == "Phi_-2_A2") return Phi_m2_A2(prec24);
  if (name == "Phi_0_A2") return Phi_0_A2(prec24);
  if (name == "Phi_0_323") return Phi_0_323(prec24);
  if (name == "Phi_0_313") return Phi_0_313(prec24);
  throw std::invalid_argument("unknown form: " + name);
}

struct ParsedId {
  std::string base;
  int dir = -1;  // 0 z, 1 w, 2 zw
  int sub = 0;   // 0 none, 1 sub1, 2 sub2
};

ParsedId parse_id(const std::string& id) {
  ParsedId p;
  std::string rest = id;
  const auto bar = rest.rfind("|sub");
  if (bar != std::string::npos && bar + 5 == rest.size()) {
    const char d = rest[bar + 4];
    if (d == '1')
      p.sub = 1;
    else if (d == '2')
      p.sub = 2;
    else
      throw std::invalid_argument("unknown form: " + id);
    rest = rest.substr(0, bar);
  }
  const auto at = rest.rfind('@');
  if (at != std::string::npos) {
    const std::string dir = rest.substr(at + 1);
    if (dir == "z")
      p.dir = 0;
    else if (dir == "w")
      p.dir = 1;
    else if (dir == "zw")
      p.dir = 2;
    else
      throw std::invalid_argument("unknown form: " + id);
    rest = rest.substr(0, at);
  }
  p.base = rest;
  return p;
}

}  // namespace

const std::vector<CatalogEntry>& generator_catalog() {
  static const std::vector<CatalogEntry> v = build_catalog();
  return v;
}

const std::vector<CatalogEntry>& even_generator_catalog() {
  static const std::vector<CatalogEntry> v = build_even_catalog();
  return v;
}

const std::vector<std::string>& named_forms() {
  static const std::vector<std::string> v = {
      "eta",       "E2",         "E4",
      "E6",        "theta",      "phi_-1_1/2",
      "phi_-2_1",  "phi_0_1",    "phi_0_3/2",
      "phi_-1_2",  "Phi_-3_A2",  "Phi_-2_A2",
      "Phi_0_A2",  "Phi_0_323",  "Phi_0_313"};
  return v;
}

JacobiSeries make_form(const std::string& id, long long prec24) {
  const ParsedId p = parse_id(id);
  JacobiSeries f = make_base(p.base, prec24);
  if (p.dir >= 0) {
    if (f.rank() != 1)
      throw std::invalid_argument("form is already two-variable: " + id);
    f = embed(f, p.dir == 0   ? Direction::z
              : p.dir == 1 ? Direction::w
                           : Direction::zw);
  }
  if (p.sub != 0) {
    if (f.rank() != 2)
      throw std::invalid_argument("substitution needs a two-variable form: " + id);
    f = substitute(f, p.sub == 1 ? map_zw_minus_w : map_zw_minus_z);
  }
  return f;
}

bool is_known_form(const std::string& id) {
  try {
    const ParsedId p = parse_id(id);
    const auto& names = named_forms();
    bool found = false;
    for (const auto& n : names) found = found || n == p.base;
    if (!found) return false;
    const bool rank1 =
        p.base.empty() ? false : p.base[0] != 'P';  // Phi_* are two-variable
    if (p.dir >= 0 && !rank1) return false;
    const bool rank2_result = !rank1 || p.dir >= 0;
    if (p.sub != 0 && !rank2_result) return false;
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

const JacobiSeries& FormCache::get(const std::string& id) {
  auto it = cache_.find(id);
  if (it == cache_.end())
    it = cache_.emplace(id, make_form(id, prec24_)).first;
  return it->second;
}

}  // namespace wjf
