#pragma once

#include <map>
#include <string>
#include <vector>

#include "wjf/index.hpp"
#include "wjf/series.hpp"

namespace wjf {

// One named form together with the data the structure machinery needs to
// enumerate products: twice the weight and the index triple. Entries whose
// index is (0, 0, 0) carry no elliptic variables.
struct CatalogEntry {
  std::string id;
  long long weight2 = 0;
  IndexMatrix index;
};

// The fixed generator list used to span weak forms of general index. Order
// matters: monomial enumeration and decomposition coordinates follow it.
const std::vector<CatalogEntry>& generator_catalog();

// Restriction used when spanning forms of even weight with even-index
// entries only.
const std::vector<CatalogEntry>& even_generator_catalog();

// Base names accepted by make_form, without direction or substitution
// suffixes.
const std::vector<std::string>& named_forms();

// Builds the series named by id at the given precision. An id is a base name,
// optionally followed by "@z", "@w" or "@zw" (embeds a one-variable form into
// two variables) and then optionally "|sub1" or "|sub2" (unimodular
// substitutions permuting the index triple as (a,b,c) -> (b,a,c) and
// (a,b,c) -> (c,a,b) respectively). Directions apply only to one-variable
// bases and substitutions only to two-variable results; anything else throws
// std::invalid_argument.
JacobiSeries make_form(const std::string& id, long long prec24);

bool is_known_form(const std::string& id);

// Memoizes make_form at one fixed precision. Grid checks expand the same
// generators for many cells; the cache keeps each expansion single. Not
// safe for concurrent use; create one per thread of work.
class FormCache {
 public:
  explicit FormCache(long long prec24) : prec24_(prec24) {}

  long long prec24() const { return prec24_; }

  const JacobiSeries& get(const std::string& id);

 private:
  long long prec24_;
  std::map<std::string, JacobiSeries> cache_;
};

}  // namespace wjf
