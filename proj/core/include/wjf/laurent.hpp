#pragma once

#include <map>
#include <string>

namespace wjf {

// Laurent polynomial in one variable t with integer coefficients. Used for
// graded dimension counts, so long long is ample. Zero coefficients are never
// stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(long long exp, long long coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) p.coef_[exp] = coeff;
    return p;
  }

  const std::map<long long, long long>& coefficients() const { return coef_; }
  bool is_zero() const { return coef_.empty(); }

  long long coeff(long long exp) const {
    auto it = coef_.find(exp);
    return it == coef_.end() ? 0 : it->second;
  }

  long long eval_at_one() const {
    long long s = 0;
    for (const auto& [e, c] : coef_) s += c;
    return s;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coef_) {
      auto it = coef_.find(e);
      if (it == coef_.end()) {
        coef_[e] = c;
      } else if ((it->second += c) == 0) {
        coef_.erase(it);
      }
    }
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coef_) {
      auto it = coef_.find(e);
      if (it == coef_.end()) {
        coef_[e] = -c;
      } else if ((it->second -= c) == 0) {
        coef_.erase(it);
      }
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coef_)
      for (const auto& [eb, cb] : b.coef_) out += monomial(ea + eb, ca * cb);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // "t^-3 + 2 t^-1 + 1" with exponents ascending; "0" when empty.
  std::string str() const;

 private:
  std::map<long long, long long> coef_;
};

}  // namespace wjf
