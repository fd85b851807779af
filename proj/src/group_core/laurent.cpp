#include "hypwalk/laurent.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace hypwalk {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(mpq_class(c)) {}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const mpq_class& c, int exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<mpq_class> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<mpq_class>(c_.begin() + first, c_.begin() + last);
    low_ += static_cast<int>(first);
  }
}

mpq_class LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return 0;
  return c_[e - low_];
}

std::size_t LaurentPoly::terms() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const mpq_class& x) { return x != 0; }));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<mpq_class> r(hi - lo + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[low_ - lo + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[o.low_ - lo + i] += o.c_[i];
  return from_coeffs(lo, std::move(r));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return from_coeffs(low_ + o.low_, std::move(r));
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c, int k) const {
  if (c == 0 || is_zero()) return {};
  LaurentPoly r = *this;
  r.low_ += k;
  if (c != 1)
    for (auto& x : r.c_) x *= c;
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly{};
  // long division from the top, with both shifted to start at t^0
  std::vector<mpq_class> rem = c_;
  const auto& d = o.c_;
  if (rem.size() < d.size()) return std::nullopt;
  std::vector<mpq_class> quo(rem.size() - d.size() + 1);
  for (std::size_t k = quo.size(); k-- > 0;) {
    mpq_class f = rem[k + d.size() - 1] / d.back();
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return from_coeffs(low_ - o.low_, std::move(quo));
}

mpq_class LaurentPoly::evaluate(const mpq_class& t) const {
  if (is_zero()) return 0;
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  mpq_class p = 1;
  int e = low_;
  mpq_class base = e >= 0 ? t : mpq_class(1) / t;
  for (int k = 0; k < std::abs(e); ++k) p *= base;
  return acc * p;
}

double LaurentPoly::evaluate(double t) const {
  double acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i].get_d();
  return acc * std::pow(t, low_);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (!s.empty())
      s += neg ? " - " : " + ";
    else if (neg)
      s += "-";
    bool unit = a == 1;
    if (!unit || e == 0) s += a.get_str();
    if (e != 0) {
      if (!unit) s += "*";
      s += "t";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

std::string LaurentPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) j[std::to_string(low_ + static_cast<int>(i))] = c_[i].get_str();
  return j.dump();
}

}  // namespace hypwalk
