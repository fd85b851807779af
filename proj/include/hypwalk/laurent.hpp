#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace hypwalk {

// Laurent polynomial in t with rational coefficients.  Stored densely from exponent low();
// always trimmed so that the first and last stored coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(implicit)
  LaurentPoly(const mpq_class& c);  // NOLINT(implicit)
  static LaurentPoly monomial(const mpq_class& c, int exponent);
  // from coefficients of t^low, t^(low+1), ...
  static LaurentPoly from_coeffs(int low, std::vector<mpq_class> coeffs);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  mpq_class coeff(int exponent) const;
  std::size_t terms() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }

  // multiply by c * t^k
  LaurentPoly scaled(const mpq_class& c, int k) const;
  // exact quotient if o divides *this, otherwise nullopt
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& o) const;

  mpq_class evaluate(const mpq_class& t) const;
  double evaluate(double t) const;

  std::string to_string() const;
  // {"exponent": "num/den", ...}
  std::string to_json() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<mpq_class> c_;
};

}  // namespace hypwalk
