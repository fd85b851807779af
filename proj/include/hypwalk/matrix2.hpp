#pragma once

#include <gmpxx.h>

#include "hypwalk/framing.hpp"
#include "hypwalk/laurent.hpp"

namespace hypwalk {

template <class T>
struct Matrix2 {
  T a{}, b{}, c{}, d{};

  static Matrix2 identity() { return {T(1), T(0), T(0), T(1)}; }

  Matrix2 operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Matrix2& operator*=(const Matrix2& o) { return *this = *this * o; }
  bool operator==(const Matrix2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
  Matrix2 transpose() const { return {a, c, b, d}; }
};

using Matrix2d = Matrix2<double>;
using Matrix2q = Matrix2<mpq_class>;
using Matrix2L = Matrix2<LaurentPoly>;

inline Matrix2d inverse(const Matrix2d& m) {
  double det = m.det();
  return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

// Generator matrix of one letter in floating mode.
//   HeckeAB:   a = S, b = S T_q with T_q = [[1, 2cos(pi/q)], [0, 1]]
//   ModularST: S, T
//   SigmaBar:  sbar1 = ab, sbar2 = ba (q = 3)
//   BraidSigma/BraidTilde/MagnusU: normalized Magnus matrices at u (framing.u)
//   Idempotent(m): backbone involutions b^-i a b^i of H_m
//   FreeBasis(r <= 2): h1 = [[1,2],[0,1]], h2 = [[1,0],[2,1]]
Matrix2d letter_matrix(const Framing& f, int letter);

// Exact rational mode.  Braid framings use the Magnus matrices at the rational parameter t.
Matrix2q letter_matrix_rational(const Framing& f, int letter, const mpq_class& t = mpq_class(-1));

// Magnus matrices over Laurent polynomials (braid framings only).
Matrix2L letter_matrix_laurent(const Framing& f, int letter);

Matrix2d matrix_of_word(const Word& w);
Matrix2q matrix_of_word_rational(const Word& w, const mpq_class& t = mpq_class(-1));
Matrix2L matrix_of_word_laurent(const Word& w);

// In-place right multiplication of a Laurent matrix by sigma_i^{+-1}; shifts and adds only.
void right_multiply_sigma(Matrix2L& m, int letter);

}  // namespace hypwalk
