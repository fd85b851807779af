#include "hypwalk/matrix2.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hypwalk/errors.hpp"

namespace hypwalk {

namespace {

Matrix2d hecke_a() { return {0, 1, -1, 0}; }
Matrix2d hecke_b(int q) { return {0, 1, -1, -2 * std::cos(std::numbers::pi / q)}; }

Matrix2d power(const Matrix2d& m, int k) {
  Matrix2d r = Matrix2d::identity();
  for (int i = 0; i < k; ++i) r *= m;
  return r;
}

Matrix2d magnus_u(double u, int letter) {
  Matrix2d s1{u, 1 / u, 0, 1 / u}, s2{1 / u, 0, -u, u};
  switch (letter) {
    case 1: return s1;
    case -1: return inverse(s1);
    case 2: return s2;
    default: return inverse(s2);
  }
}

// tilde letters as sigma products: atilde = s1 s2 s1, btilde = s1^-1 s2^-1
template <class M, class F>
M tilde(int letter, F sigma) {
  M at = sigma(1) * sigma(2) * sigma(1);
  M bt = sigma(-1) * sigma(-2);
  switch (letter) {
    case 1: return at;
    case -1: return sigma(-1) * sigma(-2) * sigma(-1);
    case 2: return bt;
    default: return sigma(2) * sigma(1);
  }
}

}  // namespace

Matrix2d letter_matrix(const Framing& f, int letter) {
  if (!f.valid_letter(letter)) throw Error(ErrorKind::MalformedWord, "letter not in framing " + f.name());
  switch (f.alphabet) {
    case Alphabet::HeckeAB:
      if (std::abs(letter) == 1) return hecke_a();
      return letter > 0 ? hecke_b(f.q) : inverse(hecke_b(f.q));
    case Alphabet::ModularST:
      if (std::abs(letter) == 1) return hecke_a();
      return letter > 0 ? Matrix2d{1, 1, 0, 1} : Matrix2d{1, -1, 0, 1};
    case Alphabet::SigmaBar: {
      Matrix2d a = hecke_a(), b = hecke_b(3), bi = inverse(b);
      switch (letter) {
        case 1: return a * b;
        case 2: return b * a;
        case -1: return bi * a;
        default: return a * bi;
      }
    }
    case Alphabet::BraidSigma:
    case Alphabet::MagnusU: return magnus_u(f.u, letter);
    case Alphabet::BraidTilde: return tilde<Matrix2d>(letter, [&](int l) { return magnus_u(f.u, l); });
    case Alphabet::Idempotent: {
      int m = static_cast<int>(f.generators.size());
      if (m < 3) throw Error(ErrorKind::UnsupportedMode, "idempotent matrices need at least 3 generators");
      int i = std::abs(letter) - 1;
      Matrix2d b = hecke_b(m);
      return power(inverse(b), i) * hecke_a() * power(b, i);
    }
    case Alphabet::FreeBasis: {
      if (f.generators.size() > 2) throw Error(ErrorKind::UnsupportedMode, "free-basis matrices for rank <= 2 only");
      Matrix2d h = std::abs(letter) == 1 ? Matrix2d{1, 2, 0, 1} : Matrix2d{1, 0, 2, 1};
      return letter > 0 ? h : inverse(h);
    }
  }
  throw Error(ErrorKind::Internal, "unhandled alphabet");
}

namespace {
Matrix2q magnus_q(const mpq_class& t, int letter) {
  mpq_class it = mpq_class(1) / t;
  switch (letter) {
    case 1: return {-t, 1, 0, 1};
    case -1: return {-it, it, 0, 1};
    case 2: return {1, 0, t, -t};
    default: return {1, 0, 1, -it};
  }
}

Matrix2q to_q(const Matrix2d& m) {
  auto conv = [](double x) {
    double r = std::round(x);
    if (std::abs(x - r) > 1e-12) throw Error(ErrorKind::UnsupportedMode, "irrational entry in rational mode");
    return mpq_class(static_cast<long>(r));
  };
  return {conv(m.a), conv(m.b), conv(m.c), conv(m.d)};
}
}  // namespace

Matrix2q letter_matrix_rational(const Framing& f, int letter, const mpq_class& t) {
  switch (f.alphabet) {
    case Alphabet::HeckeAB:
      if (f.q != 3) throw Error(ErrorKind::UnsupportedMode, "exact mode needs q = 3 (2cos(pi/q) irrational)");
      return to_q(letter_matrix(f, letter));
    case Alphabet::BraidSigma:
      if (t == 0) throw Error(ErrorKind::Config, "Magnus parameter t must be nonzero");
      if (!f.valid_letter(letter)) throw Error(ErrorKind::MalformedWord, "letter not in framing");
      return magnus_q(t, letter);
    case Alphabet::BraidTilde:
      if (!f.valid_letter(letter)) throw Error(ErrorKind::MalformedWord, "letter not in framing");
      return tilde<Matrix2q>(letter, [&](int l) { return magnus_q(t, l); });
    case Alphabet::MagnusU: throw Error(ErrorKind::UnsupportedMode, "u-normalized matrices are floating only");
    case Alphabet::Idempotent:
      if (f.generators.size() != 3) throw Error(ErrorKind::UnsupportedMode, "exact idempotent matrices need m = 3");
      return to_q(letter_matrix(f, letter));
    default: return to_q(letter_matrix(f, letter));
  }
}

namespace {
Matrix2L magnus_laurent(int letter) {
  LaurentPoly one(1L), t = LaurentPoly::monomial(1, 1), mt = LaurentPoly::monomial(-1, 1);
  LaurentPoly ti = LaurentPoly::monomial(1, -1), mti = LaurentPoly::monomial(-1, -1);
  switch (letter) {
    case 1: return {mt, one, LaurentPoly{}, one};
    case -1: return {mti, ti, LaurentPoly{}, one};
    case 2: return {one, LaurentPoly{}, t, mt};
    default: return {one, LaurentPoly{}, one, mti};
  }
}
}  // namespace

Matrix2L letter_matrix_laurent(const Framing& f, int letter) {
  if (!f.valid_letter(letter)) throw Error(ErrorKind::MalformedWord, "letter not in framing");
  if (f.alphabet == Alphabet::BraidSigma) return magnus_laurent(letter);
  if (f.alphabet == Alphabet::BraidTilde) return tilde<Matrix2L>(letter, magnus_laurent);
  throw Error(ErrorKind::UnsupportedMode, "Laurent mode is defined for braid framings only");
}

void right_multiply_sigma(Matrix2L& m, int letter) {
  // each row (x, y) of m becomes (x, y) * sigma_hat
  auto upd = [&](LaurentPoly& x, LaurentPoly& y) {
    switch (letter) {
      case 1: {  // [[-t,1],[0,1]]
        LaurentPoly nx = x.scaled(-1, 1);
        y = x + y;
        x = std::move(nx);
        break;
      }
      case -1: {  // [[-1/t,1/t],[0,1]]
        LaurentPoly xt = x.scaled(1, -1);
        y = xt + y;
        x = -xt;
        break;
      }
      case 2: {  // [[1,0],[t,-t]]
        LaurentPoly yt = y.scaled(1, 1);
        x = x + yt;
        y = -yt;
        break;
      }
      default: {  // [[1,0],[1,-1/t]]
        x = x + y;
        y = y.scaled(-1, -1);
        break;
      }
    }
  };
  upd(m.a, m.b);
  upd(m.c, m.d);
}

Matrix2d matrix_of_word(const Word& w) {
  Matrix2d m = Matrix2d::identity();
  for (int l : w.letters()) m *= letter_matrix(w.framing(), l);
  return m;
}

Matrix2q matrix_of_word_rational(const Word& w, const mpq_class& t) {
  Matrix2q m = Matrix2q::identity();
  for (int l : w.letters()) m *= letter_matrix_rational(w.framing(), l, t);
  return m;
}

Matrix2L matrix_of_word_laurent(const Word& w) {
  Matrix2L m = Matrix2L::identity();
  if (w.framing().alphabet == Alphabet::BraidSigma) {
    for (int l : w.letters()) right_multiply_sigma(m, l);
    return m;
  }
  for (int l : w.letters()) m *= letter_matrix_laurent(w.framing(), l);
  return m;
}

}  // namespace hypwalk
