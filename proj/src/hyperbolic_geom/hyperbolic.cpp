#include "hypwalk/hyperbolic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hypwalk/errors.hpp"

namespace hypwalk {

namespace {

// ad - bc, snapped to +-1 when it equals that within its own rounding error; long
// products of unimodular matrices otherwise lose the determinant to cancellation
double effective_det(const Matrix2d& m) {
  double ad = m.a * m.d, bc = m.b * m.c;
  double det = ad - bc;
  double err = 8 * std::numeric_limits<double>::epsilon() * (std::abs(ad) + std::abs(bc));
  if (std::abs(det - 1) <= err) return 1;
  if (std::abs(det + 1) <= err) return -1;
  return det;
}

}  // namespace

Point mobius_apply(const Matrix2d& m, Point z) {
  if (!(z.imag() > 0)) throw Error(ErrorKind::Config, "point must lie in the upper half-plane");
  double det = effective_det(m);
  if (det == 0) throw Error(ErrorKind::Config, "Mobius matrix must be invertible");
  double x = z.real(), y = z.imag();
  double dr = m.c * x + m.d, di = m.c * y;
  double den = dr * dr + di * di;
  if (den == 0) throw Error(ErrorKind::PointAtInfinity, "cz + d = 0");
  double re = ((m.a * x + m.b) * dr + m.a * m.c * y * y) / den;
  return {re, std::abs(det) * y / den};
}

double hyperbolic_distance_of_word(const Matrix2d& m) {
  double ed = effective_det(m);
  double det = std::abs(ed);
  if (!(det > 0)) throw Error(ErrorKind::InvalidDistance, "singular matrix");
  double s = 1 / std::sqrt(det);
  double a = m.a * s, b = m.b * s, c = m.c * s, d = m.d * s;
  // Tr(m m^T) - 2 = (a - d)^2 + (b + c)^2 at det 1 (or (a + d)^2 + (b - c)^2 at det -1)
  double x = ed < 0 ? ((a + d) * (a + d) + (b - c) * (b - c)) / 2 : ((a - d) * (a - d) + (b + c) * (b + c)) / 2;
  if (x < -1e-12) throw Error(ErrorKind::InvalidDistance, "Tr(m m^T) below 2 after normalization");
  x = std::max(x, 0.0);
  return std::log1p(x + std::sqrt(x * (x + 2)));
}

double hyperbolic_distance_of_word(const Word& w) { return hyperbolic_distance_of_word(matrix_of_word(w)); }

double point_pair_distance(Point z1, Point z2) {
  if (!(z1.imag() > 0 && z2.imag() > 0)) throw Error(ErrorKind::Config, "points must lie in the upper half-plane");
  double r = std::norm(z1 - z2) / (2 * z1.imag() * z2.imag());
  // acosh(1 + r) without cancellation for small r
  return std::log1p(r + std::sqrt(r * (r + 2)));
}

Matrix2d rotation(double phi) {
  double c = std::cos(phi), s = std::sin(phi);
  return {c, -s, s, c};
}

double fold_angle(double theta) {
  double t = std::remainder(theta, std::numbers::pi);  // [-pi/2, pi/2]
  return t <= -std::numbers::pi / 2 ? t + std::numbers::pi : t;
}

AngleStep angle_step(double theta, const Matrix2d& h) {
  double c = std::cos(theta), s = std::sin(theta);
  double x = h.a * c + h.c * s, y = h.b * c + h.d * s;  // h^T v
  return {fold_angle(std::atan2(y, x)), std::log(x * x + y * y)};
}

GeneratorSet generators_of(const Framing& f) {
  GeneratorSet g;
  for (int l : f.moves()) g.push_back(letter_matrix(f, l));
  return g;
}

std::string LyapunovResult::to_json() const {
  return std::string("{\"method\":\"") + method + "\",\"gamma1\":" + fmt12(gamma1) + ",\"gamma2\":" + fmt12(gamma2) +
         ",\"sigma2\":" + fmt12(sigma2) + ",\"standard_error\":" + fmt12(standard_error) +
         ",\"samples\":" + std::to_string(samples) + ",\"steps\":" + std::to_string(steps) +
         ",\"seed\":" + std::to_string(seed) + "}";
}

namespace {

Word hecke_conjugate(const Framing& f, int i) {
  std::vector<int> l;
  for (int k = 0; k < i; ++k) l.push_back(-2);
  l.push_back(1);
  for (int k = 0; k < i; ++k) l.push_back(2);
  return Word(f, l);
}

}  // namespace

// Backbone generators g_i = b^-i a b^i.  In the sbar alphabet a = s1 s2 s1, and
// conjugating by s1^-1 or s2 gives g_1 and g_2.
std::vector<BackboneSpec> table1_specs() {
  std::vector<BackboneSpec> out;
  Framing f3 = idempotent_framing(3);
  Framing h3 = hecke_framing(3);
  Framing psl = sigma_bar_framing();
  {
    BackboneSpec s{"F3", f3, f3, 1.0, 1.0 / 3.0, {}};
    for (int i = 1; i <= 3; ++i) s.backbone_generators.push_back(Word(f3, {i}));
    out.push_back(s);
  }
  {
    Framing f4 = free_framing(2);
    BackboneSpec s{"F4", f4, f4, 1.0, 0.5, {}};
    for (int l : f4.moves()) s.backbone_generators.push_back(Word(f4, {l}));
    out.push_back(s);
  }
  {
    BackboneSpec s{"H3", h3, f3, 2.0, 2.0 / 15.0, {}};
    for (int i = 0; i < 3; ++i) s.backbone_generators.push_back(hecke_conjugate(h3, i));
    out.push_back(s);
  }
  {
    BackboneSpec s{"PSL", psl, f3, 1.0, 0.25, {}};
    s.backbone_generators = {Word(psl, {1, 2, 1}), Word(psl, {2, 1, 1}), Word(psl, {2, 1, 2, 1, -2})};
    out.push_back(s);
  }
  return out;
}

BackboneSpec backbone_spec(const std::string& name) {
  for (auto& s : table1_specs())
    if (s.name == name) return s;
  throw Error(ErrorKind::Config, "unknown backbone row: " + name + " (expected F3, F4, H3 or PSL)");
}

}  // namespace hypwalk
