#include "hypwalk/b3.hpp"

#include <cstdlib>

#include "hypwalk/errors.hpp"
#include "hypwalk/sigma_length.hpp"

namespace hypwalk {

namespace {
void require_braid(const Word& w) {
  if (!w.framing().is_braid()) throw Error(ErrorKind::Config, "B3 operation on non-braid framing " + w.framing().name());
}

B3State run(const Word& w) {
  require_braid(w);
  B3State s;
  for (int l : w.letters()) s.push(w.framing().alphabet, l);
  return s;
}
}  // namespace

long exponent_sum(const Word& w) { return run(w).e; }

long section_exponent(const NormalFormHq& nf) {
  long e = 0;
  for (auto s : nf.syllables()) e += s == 0 ? 3 : (s == 1 ? -2 : -4);
  return e;
}

NormalFormHq project_b3(const Word& w) { return run(w).projection; }

NormalFormB3 b3_normal_form(const B3State& s) {
  long diff = s.e - section_exponent(s.projection);
  if (diff % 6 != 0) throw Error(ErrorKind::Internal, "center exponent is not an integer");
  return {s.projection, diff / 6};
}

NormalFormB3 b3_normal_form(const Word& w) { return b3_normal_form(run(w)); }

bool b3_is_trivial(const Word& w) { return run(w).trivial(); }

B3LengthBounds b3_length_bounds(const NormalFormHq& projection, long e) {
  SigmaBarGeodesic g = sigma_bar_geodesic(projection);
  long d_lo = e - g.e_min, d_hi = e - g.e_max;
  long d = std::labs(d_lo) <= std::labs(d_hi) ? d_lo : d_hi;
  if (d % 6 != 0) throw Error(ErrorKind::Internal, "geodesic lift differs by a non-central element");
  B3LengthBounds b;
  b.lower = g.length;
  b.f_geodesic = d / 6;
  b.upper = g.length + 6 * static_cast<int>(std::labs(b.f_geodesic));
  return b;
}

B3LengthBounds b3_length_bounds(const Word& w) {
  B3State s = run(w);
  return b3_length_bounds(s.projection, s.e);
}

}  // namespace hypwalk
