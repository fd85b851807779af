#pragma once

#include "hypwalk/framing.hpp"
#include "hypwalk/normal_form.hpp"

namespace hypwalk {

// B3 element as (image in PSL(2,Z), power of Delta^2).  The section lifts
// a2 -> sigma1 sigma2 sigma1 (e = 3), b3 -> sigma1^-1 sigma2^-1 (e = -2), b3^2 -> btilde^2 (e = -4).
struct NormalFormB3 {
  NormalFormHq projection{3};
  long f = 0;
  bool operator==(const NormalFormB3& o) const { return f == o.f && projection == o.projection; }
};

// Running state of a braid walk: projection plus signed letter count.
struct B3State {
  NormalFormHq projection{3};
  long e = 0;

  void push(Alphabet alphabet, int letter) {
    if (alphabet == Alphabet::BraidTilde) {
      switch (letter) {
        case 1: projection.push_a(); e += 3; return;
        case -1: projection.push_a(); e -= 3; return;
        case 2: projection.push_b(1); e -= 2; return;
        default: projection.push_b(2); e += 2; return;
      }
    }
    push_psl_letter(projection, Alphabet::SigmaBar, letter);
    e += letter > 0 ? 1 : -1;
  }
  void clear() {
    projection.clear();
    e = 0;
  }
  bool trivial() const { return projection.empty() && e == 0; }
};

long exponent_sum(const Word& w);
long section_exponent(const NormalFormHq& nf);
NormalFormHq project_b3(const Word& w);
NormalFormB3 b3_normal_form(const Word& w);
NormalFormB3 b3_normal_form(const B3State& s);
bool b3_is_trivial(const Word& w);

struct B3LengthBounds {
  int lower = 0;
  int upper = 0;
  long f_geodesic = 0;  // center power relative to a geodesic sbar lift
};

// lower = sbar length of the projection; upper = lower + 6|f| where f is measured
// against the geodesic lift whose letter count is closest to e.
B3LengthBounds b3_length_bounds(const NormalFormHq& projection, long e);
B3LengthBounds b3_length_bounds(const Word& w);

}  // namespace hypwalk
