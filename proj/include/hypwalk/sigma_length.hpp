#pragma once

#include "hypwalk/normal_form.hpp"

namespace hypwalk {

// Geodesic data of a PSL(2,Z) element in the sbar framing {ab, ba, b^-1 a, a b^-1}.
// e_min/e_max bound the signed letter count over all geodesic words; both ends are attained.
struct SigmaBarGeodesic {
  int length = 0;
  long e_min = 0;
  long e_max = 0;
};

// O(k) dynamic program over the a-syllables of nf (nf must have q = 3).
SigmaBarGeodesic sigma_bar_geodesic(const NormalFormHq& nf);
int sigma_bar_length(const NormalFormHq& nf);

}  // namespace hypwalk
