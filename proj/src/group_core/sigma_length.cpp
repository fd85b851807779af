#include "hypwalk/sigma_length.hpp"

#include <algorithm>
#include <array>

#include "hypwalk/errors.hpp"

// An sbar-word is an {a, b, b^-1} word cut into consecutive pairs, each holding one a and
// one b^{+-1}; the letter sign is the sign of its b-move.  Every a is a crossing on the
// cell tree.  Crossing i takes its b-move from the segment before it (p = 1) or after it
// (p = 0), so the segment between crossings with choices p, p' carries
// [p = 0] + [p' = 1] b-moves.  Cell[p][p'][r] is the cheapest closed-or-rotating visit of
// one triangle, where detours through neighbouring cells cost 2 crossings plus their own
// closed visit.

namespace hypwalk {
namespace {

constexpr int kInf = 1 << 28;

struct Cost {
  int c = kInf;
  long lo = 0;
  long hi = 0;
};

Cost add(const Cost& x, const Cost& y) {
  if (x.c >= kInf || y.c >= kInf) return {};
  return {x.c + y.c, x.lo + y.lo, x.hi + y.hi};
}

// returns true if `into` changed
bool take_min(Cost& into, const Cost& v) {
  if (v.c >= kInf) return false;
  if (v.c < into.c) {
    into = v;
    return true;
  }
  if (v.c == into.c && (v.lo < into.lo || v.hi > into.hi)) {
    into.lo = std::min(into.lo, v.lo);
    into.hi = std::max(into.hi, v.hi);
    return true;
  }
  return false;
}

int seg_moves(int p_in, int p_out) { return (p_in == 0 ? 1 : 0) + (p_out == 1 ? 1 : 0); }

// direct segment of m b-moves realising rotation r; c = 0 if possible
Cost segment(int m, int r) {
  static const int e_tab[3][3] = {{0, kInf, kInf}, {kInf, 1, -1}, {0, -2, 2}};
  int e = e_tab[m][r];
  if (e == kInf) return {};
  return {0, e, e};
}

using CellTable = std::array<std::array<std::array<Cost, 3>, 2>, 2>;

CellTable build_cells() {
  CellTable t;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int r = 0; r < 3; ++r) t[a][b][r] = segment(seg_moves(a, b), r);
  for (bool changed = true; changed;) {
    changed = false;
    for (int pi = 0; pi < 2; ++pi)
      for (int po = 0; po < 2; ++po)
        for (int r = 0; r < 3; ++r)
          for (int p1 = 0; p1 < 2; ++p1)
            for (int p2 = 0; p2 < 2; ++p2)
              for (int r1 = 0; r1 < 3; ++r1) {
                Cost lead = segment(seg_moves(pi, p1), r1);
                if (lead.c >= kInf) continue;
                Cost ex = t[p1][p2][0];
                if (ex.c >= kInf) continue;
                ex.c += 2;
                Cost v = add(add(lead, ex), t[p2][po][(r - r1 + 3) % 3]);
                changed |= take_min(t[pi][po][r], v);
              }
  }
  return t;
}

const CellTable& cells() {
  static const CellTable t = build_cells();
  return t;
}

}  // namespace

SigmaBarGeodesic sigma_bar_geodesic(const NormalFormHq& nf) {
  if (nf.q() != 3) throw Error(ErrorKind::Config, "sbar length is defined for q = 3");
  const CellTable& cell = cells();
  const auto& syl = nf.syllables();

  std::size_t i = 0;
  auto next_rotation = [&]() {
    int r = 0;
    if (i < syl.size() && syl[i] != 0) r = syl[i++];
    return r;
  };

  int eps = next_rotation();
  Cost result;
  if (i == syl.size()) {
    result = cell[1][0][eps];
  } else {
    std::array<Cost, 2> d = {cell[1][0][eps], cell[1][1][eps]};
    int crossings = 0;
    while (i < syl.size()) {
      ++i;  // the a-syllable
      ++crossings;
      eps = next_rotation();
      if (i == syl.size()) break;
      std::array<Cost, 2> nd;
      for (int p = 0; p < 2; ++p)
        for (int pn = 0; pn < 2; ++pn) take_min(nd[pn], add(d[p], cell[p][pn][eps]));
      d = nd;
    }
    for (int p = 0; p < 2; ++p) take_min(result, add(d[p], cell[p][0][eps]));
    result.c += crossings;
  }
  if (result.c >= kInf) throw Error(ErrorKind::Internal, "sbar length table incomplete");
  return {result.c, result.lo, result.hi};
}

int sigma_bar_length(const NormalFormHq& nf) { return sigma_bar_geodesic(nf).length; }

}  // namespace hypwalk
