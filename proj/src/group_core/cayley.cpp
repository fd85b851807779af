#include "hypwalk/cayley.hpp"

#include <sstream>

#include "hypwalk/b3.hpp"
#include "hypwalk/normal_form.hpp"

namespace hypwalk {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1024)) * 0x100000001b3ULL;
    return h;
  }
};

struct B3Hash {
  std::size_t operator()(const NormalFormB3& x) const {
    return NormalFormHqHash{}(x.projection) * 31 + static_cast<std::size_t>(x.f + (1 << 20));
  }
};

template <class Search, class Label>
CayleyBall export_ball(const Framing& f, int radius, const Search& s, Label label) {
  CayleyBall out;
  out.framing = f.name();
  out.radius = radius;
  for (std::size_t i = 0; i < s.elements.size(); ++i) out.labels.push_back(label(s.elements[i]));
  out.distance = s.distance;
  out.edges = s.edges;
  return out;
}

}  // namespace

CayleyBall cayley_ball(const Framing& f, int radius, int max_radius, std::size_t max_vertices) {
  if (radius < 0) throw Error(ErrorKind::Config, "radius must be nonnegative");
  if (radius > max_radius)
    throw Error(ErrorKind::ResourceLimit,
                "radius " + std::to_string(radius) + " exceeds the configured maximum " + std::to_string(max_radius));
  const auto moves = f.moves();
  if (f.is_psl_like()) {
    int q = f.alphabet == Alphabet::HeckeAB ? f.q : 3;
    auto step = [&](const NormalFormHq& x, int m) {
      NormalFormHq y = x;
      push_psl_letter(y, f.alphabet, m);
      return y;
    };
    BallSearch<NormalFormHq, NormalFormHqHash, decltype(step)> s(NormalFormHq(q), moves, step, radius, max_vertices,
                                                                 true);
    return export_ball(f, radius, s, [](const NormalFormHq& x) { return x.to_string(); });
  }
  if (f.is_braid()) {
    auto step = [&](const NormalFormB3& x, int m) {
      B3State st;
      st.projection = x.projection;
      st.e = x.f * 6 + section_exponent(x.projection);
      st.push(f.alphabet, m);
      return b3_normal_form(st);
    };
    BallSearch<NormalFormB3, B3Hash, decltype(step)> s(NormalFormB3{}, moves, step, radius, max_vertices, true);
    return export_ball(f, radius, s, [](const NormalFormB3& x) {
      return x.projection.to_string() + " D^" + std::to_string(2 * x.f);
    });
  }
  bool idem = f.alphabet == Alphabet::Idempotent;
  auto step = [&](const std::vector<int>& x, int m) {
    std::vector<int> y = x;
    int inv = idem ? m : -m;
    if (!y.empty() && y.back() == inv)
      y.pop_back();
    else
      y.push_back(m);
    return y;
  };
  BallSearch<std::vector<int>, VecHash, decltype(step)> s({}, moves, step, radius, max_vertices, true);
  return export_ball(f, radius, s, [&](const std::vector<int>& x) {
    if (x.empty()) return std::string("e");
    std::string r;
    for (int l : x) r += (r.empty() ? "" : " ") + f.letter_name(l);
    return r;
  });
}

std::string CayleyBall::to_csv() const {
  std::ostringstream os;
  os << "src,dst,generator\n";
  for (const auto& e : edges) os << e.src << ',' << e.dst << ',' << e.letter << '\n';
  return os.str();
}

}  // namespace hypwalk
