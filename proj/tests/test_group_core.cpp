#include <gtest/gtest.h>

#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <tuple>

#include "hypwalk/b3.hpp"
#include "hypwalk/cayley.hpp"
#include "hypwalk/errors.hpp"
#include "hypwalk/framing.hpp"
#include "hypwalk/laurent.hpp"
#include "hypwalk/matrix2.hpp"
#include "hypwalk/normal_form.hpp"
#include "hypwalk/sigma_length.hpp"

using namespace hypwalk;

namespace {

using Key = std::tuple<long, long, long, long>;

// projective class of a real 2x2 matrix, rounded
Key key_of(const Matrix2d& m) {
  double e[4] = {m.a, m.b, m.c, m.d};
  int first = 0;
  while (first < 4 && std::abs(e[first]) < 1e-7) ++first;
  double s = first < 4 && e[first] < 0 ? -1 : 1;
  auto r = [&](double x) { return std::lround(s * x * 1e6); };
  return {r(e[0]), r(e[1]), r(e[2]), r(e[3])};
}

// 0-1 BFS over matrices: cost_a and cost_b are the weights of a- and b-letters.
// With (1, 1) it gives word length, with (1, 0) the least number of a-letters.
std::map<Key, int> matrix_bfs(const Framing& f, int radius, int cost_a, int cost_b) {
  std::map<Key, int> dist;
  std::map<Key, Matrix2d> mats;
  std::deque<Key> dq;
  Key id = key_of(Matrix2d::identity());
  dist[id] = 0;
  mats[id] = Matrix2d::identity();
  dq.push_back(id);
  while (!dq.empty()) {
    Key k = dq.front();
    dq.pop_front();
    int d = dist[k];
    for (int l : f.moves()) {
      int c = (l == 1 || l == -1) ? cost_a : cost_b;
      if (d + c > radius) continue;
      Matrix2d m = mats[k] * letter_matrix(f, l);
      Key nk = key_of(m);
      auto it = dist.find(nk);
      if (it == dist.end() || it->second > d + c) {
        dist[nk] = d + c;
        mats[nk] = m;
        if (c == 0)
          dq.push_front(nk);
        else
          dq.push_back(nk);
      }
    }
  }
  return dist;
}

std::vector<int> random_letters(std::mt19937_64& g, const Framing& f, int len) {
  auto mv = f.moves();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(mv.size()) - 1);
  std::vector<int> l(len);
  for (int& x : l) x = mv[pick(g)];
  return l;
}

void enumerate_words(const Framing& f, int len, std::vector<int>& cur, const std::function<void(const Word&)>& fn) {
  if (static_cast<int>(cur.size()) == len) {
    fn(Word(f, cur));
    return;
  }
  for (int l : f.moves()) {
    cur.push_back(l);
    enumerate_words(f, len, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

TEST(NormalForm, TorsionExamples) {
  Framing h3 = hecke_framing(3);
  EXPECT_TRUE(reduce_free_product(Word(h3, {1, 1})).empty());
  EXPECT_TRUE(reduce_free_product(Word(h3, {2, 2, 2})).empty());
  EXPECT_TRUE(reduce_free_product(Word(h3, {1, 2, 2, 2, 1})).empty());
  EXPECT_EQ(irreducible_length(NormalFormHq(3)), 0);
  EXPECT_EQ(irreducible_length(reduce_free_product(Word(h3, {1, 2, 2}))), 2);
  EXPECT_EQ(irreducible_length(reduce_free_product(Word(hecke_framing(5), {1, 2, 2, 2}))), 3);
  EXPECT_EQ(backbone_generation(reduce_free_product(Word(h3, {1, 2, 1, -2, 1}))), 3);
  EXPECT_EQ(backbone_generation(reduce_free_product(Word(h3, {2}))), 0);
}

TEST(NormalForm, MalformedLetter) {
  EXPECT_THROW(Word(hecke_framing(3), {3}), Error);
  try {
    Word(sigma_bar_framing(), {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedWord);
  }
}

TEST(NormalForm, ReductionIdempotent) {
  std::mt19937_64 g(1);
  for (int q : {3, 4, 7}) {
    Framing f = hecke_framing(q);
    for (int i = 0; i < 500; ++i) {
      NormalFormHq nf = reduce_free_product(Word(f, random_letters(g, f, 40)));
      NormalFormHq again(q);
      again.append(nf);
      EXPECT_EQ(again, nf);
    }
  }
}

// word length and a-letter count against BFS over the matrix representation
TEST(NormalForm, LengthAndGenerationMatchMatrixBfs) {
  for (int q : {3, 4, 5, 6}) {
    Framing f = hecke_framing(q);
    const int radius = 8;
    auto len = matrix_bfs(f, radius, 1, 1);
    auto gen = matrix_bfs(f, radius / 2 + 1, 1, 0);  // reduced words of length <= 8 have <= 5 a-syllables
    std::mt19937_64 g(static_cast<unsigned>(q));
    auto check = [&](const Word& w) {
      NormalFormHq nf = reduce_free_product(w);
      Key k = key_of(matrix_of_word(w));
      ASSERT_TRUE(len.count(k));
      EXPECT_EQ(irreducible_length(nf), len[k]);
      ASSERT_TRUE(gen.count(k));
      EXPECT_EQ(backbone_generation(nf), gen[k]);
    };
    if (q <= 4) {
      std::vector<int> cur;
      for (int n = 0; n <= radius; ++n) enumerate_words(f, n, cur, check);
    } else {
      for (int i = 0; i < 3000; ++i) check(Word(f, random_letters(g, f, 1 + i % radius)));
    }
  }
}

TEST(NormalForm, SigmaBarLengthMatchesBfs) {
  Framing f = sigma_bar_framing();
  auto len = matrix_bfs(f, 8, 1, 1);  // sbar letters all cost 1
  std::vector<int> cur;
  for (int n = 0; n <= 6; ++n)
    enumerate_words(f, n, cur, [&](const Word& w) {
      EXPECT_EQ(sigma_bar_length(reduce_free_product(w)), len[key_of(matrix_of_word(w))]);
    });
}

TEST(Cayley, BallCounts) {
  EXPECT_EQ(cayley_ball(hecke_framing(3), 1).size(), 4u);
  // normal forms of length <= 2 in H3: e, a, b, b^-1, ab, ab^-1, ba, b^-1a
  EXPECT_EQ(cayley_ball(hecke_framing(3), 2).size(), 8u);
  for (int r = 0; r <= 6; ++r)
    EXPECT_EQ(cayley_ball(idempotent_framing(3), r).size(), static_cast<std::size_t>(1 + 3 * ((1 << r) - 1)));
  EXPECT_THROW(cayley_ball(hecke_framing(3), 13), Error);
  auto b = cayley_ball(hecke_framing(3), 1);
  EXPECT_EQ(b.to_csv().substr(0, 16), "src,dst,generato");
}

TEST(Matrix, Representations) {
  Framing st = modular_st_framing();
  Matrix2d s2 = matrix_of_word(Word(st, {1, 1}));
  EXPECT_EQ(s2, (Matrix2d{-1, 0, 0, -1}));
  Framing br = braid_sigma_framing();
  Word d2(br, {1, 2, 1, 2, 1, 2});
  mpq_class t(3, 7);
  Matrix2q m = matrix_of_word_rational(d2, t);
  mpq_class t3 = t * t * t;
  EXPECT_EQ(m, (Matrix2q{t3, 0, 0, t3}));
  Matrix2L ml = matrix_of_word_laurent(d2);
  EXPECT_EQ(ml.a, LaurentPoly::monomial(1, 3));
  EXPECT_TRUE(ml.b.is_zero());
  EXPECT_EQ(matrix_of_word(Word(br, {})), Matrix2d::identity());
}

TEST(Matrix, HomomorphismAndDeterminant) {
  std::mt19937_64 g(5);
  Framing br = braid_sigma_framing();
  Framing st = modular_st_framing();
  mpq_class t(-2, 3);
  for (int i = 0; i < 300; ++i) {
    Word u(br, random_letters(g, br, 12)), v(br, random_letters(g, br, 9));
    EXPECT_EQ(matrix_of_word_rational(u.concat(v), t), matrix_of_word_rational(u, t) * matrix_of_word_rational(v, t));
    // Magnus: det = (-t)^{e(w)}
    long e = exponent_sum(u);
    mpq_class d = 1;
    mpq_class mt = -t;
    for (long k = 0; k < std::abs(e); ++k) d *= e > 0 ? mt : 1 / mt;
    EXPECT_EQ(matrix_of_word_rational(u, t).det(), d);
    Word a(st, random_letters(g, st, 15)), b(st, random_letters(g, st, 15));
    EXPECT_EQ(matrix_of_word_rational(a.concat(b)), matrix_of_word_rational(a) * matrix_of_word_rational(b));
    EXPECT_EQ(matrix_of_word_rational(a).det(), 1);
  }
  for (int q : {4, 5, 7}) {
    Framing f = hecke_framing(q);
    Word w(f, random_letters(g, f, 30));
    EXPECT_NEAR(matrix_of_word(w).det(), 1.0, 1e-9);
  }
  EXPECT_THROW(matrix_of_word_rational(Word(hecke_framing(5), {2})), Error);
}

TEST(Braid, Examples) {
  Framing br = braid_sigma_framing();
  EXPECT_TRUE(project_b3(Word(br, {1, -1})).empty());
  EXPECT_TRUE(project_b3(Word(br, {1, 2, 1, 2, 1, 2})).empty());
  NormalFormHq expect(3);
  expect.push_a();
  expect.push_b(2);
  expect.push_a();
  EXPECT_EQ(project_b3(Word(br, {1, 2})), expect);
  EXPECT_EQ(b3_normal_form(Word(br, {1, 2, 1, 2, 1, 2})).f, 1);
  EXPECT_EQ(b3_normal_form(Word(br, {1, 2, 1, 1, 2, 1})).f, 1);
  EXPECT_EQ(b3_normal_form(Word(br, {1, -1})).f, 0);
  EXPECT_TRUE(b3_is_trivial(Word(br, {1, 2, -2, -1})));
  EXPECT_FALSE(b3_is_trivial(Word(br, {1, 2, 1, 2, 1, 2})));
  Word w(br, {1, 2, 1, -2, -1, -2});
  EXPECT_EQ(b3_is_trivial(w), matrix_of_word_laurent(w) == Matrix2L::identity());
  B3LengthBounds z = b3_length_bounds(Word(br, {}));
  EXPECT_EQ(z.lower, 0);
  EXPECT_EQ(z.upper, 0);
  B3LengthBounds d = b3_length_bounds(Word(br, {1, 2, 1, 2, 1, 2}));
  EXPECT_EQ(d.lower, 0);
  EXPECT_EQ(d.upper, 6);
}

// Magnus is faithful on B3: equal normal forms iff equal matrices at a generic rational t
TEST(Braid, FaithfulnessAgainstMagnus) {
  std::mt19937_64 g(11);
  Framing br = braid_sigma_framing();
  mpq_class t(5, 13);
  int equal_pairs = 0;
  for (int i = 0; i < 10000; ++i) {
    Word u(br, random_letters(g, br, 1 + i % 30));
    // half the pairs are equal by construction: v = u * x * x^-1 with a random insertion
    Word v = u;
    if (i % 2 == 0) {
      Word x(br, random_letters(g, br, 1 + i % 5));
      v = u.concat(x).concat(x.inverse());
    } else {
      v = Word(br, random_letters(g, br, 1 + i % 30));
    }
    bool nf_eq = b3_normal_form(u) == b3_normal_form(v);
    bool m_eq = matrix_of_word_rational(u, t) == matrix_of_word_rational(v, t);
    EXPECT_EQ(nf_eq, m_eq);
    equal_pairs += nf_eq;
  }
  EXPECT_GE(equal_pairs, 5000);
}

TEST(Braid, CenterAdditivityAndBounds) {
  std::mt19937_64 g(3);
  Framing br = braid_sigma_framing();
  Word delta2(br, {1, 2, 1, 2, 1, 2});
  for (int i = 0; i < 10000; ++i) {
    Word w(br, random_letters(g, br, 100));
    NormalFormB3 nf = b3_normal_form(w);
    EXPECT_EQ(b3_normal_form(w.concat(delta2)).f, nf.f + 1);
    B3LengthBounds b = b3_length_bounds(w);
    EXPECT_LE(b.lower, b.upper);
    EXPECT_LE(b.lower, 100);
    EXPECT_LE(std::abs(nf.f), 100 / 6 + 2);
  }
}

// exact B3 lengths by BFS bracket the bounds
TEST(Braid, BoundsBracketBfsLength) {
  Framing br = braid_sigma_framing();
  CayleyBall ball = cayley_ball(br, 7);
  std::mt19937_64 g(9);
  std::map<std::string, int> dist;
  for (std::size_t i = 0; i < ball.size(); ++i) dist[ball.labels[i]] = ball.distance[i];
  for (int i = 0; i < 2000; ++i) {
    Word w(br, random_letters(g, br, 7));
    NormalFormB3 nf = b3_normal_form(w);
    std::string label = nf.projection.to_string() + " D^" + std::to_string(2 * nf.f);
    ASSERT_TRUE(dist.count(label));
    B3LengthBounds b = b3_length_bounds(w);
    EXPECT_LE(b.lower, dist[label]);
    EXPECT_GE(b.upper, dist[label]);
  }
}

TEST(Laurent, Arithmetic) {
  LaurentPoly a = LaurentPoly::from_coeffs(-1, {1, 2, 1});  // t^-1 + 2 + t
  LaurentPoly b = LaurentPoly::from_coeffs(0, {1, 1});
  LaurentPoly p = a * b;
  auto q = p.divide_exact(b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, a);
  EXPECT_FALSE((p + LaurentPoly(1)).divide_exact(b).has_value());
  EXPECT_EQ(a.evaluate(mpq_class(2)), mpq_class(9, 2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.low(), -1);
  EXPECT_EQ(a.high(), 1);
}

TEST(Word, JsonRoundTrip) {
  Framing f = sigma_bar_framing();
  Word w(f, {1, -2, 1});
  EXPECT_EQ(Word::from_json(f, w.to_json()).letters(), w.letters());
  EXPECT_EQ(Word::from_json(f, "[1,-2,1]").letters(), w.letters());
  EXPECT_THROW(Word::from_json(f, "[1,"), Error);
}
