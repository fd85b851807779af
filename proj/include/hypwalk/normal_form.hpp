#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypwalk/framing.hpp"

namespace hypwalk {

// Alternating normal form in Z2 * Zq.  Syllable 0 is a2, syllable e in 1..q-1 is b^e.
class NormalFormHq {
 public:
  explicit NormalFormHq(int q = 3) : q_(q) {}

  int q() const { return q_; }
  const std::vector<std::uint8_t>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  bool starts_with_a() const { return !syl_.empty() && syl_.front() == 0; }
  bool ends_with_a() const { return !syl_.empty() && syl_.back() == 0; }
  int top() const { return syl_.empty() ? -1 : syl_.back(); }

  // word length in the {a2, b_q, b_q^-1} framing
  int length() const { return length_; }
  // number of a-syllables (backbone generation)
  int a_count() const { return a_count_; }

  void push_a() {
    if (!syl_.empty() && syl_.back() == 0) {
      syl_.pop_back();
      --length_;
      --a_count_;
    } else {
      syl_.push_back(0);
      ++length_;
      ++a_count_;
    }
  }

  // multiply on the right by b^e, e taken mod q
  void push_b(int e) {
    e %= q_;
    if (e < 0) e += q_;
    if (e == 0) return;
    if (!syl_.empty() && syl_.back() != 0) {
      int old = syl_.back();
      int ne = (old + e) % q_;
      length_ -= cost(old);
      if (ne == 0) {
        syl_.pop_back();
      } else {
        syl_.back() = static_cast<std::uint8_t>(ne);
        length_ += cost(ne);
      }
    } else {
      syl_.push_back(static_cast<std::uint8_t>(e));
      length_ += cost(e);
    }
  }

  void push_syllable(int s) {
    if (s == 0)
      push_a();
    else
      push_b(s);
  }

  void append(const NormalFormHq& other) {
    for (auto s : other.syl_) push_syllable(s);
  }

  NormalFormHq inverse() const;
  void clear() {
    syl_.clear();
    length_ = 0;
    a_count_ = 0;
  }
  std::string to_string() const;

  bool operator==(const NormalFormHq& o) const { return q_ == o.q_ && syl_ == o.syl_; }

 private:
  int cost(int e) const { return e < q_ - e ? e : q_ - e; }

  int q_;
  std::vector<std::uint8_t> syl_;
  int length_ = 0;
  int a_count_ = 0;
};

struct NormalFormHqHash {
  std::size_t operator()(const NormalFormHq& nf) const {
    std::size_t h = static_cast<std::size_t>(nf.q()) * 0x9e3779b97f4a7c15ULL;
    for (auto s : nf.syllables()) h = (h ^ s) * 0x100000001b3ULL + 0x9e37;
    return h;
  }
};

// Apply one letter of a PSL-like alphabet (HeckeAB, ModularST, SigmaBar, MagnusU).
inline void push_psl_letter(NormalFormHq& nf, Alphabet alphabet, int letter) {
  const int q = nf.q();
  switch (alphabet) {
    case Alphabet::HeckeAB:
      if (letter == 1 || letter == -1)
        nf.push_a();
      else
        nf.push_b(letter > 0 ? 1 : q - 1);
      return;
    case Alphabet::ModularST:
      // T = a b and T^-1 = b^-1 a with a = S, b = ST
      if (letter == 1 || letter == -1) {
        nf.push_a();
      } else if (letter == 2) {
        nf.push_a();
        nf.push_b(1);
      } else {
        nf.push_b(2);
        nf.push_a();
      }
      return;
    default:
      // sbar1 = ab, sbar2 = ba, sbar1^-1 = b^-1 a, sbar2^-1 = a b^-1
      switch (letter) {
        case 1: nf.push_a(); nf.push_b(1); return;
        case 2: nf.push_b(1); nf.push_a(); return;
        case -1: nf.push_b(2); nf.push_a(); return;
        default: nf.push_a(); nf.push_b(2); return;
      }
  }
}

NormalFormHq reduce_free_product(const Word& w);

// length in the {a2, b_q, b_q^-1} framing
int irreducible_length(const NormalFormHq& nf);
// length in a given framing; supports HeckeAB and SigmaBar (q = 3)
int irreducible_length(const NormalFormHq& nf, Alphabet alphabet);
int backbone_generation(const NormalFormHq& nf);

// Reduced words in a free group or a free product of Z2's.
class FreeNormalForm {
 public:
  explicit FreeNormalForm(bool idempotent = false) : idempotent_(idempotent) {}
  void push(int letter) {
    int inv = idempotent_ ? letter : -letter;
    if (!letters_.empty() && letters_.back() == inv)
      letters_.pop_back();
    else
      letters_.push_back(letter);
  }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  void clear() { letters_.clear(); }
  bool operator==(const FreeNormalForm& o) const { return letters_ == o.letters_; }

 private:
  bool idempotent_;
  std::vector<int> letters_;
};

FreeNormalForm reduce_free(const Word& w);

}  // namespace hypwalk
