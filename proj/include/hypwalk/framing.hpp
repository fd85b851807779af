#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypwalk {

enum class GroupId { Free, Hecke, PSL2Z, B3, PSL2Z_u };

// Letter conventions per alphabet (signed generator indices, negative = inverse):
//   HeckeAB    1 = a2, 2 = b_q, -2 = b_q^-1        (-1 is accepted as a2)
//   ModularST  1 = S, 2 = T, -2 = T^-1              (-1 is accepted as S)
//   SigmaBar   +-1 = sbar1^{+-1}, +-2 = sbar2^{+-1}
//   BraidSigma +-1 = sigma1^{+-1}, +-2 = sigma2^{+-1}
//   BraidTilde +-1 = atilde^{+-1}, +-2 = btilde^{+-1}
//   MagnusU    same letters as BraidSigma, matrices of the normalized rep at u
//   Idempotent 1..m = g_i                            (-i is accepted as g_i)
//   FreeBasis  +-1..+-r
enum class Alphabet { HeckeAB, ModularST, SigmaBar, BraidSigma, BraidTilde, MagnusU, Idempotent, FreeBasis };

struct Generator {
  std::string name;
  int order = 0;  // 0 means infinite order
};

struct Framing {
  GroupId group = GroupId::PSL2Z;
  Alphabet alphabet = Alphabet::HeckeAB;
  std::vector<Generator> generators;
  int q = 3;
  double u = 1.0;

  // letters a simple walk draws from, uniformly
  std::vector<int> moves() const;
  int n_moves() const { return static_cast<int>(moves().size()); }
  bool valid_letter(int letter) const;
  // letter whose product with `letter` is the identity
  int inverse_letter(int letter) const;
  std::string name() const;
  std::string letter_name(int letter) const;

  bool is_psl_like() const;  // reduces through NormalFormHq
  bool is_braid() const { return group == GroupId::B3; }
};

Framing hecke_framing(int q);
Framing modular_st_framing();
Framing sigma_bar_framing();
Framing braid_sigma_framing();
Framing braid_tilde_framing();
Framing magnus_u_framing(double u);
Framing idempotent_framing(int m);
Framing free_framing(int rank);

// Names accepted by the CLI: H<q>, PSL, ST, B3, B3tilde, F<m>idem, F<r>free, PSLu
Framing framing_by_name(const std::string& name, double u = 1.0);

class Word {
 public:
  Word(Framing framing, std::vector<int> letters);

  const Framing& framing() const { return framing_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  Word concat(const Word& other) const;
  Word inverse() const;

  std::string to_json() const;
  static Word from_json(const Framing& framing, const std::string& text);

 private:
  Framing framing_;
  std::vector<int> letters_;
};

}  // namespace hypwalk
