#include "hypwalk/normal_form.hpp"

#include "hypwalk/errors.hpp"
#include "hypwalk/sigma_length.hpp"

namespace hypwalk {

NormalFormHq NormalFormHq::inverse() const {
  NormalFormHq r(q_);
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.push_syllable(*it == 0 ? 0 : q_ - *it);
  return r;
}

std::string NormalFormHq::to_string() const {
  if (syl_.empty()) return "e";
  std::string s;
  for (auto x : syl_) {
    if (!s.empty()) s += ' ';
    if (x == 0)
      s += "a";
    else if (x == 1)
      s += "b";
    else
      s += "b^" + std::to_string(x);
  }
  return s;
}

NormalFormHq reduce_free_product(const Word& w) {
  const Framing& f = w.framing();
  if (!f.is_psl_like())
    throw Error(ErrorKind::Config, "reduce_free_product needs an H_q or PSL(2,Z) framing, got " + f.name());
  NormalFormHq nf(f.alphabet == Alphabet::HeckeAB ? f.q : 3);
  for (int l : w.letters()) push_psl_letter(nf, f.alphabet, l);
  return nf;
}

int irreducible_length(const NormalFormHq& nf) { return nf.length(); }

int irreducible_length(const NormalFormHq& nf, Alphabet alphabet) {
  switch (alphabet) {
    case Alphabet::HeckeAB: return nf.length();
    case Alphabet::SigmaBar:
    case Alphabet::MagnusU: return sigma_bar_length(nf);
    default:
      throw Error(ErrorKind::UnsupportedMode, "irreducible length not implemented for this framing");
  }
}

int backbone_generation(const NormalFormHq& nf) { return nf.a_count(); }

FreeNormalForm reduce_free(const Word& w) {
  const Framing& f = w.framing();
  if (f.alphabet != Alphabet::Idempotent && f.alphabet != Alphabet::FreeBasis)
    throw Error(ErrorKind::Config, "reduce_free needs a free framing");
  bool idem = f.alphabet == Alphabet::Idempotent;
  FreeNormalForm nf(idem);
  for (int l : w.letters()) nf.push(idem ? std::abs(l) : l);
  return nf;
}

}  // namespace hypwalk
