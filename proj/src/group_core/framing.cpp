#include "hypwalk/framing.hpp"

#include <algorithm>
#include <cstdlib>
#include <regex>

#include "hypwalk/errors.hpp"
#include "json.hpp"

namespace hypwalk {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedWord: return "malformed-word";
    case ErrorKind::UnsupportedMode: return "unsupported-mode";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Config: return "config";
    case ErrorKind::InsufficientSamples: return "insufficient-samples";
    case ErrorKind::DegenerateRoot: return "degenerate-root";
    case ErrorKind::NumericalConsistency: return "numerical-consistency";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::SingularWeight: return "singular-weight";
    case ErrorKind::LatticeEdge: return "lattice-edge";
    case ErrorKind::PointAtInfinity: return "point-at-infinity";
    case ErrorKind::InvalidDistance: return "invalid-distance";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Config: return 2;
    case ErrorKind::MalformedWord: return 3;
    case ErrorKind::ResourceLimit: return 4;
    case ErrorKind::UnsupportedMode: return 5;
    case ErrorKind::InsufficientSamples: return 6;
    case ErrorKind::DegenerateRoot:
    case ErrorKind::NumericalConsistency:
    case ErrorKind::NonConvergence: return 7;
    case ErrorKind::SingularWeight:
    case ErrorKind::LatticeEdge:
    case ErrorKind::PointAtInfinity:
    case ErrorKind::InvalidDistance:
    case ErrorKind::Pole: return 8;
    case ErrorKind::Internal: return 9;
  }
  return 9;
}

std::vector<int> Framing::moves() const {
  switch (alphabet) {
    case Alphabet::HeckeAB:
    case Alphabet::ModularST: return {1, 2, -2};
    case Alphabet::SigmaBar:
    case Alphabet::BraidSigma:
    case Alphabet::BraidTilde:
    case Alphabet::MagnusU: return {1, -1, 2, -2};
    case Alphabet::Idempotent: {
      std::vector<int> m;
      for (int i = 1; i <= static_cast<int>(generators.size()); ++i) m.push_back(i);
      return m;
    }
    case Alphabet::FreeBasis: {
      std::vector<int> m;
      for (int i = 1; i <= static_cast<int>(generators.size()); ++i) {
        m.push_back(i);
        m.push_back(-i);
      }
      return m;
    }
  }
  return {};
}

bool Framing::valid_letter(int letter) const {
  if (letter == 0) return false;
  int g = std::abs(letter);
  return g <= static_cast<int>(generators.size());
}

int Framing::inverse_letter(int letter) const {
  switch (alphabet) {
    case Alphabet::HeckeAB:
    case Alphabet::ModularST:
      return std::abs(letter) == 1 ? 1 : -letter;
    case Alphabet::Idempotent: return std::abs(letter);
    default: return -letter;
  }
}

bool Framing::is_psl_like() const {
  return alphabet == Alphabet::HeckeAB || alphabet == Alphabet::ModularST ||
         alphabet == Alphabet::SigmaBar || alphabet == Alphabet::MagnusU;
}

std::string Framing::name() const {
  switch (alphabet) {
    case Alphabet::HeckeAB: return "H" + std::to_string(q);
    case Alphabet::ModularST: return "ST";
    case Alphabet::SigmaBar: return "PSL";
    case Alphabet::BraidSigma: return "B3";
    case Alphabet::BraidTilde: return "B3tilde";
    case Alphabet::MagnusU: return "PSLu";
    case Alphabet::Idempotent: return "F" + std::to_string(generators.size()) + "idem";
    case Alphabet::FreeBasis: return "F" + std::to_string(generators.size()) + "free";
  }
  return "?";
}

std::string Framing::letter_name(int letter) const {
  if (!valid_letter(letter)) return "?";
  const auto& g = generators[std::abs(letter) - 1];
  if (letter < 0 && g.order != 2) return g.name + "^-1";
  return g.name;
}

Framing hecke_framing(int q) {
  if (q < 3 || q > 64) throw Error(ErrorKind::Config, "Hecke q must lie in 3..64");
  Framing f;
  f.group = q == 3 ? GroupId::PSL2Z : GroupId::Hecke;
  f.alphabet = Alphabet::HeckeAB;
  f.generators = {{"a2", 2}, {"b" + std::to_string(q), q}};
  f.q = q;
  return f;
}

Framing modular_st_framing() {
  Framing f;
  f.group = GroupId::PSL2Z;
  f.alphabet = Alphabet::ModularST;
  f.generators = {{"S", 2}, {"T", 0}};
  return f;
}

Framing sigma_bar_framing() {
  Framing f;
  f.group = GroupId::PSL2Z;
  f.alphabet = Alphabet::SigmaBar;
  f.generators = {{"sbar1", 0}, {"sbar2", 0}};
  return f;
}

Framing braid_sigma_framing() {
  Framing f;
  f.group = GroupId::B3;
  f.alphabet = Alphabet::BraidSigma;
  f.generators = {{"sigma1", 0}, {"sigma2", 0}};
  return f;
}

Framing braid_tilde_framing() {
  Framing f;
  f.group = GroupId::B3;
  f.alphabet = Alphabet::BraidTilde;
  f.generators = {{"atilde", 0}, {"btilde", 0}};
  return f;
}

Framing magnus_u_framing(double u) {
  if (!(u > 0)) throw Error(ErrorKind::Config, "u must be positive");
  Framing f;
  f.group = GroupId::PSL2Z_u;
  f.alphabet = Alphabet::MagnusU;
  f.generators = {{"usigma1", 0}, {"usigma2", 0}};
  f.u = u;
  return f;
}

Framing idempotent_framing(int m) {
  if (m < 2) throw Error(ErrorKind::Config, "idempotent framing needs at least 2 generators");
  Framing f;
  f.group = GroupId::Free;
  f.alphabet = Alphabet::Idempotent;
  for (int i = 1; i <= m; ++i) f.generators.push_back({"g" + std::to_string(i), 2});
  return f;
}

Framing free_framing(int rank) {
  if (rank < 1) throw Error(ErrorKind::Config, "free group rank must be positive");
  Framing f;
  f.group = GroupId::Free;
  f.alphabet = Alphabet::FreeBasis;
  for (int i = 1; i <= rank; ++i) f.generators.push_back({"h" + std::to_string(i), 0});
  return f;
}

Framing framing_by_name(const std::string& name, double u) {
  static const std::regex hq(R"(H(\d+))"), idem(R"(F(\d+)idem)"), fr(R"(F(\d+)free)");
  std::smatch m;
  if (std::regex_match(name, m, hq)) return hecke_framing(std::stoi(m[1]));
  if (std::regex_match(name, m, idem)) return idempotent_framing(std::stoi(m[1]));
  if (std::regex_match(name, m, fr)) return free_framing(std::stoi(m[1]));
  if (name == "PSL") return sigma_bar_framing();
  if (name == "ST") return modular_st_framing();
  if (name == "B3") return braid_sigma_framing();
  if (name == "B3tilde") return braid_tilde_framing();
  if (name == "PSLu") return magnus_u_framing(u);
  // the four-letter {h1,h2,h1^-1,h2^-1} framing is the rank-2 free basis
  if (name == "F4") return free_framing(2);
  if (name == "F3") return idempotent_framing(3);
  throw Error(ErrorKind::Config, "unknown group/framing: " + name);
}

Word::Word(Framing framing, std::vector<int> letters)
    : framing_(std::move(framing)), letters_(std::move(letters)) {
  for (int l : letters_)
    if (!framing_.valid_letter(l))
      throw Error(ErrorKind::MalformedWord,
                  "letter " + std::to_string(l) + " not in framing " + framing_.name());
}

Word Word::concat(const Word& other) const {
  std::vector<int> l = letters_;
  l.insert(l.end(), other.letters_.begin(), other.letters_.end());
  return Word(framing_, std::move(l));
}

Word Word::inverse() const {
  std::vector<int> l;
  l.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) l.push_back(framing_.inverse_letter(*it));
  return Word(framing_, std::move(l));
}

std::string Word::to_json() const {
  nlohmann::json j = {{"framing", framing_.name()}, {"letters", letters_}};
  return j.dump();
}

Word Word::from_json(const Framing& framing, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedWord, e.what());
  }
  const nlohmann::json& arr = j.is_object() ? j.at("letters") : j;
  if (!arr.is_array()) throw Error(ErrorKind::MalformedWord, "word JSON must be an array of integers");
  std::vector<int> letters;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) throw Error(ErrorKind::MalformedWord, "non-integer letter");
    letters.push_back(x.get<int>());
  }
  return Word(framing, std::move(letters));
}

}  // namespace hypwalk
