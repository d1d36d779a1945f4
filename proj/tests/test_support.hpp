#pragma once

#include <random>

#include "lcheck/character.hpp"
#include "lcheck/rep.hpp"

namespace lcheck::testing {

inline FormalCharacter random_character(std::mt19937_64& rng) {
  static const char* const kGens[] = {"chi", "omega", "omega'", "mu", "mu'", "eta", "xi"};
  std::uniform_int_distribution<int> e(-2, 2);
  FormalCharacter c = FormalCharacter::trivial();
  for (const char* g : kGens) c *= FormalCharacter::generator(g).pow(e(rng));
  return c;
}

/// Satake-evaluable atom: a character or Sym^m of either base.
inline RepAtom random_atom(std::mt19937_64& rng, int max_m = 4) {
  std::uniform_int_distribution<int> m(0, max_m);
  std::bernoulli_distribution coin(0.5);
  Base b = coin(rng) ? Base::Pi : Base::PiPrime;
  return RepAtom::sym(b, m(rng), random_character(rng));
}

inline VirtualRep random_sum(std::mt19937_64& rng, int max_terms, int max_m = 4) {
  std::uniform_int_distribution<int> n(1, max_terms), mult(1, 3);
  VirtualRep v;
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) v.add(random_atom(rng, max_m), mult(rng));
  return v;
}

/// Sum of atoms and raw RS pairs.
inline VirtualRep random_rep(std::mt19937_64& rng, int max_entries) {
  std::uniform_int_distribution<int> n(1, max_entries), mult(1, 3);
  std::bernoulli_distribution coin(0.4);
  VirtualRep v;
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) {
    if (coin(rng)) {
      v.add(RsPair{random_atom(rng), random_atom(rng)}, mult(rng));
    } else {
      v.add(random_atom(rng), mult(rng));
    }
  }
  return v;
}

}  // namespace lcheck::testing
