// Finite group presentations: text format parser and the built-in tables.
//
// File format: one `gens: g1 g2 ...` line, then `rel: W1 = W2` lines where
// each side is a word in the shared token syntax ("1" = empty word).
// Comment lines start with '#'.
#pragma once

#include "mcg/abgrp.hpp"
#include "mcg/words.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mcg {

struct Presentation {
  std::vector<std::string> gens;
  // Each relation W1 = W2, both sides words over `gens`.
  std::vector<std::pair<std::vector<WordToken>, std::vector<WordToken>>> rels;
};

// Throws UsageError on malformed input or words using undeclared generators.
Presentation parse_presentation(const std::string& text);
std::string presentation_to_string(const Presentation& p);

// Built-in presentations:
//   gammaJ      : y,u,a,b  (the semidirect-product group)
//   G2, G4, G6  : torsion generator plus a,b (the amalgam factors)
//   H28         : central-extension presentation on a,b,sigma
//   E(m, n)     : central extension with exponents m (on [a,b]) and n
//                 (on the lift of the braid relator power)
Presentation builtin_presentation(const std::string& name);
Presentation extension_presentation(const Int& m, const Int& n);

// Abelianization: cokernel of the exponent-sum rows of all relators.
FgAbelianGroup abelianize_presentation(const Presentation& p);

}  // namespace mcg
