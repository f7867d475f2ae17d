// Free-group word calculus over {s, t} and the word model of the generating
// diffeomorphisms: an element is a pair of reduced words giving the images of
// the two coordinate 3-spheres' parameters.
#pragma once

#include "mcg/intmath.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

// Command-line / relation-file token: generator name with an integer exponent.
struct WordToken {
  std::string gen;
  long long exp = 1;

  bool operator==(const WordToken&) const = default;
};

// Parse "y u^-1 a^3" style whitespace-separated words. "1" alone denotes the
// empty word. Throws UsageError on malformed syntax.
std::vector<WordToken> parse_word_tokens(const std::string& text);
std::string tokens_to_string(const std::vector<WordToken>& tokens);
std::vector<WordToken> invert_tokens(const std::vector<WordToken>& tokens);

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FreeGen { S, T };

struct FreeLetter {
  FreeGen gen;
  int sign;  // +1 or -1

  bool operator==(const FreeLetter&) const = default;
};

// Reduced word in the free group on {s, t}.
using FreeWord = std::vector<FreeLetter>;

FreeWord reduce(FreeWord w);
FreeWord concat(const FreeWord& a, const FreeWord& b);
FreeWord inverse(const FreeWord& w);
FreeWord free_word_from_string(const std::string& text);  // letters s, t with exponents
std::string free_word_to_string(const FreeWord& w);       // "1" for the empty word

// Substitute s |-> s_img, t |-> t_img into w, then reduce.
FreeWord substitute(const FreeWord& w, const FreeWord& s_img, const FreeWord& t_img);

// Exponent sums of s and t.
std::array<Int, 2> exponent_sums(const FreeWord& w);

// Word model of a diffeomorphism: the images of the two sphere parameters.
struct DiffeoPair {
  FreeWord w1, w2;

  bool operator==(const DiffeoPair&) const = default;
};

DiffeoPair diffeo_identity();

// Composite "apply `first`, then `then`": substitutes first's images into
// then's words.
DiffeoPair compose(const DiffeoPair& first, const DiffeoPair& then);

// Named generators: Y, U, A, B, their inverses ("Y^-1" etc.), and Id.
DiffeoPair diffeo_generator(const std::string& name);

// Evaluate a token chain in application order (leftmost acts first).
DiffeoPair eval_chain(const std::vector<WordToken>& tokens);

// Evaluate a token word in written group order (product of generators as
// written; rightmost acts first). eval_group_word(w) == eval_chain(reverse w).
DiffeoPair eval_group_word(const std::vector<WordToken>& tokens);

bool diffeo_equal(const DiffeoPair& a, const DiffeoPair& b);

// 2x2 integer matrix of s/t exponent sums: column j is the exponent vector of
// word j, so the map is multiplicative for `compose`. Determinant is +-1.
IntMat induced_h3_matrix(const DiffeoPair& d);

// Built-in identity table used by the verification suites: each entry is a
// pair of words over {Y,U,A,B} (group order) together with whether the two
// sides are equal already at the word-model level.
struct NamedIdentity {
  std::string name;
  std::string lhs, rhs;
  bool holds_in_word_model;
};

const std::vector<NamedIdentity>& diffeo_identity_suite();

}  // namespace mcg
