#pragma once

#include <string>
#include <vector>

#include "artin/coxeter.hpp"

namespace artin {

struct Letter {
  int index;
  int sign;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

// Free word over the standard Artin generators of one group.
struct ArtinWord {
  CoxType typ;
  std::vector<Letter> letters;

  bool operator==(const ArtinWord&) const = default;
};

ArtinWord empty_word(CoxType t);
ArtinWord generator_word(CoxType t, int s, int sign = 1);
ArtinWord word_from_indices(CoxType t, const std::vector<int>& indices);

ArtinWord concat(const ArtinWord& u, const ArtinWord& v);
ArtinWord inverse_word(const ArtinWord& w);
ArtinWord repeat_word(const ArtinWord& w, long long e);

// Alternating product a b a b ... of m letters. Requires m >= 2.
ArtinWord relation_word(CoxType t, int a, int b, int m);

// Text format: whitespace-separated letters "s<k>" (type A) or "t<k>"
// (type D), each optionally followed by "^<int>"; exponents expand to
// repeated letters. Throws std::invalid_argument naming the bad token.
ArtinWord parse_word(CoxType t, const std::string& text);
std::string word_to_string(const ArtinWord& w);

}  // namespace artin
