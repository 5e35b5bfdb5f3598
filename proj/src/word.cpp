#include "artin/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace artin {

namespace {

void check_index(CoxType t, int s, const std::string& where) {
  if (s < 1 || s > t.rank) {
    throw std::invalid_argument("generator index " + std::to_string(s) +
                                " out of range for " + t.name() + " in " +
                                where);
  }
}

}  // namespace

ArtinWord empty_word(CoxType t) { return ArtinWord{t, {}}; }

ArtinWord generator_word(CoxType t, int s, int sign) {
  check_index(t, s, "generator_word");
  return ArtinWord{t, {Letter{s, sign < 0 ? -1 : 1}}};
}

ArtinWord word_from_indices(CoxType t, const std::vector<int>& indices) {
  ArtinWord w = empty_word(t);
  w.letters.reserve(indices.size());
  for (int s : indices) {
    check_index(t, s, "word_from_indices");
    w.letters.push_back(Letter{s, 1});
  }
  return w;
}

ArtinWord concat(const ArtinWord& u, const ArtinWord& v) {
  if (!(u.typ == v.typ)) {
    throw std::invalid_argument("type mismatch in word concatenation");
  }
  ArtinWord w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

ArtinWord inverse_word(const ArtinWord& w) {
  ArtinWord r = empty_word(w.typ);
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    r.letters.push_back(Letter{it->index, -it->sign});
  }
  return r;
}

ArtinWord repeat_word(const ArtinWord& w, long long e) {
  if (e < 0) return repeat_word(inverse_word(w), -e);
  ArtinWord r = empty_word(w.typ);
  r.letters.reserve(w.letters.size() * static_cast<size_t>(e));
  for (long long i = 0; i < e; ++i) {
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
  }
  return r;
}

ArtinWord relation_word(CoxType t, int a, int b, int m) {
  check_index(t, a, "relation_word");
  check_index(t, b, "relation_word");
  if (m < 2) throw std::invalid_argument("relation_word needs m >= 2");
  ArtinWord w = empty_word(t);
  for (int i = 0; i < m; ++i) {
    w.letters.push_back(Letter{i % 2 == 0 ? a : b, 1});
  }
  return w;
}

ArtinWord parse_word(CoxType t, const std::string& text) {
  ArtinWord w = empty_word(t);
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const std::string bad = "bad word token '" + token + "'";
    if (token[0] != t.letter()) {
      throw std::invalid_argument(bad + " (expected prefix '" +
                                  std::string(1, t.letter()) + "' for " +
                                  t.name() + ")");
    }
    size_t pos = 1;
    size_t digits = 0;
    while (pos + digits < token.size() &&
           std::isdigit(static_cast<unsigned char>(token[pos + digits]))) {
      ++digits;
    }
    if (digits == 0) throw std::invalid_argument(bad + " (missing index)");
    int index = std::stoi(token.substr(pos, digits));
    pos += digits;
    long long exponent = 1;
    if (pos < token.size()) {
      if (token[pos] != '^') {
        throw std::invalid_argument(bad + " (junk after index)");
      }
      ++pos;
      size_t used = 0;
      try {
        exponent = std::stoll(token.substr(pos), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument(bad + " (bad exponent)");
      }
      if (used != token.size() - pos) {
        throw std::invalid_argument(bad + " (bad exponent)");
      }
    }
    if (index < 1 || index > t.rank) {
      throw std::invalid_argument(bad + " (index out of range for " +
                                  t.name() + ")");
    }
    int sign = exponent < 0 ? -1 : 1;
    long long count = exponent < 0 ? -exponent : exponent;
    for (long long i = 0; i < count; ++i) {
      w.letters.push_back(Letter{index, sign});
    }
  }
  return w;
}

std::string word_to_string(const ArtinWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += w.typ.letter();
    out += std::to_string(w.letters[i].index);
    if (w.letters[i].sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace artin
