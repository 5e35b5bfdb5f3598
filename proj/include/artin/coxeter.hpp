#pragma once

#include <string>
#include <vector>

namespace artin {

enum class Family { A, D };

// Finite Coxeter type designator. A<rank> acts on rank+1 symbols, D<rank> on
// rank symbols. Construction validates rank >= 1 for A and rank >= 4 for D.
struct CoxType {
  Family family;
  int rank;

  static CoxType A(int rank);
  static CoxType D(int rank);

  // Number of permuted symbols.
  int n() const { return family == Family::A ? rank + 1 : rank; }
  char letter() const { return family == Family::A ? 's' : 't'; }
  std::string name() const;

  bool operator==(const CoxType&) const = default;
};

// Parses "A5" or "D6". Throws std::invalid_argument naming the token.
CoxType parse_cox_type(const std::string& text);

// Coxeter matrix entry m(a, b) for 1-based generator indices. All entries are
// finite: 2 for non-adjacent pairs, 3 for edges of the diagram. In type D the
// last generator is adjacent only to generator rank-2.
int coxeter_m(CoxType t, int a, int b);

// Index map induced by conjugation with the longest element: reversal for
// type A, identity for even-rank D, swap of the two fork generators for
// odd-rank D.
int diagram_automorphism(CoxType t, int s);

// Element of W(A_rank) or W(D_rank), stored as the window [w(1), ..., w(n)].
// Type A windows are plain permutations; type D windows are signed with an
// even number of negative entries. Generators: s_i and t_i (i < n) swap
// symbols i, i+1; t_n sends n-1 to -n and n to -(n-1).
class CoxElement {
 public:
  static CoxElement identity(CoxType t);
  static CoxElement generator(CoxType t, int s);
  // Validates the window invariants; throws std::invalid_argument.
  static CoxElement from_window(CoxType t, std::vector<int> window);

  const CoxType& typ() const { return typ_; }
  const std::vector<int>& window() const { return window_; }
  // Signed image of symbol i, 1 <= |i| <= n.
  int image(int i) const;

  bool is_identity() const;
  CoxElement inverse() const;

  // In-place right and left multiplication by a generator.
  void right_mul_generator(int s);
  void left_mul_generator(int s);

  // True iff length(w * s) < length(w). Constant time.
  bool has_right_descent(int s) const;

  bool operator==(const CoxElement&) const = default;

 private:
  CoxElement(CoxType t, std::vector<int> w) : typ_(t), window_(std::move(w)) {}
  CoxType typ_;
  std::vector<int> window_;
};

// Composition: (u * v)(x) = u(v(x)). Types must match.
CoxElement operator*(const CoxElement& u, const CoxElement& v);

// Word length in the standard generators. Type A counts inversions; type D
// counts inversions plus negative-sum pairs of the positionally flipped
// window, which agrees with the generator model above (closed formula,
// independent of descent stripping).
int length(const CoxElement& w);

std::vector<int> right_descents(const CoxElement& w);
std::vector<int> left_descents(const CoxElement& w);
bool has_left_descent(const CoxElement& w, int s);

// Lexicographically smallest reduced word: repeatedly strips the smallest
// left descent.
std::vector<int> reduced_word(const CoxElement& w);

CoxElement longest_element(CoxType t);

// Longest element of the standard parabolic subgroup generated by X.
// X must be a nonempty set of valid generator indices.
CoxElement longest_parabolic(CoxType t, const std::vector<int>& X);

// w_S * w * w_S. Sends each generator s to diagram_automorphism(s).
CoxElement conj_by_longest(const CoxElement& w);

}  // namespace artin
