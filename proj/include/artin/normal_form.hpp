#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/word.hpp"

namespace artin {

// Left-greedy normal form Delta^k x_1 ... x_l. Invariants: every factor is a
// simple element other than the identity and the longest element, and each
// adjacent pair (x_i, x_{i+1}) is left-weighted, meaning every left descent
// of x_{i+1} is a right descent of x_i. Two forms represent the same group
// element iff they are identical field by field.
class NormalForm {
 public:
  explicit NormalForm(CoxType t) : typ_(t) {}
  NormalForm(CoxType t, long long delta) : typ_(t), delta_(delta) {}

  const CoxType& typ() const { return typ_; }
  long long delta() const { return delta_; }
  const std::vector<CoxElement>& factors() const { return factors_; }
  bool is_identity() const { return delta_ == 0 && factors_.empty(); }

  // Right multiplication, keeping the form canonical.
  void mul_delta_power(long long m);
  void mul_simple(const CoxElement& x);
  void mul_letter(const Letter& l);

  bool operator==(const NormalForm&) const = default;

 private:
  void reweight_from(int pair);
  void cleanup();

  CoxType typ_;
  long long delta_ = 0;
  std::vector<CoxElement> factors_;
};

NormalForm normalize(const ArtinWord& w);
NormalForm multiply(const NormalForm& u, const NormalForm& v);
NormalForm inverse(const NormalForm& u);
NormalForm power(const NormalForm& u, long long e);

bool equal(const ArtinWord& u, const ArtinWord& v);

// Sum of letter signs; on normal forms, recovered from factor lengths.
long long exponent_sum(const ArtinWord& w);
long long exponent_sum(const NormalForm& u);

// Simple element associated with a Coxeter group element.
NormalForm tau(const CoxElement& w);

// The Garside element Delta = tau(longest element).
NormalForm garside_element(CoxType t);

// Standard positive spelling of Delta as cascading blocks; normalizing it
// must give garside_element. Letter count: rank(rank+1)/2 for A over
// rank+1 symbols, n(n-1) for D.
ArtinWord delta_word(CoxType t);

// Positive spelling of Delta^2 for type A built from nested symmetric
// blocks (s_i .. s_{r-1} s_r s_r s_{r-1} .. s_i).
ArtinWord delta_square_word(CoxType t);

// A positive word for the longest parabolic element on generators X.
ArtinWord parabolic_delta_word(CoxType t, const std::vector<int>& X);

// Some word spelling the element (delta blocks first, then factor words).
ArtinWord word_of(const NormalForm& u);

// "D^<k> | <f1>.<f2>" with each factor rendered as its smallest-descent
// reduced word.
std::string render(const NormalForm& u);

// Smallest positive power of Delta generating the center: 2 for type A by
// convention, 1 for even-rank D, 2 for odd-rank D.
int kappa(CoxType t);

struct CentralData {
  int kappa;
  NormalForm generator;
};
CentralData central_data(CoxType t);

// q such that u = Delta^(kappa q), when u is central of that shape.
std::optional<long long> center_membership(const NormalForm& u);

// Whether u and v agree up to a central factor. Type D only.
bool equal_mod_center(const ArtinWord& u, const ArtinWord& v);

}  // namespace artin
