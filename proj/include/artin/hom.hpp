#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/normal_form.hpp"

namespace artin {

// A homomorphism between Artin groups, stored as one image word per source
// generator. Composition stays syntactic; verification is explicit.
struct HomSpec {
  CoxType source;
  CoxType target;
  std::vector<ArtinWord> images;  // images[i] is the image of generator i+1
  std::string label;
};

HomSpec make_identity_assignment(CoxType t);

// The fold D_n -> A_{n-1}: t_i -> s_i for i < n, t_n -> s_{n-1}.
HomSpec make_pi(int n);
// The chain inclusion A_{n-1} -> D_n: s_i -> t_i.
HomSpec make_iota(int n);
// D_n -> A_{n-1}: t_i -> pi(t_i) * Delta[A_{n-1}]^{2p}.
HomSpec make_alpha(int n, long long p);
// A_{n-1} -> D_n: s_i -> t_i * Delta_Y^{2p} * Delta^{kappa q},
// Y the chain {1..n-1}.
HomSpec make_beta(int n, long long p, long long q);
// Endomorphism of A[D_n]: t_i -> t_i * Delta^{kappa p}.
HomSpec make_gamma(int n, long long p);
// Endomorphism of A[A_{n-1}]: s_i -> s_i * Delta^{2p}.
HomSpec make_bar_gamma(int n, long long p);
// The graph-swap automorphism of A[D_n]: exchanges the two fork generators.
HomSpec make_zeta(int n);
// The inversion automorphism of A[D_n]: t_i -> t_i^{-1}.
HomSpec make_chi(int n);
// The inversion automorphism of A[A_{n-1}]: s_i -> s_i^{-1}.
HomSpec make_bar_chi(int n);
// Conjugation h -> g h g^{-1} on the group g lives in.
HomSpec make_inner(const ArtinWord& g);
// Every source generator maps to the same word g (over g's own group).
HomSpec make_cyclic(CoxType source, const ArtinWord& g);

// Substitution: positive letters become the image word, negative letters its
// reversed inverse.
ArtinWord apply(const HomSpec& h, const ArtinWord& w);

// Precomputed normal forms of the generator images, for repeated application
// and relation sweeps.
class HomTable {
 public:
  explicit HomTable(const HomSpec& h);
  CoxType source() const { return source_; }
  CoxType target() const { return target_; }
  const NormalForm& image(int gen, int sign) const;
  NormalForm apply_word(const ArtinWord& w) const;

 private:
  CoxType source_;
  CoxType target_;
  std::vector<NormalForm> pos_;
  std::vector<NormalForm> neg_;
};

NormalForm apply_nf(const HomSpec& h, const ArtinWord& w);

// compose(g, h) applies h first: (g o h)(x) = g(h(x)).
HomSpec compose(const HomSpec& g, const HomSpec& h);

// First source pair (a, b) whose defining relation is not respected, if any.
std::optional<std::pair<int, int>> find_failing_relation(const HomSpec& h);
bool verify_hom(const HomSpec& h);

// True iff the two fork generators of a type-D source share an image.
bool pinch_test(const HomSpec& h);

// True iff h2 = ad_g o h1 generator-wise.
bool is_conjugate_by(const HomSpec& h1, const HomSpec& h2, const ArtinWord& g);

// Generator-wise word-problem equality of images.
bool images_equal(const HomSpec& h1, const HomSpec& h2);

// Interchange format: a JSON object with fields "images" (list of word
// strings), "label", "source", "target" (e.g. "D6"). Canonical output uses
// two-space indentation and alphabetical keys; parse then emit is idempotent.
std::string hom_to_json(const HomSpec& h);
HomSpec hom_from_json(const std::string& text);

}  // namespace artin
