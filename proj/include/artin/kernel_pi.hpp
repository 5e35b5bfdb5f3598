#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/hom.hpp"

namespace artin {

// Tools around 1 -> Ker(pi) -> A[D_n] -> A[A_{n-1}] -> 1 and the lifting of
// endomorphisms of the central quotient A[D_n]/<Delta^kappa>.

bool in_kernel_pi(const ArtinWord& w);

struct KernelGeneratorList {
  int n;
  std::vector<ArtinWord> gens;  // n-1 words over D_n, all in Ker(pi)
};

// Free generators of Ker(pi), by the word-level recursion
//   v_{n-1} = t_{n-1}^{-1} t_n,
//   v_{n-i} = t_{n-i} v_{n-i+1} t_{n-i}^{-1} v_{n-i+1}^{-1}.
KernelGeneratorList kernel_generators(int n);

// k such that rhs^{-1} lhs = Delta^{kappa k}, if the quotient is central.
std::optional<long long> central_defect(const ArtinWord& lhs,
                                        const ArtinWord& rhs);

// Candidate images of the central-quotient generators, lifted arbitrarily.
struct LiftInput {
  int n;
  std::vector<ArtinWord> candidate_images;
  std::string label;
};

enum class LiftErrorKind {
  DefectMissing,    // a braid pair is not a relation modulo the center
  RelationFailed,   // corrected images still violate a defining relation
};

struct LiftError {
  LiftErrorKind kind;
  int a;
  int b;
  std::string detail;
};

struct LiftResult {
  std::optional<HomSpec> hom;            // verified when present
  std::vector<long long> corrections;    // central exponent per generator
  std::optional<LiftError> error;
  bool ok() const { return hom.has_value(); }
};

// Corrects each candidate image by a central power so the braid relations
// along the chain hold exactly, then verifies every defining relation.
// The two fork generators are each adjusted against the fork neighbor.
LiftResult lift_endomorphism(const LiftInput& input);

// True iff each lifted image agrees with its candidate modulo the center.
bool lift_commutes_with_projection(const HomSpec& h, const LiftInput& input);

LiftInput lift_input_from_json(const std::string& text);
std::string lift_input_to_json(const LiftInput& input);

}  // namespace artin
