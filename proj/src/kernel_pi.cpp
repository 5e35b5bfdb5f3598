#include "artin/kernel_pi.hpp"

#include <stdexcept>

namespace artin {

namespace {

void check_d_word(const ArtinWord& w) {
  if (w.typ.family != Family::D)
    throw std::invalid_argument("word must be over a type D group");
}

std::string braid_pair_text(int a, int b) {
  return "braid relation (t" + std::to_string(a) + ", t" + std::to_string(b) +
         ")";
}

}  // namespace

bool in_kernel_pi(const ArtinWord& w) {
  check_d_word(w);
  return apply_nf(make_pi(w.typ.rank), w).is_identity();
}

KernelGeneratorList kernel_generators(int n) {
  if (n < 4) throw std::invalid_argument("rank must be at least 4");
  CoxType t = CoxType::D(n);
  std::vector<ArtinWord> gens(static_cast<size_t>(n - 1), empty_word(t));
  gens[static_cast<size_t>(n - 2)] =
      concat(generator_word(t, n - 1, -1), generator_word(t, n));
  for (int j = n - 2; j >= 1; --j) {
    const ArtinWord& prev = gens[static_cast<size_t>(j)];
    ArtinWord v = generator_word(t, j);
    v = concat(v, prev);
    v = concat(v, generator_word(t, j, -1));
    v = concat(v, inverse_word(prev));
    gens[static_cast<size_t>(j - 1)] = v;
  }
  return KernelGeneratorList{n, std::move(gens)};
}

std::optional<long long> central_defect(const ArtinWord& lhs,
                                        const ArtinWord& rhs) {
  check_d_word(lhs);
  if (rhs.typ != lhs.typ)
    throw std::invalid_argument("words are over different groups");
  return center_membership(multiply(inverse(normalize(rhs)), normalize(lhs)));
}

LiftResult lift_endomorphism(const LiftInput& input) {
  int n = input.n;
  if (n < 4) throw std::invalid_argument("rank must be at least 4");
  CoxType t = CoxType::D(n);
  if (static_cast<int>(input.candidate_images.size()) != n)
    throw std::invalid_argument("expected one candidate image per generator");
  for (const ArtinWord& g : input.candidate_images) {
    if (g.typ != t)
      throw std::invalid_argument("candidate image over the wrong group");
  }

  LiftResult result;
  result.corrections.assign(static_cast<size_t>(n), 0);
  long long k = kappa(t);
  ArtinWord delta = delta_word(t);

  std::vector<ArtinWord> lifted(static_cast<size_t>(n), empty_word(t));
  lifted[0] = input.candidate_images[0];

  // Each generator is corrected against its already-lifted braid neighbor:
  // the chain in order, then both fork generators against the fork neighbor.
  auto adjust = [&](int gen, int neighbor) -> bool {
    const ArtinWord& g = input.candidate_images[static_cast<size_t>(gen - 1)];
    const ArtinWord& u = lifted[static_cast<size_t>(neighbor - 1)];
    ArtinWord lhs = concat(concat(u, g), u);
    ArtinWord rhs = concat(concat(g, u), g);
    std::optional<long long> defect = central_defect(lhs, rhs);
    if (!defect) {
      result.error = LiftError{
          LiftErrorKind::DefectMissing, neighbor, gen,
          braid_pair_text(neighbor, gen) +
              " does not hold modulo the center"};
      return false;
    }
    result.corrections[static_cast<size_t>(gen - 1)] = *defect;
    lifted[static_cast<size_t>(gen - 1)] =
        concat(g, repeat_word(delta, k * *defect));
    return true;
  };

  for (int i = 2; i <= n - 2; ++i) {
    if (!adjust(i, i - 1)) return result;
  }
  if (!adjust(n - 1, n - 2)) return result;
  if (!adjust(n, n - 2)) return result;

  HomSpec h{t, t, lifted,
            input.label.empty() ? "lift" : "lift(" + input.label + ")"};
  if (auto bad = find_failing_relation(h)) {
    result.error = LiftError{
        LiftErrorKind::RelationFailed, bad->first, bad->second,
        "corrected images violate the defining relation (t" +
            std::to_string(bad->first) + ", t" + std::to_string(bad->second) +
            ")"};
    return result;
  }
  result.hom = std::move(h);
  return result;
}

bool lift_commutes_with_projection(const HomSpec& h, const LiftInput& input) {
  CoxType t = CoxType::D(input.n);
  if (h.source != t || h.target != t)
    throw std::invalid_argument("homomorphism types do not match");
  if (static_cast<int>(input.candidate_images.size()) != input.n)
    throw std::invalid_argument("expected one candidate image per generator");
  for (size_t i = 0; i < h.images.size(); ++i) {
    if (!equal_mod_center(h.images[i], input.candidate_images[i]))
      return false;
  }
  return true;
}

LiftInput lift_input_from_json(const std::string& text) {
  HomSpec h = hom_from_json(text);
  if (h.source != h.target || h.source.family != Family::D)
    throw std::invalid_argument(
        "bad lift input: source and target must be the same type D group");
  return LiftInput{h.source.rank, h.images, h.label};
}

std::string lift_input_to_json(const LiftInput& input) {
  CoxType t = CoxType::D(input.n);
  return hom_to_json(HomSpec{t, t, input.candidate_images,
                             input.label.empty() ? "candidate" : input.label});
}

}  // namespace artin
