#include "artin/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "artin/homology.hpp"
#include "artin/kernel_pi.hpp"
#include "json.hpp"

namespace artin {

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo +
         static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct CellOut {
  long long passed = 0;
  long long failed = 0;
  std::vector<std::string> failures;

  template <class F>
  void check(bool ok, F&& message) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      failures.push_back(message());
    }
  }
};

std::string at_rank(CoxType t, const std::string& what) {
  return t.name() + ": " + what;
}

// garside-identities: the standard spelling normalizes to the garside
// element, conjugation by it permutes generators per the diagram symmetry,
// and its kappa-th power is central.
void garside_cell(int n, const Grid&, std::mt19937_64&, CellOut& out) {
  for (CoxType t : {CoxType::A(n - 1), CoxType::D(n)}) {
    NormalForm d = garside_element(t);
    out.check(normalize(delta_word(t)) == d,
              [&] { return at_rank(t, "delta word does not normalize"); });
    out.check(normalize(word_from_indices(
                  t, reduced_word(longest_element(t)))) == d,
              [&] { return at_rank(t, "tau of the longest element"); });
    NormalForm dinv = inverse(d);
    NormalForm z = central_data(t).generator;
    for (int s = 1; s <= t.rank; ++s) {
      NormalForm g = normalize(generator_word(t, s));
      out.check(
          multiply(multiply(d, g), dinv) ==
              normalize(generator_word(t, diagram_automorphism(t, s))),
          [&] {
            return at_rank(t, "conjugation table at generator " +
                                  std::to_string(s));
          });
      out.check(multiply(z, g) == multiply(g, z), [&] {
        return at_rank(t, "central power does not commute with generator " +
                              std::to_string(s));
      });
    }
  }
}

// delta-square-factorization: the squared garside element of a chain group
// equals the nested block word.
void delta_square_cell(int r, const Grid&, std::mt19937_64&, CellOut& out) {
  CoxType t = CoxType::A(r);
  out.check(equal(repeat_word(delta_word(t), 2), delta_square_word(t)),
            [&] { return at_rank(t, "block factorization"); });
}

// hom-catalog: every named map verifies, and the catalog-level identities
// between them hold generator-wise.
void hom_catalog_cell(int n, const Grid& grid, std::mt19937_64&,
                      CellOut& out) {
  CoxType d = CoxType::D(n);
  CoxType a = CoxType::A(n - 1);
  auto verified = [&](const HomSpec& h) {
    out.check(verify_hom(h),
              [&] { return at_rank(d, h.label + " fails a relation"); });
  };
  HomSpec pi = make_pi(n), iota = make_iota(n);
  HomSpec zeta = make_zeta(n), chi = make_chi(n);
  verified(pi);
  verified(iota);
  verified(zeta);
  verified(chi);
  verified(make_bar_chi(n));
  for (long long p = grid.p_min; p <= grid.p_max; ++p) {
    verified(make_alpha(n, p));
    verified(make_gamma(n, p));
    verified(make_bar_gamma(n, p));
    for (long long q = grid.q_min; q <= grid.q_max; ++q) {
      verified(make_beta(n, p, q));
    }
  }

  out.check(images_equal(compose(pi, iota), make_identity_assignment(a)),
            [&] { return at_rank(d, "fold after inclusion is not the identity"); });
  out.check(images_equal(make_alpha(n, 0), pi),
            [&] { return at_rank(d, "alpha(0) differs from the fold"); });
  out.check(images_equal(make_beta(n, 0, 0), iota),
            [&] { return at_rank(d, "beta(0,0) differs from the inclusion"); });
  out.check(images_equal(make_gamma(n, 0), make_identity_assignment(d)),
            [&] { return at_rank(d, "gamma(0) differs from the identity"); });

  HomSpec idd = make_identity_assignment(d);
  out.check(images_equal(compose(zeta, zeta), idd),
            [&] { return at_rank(d, "graph swap is not an involution"); });
  out.check(images_equal(compose(chi, chi), idd),
            [&] { return at_rank(d, "inversion is not an involution"); });
  out.check(images_equal(compose(zeta, chi), compose(chi, zeta)),
            [&] { return at_rank(d, "swap and inversion do not commute"); });
  for (long long p = grid.p_min; p <= grid.p_max; ++p) {
    out.check(images_equal(make_alpha(n, p),
                           compose(make_bar_gamma(n, p), pi)),
              [&] {
                return at_rank(d, "alpha(" + std::to_string(p) +
                                      ") does not factor through the fold");
              });
  }
  if (n % 2 == 1) {
    out.check(images_equal(zeta, make_inner(delta_word(d))),
              [&] { return at_rank(d, "swap is not conjugation at odd rank"); });
    out.check(is_conjugate_by(idd, zeta, delta_word(d)),
              [&] { return at_rank(d, "swap conjugator witness"); });
  }
}

// central-twist: gamma_p multiplies by the central power prescribed by the
// exponent sum, and scales exponent sums accordingly.
void central_twist_cell(int n, const Grid& grid, std::mt19937_64& rng,
                        CellOut& out) {
  CoxType t = CoxType::D(n);
  long long k = kappa(t);
  out.check(exponent_sum(delta_word(t)) == static_cast<long long>(n) * (n - 1),
            [&] { return at_rank(t, "garside exponent sum"); });
  for (long long p = grid.p_min; p <= grid.p_max; ++p) {
    HomTable table(make_gamma(n, p));
    for (int i = 0; i < grid.random_words; ++i) {
      ArtinWord u = random_word(t, rand_int(rng, 0, 12), rng);
      long long zu = exponent_sum(u);
      NormalForm lhs = table.apply_word(u);
      out.check(lhs == multiply(normalize(u),
                                power(garside_element(t), k * p * zu)),
                [&] {
                  return at_rank(t, "twist formula at p=" + std::to_string(p) +
                                        " word " + word_to_string(u));
                });
      out.check(exponent_sum(word_of(lhs)) ==
                    (1 + static_cast<long long>(n) * (n - 1) * k * p) * zu,
                [&] {
                  return at_rank(t, "twist scaling at p=" + std::to_string(p));
                });
    }
    for (long long q = grid.q_min; q <= grid.q_max; ++q) {
      out.check(
          table.apply_word(repeat_word(delta_word(t), q)) ==
              power(garside_element(t),
                    q * (1 + k * p * static_cast<long long>(n) * (n - 1))),
          [&] {
            return at_rank(t, "twist of a garside power, p=" +
                                  std::to_string(p) + " q=" +
                                  std::to_string(q));
          });
    }
  }
}

// projection-images: the fold sends the garside element onto the squared
// chain garside element, and the twisted inclusions send its central powers
// onto the predicted parabolic and central factors.
void projection_images_cell(int n, const Grid& grid, std::mt19937_64&,
                            CellOut& out) {
  CoxType d = CoxType::D(n);
  CoxType a = CoxType::A(n - 1);
  long long k = kappa(d);
  long long nn = static_cast<long long>(n) * (n - 1);

  out.check(apply_nf(make_pi(n), delta_word(d)) ==
                normalize(repeat_word(delta_word(a), 2)),
            [&] { return at_rank(d, "fold image of the garside element"); });

  std::vector<int> chain;
  for (int s = 1; s <= n - 1; ++s) chain.push_back(s);
  ArtinWord dy = parabolic_delta_word(d, chain);
  ArtinWord input = repeat_word(delta_word(a), 2 * k);
  for (long long p = grid.p_min; p <= grid.p_max; ++p) {
    for (long long q = grid.q_min; q <= grid.q_max; ++q) {
      NormalForm lhs = apply_nf(make_beta(n, p, q), input);
      NormalForm rhs =
          multiply(normalize(repeat_word(dy, 2 * k * (1 + p * nn))),
                   power(garside_element(d), k * k * q * nn));
      out.check(lhs == rhs, [&] {
        return at_rank(d, "twisted inclusion image at p=" +
                              std::to_string(p) + " q=" + std::to_string(q));
      });
    }
  }
}

// central-lifting: candidates that are homomorphisms modulo the center lift
// to verified endomorphisms compatible with the projection; broken
// candidates are rejected with a diagnostic.
void central_lifting_cell(int n, const Grid& grid, std::mt19937_64& rng,
                          CellOut& out) {
  CoxType t = CoxType::D(n);
  long long k = kappa(t);

  std::vector<HomSpec> honest;
  honest.push_back(make_zeta(n));
  honest.push_back(make_chi(n));
  honest.push_back(make_inner(parse_word(t, "t1 t3^-1")));
  honest.push_back(make_gamma(n, 1));

  for (const HomSpec& h : honest) {
    LiftInput exact{n, h.images, h.label};
    LiftResult r = lift_endomorphism(exact);
    out.check(r.ok() && r.hom->images == h.images &&
                  std::all_of(r.corrections.begin(), r.corrections.end(),
                              [](long long c) { return c == 0; }),
              [&] { return at_rank(t, "exact lift altered " + h.label); });
    if (r.ok()) {
      out.check(lift_commutes_with_projection(*r.hom, exact),
                [&] { return at_rank(t, "projection mismatch for " + h.label); });
    }

    LiftInput fuzzed{n, h.images, h.label + " perturbed"};
    for (auto& g : fuzzed.candidate_images) {
      g = concat(g, repeat_word(delta_word(t), k * rand_int(rng, -2, 2)));
    }
    LiftResult rf = lift_endomorphism(fuzzed);
    out.check(rf.ok() && verify_hom(*rf.hom),
              [&] { return at_rank(t, "perturbed lift failed for " + h.label); });
    if (rf.ok()) {
      out.check(lift_commutes_with_projection(*rf.hom, fuzzed), [&] {
        return at_rank(t, "perturbed projection mismatch for " + h.label);
      });
    }
  }

  // Four deterministic non-examples per rank; each must be rejected.
  std::vector<LiftInput> broken;
  auto identity_images = [&] {
    std::vector<ArtinWord> imgs;
    for (int i = 1; i <= n; ++i) imgs.push_back(generator_word(t, i));
    return imgs;
  };
  {
    LiftInput b{n, identity_images(), "chain scramble"};
    b.candidate_images[1] = parse_word(t, "t2 t1");
    broken.push_back(std::move(b));
  }
  {
    LiftInput b{n, identity_images(), "fork conjugate"};
    b.candidate_images[static_cast<size_t>(n - 1)] =
        concat(concat(generator_word(t, n - 2), generator_word(t, n)),
               generator_word(t, n - 2, -1));
    broken.push_back(std::move(b));
  }
  {
    LiftInput b{n, identity_images(), "swapped neighbors"};
    b.candidate_images[0] = generator_word(t, 2);
    b.candidate_images[1] = generator_word(t, 1);
    broken.push_back(std::move(b));
  }
  {
    LiftInput b{n, identity_images(), "erased generator"};
    b.candidate_images[0] = empty_word(t);
    broken.push_back(std::move(b));
  }
  for (const LiftInput& b : broken) {
    LiftResult r = lift_endomorphism(b);
    out.check(!r.ok() && r.error.has_value(),
              [&] { return at_rank(t, "accepted broken input: " + b.label); });
  }
  (void)grid;
}

// kernel-membership: the recursive generators all project to the identity.
void kernel_membership_cell(int n, const Grid&, std::mt19937_64&,
                            CellOut& out) {
  CoxType t = CoxType::D(n);
  KernelGeneratorList list = kernel_generators(n);
  out.check(static_cast<int>(list.gens.size()) == n - 1,
            [&] { return at_rank(t, "generator count"); });
  for (size_t j = 0; j < list.gens.size(); ++j) {
    out.check(in_kernel_pi(list.gens[j]) &&
                  !normalize(list.gens[j]).is_identity(),
              [&] {
                return at_rank(t, "kernel generator " + std::to_string(j + 1));
              });
  }
}

// homology-shadow: transvections satisfy exactly the graph relations,
// preserve the pairing, and the fold commutes with the class quotient.
void homology_cell(int n, const Grid& grid, std::mt19937_64& rng,
                   CellOut& out) {
  for (CoxType t : {CoxType::A(n - 1), CoxType::D(n)}) {
    TransvectionRep rep = transvection_rep(t);
    for (int a = 1; a <= t.rank; ++a) {
      for (int b = a + 1; b <= t.rank; ++b) {
        int m = coxeter_m(t, a, b);
        out.check(rep_apply(rep, relation_word(t, a, b, m)) ==
                      rep_apply(rep, relation_word(t, b, a, m)),
                  [&] {
                    return at_rank(t, "relation (" + std::to_string(a) + "," +
                                          std::to_string(b) + ")");
                  });
      }
    }
    int words = std::max(1, grid.random_words / 10);
    for (int i = 0; i < words; ++i) {
      ArtinWord w = random_word(t, rand_int(rng, 0, 20), rng);
      out.check(preserves_form(rep.form, rep_apply(rep, w)),
                [&] { return at_rank(t, "pairing not preserved"); });
    }
  }
  out.check(check_commuting_square(n), [&] {
    return at_rank(CoxType::D(n), "class quotient square");
  });
}

// normal-form-soundness: element-preserving rewrites preserve normal forms,
// and normalization is idempotent through its own word spelling.
void soundness_cell(int n, const Grid& grid, std::mt19937_64& rng,
                    CellOut& out) {
  for (CoxType t : {CoxType::A(n - 1), CoxType::D(n)}) {
    for (int i = 0; i < grid.rewrite_rounds; ++i) {
      ArtinWord w = random_word(t, rand_int(rng, 0, 30), rng);
      ArtinWord rewritten = w;
      int moves = rand_int(rng, 1, 6);
      for (int m = 0; m < moves; ++m) {
        rewritten = random_defining_rewrite(rewritten, rng);
      }
      NormalForm u = normalize(w);
      out.check(u == normalize(rewritten),
                [&] { return at_rank(t, "rewrite changed the element"); });
      out.check(normalize(word_of(u)) == u,
                [&] { return at_rank(t, "normalization not idempotent"); });
    }
  }
}

// pinch-distinguishers: maps factoring through the fold identify the two
// fork generators; central twists and automorphism composites never do.
void pinch_cell(int n, const Grid& grid, std::mt19937_64&, CellOut& out) {
  CoxType t = CoxType::D(n);
  std::vector<HomSpec> autos;
  autos.push_back(make_identity_assignment(t));
  autos.push_back(make_zeta(n));
  autos.push_back(make_chi(n));
  autos.push_back(compose(make_zeta(n), make_chi(n)));

  HomSpec pi = make_pi(n);
  for (const HomSpec& psi : autos) {
    for (long long p = grid.p_min; p <= grid.p_max; ++p) {
      for (long long q = grid.q_min; q <= grid.q_max; ++q) {
        HomSpec through_fold = compose(compose(psi, make_beta(n, p, q)), pi);
        out.check(pinch_test(through_fold), [&] {
          return at_rank(t, "fold composite failed to pinch: " +
                                through_fold.label);
        });
      }
      HomSpec twisted = compose(psi, make_gamma(n, p));
      out.check(!pinch_test(twisted), [&] {
        return at_rank(t, "twist composite pinched: " + twisted.label);
      });
    }
  }
  for (const ArtinWord& g :
       {generator_word(t, 1),
        concat(generator_word(t, 2), generator_word(t, n, -1)),
        delta_word(t)}) {
    out.check(pinch_test(make_cyclic(t, g)), [&] {
      return at_rank(t, "cyclic assignment failed to pinch");
    });
  }
}

using CellFn = void (*)(int, const Grid&, std::mt19937_64&, CellOut&);

struct FamilyDef {
  std::string name;
  CellFn fn;
};

const std::vector<FamilyDef>& families() {
  static const std::vector<FamilyDef> defs = {
      {"garside-identities", garside_cell},
      {"delta-square-factorization", delta_square_cell},
      {"hom-catalog", hom_catalog_cell},
      {"central-twist", central_twist_cell},
      {"projection-images", projection_images_cell},
      {"central-lifting", central_lifting_cell},
      {"kernel-membership", kernel_membership_cell},
      {"homology-shadow", homology_cell},
      {"normal-form-soundness", soundness_cell},
      {"pinch-distinguishers", pinch_cell},
  };
  return defs;
}

struct Cell {
  size_t family;
  int param;
};

}  // namespace

bool SweepReport::ok() const {
  for (const FamilyResult& f : families) {
    if (!f.ok()) return false;
  }
  return true;
}

const std::vector<std::string>& sweep_family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const FamilyDef& def : families()) out.push_back(def.name);
    return out;
  }();
  return names;
}

ArtinWord random_word(CoxType t, int len, std::mt19937_64& rng) {
  ArtinWord w = empty_word(t);
  for (int i = 0; i < len; ++i) {
    w.letters.push_back(Letter{rand_int(rng, 1, t.rank), rng() % 2 ? 1 : -1});
  }
  return w;
}

ArtinWord random_defining_rewrite(const ArtinWord& w, std::mt19937_64& rng) {
  CoxType t = w.typ;
  int kind = rand_int(rng, 0, 3);
  ArtinWord out = w;

  auto free_insertion = [&] {
    int g = rand_int(rng, 1, t.rank);
    int sign = rng() % 2 ? 1 : -1;
    size_t pos = static_cast<size_t>(
        rand_int(rng, 0, static_cast<int>(out.letters.size())));
    Letter pair[2] = {Letter{g, sign}, Letter{g, -sign}};
    out.letters.insert(out.letters.begin() + static_cast<long long>(pos),
                       pair, pair + 2);
  };

  if (kind == 1 && out.letters.size() >= 2) {
    // Cancel the first adjacent inverse pair at or after a random start.
    size_t limit = out.letters.size() - 1;
    size_t start = static_cast<size_t>(
        rand_int(rng, 0, static_cast<int>(limit - 1)));
    for (size_t off = 0; off < limit; ++off) {
      size_t i = (start + off) % limit;
      if (out.letters[i].index == out.letters[i + 1].index &&
          out.letters[i].sign == -out.letters[i + 1].sign) {
        out.letters.erase(out.letters.begin() + static_cast<long long>(i),
                          out.letters.begin() + static_cast<long long>(i + 2));
        return out;
      }
    }
    free_insertion();
    return out;
  }

  if (kind == 2) {
    int a = rand_int(rng, 1, t.rank);
    int b = rand_int(rng, 1, t.rank);
    while (b == a) b = rand_int(rng, 1, t.rank);
    int m = coxeter_m(t, a, b);
    ArtinWord relator = concat(relation_word(t, a, b, m),
                               inverse_word(relation_word(t, b, a, m)));
    size_t pos = static_cast<size_t>(
        rand_int(rng, 0, static_cast<int>(out.letters.size())));
    out.letters.insert(out.letters.begin() + static_cast<long long>(pos),
                       relator.letters.begin(), relator.letters.end());
    return out;
  }

  if (kind == 3 && !out.letters.empty()) {
    // Replace one positive alternating run by its braid-relation mirror.
    size_t len = out.letters.size();
    size_t start = static_cast<size_t>(
        rand_int(rng, 0, static_cast<int>(len - 1)));
    for (size_t off = 0; off < len; ++off) {
      size_t p = (start + off) % len;
      if (out.letters[p].sign < 0 || p + 1 >= len) continue;
      int a = out.letters[p].index;
      int b = out.letters[p + 1].index;
      if (a == b || out.letters[p + 1].sign < 0) continue;
      int m = coxeter_m(t, a, b);
      if (p + static_cast<size_t>(m) > len) continue;
      ArtinWord pattern = relation_word(t, a, b, m);
      bool match = true;
      for (int j = 0; j < m; ++j) {
        if (!(out.letters[p + static_cast<size_t>(j)] ==
              pattern.letters[static_cast<size_t>(j)])) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      ArtinWord mirror = relation_word(t, b, a, m);
      for (int j = 0; j < m; ++j) {
        out.letters[p + static_cast<size_t>(j)] =
            mirror.letters[static_cast<size_t>(j)];
      }
      return out;
    }
  }

  free_insertion();
  return out;
}

namespace {

std::vector<FamilyResult> run_cells(const Grid& grid,
                                    const std::vector<size_t>& family_ids) {
  if (grid.n_min < 4 || grid.n_max < grid.n_min)
    throw std::invalid_argument("rank range must satisfy 4 <= n_min <= n_max");
  if (grid.p_min > grid.p_max || grid.q_min > grid.q_max)
    throw std::invalid_argument("exponent ranges must be nonempty");

  std::vector<Cell> cells;
  for (size_t f : family_ids) {
    if (families()[f].name == "delta-square-factorization") {
      for (int r = 1; r <= grid.n_max - 1; ++r) cells.push_back({f, r});
    } else {
      for (int n = grid.n_min; n <= grid.n_max; ++n) cells.push_back({f, n});
    }
  }

  std::vector<CellOut> results(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      // Seeded per cell so the schedule cannot affect the outcome.
      std::mt19937_64 rng(grid.seed * 1000003ULL +
                          cell.family * 131071ULL +
                          static_cast<std::uint64_t>(cell.param));
      families()[cell.family].fn(cell.param, grid, rng, results[i]);
    }
  };

  unsigned threads = grid.threads ? grid.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  std::vector<FamilyResult> out;
  for (size_t f : family_ids)
    out.push_back(FamilyResult{families()[f].name, 0, 0, {}});
  for (size_t i = 0; i < cells.size(); ++i) {
    size_t slot = 0;
    while (family_ids[slot] != cells[i].family) ++slot;
    FamilyResult& fr = out[slot];
    fr.passed += results[i].passed;
    fr.failed += results[i].failed;
    fr.failures.insert(fr.failures.end(), results[i].failures.begin(),
                       results[i].failures.end());
  }
  return out;
}

}  // namespace

SweepReport run_sweep(const Grid& grid) {
  std::vector<size_t> ids;
  for (size_t f = 0; f < families().size(); ++f) ids.push_back(f);
  SweepReport report;
  report.families = run_cells(grid, ids);
  return report;
}

FamilyResult run_family(const std::string& name, const Grid& grid) {
  for (size_t f = 0; f < families().size(); ++f) {
    if (families()[f].name == name) {
      return run_cells(grid, {f}).front();
    }
  }
  throw std::invalid_argument("unknown family: " + name);
}

std::string report_to_text(const SweepReport& report) {
  std::string out;
  for (const FamilyResult& f : report.families) {
    out += f.name + ": pass=" + std::to_string(f.passed) +
           " fail=" + std::to_string(f.failed) + "\n";
    for (const std::string& msg : f.failures) {
      out += "  - " + msg + "\n";
    }
  }
  return out;
}

std::string report_to_json(const SweepReport& report) {
  nlohmann::json j;
  j["ok"] = report.ok();
  nlohmann::json fams = nlohmann::json::array();
  for (const FamilyResult& f : report.families) {
    nlohmann::json jf;
    jf["name"] = f.name;
    jf["passed"] = f.passed;
    jf["failed"] = f.failed;
    jf["failures"] = f.failures;
    fams.push_back(jf);
  }
  j["families"] = fams;
  return j.dump(2) + "\n";
}

}  // namespace artin
