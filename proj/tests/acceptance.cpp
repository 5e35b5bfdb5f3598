// Acceptance gate: one line per criterion, exit code = number of failures.
// Grids and time budgets are pinned here; the checks themselves live in the
// sweep library so the command-line tool reaches every one of them too.
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>

#include "artin/sweep.hpp"

using namespace artin;

namespace {

int failures = 0;

struct Criterion {
  int number;
  std::string blurb;
  std::string family;
  Grid grid;
  std::optional<double> budget_seconds;
};

Grid base_grid(int n_min, int n_max, long long p_lim, long long q_lim) {
  Grid g;
  g.n_min = n_min;
  g.n_max = n_max;
  g.p_min = -p_lim;
  g.p_max = p_lim;
  g.q_min = -q_lim;
  g.q_max = q_lim;
  return g;
}

void run(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  FamilyResult result = run_family(c.family, c.grid);
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  bool in_budget = !c.budget_seconds || elapsed <= *c.budget_seconds;
  bool ok = result.ok() && in_budget;
  if (!ok) ++failures;

  std::string budget_note;
  if (c.budget_seconds) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), ", budget %.0fs", *c.budget_seconds);
    budget_note = buf;
  }
  std::printf("[%s] %2d %s: pass=%lld fail=%lld (%.1fs%s)\n",
              ok ? "PASS" : "FAIL", c.number, c.blurb.c_str(), result.passed,
              result.failed, elapsed, budget_note.c_str());
  for (const std::string& msg : result.failures) {
    std::printf("         - %s\n", msg.c_str());
  }
  if (!in_budget) {
    std::printf("         - exceeded time budget\n");
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  {
    Criterion c{1, "garside identities, both types, n=4..8",
                "garside-identities", base_grid(4, 8, 2, 2), 60.0};
    run(c);
  }
  {
    Criterion c{2, "squared garside block factorization, chain ranks 1..7",
                "delta-square-factorization", base_grid(4, 8, 2, 2), 30.0};
    run(c);
  }
  {
    Criterion c{3, "homomorphism catalog verification, n=4..8, p,q in -2..2",
                "hom-catalog", base_grid(4, 8, 2, 2), std::nullopt};
    run(c);
  }
  {
    Grid g = base_grid(4, 8, 2, 2);
    g.random_words = 500;
    Criterion c{4, "central twist formulas, 500 words per (n, p)",
                "central-twist", g, std::nullopt};
    run(c);
  }
  {
    Criterion c{5, "fold and twisted-inclusion images, n=4..7, p,q in -1..1",
                "projection-images", base_grid(4, 7, 1, 1), std::nullopt};
    run(c);
  }
  {
    Criterion c{6, "central-quotient lifting plus 20 rejected candidates",
                "central-lifting", base_grid(4, 8, 2, 2), std::nullopt};
    run(c);
  }
  {
    Criterion c{7, "kernel generators of the fold, n=4..8",
                "kernel-membership", base_grid(4, 8, 2, 2), std::nullopt};
    run(c);
  }
  {
    Criterion c{8, "homology shadow relations and quotient square, n=4..9",
                "homology-shadow", base_grid(4, 9, 2, 2), std::nullopt};
    run(c);
  }
  {
    Grid g = base_grid(4, 8, 2, 2);
    g.rewrite_rounds = 1000;
    Criterion c{9, "normal form soundness, 1000 rewrites per (type, n)",
                "normal-form-soundness", g, 300.0};
    run(c);
  }
  {
    Criterion c{10, "pinch distinguishers across the composite catalog",
                "pinch-distinguishers", base_grid(4, 8, 2, 2), std::nullopt};
    run(c);
  }

  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criteria failed\n", failures);
  }
  return failures;
}
