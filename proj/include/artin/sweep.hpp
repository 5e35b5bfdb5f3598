#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "artin/hom.hpp"

namespace artin {

// Sweep parameters. Ranks run over [n_min, n_max]; twist exponents over
// [p_min, p_max] x [q_min, q_max]. Results are deterministic for a fixed
// grid regardless of thread count.
struct Grid {
  int n_min = 4;
  int n_max = 7;
  long long p_min = -1;
  long long p_max = 1;
  long long q_min = -1;
  long long q_max = 1;
  int random_words = 100;    // per (n, p) cell of the central-twist family
  int rewrite_rounds = 200;  // per (type, n) cell of the soundness family
  unsigned threads = 0;      // 0 picks the hardware concurrency
  std::uint64_t seed = 12345;
};

struct FamilyResult {
  std::string name;
  long long passed = 0;
  long long failed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failed == 0; }
};

struct SweepReport {
  std::vector<FamilyResult> families;
  bool ok() const;
};

// Family names in report order.
const std::vector<std::string>& sweep_family_names();

SweepReport run_sweep(const Grid& grid);

// Run a single family by name over the grid.
FamilyResult run_family(const std::string& name, const Grid& grid);

// One line per family with pass/fail counts, then one indented line per
// failure. Deterministic byte-for-byte for a fixed grid.
std::string report_to_text(const SweepReport& report);
std::string report_to_json(const SweepReport& report);

// Deterministic word fodder shared by the sweep and the test binaries.
ArtinWord random_word(CoxType t, int len, std::mt19937_64& rng);

// One element-preserving rewrite: free insertion or cancellation, defining
// relator insertion, or an in-place braid substitution.
ArtinWord random_defining_rewrite(const ArtinWord& w, std::mt19937_64& rng);

}  // namespace artin
