// Batch front end: normal forms, word equality, homomorphism application and
// verification, central-quotient lifting, and the identity sweep.
//
// Exit codes: 0 success or "true", 1 semantic "false" (distinct words, failed
// verification, failed sweep), 2 unusable input, 3 failed lift.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "artin/kernel_pi.hpp"
#include "artin/sweep.hpp"

using namespace artin;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_len(const ArtinWord& w, long long max_len) {
  if (static_cast<long long>(w.letters.size()) > max_len) {
    throw std::invalid_argument(
        "word length " + std::to_string(w.letters.size()) +
        " exceeds --max-len " + std::to_string(max_len));
  }
}

// The group designator may come as a leading positional or as --group.
CoxType resolve_group(std::vector<std::string>& args,
                      const std::string& group_flag, size_t words_needed,
                      const std::string& usage) {
  if (group_flag.empty()) {
    if (args.size() != words_needed + 1)
      throw std::invalid_argument("expected " + usage);
    CoxType t = parse_cox_type(args.front());
    args.erase(args.begin());
    return t;
  }
  if (args.size() != words_needed)
    throw std::invalid_argument("expected " + usage);
  return parse_cox_type(group_flag);
}

std::pair<long long, long long> parse_range(const std::string& text) {
  size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("bad range '" + text +
                                "' (expected the form a..b)");
  try {
    long long lo = std::stoll(text.substr(0, dots));
    long long hi = std::stoll(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text +
                                "' (expected the form a..b)");
  }
}

int run_nf(std::vector<std::string> args, const std::string& group_flag,
           long long max_len) {
  CoxType t = resolve_group(args, group_flag, 1, "nf <group> <word>");
  ArtinWord w = parse_word(t, args[0]);
  check_len(w, max_len);
  std::printf("%s\n", render(normalize(w)).c_str());
  return 0;
}

int run_equal(std::vector<std::string> args, const std::string& group_flag,
              long long max_len) {
  CoxType t = resolve_group(args, group_flag, 2, "equal <group> <word> <word>");
  ArtinWord u = parse_word(t, args[0]);
  ArtinWord v = parse_word(t, args[1]);
  check_len(u, max_len);
  check_len(v, max_len);
  if (equal(u, v)) {
    std::printf("equal\n");
    return 0;
  }
  std::printf("distinct\n");
  return 1;
}

int run_apply(const std::string& spec_path, const std::string& word_text,
              long long max_len) {
  HomSpec h = hom_from_json(read_file(spec_path));
  ArtinWord w = parse_word(h.source, word_text);
  check_len(w, max_len);
  ArtinWord out = apply(h, w);
  check_len(out, max_len);
  std::printf("%s\n", word_to_string(out).c_str());
  return 0;
}

int run_verify(const std::string& spec_path, long long max_len) {
  HomSpec h = hom_from_json(read_file(spec_path));
  for (const ArtinWord& img : h.images) check_len(img, max_len);
  if (auto bad = find_failing_relation(h)) {
    std::printf("relation (%c%d, %c%d) fails\n", h.source.letter(), bad->first,
                h.source.letter(), bad->second);
    return 1;
  }
  std::printf("ok\n");
  return 0;
}

int run_lift(const std::string& input_path, long long max_len) {
  LiftInput input = lift_input_from_json(read_file(input_path));
  for (const ArtinWord& g : input.candidate_images) check_len(g, max_len);
  LiftResult r = lift_endomorphism(input);
  if (!r.ok()) {
    std::fprintf(stderr, "lift failed: %s\n", r.error->detail.c_str());
    return 3;
  }
  std::string corrections;
  for (long long c : r.corrections) {
    if (!corrections.empty()) corrections += ' ';
    corrections += std::to_string(c);
  }
  std::fprintf(stderr, "corrections: %s\n", corrections.c_str());
  std::fputs(hom_to_json(*r.hom).c_str(), stdout);
  return 0;
}

int run_sweep_cmd(const std::vector<std::string>& args, bool as_json) {
  if (args.size() < 2 || args.size() > 4)
    throw std::invalid_argument(
        "expected sweep <n_min> <n_max> [p_range] [q_range]");
  Grid grid;
  try {
    grid.n_min = static_cast<int>(std::stoll(args[0]));
    grid.n_max = static_cast<int>(std::stoll(args[1]));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rank bound (expected an integer)");
  }
  auto p = args.size() > 2 ? parse_range(args[2])
                           : std::pair<long long, long long>{-1, 1};
  auto q = args.size() > 3 ? parse_range(args[3])
                           : std::pair<long long, long long>{-1, 1};
  grid.p_min = p.first;
  grid.p_max = p.second;
  grid.q_min = q.first;
  grid.q_max = q.second;
  SweepReport report = run_sweep(grid);
  std::fputs(as_json ? report_to_json(report).c_str()
                     : report_to_text(report).c_str(),
             stdout);
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in the chain and fork braid-like groups"};
  app.require_subcommand(1);

  std::string group_flag;
  long long max_len = 10000;
  bool as_json = false;
  app.add_option("--group", group_flag, "group designator (A<k> or D<n>)");
  app.add_option("--max-len", max_len,
                 "cap on the letter count of any processed word")
      ->capture_default_str();
  app.add_flag("--json", as_json, "machine-readable sweep report");

  std::vector<std::string> nf_args, equal_args, sweep_args;
  std::string apply_spec, apply_word, verify_spec, lift_input;

  CLI::App* nf = app.add_subcommand("nf", "print the normal form of a word");
  nf->add_option("args", nf_args, "[group] word")->expected(-1);
  nf->fallthrough();

  CLI::App* eq = app.add_subcommand("equal", "decide equality of two words");
  eq->add_option("args", equal_args, "[group] word word")->expected(-1);
  eq->fallthrough();

  CLI::App* ap = app.add_subcommand("apply", "apply a homomorphism to a word");
  ap->add_option("spec", apply_spec, "homomorphism spec file")->required();
  ap->add_option("word", apply_word, "word over the source group")->required();
  ap->fallthrough();

  CLI::App* ve =
      app.add_subcommand("verify", "check every defining relation of a spec");
  ve->add_option("spec", verify_spec, "homomorphism spec file")->required();
  ve->fallthrough();

  CLI::App* li = app.add_subcommand(
      "lift", "lift a central-quotient endomorphism candidate");
  li->add_option("input", lift_input, "candidate image file")->required();
  li->fallthrough();

  CLI::App* sw =
      app.add_subcommand("sweep", "run the identity families over a grid");
  sw->add_option("args", sweep_args, "n_min n_max [p_range] [q_range]")
      ->expected(-1);
  sw->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*nf) return run_nf(nf_args, group_flag, max_len);
    if (*eq) return run_equal(equal_args, group_flag, max_len);
    if (*ap) return run_apply(apply_spec, apply_word, max_len);
    if (*ve) return run_verify(verify_spec, max_len);
    if (*li) return run_lift(lift_input, max_len);
    if (*sw) return run_sweep_cmd(sweep_args, as_json);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
