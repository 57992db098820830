// hurwitz: invariants, moves and orbit search for braid systems.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hurwitz/cli.hpp"

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hurwitz;
  using namespace hurwitz::cli;

  CLI::App app{"Crossing-matrix invariants and Hurwitz moves for braid systems"};
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "Emit JSON");
  app.add_option("--seed", seed, "Seed for randomized checks");

  auto* inv = app.add_subcommand("invariants", "Invariants of a braid or a braid system");
  int degree = 0;
  std::optional<std::string> word, system_path;
  inv->add_option("--degree", degree, "Number of strands");
  auto* word_opt = inv->add_option("--word", word, "Braid word, e.g. \"3,-1,4\"");
  auto* sys_opt = inv->add_option("--system", system_path, "System JSON file");
  word_opt->excludes(sys_opt);
  word_opt->needs(inv->get_option("--degree"));

  auto* cmp = app.add_subcommand("compare", "Compare the invariants of two systems");
  std::string left, right;
  cmp->add_option("first", left, "System JSON file")->required();
  cmp->add_option("second", right, "System JSON file")->required();

  auto* apply = app.add_subcommand("apply", "Run a move script on a system");
  std::string script_path, apply_system;
  apply->add_option("--script", script_path, "Move script file")->required();
  apply->add_option("--system", apply_system, "System JSON file")->required();

  auto* orbit = app.add_subcommand("orbit", "Bounded Hurwitz orbit search");
  std::string orbit_system;
  std::optional<std::string> target_path;
  OrbitLimits limits;
  std::size_t verify_trials = 0;
  orbit->add_option("--system", orbit_system, "Source system JSON file")->required();
  orbit->add_option("--target", target_path, "Target system JSON file");
  orbit->add_option("--max-states", limits.max_states, "State budget")->capture_default_str();
  orbit->add_option("--max-depth", limits.max_depth, "Depth budget")->capture_default_str();
  orbit->add_option("--max-canonical-length", limits.max_component_canonical_length,
                    "Per-component canonical length bound")
      ->capture_default_str();
  orbit->add_option("--seed", seed, "Seed for --verify-trials");
  orbit->add_option("--verify-trials", verify_trials, "Random move sequences to check");

  auto* suite = app.add_subcommand("papersuite", "Regression table of reference values");
  bool mirrored = false;
  suite->add_flag("--mirror-convention", mirrored, "Swap the over-strand convention");

  for (auto* sub : {inv, cmp, apply, orbit, suite}) sub->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CommandResult result;
  try {
    if (*inv) {
      if (word)
        result = cmd_invariants_word(degree, *word, as_json);
      else if (system_path)
        result = cmd_invariants_system(load_system_file(*system_path), as_json);
      else
        throw std::invalid_argument("invariants needs --word or --system");
    } else if (*cmp) {
      result = cmd_compare(load_system_file(left), load_system_file(right), as_json);
    } else if (*apply) {
      result = cmd_apply(read_text(script_path), load_system_file(apply_system), as_json);
    } else if (*orbit) {
      std::optional<SystemFile> target;
      if (target_path) target = load_system_file(*target_path);
      result = cmd_orbit(load_system_file(orbit_system), target, limits, seed, verify_trials, as_json);
    } else if (*suite) {
      result = cmd_papersuite(as_json, mirrored ? OverStrand::kMirrored : OverStrand::kStandard);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  std::cout << result.output;
  return result.exit_code;
}
