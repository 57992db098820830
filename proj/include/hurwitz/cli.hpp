#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/crossing.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/system.hpp"

namespace hurwitz::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDistinguished = 2, kInternal = 3 };

struct CommandResult {
  int exit_code = kOk;
  std::string output;
};

CommandResult cmd_invariants_word(int degree, const std::string& word, bool as_json);
CommandResult cmd_invariants_system(const SystemFile& file, bool as_json);

/// "E = {-3}" style rendering of the essential eigenvalues.
std::string essential_string(const ReducedPolynomial& essential);

// compare

struct Comparison {
  std::string invariant;
  std::string left;
  std::string right;
  bool equal = true;
};

struct CompareVerdict {
  /// distinguished_by:<invariant>, euler_necessary or
  /// indistinguishable_by_invariants.
  std::string verdict;
  std::vector<Comparison> comparisons;
};

CompareVerdict compare_systems(const BraidSystem& a, const BraidSystem& b);
CommandResult cmd_compare(const SystemFile& a, const SystemFile& b, bool as_json);

// apply

class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::size_t step, const std::string& reason)
      : std::runtime_error("step " + std::to_string(step) + ": " + reason), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct ScriptStep {
  enum class Kind { kHurwitz, kConjugate, kStabilize, kDestabilize, kFuse };
  Kind kind = Kind::kHurwitz;
  std::string text;
  int first = 0;   // H index, FUSE l
  int second = 0;  // H sign (+1/-1), FUSE q
  std::string word;
};

/// Steps are separated by newlines, ';' or '/'; '#' starts a comment.
std::vector<ScriptStep> parse_script(const std::string& script);

struct ApplyResult {
  BraidSystem final_system;
  json audit;
};

ApplyResult apply_script(const BraidSystem& start, const std::vector<ScriptStep>& steps);
CommandResult cmd_apply(const std::string& script, const SystemFile& file, bool as_json);

// orbit

CommandResult cmd_orbit(const SystemFile& source, const std::optional<SystemFile>& target,
                        const OrbitLimits& limits, std::uint64_t seed, std::size_t verify_trials,
                        bool as_json);

// papersuite

struct PaperRow {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::vector<PaperRow> paper_suite(OverStrand convention = OverStrand::kStandard);
CommandResult cmd_papersuite(bool as_json, OverStrand convention = OverStrand::kStandard);

}  // namespace hurwitz::cli
