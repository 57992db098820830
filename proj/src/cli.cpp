#include "hurwitz/cli.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hurwitz/invariants.hpp"
#include "hurwitz/linalg.hpp"
#include "hurwitz/system_moves.hpp"

namespace hurwitz::cli {

namespace {

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep = ", ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    out << v[i];
  }
  return out.str();
}

std::string integers_string(const std::vector<Integer>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.str());
  return "{" + join(parts) + "}";
}

std::string permutation_string(const Permutation& p) { return "[" + join(p.one_based(), " ") + "]"; }

std::string matrix_string(const IntMatrix& m, const std::string& indent) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << indent;
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::string cell = m(i, j).str();
      out << std::string(cell.size() < 4 ? 4 - cell.size() : 1, ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string multiset_string(const std::vector<IntPolynomial>& ps) {
  std::vector<std::string> parts;
  for (const auto& p : ps) parts.push_back(p.to_string());
  return "{" + join(parts) + "}";
}

std::string normal_form_string(const NormalForm& nf) {
  std::ostringstream out;
  out << "Delta^" << nf.infimum;
  for (const auto& f : nf.factors) out << " " << permutation_string(f);
  return out.str();
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

json system_json_with_display(const SystemInvariantReport& r) {
  json j = to_json(r);
  j["charpoly_product_factored"] = factored_string(r.charpoly_product);
  j["essential_eigenvalues"] = essential_string(r.essential);
  return j;
}

}  // namespace

std::string essential_string(const ReducedPolynomial& essential) {
  std::vector<std::string> parts;
  for (const auto& v : essential_integer_eigenvalues(essential)) parts.push_back(v.str());
  IntPolynomial rest = essential.core;
  for (const auto& rm : integer_roots(rest)) {
    IntPolynomial q;
    for (int k = 0; k < rm.multiplicity; ++k)
      if (rest.divide_by_root(rm.root, q)) rest = q;
  }
  if (rest.degree() >= 1) parts.push_back("roots of " + rest.to_string());
  return "E = {" + join(parts) + "}";
}

// ---------------------------------------------------------------------------
// invariants

CommandResult cmd_invariants_word(int degree, const std::string& word, bool as_json) {
  const BraidWord b = parse_word(word, degree);
  const BraidInvariantReport r = braid_invariants(b);
  CommandResult out;
  if (as_json) {
    json j = to_json(r);
    j["word"] = b.to_string();
    j["permutation"] = to_json(permutation(b));
    j["charpoly_factored"] = factored_string(r.charpoly);
    out.output = j.dump(2) + "\n";
    return out;
  }
  std::ostringstream s;
  s << "braid: [" << b.to_string() << "] in B_" << degree << "\n";
  s << "permutation: " << permutation_string(permutation(b)) << "\n";
  s << "normal form: " << normal_form_string(r.normal_form) << "\n";
  s << "r = " << r.order << "\n";
  s << "C(b^r) =\n" << matrix_string(r.pure_power_matrix, "  ");
  s << "P = " << r.charpoly.to_string() << " = " << factored_string(r.charpoly) << "\n";
  s << "det = " << r.determinant.str() << "\n";
  s << "rank = " << r.rank << "\n";
  s << "S = " << integers_string(r.entries) << "\n";
  std::vector<std::string> rows, cols;
  for (const auto& v : r.row_multisets) rows.push_back(integers_string(v));
  for (const auto& v : r.column_multisets) cols.push_back(integers_string(v));
  s << "S_rows = {" << join(rows) << "}\n";
  s << "S_cols = {" << join(cols) << "}\n";
  std::vector<std::string> roots;
  for (const auto& rm : r.integer_eigenvalues)
    roots.push_back(rm.root.str() + (rm.multiplicity > 1 ? "^" + std::to_string(rm.multiplicity) : ""));
  s << "integer eigenvalues: {" << join(roots) << "}\n";
  out.output = s.str();
  return out;
}

CommandResult cmd_invariants_system(const SystemFile& file, bool as_json) {
  const BraidSystem sys = file.to_system();
  const SystemInvariantReport r = system_invariants(sys);
  CommandResult out;
  if (as_json) {
    json j = system_json_with_display(r);
    j["system"] = to_json(file);
    out.output = j.dump(2) + "\n";
    return out;
  }
  std::ostringstream s;
  if (file.name) s << "system: " << *file.name << "\n";
  s << "degree " << r.degree << ", length " << r.length << "\n";
  for (std::size_t i = 0; i < sys.length(); ++i)
    s << "  b_" << i + 1 << " = [" << sys[i].to_string() << "]  P = " << factored_string(braid_charpoly(sys[i]))
      << "\n";
  s << essential_string(r.essential) << "; P = " << factored_string(r.charpoly_product) << "\n";
  s << "P expanded = " << r.charpoly_product.to_string() << "\n";
  s << "charpoly multiset = " << multiset_string(r.charpoly_multiset) << "\n";
  s << "trace is identity: " << (r.trace_is_identity ? "yes" : "no") << "\n";
  s << "permutation monodromy order: " << r.perm_monodromy_order << "\n";
  s << "exponent sums: {" << join(r.exponent_sums) << "}\n";
  s << "(m + n) mod 3 = " << r.degree_plus_length_mod3 << "\n";
  out.output = s.str();
  return out;
}

// ---------------------------------------------------------------------------
// compare

CompareVerdict compare_systems(const BraidSystem& a, const BraidSystem& b) {
  const SystemInvariantReport ra = system_invariants(a);
  const SystemInvariantReport rb = system_invariants(b);
  const bool same_shape = a.degree() == b.degree() && a.length() == b.length();

  CompareVerdict v;
  auto add = [&v](std::string name, std::string l, std::string r) {
    const bool eq = l == r;
    v.comparisons.push_back({std::move(name), std::move(l), std::move(r), eq});
  };
  add("shape", "(B_" + std::to_string(ra.degree) + ")^" + std::to_string(ra.length),
      "(B_" + std::to_string(rb.degree) + ")^" + std::to_string(rb.length));
  add("trace_is_identity", ra.trace_is_identity ? "true" : "false", rb.trace_is_identity ? "true" : "false");
  if (same_shape)
    add("trace", normal_form_string(ra.trace_normal_form), normal_form_string(rb.trace_normal_form));
  add("perm_monodromy_order", std::to_string(ra.perm_monodromy_order), std::to_string(rb.perm_monodromy_order));
  add("exponent_sums", "{" + join(ra.exponent_sums) + "}", "{" + join(rb.exponent_sums) + "}");
  add("charpoly_multiset", multiset_string(ra.charpoly_multiset), multiset_string(rb.charpoly_multiset));
  add("charpoly_product", ra.charpoly_product.to_string(), rb.charpoly_product.to_string());
  add("essential_core", ra.essential.core.to_string(), rb.essential.core.to_string());
  add("degree_plus_length_mod3", std::to_string(ra.degree_plus_length_mod3),
      std::to_string(rb.degree_plus_length_mod3));

  auto differs = [&v](const std::string& name) {
    for (const auto& c : v.comparisons)
      if (c.invariant == name) return !c.equal;
    return false;
  };

  if (same_shape) {
    for (const char* name :
         {"charpoly_product", "charpoly_multiset", "trace", "perm_monodromy_order", "exponent_sums"}) {
      if (differs(name)) {
        v.verdict = std::string("distinguished_by:") + name;
        return v;
      }
    }
  }
  v.verdict = euler_necessity(a, b) == EulerVerdict::kNecessary ? "euler_necessary"
                                                                 : "indistinguishable_by_invariants";
  return v;
}

CommandResult cmd_compare(const SystemFile& a, const SystemFile& b, bool as_json) {
  const CompareVerdict v = compare_systems(a.to_system(), b.to_system());
  CommandResult out;
  out.exit_code = v.verdict == "indistinguishable_by_invariants" ? kOk : kDistinguished;
  if (as_json) {
    json cmp = json::array();
    for (const auto& c : v.comparisons)
      cmp.push_back({{"invariant", c.invariant}, {"left", c.left}, {"right", c.right}, {"equal", c.equal}});
    out.output = json{{"verdict", v.verdict}, {"comparisons", cmp}}.dump(2) + "\n";
    return out;
  }
  std::ostringstream s;
  s << "verdict: " << v.verdict << "\n";
  for (const auto& c : v.comparisons)
    s << "  " << (c.equal ? "=  " : "!= ") << c.invariant << ": " << c.left << " | " << c.right << "\n";
  out.output = s.str();
  return out;
}

// ---------------------------------------------------------------------------
// apply

std::vector<ScriptStep> parse_script(const std::string& script) {
  std::vector<std::string> raw;
  std::string current;
  bool comment = false;
  for (char c : script) {
    if (c == '\n' || c == ';' || c == '/') {
      raw.push_back(current);
      current.clear();
      comment = false;
    } else if (c == '#') {
      comment = true;
    } else if (!comment) {
      current += c;
    }
  }
  raw.push_back(current);

  std::vector<ScriptStep> steps;
  for (auto& line : raw) {
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t number = steps.size() + 1;
    std::istringstream in(line);
    std::string op;
    in >> op;
    op = upper(op);
    ScriptStep step;
    step.text = line;
    if (op == "H") {
      std::string sign;
      if (!(in >> step.first >> sign) || (sign != "+" && sign != "-"))
        throw ScriptError(number, "expected 'H <index> +|-', got '" + line + "'");
      step.kind = ScriptStep::Kind::kHurwitz;
      step.second = sign == "+" ? 1 : -1;
    } else if (op == "GC") {
      step.kind = ScriptStep::Kind::kConjugate;
      std::getline(in, step.word);
      step.word = trim(step.word);
    } else if (op == "STAB") {
      step.kind = ScriptStep::Kind::kStabilize;
    } else if (op == "DESTAB") {
      step.kind = ScriptStep::Kind::kDestabilize;
    } else if (op == "FUSE") {
      if (!(in >> step.first >> step.second)) throw ScriptError(number, "expected 'FUSE <l> <q>', got '" + line + "'");
      step.kind = ScriptStep::Kind::kFuse;
    } else {
      throw ScriptError(number, "unknown command '" + op + "'");
    }
    std::string extra;
    if (step.kind != ScriptStep::Kind::kConjugate && (in >> extra))
      throw ScriptError(number, "unexpected trailing text '" + extra + "'");
    steps.push_back(std::move(step));
  }
  return steps;
}

ApplyResult apply_script(const BraidSystem& start, const std::vector<ScriptStep>& steps) {
  BraidSystem s = start;
  json audit = json::array();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const ScriptStep& step = steps[k];
    json entry = {{"step", k + 1}, {"command", step.text}};
    try {
      switch (step.kind) {
        case ScriptStep::Kind::kHurwitz:
          s = hurwitz_move(s, {step.first, step.second > 0 ? HurwitzMove::Direction::kForward
                                                           : HurwitzMove::Direction::kInverse});
          break;
        case ScriptStep::Kind::kConjugate:
          s = global_conjugate(s, parse_word(step.word, s.degree()));
          break;
        case ScriptStep::Kind::kStabilize:
          s = stabilize(s);
          break;
        case ScriptStep::Kind::kDestabilize:
          s = destabilize(s);
          break;
        case ScriptStep::Kind::kFuse: {
          FusionResult fused = euler_fuse(s, step.first, step.second);
          s = std::move(fused.system);
          entry["tau_check"] = fused.tau_check;
          break;
        }
      }
    } catch (const std::invalid_argument& e) {
      throw ScriptError(k + 1, e.what());
    }
    entry["system"] = to_json(SystemFile::from_system(s));
    entry["invariants"] = system_json_with_display(system_invariants(s));
    audit.push_back(std::move(entry));
  }
  return {s, audit};
}

CommandResult cmd_apply(const std::string& script, const SystemFile& file, bool as_json) {
  const ApplyResult r = apply_script(file.to_system(), parse_script(script));
  CommandResult out;
  const SystemFile final_file = SystemFile::from_system(r.final_system, file.name);
  if (as_json) {
    out.output = json{{"final", to_json(final_file)}, {"steps", r.audit}}.dump(2) + "\n";
    return out;
  }
  std::ostringstream s;
  for (const auto& entry : r.audit) {
    s << "step " << entry["step"].get<std::size_t>() << ": " << entry["command"].get<std::string>();
    if (entry.contains("tau_check")) s << "  (tau_check " << (entry["tau_check"].get<bool>() ? "true" : "false") << ")";
    s << "\n  -> (B_" << entry["system"]["degree"].get<int>() << ") ["
      << join(entry["system"]["components"].get<std::vector<std::string>>(), "] [") << "]\n";
    s << "     " << entry["invariants"]["essential_eigenvalues"].get<std::string>()
      << "; P = " << entry["invariants"]["charpoly_product_factored"].get<std::string>() << "\n";
  }
  s << "final:\n" << to_json(final_file).dump(2) << "\n";
  out.output = s.str();
  return out;
}

// ---------------------------------------------------------------------------
// orbit

CommandResult cmd_orbit(const SystemFile& source, const std::optional<SystemFile>& target,
                        const OrbitLimits& limits, std::uint64_t seed, std::size_t verify_trials,
                        bool as_json) {
  const BraidSystem s = source.to_system();
  std::optional<BraidSystem> t;
  if (target) t = target->to_system();

  const SystemInvariantReport base = system_invariants(s);
  std::size_t disagreements = 0;
  const OrbitResult r = hurwitz_orbit(s, limits, t, [&](const BraidSystem& state, std::size_t) {
    const SystemInvariantReport now = system_invariants(state);
    if (now.charpoly_product != base.charpoly_product || now.charpoly_multiset != base.charpoly_multiset ||
        now.essential != base.essential || now.exponent_sums != base.exponent_sums ||
        now.trace_normal_form != base.trace_normal_form || now.perm_monodromy_order != base.perm_monodromy_order)
      ++disagreements;
  });

  std::optional<InvarianceReport> verify;
  if (verify_trials > 0) verify = verify_invariance(s, verify_trials, seed);

  CommandResult out;
  if (disagreements > 0 || (verify && !verify->passed())) out.exit_code = kInternal;
  if (as_json) {
    json j = to_json(r);
    j["invariant_disagreements"] = disagreements;
    if (verify)
      j["verify"] = {{"trials", verify->trials},
                     {"moves_applied", verify->moves_applied},
                     {"failures", verify->failures},
                     {"seed", seed}};
    out.output = j.dump(2) + "\n";
    return out;
  }
  std::ostringstream o;
  o << "status: " << to_string(r.status) << "\n";
  o << "states visited: " << r.states_visited << "\n";
  if (r.frontier_exhausted_at_depth) o << "orbit closed at depth " << *r.frontier_exhausted_at_depth << "\n";
  if (r.witness) {
    std::vector<std::string> moves;
    for (const auto& m : *r.witness)
      moves.push_back("H " + std::to_string(m.index) +
                      (m.direction == HurwitzMove::Direction::kForward ? " +" : " -"));
    o << "witness: " << (moves.empty() ? "(empty)" : join(moves, "; ")) << "\n";
  }
  if (t && r.status == OrbitStatus::kComplete)
    o << "target is not in the orbit (orbit closed)\n";
  o << "states disagreeing with source invariants: " << disagreements << "\n";
  if (verify) {
    o << "verify: " << verify->trials << " trials, " << verify->moves_applied << " moves, "
      << verify->failures.size() << " failures (seed " << seed << ")\n";
    for (const auto& f : verify->failures) o << "  " << f << "\n";
  }
  out.output = o.str();
  return out;
}

// ---------------------------------------------------------------------------
// papersuite

namespace {

IntPolynomial charpoly_with(const BraidWord& b, OverStrand convention) {
  return charpoly(pure_power_matrix(b, convention).matrix);
}

IntPolynomial system_charpoly_with(const BraidSystem& s, OverStrand convention) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& c : s.components()) p = p * charpoly_with(c, convention);
  return p;
}

IntPolynomial x_power(std::size_t k) { return IntPolynomial::monomial(k); }

std::string matrix_inline(const IntMatrix& m) { return to_json(m).dump(); }

}  // namespace

std::vector<PaperRow> paper_suite(OverStrand conv) {
  std::vector<PaperRow> rows;
  auto row = [&rows](std::string id, const std::string& expected, const std::string& computed) {
    rows.push_back({std::move(id), expected, computed, expected == computed});
  };
  auto poly_row = [&row](std::string id, const IntPolynomial& expected, const IntPolynomial& computed) {
    row(std::move(id), expected.to_string(), computed.to_string());
  };

  // Braid permutations.
  row("perm.word_1_1_-2", "[1 3 2]", permutation_string(permutation(parse_word("1,1,-2", 3))));
  row("perm.word_1_2_-3", "[4 1 2 3]", permutation_string(permutation(parse_word("1,2,-3", 4))));

  // Permutation equivalence.
  {
    const IntMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    const IntMatrix n{{5, 4, 6}, {2, 1, 3}, {8, 7, 9}};
    auto w = permutation_equivalent(m, n);
    row("perm_equivalent.witness", "[2 1 3]", w ? permutation_string(*w) : "none");
  }

  const BraidWord b33 = parse_word("1,2,-3", 4);
  const BraidWord b33p = parse_word("1,-2,3", 4);
  const auto c33 = pure_power_matrix(b33, conv);
  const auto c33p = pure_power_matrix(b33p, conv);
  row("pair_a.C(b^4)", "[[0,0,1,0],[0,0,0,1],[1,0,0,0],[0,1,0,0]]", matrix_inline(c33.matrix));
  row("pair_a.C(b'^4)", "[[0,1,-1,1],[1,0,1,-1],[-1,1,0,1],[1,-1,1,0]]", matrix_inline(c33p.matrix));
  row("pair_a.not_perm_equivalent", "none",
      permutation_equivalent(c33.matrix, c33p.matrix) ? "witness" : "none");

  const BraidWord b35 = parse_word("3,-1,4", 5);
  const BraidWord b35p = parse_word("4,3,-1", 5);
  const IntPolynomial p35{144, 108, -16, -21, 0, 1};
  for (const auto& [name, b] : {std::pair{"b", b35}, std::pair{"b'", b35p}}) {
    const IntMatrix c = pure_power_matrix(b, conv).matrix;
    row(std::string("pair_b.det(") + name + ")", "-144", determinant(c).str());
    poly_row(std::string("pair_b.P(") + name + ")", p35, charpoly(c));
  }
  row("pair_b.factored", "(x-4) (x-3) (x+2)^2 (x+3)", factored_string(charpoly_with(b35, conv)));
  {
    auto a = find_conjugator(b35, b35p, 3);
    row("pair_b.conjugate", "found", a && braids_equal(conjugate(b35, *a), b35p) ? "found" : "not found");
  }

  row("pair_a.det(b)", "1", determinant(c33.matrix).str());
  row("pair_a.det(b')", "-3", determinant(c33p.matrix).str());
  poly_row("pair_a.P(b)", IntPolynomial{1, 0, -2, 0, 1}, charpoly(c33.matrix));
  poly_row("pair_a.P(b')", IntPolynomial{-3, 8, -6, 0, 1}, charpoly(c33p.matrix));

  for (int m = 2; m <= 8; ++m) {
    const IntPolynomial expected = x_power(m - 2) * IntPolynomial::linear(-1) * IntPolynomial::linear(1);
    for (int i = 1; i <= m - 1; ++i) {
      poly_row("generator.P(s" + std::to_string(i) + ")_m" + std::to_string(m), expected,
               charpoly_with(BraidWord::generator(m, i, 1), conv));
      poly_row("generator.P(s" + std::to_string(i) + "^-1)_m" + std::to_string(m), expected,
               charpoly_with(BraidWord::generator(m, i, -1), conv));
    }
  }

  for (int m : {3, 5, 7}) {
    const BraidWord w = family_weaving(m);
    poly_row("weaving.P(W(" + std::to_string(m) + ",1))", x_power(m), charpoly_with(w, conv));
    poly_row("weaving.P(iota(W(" + std::to_string(m) + ",1)))", x_power(m + 1), charpoly_with(iota(w), conv));
  }

  for (int m = 3; m <= 8; ++m) {
    poly_row("family_bm.P(b_" + std::to_string(m) + ")", x_power(m) - x_power(m - 2) * IntPolynomial::constant(m - 1),
             charpoly_with(family_bm(m), conv));
  }
  for (int m = 3; m <= 6; ++m) {
    for (int k = 0; k <= 3; ++k) {
      poly_row("family_bmk.P(b_" + std::to_string(m) + "," + std::to_string(k) + ")",
               x_power(m) - x_power(m - 2) * IntPolynomial::constant(k * k + 2 * k + m - 1),
               charpoly_with(family_bmk(m, k), conv));
    }
  }

  const BraidSystem bvec = BraidSystem::parse(4, {"1,2,-3", "3", "-2", "-1"});
  const BraidSystem bvec_p = BraidSystem::parse(4, {"1,-2,3", "-3", "2", "-1"});
  poly_row("sys.P(b)", IntPolynomial{0, 0, 0, 0, 0, 0, -1, 0, 5, 0, -10, 0, 10, 0, -5, 0, 1},
           system_charpoly_with(bvec, conv));
  poly_row("sys.P(b')", IntPolynomial{0, 0, 0, 0, 0, 0, 3, -8, -3, 24, -10, -24, 18, 8, -9, 0, 1},
           system_charpoly_with(bvec_p, conv));
  {
    std::vector<IntPolynomial> ms;
    for (const auto& c : bvec.components()) ms.push_back(charpoly_with(c, conv));
    std::sort(ms.begin(), ms.end());
    std::vector<IntPolynomial> expected{IntPolynomial{0, 0, -1, 0, 1}, IntPolynomial{0, 0, -1, 0, 1},
                                        IntPolynomial{0, 0, -1, 0, 1}, IntPolynomial{1, 0, -2, 0, 1}};
    std::sort(expected.begin(), expected.end());
    row("sys.multiset(b)", multiset_string(expected), multiset_string(ms));
  }
  {
    std::vector<std::string> perms;
    for (const auto& c : bvec.components()) perms.push_back(permutation_string(permutation(c)));
    row("sys.D1.shadow(b)", "[4 1 2 3] [1 2 4 3] [1 3 2 4] [2 1 3 4]", join(perms, " "));
    perms.clear();
    for (const auto& c : bvec_p.components()) perms.push_back(permutation_string(permutation(c)));
    row("sys.D1.shadow(b')", "[4 1 2 3] [1 2 4 3] [1 3 2 4] [2 1 3 4]", join(perms, " "));
  }
  {
    std::vector<int> eb, ebp;
    for (const auto& c : bvec.components()) eb.push_back(exponent_sum(c));
    for (const auto& c : bvec_p.components()) ebp.push_back(exponent_sum(c));
    row("sys.D2.exponents(b)", "1, 1, -1, -1", join(eb));
    row("sys.D2.exponents(b')", "1, -1, 1, -1", join(ebp));
    row("sys.D2.move_at_2", "1, -1, 1, -1", join(hurwitz_move(eb, {2, HurwitzMove::Direction::kForward})));
  }
  row("sys.A.trace(b)", "true", is_identity(bvec.trace()) ? "true" : "false");
  row("sys.A.trace(b')", "true", is_identity(bvec_p.trace()) ? "true" : "false");
  row("sys.B.monodromy(b)", "24", std::to_string(permutation_monodromy(bvec).order()));
  row("sys.B.monodromy(b')", "24", std::to_string(permutation_monodromy(bvec_p).order()));

  const BraidSystem evec = bvec_p;
  const BraidSystem cvec = BraidSystem::parse(4, {"1,-2,3", "-3,2,-1"});
  const IntPolynomial pe = system_charpoly_with(evec, conv);
  const IntPolynomial pc = system_charpoly_with(cvec, conv);
  row("fusion.P(b)", "x^6 (x+1)^3 (x-1)^6 (x+3)", factored_string(pe));
  row("fusion.E(b)", "E = {-3}", essential_string(reduce_poly(pe)));
  poly_row("fusion.core(b)", IntPolynomial{3, 1}, reduce_poly(pe).core);
  row("fusion.P(c)", "(x+1)^3 (x-1)^3 (x-3) (x+3)", factored_string(pc));
  row("fusion.E(c)", "E = {-3, 3}", essential_string(reduce_poly(pc)));
  poly_row("fusion.core(c)", IntPolynomial{-9, 0, 1}, reduce_poly(pc).core);
  row("fusion.euler_necessity", "necessary", to_string(euler_necessity(evec, cvec)));
  {
    const ApplyResult r = apply_script(evec, parse_script("FUSE 3 1\nFUSE 2 1"));
    bool taus = true;
    for (const auto& e : r.audit) taus = taus && e.value("tau_check", false);
    row("fusion.fuse_twice", "c with tau_check true",
        systems_equal(r.final_system, cvec) && taus ? "c with tau_check true" : "mismatch");
  }
  return rows;
}

CommandResult cmd_papersuite(bool as_json, OverStrand convention) {
  const auto rows = paper_suite(convention);
  CommandResult out;
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.pass ? 0 : 1;
  out.exit_code = failed == 0 ? kOk : kInternal;
  if (as_json) {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"id", r.id}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}});
    out.output = json{{"rows", j}, {"failed", failed}, {"total", rows.size()}}.dump(2) + "\n";
    return out;
  }
  std::ostringstream s;
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.id.size());
  for (const auto& r : rows) {
    s << (r.pass ? "PASS  " : "FAIL  ") << r.id << std::string(width - r.id.size() + 2, ' ') << r.computed;
    if (!r.pass) s << "   (expected " << r.expected << ")";
    s << "\n";
  }
  s << rows.size() - failed << "/" << rows.size() << " rows pass\n";
  out.output = s.str();
  return out;
}

}  // namespace hurwitz::cli
