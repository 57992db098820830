#include "hurwitz/json_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace hurwitz {

BraidSystem SystemFile::to_system() const { return BraidSystem::parse(degree, components); }

SystemFile SystemFile::from_system(const BraidSystem& s, std::optional<std::string> name) {
  return {s.degree(), s.words(), std::move(name)};
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open system file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("system file '" + path + "' is not valid JSON: " + e.what());
  }
  return system_file_from_json(j);
}

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

namespace {

json integers_to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

std::vector<Integer> integers_from_json(const json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

}  // namespace

json to_json(const Permutation& p) { return p.one_based(); }

json to_json(const NormalForm& nf) {
  json factors = json::array();
  for (const auto& f : nf.factors) factors.push_back(to_json(f));
  return {{"degree", nf.degree}, {"infimum", nf.infimum}, {"factors", factors}};
}

NormalForm normal_form_from_json(const json& j) {
  NormalForm nf;
  nf.degree = j.at("degree").get<int>();
  nf.infimum = j.at("infimum").get<long long>();
  for (const auto& f : j.at("factors")) nf.factors.push_back(Permutation::from_one_based(f.get<std::vector<int>>()));
  return nf;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m.rows()) out.push_back(integers_to_json(row));
  return out;
}

IntMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) rows.push_back(integers_from_json(r));
  return IntMatrix::from_rows(rows);
}

json to_json(const IntPolynomial& p) { return {{"coeffs", integers_to_json(p.coefficients())}}; }

IntPolynomial polynomial_from_json(const json& j) { return IntPolynomial(integers_from_json(j.at("coeffs"))); }

json to_json(const ReducedPolynomial& r) {
  return {{"x_mult", r.zero_mult},
          {"x_minus_1_mult", r.one_mult},
          {"x_plus_1_mult", r.neg_one_mult},
          {"core", to_json(r.core)}};
}

ReducedPolynomial reduced_from_json(const json& j) {
  ReducedPolynomial r;
  r.zero_mult = j.at("x_mult").get<int>();
  r.one_mult = j.at("x_minus_1_mult").get<int>();
  r.neg_one_mult = j.at("x_plus_1_mult").get<int>();
  r.core = polynomial_from_json(j.at("core"));
  return r;
}

json to_json(const BraidInvariantReport& r) {
  json rows = json::array();
  for (const auto& v : r.row_multisets) rows.push_back(integers_to_json(v));
  json cols = json::array();
  for (const auto& v : r.column_multisets) cols.push_back(integers_to_json(v));
  json roots = json::array();
  for (const auto& rm : r.integer_eigenvalues)
    roots.push_back({{"root", integer_to_json(rm.root)}, {"multiplicity", rm.multiplicity}});
  return {{"degree", r.degree},
          {"r", r.order},
          {"normal_form", to_json(r.normal_form)},
          {"pure_power_matrix", to_json(r.pure_power_matrix)},
          {"charpoly", to_json(r.charpoly)},
          {"determinant", integer_to_json(r.determinant)},
          {"rank", r.rank},
          {"S", integers_to_json(r.entries)},
          {"S_rows", rows},
          {"S_cols", cols},
          {"integer_eigenvalues", roots}};
}

BraidInvariantReport braid_report_from_json(const json& j) {
  BraidInvariantReport r;
  r.degree = j.at("degree").get<int>();
  r.order = j.at("r").get<std::uint64_t>();
  r.normal_form = normal_form_from_json(j.at("normal_form"));
  r.pure_power_matrix = matrix_from_json(j.at("pure_power_matrix"));
  r.charpoly = polynomial_from_json(j.at("charpoly"));
  r.determinant = integer_from_json(j.at("determinant"));
  r.rank = j.at("rank").get<std::size_t>();
  r.entries = integers_from_json(j.at("S"));
  for (const auto& v : j.at("S_rows")) r.row_multisets.push_back(integers_from_json(v));
  for (const auto& v : j.at("S_cols")) r.column_multisets.push_back(integers_from_json(v));
  for (const auto& v : j.at("integer_eigenvalues"))
    r.integer_eigenvalues.push_back({integer_from_json(v.at("root")), v.at("multiplicity").get<int>()});
  return r;
}

json to_json(const SystemInvariantReport& r) {
  json nfs = json::array();
  for (const auto& nf : r.component_normal_forms) nfs.push_back(to_json(nf));
  json multiset = json::array();
  for (const auto& p : r.charpoly_multiset) multiset.push_back(to_json(p));
  return {{"degree", r.degree},
          {"length", r.length},
          {"component_normal_forms", nfs},
          {"charpoly_product", to_json(r.charpoly_product)},
          {"charpoly_multiset", multiset},
          {"essential", to_json(r.essential)},
          {"trace_is_identity", r.trace_is_identity},
          {"trace_normal_form", to_json(r.trace_normal_form)},
          {"perm_monodromy_order", r.perm_monodromy_order},
          {"exponent_sums", r.exponent_sums},
          {"degree_plus_length_mod3", r.degree_plus_length_mod3}};
}

SystemInvariantReport system_report_from_json(const json& j) {
  SystemInvariantReport r;
  r.degree = j.at("degree").get<int>();
  r.length = j.at("length").get<std::size_t>();
  for (const auto& nf : j.at("component_normal_forms")) r.component_normal_forms.push_back(normal_form_from_json(nf));
  r.charpoly_product = polynomial_from_json(j.at("charpoly_product"));
  for (const auto& p : j.at("charpoly_multiset")) r.charpoly_multiset.push_back(polynomial_from_json(p));
  r.essential = reduced_from_json(j.at("essential"));
  r.trace_is_identity = j.at("trace_is_identity").get<bool>();
  r.trace_normal_form = normal_form_from_json(j.at("trace_normal_form"));
  r.perm_monodromy_order = j.at("perm_monodromy_order").get<std::uint64_t>();
  r.exponent_sums = j.at("exponent_sums").get<std::vector<int>>();
  r.degree_plus_length_mod3 = j.at("degree_plus_length_mod3").get<int>();
  return r;
}

json to_json(const SystemFile& f) {
  json out = {{"degree", f.degree}, {"components", f.components}};
  if (f.name) out["name"] = *f.name;
  return out;
}

SystemFile system_file_from_json(const json& j) {
  SystemFile f;
  try {
    f.degree = j.at("degree").get<int>();
    f.components = j.at("components").get<std::vector<std::string>>();
    if (j.contains("name")) f.name = j.at("name").get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed system description: ") + e.what());
  }
  return f;
}

json to_json(const OrbitResult& r) {
  json out = {{"status", to_string(r.status)}, {"states_visited", r.states_visited}};
  if (r.witness) {
    json w = json::array();
    for (const auto& m : *r.witness)
      w.push_back({{"index", m.index},
                   {"direction", m.direction == HurwitzMove::Direction::kForward ? "+" : "-"}});
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  out["frontier_exhausted_at_depth"] =
      r.frontier_exhausted_at_depth ? json(*r.frontier_exhausted_at_depth) : json(nullptr);
  return out;
}

}  // namespace hurwitz
