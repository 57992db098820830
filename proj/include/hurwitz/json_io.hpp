#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/invariants.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/system.hpp"

namespace hurwitz {

using json = nlohmann::json;

/// On-disk description of a braid system: {"degree", "components", "name"?}.
struct SystemFile {
  int degree = 1;
  std::vector<std::string> components;
  std::optional<std::string> name;

  BraidSystem to_system() const;
  static SystemFile from_system(const BraidSystem& s, std::optional<std::string> name = std::nullopt);
};

SystemFile load_system_file(const std::string& path);

// Integers that fit in 64 bits are JSON numbers; larger ones are strings.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

json to_json(const Permutation& p);
json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const json& j);
json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);
json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const json& j);
json to_json(const ReducedPolynomial& r);
ReducedPolynomial reduced_from_json(const json& j);
json to_json(const BraidInvariantReport& r);
BraidInvariantReport braid_report_from_json(const json& j);
json to_json(const SystemInvariantReport& r);
SystemInvariantReport system_report_from_json(const json& j);
json to_json(const SystemFile& f);
SystemFile system_file_from_json(const json& j);
json to_json(const OrbitResult& r);

}  // namespace hurwitz
