#include "hurwitz/system.hpp"

#include <stdexcept>

namespace hurwitz {

BraidSystem::BraidSystem(int degree, std::vector<BraidWord> components)
    : degree_(degree), components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("a braid system needs at least one component");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].degree() != degree_)
      throw DegreeMismatch("component " + std::to_string(i + 1) + " has degree " +
                           std::to_string(components_[i].degree()) + ", expected " +
                           std::to_string(degree_));
  }
}

BraidSystem BraidSystem::parse(int degree, const std::vector<std::string>& words) {
  std::vector<BraidWord> components;
  components.reserve(words.size());
  for (const auto& w : words) components.push_back(parse_word(w, degree));
  return BraidSystem(degree, std::move(components));
}

BraidWord BraidSystem::trace() const { return product(components_, degree_); }

std::vector<NormalForm> BraidSystem::normal_forms() const {
  std::vector<NormalForm> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(normal_form(c));
  return out;
}

std::vector<std::string> BraidSystem::words() const {
  std::vector<std::string> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.to_string());
  return out;
}

bool systems_equal(const BraidSystem& a, const BraidSystem& b) {
  if (a.degree() != b.degree() || a.length() != b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i)
    if (!braids_equal(a[i], b[i])) return false;
  return true;
}

}  // namespace hurwitz
