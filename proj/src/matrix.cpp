#include "hurwitz/matrix.hpp"

#include <stdexcept>

namespace hurwitz {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : size_(rows.size()), entries_(rows.size() * rows.size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != size_) throw std::invalid_argument("matrix rows must form a square");
    std::size_t j = 0;
    for (long long v : r) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Integer>> IntMatrix::rows() const {
  std::vector<std::vector<Integer>> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * size_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * size_)};
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back((*this)(i, j));
  return out;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const Integer& v : entries_)
    if (v != 0) return false;
  return true;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

}  // namespace hurwitz
