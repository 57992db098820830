#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hurwitz {

using Integer = boost::multiprecision::cpp_int;

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t size) : size_(size), entries_(size * size) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t size() const { return size_; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

  std::vector<std::vector<Integer>> rows() const;
  std::vector<Integer> row(std::size_t i) const;
  std::vector<Integer> column(std::size_t j) const;

  bool is_symmetric() const;
  bool is_zero() const;
  Integer trace() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Integer> entries_;
};

}  // namespace hurwitz
