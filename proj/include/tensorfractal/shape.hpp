#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace tensorfractal {

/// Multi-index into a tensor. Coordinates are 0-based; see to_one_based()
/// for the form shown to users.
using MultiIndex = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultElementBudget = std::size_t{1} << 28;

/// Largest element count any Shape may describe. Process-wide.
std::size_t element_budget() noexcept;
void set_element_budget(std::size_t budget) noexcept;

/// Restores the previous budget on destruction.
class ScopedBudget {
public:
  explicit ScopedBudget(std::size_t budget) noexcept
      : previous_(element_budget()) {
    set_element_budget(budget);
  }
  ~ScopedBudget() { set_element_budget(previous_); }
  ScopedBudget(const ScopedBudget&) = delete;
  ScopedBudget& operator=(const ScopedBudget&) = delete;

private:
  std::size_t previous_;
};

/// a * b, or nullopt on overflow.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) noexcept;
/// base^exp, or nullopt on overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) noexcept;

/// Dimensions of a dense tensor. Construction validates every dim >= 1 and
/// that the element count fits the current element budget.
class Shape {
public:
  explicit Shape(std::vector<std::size_t> dims);
  Shape(std::initializer_list<std::size_t> dims)
      : Shape(std::vector<std::size_t>(dims)) {}

  std::size_t order() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t axis) const { return dims_.at(axis); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return size_; }

  /// Row-major strides: the last axis varies fastest.
  std::vector<std::size_t> strides() const;

  std::size_t flatten(const MultiIndex& idx) const;
  MultiIndex unflatten(std::size_t flat) const;
  bool contains(const MultiIndex& idx) const noexcept;

  /// Shape with every dim equal to 1 and the given order.
  static Shape ones(std::size_t order);

  friend bool operator==(const Shape& a, const Shape& b) noexcept {
    return a.dims_ == b.dims_;
  }

private:
  std::vector<std::size_t> dims_;
  std::size_t size_ = 1;
};

std::string to_string(const Shape& shape);

/// Converts between internal 0-based and displayed 1-based coordinates.
MultiIndex to_one_based(const MultiIndex& idx);
MultiIndex from_one_based(const MultiIndex& idx);
std::string format_index(const MultiIndex& idx);  // "(1, 2, 3)", 1-based

}  // namespace tensorfractal
