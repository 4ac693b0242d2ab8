#include "tensorfractal/shape.hpp"

#include <limits>
#include <sstream>

#include "tensorfractal/errors.hpp"

namespace tensorfractal {

namespace {
std::atomic<std::size_t> g_budget{kDefaultElementBudget};
}

std::size_t element_budget() noexcept { return g_budget.load(std::memory_order_relaxed); }

void set_element_budget(std::size_t budget) noexcept {
  g_budget.store(budget, std::memory_order_relaxed);
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
  return a * b;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    auto next = checked_mul(result, base);
    if (!next) return std::nullopt;
    result = *next;
  }
  return result;
}

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InvalidShape("tensor order must be at least 1");
  std::uint64_t count = 1;
  for (std::size_t d : dims_) {
    if (d == 0) throw InvalidShape("tensor dimensions must be positive, got " + to_string(*this));
    auto next = checked_mul(count, d);
    if (!next) throw BudgetExceeded("element count of shape " + to_string(*this) + " overflows");
    count = *next;
  }
  if (count > element_budget()) {
    throw BudgetExceeded("shape " + to_string(*this) + " has " + std::to_string(count) +
                         " elements, budget is " + std::to_string(element_budget()));
  }
  size_ = static_cast<std::size_t>(count);
}

Shape Shape::ones(std::size_t order) { return Shape(std::vector<std::size_t>(order, 1)); }

std::vector<std::size_t> Shape::strides() const {
  std::vector<std::size_t> s(dims_.size(), 1);
  for (std::size_t i = dims_.size(); i-- > 1;) s[i - 1] = s[i] * dims_[i];
  return s;
}

bool Shape::contains(const MultiIndex& idx) const noexcept {
  if (idx.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i] >= dims_[i]) return false;
  return true;
}

std::size_t Shape::flatten(const MultiIndex& idx) const {
  if (!contains(idx)) {
    throw IndexOutOfRange("index " + format_index(idx) + " outside shape " + to_string(*this));
  }
  std::size_t flat = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) flat = flat * dims_[i] + idx[i];
  return flat;
}

MultiIndex Shape::unflatten(std::size_t flat) const {
  if (flat >= size_) {
    throw IndexOutOfRange("flat index " + std::to_string(flat) + " outside shape " + to_string(*this));
  }
  MultiIndex idx(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    idx[i] = flat % dims_[i];
    flat /= dims_[i];
  }
  return idx;
}

std::string to_string(const Shape& shape) {
  std::ostringstream os;
  const auto& dims = shape.dims();
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "x" : "") << dims[i];
  return os.str();
}

MultiIndex to_one_based(const MultiIndex& idx) {
  MultiIndex out(idx);
  for (auto& c : out) ++c;
  return out;
}

MultiIndex from_one_based(const MultiIndex& idx) {
  MultiIndex out(idx);
  for (auto& c : out) {
    if (c == 0) throw IndexOutOfRange("1-based coordinates start at 1");
    --c;
  }
  return out;
}

std::string format_index(const MultiIndex& idx) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? ", " : "") << idx[i] + 1;
  os << ')';
  return os.str();
}

}  // namespace tensorfractal
