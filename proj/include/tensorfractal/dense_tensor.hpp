#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "tensorfractal/errors.hpp"
#include "tensorfractal/shape.hpp"

namespace tensorfractal {

/// Dense tensor of arbitrary order, stored row-major (last index fastest).
template <typename Scalar>
class DenseTensor {
public:
  using scalar_type = Scalar;

  explicit DenseTensor(Shape shape, Scalar fill = Scalar(0))
      : shape_(std::move(shape)), data_(shape_.size(), fill) {}

  DenseTensor(Shape shape, std::vector<Scalar> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != shape_.size()) {
      throw InvalidShape("data length " + std::to_string(data_.size()) +
                         " does not match shape " + to_string(shape_));
    }
  }

  /// Order-1 tensor from a list of values.
  static DenseTensor vector(std::vector<Scalar> values) {
    Shape s{values.size()};
    return DenseTensor(std::move(s), std::move(values));
  }

  /// Order-2 tensor from nested rows.
  static DenseTensor matrix(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) throw InvalidShape("matrix needs at least one row");
    std::vector<Scalar> flat;
    for (const auto& row : rows) {
      if (row.size() != rows.front().size()) throw InvalidShape("ragged matrix rows");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return DenseTensor(Shape{rows.size(), rows.front().size()}, std::move(flat));
  }

  /// Order-3 tensor from its frontal layers T(:, :, l), written left to right.
  static DenseTensor from_layers(const std::vector<std::vector<std::vector<Scalar>>>& layers) {
    if (layers.empty()) throw InvalidShape("need at least one layer");
    const std::size_t rows = layers.front().size();
    const std::size_t cols = rows ? layers.front().front().size() : 0;
    DenseTensor out(Shape{rows, cols, layers.size()});
    for (std::size_t l = 0; l < layers.size(); ++l) {
      if (layers[l].size() != rows) throw InvalidShape("layers differ in row count");
      for (std::size_t i = 0; i < rows; ++i) {
        if (layers[l][i].size() != cols) throw InvalidShape("layers differ in column count");
        for (std::size_t j = 0; j < cols; ++j) out.data_[(i * cols + j) * layers.size() + l] = layers[l][i][j];
      }
    }
    return out;
  }

  const Shape& shape() const noexcept { return shape_; }
  std::size_t order() const noexcept { return shape_.order(); }
  std::size_t size() const noexcept { return data_.size(); }

  const std::vector<Scalar>& data() const noexcept { return data_; }
  std::vector<Scalar>& data() noexcept { return data_; }

  const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
  Scalar& operator[](std::size_t flat) { return data_[flat]; }

  const Scalar& operator()(const MultiIndex& idx) const { return data_[shape_.flatten(idx)]; }
  Scalar& operator()(const MultiIndex& idx) { return data_[shape_.flatten(idx)]; }

  friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

private:
  Shape shape_;
  std::vector<Scalar> data_;
};

using IntTensor = DenseTensor<std::int64_t>;
using RealTensor = DenseTensor<double>;

template <typename Scalar>
using RowMajorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Views an order-2 tensor as an Eigen matrix without copying.
template <typename Scalar>
Eigen::Map<const RowMajorMatrix<Scalar>> as_matrix(const DenseTensor<Scalar>& t) {
  if (t.order() != 2) throw OrderMismatch("as_matrix needs an order-2 tensor, got " + to_string(t.shape()));
  return {t.data().data(), static_cast<Eigen::Index>(t.shape()[0]),
          static_cast<Eigen::Index>(t.shape()[1])};
}

template <typename Derived>
DenseTensor<typename Derived::Scalar> from_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  DenseTensor<Scalar> out(Shape{static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols())});
  Eigen::Map<RowMajorMatrix<Scalar>>(out.data().data(), m.rows(), m.cols()) = m;
  return out;
}

template <typename Scalar>
DenseTensor<Scalar> scalar_tensor(Scalar value, std::size_t order = 1) {
  return DenseTensor<Scalar>(Shape::ones(order), value);
}

template <typename Scalar>
bool is_binary(const DenseTensor<Scalar>& t) {
  return std::all_of(t.data().begin(), t.data().end(),
                     [](const Scalar& v) { return v == Scalar(0) || v == Scalar(1); });
}

template <typename Scalar>
void require_binary(const DenseTensor<Scalar>& t, const char* what) {
  if (!is_binary(t)) throw NotBinary(std::string(what) + " requires a binary (0/1) tensor");
}

/// Outer product: order d + e, entry (x, y) = t[x] * u[y].
template <typename Scalar>
DenseTensor<Scalar> tensor_product(const DenseTensor<Scalar>& t, const DenseTensor<Scalar>& u) {
  std::vector<std::size_t> dims = t.shape().dims();
  dims.insert(dims.end(), u.shape().dims().begin(), u.shape().dims().end());
  DenseTensor<Scalar> out{Shape(std::move(dims))};
  const std::size_t inner = u.size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Scalar a = t[i];
    for (std::size_t j = 0; j < inner; ++j) out[i * inner + j] = a * u[j];
  }
  return out;
}

/// Generalized Kronecker product of two tensors of equal order. Entry at
/// (n_k * x_k + y_k)_k equals t[x] * u[y], where n is u's shape.
template <typename Scalar>
DenseTensor<Scalar> kronecker_product(const DenseTensor<Scalar>& t, const DenseTensor<Scalar>& u) {
  const std::size_t d = t.order();
  if (u.order() != d) {
    throw OrderMismatch("kronecker_product needs equal orders, got " + to_string(t.shape()) +
                        " and " + to_string(u.shape()));
  }
  std::vector<std::size_t> dims(d);
  for (std::size_t k = 0; k < d; ++k) {
    auto prod = checked_mul(t.shape()[k], u.shape()[k]);
    if (!prod) throw BudgetExceeded("kronecker_product dimension overflows");
    dims[k] = static_cast<std::size_t>(*prod);
  }
  DenseTensor<Scalar> out{Shape(std::move(dims))};
  const auto out_strides = out.shape().strides();

  // Offset of each u entry inside a block, and of each block origin.
  std::vector<std::size_t> u_offset(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const MultiIndex y = u.shape().unflatten(j);
    std::size_t off = 0;
    for (std::size_t k = 0; k < d; ++k) off += y[k] * out_strides[k];
    u_offset[j] = off;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Scalar a = t[i];
    if (a == Scalar(0)) continue;
    const MultiIndex x = t.shape().unflatten(i);
    std::size_t base = 0;
    for (std::size_t k = 0; k < d; ++k) base += x[k] * u.shape()[k] * out_strides[k];
    for (std::size_t j = 0; j < u.size(); ++j) out[base + u_offset[j]] = a * u[j];
  }
  return out;
}

/// k-fold generalized Kronecker product. k = 0 gives the all-dims-1 tensor
/// holding 1.
template <typename Scalar>
DenseTensor<Scalar> kronecker_power(const DenseTensor<Scalar>& t, std::size_t k) {
  std::vector<std::size_t> dims(t.order());
  for (std::size_t i = 0; i < t.order(); ++i) {
    auto p = checked_pow(t.shape()[i], k);
    if (!p) throw BudgetExceeded("kronecker_power dimension overflows");
    dims[i] = static_cast<std::size_t>(*p);
  }
  Shape target(std::move(dims));  // budget check before any work

  DenseTensor<Scalar> result = scalar_tensor<Scalar>(Scalar(1), t.order());
  for (std::size_t i = 0; i < k; ++i) result = kronecker_product(result, t);
  return result;
}

template <typename Scalar>
std::size_t count_nonzeros(const DenseTensor<Scalar>& t) {
  require_binary(t, "count_nonzeros");
  return static_cast<std::size_t>(std::count(t.data().begin(), t.data().end(), Scalar(1)));
}

template <typename Scalar>
Scalar entry(const DenseTensor<Scalar>& t, const MultiIndex& idx) {
  return t(idx);
}

/// One entry per axis: a value fixes that coordinate, nullopt keeps the mode
/// free (the colon of T(x1, :, x3)).
using SliceSpec = std::vector<std::optional<std::size_t>>;

/// Sub-tensor over the free modes, in their original order. When every mode
/// is fixed the result is a shape-[1] tensor.
template <typename Scalar>
DenseTensor<Scalar> slice(const DenseTensor<Scalar>& t, const SliceSpec& fixed) {
  const std::size_t d = t.order();
  if (fixed.size() != d) {
    throw OrderMismatch("slice needs one entry per mode: got " + std::to_string(fixed.size()) +
                        " for order " + std::to_string(d));
  }
  std::vector<std::size_t> free_axes;
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < d; ++k) {
    if (!fixed[k]) {
      free_axes.push_back(k);
      dims.push_back(t.shape()[k]);
    } else if (*fixed[k] >= t.shape()[k]) {
      throw IndexOutOfRange("slice coordinate " + std::to_string(*fixed[k] + 1) + " exceeds mode " +
                            std::to_string(k + 1) + " of size " + std::to_string(t.shape()[k]));
    }
  }
  if (dims.empty()) dims.push_back(1);
  DenseTensor<Scalar> out{Shape(std::move(dims))};

  MultiIndex src(d);
  for (std::size_t k = 0; k < d; ++k) src[k] = fixed[k].value_or(0);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    if (!free_axes.empty()) {
      const MultiIndex sub = out.shape().unflatten(flat);
      for (std::size_t a = 0; a < free_axes.size(); ++a) src[free_axes[a]] = sub[a];
    }
    out[flat] = t(src);
  }
  return out;
}

}  // namespace tensorfractal
