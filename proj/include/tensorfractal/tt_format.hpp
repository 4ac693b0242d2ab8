#pragma once

#include <cstdint>
#include <vector>

#include "tensorfractal/dense_tensor.hpp"

namespace tensorfractal {

/// One tensor-train core of shape r_{i-1} x n_i x r_i.
class TTCore {
public:
  explicit TTCore(IntTensor data);

  /// Builds a core from the block layout used in print: blocks[a][b] is the
  /// mode vector at (left rank a, right rank b).
  static TTCore from_blocks(const std::vector<std::vector<std::vector<std::int64_t>>>& blocks);

  std::size_t left_rank() const noexcept { return data_.shape()[0]; }
  std::size_t mode_size() const noexcept { return data_.shape()[1]; }
  std::size_t right_rank() const noexcept { return data_.shape()[2]; }

  std::int64_t operator()(std::size_t a, std::size_t x, std::size_t b) const {
    return data_[(a * mode_size() + x) * right_rank() + b];
  }
  const IntTensor& data() const noexcept { return data_; }

  /// Sum over the mode index: an r_{i-1} x r_i matrix.
  RowMajorMatrix<std::int64_t> mode_sum() const;

private:
  IntTensor data_;
};

/// Chain of cores with consistent ranks and boundary ranks 1.
class TTTensor {
public:
  explicit TTTensor(std::vector<TTCore> cores);

  std::size_t order() const noexcept { return cores_.size(); }
  const std::vector<TTCore>& cores() const noexcept { return cores_; }
  std::vector<std::size_t> mode_sizes() const;
  std::vector<std::size_t> ranks() const;  // r_0 .. r_d

private:
  std::vector<TTCore> cores_;
};

/// Full tensor of the train: entry x = sum over k of prod_i core_i(k_{i-1}, x_i, k_i).
IntTensor contract(const TTTensor& tt);

/// Train of the d-dimensional multisponge defining tensor (d >= 2).
TTTensor multisponge_tt(std::size_t d);

/// Product of the mode-summed cores. Equals the sum of all entries of
/// contract(tt), hence its nonzero count when that tensor is binary.
std::int64_t tt_mode_sums(const TTTensor& tt);

}  // namespace tensorfractal
