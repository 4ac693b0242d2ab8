#include "tensorfractal/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tensorfractal {

ComponentReport connected_components(const IntTensor& t) {
  require_binary(t, "connected_components");
  const auto& dims = t.shape().dims();
  const auto strides = t.shape().strides();
  const std::size_t d = dims.size();

  std::vector<bool> seen(t.size(), false);
  std::vector<std::size_t> frontier;
  ComponentReport report;

  for (std::size_t start = 0; start < t.size(); ++start) {
    if (t[start] == 0 || seen[start]) continue;
    ++report.component_count;
    std::size_t size = 0;
    frontier.assign(1, start);
    seen[start] = true;
    while (!frontier.empty()) {
      const std::size_t cell = frontier.back();
      frontier.pop_back();
      ++size;
      for (std::size_t axis = 0; axis < d; ++axis) {
        const std::size_t coord = (cell / strides[axis]) % dims[axis];
        if (coord > 0) {
          const std::size_t nb = cell - strides[axis];
          if (t[nb] == 1 && !seen[nb]) {
            seen[nb] = true;
            frontier.push_back(nb);
          }
        }
        if (coord + 1 < dims[axis]) {
          const std::size_t nb = cell + strides[axis];
          if (t[nb] == 1 && !seen[nb]) {
            seen[nb] = true;
            frontier.push_back(nb);
          }
        }
      }
    }
    report.largest_component_size = std::max(report.largest_component_size, size);
  }
  report.is_connected = report.component_count <= 1;
  return report;
}

BigInt multisponge_nnz(std::size_t d) {
  if (d < 2) throw InvalidOrder("multisponge needs order d >= 2, got " + std::to_string(d));
  return BigInt(d + 2) * boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(d - 1));
}

bool volume_vanishes(std::size_t d) {
  return multisponge_nnz(d) < boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(d));
}

IntTensor coarsen(const IntTensor& t, std::size_t n) {
  require_binary(t, "coarsen");
  if (n == 0) throw InvalidArgument("coarsening factor must be positive");
  std::vector<std::size_t> dims = t.shape().dims();
  for (auto& dim : dims) {
    if (dim % n != 0) {
      throw ShapeNotPower("shape " + to_string(t.shape()) + " is not divisible by " + std::to_string(n));
    }
    dim /= n;
  }
  IntTensor out{Shape(std::move(dims))};
  const auto out_strides = out.shape().strides();
  const auto& src_dims = t.shape().dims();
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    if (t[flat] == 0) continue;
    // Walk coordinates from the fastest axis.
    std::size_t rest = flat, target = 0;
    for (std::size_t axis = src_dims.size(); axis-- > 0;) {
      target += ((rest % src_dims[axis]) / n) * out_strides[axis];
      rest /= src_dims[axis];
    }
    out[target] = 1;
  }
  return out;
}

std::vector<std::uint64_t> box_counts(const IntTensor& t, std::size_t n, std::size_t levels) {
  require_binary(t, "box_counts");
  if (levels == 0) throw ShapeNotPower("box counting needs at least one level");
  if (n < 2) throw ShapeNotPower("box counting needs a base n >= 2");
  auto side = checked_pow(n, levels);
  for (std::size_t dim : t.shape().dims()) {
    if (!side || dim != *side) {
      throw ShapeNotPower("every axis must have length " + std::to_string(n) + "^" +
                          std::to_string(levels) + ", got shape " + to_string(t.shape()));
    }
  }
  // counts[levels - 1] is the finest level; coarsen towards level 1.
  std::vector<std::uint64_t> counts(levels);
  IntTensor grid = t;
  for (std::size_t j = levels; j >= 1; --j) {
    counts[j - 1] = count_nonzeros(grid);
    if (j > 1) grid = coarsen(grid, n);
  }
  return counts;
}

double box_count_dimension(const IntTensor& t, std::size_t n, std::size_t levels) {
  const auto counts = box_counts(t, n, levels);
  for (auto c : counts) {
    if (c == 0) throw DegenerateSpec("box-counting dimension of an empty set is undefined");
  }
  const double log_n = std::log(static_cast<double>(n));
  if (levels == 1) return std::log(static_cast<double>(counts[0])) / log_n;

  // x_j = -ln r_j = j ln n, y_j = ln N_j.
  double mean_x = 0, mean_y = 0;
  for (std::size_t j = 1; j <= levels; ++j) {
    mean_x += static_cast<double>(j) * log_n;
    mean_y += std::log(static_cast<double>(counts[j - 1]));
  }
  mean_x /= static_cast<double>(levels);
  mean_y /= static_cast<double>(levels);
  double sxy = 0, sxx = 0;
  for (std::size_t j = 1; j <= levels; ++j) {
    const double dx = static_cast<double>(j) * log_n - mean_x;
    sxy += dx * (std::log(static_cast<double>(counts[j - 1])) - mean_y);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace tensorfractal
