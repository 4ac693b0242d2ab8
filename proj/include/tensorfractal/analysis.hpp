#pragma once

#include <cstdint>
#include <vector>

#include "tensorfractal/dense_tensor.hpp"
#include "tensorfractal/exact.hpp"

namespace tensorfractal {

struct ComponentReport {
  std::size_t component_count = 0;
  bool is_connected = true;  // component_count <= 1
  std::size_t largest_component_size = 0;
};

/// Components of the ones of a binary tensor under face adjacency: two cells
/// touch when their indices differ by 1 in exactly one coordinate.
ComponentReport connected_components(const IntTensor& t);

/// (d + 2) * 2^(d - 1), the number of ones in the multisponge defining tensor.
BigInt multisponge_nnz(std::size_t d);

/// Whether (d + 2) * 2^(d - 1) < 3^d, i.e. the multisponge volume tends to 0.
bool volume_vanishes(std::size_t d);

/// OR-reduces every n^d block of a binary tensor whose dims are multiples of n.
IntTensor coarsen(const IntTensor& t, std::size_t n);

/// N(n^-j) for j = 1..levels: the number of occupied boxes of side n^-j.
std::vector<std::uint64_t> box_counts(const IntTensor& t, std::size_t n, std::size_t levels);

/// Least-squares slope of ln N(r) against -ln r over r = n^-1 .. n^-levels.
/// Every axis must have length n^levels.
double box_count_dimension(const IntTensor& t, std::size_t n, std::size_t levels);

}  // namespace tensorfractal
