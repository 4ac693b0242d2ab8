#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "tensorfractal/dense_tensor.hpp"
#include "tensorfractal/exact.hpp"

namespace tensorfractal {

/// x -> scale * x + offset, with 0 < scale < 1 and every offset component in
/// [0, 1 - scale] so the unit cube maps into itself.
class AffineMap {
public:
  AffineMap(Rational scale, std::vector<Rational> offset);

  const Rational& scale() const noexcept { return scale_; }
  const std::vector<Rational>& offset() const noexcept { return offset_; }
  std::size_t dimension() const noexcept { return offset_.size(); }

private:
  Rational scale_;
  std::vector<Rational> offset_;
};

class IfsSystem {
public:
  IfsSystem(std::size_t dimension, std::vector<AffineMap> maps);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<AffineMap>& maps() const noexcept { return maps_; }

  /// Integer grid base b = 1 / scale shared by every map. Throws
  /// NonAlignedIfs when the maps do not tile a common b-adic grid.
  std::size_t grid_base() const;

private:
  std::size_t dimension_;
  std::vector<AffineMap> maps_;
};

/// Occupied cells of the b^level grid on the unit cube.
struct CellSet {
  std::size_t level = 0;
  std::size_t dimension = 1;
  std::set<MultiIndex> occupied;

  static CellSet full(std::size_t dimension);
};

/// cantor, sierpinski or menger with the maps in their canonical order.
IfsSystem builtin_ifs(std::string_view name);

/// One application of the Hutchinson operator on grid cells: the map with
/// offset a/b sends cell c at level k to cell a * b^k + c at level k + 1.
CellSet hutchinson_step(const CellSet& cells, const IfsSystem& ifs);

/// k steps from the full unit cube, as a binary tensor of side b^k.
IntTensor iterate_ifs(const IfsSystem& ifs, std::size_t k);

IntTensor to_tensor(const CellSet& cells, std::size_t base);

}  // namespace tensorfractal
