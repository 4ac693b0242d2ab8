#include "tensorfractal/ifs_engine.hpp"

#include <string>

namespace tensorfractal {

AffineMap::AffineMap(Rational scale, std::vector<Rational> offset)
    : scale_(std::move(scale)), offset_(std::move(offset)) {
  if (!(scale_ > 0 && scale_ < 1)) throw InvalidArgument("affine map scale must lie in (0, 1)");
  if (offset_.empty()) throw InvalidArgument("affine map needs at least one coordinate");
  for (const auto& o : offset_) {
    if (o < 0 || o > 1 - scale_) throw InvalidArgument("affine map offset leaves the unit cube");
  }
}

IfsSystem::IfsSystem(std::size_t dimension, std::vector<AffineMap> maps)
    : dimension_(dimension), maps_(std::move(maps)) {
  if (maps_.empty()) throw InvalidArgument("an IFS needs at least one map");
  for (const auto& m : maps_) {
    if (m.dimension() != dimension_) {
      throw InvalidArgument("IFS map of dimension " + std::to_string(m.dimension()) +
                            " in a system of dimension " + std::to_string(dimension_));
    }
  }
}

std::size_t IfsSystem::grid_base() const {
  const Rational& scale = maps_.front().scale();
  if (numerator(scale) != 1) throw NonAlignedIfs("IFS scale is not the reciprocal of an integer");
  for (const auto& m : maps_) {
    if (m.scale() != scale) throw NonAlignedIfs("IFS maps use different scales");
    for (const auto& o : m.offset()) {
      if (denominator(Rational(o / scale)) != 1) {
        throw NonAlignedIfs("IFS offset is not a multiple of the scale");
      }
    }
  }
  return denominator(scale).convert_to<std::size_t>();
}

CellSet CellSet::full(std::size_t dimension) {
  CellSet cells;
  cells.dimension = dimension;
  cells.occupied.insert(MultiIndex(dimension, 0));
  return cells;
}

IfsSystem builtin_ifs(std::string_view name) {
  const Rational third(1, 3);
  auto make = [&](std::vector<std::vector<int>> offsets) {
    std::vector<AffineMap> maps;
    const std::size_t d = offsets.front().size();
    for (const auto& o : offsets) {
      std::vector<Rational> offset;
      for (int thirds : o) offset.emplace_back(thirds, 3);
      maps.emplace_back(third, std::move(offset));
    }
    return IfsSystem(d, std::move(maps));
  };
  // Offsets in units of 1/3.
  if (name == "cantor") return make({{0}, {2}});
  if (name == "sierpinski") {
    return make({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
  }
  if (name == "menger") {
    return make({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {2, 1, 0}, {0, 2, 0}, {1, 2, 0},
                 {2, 2, 0}, {0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {2, 2, 1}, {0, 0, 2}, {1, 0, 2},
                 {2, 0, 2}, {0, 1, 2}, {2, 1, 2}, {0, 2, 2}, {1, 2, 2}, {2, 2, 2}});
  }
  throw UnknownName("no built-in IFS named '" + std::string(name) + "'");
}

CellSet hutchinson_step(const CellSet& cells, const IfsSystem& ifs) {
  if (cells.dimension != ifs.dimension()) {
    throw OrderMismatch("cell set of dimension " + std::to_string(cells.dimension) +
                        " with IFS of dimension " + std::to_string(ifs.dimension()));
  }
  const std::size_t b = ifs.grid_base();
  auto side = checked_pow(b, cells.level);
  if (!side || !checked_mul(*side, b)) throw BudgetExceeded("IFS grid side overflows");

  // Block origin of each map at the next level, a * b^level per axis.
  std::vector<MultiIndex> shifts;
  for (const auto& m : ifs.maps()) {
    MultiIndex shift(ifs.dimension());
    for (std::size_t axis = 0; axis < shift.size(); ++axis) {
      const Rational digit = m.offset()[axis] / m.scale();
      shift[axis] = numerator(digit).convert_to<std::size_t>() * *side;
    }
    shifts.push_back(std::move(shift));
  }

  CellSet next;
  next.level = cells.level + 1;
  next.dimension = cells.dimension;
  for (const auto& shift : shifts) {
    for (const auto& c : cells.occupied) {
      MultiIndex image(c);
      for (std::size_t axis = 0; axis < image.size(); ++axis) image[axis] += shift[axis];
      next.occupied.insert(std::move(image));
    }
  }
  return next;
}

IntTensor to_tensor(const CellSet& cells, std::size_t base) {
  auto side = checked_pow(base, cells.level);
  if (!side) throw BudgetExceeded("IFS grid side overflows");
  IntTensor out(Shape(std::vector<std::size_t>(cells.dimension, *side)));
  for (const auto& c : cells.occupied) out(c) = 1;
  return out;
}

IntTensor iterate_ifs(const IfsSystem& ifs, std::size_t k) {
  const std::size_t b = ifs.grid_base();
  auto side = checked_pow(b, k);
  if (!side) throw BudgetExceeded("IFS grid side overflows");
  Shape target(std::vector<std::size_t>(ifs.dimension(), *side));  // budget check up front

  CellSet cells = CellSet::full(ifs.dimension());
  for (std::size_t i = 0; i < k; ++i) cells = hutchinson_step(cells, ifs);
  return to_tensor(cells, b);
}

}  // namespace tensorfractal
