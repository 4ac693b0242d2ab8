#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tensorfractal/dense_tensor.hpp"
#include "tensorfractal/exact.hpp"

namespace tensorfractal {

/// A named binary defining tensor whose dims all equal the base n. Its k-th
/// Kronecker power is the k-th construction step of the fractal.
class FractalSpec {
public:
  FractalSpec(std::string name, IntTensor defining);

  const std::string& name() const noexcept { return name_; }
  const IntTensor& defining() const noexcept { return defining_; }
  std::size_t base() const noexcept { return defining_.shape()[0]; }
  std::size_t order() const noexcept { return defining_.order(); }
  /// Number of ones in the defining tensor (m).
  std::size_t ones() const noexcept { return ones_; }

private:
  std::string name_;
  IntTensor defining_;
  std::size_t ones_ = 0;
};

/// Accepts cantor, sierpinski, menger, cantor_dust, vicsek3d and
/// multisponge(d), e.g. "multisponge(4)".
FractalSpec catalog(std::string_view name);
FractalSpec multisponge_spec(std::size_t d);
std::vector<std::string> catalog_names();

IntTensor iterate(const FractalSpec& spec, std::size_t k);

/// Entry of iterate(spec, k) at idx without materializing it. Each
/// coordinate is split into k base-n digits, most significant first (the
/// coarsest Kronecker factor); the entry is the product of the defining
/// tensor over those digit tuples.
std::int64_t lazy_entry(const FractalSpec& spec, std::size_t k, const MultiIndex& idx);

/// ln(m) / ln(n).
double fractal_dimension(const FractalSpec& spec);

/// Exact volumes V_0 .. V_k with V_j = (m / n^d)^j.
struct VolumeSequence {
  std::vector<Rational> values;

  bool strictly_decreasing() const;
};

VolumeSequence volume_sequence(const FractalSpec& spec, std::size_t k);

}  // namespace tensorfractal
