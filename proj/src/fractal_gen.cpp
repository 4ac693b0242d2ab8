#include "tensorfractal/fractal_gen.hpp"

#include <charconv>
#include <cmath>

#include "tensorfractal/tt_format.hpp"

namespace tensorfractal {

FractalSpec::FractalSpec(std::string name, IntTensor defining)
    : name_(std::move(name)), defining_(std::move(defining)) {
  const auto& dims = defining_.shape().dims();
  for (std::size_t d : dims) {
    if (d != dims.front()) {
      throw InvalidShape("defining tensor of '" + name_ + "' must have equal dims, got " +
                         to_string(defining_.shape()));
    }
  }
  ones_ = count_nonzeros(defining_);
  if (ones_ == 0) throw DegenerateSpec("defining tensor of '" + name_ + "' has no ones");
}

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

const Rows kSierpinski{{1, 1, 1}, {1, 0, 1}, {1, 1, 1}};
const Rows kCorners{{1, 0, 1}, {0, 0, 0}, {1, 0, 1}};
const Rows kCenter{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}};
const Rows kPlus{{0, 1, 0}, {1, 1, 1}, {0, 1, 0}};
const Rows kZeros{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

std::optional<std::size_t> parse_multisponge(std::string_view name) {
  constexpr std::string_view prefix = "multisponge(";
  if (!name.starts_with(prefix) || !name.ends_with(")")) return std::nullopt;
  std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  std::size_t d = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw UnknownName("malformed multisponge order in '" + std::string(name) + "'");
  }
  return d;
}

}  // namespace

FractalSpec multisponge_spec(std::size_t d) {
  return FractalSpec("multisponge(" + std::to_string(d) + ")", contract(multisponge_tt(d)));
}

FractalSpec catalog(std::string_view name) {
  if (name == "cantor") return FractalSpec("cantor", IntTensor::vector({1, 0, 1}));
  if (name == "sierpinski") return FractalSpec("sierpinski", IntTensor::matrix(kSierpinski));
  if (name == "menger") {
    return FractalSpec("menger", IntTensor::from_layers({kSierpinski, kCorners, kSierpinski}));
  }
  if (name == "cantor_dust") {
    return FractalSpec("cantor_dust", IntTensor::from_layers({kCorners, kZeros, kCorners}));
  }
  if (name == "vicsek3d") return FractalSpec("vicsek3d", IntTensor::from_layers({kCenter, kPlus, kCenter}));
  if (auto d = parse_multisponge(name)) return multisponge_spec(*d);
  throw UnknownName("unknown fractal '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"cantor", "sierpinski", "menger", "cantor_dust", "vicsek3d", "multisponge(d)"};
}

IntTensor iterate(const FractalSpec& spec, std::size_t k) { return kronecker_power(spec.defining(), k); }

std::int64_t lazy_entry(const FractalSpec& spec, std::size_t k, const MultiIndex& idx) {
  const std::size_t d = spec.order();
  const std::size_t n = spec.base();
  if (idx.size() != d) {
    throw IndexOutOfRange("index " + format_index(idx) + " has " + std::to_string(idx.size()) +
                          " coordinates, fractal order is " + std::to_string(d));
  }
  // An overflowing n^k exceeds every representable coordinate.
  if (auto side = checked_pow(n, k)) {
    for (std::size_t c : idx) {
      if (c >= *side) {
        throw IndexOutOfRange("index " + format_index(idx) + " outside grid of side " +
                              std::to_string(*side));
      }
    }
  }

  const auto& strides_src = spec.defining().shape().strides();
  MultiIndex rest = idx;
  // Digit order does not change the product; peel least significant first.
  for (std::size_t level = 0; level < k; ++level) {
    std::size_t flat = 0;
    for (std::size_t axis = 0; axis < d; ++axis) {
      flat += (rest[axis] % n) * strides_src[axis];
      rest[axis] /= n;
    }
    if (spec.defining()[flat] == 0) return 0;
  }
  return 1;
}

double fractal_dimension(const FractalSpec& spec) {
  if (spec.base() == 1) throw DegenerateSpec("fractal dimension undefined for base n = 1");
  return std::log(static_cast<double>(spec.ones())) / std::log(static_cast<double>(spec.base()));
}

bool VolumeSequence::strictly_decreasing() const {
  for (std::size_t j = 1; j < values.size(); ++j)
    if (!(values[j] < values[j - 1])) return false;
  return true;
}

VolumeSequence volume_sequence(const FractalSpec& spec, std::size_t k) {
  const BigInt cells = boost::multiprecision::pow(BigInt(spec.base()), static_cast<unsigned>(spec.order()));
  const Rational ratio(BigInt(spec.ones()), cells);
  VolumeSequence seq;
  seq.values.reserve(k + 1);
  Rational v = 1;
  for (std::size_t j = 0; j <= k; ++j) {
    seq.values.push_back(v);
    v *= ratio;
  }
  return seq;
}

}  // namespace tensorfractal
