#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "tensorfractal/dense_tensor.hpp"

namespace tensorfractal {

/// Square RGB image, one real-valued matrix per channel, values in [0, 1].
/// Row index increases downward.
class RgbImage {
public:
  RgbImage(Eigen::MatrixXd red, Eigen::MatrixXd green, Eigen::MatrixXd blue);

  std::size_t side() const noexcept { return static_cast<std::size_t>(channels_[0].rows()); }
  const Eigen::MatrixXd& channel(std::size_t c) const { return channels_.at(c); }
  Eigen::Vector3d pixel(std::size_t row, std::size_t col) const;

  /// The n x n x 3 tensor with T(:, :, c) = channel c.
  RealTensor as_tensor() const;

private:
  std::array<Eigen::MatrixXd, 3> channels_;
};

/// Three equal-size m x m defining matrices with entries in [0, 1].
struct RgbPreset {
  std::string name;
  Eigen::MatrixXd red, green, blue;

  std::size_t base() const noexcept { return static_cast<std::size_t>(red.rows()); }
};

/// Built-in presets "a" (m = 3), "b" (m = 4) and "c" (m = 5).
RgbPreset rgb_preset(std::string_view name);

/// Channel c is the depth-fold Kronecker power of the preset's matrix c.
RgbImage rgb_fractal(const RgbPreset& preset, std::size_t depth);

enum class PnmEncoding { Plain, Binary };

/// round(v * 255) with halves rounded up.
std::uint8_t quantize_channel(double value);

void write_pbm(const IntTensor& t, std::ostream& out, PnmEncoding encoding = PnmEncoding::Plain);
void write_pbm(const IntTensor& t, const std::filesystem::path& path,
               PnmEncoding encoding = PnmEncoding::Plain);

void write_ppm(const RgbImage& img, std::ostream& out, PnmEncoding encoding = PnmEncoding::Plain);
void write_ppm(const RgbImage& img, const std::filesystem::path& path,
               PnmEncoding encoding = PnmEncoding::Plain);

/// "# voxels nx ny nz count" followed by "x y z" for each occupied cell,
/// 0-based, in ascending lexicographic order.
void write_voxels(const IntTensor& t, std::ostream& out);
void write_voxels(const IntTensor& t, const std::filesystem::path& path);

/// Repeats an order-1 tensor as bar_height identical rows.
IntTensor render_1d_strip(const IntTensor& t, std::size_t bar_height);

/// Readers for the formats above (P1/P4, P3/P6 and voxel text).
IntTensor read_pbm(std::istream& in);
IntTensor read_pbm(const std::filesystem::path& path);

struct PpmImage {
  std::size_t width = 0, height = 0;
  std::vector<std::uint8_t> samples;  // row-major RGB triples
};
PpmImage read_ppm(std::istream& in);
PpmImage read_ppm(const std::filesystem::path& path);

IntTensor read_voxels(std::istream& in);
IntTensor read_voxels(const std::filesystem::path& path);

/// Plain-text tensor: a "# tensor <dims...>" header, then one line per
/// last-axis fiber in row-major order.
void write_text(const IntTensor& t, std::ostream& out);
IntTensor read_text(std::istream& in);

}  // namespace tensorfractal
