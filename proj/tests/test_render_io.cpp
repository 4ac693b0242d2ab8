#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "tensorfractal/fractal_gen.hpp"
#include "tensorfractal/render_io.hpp"

using namespace tensorfractal;

namespace {

const std::filesystem::path kGolden{TENSORFRACTAL_GOLDEN_DIR};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <class Writer>
std::string render(Writer&& write) {
  std::ostringstream out;
  write(out);
  return out.str();
}

Eigen::MatrixXd eigen_power(const Eigen::MatrixXd& m, std::size_t depth) {
  Eigen::MatrixXd out = m;
  for (std::size_t i = 1; i < depth; ++i) out = Eigen::kroneckerProduct(out, m).eval();
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tensorfractal_" + name);
}

}  // namespace

TEST(Pbm, GoldenSierpinski) {
  for (std::size_t k : {1, 2}) {
    const std::string golden = slurp(kGolden / ("sierpinski_k" + std::to_string(k) + ".pbm"));
    ASSERT_FALSE(golden.empty());
    const IntTensor t = iterate(catalog("sierpinski"), k);
    EXPECT_EQ(render([&](std::ostream& o) { write_pbm(t, o); }), golden) << "k=" << k;
  }
}

TEST(Pbm, SinglePixel) {
  EXPECT_EQ(render([](std::ostream& o) { write_pbm(IntTensor::matrix({{1}}), o); }), "P1\n1 1\n1\n");
}

TEST(Pbm, LongRowsWrapAt70) {
  const IntTensor t = iterate(catalog("sierpinski"), 4);  // 81 columns
  const std::string text = render([&](std::ostream& o) { write_pbm(t, o); });
  std::istringstream lines(text);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    EXPECT_LE(line.size(), 70u);
    ++count;
  }
  EXPECT_EQ(count, 2 + 3 * 81u);  // 35 + 35 + 11 pixels per row
  std::istringstream in(text);
  EXPECT_EQ(read_pbm(in), t);
}

TEST(Pbm, RoundTripBothEncodings) {
  for (auto enc : {PnmEncoding::Plain, PnmEncoding::Binary}) {
    for (std::size_t k = 0; k <= 3; ++k) {
      const IntTensor t = iterate(catalog("sierpinski"), k);
      std::istringstream in(render([&](std::ostream& o) { write_pbm(t, o, enc); }));
      EXPECT_EQ(read_pbm(in), t);
    }
  }
  // Widths that are not multiples of 8.
  const IntTensor strip = render_1d_strip(iterate(catalog("cantor"), 3), 5);
  std::istringstream in(render([&](std::ostream& o) { write_pbm(strip, o, PnmEncoding::Binary); }));
  EXPECT_EQ(read_pbm(in), strip);
}

TEST(Pbm, BinaryPacking) {
  const std::string bytes =
      render([](std::ostream& o) { write_pbm(IntTensor::matrix({{1, 0, 1}}), o, PnmEncoding::Binary); });
  EXPECT_EQ(bytes, std::string("P4\n3 1\n") + static_cast<char>(0xA0));
}

TEST(Pbm, Errors) {
  std::ostringstream sink;
  EXPECT_THROW(write_pbm(IntTensor::vector({1, 0}), sink), OrderMismatch);
  EXPECT_THROW(write_pbm(IntTensor::matrix({{2}}), sink), NotBinary);
  EXPECT_THROW(write_pbm(IntTensor::matrix({{1}}), std::filesystem::path("/nonexistent/dir/x.pbm")), IoError);
  std::istringstream bad("P2\n1 1\n1\n");
  EXPECT_THROW(read_pbm(bad), ParseError);
  std::istringstream truncated("P1\n2 2\n1 0 1\n");
  EXPECT_THROW(read_pbm(truncated), ParseError);
  EXPECT_THROW(read_pbm(std::filesystem::path("/nonexistent/x.pbm")), IoError);
}

TEST(Pbm, FileRoundTrip) {
  const auto path = temp_path("carpet.pbm");
  const IntTensor t = iterate(catalog("sierpinski"), 2);
  write_pbm(t, path);
  EXPECT_EQ(slurp(path), slurp(kGolden / "sierpinski_k2.pbm"));
  EXPECT_EQ(read_pbm(path), t);
  std::filesystem::remove(path);
}

TEST(Strip, RepeatsRows) {
  const IntTensor cantor = iterate(catalog("cantor"), 2);
  const IntTensor strip = render_1d_strip(cantor, 3);
  EXPECT_EQ(strip.shape(), (Shape{3, 9}));
  for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(slice(strip, {r, std::nullopt}).data(), cantor.data());
  EXPECT_EQ(render([&](std::ostream& o) { write_pbm(render_1d_strip(catalog("cantor").defining(), 1), o); }),
            "P1\n3 1\n1 0 1\n");
  EXPECT_THROW(render_1d_strip(cantor, 0), InvalidArgument);
  EXPECT_THROW(render_1d_strip(catalog("sierpinski").defining(), 2), OrderMismatch);
}

TEST(Quantize, RoundsHalfUp) {
  EXPECT_EQ(quantize_channel(0.0), 0);
  EXPECT_EQ(quantize_channel(0.5), 128);
  EXPECT_EQ(quantize_channel(0.75), 191);
  EXPECT_EQ(quantize_channel(0.25), 64);
  EXPECT_EQ(quantize_channel(1.0), 255);
  EXPECT_THROW(quantize_channel(1.5), InvalidArgument);
  EXPECT_THROW(quantize_channel(-0.1), InvalidArgument);
}

TEST(RgbFractal, PresetADepthTwoCorner) {
  const RgbImage img = rgb_fractal(rgb_preset("a"), 2);
  EXPECT_EQ(img.side(), 9u);
  const Eigen::Vector3d p = img.pixel(0, 0);
  EXPECT_DOUBLE_EQ(p[0], 0.25);
  EXPECT_DOUBLE_EQ(p[1], 0.5625);
  EXPECT_DOUBLE_EQ(p[2], 1.0);
}

TEST(RgbFractal, ChannelsAreKroneckerPowers) {
  for (const char* name : {"a", "b", "c"}) {
    const RgbPreset preset = rgb_preset(name);
    for (std::size_t depth = 1; depth <= 3; ++depth) {
      const RgbImage img = rgb_fractal(preset, depth);
      const Eigen::MatrixXd* mats[3] = {&preset.red, &preset.green, &preset.blue};
      for (std::size_t c = 0; c < 3; ++c) {
        // Dyadic entries make every product exact.
        EXPECT_EQ(img.channel(c), eigen_power(*mats[c], depth)) << name << " depth=" << depth << " c=" << c;
        EXPECT_EQ(img.channel(c), as_matrix(kronecker_power(from_matrix(*mats[c]), depth)));
      }
      const RealTensor t = img.as_tensor();
      EXPECT_EQ(t.shape(), (Shape{img.side(), img.side(), 3}));
      EXPECT_EQ(t({1, 0, 2}), img.channel(2)(1, 0));
    }
  }
}

TEST(RgbFractal, PresetShapes) {
  EXPECT_EQ(rgb_preset("a").base(), 3u);
  EXPECT_EQ(rgb_preset("b").base(), 4u);
  EXPECT_EQ(rgb_preset("c").base(), 5u);
  EXPECT_EQ(rgb_fractal(rgb_preset("b"), 5).side(), 1024u);
  EXPECT_THROW(rgb_preset("d"), UnknownName);
  EXPECT_THROW(rgb_fractal(rgb_preset("a"), 0), InvalidArgument);
  ScopedBudget budget(1000);
  EXPECT_THROW(rgb_fractal(rgb_preset("c"), 3), BudgetExceeded);
}

TEST(RgbImageValidation, RejectsBadChannels) {
  const Eigen::MatrixXd ok = Eigen::MatrixXd::Constant(2, 2, 0.5);
  EXPECT_THROW(RgbImage(ok, ok, Eigen::MatrixXd::Constant(2, 2, 1.5)), InvalidArgument);
  EXPECT_THROW(RgbImage(ok, ok, Eigen::MatrixXd::Constant(3, 3, 0.5)), InvalidShape);
  EXPECT_THROW(RgbImage(Eigen::MatrixXd::Constant(2, 3, 0.5), Eigen::MatrixXd::Constant(2, 3, 0.5),
                        Eigen::MatrixXd::Constant(2, 3, 0.5)),
               InvalidShape);
}

TEST(Ppm, PlainSmallImage) {
  Eigen::MatrixXd r(1, 1), g(1, 1), b(1, 1);
  r << 0.5;
  g << 0.75;
  b << 1.0;
  EXPECT_EQ(render([&](std::ostream& o) { write_ppm(RgbImage(r, g, b), o); }), "P3\n1 1\n255\n128 191 255\n");
}

TEST(Ppm, RoundTripBothEncodings) {
  const RgbImage img = rgb_fractal(rgb_preset("c"), 2);  // 25 pixels per row, wraps
  for (auto enc : {PnmEncoding::Plain, PnmEncoding::Binary}) {
    const std::string text = render([&](std::ostream& o) { write_ppm(img, o, enc); });
    if (enc == PnmEncoding::Plain) {
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line)) EXPECT_LE(line.size(), 70u);
    }
    std::istringstream in(text);
    const PpmImage back = read_ppm(in);
    ASSERT_EQ(back.width, 25u);
    ASSERT_EQ(back.height, 25u);
    for (std::size_t i = 0; i < 25; ++i)
      for (std::size_t j = 0; j < 25; ++j)
        for (std::size_t c = 0; c < 3; ++c)
          EXPECT_EQ(back.samples[3 * (i * 25 + j) + c], quantize_channel(img.channel(c)(i, j)));
  }
}

TEST(Ppm, Errors) {
  std::istringstream maxval("P3\n1 1\n15\n1 1 1\n");
  EXPECT_THROW(read_ppm(maxval), ParseError);
  std::istringstream magic("P1\n1 1\n1\n");
  EXPECT_THROW(read_ppm(magic), ParseError);
  EXPECT_THROW(write_ppm(rgb_fractal(rgb_preset("a"), 1), std::filesystem::path("/nonexistent/dir/x.ppm")), IoError);
}

TEST(Voxels, GoldenMenger) {
  const std::string golden = slurp(kGolden / "menger_defining.vox");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(render([](std::ostream& o) { write_voxels(catalog("menger").defining(), o); }), golden);
}

TEST(Voxels, CantorDustCorners) {
  const std::string text = render([](std::ostream& o) { write_voxels(catalog("cantor_dust").defining(), o); });
  EXPECT_EQ(text,
            "# voxels 3 3 3 8\n0 0 0\n0 0 2\n0 2 0\n0 2 2\n2 0 0\n2 0 2\n2 2 0\n2 2 2\n");
}

TEST(Voxels, EmptyGrid) {
  EXPECT_EQ(render([](std::ostream& o) { write_voxels(IntTensor(Shape{2, 3, 4}), o); }), "# voxels 2 3 4 0\n");
}

TEST(Voxels, RoundTrip) {
  for (const char* name : {"menger", "vicsek3d", "cantor_dust"}) {
    const IntTensor t = iterate(catalog(name), 2);
    std::istringstream in(render([&](std::ostream& o) { write_voxels(t, o); }));
    EXPECT_EQ(read_voxels(in), t);
  }
  const auto path = temp_path("sponge.vox");
  write_voxels(catalog("menger").defining(), path);
  EXPECT_EQ(read_voxels(path), catalog("menger").defining());
  std::filesystem::remove(path);
}

TEST(Voxels, Errors) {
  std::ostringstream sink;
  EXPECT_THROW(write_voxels(catalog("sierpinski").defining(), sink), OrderMismatch);
  std::istringstream wrong_count("# voxels 2 2 2 2\n0 0 0\n");
  EXPECT_THROW(read_voxels(wrong_count), ParseError);
  std::istringstream outside("# voxels 2 2 2 1\n0 0 5\n");
  EXPECT_ANY_THROW(read_voxels(outside));
  EXPECT_THROW(write_voxels(catalog("menger").defining(), std::filesystem::path("/nonexistent/dir/x.vox")), IoError);
}

TEST(TextTensor, Format) {
  EXPECT_EQ(render([](std::ostream& o) { write_text(catalog("sierpinski").defining(), o); }),
            "# tensor 3 3\n1 1 1\n1 0 1\n1 1 1\n");
  EXPECT_EQ(render([](std::ostream& o) { write_text(catalog("cantor").defining(), o); }), "# tensor 3\n1 0 1\n");
}

TEST(TextTensor, RoundTrip) {
  for (const char* name : {"cantor", "sierpinski", "menger", "multisponge(4)"}) {
    const IntTensor t = iterate(catalog(name), 2);
    std::istringstream in(render([&](std::ostream& o) { write_text(t, o); }));
    EXPECT_EQ(read_text(in), t) << name;
  }
  std::istringstream truncated("# tensor 2 2\n1 0\n");
  EXPECT_THROW(read_text(truncated), ParseError);
}
