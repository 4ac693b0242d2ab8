#include "tensorfractal/render_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tensorfractal {

RgbImage::RgbImage(Eigen::MatrixXd red, Eigen::MatrixXd green, Eigen::MatrixXd blue)
    : channels_{std::move(red), std::move(green), std::move(blue)} {
  for (const auto& c : channels_) {
    if (c.rows() != channels_[0].rows() || c.cols() != channels_[0].rows()) {
      throw InvalidShape("RGB channels must be square matrices of equal size");
    }
    if (c.size() > 0 && (c.minCoeff() < 0.0 || c.maxCoeff() > 1.0)) {
      throw InvalidArgument("RGB intensities must lie in [0, 1]");
    }
  }
}

Eigen::Vector3d RgbImage::pixel(std::size_t row, std::size_t col) const {
  const auto r = static_cast<Eigen::Index>(row), c = static_cast<Eigen::Index>(col);
  return {channels_[0](r, c), channels_[1](r, c), channels_[2](r, c)};
}

RealTensor RgbImage::as_tensor() const {
  const std::size_t n = side();
  RealTensor out(Shape{n, n, 3});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < 3; ++c)
        out[(i * n + j) * 3 + c] = channels_[c](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

RgbPreset rgb_preset(std::string_view name) {
  auto square = [](std::initializer_list<std::initializer_list<double>> rows) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
      Eigen::Index j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  };
  if (name == "a") {
    return {"a",
            square({{.5, 1, .5}, {1, .5, 1}, {.5, 1, .5}}),
            square({{.75, 1, .75}, {1, 1, 1}, {.75, 1, .75}}),
            square({{1, .75, 1}, {.75, 1, .75}, {1, .75, 1}})};
  }
  if (name == "b") {
    return {"b",
            square({{.5, .75, .75, .5}, {.75, 1, 1, .75}, {.75, 1, 1, .75}, {.5, .75, .75, .5}}),
            square({{1, .5, .5, 1}, {.5, .75, .75, .5}, {.5, .75, .75, .5}, {1, .5, .5, 1}}),
            square({{.75, 1, 1, .75}, {1, .5, .5, 1}, {1, .5, .5, 1}, {.75, 1, 1, .75}})};
  }
  if (name == "c") {
    return {"c",
            square({{.25, .5, 1, .5, .25},
                    {.5, 1, 1, 1, .5},
                    {1, 1, .5, 1, 1},
                    {.5, .5, .25, .5, .5},
                    {.5, .25, .25, .25, .5}}),
            square({{.25, .25, .5, .25, .25},
                    {.25, .5, 1, .5, .25},
                    {.5, 1, 1, 1, .5},
                    {1, 1, .5, 1, 1},
                    {.5, .5, .25, .5, .5}}),
            square({{.25, .25, .25, .25, .25},
                    {.25, .25, .5, .25, .25},
                    {.25, .5, 1, .5, .25},
                    {.5, 1, 1, 1, .5},
                    {1, 1, .5, 1, 1}})};
  }
  throw UnknownName("unknown RGB preset '" + std::string(name) + "' (expected a, b or c)");
}

RgbImage rgb_fractal(const RgbPreset& preset, std::size_t depth) {
  if (depth == 0) throw InvalidArgument("RGB fractal depth must be at least 1");
  const std::size_t m = preset.base();
  for (const auto* mat : {&preset.red, &preset.green, &preset.blue}) {
    if (mat->rows() != mat->cols() || static_cast<std::size_t>(mat->rows()) != m) {
      throw InvalidShape("RGB preset matrices must be square and of equal size");
    }
  }
  auto side = checked_pow(m, depth);
  if (!side || !checked_mul(*side, *side)) throw BudgetExceeded("RGB fractal side overflows");
  Shape pixels{*side, *side, 3};  // budget check for the whole image

  auto power = [depth](const Eigen::MatrixXd& mat) -> Eigen::MatrixXd {
    return as_matrix(kronecker_power(from_matrix(mat), depth));
  };
  return RgbImage(power(preset.red), power(preset.green), power(preset.blue));
}

std::uint8_t quantize_channel(double value) {
  if (!(value >= 0.0 && value <= 1.0)) throw InvalidArgument("channel value outside [0, 1]");
  return static_cast<std::uint8_t>(std::floor(value * 255.0 + 0.5));
}

namespace {

constexpr std::size_t kMaxPlainLine = 70;

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

void finish(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

// Writes tokens of one image row, breaking lines before kMaxPlainLine.
class PlainRowWriter {
public:
  explicit PlainRowWriter(std::ostream& out) : out_(out) {}
  void token(const std::string& s) {
    if (column_ > 0 && column_ + 1 + s.size() > kMaxPlainLine) {
      out_ << '\n';
      column_ = 0;
    }
    if (column_ > 0) {
      out_ << ' ';
      ++column_;
    }
    out_ << s;
    column_ += s.size();
  }
  void end_row() {
    out_ << '\n';
    column_ = 0;
  }

private:
  std::ostream& out_;
  std::size_t column_ = 0;
};

// Header tokenizer shared by the netpbm readers; skips '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  if (tok.empty()) throw ParseError("unexpected end of input");
  return tok;
}

std::size_t next_number(std::istream& in) {
  const std::string tok = next_token(in);
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError("expected a number, got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

void write_pbm(const IntTensor& t, std::ostream& out, PnmEncoding encoding) {
  if (t.order() != 2) throw OrderMismatch("PBM output needs an order-2 tensor, got " + to_string(t.shape()));
  require_binary(t, "write_pbm");
  const std::size_t height = t.shape()[0], width = t.shape()[1];
  if (encoding == PnmEncoding::Plain) {
    out << "P1\n" << width << ' ' << height << '\n';
    PlainRowWriter rows(out);
    for (std::size_t i = 0; i < height; ++i) {
      for (std::size_t j = 0; j < width; ++j) rows.token(t[i * width + j] ? "1" : "0");
      rows.end_row();
    }
    return;
  }
  out << "P4\n" << width << ' ' << height << '\n';
  std::vector<char> packed((width + 7) / 8);
  for (std::size_t i = 0; i < height; ++i) {
    std::fill(packed.begin(), packed.end(), 0);
    for (std::size_t j = 0; j < width; ++j)
      if (t[i * width + j]) packed[j / 8] = static_cast<char>(packed[j / 8] | (0x80 >> (j % 8)));
    out.write(packed.data(), static_cast<std::streamsize>(packed.size()));
  }
}

void write_pbm(const IntTensor& t, const std::filesystem::path& path, PnmEncoding encoding) {
  auto out = open_output(path);
  write_pbm(t, out, encoding);
  finish(out, path);
}

void write_ppm(const RgbImage& img, std::ostream& out, PnmEncoding encoding) {
  const std::size_t n = img.side();
  out << (encoding == PnmEncoding::Plain ? "P3\n" : "P6\n") << n << ' ' << n << "\n255\n";
  if (encoding == PnmEncoding::Plain) {
    PlainRowWriter rows(out);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Eigen::Vector3d p = img.pixel(i, j);
        std::string triple;
        for (int c = 0; c < 3; ++c) {
          if (c) triple += ' ';
          triple += std::to_string(quantize_channel(p[c]));
        }
        rows.token(triple);
      }
      rows.end_row();
    }
    return;
  }
  std::vector<char> row(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Eigen::Vector3d p = img.pixel(i, j);
      for (int c = 0; c < 3; ++c) row[3 * j + c] = static_cast<char>(quantize_channel(p[c]));
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

void write_ppm(const RgbImage& img, const std::filesystem::path& path, PnmEncoding encoding) {
  auto out = open_output(path);
  write_ppm(img, out, encoding);
  finish(out, path);
}

void write_voxels(const IntTensor& t, std::ostream& out) {
  if (t.order() != 3) throw OrderMismatch("voxel output needs an order-3 tensor, got " + to_string(t.shape()));
  const std::size_t count = count_nonzeros(t);
  out << "# voxels " << t.shape()[0] << ' ' << t.shape()[1] << ' ' << t.shape()[2] << ' ' << count << '\n';
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    if (!t[flat]) continue;
    const MultiIndex idx = t.shape().unflatten(flat);
    out << idx[0] << ' ' << idx[1] << ' ' << idx[2] << '\n';
  }
}

void write_voxels(const IntTensor& t, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_voxels(t, out);
  finish(out, path);
}

IntTensor render_1d_strip(const IntTensor& t, std::size_t bar_height) {
  if (t.order() != 1) throw OrderMismatch("strip rendering needs an order-1 tensor, got " + to_string(t.shape()));
  if (bar_height == 0) throw InvalidArgument("bar height must be at least 1");
  IntTensor out(Shape{bar_height, t.size()});
  for (std::size_t r = 0; r < bar_height; ++r)
    std::copy(t.data().begin(), t.data().end(), out.data().begin() + static_cast<std::ptrdiff_t>(r * t.size()));
  return out;
}

IntTensor read_pbm(std::istream& in) {
  const std::string magic = next_token(in);
  if (magic != "P1" && magic != "P4") throw ParseError("not a PBM file (magic '" + magic + "')");
  const std::size_t width = next_number(in);
  const std::size_t height = next_number(in);
  IntTensor out(Shape{height, width});
  if (magic == "P1") {
    for (std::size_t k = 0; k < out.size(); ++k) {
      int c;
      do {
        c = in.get();
        if (c == '#') {
          while ((c = in.get()) != EOF && c != '\n') {
          }
        }
      } while (c != EOF && c != '0' && c != '1');
      if (c == EOF) throw ParseError("PBM data truncated");
      out[k] = c - '0';
    }
    return out;
  }
  std::vector<char> packed((width + 7) / 8);
  for (std::size_t i = 0; i < height; ++i) {
    if (!in.read(packed.data(), static_cast<std::streamsize>(packed.size()))) throw ParseError("PBM data truncated");
    for (std::size_t j = 0; j < width; ++j)
      out[i * width + j] = (static_cast<unsigned char>(packed[j / 8]) >> (7 - j % 8)) & 1;
  }
  return out;
}

IntTensor read_pbm(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_pbm(in);
}

PpmImage read_ppm(std::istream& in) {
  const std::string magic = next_token(in);
  if (magic != "P3" && magic != "P6") throw ParseError("not a PPM file (magic '" + magic + "')");
  PpmImage img;
  img.width = next_number(in);
  img.height = next_number(in);
  if (next_number(in) != 255) throw ParseError("only maxval 255 is supported");
  img.samples.resize(img.width * img.height * 3);
  if (magic == "P3") {
    for (auto& s : img.samples) {
      const std::size_t v = next_number(in);
      if (v > 255) throw ParseError("PPM sample exceeds maxval");
      s = static_cast<std::uint8_t>(v);
    }
  } else if (!in.read(reinterpret_cast<char*>(img.samples.data()), static_cast<std::streamsize>(img.samples.size()))) {
    throw ParseError("PPM data truncated");
  }
  return img;
}

PpmImage read_ppm(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_ppm(in);
}

IntTensor read_voxels(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty voxel file");
  std::istringstream header(line);
  std::string hash, tag;
  std::size_t nx = 0, ny = 0, nz = 0, count = 0;
  if (!(header >> hash >> tag >> nx >> ny >> nz >> count) || hash != "#" || tag != "voxels") {
    throw ParseError("malformed voxel header '" + line + "'");
  }
  IntTensor out(Shape{nx, ny, nz});
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    MultiIndex idx(3);
    if (!(row >> idx[0] >> idx[1] >> idx[2])) throw ParseError("malformed voxel line '" + line + "'");
    if (!out.shape().contains(idx)) throw ParseError("voxel '" + line + "' outside the grid");
    out(idx) = 1;
    ++seen;
  }
  if (seen != count) {
    throw ParseError("voxel header announces " + std::to_string(count) + " cells, found " + std::to_string(seen));
  }
  return out;
}

IntTensor read_voxels(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_voxels(in);
}

void write_text(const IntTensor& t, std::ostream& out) {
  out << "# tensor";
  for (std::size_t d : t.shape().dims()) out << ' ' << d;
  out << '\n';
  const std::size_t fiber = t.shape().dims().back();
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    out << t[flat] << ((flat + 1) % fiber == 0 ? '\n' : ' ');
  }
}

IntTensor read_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty tensor text");
  std::istringstream header(line);
  std::string hash, tag;
  if (!(header >> hash >> tag) || hash != "#" || tag != "tensor") {
    throw ParseError("malformed tensor header '" + line + "'");
  }
  std::vector<std::size_t> dims;
  for (std::size_t d; header >> d;) dims.push_back(d);
  IntTensor out{Shape(std::move(dims))};
  for (auto& v : out.data()) {
    if (!(in >> v)) throw ParseError("tensor text truncated");
  }
  return out;
}

}  // namespace tensorfractal
