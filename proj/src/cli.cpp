#include "tensorfractal/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tensorfractal/analysis.hpp"
#include "tensorfractal/fractal_gen.hpp"
#include "tensorfractal/render_io.hpp"
#include "tensorfractal/tt_format.hpp"

namespace tensorfractal::cli {

namespace {

FractalSpec resolve_fractal(const CliConfig& config) {
  if (config.fractal == "multisponge") {
    if (!config.order) throw InvalidOrder("multisponge needs --order d (d >= 2)");
    return multisponge_spec(*config.order);
  }
  return catalog(config.fractal);
}

void with_output(const CliConfig& config, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
  if (!config.output) {
    emit(out);
    return;
  }
  std::ofstream file(*config.output, std::ios::binary);
  if (!file) throw IoError("cannot open '" + *config.output + "' for writing");
  emit(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + *config.output + "'");
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

IntTensor as_image(const IntTensor& t, const CliConfig& config) {
  if (t.order() == 1) return render_1d_strip(t, config.bar_height);
  if (t.order() == 2) return t;
  throw InvalidArgument("image formats need a fractal of order 1 or 2, got order " + std::to_string(t.order()));
}

int cmd_list(std::ostream& out) {
  for (const char* name : {"cantor", "sierpinski", "menger", "cantor_dust", "vicsek3d"}) {
    out << name << ": " << format_double(fractal_dimension(catalog(name))) << '\n';
  }
  for (std::size_t d = 2; d <= 6; ++d) {
    const FractalSpec spec = multisponge_spec(d);
    out << spec.name() << ": " << format_double(fractal_dimension(spec)) << '\n';
  }
  return 0;
}

int cmd_generate(const CliConfig& config, std::ostream& out) {
  const FractalSpec spec = resolve_fractal(config);
  const IntTensor t = iterate(spec, config.iterations);
  const PnmEncoding encoding = config.binary ? PnmEncoding::Binary : PnmEncoding::Plain;
  switch (config.format) {
    case OutputFormat::Text:
      with_output(config, out, [&](std::ostream& os) { write_text(t, os); });
      break;
    case OutputFormat::Pbm: {
      const IntTensor img = as_image(t, config);
      with_output(config, out, [&](std::ostream& os) { write_pbm(img, os, encoding); });
      break;
    }
    case OutputFormat::Ppm: {
      // Filled cells black on white, matching PBM semantics.
      const IntTensor img = as_image(t, config);
      if (img.shape()[0] != img.shape()[1]) {
        throw InvalidArgument("ppm output needs a square image; use pbm for strips");
      }
      const Eigen::MatrixXd shade = 1.0 - as_matrix(img).cast<double>().array();
      const RgbImage rgb(shade, shade, shade);
      with_output(config, out, [&](std::ostream& os) { write_ppm(rgb, os, encoding); });
      break;
    }
    case OutputFormat::Voxels:
      if (t.order() != 3) {
        throw InvalidArgument("voxel output needs a fractal of order 3, got order " + std::to_string(t.order()));
      }
      with_output(config, out, [&](std::ostream& os) { write_voxels(t, os); });
      break;
  }
  return 0;
}

int cmd_analyze(const CliConfig& config, std::ostream& out) {
  const FractalSpec spec = resolve_fractal(config);
  const std::size_t k = config.iterations;
  const IntTensor t = iterate(spec, k);
  const ComponentReport components = connected_components(t);
  const VolumeSequence volumes = volume_sequence(spec, k);

  out << "fractal: " << spec.name() << '\n';
  out << "order: " << spec.order() << '\n';
  out << "base: " << spec.base() << '\n';
  out << "iterations: " << k << '\n';
  out << "shape: " << tensorfractal::to_string(t.shape()) << '\n';
  out << "defining_nnz: " << spec.ones() << '\n';
  out << "nnz: " << count_nonzeros(t) << '\n';
  out << "fractal_dimension: " << format_double(fractal_dimension(spec)) << '\n';
  out << "components: " << components.component_count << '\n';
  out << "connected: " << (components.is_connected ? "true" : "false") << '\n';
  out << "largest_component: " << components.largest_component_size << '\n';
  out << "volume:";
  for (const auto& v : volumes.values) out << ' ' << to_string(v);
  out << '\n';
  out << "box_count_dimension: "
      << (k >= 1 ? format_double(box_count_dimension(t, spec.base(), k)) : std::string("n/a")) << '\n';
  return 0;
}

int cmd_rgb(const CliConfig& config, std::ostream& out) {
  const RgbImage img = rgb_fractal(rgb_preset(config.preset), config.depth);
  const PnmEncoding encoding = config.binary ? PnmEncoding::Binary : PnmEncoding::Plain;
  with_output(config, out, [&](std::ostream& os) { write_ppm(img, os, encoding); });
  return 0;
}

int cmd_verify(const CliConfig& config, std::ostream& out) {
  if (config.dims_from < 2 || config.dims_to < config.dims_from) {
    throw InvalidOrder("multisponge dims must form a range a..b with 2 <= a <= b");
  }
  bool all_pass = true;
  auto report = [&](std::size_t d, const char* check, bool pass, const std::string& detail) {
    all_pass = all_pass && pass;
    out << "d=" << d << ' ' << check << ": " << (pass ? "pass" : "FAIL") << " (" << detail << ")\n";
  };
  for (std::size_t d = config.dims_from; d <= config.dims_to; ++d) {
    const TTTensor tt = multisponge_tt(d);
    const IntTensor defining = contract(tt);
    const std::size_t counted = count_nonzeros(defining);
    const std::int64_t mode_sums = tt_mode_sums(tt);
    const BigInt formula = multisponge_nnz(d);
    report(d, "nnz", BigInt(counted) == formula && BigInt(mode_sums) == formula,
           "contract " + std::to_string(counted) + ", mode sums " + std::to_string(mode_sums) +
               ", formula " + formula.str());

    const BigInt cube = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(d));
    const std::string inequality = formula.str() + " < " + cube.str();
    if (d >= 3) {
      report(d, "volume", volume_vanishes(d), inequality);
    } else {
      out << "d=" << d << " volume: info (" << inequality << (volume_vanishes(d) ? " holds" : " fails")
          << "; theorem stated for d >= 3)\n";
    }

    const ComponentReport components = connected_components(defining);
    report(d, "connected", components.is_connected,
           std::to_string(components.component_count) + " component(s)");
  }
  out << "verify: " << (all_pass ? "all checks passed" : "some checks FAILED") << '\n';
  return all_pass ? 0 : 1;
}

int cmd_entry(const CliConfig& config, std::ostream& out) {
  const FractalSpec spec = resolve_fractal(config);
  const MultiIndex idx = from_one_based(config.index);
  const std::int64_t value = lazy_entry(spec, config.iterations, idx);
  out << "entry " << format_index(idx) << ": " << value << '\n';
  return 0;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t d = std::stoul(text);
      return {d, d};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("malformed range '" + text + "', expected a..b");
  }
}

std::vector<std::size_t> parse_index(const std::string& text) {
  std::vector<std::size_t> idx;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      idx.push_back(std::stoul(part));
    } catch (const std::exception&) {
      throw InvalidArgument("malformed index '" + text + "', expected comma-separated 1-based coordinates");
    }
  }
  return idx;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::optional<ScopedBudget> budget;
    if (config.budget) budget.emplace(*config.budget);
    switch (config.subcommand) {
      case Subcommand::List: return cmd_list(out);
      case Subcommand::Generate: return cmd_generate(config, out);
      case Subcommand::Analyze: return cmd_analyze(config, out);
      case Subcommand::Rgb: return cmd_rgb(config, out);
      case Subcommand::Verify: return cmd_verify(config, out);
      case Subcommand::Entry: return cmd_entry(config, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Geometric fractals from Kronecker products and tensor trains", "tensorfractal"};
  app.require_subcommand(1);

  std::optional<std::size_t> budget_flag;
  app.add_option("--budget", budget_flag, "Maximum number of tensor elements (default 2^28)");

  const std::map<std::string, OutputFormat> formats{
      {"pbm", OutputFormat::Pbm}, {"ppm", OutputFormat::Ppm}, {"voxels", OutputFormat::Voxels}, {"text", OutputFormat::Text}};

  auto add_fractal_options = [&](CLI::App* sub) {
    sub->add_option("--fractal", config.fractal, "cantor, sierpinski, menger, cantor_dust, vicsek3d, multisponge");
    sub->add_option("--order", config.order, "Order d of the multisponge");
    sub->add_option("-k,--iterations", config.iterations, "Number of Kronecker-power iterations");
  };

  auto* list = app.add_subcommand("list", "List catalog fractals with their fractal dimensions");
  auto* generate = app.add_subcommand("generate", "Build the k-th iterate and write it out");
  add_fractal_options(generate);
  generate->add_option("--format", config.format, "pbm, ppm, voxels or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  generate->add_option("-o,--output", config.output, "Output file (stdout when omitted)");
  generate->add_flag("--binary", config.binary, "Binary netpbm variant (P4/P6)");
  generate->add_option("--bar-height", config.bar_height, "Row count when drawing order-1 fractals");

  auto* analyze = app.add_subcommand("analyze", "Report counts, dimensions, components and volumes");
  add_fractal_options(analyze);

  auto* rgb = app.add_subcommand("rgb", "Render an RGB fractal preset to PPM");
  rgb->add_option("--preset", config.preset, "a, b or c");
  rgb->add_option("--depth", config.depth, "Kronecker power of the defining matrices");
  rgb->add_option("-o,--output", config.output, "Output file (stdout when omitted)");
  rgb->add_flag("--binary", config.binary, "Binary PPM (P6)");

  auto* verify = app.add_subcommand("verify", "Check the multisponge count, volume and connectedness theorems");
  std::string dims = "2..8";
  verify->add_option("--multisponge-dims", dims, "Range of orders, e.g. 2..8");

  auto* entry = app.add_subcommand("entry", "Evaluate one entry of an iterate without building it");
  add_fractal_options(entry);
  std::string index;
  entry->add_option("--index", index, "Comma-separated 1-based coordinates")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*list) config.subcommand = Subcommand::List;
    if (*generate) config.subcommand = Subcommand::Generate;
    if (*analyze) config.subcommand = Subcommand::Analyze;
    if (*rgb) config.subcommand = Subcommand::Rgb;
    if (*verify) {
      config.subcommand = Subcommand::Verify;
      std::tie(config.dims_from, config.dims_to) = parse_range(dims);
    }
    if (*entry) {
      config.subcommand = Subcommand::Entry;
      config.index = parse_index(index);
    }
    if (budget_flag) {
      config.budget = budget_flag;
    } else if (const char* env = std::getenv("TENSORFRACTAL_BUDGET")) {
      try {
        config.budget = std::stoull(env);
      } catch (const std::exception&) {
        throw InvalidArgument(std::string("TENSORFRACTAL_BUDGET is not a number: '") + env + "'");
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  }
  return run(config, out, err);
}

}  // namespace tensorfractal::cli
