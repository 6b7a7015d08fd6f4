#include "swanson/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <ostream>

#include "swanson/cli/plot.hpp"
#include "swanson/cli/serialize.hpp"
#include "swanson/cli/verify.hpp"
#include "swanson/errors.hpp"
#include "swanson/oscillator.hpp"
#include "swanson/physics.hpp"

namespace swanson::cli {
namespace {

enum class Format { json, csv };

// Raw flag values; unset options fall back to per-subcommand defaults.
struct RawFlags {
  double gamma = 0.0;
  std::optional<int> dim;
  std::optional<int> modes;
  std::optional<int> count;
  std::optional<std::string> re;
  std::optional<std::string> im;
  std::optional<int> resolution;
  std::optional<int> theta_samples;
  std::optional<std::string> coeffs;
  std::optional<double> t_max;
  std::optional<double> dt;
  unsigned threads = 0;
  std::string out;
  std::optional<std::string> svg;
};

[[noreturn]] void reject(const std::string& flag, const std::string& why) {
  throw ContractViolation(flag + ": " + why);
}

double parse_double(const std::string& text, const std::string& flag) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(x)) {
    reject(flag, "'" + text + "' is not a finite number");
  }
  return x;
}

Interval parse_interval(const std::string& text, const std::string& flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) reject(flag, "expected a:b, got '" + text + "'");
  Interval iv{parse_double(text.substr(0, colon), flag), parse_double(text.substr(colon + 1), flag)};
  if (!(iv.lo < iv.hi)) reject(flag, "interval must satisfy a < b");
  return iv;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> v;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    v.push_back(parse_double(text.substr(start, comma - start), flag));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

Format output_format(const std::string& path) {
  const auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".json") return Format::json;
  if (ext == ".csv") return Format::csv;
  reject("--out", "extension must be .json or .csv, got '" + path + "'");
}

void add_common(CLI::App& sub, RawFlags& f) {
  sub.add_option("--gamma", f.gamma, "non-Hermiticity parameter, |gamma| < 1")->required();
  sub.add_option("--out", f.out, "output path (.json or .csv)")->required();
}

std::unique_ptr<CLI::App> make_parser(RawFlags& f) {
  auto app = std::make_unique<CLI::App>("Swanson oscillator analyses", "swanson");
  app->require_subcommand(1);

  auto* spectrum = app->add_subcommand("spectrum", "lowest converged eigenvalues");
  add_common(*spectrum, f);
  spectrum->add_option("--dim", f.dim, "initial truncation dimension (default 200)");
  spectrum->add_option("--count", f.count, "number of eigenvalues (default 10)");

  auto* numrange = app->add_subcommand("numrange", "numerical range boundary");
  add_common(*numrange, f);
  numrange->add_option("--dim", f.dim, "truncation dimension (default 400)");
  numrange->add_option("--theta-samples", f.theta_samples, "support directions; even counts round up to odd (default 101)");
  numrange->add_option("--count", f.count, "eigenvalues overlaid (default 10)");
  numrange->add_option("--svg", f.svg, "SVG plot path");

  auto* pseudo = app->add_subcommand("pseudospectrum", "smallest singular value of z - H on a grid");
  add_common(*pseudo, f);
  pseudo->add_option("--dim", f.dim, "truncation dimension (default 300)");
  pseudo->add_option("--re", f.re, "real range a:b (default -2:14)");
  pseudo->add_option("--im", f.im, "imaginary range a:b (default -7:7)");
  pseudo->add_option("--resolution", f.resolution, "nodes per axis (default 200)");
  pseudo->add_option("--threads", f.threads, "worker threads, 0 = hardware (default 0)");
  pseudo->add_option("--svg", f.svg, "SVG plot path");

  auto* compress = app->add_subcommand("compress", "finite-mode compression");
  add_common(*compress, f);
  compress->add_option("--modes", f.modes, "number of modes (default 8)");

  auto* evolve = app->add_subcommand("evolve", "time evolution of mode coefficients");
  add_common(*evolve, f);
  evolve->add_option("--modes", f.modes, "number of modes (default 8)");
  evolve->add_option("--coeffs", f.coeffs, "initial coefficients c0,c1,... (default (1,0,1,0,...)/sqrt 2)");
  evolve->add_option("--t-max", f.t_max, "final time (default 10)");
  evolve->add_option("--dt", f.dt, "time step (default 0.01)");

  auto* verify = app->add_subcommand("verify", "cross-check derived and printed formulas");
  add_common(*verify, f);
  return app;
}

RunConfig resolve(const CLI::App& app, const RawFlags& f) {
  RunConfig c;
  const auto subs = app.get_subcommands();
  const std::string name = subs.front()->get_name();
  if (name == "spectrum") c.subcommand = Subcommand::spectrum;
  else if (name == "numrange") c.subcommand = Subcommand::numrange;
  else if (name == "pseudospectrum") c.subcommand = Subcommand::pseudospectrum;
  else if (name == "compress") c.subcommand = Subcommand::compress;
  else if (name == "evolve") c.subcommand = Subcommand::evolve;
  else c.subcommand = Subcommand::verify;

  c.gamma = f.gamma;
  if (!std::isfinite(c.gamma) || !(std::abs(c.gamma) < 1.0)) reject("--gamma", "must satisfy |gamma| < 1");
  c.out = f.out;
  c.svg = f.svg;
  c.threads = f.threads;
  const Format format = output_format(c.out);

  auto at_least = [](const char* flag, int value, int lo) {
    if (value < lo) reject(flag, "must be >= " + std::to_string(lo));
    return value;
  };

  switch (c.subcommand) {
    case Subcommand::spectrum:
      c.dim = at_least("--dim", f.dim.value_or(200), 2);
      c.count = at_least("--count", f.count.value_or(10), 1);
      if (c.count > c.dim) reject("--count", "must not exceed --dim");
      break;
    case Subcommand::numrange:
      c.dim = at_least("--dim", f.dim.value_or(400), 2);
      c.theta_samples = at_least("--theta-samples", f.theta_samples.value_or(101), 3);
      c.count = at_least("--count", f.count.value_or(10), 1);
      break;
    case Subcommand::pseudospectrum:
      c.dim = at_least("--dim", f.dim.value_or(300), 2);
      c.resolution = at_least("--resolution", f.resolution.value_or(200), 2);
      if (f.re) c.region.re = parse_interval(*f.re, "--re");
      if (f.im) c.region.im = parse_interval(*f.im, "--im");
      break;
    case Subcommand::compress:
      c.modes = at_least("--modes", f.modes.value_or(8), 2);
      if (format != Format::json) reject("--out", "compress writes JSON only");
      break;
    case Subcommand::evolve:
      c.modes = at_least("--modes", f.modes.value_or(8), 2);
      c.t_max = f.t_max.value_or(10.0);
      c.dt = f.dt.value_or(0.01);
      if (!std::isfinite(c.t_max) || c.t_max < 0.0) reject("--t-max", "must be finite and >= 0");
      if (!std::isfinite(c.dt) || !(c.dt > 0.0)) reject("--dt", "must be > 0");
      if (f.coeffs) {
        c.coeffs = parse_list(*f.coeffs, "--coeffs");
        if (static_cast<int>(c.coeffs.size()) != c.modes) {
          reject("--coeffs", "expected " + std::to_string(c.modes) + " values, got " +
                                 std::to_string(c.coeffs.size()));
        }
        if (std::all_of(c.coeffs.begin(), c.coeffs.end(), [](double x) { return x == 0.0; })) {
          reject("--coeffs", "initial state must be nonzero");
        }
      } else if (c.modes < 3) {
        reject("--modes", "the default superposition needs at least 3 modes");
      }
      break;
    case Subcommand::verify:
      break;
  }
  return c;
}

json config_json(const RunConfig& c) {
  json j{{"subcommand", to_string(c.subcommand)}, {"gamma", c.gamma}};
  switch (c.subcommand) {
    case Subcommand::spectrum:
      j["dim"] = c.dim;
      j["count"] = c.count;
      break;
    case Subcommand::numrange:
      j["dim"] = c.dim;
      j["theta_samples"] = c.theta_samples;
      j["count"] = c.count;
      break;
    case Subcommand::pseudospectrum:
      j["dim"] = c.dim;
      j["re"] = {c.region.re.lo, c.region.re.hi};
      j["im"] = {c.region.im.lo, c.region.im.hi};
      j["resolution"] = c.resolution;
      break;
    case Subcommand::compress:
      j["modes"] = c.modes;
      break;
    case Subcommand::evolve:
      j["modes"] = c.modes;
      j["t_max"] = c.t_max;
      j["dt"] = c.dt;
      break;
    case Subcommand::verify:
      break;
  }
  return j;
}

template <class T>
void write_result(const RunConfig& c, const T& data, const std::string& csv) {
  if (output_format(c.out) == Format::json) {
    write_atomic(c.out, dump(envelope(config_json(c), json(data))));
  } else {
    write_atomic(c.out, csv);
  }
}

std::vector<Complex> eigen_dots(double gamma, int count) {
  std::vector<Complex> dots;
  for (const auto& e : converged_spectrum(ModelConfig(gamma, std::max(count, 100)), count)) dots.push_back(e.value);
  return dots;
}

// Beyond |theta| = arctan(1/|gamma|) the support function of H is -infinity and
// the truncated values grow with the dimension; those corners are not drawn.
std::vector<BoundaryPoint> converged_arc(const NumericalRangeBoundary& b) {
  constexpr double kPlotTolerance = 1e-6;
  std::vector<BoundaryPoint> arc;
  for (std::size_t k = 0; k < b.boundary_points.size(); ++k) {
    if (b.support_estimates[k] <= kPlotTolerance && b.support_estimates[k + 1] <= kPlotTolerance) {
      arc.push_back(b.boundary_points[k]);
    }
  }
  return arc;
}

int run_spectrum(const RunConfig& c) {
  SpectrumResult r;
  r.eigenvalues = converged_spectrum(ModelConfig(c.gamma, c.dim), c.count);
  r.closed_form = analytic_spectrum(c.gamma, c.count - 1);
  write_result(c, r, spectrum_csv(r));
  return kExitOk;
}

int run_numrange(const RunConfig& c) {
  NumrangeResult r;
  const ModelConfig cfg(c.gamma, c.dim);
  r.boundary = numerical_range_boundary(cfg, c.theta_samples);
  r.tangency = tangency_points(r.boundary);
  r.eigenvalues = eigen_dots(c.gamma, c.count);
  r.hyperbola = hyperbola_reference(c.gamma, r.boundary.thetas, c.dim);
  // Render before writing so that a plotting error leaves no partial output.
  std::string svg;
  if (c.svg) svg = render_svg(PlotLayers{std::nullopt, converged_arc(r.boundary), r.eigenvalues});
  write_result(c, r, numrange_csv(r));
  if (c.svg) write_atomic(*c.svg, svg);
  return kExitOk;
}

int run_pseudospectrum(const RunConfig& c) {
  const PseudospectrumGrid grid = pseudospectrum(ModelConfig(c.gamma, c.dim), c.region, c.resolution, c.threads);
  std::string svg;
  if (c.svg) {
    std::vector<Complex> dots;
    for (const Complex& z : eigen_dots(c.gamma, 20)) {
      if (z.real() >= c.region.re.lo && z.real() <= c.region.re.hi && z.imag() >= c.region.im.lo &&
          z.imag() <= c.region.im.hi) {
        dots.push_back(z);
      }
    }
    svg = render_svg(PlotLayers{grid, {}, dots});
  }
  write_result(c, grid, pseudospectrum_csv(grid));
  if (c.svg) write_atomic(*c.svg, svg);
  return kExitOk;
}

int run_compress(const RunConfig& c) {
  const CompressedModel m = compress(c.gamma, c.modes);
  CompressResult r;
  r.n_modes = m.n_modes;
  r.lambdas = m.lambdas;
  r.q_inv = m.gram.q_inv.entries();
  r.q = m.gram.q.entries();
  r.h_hat = m.h_hat.entries();
  r.pseudo_hermiticity_residual = max_abs(r.q * r.h_hat - r.h_hat.adjoint() * r.q);
  write_atomic(c.out, dump(envelope(config_json(c), json(r))));
  return kExitOk;
}

int run_evolve(const RunConfig& c) {
  const CompressedModel m = compress(c.gamma, c.modes);
  CVector c0 = CVector::Zero(c.modes);
  if (c.coeffs.empty()) {
    c0(0) = c0(2) = 1.0 / std::sqrt(2.0);
  } else {
    for (int k = 0; k < c.modes; ++k) c0(k) = c.coeffs[static_cast<std::size_t>(k)];
  }
  EvolveResult r;
  r.n_modes = c.modes;
  r.c0.assign(c0.data(), c0.data() + c0.size());
  r.trace = evolve(m, c0, uniform_time_grid(c.t_max, c.dt));
  write_result(c, r, evolve_csv(r));
  return kExitOk;
}

int run_verify(const RunConfig& c) {
  const VerificationReport report = run_verification(c.gamma);
  write_result(c, report, verification_csv(report));
  return report.has_failures() ? kExitVerifyFail : kExitOk;
}

}  // namespace

const char* to_string(Subcommand s) noexcept {
  switch (s) {
    case Subcommand::spectrum: return "spectrum";
    case Subcommand::numrange: return "numrange";
    case Subcommand::pseudospectrum: return "pseudospectrum";
    case Subcommand::compress: return "compress";
    case Subcommand::evolve: return "evolve";
    case Subcommand::verify: return "verify";
  }
  return "unknown";
}

RunConfig parse_run_config(const std::vector<std::string>& args) {
  RawFlags flags;
  auto app = make_parser(flags);
  std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 consumes from the back
  try {
    app->parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ContractViolation(e.what());
  }
  return resolve(*app, flags);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RawFlags flags;
  auto app = make_parser(flags);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app->parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app->exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app->exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    const RunConfig c = resolve(*app, flags);
    switch (c.subcommand) {
      case Subcommand::spectrum: return run_spectrum(c);
      case Subcommand::numrange: return run_numrange(c);
      case Subcommand::pseudospectrum: return run_pseudospectrum(c);
      case Subcommand::compress: return run_compress(c);
      case Subcommand::evolve: return run_evolve(c);
      case Subcommand::verify: return run_verify(c);
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace swanson::cli
