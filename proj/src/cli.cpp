#include "polyharm/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "polyharm/catalog.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/geometry.hpp"
#include "polyharm/operators.hpp"
#include "polyharm/phm_io.hpp"
#include "polyharm/render.hpp"

namespace phm::cli {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Lambda {
  Rational value;
  bool approximate = false;
};

// Decimal literals keep the double's value and mark downstream reports approximate.
Lambda parse_lambda_flag(const std::string& text) {
  const Scalar s = parse_scalar(text);
  if (!s.exact()) return {Rational(s.to_double()), true};
  return {s.rational(), false};
}

Rational parse_lambda(const std::string& text) { return parse_lambda_flag(text).value; }

double parse_real(const std::string& text) { return parse_scalar(text).to_double(); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

void emit_map(const PolyharmonicMap& f, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << serialize_map(f);
  } else {
    write_map_file(path, f);
  }
}

DiskGrid parse_grid(const std::string& text, double r_max) {
  DiskGrid g;
  g.r_max = r_max;
  const auto x = text.find('x');
  if (x == std::string::npos) throw ParamError("--grid expects RINGSxRAYS, got '" + text + "'");
  try {
    std::size_t used = 0;
    g.rings = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const std::string rays = text.substr(x + 1);
    g.rays = std::stoi(rays, &used);
    if (used != rays.size()) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw ParamError("--grid expects RINGSxRAYS, got '" + text + "'");
  }
  return g;
}

struct Options {
  // check
  std::string family = "hs-lambda";
  std::string lambda;
  bool normalized = false;
  std::string file;
  // binary ops
  std::string file2;
  std::string output;
  // verify
  std::string suite = "all";
  std::string grid = "32x256";
  std::string radius;
  // render
  std::string csv;
  int rings = 10;
  int rays = 24;
  int samples = 256;
  std::string rmax = "0.98";
  // extremal
  int n = 2;
  int k = 1;
  std::string kind = "a";
  double phase = 0.0;
  int p = 1;
  // catalog
  std::string name;
  int degree = 64;
  // search
  int trials = 200;
  std::uint64_t seed = 1;
};

int cmd_check(const Options& o, std::ostream& out) {
  const auto f = read_map_file(o.file);
  ClassParams params;
  if (o.family == "hs-lambda") {
    if (o.lambda.empty()) throw ParamError("--class hs-lambda requires --lambda");
    const Lambda l = parse_lambda_flag(o.lambda);
    params = ClassParams::hs_lambda(l.value, o.normalized);
    params.lambda_approximate = l.approximate;
  } else if (o.family == "hs") {
    params = ClassParams::hs(o.normalized);
  } else {
    params = ClassParams::hc(o.normalized);
  }
  const auto r = membership(f, params);
  out << to_key_value(r);
  return r.member ? kSuccess : kCheckFailed;
}

int cmd_convolve(const Options& o, std::ostream& out, bool integral) {
  const auto f = read_map_file(o.file);
  const auto g = read_map_file(o.file2);
  emit_map(integral ? integral_convolve(f, g) : convolve(f, g), o.output, out);
  return kSuccess;
}

int cmd_neighborhood(const Options& o, std::ostream& out) {
  const auto f = read_map_file(o.file);
  const auto g = read_map_file(o.file2);
  const Lambda l = parse_lambda_flag(o.lambda);
  auto r = neighborhood(f, g, l.value);
  if (l.approximate) {
    r.delta_bound = Scalar::approx(r.delta_bound.to_double());
    r.inside = r.distance.to_double() <= r.delta_bound.to_double() + kEpsStrict;
  }
  out << "distance=" << r.distance.str() << '\n'
      << "delta_bound=" << r.delta_bound.str() << '\n'
      << "inside=" << (r.inside ? "true" : "false") << '\n'
      << "exact=" << (r.distance.exact() && r.delta_bound.exact() ? "true" : "false") << '\n';
  return r.inside ? kSuccess : kCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto f = read_map_file(o.file);
  const double r_max = o.radius.empty() ? 0.995 : parse_real(o.radius);
  const DiskGrid grid = parse_grid(o.grid, r_max);

  CheckSet checks = CheckSet::none();
  const std::string& s = o.suite;
  checks.starlike = s == "starlike" || s == "all";
  checks.convex = s == "convex" || s == "all";
  checks.jacobian = s == "jacobian" || s == "all";
  checks.injective = s == "injective" || s == "all";
  const bool distortion = s == "distortion" || (s == "all" && !o.lambda.empty());
  if (s == "distortion" && o.lambda.empty()) throw ParamError("--suite distortion requires --lambda");

  bool ok = true;
  if (checks.starlike || checks.convex || checks.jacobian || checks.injective) {
    const auto rep = verify_geometry(f, grid, checks);
    std::string kv = to_key_value(rep);
    kv.erase(kv.rfind("ok="));  // overall verdict printed once below
    out << kv;
    ok = rep.ok();
  } else {
    grid.validate();
    out << "rings=" << grid.rings << "\nrays=" << grid.rays << "\nr_max=" << fmt(grid.r_max)
        << '\n';
  }
  if (distortion) {
    const auto env = distortion_envelope(f, parse_lambda(o.lambda));
    const auto d = check_distortion(f, env, grid);
    out << "distortion_branch=" << (env.branch == DistortionBranch::low ? "low" : "high") << '\n'
        << "distortion_samples=" << d.samples << '\n'
        << "distortion_violations=" << d.violations << '\n'
        << "distortion_max_excess=" << fmt(d.max_excess) << '\n';
    ok = ok && d.violations == 0;
  }
  out << "ok=" << (ok ? "true" : "false") << '\n';
  return ok ? kSuccess : kCheckFailed;
}

int cmd_render(const Options& o, std::ostream& out) {
  const auto f = read_map_file(o.file);
  RenderSpec spec;
  spec.grid.rings = o.rings;
  spec.grid.rays = o.rays;
  spec.grid.r_max = parse_real(o.rmax);
  spec.samples_per_curve = o.samples;
  write_text(o.output, render_svg(f, spec));
  if (!o.csv.empty()) write_text(o.csv, render_csv(f, spec));
  out << "svg=" << o.output << '\n';
  if (!o.csv.empty()) out << "csv=" << o.csv << '\n';
  return kSuccess;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  ExtremalSpec spec;
  spec.n = o.n;
  spec.k = o.k;
  spec.lambda = parse_lambda(o.lambda);
  spec.kind = o.kind == "a" ? ExtremalKind::analytic : ExtremalKind::antianalytic;
  spec.phase = o.phase;
  emit_map(extremal_point(spec, o.p), o.output, out);
  return kSuccess;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.name == "f1") {
    emit_map(example_f1(), o.output, out);
  } else if (o.name == "f2") {
    emit_map(example_f2(), o.output, out);
  } else if (o.name == "identity") {
    emit_map(PolyharmonicMap::identity(o.p), o.output, out);
  } else {
    emit_map(half_plane_map(o.degree), o.output, out);
  }
  return kSuccess;
}

int cmd_search(const Options& o, std::ostream& out) {
  DiskGrid grid{16, 128, 0.99, false};
  if (!o.grid.empty() && o.grid != "32x256") grid = parse_grid(o.grid, 0.99);
  const auto r = starlike_convolution_search(o.trials, o.seed, grid);
  out << "trials=" << r.trials << '\n'
      << "starlike_violations=" << r.starlike_violations << '\n'
      << "coefficient_failures=" << r.coefficient_failures << '\n'
      << "asserted=false\n";
  if (!r.first_violation.empty()) {
    std::istringstream lines(r.first_violation);
    std::string line;
    while (std::getline(lines, line)) out << "first_violation_line=" << line << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, classify, combine and verify polyharmonic univalent mappings", "phm"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "class membership report");
  check->add_option("--class", o.family, "hs-lambda | hs | hc")
      ->check(CLI::IsMember({"hs-lambda", "hs", "hc"}));
  check->add_option("--lambda", o.lambda, "lambda as num/den or decimal");
  check->add_flag("--normalized", o.normalized, "require the normalized subclass");
  check->add_option("file", o.file, ".phm map")->required();

  auto* conv = app.add_subcommand("convolve", "write the convolution F*G");
  auto* iconv = app.add_subcommand("iconvolve", "write the integral convolution");
  for (auto* sc : {conv, iconv}) {
    sc->add_option("file", o.file, "first .phm map")->required();
    sc->add_option("file2", o.file2, "second .phm map")->required();
    sc->add_option("-o,--output", o.output, "output .phm (stdout when omitted)");
  }

  auto* nbhd = app.add_subcommand("neighborhood", "distance of G from F against delta_bound(F)");
  nbhd->add_option("file", o.file, "base map F")->required();
  nbhd->add_option("file2", o.file2, "candidate map G")->required();
  nbhd->add_option("--lambda", o.lambda, "lambda in (0, 1]")->required();

  auto* verify = app.add_subcommand("verify", "grid verification of geometric properties");
  verify->add_option("file", o.file, ".phm map")->required();
  verify->add_option("--suite", o.suite, "starlike|convex|jacobian|injective|distortion|all")
      ->check(CLI::IsMember({"starlike", "convex", "jacobian", "injective", "distortion", "all"}));
  verify->add_option("--grid", o.grid, "RINGSxRAYS (default 32x256)");
  verify->add_option("--r", o.radius, "largest sampled radius (default 0.995)");
  verify->add_option("--lambda", o.lambda, "lambda for the distortion suite");

  auto* render = app.add_subcommand("render", "SVG (and CSV) of the disk image");
  render->add_option("file", o.file, ".phm map")->required();
  render->add_option("-o,--output", o.output, "output .svg")->required();
  render->add_option("--csv", o.csv, "also write polyline samples as CSV");
  render->add_option("--rings", o.rings, "number of ring curves");
  render->add_option("--rays", o.rays, "number of ray curves");
  render->add_option("--rmax", o.rmax, "outermost ring radius (default 0.98)");
  render->add_option("--samples", o.samples, "samples per curve (>= 64)");

  auto* extremal = app.add_subcommand("extremal", "write an extremal point of HS_p^0(lambda)");
  extremal->add_option("--n", o.n, "degree n >= 2")->required();
  extremal->add_option("--k", o.k, "layer 1 <= k <= p")->required();
  extremal->add_option("--lambda", o.lambda, "lambda in [0, 1]")->required();
  extremal->add_option("--kind", o.kind, "a (z^n) or b (conj z^n)")->check(CLI::IsMember({"a", "b"}));
  extremal->add_option("--phase", o.phase, "coefficient phase in radians");
  extremal->add_option("-p", o.p, "number of layers");
  extremal->add_option("-o,--output", o.output, "output .phm (stdout when omitted)");

  auto* catalog = app.add_subcommand("catalog", "write a built-in map");
  catalog->add_option("name", o.name, "f1 | f2 | identity | half-plane")
      ->required()
      ->check(CLI::IsMember({"f1", "f2", "identity", "half-plane"}));
  catalog->add_option("--degree", o.degree, "truncation degree for half-plane");
  catalog->add_option("-p", o.p, "layers for identity");
  catalog->add_option("-o,--output", o.output, "output .phm (stdout when omitted)");

  auto* search = app.add_subcommand(
      "search", "experimental: p=2 convolutions against convex-bound maps, report violations");
  search->add_option("--trials", o.trials, "number of random pairs");
  search->add_option("--seed", o.seed, "random seed");
  search->add_option("--grid", o.grid, "RINGSxRAYS (default 16x128)");

  std::vector<const char*> argv{"phm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (conv->parsed()) return cmd_convolve(o, out, false);
    if (iconv->parsed()) return cmd_convolve(o, out, true);
    if (nbhd->parsed()) return cmd_neighborhood(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (extremal->parsed()) return cmd_extremal(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
    if (search->parsed()) return cmd_search(o, out);
  } catch (const NotMember& e) {
    err << "NotMember: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace phm::cli
