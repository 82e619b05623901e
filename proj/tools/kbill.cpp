// Command-line front end: every subcommand is a thin adapter over the library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kbill/app/config_file.hpp"
#include "kbill/app/csv.hpp"
#include "kbill/app/svg.hpp"
#include "kbill/error.hpp"
#include "kbill/geometry.hpp"
#include "kbill/portrait.hpp"
#include "kbill/stability.hpp"

namespace {

using namespace kbill;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

// Physical flags shared by all subcommands; values stay strings until they
// are merged over the config file and validated in one place.
struct PhysicsFlags {
  std::string config_path;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App* sub, bool with_hI = true) {
    sub->add_option("--config", config_path, "flat key = value config file");
    const std::vector<std::pair<std::string, std::string>> flags = {
        {"mode", "reflective | refractive"},
        {"b", "semi-minor axis (semi-major is 1)"},
        {"x0", "ellipse centre x"},
        {"y0", "ellipse centre y"},
        {"mu", "Kepler mass parameter"},
        {"hI", "inner energy"},
        {"hE", "outer energy"},
        {"omega", "Hooke frequency"},
        {"root_tol", "boundary root tolerance"},
        {"fd_step", "finite-difference step"},
        {"angmom_tol", "radial-arc angular momentum threshold"},
        {"graze_tol", "grazing threshold"},
        {"max_iter", "iteration cap"},
        {"internal_reflection", "reflect supercritical inner arcs (true/false)"}};
    for (const auto& [key, help] : flags) {
      if (key == "hI" && !with_hI) continue;
      options[key] = sub->add_option("--" + key, values[key], help);
    }
  }

  BilliardConfig build() const {
    app::Settings settings;
    if (!config_path.empty()) settings = app::read_settings(config_path);
    for (const auto& [key, opt] : options)
      if (opt->count() > 0) settings[key] = values.at(key);
    return app::build_config(settings);
  }
};

double parse_xi_bar(const std::string& text) {
  if (text == "pi") return kPi;
  if (text == "0") return 0.0;
  throw Error(ErrorKind::unsupported_configuration, "--xi must be 0 or pi");
}

std::unique_ptr<std::ostream> open_output(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;
  auto f = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*f) throw std::runtime_error("cannot write '" + path + "'");
  return f;
}

void print_kv(std::ostream& out, const char* key, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  out << key << " = " << buf << '\n';
}

int run_admissibility(const PhysicsFlags& flags) {
  const BilliardConfig cfg = flags.build();
  try {
    const auto ccs = central_configurations(cfg);
    std::cout << "central_configurations = " << ccs.size() << '\n';
    for (std::size_t i = 0; i < ccs.size(); ++i) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "  xi = %.10f  degenerate = %s", ccs[i].xi, ccs[i].degenerate ? "yes" : "no");
      std::cout << buf;
      if (ccs[i].antipodal_partner) std::cout << "  antipodal_to = " << *ccs[i].antipodal_partner;
      std::cout << '\n';
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::degenerate_family) throw;
    std::cout << "central_configurations = all (degenerate family)\n";
  }
  const Admissibility verdict = is_admissible(cfg);
  std::cout << (verdict.admissible ? "ADMISSIBLE (" : "NOT ADMISSIBLE (") << verdict.reason << ")\n";
  return kExitOk;
}

int run_orbit(const PhysicsFlags& flags, double xi, double alpha, int n, const std::string& out_path) {
  const BilliardConfig cfg = flags.build();
  const OrbitRecord rec = iterate(map_for(cfg), {xi, alpha}, n, cfg);
  auto file = open_output(out_path);
  app::write_csv(std::vector<OrbitRecord>{rec}, file ? *file : std::cout);
  return kExitOk;
}

int run_portrait(const PhysicsFlags& flags, const PortraitSpec& spec, const std::string& out_path) {
  const BilliardConfig cfg = flags.build();
  const PortraitDataset data = generate(spec, cfg);
  auto file = open_output(out_path);
  app::write_csv(data, file ? *file : std::cout);
  return kExitOk;
}

int run_stability(const PhysicsFlags& flags, const std::string& xi_text, bool numeric) {
  const BilliardConfig cfg = flags.build();
  const double xi_bar = parse_xi_bar(xi_text);
  const StabilityReport rep = analytic_DF(xi_bar, cfg);
  print_kv(std::cout, "xi_bar", rep.xi_bar);
  print_kv(std::cout, "S12", rep.S12);
  print_kv(std::cout, "epsilon", rep.epsilon);
  print_kv(std::cout, "DF11", rep.DF(0, 0));
  print_kv(std::cout, "DF12", rep.DF(0, 1));
  print_kv(std::cout, "DF21", rep.DF(1, 0));
  print_kv(std::cout, "DF22", rep.DF(1, 1));
  print_kv(std::cout, "delta", rep.delta);
  std::cout << "classification = " << to_string(rep.classification) << '\n';
  for (int i = 0; i < 2; ++i) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "eigenvalue%d = %.12g %+.12gi", i + 1, rep.eigenvalues[i].real(),
                  rep.eigenvalues[i].imag());
    std::cout << buf << '\n';
  }
  if (xi_text == "pi") print_kv(std::cout, "C_pi", c_pi(cfg));
  if (numeric) {
    const Mat2 J = numeric_DF(MapKind::F, {xi_bar, 0.0}, cfg);
    print_kv(std::cout, "numeric_DF11", J(0, 0));
    print_kv(std::cout, "numeric_DF12", J(0, 1));
    print_kv(std::cout, "numeric_DF21", J(1, 0));
    print_kv(std::cout, "numeric_DF22", J(1, 1));
  }
  return kExitOk;
}

int run_bifurcation(const PhysicsFlags& flags, const std::vector<double>& scan, const std::string& xi_text) {
  const BilliardConfig cfg = flags.build();
  std::optional<double> closed;
  const bool reflective = cfg.mode == Mode::reflective;
  if (reflective) closed = bifurcation_threshold_reflective(cfg);
  if (scan.empty()) {
    if (!reflective)
      throw Error(ErrorKind::unsupported_configuration, "refractive mode needs --scan lo,hi");
    if (closed) {
      std::printf("%.6f\n", *closed);
    } else {
      std::printf("none\n");
    }
    return kExitOk;
  }
  if (scan.size() != 2) throw Error(ErrorKind::invalid_configuration, "--scan expects lo,hi");
  const double h = bifurcation_scan(map_for(cfg), {parse_xi_bar(xi_text), 0.0}, scan[0], scan[1], cfg);
  if (reflective) {
    if (closed)
      std::printf("closed_form = %.6f\n", *closed);
    else
      std::printf("closed_form = none\n");
  }
  std::printf("scan = %.6f\n", h);
  return kExitOk;
}

int run_brake(const PhysicsFlags& flags, const std::vector<double>& energies, double delta) {
  BilliardConfig cfg = flags.build();
  std::printf("hI,xi_brake,offset_from_half_pi\n");
  for (double h : energies) {
    cfg.h_inner = h;
    validate(cfg);
    const double xi = find_brake_orbit(cfg, delta);
    std::printf("%.10g,%.4f,%.4f\n", h, xi, xi - 0.5 * kPi);
  }
  return kExitOk;
}

int run_render(const std::string& in_path, const std::string& out_path, const app::SvgStyle& style) {
  const auto rows = app::read_csv(std::filesystem::path(in_path));
  auto file = open_output(out_path);
  (file ? *file : std::cout) << app::render_svg(rows, style);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Kepler billiards: return maps, stability and phase portraits"};
  cli.require_subcommand(1);

  PhysicsFlags adm_flags, orbit_flags, portrait_flags, stab_flags, bif_flags, brake_flags;

  auto* adm = cli.add_subcommand("admissibility", "central configurations and the admissibility verdict");
  adm_flags.attach(adm);

  double orbit_xi = 0.0, orbit_alpha = 0.0;
  int orbit_n = 1000;
  std::string orbit_out;
  auto* orbit = cli.add_subcommand("orbit", "iterate one seed and write CSV");
  orbit_flags.attach(orbit);
  orbit->add_option("--xi", orbit_xi, "seed boundary parameter")->required();
  orbit->add_option("--alpha", orbit_alpha, "seed angle")->required();
  orbit->add_option("--n", orbit_n, "iterations")->check(CLI::PositiveNumber);
  orbit->add_option("--out", orbit_out, "CSV output path (default stdout)");

  PortraitSpec spec;
  std::string portrait_out;
  auto* portrait = cli.add_subcommand("portrait", "grid of seeds -> CSV dataset");
  portrait_flags.attach(portrait);
  portrait->add_option("--xi-min", spec.xi_min, "seed window, lower xi")->capture_default_str();
  portrait->add_option("--xi-max", spec.xi_max, "seed window, upper xi")->capture_default_str();
  portrait->add_option("--alpha-min", spec.alpha_min, "seed window, lower alpha")->capture_default_str();
  portrait->add_option("--alpha-max", spec.alpha_max, "seed window, upper alpha")->capture_default_str();
  portrait->add_option("--n-xi", spec.n_xi, "grid columns")->capture_default_str();
  portrait->add_option("--n-alpha", spec.n_alpha, "grid rows")->capture_default_str();
  portrait->add_option("--iters", spec.iterations, "iterations per orbit")->capture_default_str();
  portrait->add_option("--threads", spec.threads, "worker threads (0: all cores)")->capture_default_str();
  portrait->add_option("--out", portrait_out, "CSV output path (default stdout)");

  std::string stab_xi = "pi";
  bool stab_numeric = false;
  auto* stab = cli.add_subcommand("stability", "closed-form linear stability of (0,0) or (pi,0)");
  stab_flags.attach(stab);
  stab->add_option("--xi", stab_xi, "0 or pi");
  stab->add_flag("--numeric", stab_numeric, "also print the finite-difference Jacobian");

  std::vector<double> scan;
  std::string bif_xi = "pi";
  auto* bif = cli.add_subcommand("bifurcation", "closed-form threshold and/or discriminant scan over hI");
  bif_flags.attach(bif);
  bif->add_option("--scan", scan, "hI range lo,hi")->delimiter(',');
  bif->add_option("--xi", bif_xi, "fixed point (0 or pi)");

  std::vector<double> energies;
  double delta = 0.001;
  auto* brake = cli.add_subcommand("brake", "brake-orbit points for a list of inner energies");
  brake_flags.attach(brake, /*with_hI=*/false);
  brake->add_option("--hI", energies, "comma-separated inner energies")->delimiter(',')->required();
  brake->add_option("--delta", delta, "bracket margin (pi/2 + delta, pi - delta)");

  std::string render_in, render_out;
  app::SvgStyle style;
  auto* render = cli.add_subcommand("render", "CSV dataset -> SVG scatter plot");
  render->add_option("--in", render_in, "CSV input")->required();
  render->add_option("--out", render_out, "SVG output path (default stdout)");
  render->add_option("--width", style.width, "image width in px")->capture_default_str();
  render->add_option("--height", style.height, "image height in px")->capture_default_str();
  render->add_option("--radius", style.marker_radius, "marker radius in px")->capture_default_str();

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << cli.help();
    return kExitInvalid;
  }

  try {
    if (*adm) return run_admissibility(adm_flags);
    if (*orbit) return run_orbit(orbit_flags, orbit_xi, orbit_alpha, orbit_n, orbit_out);
    if (*portrait) return run_portrait(portrait_flags, spec, portrait_out);
    if (*stab) return run_stability(stab_flags, stab_xi, stab_numeric);
    if (*bif) return run_bifurcation(bif_flags, scan, bif_xi);
    if (*brake) return run_brake(brake_flags, energies, delta);
    if (*render) return run_render(render_in, render_out, style);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool invalid = e.kind() == ErrorKind::invalid_configuration ||
                         e.kind() == ErrorKind::unsupported_configuration;
    return invalid ? kExitInvalid : kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitInvalid;
}
