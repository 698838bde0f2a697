#include "unruh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>

#include "unruh/detector.hpp"
#include "unruh/errors.hpp"
#include "unruh/field_correlators.hpp"
#include "unruh/spectra.hpp"
#include "unruh/units.hpp"

namespace unruh::cli {

namespace {

std::string num(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

class CsvWriter {
public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  template <typename... Fields>
  void row(const Fields&... fields) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(fields), first = false), ...);
    out_ << '\n';
  }

private:
  static std::string cell(double v) { return num(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }

  std::ostream& out_;
};

struct Common {
  std::string units = "natural";
  std::string output;
};

void add_common(CLI::App* sub, Common& common, const std::string& default_units) {
  common.units = default_units;
  sub->add_option("--units", common.units, "Unit system")
      ->check(CLI::IsMember({"si", "natural"}))
      ->capture_default_str();
  sub->add_option("--output", common.output, "Write CSV to this file instead of stdout");
}

PhysicalConstants constants_of(const Common& common) {
  return constants_for(common.units == "si" ? UnitSystem::si : UnitSystem::natural);
}

Statistics parse_statistics(const std::string& s) {
  return s == "fd" ? Statistics::fermi_dirac : Statistics::bose_einstein;
}

Direction parse_direction(int d) { return d > 0 ? Direction::plus_z : Direction::minus_z; }

struct GridFlags {
  double x_min = -8.0;
  double x_max = 8.0;
  int n_modes = 4096;
  double volume = 1.0;
  double window_width = 0.5;

  void add(CLI::App* sub) {
    sub->add_option("--x-min", x_min, "Lower edge of log(omega c/a)")->capture_default_str();
    sub->add_option("--x-max", x_max, "Upper edge of log(omega c/a)")->capture_default_str();
    sub->add_option("--n-modes", n_modes, "Modes per direction")->capture_default_str();
    sub->add_option("--volume", volume, "Box length V")->capture_default_str();
    sub->add_option("--window-width", window_width, "Resolution window, units of a/c")
        ->capture_default_str();
  }

  ModeGrid grid(const AcceleratedWorldline& w) const {
    auto g = ModeGrid::from_log_range(x_min, x_max, n_modes, volume, w);
    g.window_width = window_width;
    g.validate();
    return g;
  }
};

struct RegFlags {
  RegularizationConfig reg;

  void add(CLI::App* sub) {
    sub->add_option("--s-schedule", reg.s_schedule, "Damping values, units of a/c")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--tau-window", reg.tau_window, "Quadrature half-width, units of c/a")
        ->capture_default_str();
    sub->add_option("--quad-rel-tol", reg.quad_rel_tol)->capture_default_str();
    sub->add_option("--extrapolation-order", reg.extrapolation_order)->capture_default_str();
  }
};

// Each subcommand fills a closure that writes its table once parsing succeeded.
using Action = std::function<void(std::ostream&)>;

void setup_temperature(CLI::App& app, Common& common, Action& action) {
  auto* sub = app.add_subcommand("temperature", "Unruh temperature at the surface of bodies");
  sub->footer("Columns: body,mass_kg,radius_m,accel_m_s2,temperature_K\n"
              "Natural units require --accel.");
  add_common(sub, common, "si");
  auto accel = std::make_shared<double>(0.0);
  auto* accel_opt = sub->add_option("--accel", *accel, "Tabulate a single acceleration instead");
  sub->callback([&common, &action, accel, accel_opt] {
    const auto consts = constants_of(common);
    if (common.units == "natural" && accel_opt->count() == 0) {
      throw CLI::ValidationError("--units natural requires --accel");
    }
    action = [consts, accel, has_accel = accel_opt->count() > 0](std::ostream& out) {
      CsvWriter csv(out);
      csv.row("body", "mass_kg", "radius_m", "accel_m_s2", "temperature_K");
      if (has_accel) {
        csv.row("custom", "", "", *accel, unruh_temperature(*accel, consts));
        return;
      }
      for (const auto& r : exercise_table(consts)) {
        csv.row(r.body, r.mass_kg, r.radius_m, r.accel_m_s2, r.temperature_K);
      }
    };
  });
}

void setup_doppler(CLI::App& app, Common& common, Action& action) {
  auto* sub = app.add_subcommand("doppler", "Worldline and Doppler-shifted phase along a tau grid");
  sub->footer("Columns: tau,velocity,lab_time,position,omega_prime,phase");
  add_common(sub, common, "natural");
  struct Flags {
    double accel = 1.0, omega_k = 1.0, tau_min = -3.0, tau_max = 3.0;
    int steps = 13, direction = -1;
  };
  auto f = std::make_shared<Flags>();
  sub->add_option("--accel", f->accel, "Proper acceleration")->capture_default_str();
  sub->add_option("--omega-k", f->omega_k, "Mode frequency")->capture_default_str();
  sub->add_option("--direction", f->direction, "Propagation sign")
      ->check(CLI::IsMember({-1, 1}))
      ->capture_default_str();
  sub->add_option("--tau-min", f->tau_min, "First a tau / c")->capture_default_str();
  sub->add_option("--tau-max", f->tau_max, "Last a tau / c")->capture_default_str();
  sub->add_option("--steps", f->steps, "Number of rows")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  sub->callback([&common, &action, f] {
    const AcceleratedWorldline w(f->accel, constants_of(common));
    const PlaneWaveMode mode(f->omega_k, parse_direction(f->direction));
    action = [w, mode, f](std::ostream& out) {
      CsvWriter csv(out);
      csv.row("tau", "velocity", "lab_time", "position", "omega_prime", "phase");
      for (int i = 0; i < f->steps; ++i) {
        const double u = f->tau_min + (f->tau_max - f->tau_min) * i / (f->steps - 1);
        const double tau = u * w.time_scale();
        const auto p = worldline_point(tau, w);
        csv.row(tau, lab_velocity_of_proper_time(tau, w), p.t, p.z,
                doppler_frequency(tau, mode, w), doppler_phase(tau, mode, w));
      }
    };
  });
}

void setup_spectrum(CLI::App& app, Common& common, Action& action) {
  auto* sub = app.add_subcommand("spectrum", "Analytic vs numerical accelerated-observer spectrum");
  sub->footer("Columns: omega,statistics,analytic,numeric,rel_err");
  add_common(sub, common, "natural");
  struct Flags {
    std::string statistics = "be";
    std::vector<double> omega_c_over_a{1.0};
    double omega_k_c_over_a = 1.0, accel = 1.0;
    int direction = -1;
    RegFlags reg;
  };
  auto f = std::make_shared<Flags>();
  sub->add_option("--statistics", f->statistics)
      ->check(CLI::IsMember({"be", "fd"}))
      ->capture_default_str();
  sub->add_option("--omega-c-over-a", f->omega_c_over_a, "Rindler frequencies, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--omega-k-c-over-a", f->omega_k_c_over_a, "Minkowski mode frequency")
      ->capture_default_str();
  sub->add_option("--direction", f->direction, "Propagation sign")
      ->check(CLI::IsMember({-1, 1}))
      ->capture_default_str();
  sub->add_option("--accel", f->accel, "Proper acceleration")->capture_default_str();
  f->reg.add(sub);
  sub->callback([&common, &action, f] {
    const AcceleratedWorldline w(f->accel, constants_of(common));
    const double rate = 1.0 / w.time_scale();
    const PlaneWaveMode mode(f->omega_k_c_over_a * rate, parse_direction(f->direction));
    f->reg.reg.validate();
    std::vector<double> omegas;
    for (double x : f->omega_c_over_a) omegas.push_back(x * rate);
    const auto stats = parse_statistics(f->statistics);
    action = [w, mode, omegas, stats, f](std::ostream& out) {
      const auto rows = compare_spectra(omegas, mode, w, stats, f->reg.reg);
      CsvWriter csv(out);
      csv.row("omega", "statistics", "analytic", "numeric", "rel_err");
      for (const auto& r : rows) csv.row(r.omega, to_string(r.stats), r.analytic, r.numeric, r.rel_err);
    };
  });
}

void setup_correlator(CLI::App& app, Common& common, Action& action) {
  auto* sub = app.add_subcommand("correlator", "Thermal vs accelerated-vacuum correlation density");
  sub->footer("Columns: omega,thermal,accel_closed,accel_modesum,rel_err");
  add_common(sub, common, "natural");
  struct Flags {
    std::string statistics = "be";
    std::vector<double> omega_c_over_a{0.5, 1.0, 2.0};
    double accel = 1.0;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  sub->add_option("--statistics", f->statistics)
      ->check(CLI::IsMember({"be", "fd"}))
      ->capture_default_str();
  sub->add_option("--omega-c-over-a", f->omega_c_over_a)->delimiter(',')->capture_default_str();
  sub->add_option("--accel", f->accel, "Proper acceleration")->capture_default_str();
  f->grid.add(sub);
  sub->callback([&common, &action, f] {
    const AcceleratedWorldline w(f->accel, constants_of(common));
    const auto grid = f->grid.grid(w);
    const auto stats = parse_statistics(f->statistics);
    action = [w, grid, stats, f](std::ostream& out) {
      const double temperature = unruh_temperature(w.accel(), w.constants());
      CsvWriter csv(out);
      csv.row("omega", "thermal", "accel_closed", "accel_modesum", "rel_err");
      for (double x : f->omega_c_over_a) {
        const double omega = x / w.time_scale();
        const double closed = accelerated_vacuum_density(omega, w, stats);
        const double modes = accelerated_density_from_modes(omega, w, grid, stats);
        csv.row(omega, thermal_density(omega, temperature, w.constants(), stats), closed, modes,
                std::abs(modes - closed) / closed);
      }
    };
  });
}

void setup_delta_kernel(CLI::App& app, Common& common, Action& action) {
  auto* sub = app.add_subcommand("delta-kernel", "Finite mode-sum kernel versus Omega - Omega'");
  sub->footer("Columns: delta_omega,kernel_re,kernel_im");
  add_common(sub, common, "natural");
  struct Flags {
    double delta_min = -5.0, delta_max = 5.0, accel = 1.0;
    int steps = 101;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  sub->add_option("--delta-min", f->delta_min, "Units of a/c")->capture_default_str();
  sub->add_option("--delta-max", f->delta_max, "Units of a/c")->capture_default_str();
  sub->add_option("--steps", f->steps)->check(CLI::Range(2, 1000000))->capture_default_str();
  sub->add_option("--accel", f->accel, "Proper acceleration")->capture_default_str();
  f->grid.add(sub);
  sub->callback([&common, &action, f] {
    const AcceleratedWorldline w(f->accel, constants_of(common));
    const auto grid = f->grid.grid(w);
    action = [w, grid, f](std::ostream& out) {
      CsvWriter csv(out);
      csv.row("delta_omega", "kernel_re", "kernel_im");
      for (int i = 0; i < f->steps; ++i) {
        const double x = f->delta_min + (f->delta_max - f->delta_min) * i / (f->steps - 1);
        const double delta = x / w.time_scale();
        const auto k = delta_kernel(delta, w, grid);
        csv.row(delta, k.real(), k.imag());
      }
    };
  });
}

void setup_detector(CLI::App& app, Common& common, Action& action) {
  auto* sub = app.add_subcommand("detector", "Oscillator steady-state energy in units of hbar omega0");
  sub->footer("Columns: omega0,gamma,source,energy,planck_ref,rel_err\n"
              "gamma = 0 rows hold the narrowband (gamma -> 0) extrapolation.");
  add_common(sub, common, "natural");
  struct Flags {
    std::string source = "both";
    std::vector<double> x{1.0, 2.0 * std::numbers::pi};
    std::vector<double> gamma{1e-2, 1e-3, 1e-4};
    double omega0 = 1.0;
  };
  auto f = std::make_shared<Flags>();
  sub->add_option("--source", f->source)
      ->check(CLI::IsMember({"thermal", "accelerated", "both"}))
      ->capture_default_str();
  sub->add_option("--hbar-omega-over-kt", f->x, "Values of hbar omega0 / k T")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--gamma-over-omega0", f->gamma)->delimiter(',')->capture_default_str();
  sub->add_option("--omega0", f->omega0)->capture_default_str();
  sub->callback([&common, &action, f] {
    const auto consts = constants_of(common);
    for (double g : f->gamma) DetectorParams{f->omega0, g * f->omega0}.validate();
    for (double x : f->x) {
      if (!(x > 0.0)) throw CLI::ValidationError("--hbar-omega-over-kt values must be positive");
    }
    action = [consts, f](std::ostream& out) {
      CsvWriter csv(out);
      csv.row("omega0", "gamma", "source", "energy", "planck_ref", "rel_err");
      for (double x : f->x) {
        const double temperature = consts.hbar * f->omega0 / (consts.k_boltzmann * x);
        // 2 pi omega0 c / a = x
        const AcceleratedWorldline w(2.0 * std::numbers::pi * f->omega0 * consts.c / x, consts);
        std::vector<DensitySource> sources;
        if (f->source != "accelerated") sources.push_back(thermal_source(temperature, consts));
        if (f->source != "thermal") sources.push_back(accelerated_source(w));
        const double ref = planck_factor(x, Statistics::bose_einstein);
        for (const auto& src : sources) {
          for (double g : f->gamma) {
            const DetectorParams p{f->omega0, g * f->omega0};
            const double e = steady_state_energy(p, src, consts);
            csv.row(f->omega0, p.gamma, src.name, e, ref, std::abs(e - ref) / ref);
          }
          const DetectorParams p{f->omega0, f->gamma.front() * f->omega0};
          const double e = narrowband_occupation(p, src, consts);
          csv.row(f->omega0, 0.0, src.name, e, ref, std::abs(e - ref) / ref);
        }
      }
    };
  });
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Accelerated-observer vacuum spectra and Unruh temperatures", "unruh-cli"};
  app.require_subcommand(1);
  // One set of shared flags per subcommand, so each keeps its own defaults.
  std::map<std::string, Common> commons;
  Action action;
  setup_temperature(app, commons["temperature"], action);
  setup_doppler(app, commons["doppler"], action);
  setup_spectrum(app, commons["spectrum"], action);
  setup_correlator(app, commons["correlator"], action);
  setup_delta_kernel(app, commons["delta-kernel"], action);
  setup_detector(app, commons["detector"], action);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << sub->help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "unruh-cli: " << first_line(e.what()) << '\n';
    return usage_error;
  } catch (const DomainError& e) {
    err << "unruh-cli: " << e.what() << '\n';
    return usage_error;
  }

  const Common& common = commons.at(app.get_subcommands().front()->get_name());
  try {
    if (common.output.empty()) {
      action(out);
    } else {
      std::ofstream file(common.output, std::ios::binary);
      if (!file) {
        err << "unruh-cli: cannot open " << common.output << '\n';
        return usage_error;
      }
      action(file);
    }
  } catch (const NumericError& e) {
    err << "unruh-cli: " << e.what() << " (worst residual " << num(e.worst_residual()) << ")\n";
    return numeric_failure;
  } catch (const DomainError& e) {
    err << "unruh-cli: " << e.what() << '\n';
    return usage_error;
  }
  return ok;
}

}  // namespace unruh::cli
