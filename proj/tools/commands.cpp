#include "commands.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "mirror/bogolubov.hpp"
#include "mirror/errors.hpp"
#include "mirror/timedomain.hpp"
#include "mirror/trajectory.hpp"

namespace mirror::cli {

namespace {

using nlohmann::json;

// Thrown for bad parameter values discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string iso_timestamp(bool compact) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, compact ? "%Y%m%dT%H%M%SZ" : "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// 9 significant digits; -0 prints as 0.
std::string num(double x) { return fmt::format("{:.9g}", x == 0.0 ? 0.0 : x); }

TrajectoryKind kind_arg(const std::string& name) {
  if (auto k = parse_kind(name)) return *k;
  throw UsageError("unknown trajectory kind '" + name + "'");
}

std::vector<TrajectoryKind> kinds_arg(const std::vector<std::string>& names) {
  std::vector<TrajectoryKind> out;
  for (const auto& n : names) {
    if (n == "all") {
      out.assign(kAllKinds.begin(), kAllKinds.end());
      return out;
    }
    out.push_back(kind_arg(n));
  }
  if (out.empty()) throw UsageError("no trajectory kinds given");
  return out;
}

AmplitudeMode mode_arg(const std::string& name) {
  if (auto m = parse_mode(name)) return *m;
  throw UsageError("unknown amplitude mode '" + name + "' (max-speed or paper-table)");
}

Route route_arg(const std::string& name) {
  if (name == "closed-form" || name == "closed") return Route::ClosedForm;
  if (name == "quadrature") return Route::Quadrature;
  if (name == "larmor") return Route::Larmor;
  throw UsageError("unknown route '" + name + "' (closed-form, quadrature or larmor)");
}

Trajectory trajectory_arg(TrajectoryKind kind, double kappa, double v, AmplitudeMode mode) {
  try {
    return make_trajectory(kind, kappa, v, mode);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void warn_jinc(TrajectoryKind kind, AmplitudeMode mode, std::ostream& err) {
  if (kind != TrajectoryKind::Jinc || mode != AmplitudeMode::MaxSpeedCalibrated) return;
  fmt::print(err,
             "warning: Jinc max-speed amplitude J/v = {:.6g} differs from the table-implied "
             "J/v = {:.6g}; N/v^2 and E/(hbar kappa v^2) will not match the reference table "
             "(use --mode paper-table to reproduce it)\n",
             calibrate_amplitude(kind, 0.5) / 0.5,
             calibrate_amplitude(kind, 0.5, AmplitudeMode::PaperTableImplied) / 0.5);
}

struct Command {
  std::string name;
  json params = json::object();
};

// ---- totals ---------------------------------------------------------------

struct TotalsArgs {
  std::vector<std::string> kinds{"all"};
  double v = 0.2;
  double kappa = 1.0;
  std::string mode = "max-speed";
  std::string route = "closed-form";
};

int totals(const TotalsArgs& a, const QuadratureConfig& cfg, bool as_json, std::ostream& out,
           std::ostream& err, json& outputs) {
  const auto kinds = kinds_arg(a.kinds);
  const AmplitudeMode mode = mode_arg(a.mode);
  const Route route = route_arg(a.route);
  std::vector<Trajectory> trajs;
  for (TrajectoryKind kind : kinds) trajs.push_back(trajectory_arg(kind, a.kappa, a.v, mode));
  json rows = json::array();
  if (!as_json) {
    fmt::print(out, "{:<15} {:<12} {:>12} {:>14} {:>10} {:>18} {:>10}\n", "kind", "mode", "J/v",
               "N/v^2", "+/-", "E/(hbar k v^2)", "+/-");
  }
  int status = kOk;
  for (const Trajectory& traj : trajs) {
    const TrajectoryKind kind = traj.kind();
    warn_jinc(kind, mode, err);
    json row{{"kind", to_string(kind)},
             {"mode", to_string(traj.mode())},
             {"j_over_v", traj.amplitude() / a.v}};
    try {
      const EmissionTotals t = emission_totals(traj, route, cfg);
      row["n_over_v2"] = t.n_over_v2;
      row["n_error"] = t.n_error;
      row["e_over_hkv2"] = t.e_over_hkv2;
      row["e_error"] = t.e_error;
      if (!as_json) {
        fmt::print(out, "{:<15} {:<12} {:>12} {:>14} {:>10.1e} {:>18} {:>10.1e}\n",
                   to_string(kind), to_string(traj.mode()), num(traj.amplitude() / a.v),
                   num(t.n_over_v2), t.n_error, num(t.e_over_hkv2), t.e_error);
      }
    } catch (const QuadratureError& e) {
      row["error"] = e.what();
      status = kCheckFailed;
      if (!as_json) {
        fmt::print(out, "{:<15} {:<12} {:>12} quadrature failure: {}\n", to_string(kind),
                   to_string(traj.mode()), num(traj.amplitude() / a.v), e.what());
      }
    }
    rows.push_back(row);
  }
  outputs["rows"] = rows;
  outputs["route"] = to_string(route);
  return status;
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumArgs {
  std::string kind = "gauss";
  double v = 0.2;
  double kappa = 1.0;
  std::string mode = "max-speed";
  std::string route = "closed-form";
  double pmax = 3.0;
  int points = 61;
  std::string format = "csv";
  bool scaled = false;
  std::string out_path;
};

int spectrum(const SpectrumArgs& a, const QuadratureConfig& cfg, bool as_json,
             std::ostream& out, std::ostream& err, json& outputs) {
  if (!(a.pmax > 0.0)) throw UsageError("--pmax must be positive");
  if (a.points < 2) throw UsageError("--points must be at least 2");
  if (a.format != "csv" && a.format != "json") throw UsageError("--format must be csv or json");
  const TrajectoryKind kind = kind_arg(a.kind);
  const AmplitudeMode mode = mode_arg(a.mode);
  const Route route = route_arg(a.route);
  const Trajectory traj = trajectory_arg(kind, a.kappa, a.v, mode);

  std::vector<double> x(static_cast<std::size_t>(a.points));
  std::vector<double> grid(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = a.pmax * static_cast<double>(i) / static_cast<double>(a.points - 1);
    grid[i] = x[i] * a.kappa;
  }
  if (route == Route::Larmor) {
    // N(omega) needs omega > 0; the first point is its limit 0.
    grid.front() = std::max(grid.front(), 1e-300);
  }
  const SpectrumTable table = spectrum_table(traj, grid, route, cfg);
  const double inv_v2 = 1.0 / (a.v * a.v);
  const std::string x_name = route == Route::Larmor ? "omega_over_kappa" : "p_over_kappa";
  const std::string y_name = route == Route::Larmor ? "N_omega" : "N_p";

  outputs[x_name] = x;
  outputs[y_name] = table.values;
  if (a.scaled) {
    std::vector<double> scaled(table.values);
    for (double& s : scaled) s *= inv_v2;
    outputs[y_name + "_times_v_minus2"] = scaled;
  }

  std::ostringstream body;
  if (a.format == "csv") {
    body << x_name << ',' << y_name;
    if (a.scaled) body << ',' << y_name << "_times_v_minus2";
    body << '\n';
    for (std::size_t i = 0; i < x.size(); ++i) {
      body << num(x[i]) << ',' << num(table.values[i]);
      if (a.scaled) body << ',' << num(table.values[i] * inv_v2);
      body << '\n';
    }
  } else {
    body << outputs.dump(2) << '\n';
  }
  if (!a.out_path.empty()) {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) {
      fmt::print(err, "error: cannot open '{}' for writing\n", a.out_path);
      return kCheckFailed;
    }
    file << body.str();
    if (!file) {
      fmt::print(err, "error: failed writing '{}'\n", a.out_path);
      return kCheckFailed;
    }
  } else if (!as_json) {
    out << body.str();
  }
  return kOk;
}

// ---- crosscheck -----------------------------------------------------------

struct CrosscheckArgs {
  std::string kind = "gauss";
  double v = 0.2;
  double kappa = 1.0;
  std::string mode = "max-speed";
  double threshold = 0.0;  // 0 selects the per-kind default
};

int crosscheck(const CrosscheckArgs& a, const QuadratureConfig& cfg, bool as_json,
               std::ostream& out, std::ostream& err, json& outputs) {
  const TrajectoryKind kind = kind_arg(a.kind);
  const AmplitudeMode mode = mode_arg(a.mode);
  const Trajectory traj = trajectory_arg(kind, a.kappa, a.v, mode);
  const bool thermal = kind == TrajectoryKind::BoseEinstein || kind == TrajectoryKind::FermiDirac;
  const double threshold = a.threshold > 0.0 ? a.threshold : (thermal ? 1e-4 : 1e-5);
  warn_jinc(kind, mode, err);

  const EmissionTotals closed = emission_totals(traj, Route::ClosedForm, cfg);
  const EmissionTotals beta = emission_totals(traj, Route::Quadrature, cfg);
  const EmissionTotals power = energy_time(traj, EnergyMethod::PowerIntegral, cfg);
  const EmissionTotals larmor = larmor_totals(traj, cfg);

  const std::vector<std::pair<std::string, double>> energy{
      {"beta", beta.e_over_hkv2},
      {"time_power", power.e_over_hkv2},
      {"parseval_larmor", larmor.e_over_hkv2},
      {"closed_form", closed.e_over_hkv2}};
  const std::vector<std::pair<std::string, double>> particles{
      {"beta", beta.n_over_v2}, {"larmor", larmor.n_over_v2}, {"closed_form", closed.n_over_v2}};

  double worst = 0.0;
  std::string worst_pair;
  auto compare = [&](const std::string& quantity, const auto& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        const double dev = std::abs(values[i].second - values[j].second) /
                           std::max(std::abs(values[i].second), std::abs(values[j].second));
        if (dev > worst) {
          worst = dev;
          worst_pair = quantity + ": " + values[i].first + " vs " + values[j].first;
        }
      }
    }
  };
  compare("E", energy);
  compare("N", particles);
  const bool passed = worst < threshold;

  for (const auto& [name, value] : energy) outputs["energy"][name] = value;
  for (const auto& [name, value] : particles) outputs["particles"][name] = value;
  outputs["max_deviation"] = worst;
  outputs["worst_pair"] = worst_pair;
  outputs["threshold"] = threshold;
  outputs["passed"] = passed;

  if (!as_json) {
    fmt::print(out, "{} (v = {}, kappa = {}, J/v = {})\n", to_string(kind), num(a.v),
               num(a.kappa), num(traj.amplitude() / a.v));
    fmt::print(out, "  E/(hbar kappa v^2)\n");
    for (const auto& [name, value] : energy) fmt::print(out, "    {:<16} {}\n", name, num(value));
    fmt::print(out, "  N/v^2\n");
    for (const auto& [name, value] : particles) {
      fmt::print(out, "    {:<16} {}\n", name, num(value));
    }
    fmt::print(out, "  max pairwise deviation {:.3e} ({}), threshold {:.1e}: {}\n", worst,
               worst_pair.empty() ? "-" : worst_pair, threshold, passed ? "PASS" : "FAIL");
  }
  if (!passed) {
    fmt::print(err, "crosscheck failed: {} deviates by {:.3e}\n", worst_pair, worst);
    return kCheckFailed;
  }
  return kOk;
}

// ---- phase ----------------------------------------------------------------

struct PhaseArgs {
  std::vector<std::string> kinds{"gauss", "lorentz", "sech"};
  std::vector<double> v{0.5, 0.4, 0.3};
  double kappa = 1.0;
  double tmin = -6.0;
  double tmax = 6.0;
  int points = 241;
};

int phase(const PhaseArgs& a, bool as_json, std::ostream& out, json& outputs) {
  const auto kinds = kinds_arg(a.kinds);
  if (a.v.size() != kinds.size() && a.v.size() != 1) {
    throw UsageError("--v needs one value or one per kind");
  }
  if (a.points < 2 || !(a.tmax > a.tmin)) throw UsageError("need --points >= 2 and tmax > tmin");
  std::ostringstream body;
  body << "kind,v,t,z,zdot\n";
  json curves = json::array();
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    const double v = a.v.size() == 1 ? a.v.front() : a.v[k];
    const Trajectory traj = trajectory_arg(kinds[k], a.kappa, v, AmplitudeMode::MaxSpeedCalibrated);
    std::vector<double> ts, zs, vs;
    for (int i = 0; i < a.points; ++i) {
      const double t = a.tmin + (a.tmax - a.tmin) * i / (a.points - 1);
      const Kinematics kin = traj.kinematics(t);
      ts.push_back(t);
      zs.push_back(kin.z);
      vs.push_back(kin.zdot);
      body << to_string(kinds[k]) << ',' << num(v) << ',' << num(t) << ',' << num(kin.z) << ','
           << num(kin.zdot) << '\n';
    }
    curves.push_back({{"kind", to_string(kinds[k])}, {"v", v}, {"t", ts}, {"z", zs}, {"zdot", vs}});
  }
  outputs["curves"] = curves;
  if (!as_json) out << body.str();
  return kOk;
}

// ---- dispatch -------------------------------------------------------------

struct Invocation {
  TotalsArgs totals;
  SpectrumArgs spectrum;
  CrosscheckArgs crosscheck;
  PhaseArgs phase;
  std::string record_path;  // rerun input
  bool as_json = false;
  std::string record_dir;
};

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
  return s;
}

// Parameters that determine the numbers, in a form the parser accepts back.
json params_of(const std::string& command, const Invocation& inv) {
  if (command == "totals") {
    const auto& a = inv.totals;
    return {{"kinds", join(a.kinds)}, {"v", a.v}, {"kappa", a.kappa}, {"mode", a.mode},
            {"route", a.route}};
  }
  if (command == "spectrum") {
    const auto& a = inv.spectrum;
    return {{"kind", a.kind},     {"v", a.v},           {"kappa", a.kappa},
            {"mode", a.mode},     {"route", a.route},   {"pmax", a.pmax},
            {"points", a.points}, {"format", a.format}, {"scaled", a.scaled}};
  }
  if (command == "crosscheck") {
    const auto& a = inv.crosscheck;
    return {{"kind", a.kind},
            {"v", a.v},
            {"kappa", a.kappa},
            {"mode", a.mode},
            {"threshold", a.threshold}};
  }
  const auto& a = inv.phase;
  std::vector<std::string> vs;
  for (double v : a.v) vs.push_back(fmt::format("{}", v));
  return {{"kinds", join(a.kinds)}, {"v", join(vs)},         {"kappa", a.kappa},
          {"tmin", a.tmin},         {"tmax", a.tmax},        {"points", a.points}};
}

std::vector<std::string> args_from_params(const std::string& command, const json& params) {
  std::vector<std::string> args{command};
  for (const auto& [key, value] : params.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
      continue;
    }
    args.push_back("--" + key);
    if (value.is_string()) {
      args.push_back(value.get<std::string>());
    } else if (value.is_number_integer()) {
      args.push_back(std::to_string(value.get<long long>()));
    } else {
      args.push_back(fmt::format("{}", value.get<double>()));  // shortest round-trip form
    }
  }
  return args;
}

void add_common(CLI::App* sub, Invocation& inv) {
  sub->add_flag("--json", inv.as_json, "Machine-readable output (RunRecord layout)");
  sub->add_option("--record", inv.record_dir, "Write a RunRecord JSON file into this directory");
}

void build_app(CLI::App& app, Invocation& inv) {
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* t = app.add_subcommand("totals", "Total particle number and energy per trajectory");
  t->add_option("--kinds", inv.totals.kinds, "Comma-separated kinds or 'all'")->delimiter(',');
  t->add_option("--v", inv.totals.v, "Maximum mirror speed");
  t->add_option("--kappa", inv.totals.kappa, "Acceleration scale");
  t->add_option("--mode", inv.totals.mode, "Amplitude mode: max-speed or paper-table");
  t->add_option("--route", inv.totals.route, "closed-form, quadrature or larmor");
  add_common(t, inv);

  auto* s = app.add_subcommand("spectrum", "Particle spectrum N(p) on a uniform grid");
  s->add_option("--kind", inv.spectrum.kind, "Trajectory kind");
  s->add_option("--v", inv.spectrum.v, "Maximum mirror speed");
  s->add_option("--kappa", inv.spectrum.kappa, "Acceleration scale");
  s->add_option("--mode", inv.spectrum.mode, "Amplitude mode: max-speed or paper-table");
  s->add_option("--route", inv.spectrum.route, "closed-form, quadrature or larmor");
  s->add_option("--pmax", inv.spectrum.pmax, "Largest p/kappa");
  s->add_option("--points", inv.spectrum.points, "Number of grid points");
  s->add_option("--format", inv.spectrum.format, "csv or json");
  s->add_flag("--scaled", inv.spectrum.scaled, "Add an N_p/v^2 column");
  s->add_option("--out", inv.spectrum.out_path, "Output file (default stdout)");
  add_common(s, inv);

  auto* c = app.add_subcommand("crosscheck", "Compare energy and particle routes");
  c->add_option("--kind", inv.crosscheck.kind, "Trajectory kind");
  c->add_option("--v", inv.crosscheck.v, "Maximum mirror speed");
  c->add_option("--kappa", inv.crosscheck.kappa, "Acceleration scale");
  c->add_option("--mode", inv.crosscheck.mode, "Amplitude mode: max-speed or paper-table");
  c->add_option("--threshold", inv.crosscheck.threshold,
                "Maximum relative deviation (default 1e-5, 1e-4 for thermal kinds)");
  add_common(c, inv);

  auto* p = app.add_subcommand("phase", "Phase-space curves (z, zdot)");
  p->add_option("--kinds,--kind", inv.phase.kinds, "Comma-separated kinds")->delimiter(',');
  p->add_option("--v", inv.phase.v, "Comma-separated speeds, one per kind")->delimiter(',');
  p->add_option("--kappa", inv.phase.kappa, "Acceleration scale");
  p->add_option("--tmin", inv.phase.tmin, "First time");
  p->add_option("--tmax", inv.phase.tmax, "Last time");
  p->add_option("--points", inv.phase.points, "Samples per curve");
  add_common(p, inv);

  auto* r = app.add_subcommand("rerun", "Re-execute a RunRecord and compare its outputs");
  r->add_option("record", inv.record_path, "RunRecord JSON file")->required();
}

int execute(const std::string& command, const Invocation& inv, const QuadratureConfig& cfg,
            std::ostream& out, std::ostream& err, json& outputs) {
  if (command == "totals") return totals(inv.totals, cfg, inv.as_json, out, err, outputs);
  if (command == "spectrum") return spectrum(inv.spectrum, cfg, inv.as_json, out, err, outputs);
  if (command == "crosscheck") {
    return crosscheck(inv.crosscheck, cfg, inv.as_json, out, err, outputs);
  }
  return phase(inv.phase, inv.as_json, out, outputs);
}

// Parses args into inv; returns the subcommand name, or an exit code.
std::variant<std::string, int> parse(const std::vector<std::string>& args, Invocation& inv,
                                     std::ostream& out, std::ostream& err) {
  CLI::App app{"Particle and energy emission of round-trip moving mirrors", "mirrorspec"};
  build_app(app, inv);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(kUsage);
  }
  for (const auto* sub : app.get_subcommands()) return sub->get_name();
  return static_cast<int>(kUsage);
}

int dispatch(const std::vector<std::string>& args, const std::optional<QuadratureConfig>& fixed,
             std::ostream& out, std::ostream& err, RunRecord* produced);

int rerun(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    fmt::print(err, "error: cannot read '{}'\n", path);
    return kUsage;
  }
  RunRecord original;
  try {
    original = json::parse(file).get<RunRecord>();
  } catch (const std::exception& e) {
    fmt::print(err, "error: '{}' is not a RunRecord: {}\n", path, e.what());
    return kUsage;
  }
  std::ostringstream sink;
  RunRecord again;
  const int status = dispatch(args_from_params(original.command, original.params),
                              original.quadrature, sink, err, &again);
  if (status == kUsage) return kUsage;
  if (again.outputs == original.outputs) {
    fmt::print(out, "rerun {}: outputs reproduced bit-exactly\n", original.command);
    return kOk;
  }
  const json diff = json::diff(original.outputs, again.outputs);
  fmt::print(out, "rerun {}: outputs differ in {} place(s)\n", original.command, diff.size());
  for (const auto& d : diff) fmt::print(out, "  {}\n", d.value("path", std::string{}));
  return kCheckFailed;
}

int dispatch(const std::vector<std::string>& args, const std::optional<QuadratureConfig>& fixed,
             std::ostream& out, std::ostream& err, RunRecord* produced) {
  Invocation inv;
  const auto parsed = parse(args, inv, out, err);
  if (std::holds_alternative<int>(parsed)) return std::get<int>(parsed);
  const std::string command = std::get<std::string>(parsed);
  if (command == "rerun") return rerun(inv.record_path, out, err);

  RunRecord record;
  record.command = command;
  record.quadrature = fixed ? *fixed : default_quadrature();
  record.timestamp = iso_timestamp(false);
  int status;
  try {
    record.params = params_of(command, inv);
    status = execute(command, inv, record.quadrature, out, err, record.outputs);
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const QuadratureError& e) {
    fmt::print(err, "error: quadrature failed: {} (achieved error {:.3e})\n", e.what(),
               e.achieved_error());
    return kCheckFailed;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kCheckFailed;
  }
  if (inv.as_json) out << json(record).dump(2) << '\n';
  if (!inv.record_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(inv.record_dir, ec);
    std::filesystem::path target =
        std::filesystem::path(inv.record_dir) / fmt::format("{}-{}.json", command,
                                                            iso_timestamp(true));
    for (int n = 2; std::filesystem::exists(target); ++n) {
      target = std::filesystem::path(inv.record_dir) /
               fmt::format("{}-{}-{}.json", command, iso_timestamp(true), n);
    }
    std::ofstream file(target);
    file << json(record).dump(2) << '\n';
    if (!file) {
      fmt::print(err, "error: cannot write run record '{}'\n", target.string());
      return kCheckFailed;
    }
    fmt::print(err, "run record: {}\n", target.string());
  }
  if (produced) *produced = record;
  return status;
}

}  // namespace

void to_json(json& j, const RunRecord& r) {
  j = json{{"command", r.command},
           {"params", r.params},
           {"outputs", r.outputs},
           {"quadrature",
            {{"rel_tol", r.quadrature.rel_tol},
             {"abs_tol", r.quadrature.abs_tol},
             {"max_segments", r.quadrature.max_segments},
             {"tail_policy",
              r.quadrature.tail_policy == TailPolicy::Extrapolate ? "extrapolate" : "truncate"},
             {"truncate_at", r.quadrature.truncate_at}}},
           {"tool_version", r.tool_version},
           {"timestamp", r.timestamp}};
}

void from_json(const json& j, RunRecord& r) {
  j.at("command").get_to(r.command);
  r.params = j.at("params");
  r.outputs = j.at("outputs");
  const json& q = j.at("quadrature");
  q.at("rel_tol").get_to(r.quadrature.rel_tol);
  q.at("abs_tol").get_to(r.quadrature.abs_tol);
  q.at("max_segments").get_to(r.quadrature.max_segments);
  r.quadrature.tail_policy = q.at("tail_policy").get<std::string>() == "truncate"
                                 ? TailPolicy::Truncate
                                 : TailPolicy::Extrapolate;
  q.at("truncate_at").get_to(r.quadrature.truncate_at);
  j.at("tool_version").get_to(r.tool_version);
  j.at("timestamp").get_to(r.timestamp);
}

QuadratureConfig default_quadrature() {
  QuadratureConfig cfg;
  if (const char* env = std::getenv("MIRRORSPEC_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end != env && *end == '\0' && tol > 0.0 && tol < 1.0) cfg.rel_tol = tol;
  }
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return dispatch(args, std::nullopt, out, err, nullptr);
}

}  // namespace mirror::cli
