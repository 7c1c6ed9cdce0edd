#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fsf/format.hpp"
#include "fsf/optimizer.hpp"
#include "fsf/response.hpp"
#include "fsf/tables.hpp"

using nlohmann::ordered_json;

namespace {

/// Output-file failures map to exit 4; everything else library-side maps to
/// 2 (validation) or 3 (convergence).
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecFlags {
  int n = 0;
  std::string type = "lowpass";
  std::string expansion = "cosine";
  int bw = 0;
  int m1 = 0;
  int ntrans = 0;
  std::string binding = "symmetric";
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--n", f.n, "filter length (count of frequency samples)")->required();
  cmd->add_option("--type", f.type, "band shape")
      ->check(CLI::IsMember({"lowpass", "bandpass"}));
  cmd->add_option("--expansion", f.expansion, "sample lattice: k/n bins or half-bin offsets")
      ->check(CLI::IsMember({"cosine", "sine"}));
  cmd->add_option("--bw", f.bw, "count of consecutive unity samples")->required();
  cmd->add_option("--m1", f.m1, "bandpass: index of the first lower transition sample");
  cmd->add_option("--ntrans", f.ntrans, "transition samples per band edge");
  cmd->add_option("--binding", f.binding, "bandpass edge coupling")
      ->check(CLI::IsMember({"symmetric", "independent"}));
}

fsf::FilterSpec make_spec(const SpecFlags& f) {
  fsf::FilterSpec s;
  s.n = f.n;
  s.kind = f.type == "bandpass" ? fsf::FilterKind::bandpass : fsf::FilterKind::lowpass;
  s.expansion = f.expansion == "sine" ? fsf::Expansion::sine : fsf::Expansion::cosine;
  s.bw = f.bw;
  s.m1 = f.m1;
  s.t = f.ntrans;
  s.binding = f.binding == "independent" ? fsf::Binding::independent : fsf::Binding::symmetric;
  fsf::validate(s);
  return s;
}

double unit_scale(const std::string& units) {
  return units == "cycles" ? 1.0 / (2.0 * std::numbers::pi) : 1.0;
}

void write_document(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + out_path);
  out << text;
  out.flush();
  if (!out.good()) throw IoFailure("write failed: " + out_path);
}

ordered_json spec_json(const fsf::FilterSpec& s) {
  ordered_json j;
  j["n"] = s.n;
  j["type"] = fsf::to_string(s.kind);
  j["expansion"] = fsf::to_string(s.expansion);
  j["bw"] = s.bw;
  if (s.kind == fsf::FilterKind::bandpass) {
    j["m1"] = s.m1;
    j["binding"] = fsf::to_string(s.binding);
  }
  j["ntrans"] = s.t;
  return j;
}

ordered_json opt_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string join_g17(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += fsf::g17(v[i]);
  }
  return out;
}

int cmd_design(const SpecFlags& flags, double g, const std::string& format,
               const std::string& units, const std::string& out_path) {
  fsf::FilterSpec spec = make_spec(flags);
  fsf::SolveOptions opt;
  opt.g = g;
  fsf::DesignResult r = fsf::optimize(spec, opt);

  const double scale = unit_scale(units);
  std::ostringstream doc;
  if (format == "text") {
    doc << "coefficients " << join_g17(r.assignment.values) << '\n'
        << "delta " << fsf::g17(r.delta) << '\n'
        << "psl_db " << (r.psl_db ? fsf::g17(*r.psl_db) : "none") << '\n'
        << "peak_" << (units == "cycles" ? "freq " : "omega ") << fsf::g17(r.peak_omega * scale)
        << '\n'
        << "iterations " << r.iterations << '\n'
        << "grid g=" << fsf::g17(r.g) << " points=" << r.grid_points << '\n';
  } else {
    ordered_json j;
    j["spec"] = spec_json(spec);
    j["coefficients"] = r.assignment.values;
    j["delta"] = r.delta;
    j["psl_db"] = opt_json(r.psl_db);
    ordered_json ext = ordered_json::array();
    for (double w : r.extremal_omegas) ext.push_back(w * scale);
    j["extremal_omegas"] = std::move(ext);
    j["iterations"] = r.iterations;
    j["grid"] = ordered_json{{"g", r.g}, {"points", r.grid_points}};
    doc << j.dump(2) << '\n';
  }
  write_document(out_path, doc.str());
  return 0;
}

int cmd_verify(const SpecFlags& flags, const std::vector<double>& coeffs, double g,
               const std::string& format, const std::string& units,
               const std::string& out_path) {
  fsf::FilterSpec spec = make_spec(flags);
  fsf::TransitionAssignment a{coeffs, spec.binding};
  fsf::PslReport rep = fsf::psl(spec, a, g);

  const double scale = unit_scale(units);
  std::ostringstream doc;
  if (format == "text") {
    doc << "psl_db " << (rep.psl_db ? fsf::g17(*rep.psl_db) : "none") << '\n'
        << "peak_" << (units == "cycles" ? "freq " : "omega ") << fsf::g17(rep.peak_omega * scale)
        << '\n'
        << "peak_amplitude " << fsf::g17(rep.peak_amplitude) << '\n'
        << "local_maxima " << rep.local_maxima.size() << '\n';
  } else {
    ordered_json j;
    j["spec"] = spec_json(spec);
    j["coefficients"] = coeffs;
    j["psl_db"] = opt_json(rep.psl_db);
    j["peak_omega"] = rep.peak_omega * scale;
    j["peak_amplitude"] = rep.peak_amplitude;
    ordered_json peaks = ordered_json::array();
    for (const fsf::SidelobePeak& p : rep.local_maxima)
      peaks.push_back(ordered_json{{"omega", p.omega * scale}, {"db", p.db}});
    j["local_maxima"] = std::move(peaks);
    j["grid"] = ordered_json{{"g", g}};
    doc << j.dump(2) << '\n';
  }
  write_document(out_path, doc.str());
  return 0;
}

int cmd_table(const std::string& preset, const std::optional<int>& n_filter, double g,
              const std::string& format, const std::string& fixtures_path,
              const std::string& out_path) {
  std::vector<fsf::PublishedFixture> fixtures;
  if (fixtures_path.empty()) {
    fixtures = fsf::embedded_fixtures();
  } else {
    if (!std::filesystem::exists(fixtures_path))
      throw IoFailure("cannot open " + fixtures_path);
    fixtures = fsf::load_fixtures(fixtures_path);
  }

  std::vector<std::string> presets;
  if (preset == "all") {
    for (const fsf::PublishedFixture& f : fixtures)
      if (std::find(presets.begin(), presets.end(), f.table) == presets.end())
        presets.push_back(f.table);
  } else {
    presets.push_back(preset);
  }

  std::vector<fsf::TableRowResult> rows;
  for (const std::string& p : presets) {
    auto part = fsf::run_preset(p, n_filter, g, &fixtures);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  fsf::Report rep = fsf::comparison_report(std::move(rows));
  write_document(out_path, format == "csv" ? rep.csv : rep.markdown);
  return 0;
}

int cmd_sweep_grid(const SpecFlags& flags, const std::vector<double>& grids,
                   const std::string& format, const std::string& out_path) {
  fsf::FilterSpec spec = make_spec(flags);
  for (double g : grids)
    if (!(g > 0)) throw fsf::Error("grid densities must be positive");
  std::vector<fsf::DesignResult> sweep = fsf::grid_sweep(spec, grids);

  std::ostringstream doc;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const fsf::DesignResult& r : sweep) {
      ordered_json j;
      j["spec"] = spec_json(spec);
      j["coefficients"] = r.assignment.values;
      j["delta"] = r.delta;
      j["psl_db"] = opt_json(r.psl_db);
      j["iterations"] = r.iterations;
      j["grid"] = ordered_json{{"g", r.g}, {"points", r.grid_points}};
      arr.push_back(std::move(j));
    }
    doc << arr.dump(2) << '\n';
  } else if (format == "md") {
    doc << "| g | points | iterations | coefficients | delta | psl_db |\n"
        << "|--:|--:|--:|---|--:|--:|\n";
    for (const fsf::DesignResult& r : sweep)
      doc << "| " << fsf::shortest(r.g) << " | " << r.grid_points << " | " << r.iterations
          << " | " << join_g17(r.assignment.values) << " | " << fsf::g17(r.delta) << " | "
          << (r.psl_db ? fsf::g17(*r.psl_db) : "") << " |\n";
  } else {
    doc << "g,points,iterations,coefficients,delta,psl_db\n";
    for (const fsf::DesignResult& r : sweep)
      doc << fsf::shortest(r.g) << ',' << r.grid_points << ',' << r.iterations << ','
          << join_g17(r.assignment.values) << ',' << fsf::g17(r.delta) << ','
          << (r.psl_db ? fsf::g17(*r.psl_db) : "") << '\n';
  }
  write_document(out_path, doc.str());
  return 0;
}

int cmd_response(const SpecFlags& flags, const std::vector<double>& coeffs, double step,
                 const std::vector<double>& range, const std::string& units,
                 const std::string& out_path) {
  fsf::FilterSpec spec = make_spec(flags);
  if (range.size() != 2 || !(range[0] < range[1]))
    throw fsf::Error("range must be lo,hi with lo < hi");
  if (!(step > 0)) throw fsf::Error("step must be positive");
  fsf::TransitionAssignment a{coeffs, spec.binding};
  auto curve = fsf::response_curve(spec, a, step, range[0], range[1]);

  std::ostringstream doc;
  const bool cycles = units == "cycles";
  fsf::write_curve_csv(doc, curve, cycles ? "freq_cycles" : "omega_rad", unit_scale(units));
  write_document(out_path, doc.str());
  return 0;
}

int cmd_export_taps(const SpecFlags& flags, const std::vector<double>& coeffs,
                    const std::string& out_path) {
  fsf::FilterSpec spec = make_spec(flags);
  fsf::TransitionAssignment a{coeffs, spec.binding};
  fsf::ImpulseResponse h = fsf::synthesize(spec, a);

  std::ostringstream doc;
  doc << "index,value\n";
  for (std::size_t m = 0; m < h.taps.size(); ++m)
    doc << m << ',' << fsf::g17(h.taps[m]) << '\n';
  write_document(out_path, doc.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Frequency-sampling FIR filter design: minimax transition coefficients, "
      "sidelobe verification, response export, and published-table checks."};
  app.require_subcommand(1);

  SpecFlags flags;
  double g = 1e-3;
  std::vector<double> coeffs;
  std::vector<double> grids{0.01, 0.001, 0.0001, 0.00001};
  std::vector<double> range{0.0, std::numbers::pi};
  double step = 1e-3;
  std::string format;
  std::string units = "rad";
  std::string out_path;
  std::string preset;
  std::string fixtures_path;
  int n_filter = 0;

  CLI::App* design = app.add_subcommand(
      "design", "Find the transition coefficients minimizing peak stopband sidelobe level");
  add_spec_flags(design, flags);
  design->add_option("--grid", g, "grid step as a fraction of the sample spacing 2pi/n");
  design->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  design->add_option("--units", units, "frequency units in output")
      ->check(CLI::IsMember({"rad", "cycles"}));
  design->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify =
      app.add_subcommand("verify", "Measure the peak stopband sidelobe of given coefficients");
  add_spec_flags(verify, flags);
  verify->add_option("--coeffs", coeffs, "transition coefficient values")
      ->required()
      ->expected(-1)
      ->delimiter(',');
  verify->add_option("--grid", g, "grid step as a fraction of the sample spacing 2pi/n");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--units", units, "frequency units in output")
      ->check(CLI::IsMember({"rad", "cycles"}));
  verify->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* table = app.add_subcommand(
      "table", "Recompute a published coefficient table and report corrections");
  table->add_option("--preset", preset, "table name, or 'all'")->required();
  CLI::Option* table_n = table->add_option("--n", n_filter, "only rows with this filter length");
  table->add_option("--grid", g, "grid step as a fraction of the sample spacing 2pi/n");
  table->add_option("--format", format, "output format")->check(CLI::IsMember({"md", "csv"}));
  table->add_option("--fixtures", fixtures_path,
                    "load fixtures from this file or directory instead of the embedded copy");
  table->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* sweep = app.add_subcommand(
      "sweep-grid", "Re-run a design across several grid densities");
  add_spec_flags(sweep, flags);
  sweep->add_option("--grids", grids, "comma-separated grid densities")
      ->delimiter(',')
      ->expected(-1);
  sweep->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "md", "json"}));
  sweep->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* response =
      app.add_subcommand("response", "Export the continuous amplitude response as CSV");
  add_spec_flags(response, flags);
  response->add_option("--coeffs", coeffs, "transition coefficient values")
      ->expected(-1)
      ->delimiter(',');
  response->add_option("--step", step, "frequency step in radians");
  response->add_option("--range", range, "lo,hi frequency range in radians")
      ->expected(2)
      ->delimiter(',');
  response->add_option("--units", units, "frequency units in output")
      ->check(CLI::IsMember({"rad", "cycles"}));
  response->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* taps = app.add_subcommand("export-taps", "Export the impulse-response taps as CSV");
  add_spec_flags(taps, flags);
  taps->add_option("--coeffs", coeffs, "transition coefficient values")
      ->expected(-1)
      ->delimiter(',');
  taps->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*design) return cmd_design(flags, g, format, units, out_path);
    if (*verify) return cmd_verify(flags, coeffs, g, format, units, out_path);
    if (*table) {
      std::optional<int> nf;
      if (table_n->count() > 0) nf = n_filter;
      return cmd_table(preset, nf, g, format, fixtures_path, out_path);
    }
    if (*sweep) return cmd_sweep_grid(flags, grids, format, out_path);
    if (*response) return cmd_response(flags, coeffs, step, range, units, out_path);
    if (*taps) return cmd_export_taps(flags, coeffs, out_path);
  } catch (const fsf::NoConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
