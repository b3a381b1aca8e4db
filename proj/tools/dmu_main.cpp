#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dmu/csv.hpp"
#include "dmu/errors.hpp"
#include "dmu/sweep.hpp"

namespace {

/// Structurally bad command-line input, distinct from domain errors so it
/// can map to the bad-arguments exit code.
struct BadArgs {
  std::string message;
};

double parse_number(const std::string& s) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw BadArgs{"not a number: '" + s + "'"};
  }
  if (pos != s.size()) throw BadArgs{"not a number: '" + s + "'"};
  return v;
}

int parse_count(const std::string& s) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw BadArgs{"not a count: '" + s + "'"};
  }
  if (pos != s.size() || v < 1 || v > 1000000) throw BadArgs{"not a count: '" + s + "'"};
  return static_cast<int>(v);
}

/// "x" for a single value or "min:max:count" for an inclusive linear range.
std::vector<double> parse_axis(const std::string& text) {
  const std::vector<std::string> parts = dmu::split_line(text, ':');
  if (parts.size() == 1) return {parse_number(parts[0])};
  if (parts.size() == 3) {
    return dmu::linear_range(parse_number(parts[0]), parse_number(parts[1]),
                             parse_count(parts[2]));
  }
  throw BadArgs{"axis must be 'x' or 'min:max:count', got '" + text + "'"};
}

std::vector<double> axis_or_default(const std::string& text, const std::vector<double>& fallback) {
  return text.empty() ? fallback : parse_axis(text);
}

double scalar_axis(const std::string& text, const char* flag) {
  const std::vector<double> vals = parse_axis(text);
  if (vals.size() != 1) throw BadArgs{std::string(flag) + " takes a single value here"};
  return vals[0];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Thermal entanglement, mixedness, and entropic-uncertainty quantities for the "
      "two-qubit Heisenberg chain with antisymmetric exchange"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file mirroring the flags (flags win)");

  std::string j_axis;
  std::string d_axis;
  std::string t_axis;
  std::string out_path;
  int precision = 12;

  CLI::App* report = app.add_subcommand("report", "one row at a single (J, D, T) point");
  report->add_option("--j", j_axis, "coupling J")->default_str("1");
  report->add_option("--d", d_axis, "interaction strength D")->default_str("1");
  report->add_option("--t", t_axis, "temperature T")->default_str("1");
  report->add_option("--out", out_path, "write to file instead of stdout");
  report->add_option("--precision", precision, "significant digits")->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "grid sweep to CSV");
  sweep->add_option("--j", j_axis, "J axis: 'x' or 'min:max:count' (default 60 points over "
                                   "[-3, 3] skipping 0)");
  sweep->add_option("--d", d_axis, "D axis (default 0:3:61)");
  sweep->add_option("--t", t_axis, "T axis (default 0.05:5:100)");
  sweep->add_option("--out", out_path, "output path")->default_str("sweep.csv");
  sweep->add_option("--precision", precision, "significant digits")->capture_default_str();

  std::string figure_name;
  CLI::App* figure = app.add_subcommand("figure", "emit one published dataset");
  figure->add_option("id", figure_name, "fig2..fig10")->required();
  figure->add_option("--out", out_path, "output path (default <id>.csv)");
  figure->add_option("--precision", precision, "significant digits")->capture_default_str();

  double vc_d = 1.0;
  double vc_j1 = 0.5;
  double vc_j2 = 2.0;
  double vc_tmin = 0.05;
  double vc_tmax = 10.0;
  int vc_tcount = 200;
  CLI::App* vcollapse = app.add_subcommand(
      "vcollapse", "check that V over mixedness depends only on the sign of J");
  vcollapse->add_option("--d", vc_d, "interaction strength D")->capture_default_str();
  vcollapse->add_option("--j1", vc_j1, "first coupling")->capture_default_str();
  vcollapse->add_option("--j2", vc_j2, "second coupling (same sign)")->capture_default_str();
  vcollapse->add_option("--tmin", vc_tmin, "low end of T grid, in units of |J|")
      ->capture_default_str();
  vcollapse->add_option("--tmax", vc_tmax, "high end of T grid, in units of |J|")
      ->capture_default_str();
  vcollapse->add_option("--tcount", vc_tcount, "log-spaced grid points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (report->parsed()) {
      const dmu::ModelParams p{scalar_axis(j_axis.empty() ? "1" : j_axis, "--j"),
                               scalar_axis(d_axis.empty() ? "1" : d_axis, "--d"),
                               scalar_axis(t_axis.empty() ? "1" : t_axis, "--t")};
      const std::string text = dmu::serialize_rows({dmu::run_report(p)}, precision);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        dmu::write_text_atomic(out_path, text);
        std::cout << "wrote 1 row to " << out_path << "\n";
      }
    } else if (sweep->parsed()) {
      const dmu::GridSpec defaults = dmu::default_grid();
      dmu::GridSpec g;
      g.j_values = axis_or_default(j_axis, defaults.j_values);
      g.d_values = axis_or_default(d_axis, defaults.d_values);
      g.t_values = axis_or_default(t_axis, defaults.t_values);
      if (out_path.empty()) out_path = "sweep.csv";
      const size_t n = dmu::run_sweep(g, out_path, precision, dmu::Execution::parallel);
      std::cout << "wrote " << n << " rows to " << out_path << "\n";
    } else if (figure->parsed()) {
      const auto id = dmu::parse_figure_id(figure_name);
      if (!id) throw BadArgs{"unknown figure id '" + figure_name + "' (fig2..fig10)"};
      if (out_path.empty()) out_path = figure_name + ".csv";
      const size_t n = dmu::figure_data(*id, out_path, precision, dmu::Execution::parallel);
      std::cout << "wrote " << n << " rows to " << out_path << "\n";
    } else if (vcollapse->parsed()) {
      const std::vector<double> grid = dmu::log_spaced(vc_tmin, vc_tmax, vc_tcount);
      const double dev = dmu::v_collapse_check(vc_d, vc_j1, vc_j2, grid);
      std::cout << "max |V(j1) - V(j2)| over the shared mixedness range: "
                << dmu::format_value(dev, 6) << "\n"
                << "collapse within 1e-3: " << (dev <= 1e-3 ? "yes" : "no") << "\n";
    }
  } catch (const BadArgs& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const dmu::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const dmu::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
