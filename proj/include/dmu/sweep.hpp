#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmu/model.hpp"
#include "dmu/uncertainty.hpp"

namespace dmu {

/// One CSV row: inputs, derived parameters, and every computed quantity at a
/// single (J, D, T) point. U is empty in the serialized form when the bound
/// W is zero and the ratio is undefined.
struct SweepRow {
  double J = 0.0;
  double D = 0.0;
  double T = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  double theta = 0.0;
  double C = 0.0;
  double Y = 0.0;
  double hRB = 0.0;
  double hSB = 0.0;
  double hAB = 0.0;
  double W = 0.0;
  double L = 0.0;
  std::optional<double> U;
  double V = 0.0;
};

/// Column names in serialization order.
const std::vector<std::string>& sweep_columns();

/// Full evaluation at one parameter point.
SweepRow run_report(const ModelParams& p);

/// Evenly spaced values from min to max inclusive; count 1 yields {min}.
std::vector<double> linear_range(double min, double max, int count);

/// Log-spaced values from min to max inclusive, min > 0, count >= 2.
std::vector<double> log_spaced(double min, double max, int count);

/// Cartesian parameter grid, swept in lexicographic (J, D, T) order.
struct GridSpec {
  std::vector<double> j_values;
  std::vector<double> d_values;
  std::vector<double> t_values;

  /// Throws ParamDomainError for empty axes, j = 0, d < 0, or t <= 0.
  void validate() const;
  size_t size() const { return j_values.size() * d_values.size() * t_values.size(); }
};

/// Grid covering the default plotted ranges: J in [-3, 3] without 0
/// (60 points), D in [0, 3] (61 points), T in [0.05, 5] (100 points).
GridSpec default_grid();

enum class Execution { serial, parallel };

/// All grid rows in lexicographic (J, D, T) order. The parallel mode
/// distributes points across threads but fills an index-addressed buffer, so
/// its result is identical to the serial one.
std::vector<SweepRow> evaluate_grid(const GridSpec& g, Execution mode);

std::string serialize_rows(const std::vector<SweepRow>& rows, int precision);
std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path);

/// Evaluates the grid and writes the CSV atomically; returns the row count.
size_t run_sweep(const GridSpec& g, const std::filesystem::path& out, int precision,
                 Execution mode);

/// The nine published datasets: 2/3/5/7 sweep (J, D) at T in {0.5, 1};
/// 4/6/8/9 sweep T at J = 1, D = 1; 10 sweeps (D, T) at J = +1 and J = -1.
enum class FigureId { fig2, fig3, fig4, fig5, fig6, fig7, fig8, fig9, fig10 };

std::optional<FigureId> parse_figure_id(std::string_view name);
GridSpec figure_grid(FigureId id);
size_t figure_data(FigureId id, const std::filesystem::path& out, int precision, Execution mode);

/// Tests whether the V-versus-Y curve at fixed d is independent of |J|:
/// computes (Y, V) curves for j1 and j2 over T = t * |J| for each t in
/// t_grid, interpolates one curve's V over the other's Y values on their
/// shared Y range, and returns the largest pointwise |V1 - V2|.
/// Requires j1, j2 of equal sign and nonzero, at least 20 grid points
/// spanning at least a decade; throws InsufficientOverlapError when the
/// curves share fewer than 10 interpolation points.
double v_collapse_check(double d, double j1, double j2, const std::vector<double>& t_grid);

}  // namespace dmu
