#include "dmu/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <sstream>

#include "dmu/constants.hpp"
#include "dmu/csv.hpp"

namespace dmu {

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {"J",   "D",   "T",   "beta", "delta",
                                                "theta", "C",   "Y",   "hRB",  "hSB",
                                                "hAB", "W",   "L",   "U",    "V"};
  return cols;
}

SweepRow run_report(const ModelParams& p) {
  const UncertaintyReport r = uncertainty_report(p);
  SweepRow row;
  row.J = p.J;
  row.D = p.D;
  row.T = p.T;
  row.beta = p.beta();
  row.delta = p.delta();
  row.theta = p.theta();
  row.C = r.C;
  row.Y = r.Y;
  row.hRB = r.hRB;
  row.hSB = r.hSB;
  row.hAB = r.hAB;
  row.W = r.W;
  row.L = r.L;
  row.U = r.U;
  row.V = r.V;
  return row;
}

std::vector<double> linear_range(double min, double max, int count) {
  if (count < 1) throw ParamDomainError("range count must be >= 1");
  if (count == 1) return {min};
  if (!(min < max)) throw ParamDomainError("range needs min < max");
  std::vector<double> out(count);
  const double step = (max - min) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = min + i * step;
  out.back() = max;
  return out;
}

std::vector<double> log_spaced(double min, double max, int count) {
  if (count < 2) throw ParamDomainError("log range count must be >= 2");
  if (!(min > 0.0 && min < max)) throw ParamDomainError("log range needs 0 < min < max");
  std::vector<double> out = linear_range(std::log(min), std::log(max), count);
  for (auto& x : out) x = std::exp(x);
  out.front() = min;
  out.back() = max;
  return out;
}

void GridSpec::validate() const {
  if (j_values.empty() || d_values.empty() || t_values.empty()) {
    throw ParamDomainError("grid axes must be non-empty");
  }
  for (const double j : j_values) {
    ModelParams{j, 0.0, 1.0}.validate();
  }
  for (const double d : d_values) {
    ModelParams{1.0, d, 1.0}.validate();
  }
  for (const double t : t_values) {
    ModelParams{1.0, 0.0, t}.validate();
  }
}

GridSpec default_grid() {
  GridSpec g;
  const std::vector<double> neg = linear_range(-3.0, -0.1, 30);
  const std::vector<double> pos = linear_range(0.1, 3.0, 30);
  g.j_values = neg;
  g.j_values.insert(g.j_values.end(), pos.begin(), pos.end());
  g.d_values = linear_range(0.0, 3.0, 61);
  g.t_values = linear_range(0.05, 5.0, 100);
  return g;
}

std::vector<SweepRow> evaluate_grid(const GridSpec& g, Execution mode) {
  g.validate();
  const std::int64_t nj = static_cast<std::int64_t>(g.j_values.size());
  const std::int64_t nd = static_cast<std::int64_t>(g.d_values.size());
  const std::int64_t nt = static_cast<std::int64_t>(g.t_values.size());
  const std::int64_t n = nj * nd * nt;
  std::vector<SweepRow> rows(n);

  const auto point = [&](std::int64_t idx) {
    const ModelParams p{g.j_values[idx / (nd * nt)], g.d_values[(idx / nt) % nd],
                        g.t_values[idx % nt]};
    rows[idx] = run_report(p);
  };

  if (mode == Execution::serial) {
    for (std::int64_t idx = 0; idx < n; ++idx) point(idx);
    return rows;
  }

  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t idx = 0; idx < n; ++idx) {
    try {
      point(idx);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

std::string serialize_rows(const std::vector<SweepRow>& rows, int precision) {
  std::ostringstream out;
  const auto& cols = sweep_columns();
  for (size_t i = 0; i < cols.size(); ++i) {
    if (i) out << ',';
    out << cols[i];
  }
  out << '\n';
  for (const SweepRow& r : rows) {
    const double vals[13] = {r.J,   r.D,   r.T,   r.beta, r.delta, r.theta, r.C,
                             r.Y,   r.hRB, r.hSB, r.hAB,  r.W,     r.L};
    for (const double v : vals) out << format_value(v, precision) << ',';
    if (r.U) out << format_value(*r.U, precision);
    out << ',' << format_value(r.V, precision) << '\n';
  }
  return out.str();
}

namespace {

double parse_field(const std::string& s) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw IoError("malformed numeric field: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw IoError("malformed numeric field: " + s);
  }
}

}  // namespace

std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path) {
  std::istringstream in(read_text(path));
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty csv: " + path.string());
  if (split_line(line, ',') != sweep_columns()) {
    throw IoError("unexpected csv header: " + path.string());
  }

  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_line(line, ',');
    if (f.size() != sweep_columns().size()) {
      throw IoError("wrong field count in row: " + line);
    }
    SweepRow r;
    r.J = parse_field(f[0]);
    r.D = parse_field(f[1]);
    r.T = parse_field(f[2]);
    r.beta = parse_field(f[3]);
    r.delta = parse_field(f[4]);
    r.theta = parse_field(f[5]);
    r.C = parse_field(f[6]);
    r.Y = parse_field(f[7]);
    r.hRB = parse_field(f[8]);
    r.hSB = parse_field(f[9]);
    r.hAB = parse_field(f[10]);
    r.W = parse_field(f[11]);
    r.L = parse_field(f[12]);
    if (!f[13].empty()) r.U = parse_field(f[13]);
    r.V = parse_field(f[14]);
    rows.push_back(r);
  }
  return rows;
}

size_t run_sweep(const GridSpec& g, const std::filesystem::path& out, int precision,
                 Execution mode) {
  const std::vector<SweepRow> rows = evaluate_grid(g, mode);
  write_text_atomic(out, serialize_rows(rows, precision));
  return rows.size();
}

std::optional<FigureId> parse_figure_id(std::string_view name) {
  static const std::pair<std::string_view, FigureId> table[] = {
      {"fig2", FigureId::fig2},  {"fig3", FigureId::fig3}, {"fig4", FigureId::fig4},
      {"fig5", FigureId::fig5},  {"fig6", FigureId::fig6}, {"fig7", FigureId::fig7},
      {"fig8", FigureId::fig8},  {"fig9", FigureId::fig9}, {"fig10", FigureId::fig10}};
  for (const auto& [key, id] : table) {
    if (name == key) return id;
  }
  return std::nullopt;
}

GridSpec figure_grid(FigureId id) {
  GridSpec g = default_grid();
  switch (id) {
    case FigureId::fig2:
    case FigureId::fig3:
    case FigureId::fig5:
    case FigureId::fig7:
      g.t_values = {0.5, 1.0};
      return g;
    case FigureId::fig4:
    case FigureId::fig6:
    case FigureId::fig8:
    case FigureId::fig9:
      g.j_values = {1.0};
      g.d_values = {1.0};
      return g;
    case FigureId::fig10:
      g.j_values = {-1.0, 1.0};
      return g;
  }
  throw ParamDomainError("unknown figure id");
}

size_t figure_data(FigureId id, const std::filesystem::path& out, int precision,
                   Execution mode) {
  return run_sweep(figure_grid(id), out, precision, mode);
}

namespace {

struct Curve {
  std::vector<double> y;
  std::vector<double> v;
};

Curve collapse_curve(double d, double j, const std::vector<double>& t_grid) {
  Curve c;
  c.y.reserve(t_grid.size());
  c.v.reserve(t_grid.size());
  for (const double t : t_grid) {
    const UncertaintyReport r = uncertainty_report(ModelParams{j, d, t * std::abs(j)});
    c.y.push_back(r.Y);
    c.v.push_back(r.V);
  }
  std::vector<size_t> order(c.y.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return c.y[a] < c.y[b]; });
  Curve sorted;
  sorted.y.reserve(order.size());
  sorted.v.reserve(order.size());
  for (const size_t i : order) {
    if (!sorted.y.empty() && c.y[i] == sorted.y.back()) continue;
    sorted.y.push_back(c.y[i]);
    sorted.v.push_back(c.v[i]);
  }
  return sorted;
}

double interpolate(const Curve& c, double y) {
  const auto hi = std::lower_bound(c.y.begin(), c.y.end(), y);
  if (hi == c.y.begin()) return c.v.front();
  if (hi == c.y.end()) return c.v.back();
  const size_t i1 = static_cast<size_t>(hi - c.y.begin());
  if (c.y[i1] == y) return c.v[i1];
  const size_t i0 = i1 - 1;
  const double span = c.y[i1] - c.y[i0];
  if (span <= 0.0) return c.v[i0];
  const double w = (y - c.y[i0]) / span;
  return (1.0 - w) * c.v[i0] + w * c.v[i1];
}

}  // namespace

double v_collapse_check(double d, double j1, double j2, const std::vector<double>& t_grid) {
  if (!(std::isfinite(j1) && std::isfinite(j2)) || j1 * j2 <= 0.0) {
    throw ParamDomainError("collapse check needs two nonzero couplings of equal sign");
  }
  if (t_grid.size() < 20) throw ParamDomainError("collapse check needs >= 20 grid points");
  double t_min = t_grid.front();
  double t_max = t_grid.front();
  for (const double t : t_grid) {
    if (!(std::isfinite(t) && t > 0.0)) throw ParamDomainError("grid temperatures must be > 0");
    t_min = std::min(t_min, t);
    t_max = std::max(t_max, t);
  }
  if (t_max < 10.0 * t_min) {
    throw ParamDomainError("grid must span at least a decade in temperature");
  }

  const Curve c1 = collapse_curve(d, j1, t_grid);
  const Curve c2 = collapse_curve(d, j2, t_grid);
  const double y_lo = std::max(c1.y.front(), c2.y.front());
  const double y_hi = std::min(c1.y.back(), c2.y.back());

  size_t inside1 = 0;
  size_t inside2 = 0;
  double dev = 0.0;
  for (size_t i = 0; i < c1.y.size(); ++i) {
    if (c1.y[i] < y_lo || c1.y[i] > y_hi) continue;
    ++inside1;
    dev = std::max(dev, std::abs(c1.v[i] - interpolate(c2, c1.y[i])));
  }
  for (size_t i = 0; i < c2.y.size(); ++i) {
    if (c2.y[i] < y_lo || c2.y[i] > y_hi) continue;
    ++inside2;
    dev = std::max(dev, std::abs(c2.v[i] - interpolate(c1, c2.y[i])));
  }
  if (std::min(inside1, inside2) < 10) {
    throw InsufficientOverlapError("curves share fewer than 10 points in mixedness range");
  }
  return dev;
}

}  // namespace dmu
