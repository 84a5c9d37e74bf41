#include "csv.hpp"

#include <cstdio>
#include <sstream>

#include "config.hpp"

namespace qzs::cli {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvBuilder::header(const std::vector<std::string>& names) { row(names); }

void CsvBuilder::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text_ += ',';
    text_ += fmt(values[i]);
  }
  text_ += '\n';
}

void CsvBuilder::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

void CsvBuilder::comment(const std::string& text) { text_ += "# " + text + '\n'; }

namespace {

const char* kFields[] = {"u", "n", "dn"};

}  // namespace

std::string trajectory_csv(const Trajectory& traj) {
  CsvBuilder csv;
  if (traj.empty()) return csv.str();
  const TorusGrid& g = traj.front().grid();
  std::vector<std::string> names{"time"};
  for (const char* f : kFields)
    for (int k = g.min_frequency(); k <= g.max_frequency(); ++k) {
      names.push_back(std::string(f) + "_re(" + std::to_string(k) + ")");
      names.push_back(std::string(f) + "_im(" + std::to_string(k) + ")");
    }
  csv.header(names);
  std::vector<double> vals;
  for (const QZSState& s : traj) {
    vals.assign(1, s.time);
    for (const SpectralField* f : {&s.u, &s.n, &s.dn})
      for (int k = g.min_frequency(); k <= g.max_frequency(); ++k) {
        vals.push_back((*f)(k).real());
        vals.push_back((*f)(k).imag());
      }
    csv.row(vals);
  }
  return csv.str();
}

Trajectory parse_trajectory_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw UsageError("trajectory CSV is empty");
  std::size_t columns = 1;
  for (char c : line) columns += c == ',';
  if (columns < 7 || (columns - 1) % 6 != 0 || line.rfind("time,u_re(", 0) != 0)
    throw UsageError("trajectory CSV header not recognised");
  const int M = int((columns - 1) / 6);
  TorusGrid grid = [&] {
    try {
      return TorusGrid(M);
    } catch (const Error&) {
      throw UsageError("trajectory CSV has an unsupported grid size " + std::to_string(M));
    }
  }();
  Trajectory traj;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> vals;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ','))
      vals.push_back(parse_double(cell, "trajectory CSV line " + std::to_string(lineno)));
    if (vals.size() != columns)
      throw UsageError("trajectory CSV line " + std::to_string(lineno) + " has " +
                       std::to_string(vals.size()) + " cells, expected " + std::to_string(columns));
    QZSState s = QZSState::zero(grid, vals[0]);
    std::size_t c = 1;
    for (SpectralField* f : {&s.u, &s.n, &s.dn})
      for (int k = grid.min_frequency(); k <= grid.max_frequency(); ++k, c += 2)
        (*f)(k) = cplx(vals[c], vals[c + 1]);
    traj.push_back(std::move(s));
  }
  if (traj.empty()) throw UsageError("trajectory CSV has no rows");
  return traj;
}

std::string conserved_csv(const std::vector<ConservedQuantities>& rows) {
  CsvBuilder csv;
  csv.header({"t", "mass", "energy", "kinetic", "dispersion", "potential", "wave_kinetic",
              "wave_dispersion", "interaction"});
  for (const ConservedQuantities& q : rows)
    csv.row({q.time, q.mass, q.energy, q.terms.kinetic, q.terms.dispersion, q.terms.potential,
             q.terms.wave_kinetic, q.terms.wave_dispersion, q.terms.interaction});
  return csv.str();
}

}  // namespace qzs::cli
