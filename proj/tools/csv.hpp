#pragma once

#include <string>
#include <vector>

#include "qzs/diagnostics.hpp"
#include "qzs/solver.hpp"

namespace qzs::cli {

/// "%.17g"
std::string fmt(double v);

/// Rows joined with ',' and terminated by '\n'.
class CsvBuilder {
 public:
  void header(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& cells);
  void comment(const std::string& text);
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

/// time, then u_re(k), u_im(k), n_re(k), n_im(k), dn_re(k), dn_im(k) for
/// k = -M/2 .. M/2-1.
std::string trajectory_csv(const Trajectory& traj);
Trajectory parse_trajectory_csv(const std::string& text);

/// t, mass, energy and the six energy terms.
std::string conserved_csv(const std::vector<ConservedQuantities>& rows);

}  // namespace qzs::cli
