#pragma once

#include <iosfwd>
#include <vector>

#include "steklov/geometry.hpp"

namespace steklov {

struct SweepRow {
  double delta = 0.0;
  double E = 0.0;
  double F = 0.0;
  double bound_A = 0.0;
  double P = 0.0;
  double Q = 0.0;
  double bound_C = 0.0;
};

struct SweepTable {
  double window = 0.0;    // sup of the E-window; rows sit at window * i / (samples + 1)
  bool has_ricci = false; // P, Q, bound_C present (gate met and P finite on every row)
  std::vector<SweepRow> rows;
};

/// Kernel landscape over the delta window, rows evaluated concurrently.
/// Requires samples >= 2 and a geometry with kappa_upper > 0.
[[nodiscard]] SweepTable delta_sweep(const GeometricData& geom, int samples);

namespace serial {
[[nodiscard]] SweepTable delta_sweep(const GeometricData& geom, int samples);
}  // namespace serial

/// CSV with header delta,E,F,bound_A[,P,Q,bound_C] at 17 significant digits.
void write_csv(std::ostream& os, const SweepTable& table);

}  // namespace steklov
