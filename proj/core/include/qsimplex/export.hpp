#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qsimplex/separability.hpp"
#include "qsimplex/simplex.hpp"

namespace qsimplex {

/// A grid point in canonical coordinates with every derived label.
/// Unphysical points carry entanglement 0 and no Bell label; their purity and
/// mixedness are the formula values of the (non-positive) operator.
struct ClassifiedPoint {
  CVec c;
  int n = 0;
  Classification label = Classification::Unphysical;
  bool physical = false;
  bool separable = false;
  bool entangled = false;
  bool bound_entangled = false;
  bool bell_violating = false;
  double purity = 0.0;
  double mixedness = 0.0;
  double entanglement = 0.0;
};

ClassifiedPoint classify_point(const CVec& c, int n, Convention convention = Convention::Canonical);

/// resolution^3 points c_k = -1 + 2k/(resolution-1), row-major with c1 slowest.
std::vector<ClassifiedPoint> sample_grid(int n, int resolution);

struct CurvePoint {
  double parameter;      // c on the Smolin line, t on the edge
  CVec c;
  double mixedness;
  double entanglement;   // with the n = 2 factor applied
  double entanglement_per_x;
};

/// (c, -c, c) for c = k/(samples-1).
std::vector<CurvePoint> smolin_curve(int n, int samples);

/// (1, -1+2t, 1-2t) for t = k/(samples-1), between two vertices.
std::vector<CurvePoint> edge_curve(int n, int samples);

/// Smolin-line entanglement as a function of |c|^2.
double smolin_envelope(double norm_squared, int n);
/// Edge entanglement as a function of |c|^2.
double edge_envelope(double norm_squared, int n);

struct EnvelopeReport {
  bool ok = true;
  std::size_t checked = 0;
  double worst_excess = 0.0;     // largest distance outside the band, 0 if inside
  std::size_t worst_index = 0;   // index into the input list
  std::string message;
};

/// Every physical point of qubit count n has its (mixedness, E) between the
/// edge curve (below) and the Smolin curve (above), with 1e-9 slack.
EnvelopeReport envelope_check(std::span<const ClassifiedPoint> points, int n);

}  // namespace qsimplex
