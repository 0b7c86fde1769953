#pragma once

#include <span>
#include <string>

#include "qsimplex/bell.hpp"
#include "qsimplex/export.hpp"
#include "qsimplex/measure.hpp"
#include "qsimplex/protocol.hpp"
#include "qsimplex/separability.hpp"

namespace qsimplex {

/// Fifteen significant digits, dot decimal, locale independent.
std::string format_number(double value);

std::string to_json(const ClassifiedPoint& p);
std::string to_json(const Ensemble& e);
std::string to_json(const ProtocolTrace& t);
std::string to_json(const BellSetting& s);

/// Header c1,c2,c3,n,physical,separable,bound,bell,purity,mixedness,entanglement.
std::string grid_to_csv(std::span<const ClassifiedPoint> points);
std::string grid_to_json(std::span<const ClassifiedPoint> points);

/// One row per protocol step: step,e (step 0 is the initial state).
std::string trace_to_csv(const ProtocolTrace& t);

/// Header parameter,c1,c2,c3,mixedness,entanglement,entanglement_per_x.
std::string curve_to_csv(std::span<const CurvePoint> curve);

struct MeasureReport {
  int n = 0;
  CVec c;
  double e_closed = 0.0;
  double b_bound = 0.0;      // sqrt of the sum over operators; NaN when not computed
  std::string b_operators;   // which operator set produced b_bound
  InfoContent info;
};

std::string to_json(const MeasureReport& r);

struct BellReport {
  int n = 0;
  CVec c;
  double m = 0.0;
  Violation max_violation{};
  OptimizedSetting optimized{};
};

std::string to_json(const BellReport& r);

}  // namespace qsimplex
