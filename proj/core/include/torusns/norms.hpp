#pragma once

#include <map>
#include <vector>

#include "torusns/mode_field.hpp"

namespace torusns {

// Dual Sobolev norm sqrt( sum_{i,a} |v_{i,a}|^2 (1 + |a|^{2m}) ) over the
// truncated lattice, the computable proxy for H^m regularity. The zero mode
// carries weight 1 for every m so the family is nondecreasing in m.
double dual_sobolev_norm(const ModeField& field, int m);

// max_{i,a} |v_{i,a}|
double sup_mode(const ModeField& field);

struct NormReport {
  std::map<int, double> per_order;  // m -> h^m
  double sup_mode = 0.0;
};

NormReport norm_report(const ModeField& field, int m_max);

// Shell decomposition by exact squared radius |a|^2.
struct ShellSpectrum {
  std::vector<long long> radius2;  // ascending
  std::vector<double> radius;
  std::vector<double> max_amp;  // max_{i, a in shell} |v_{i,a}|
  std::vector<double> l2_amp;   // sqrt(sum_{i, a in shell} |v_{i,a}|^2)
};

ShellSpectrum shell_spectrum(const ModeField& field);

// Energy fraction carried by shells with |a| > cut_radius.
double high_shell_fraction(const ModeField& field, double cut_radius);

}  // namespace torusns
