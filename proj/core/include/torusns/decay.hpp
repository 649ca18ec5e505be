#pragma once

#include "torusns/mode_field.hpp"

namespace torusns {

// A pair (C, p) asserting |v_{i,a}| <= C/(1+|a|^p) over the lattice.
struct DecayEnvelope {
  double constant = 0.0;
  double order = 0.0;
};

struct EnvelopeFit {
  // Tightest C such that |v| <= C/(1+|a|^p_target): max_{i,a} |v_{i,a}| (1+|a|^p_target).
  double tightest_C = 0.0;
  LatticeIndex attaining;
  double p_target = 0.0;
  // Least-squares slope of log(shell max amplitude) vs log(1+|a|) over shells
  // with |a| >= 1; the zero shell is excluded, as are all-zero shells.
  double fitted_order = 0.0;
  bool order_defined = false;
  int shells_used = 0;
};

// Throws ParameterError on the all-zero field (undefined fit).
EnvelopeFit fit_decay_envelope(const ModeField& field, double p_target);

bool envelope_holds(const ModeField& field, double C, double p, double rel_slack = 0.0);

// Truncation tail C/(1 + M^p) reported alongside lattice-wide checks.
double envelope_tail(double C, double p, int truncation);

}  // namespace torusns
