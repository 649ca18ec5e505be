#pragma once

#include <cstdint>

#include "torusns/decay.hpp"
#include "torusns/mode_field.hpp"

namespace torusns {

// Random divergence-free data inside a requested decay envelope.
struct EnvelopeSpec {
  double constant = 1.0;
  double order = 5.0;
  // Zero the alpha=0 modes (mean velocity); keeps every retained mode damped.
  bool zero_mean = true;
};

// Deterministic per seed; output satisfies reality, divergence-freeness and
// |v_{i,a}| <= constant/(1+|a|^order).
ModeField synthesize_envelope(int dim, int truncation, double torus_diameter,
                              const EnvelopeSpec& spec, std::uint64_t seed);

// D=3 Taylor-Green-type single-shell profile on modes (+-1,+-1,+-1).
ModeField taylor_green(int truncation, double torus_diameter = 1.0, double scale = 1.0);

}  // namespace torusns
