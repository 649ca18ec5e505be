#pragma once

#include "torusns/mode_field.hpp"

namespace torusns {

// Fourier-side Leray projector: v_a -> v_a - a (a . v_a)/|a|^2, zero mode
// unchanged. Idempotent, preserves reality, output is divergence-free.
ModeField leray_project(const ModeField& field);

}  // namespace torusns
