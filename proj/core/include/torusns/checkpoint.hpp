#pragma once

#include <iosfwd>
#include <string>

#include "torusns/mode_field.hpp"

namespace torusns {

// JSON checkpoint {dimension, truncation, torus_diameter, modes: [...]}.
// Each mode entry is [[a_1..a_D], [re,im], ... D pairs]; modes whose
// amplitudes are all below 1e-14 are omitted.
void write_checkpoint(const ModeField& field, std::ostream& os);
void write_checkpoint_file(const ModeField& field, const std::string& path);
ModeField read_checkpoint(std::istream& is);
ModeField read_checkpoint_file(const std::string& path);

// CSV shell spectrum with columns shell_radius, max_amp, l2_amp.
void write_shell_spectrum_csv(const ModeField& field, std::ostream& os);

}  // namespace torusns
