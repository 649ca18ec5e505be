#include "torusns/synth.hpp"

#include <cmath>
#include <random>

#include "torusns/errors.hpp"
#include "torusns/leray.hpp"

namespace torusns {

ModeField synthesize_envelope(int dim, int truncation, double torus_diameter,
                              const EnvelopeSpec& spec, std::uint64_t seed) {
  if (!(spec.constant > 0.0)) throw ParameterError("synthesize_envelope: constant must be > 0");
  if (!(spec.order > 0.0)) throw ParameterError("synthesize_envelope: order must be > 0");

  ModeField f(dim, truncation, torus_diameter);
  const Lattice& lat = f.lattice();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> mag(0.25, 1.0);

  // Fill canonical half-lattice (offset < negated offset) in a fixed order,
  // mirror conjugates; amplitudes sit inside the envelope before projection.
  for (std::size_t o = 0; o < lat.size(); ++o) {
    const std::size_t n = lat.negate(o);
    if (n < o) continue;
    const LatticeIndex a = lat.index(o);
    const long long n2 = a.norm2();
    const double cap = spec.constant / (1.0 + std::pow(static_cast<double>(n2), 0.5 * spec.order));
    for (int i = 0; i < dim; ++i) {
      if (n == o) {
        // Self-conjugate mode (alpha = 0): real amplitude.
        f.at(o, i) = Complex(mag(rng) * cap, 0.0);
      } else {
        const double m = mag(rng) * cap;
        const double p = phase(rng);
        f.at(o, i) = Complex(m * std::cos(p), m * std::sin(p));
        f.at(n, i) = std::conj(f.at(o, i));
      }
    }
  }
  if (spec.zero_mean) {
    f.set_zero_modes(std::vector<Complex>(static_cast<std::size_t>(dim), Complex(0.0, 0.0)));
  }
  // Mode-wise orthogonal projection can only shrink amplitudes, so the
  // envelope survives.
  return leray_project(f);
}

ModeField taylor_green(int truncation, double torus_diameter, double scale) {
  ModeField f(3, truncation, torus_diameter);
  // u1 = s sin(2pi x/l) cos(2pi y/l) cos(2pi z/l)
  // u2 = -s cos(2pi x/l) sin(2pi y/l) cos(2pi z/l)
  // u3 = 0
  for (int a = -1; a <= 1; a += 2) {
    for (int b = -1; b <= 1; b += 2) {
      for (int c = -1; c <= 1; c += 2) {
        LatticeIndex idx{a, b, c};
        f.at(idx, 0) = Complex(0.0, -scale * a / 8.0);
        f.at(idx, 1) = Complex(0.0, scale * b / 8.0);
      }
    }
  }
  return f;
}

}  // namespace torusns
