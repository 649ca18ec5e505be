#pragma once

#include <complex>
#include <vector>

#include "torusns/lattice.hpp"

namespace torusns {

using Complex = std::complex<double>;

// Truncated lattice of complex Fourier amplitudes v_{i,alpha} for a
// D-component velocity field on the torus of diameter l. The represented
// physical field is real-valued, so v_{i,-alpha} = conj(v_{i,alpha}) is an
// invariant every operation preserves.
class ModeField {
 public:
  ModeField(int dim, int truncation, double torus_diameter = 1.0);

  int dim() const { return lat_.dim(); }
  int truncation() const { return lat_.truncation(); }
  double torus_diameter() const { return diameter_; }
  const Lattice& lattice() const { return lat_; }
  std::size_t mode_count() const { return lat_.size(); }

  Complex at(std::size_t mode_offset, int i) const { return amp_[mode_offset * lat_.dim() + i]; }
  Complex& at(std::size_t mode_offset, int i) { return amp_[mode_offset * lat_.dim() + i]; }
  Complex at(const LatticeIndex& a, int i) const { return at(lat_.offset(a), i); }
  Complex& at(const LatticeIndex& a, int i) { return at(lat_.offset(a), i); }

  const std::vector<Complex>& raw() const { return amp_; }
  std::vector<Complex>& raw() { return amp_; }

  // Largest |v_{i,-a} - conj(v_{i,a})| over the lattice.
  double reality_defect() const;
  // Symmetrizes v_a <- (v_a + conj(v_{-a}))/2 in place.
  void enforce_reality();

  // Largest |sum_j a_j v_{j,a}| relative to the field scale (0 for the zero field).
  double divergence_defect() const;
  bool is_divergence_free(double rel_tol = 1e-12) const;

  double max_abs() const;
  // sqrt(sum_{i,a} |v_{i,a}|^2), the mode-side L2 norm.
  double l2() const;
  bool all_finite() const;

  void set_zero_modes(const std::vector<Complex>& v0);
  std::vector<Complex> zero_modes() const;

  ModeField& operator+=(const ModeField& o);
  ModeField& operator-=(const ModeField& o);
  ModeField& operator*=(double s);
  // this += s * o
  void axpy(double s, const ModeField& o);

  friend ModeField operator-(ModeField a, const ModeField& b) {
    a -= b;
    return a;
  }
  friend ModeField operator+(ModeField a, const ModeField& b) {
    a += b;
    return a;
  }

 private:
  Lattice lat_;
  double diameter_;
  std::vector<Complex> amp_;
};

// Checks dims, truncations and diameters match; throws ParameterError otherwise.
void require_compatible(const ModeField& a, const ModeField& b, const char* where);

}  // namespace torusns
