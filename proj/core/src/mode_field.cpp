#include "torusns/mode_field.hpp"

#include <algorithm>
#include <cmath>

#include "torusns/errors.hpp"

namespace torusns {

ModeField::ModeField(int dim, int truncation, double torus_diameter)
    : lat_(dim, truncation), diameter_(torus_diameter) {
  if (!(torus_diameter > 0.0)) throw ParameterError("torus diameter must be positive");
  amp_.assign(lat_.size() * static_cast<std::size_t>(dim), Complex(0.0, 0.0));
}

double ModeField::reality_defect() const {
  double worst = 0.0;
  const int d = dim();
  for (std::size_t o = 0; o < lat_.size(); ++o) {
    const std::size_t n = lat_.negate(o);
    if (n < o) continue;
    for (int i = 0; i < d; ++i) {
      worst = std::max(worst, std::abs(at(n, i) - std::conj(at(o, i))));
    }
  }
  return worst;
}

void ModeField::enforce_reality() {
  const int d = dim();
  for (std::size_t o = 0; o < lat_.size(); ++o) {
    const std::size_t n = lat_.negate(o);
    if (n < o) continue;
    for (int i = 0; i < d; ++i) {
      const Complex avg = 0.5 * (at(o, i) + std::conj(at(n, i)));
      at(o, i) = avg;
      at(n, i) = std::conj(avg);
    }
  }
}

double ModeField::divergence_defect() const {
  const int d = dim();
  double worst = 0.0;
  const double scale = max_abs();
  if (scale == 0.0) return 0.0;
  for (std::size_t o = 0; o < lat_.size(); ++o) {
    const LatticeIndex a = lat_.index(o);
    Complex div(0.0, 0.0);
    double amp = 0.0;
    for (int i = 0; i < d; ++i) {
      div += static_cast<double>(a.c[i]) * at(o, i);
      amp = std::max(amp, std::abs(at(o, i)));
    }
    // Scale by |alpha| so the defect is comparable to the amplitudes.
    const double na = a.norm();
    if (na > 0.0) worst = std::max(worst, std::abs(div) / na);
    (void)amp;
  }
  return worst / scale;
}

bool ModeField::is_divergence_free(double rel_tol) const { return divergence_defect() <= rel_tol; }

double ModeField::max_abs() const {
  double m = 0.0;
  for (const Complex& z : amp_) m = std::max(m, std::abs(z));
  return m;
}

double ModeField::l2() const {
  double s = 0.0;
  for (const Complex& z : amp_) s += std::norm(z);
  return std::sqrt(s);
}

bool ModeField::all_finite() const {
  for (const Complex& z : amp_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void ModeField::set_zero_modes(const std::vector<Complex>& v0) {
  const std::size_t o = lat_.offset(LatticeIndex::zero(dim()));
  for (int i = 0; i < dim(); ++i) at(o, i) = v0[static_cast<std::size_t>(i)];
}

std::vector<Complex> ModeField::zero_modes() const {
  const std::size_t o = lat_.offset(LatticeIndex::zero(dim()));
  std::vector<Complex> v0(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) v0[static_cast<std::size_t>(i)] = at(o, i);
  return v0;
}

ModeField& ModeField::operator+=(const ModeField& o) {
  require_compatible(*this, o, "ModeField::operator+=");
  for (std::size_t k = 0; k < amp_.size(); ++k) amp_[k] += o.amp_[k];
  return *this;
}

ModeField& ModeField::operator-=(const ModeField& o) {
  require_compatible(*this, o, "ModeField::operator-=");
  for (std::size_t k = 0; k < amp_.size(); ++k) amp_[k] -= o.amp_[k];
  return *this;
}

ModeField& ModeField::operator*=(double s) {
  for (Complex& z : amp_) z *= s;
  return *this;
}

void ModeField::axpy(double s, const ModeField& o) {
  require_compatible(*this, o, "ModeField::axpy");
  for (std::size_t k = 0; k < amp_.size(); ++k) amp_[k] += s * o.amp_[k];
}

void require_compatible(const ModeField& a, const ModeField& b, const char* where) {
  if (!(a.lattice() == b.lattice()) || a.torus_diameter() != b.torus_diameter()) {
    throw ParameterError(std::string(where) + ": incompatible fields");
  }
}

}  // namespace torusns
