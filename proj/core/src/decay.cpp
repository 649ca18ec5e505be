#include "torusns/decay.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "torusns/errors.hpp"

namespace torusns {

namespace {
// Amplitudes below this are treated as exact zeros to keep log-fits finite.
constexpr double kFlushToZero = 1e-300;
}  // namespace

EnvelopeFit fit_decay_envelope(const ModeField& field, double p_target) {
  const Lattice& lat = field.lattice();
  const int d = field.dim();

  EnvelopeFit fit;
  fit.p_target = p_target;
  fit.attaining = LatticeIndex::zero(d);

  std::map<long long, double> shell_max;
  bool any_nonzero = false;
  for (std::size_t o = 0; o < lat.size(); ++o) {
    const LatticeIndex a = lat.index(o);
    const long long n2 = a.norm2();
    const double w = 1.0 + std::pow(static_cast<double>(n2), 0.5 * p_target);
    double amp = 0.0;
    for (int i = 0; i < d; ++i) amp = std::max(amp, std::abs(field.at(o, i)));
    if (amp < kFlushToZero) amp = 0.0;
    if (amp > 0.0) any_nonzero = true;
    if (amp * w > fit.tightest_C) {
      fit.tightest_C = amp * w;
      fit.attaining = a;
    }
    auto& sm = shell_max[n2];
    sm = std::max(sm, amp);
  }
  if (!any_nonzero) throw ParameterError("fit_decay_envelope: all-zero field, fit undefined");

  // Least squares of log(amp) vs log(1+|a|) over nonzero shells with |a| >= 1.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (const auto& [n2, amp] : shell_max) {
    if (n2 == 0 || amp <= 0.0) continue;
    const double x = std::log(1.0 + std::sqrt(static_cast<double>(n2)));
    const double y = std::log(amp);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  fit.shells_used = n;
  if (n >= 2) {
    const double det = n * sxx - sx * sx;
    if (det > 0.0) {
      fit.fitted_order = -(n * sxy - sx * sy) / det;
      fit.order_defined = true;
    }
  }
  return fit;
}

bool envelope_holds(const ModeField& field, double C, double p, double rel_slack) {
  const Lattice& lat = field.lattice();
  const int d = field.dim();
  const double bound_scale = C * (1.0 + rel_slack);
  for (std::size_t o = 0; o < lat.size(); ++o) {
    const long long n2 = lat.index(o).norm2();
    const double bound = bound_scale / (1.0 + std::pow(static_cast<double>(n2), 0.5 * p));
    for (int i = 0; i < d; ++i) {
      if (std::abs(field.at(o, i)) > bound) return false;
    }
  }
  return true;
}

double envelope_tail(double C, double p, int truncation) {
  return C / (1.0 + std::pow(static_cast<double>(truncation), p));
}

}  // namespace torusns
