#include "torusns/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "torusns/errors.hpp"

namespace torusns {

namespace {

double weight(long long norm2, int m) {
  if (norm2 == 0) return 1.0;
  return 1.0 + std::pow(static_cast<double>(norm2), m);
}

}  // namespace

double dual_sobolev_norm(const ModeField& field, int m) {
  if (m < 0) throw ParameterError("dual_sobolev_norm: order m must be >= 0");
  const int d = field.dim();
  const Lattice& lat = field.lattice();
  double s = 0.0;
  for (std::size_t o = 0; o < lat.size(); ++o) {
    const long long n2 = lat.index(o).norm2();
    const double w = weight(n2, m);
    for (int i = 0; i < d; ++i) s += std::norm(field.at(o, i)) * w;
  }
  return std::sqrt(s);
}

double sup_mode(const ModeField& field) { return field.max_abs(); }

NormReport norm_report(const ModeField& field, int m_max) {
  NormReport rep;
  for (int m = 0; m <= m_max; ++m) rep.per_order[m] = dual_sobolev_norm(field, m);
  rep.sup_mode = sup_mode(field);
  return rep;
}

ShellSpectrum shell_spectrum(const ModeField& field) {
  const Lattice& lat = field.lattice();
  const int d = field.dim();
  std::map<long long, std::pair<double, double>> shells;  // n2 -> (max, sum of squares)
  for (std::size_t o = 0; o < lat.size(); ++o) {
    const long long n2 = lat.index(o).norm2();
    auto& sh = shells[n2];
    for (int i = 0; i < d; ++i) {
      const double a = std::abs(field.at(o, i));
      sh.first = std::max(sh.first, a);
      sh.second += a * a;
    }
  }
  ShellSpectrum out;
  for (const auto& [n2, sh] : shells) {
    out.radius2.push_back(n2);
    out.radius.push_back(std::sqrt(static_cast<double>(n2)));
    out.max_amp.push_back(sh.first);
    out.l2_amp.push_back(std::sqrt(sh.second));
  }
  return out;
}

double high_shell_fraction(const ModeField& field, double cut_radius) {
  const Lattice& lat = field.lattice();
  const int d = field.dim();
  const double cut2 = cut_radius * cut_radius;
  double high = 0.0, total = 0.0;
  for (std::size_t o = 0; o < lat.size(); ++o) {
    const double n2 = static_cast<double>(lat.index(o).norm2());
    for (int i = 0; i < d; ++i) {
      const double e = std::norm(field.at(o, i));
      total += e;
      if (n2 > cut2) high += e;
    }
  }
  return total > 0.0 ? high / total : 0.0;
}

}  // namespace torusns
