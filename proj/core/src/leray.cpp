#include "torusns/leray.hpp"

namespace torusns {

ModeField leray_project(const ModeField& field) {
  ModeField out = field;
  const Lattice& lat = field.lattice();
  const int d = field.dim();
  for (std::size_t o = 0; o < lat.size(); ++o) {
    const LatticeIndex a = lat.index(o);
    const long long n2 = a.norm2();
    if (n2 == 0) continue;
    Complex dot(0.0, 0.0);
    for (int j = 0; j < d; ++j) dot += static_cast<double>(a.c[j]) * field.at(o, j);
    dot /= static_cast<double>(n2);
    for (int i = 0; i < d; ++i) out.at(o, i) -= static_cast<double>(a.c[i]) * dot;
  }
  return out;
}

}  // namespace torusns
