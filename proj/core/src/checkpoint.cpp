#include "torusns/checkpoint.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "torusns/csv.hpp"
#include "torusns/errors.hpp"
#include "torusns/norms.hpp"

namespace torusns {

namespace {
constexpr double kOmitBelow = 1e-14;
using nlohmann::json;
}  // namespace

void write_checkpoint(const ModeField& field, std::ostream& os) {
  json j;
  j["dimension"] = field.dim();
  j["truncation"] = field.truncation();
  j["torus_diameter"] = field.torus_diameter();
  json modes = json::array();
  const Lattice& lat = field.lattice();
  const int d = field.dim();
  for (std::size_t o = 0; o < lat.size(); ++o) {
    double amp = 0.0;
    for (int i = 0; i < d; ++i) amp = std::max(amp, std::abs(field.at(o, i)));
    if (amp < kOmitBelow) continue;
    const LatticeIndex a = lat.index(o);
    json entry = json::array();
    json idx = json::array();
    for (int jx = 0; jx < d; ++jx) idx.push_back(a.c[jx]);
    entry.push_back(idx);
    for (int i = 0; i < d; ++i) {
      entry.push_back(json::array({field.at(o, i).real(), field.at(o, i).imag()}));
    }
    modes.push_back(entry);
  }
  j["modes"] = modes;
  os << j.dump(1) << "\n";
}

void write_checkpoint_file(const ModeField& field, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw NumericError("write_checkpoint_file: cannot open " + path);
  write_checkpoint(field, os);
}

ModeField read_checkpoint(std::istream& is) {
  json j;
  is >> j;
  const int d = j.at("dimension").get<int>();
  const int m = j.at("truncation").get<int>();
  const double l = j.at("torus_diameter").get<double>();
  ModeField f(d, m, l);
  for (const auto& entry : j.at("modes")) {
    LatticeIndex a = LatticeIndex::zero(d);
    for (int jx = 0; jx < d; ++jx) a.c[jx] = entry.at(0).at(static_cast<std::size_t>(jx)).get<int>();
    if (!f.lattice().contains(a)) throw ParameterError("read_checkpoint: mode outside lattice");
    for (int i = 0; i < d; ++i) {
      const auto& pair = entry.at(static_cast<std::size_t>(i) + 1);
      f.at(a, i) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  }
  return f;
}

ModeField read_checkpoint_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw NumericError("read_checkpoint_file: cannot open " + path);
  return read_checkpoint(is);
}

void write_shell_spectrum_csv(const ModeField& field, std::ostream& os) {
  const ShellSpectrum sp = shell_spectrum(field);
  os << "shell_radius,max_amp,l2_amp\n";
  for (std::size_t k = 0; k < sp.radius.size(); ++k) {
    os << CsvWriter::format_double(sp.radius[k]) << ',' << CsvWriter::format_double(sp.max_amp[k])
       << ',' << CsvWriter::format_double(sp.l2_amp[k]) << '\n';
  }
}

}  // namespace torusns
