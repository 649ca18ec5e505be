#include "torusns/lattice.hpp"

#include <sstream>

#include "torusns/errors.hpp"

namespace torusns {

std::string LatticeIndex::str() const {
  std::ostringstream os;
  os << "(";
  for (int j = 0; j < dim; ++j) os << (j ? "," : "") << c[j];
  os << ")";
  return os.str();
}

Lattice::Lattice(int dim, int truncation) : dim_(dim), trunc_(truncation) {
  if (dim < 2 || dim > kMaxDim) throw ParameterError("lattice dimension must be in [2, 4]");
  if (truncation < 1) throw ParameterError("lattice truncation must be >= 1");
  side_ = static_cast<std::size_t>(2 * truncation + 1);
  size_ = 1;
  for (int j = 0; j < dim; ++j) size_ *= side_;
}

}  // namespace torusns
