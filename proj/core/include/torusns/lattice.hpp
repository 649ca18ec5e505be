#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>

namespace torusns {

inline constexpr int kMaxDim = 4;

// Multi-index alpha in Z^D. Components beyond dim are kept at zero so the
// identity/comparison operators can ignore dim.
struct LatticeIndex {
  std::array<int, kMaxDim> c{};
  int dim = 0;

  LatticeIndex() = default;
  LatticeIndex(std::initializer_list<int> v) {
    for (int x : v) c[dim++] = x;
  }
  static LatticeIndex zero(int d) {
    LatticeIndex a;
    a.dim = d;
    return a;
  }

  int operator[](int j) const { return c[j]; }
  int& operator[](int j) { return c[j]; }
  bool operator==(const LatticeIndex& o) const { return c == o.c; }

  LatticeIndex operator-() const {
    LatticeIndex a = *this;
    for (int j = 0; j < dim; ++j) a.c[j] = -a.c[j];
    return a;
  }
  LatticeIndex operator-(const LatticeIndex& o) const {
    LatticeIndex a = *this;
    for (int j = 0; j < dim; ++j) a.c[j] -= o.c[j];
    return a;
  }
  LatticeIndex operator+(const LatticeIndex& o) const {
    LatticeIndex a = *this;
    for (int j = 0; j < dim; ++j) a.c[j] += o.c[j];
    return a;
  }

  long long norm2() const {
    long long s = 0;
    for (int j = 0; j < dim; ++j) s += static_cast<long long>(c[j]) * c[j];
    return s;
  }
  double norm() const { return std::sqrt(static_cast<double>(norm2())); }
  bool is_zero() const { return norm2() == 0; }

  std::string str() const;
};

// Bookkeeping for the truncated box lattice {alpha : |alpha_j| <= M}.
// Modes are stored in row-major order of (alpha_1+M, ..., alpha_D+M).
class Lattice {
 public:
  Lattice(int dim, int truncation);

  int dim() const { return dim_; }
  int truncation() const { return trunc_; }
  std::size_t size() const { return size_; }

  bool contains(const LatticeIndex& a) const {
    if (a.dim != dim_) return false;
    for (int j = 0; j < dim_; ++j)
      if (a.c[j] < -trunc_ || a.c[j] > trunc_) return false;
    return true;
  }

  std::size_t offset(const LatticeIndex& a) const {
    std::size_t o = 0;
    for (int j = 0; j < dim_; ++j) o = o * side_ + static_cast<std::size_t>(a.c[j] + trunc_);
    return o;
  }

  LatticeIndex index(std::size_t o) const {
    LatticeIndex a = LatticeIndex::zero(dim_);
    for (int j = dim_ - 1; j >= 0; --j) {
      a.c[j] = static_cast<int>(o % side_) - trunc_;
      o /= side_;
    }
    return a;
  }

  std::size_t negate(std::size_t o) const { return size_ - 1 - o; }

  bool operator==(const Lattice& o) const { return dim_ == o.dim_ && trunc_ == o.trunc_; }

 private:
  int dim_;
  int trunc_;
  std::size_t side_;
  std::size_t size_;
};

}  // namespace torusns
