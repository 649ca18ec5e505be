#pragma once

#include <functional>

namespace torusns {

struct QuadConfig {
  double rel_tol = 0.01;  // node-doubling convergence gate
  int min_panels = 8;
  int max_panels = 1 << 20;
};

struct QuadResult {
  double value = 0.0;
  int panels = 0;
  bool converged = false;
};

// Composite Simpson with panel doubling until successive values agree to
// rel_tol (absolute floor 1e-300). Throws NumericError when the gate is not
// reached within max_panels.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadConfig& cfg = {});

// Fixed-order Gauss-Legendre on [a, b]; exact for polynomials of degree
// 2n - 1. n in {4, 8, 16, 32}.
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace torusns
