#pragma once

#include "sk/mat.hpp"

namespace sk {

enum class LyapunovMethod { direct, quadrature };

/// Solution of  J g* + g J = c  together with its achieved residual.
struct LyapunovSolution {
  Mat J;
  double residual = 0.0;  // max-abs of J g* + g J - c
  LyapunovMethod method = LyapunovMethod::direct;
};

/// Max-abs residual of a candidate solution.
double lyapunov_residual(const Mat& g, const Mat& c, const Mat& j);

/// Solve J g* + g J = c by vectorizing into a d^2 x d^2 linear system
/// (Kronecker structure) and Gaussian elimination with partial pivoting.
/// Requires the real parts of the eigenvalues of g to be positive; a
/// singular vectorized system signals that this is violated.
LyapunovSolution solve_lyapunov_direct(const Mat& g, const Mat& c);

/// Independent route: J = integral_0^inf e^{-g y} c e^{-g* y} dy by
/// adaptive quadrature, truncated at y_max = 40 / c_lambda where c_lambda
/// is the smallest eigenvalue of the symmetric part of g (which bounds the
/// integrand decay). Serves as an oracle against the direct solver.
LyapunovSolution solve_lyapunov_quadrature(const Mat& g, const Mat& c);

/// Finite-horizon noise Gramian  integral_0^t e^{-g s} c e^{-g* s} ds,
/// computed from the stationary Lyapunov solution P as P - e^{-g t} P e^{-g* t}.
Mat noise_gramian(const Mat& g, const Mat& c, double t);

}  // namespace sk
