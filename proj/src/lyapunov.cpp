#include "sk/lyapunov.hpp"

#include <algorithm>
#include <cmath>

namespace sk {

namespace {

constexpr double kDirectTol = 1e-10;
constexpr double kQuadTol = 1e-8;

void check_inputs(const Mat& g, const Mat& c) {
  if (!g.square()) throw std::invalid_argument("lyapunov: g must be square");
  if (!c.square() || c.rows() != g.rows())
    throw std::invalid_argument("lyapunov: c must match the shape of g");
  if (!g.finite() || !c.finite())
    throw std::invalid_argument("lyapunov: non-finite entries");
}

double residual_scale(const Mat& c) { return std::max(1.0, c.max_abs()); }

}  // namespace

double lyapunov_residual(const Mat& g, const Mat& c, const Mat& j) {
  return max_abs_diff(j * g.transposed() + g * j, c);
}

LyapunovSolution solve_lyapunov_direct(const Mat& g, const Mat& c) {
  check_inputs(g, c);
  int d = g.rows();

  // Row-major vectorization: row (i,j) of the system is
  //   sum_pq [ g_ip delta_jq + delta_ip g_jq ] J_pq = c_ij.
  Mat sys(d * d, d * d);
  Vec rhs(size_t(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int row = i * d + j;
      rhs[row] = c(i, j);
      for (int p = 0; p < d; ++p) sys(row, p * d + j) += g(i, p);
      for (int q = 0; q < d; ++q) sys(row, i * d + q) += g(j, q);
    }

  Vec jvec;
  try {
    jvec = solve(std::move(sys), std::move(rhs));
  } catch (const NumericError&) {
    throw NumericError(
        "solve_lyapunov_direct: singular vectorized system "
        "(eigenvalue condition on g violated)");
  }

  LyapunovSolution sol;
  sol.method = LyapunovMethod::direct;
  sol.J = Mat(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) sol.J(i, j) = jvec[size_t(i) * d + j];
  sol.residual = lyapunov_residual(g, c, sol.J);
  if (sol.residual > kDirectTol * residual_scale(c))
    throw NumericError("solve_lyapunov_direct: residual above tolerance");
  return sol;
}

namespace {

// Adaptive Simpson on a matrix-valued integrand, max-abs error control.
struct MatQuad {
  const Mat& g;
  const Mat& c;
  int max_depth = 40;

  Mat eval(double y) const {
    Mat e = mat_exp(-y * Mat(g));
    return e * c * e.transposed();
  }

  static Mat simpson(double a, double b, const Mat& fa, const Mat& fm, const Mat& fb) {
    return ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  }

  Mat recurse(double a, double b, const Mat& fa, const Mat& fm, const Mat& fb,
              const Mat& whole, double tol, int depth) const {
    if (depth > max_depth)
      throw NumericError(
          "solve_lyapunov_quadrature: non-convergence (interval halving floor reached)");
    double m = 0.5 * (a + b);
    Mat flm = eval(0.5 * (a + m));
    Mat frm = eval(0.5 * (m + b));
    Mat left = simpson(a, m, fa, flm, fm);
    Mat right = simpson(m, b, fm, frm, fb);
    Mat sum = left + right;
    double err = max_abs_diff(sum, whole);
    if (err <= 15.0 * tol) {
      Mat corr = sum - whole;
      return sum + (1.0 / 15.0) * corr;
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  Mat integrate(double a, double b, double tol) const {
    Mat fa = eval(a), fm = eval(0.5 * (a + b)), fb = eval(b);
    return recurse(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 0);
  }
};

}  // namespace

LyapunovSolution solve_lyapunov_quadrature(const Mat& g, const Mat& c) {
  check_inputs(g, c);
  double c_lambda = min_sym_eig(g);
  if (!(c_lambda > 0.0))
    throw NumericError(
        "solve_lyapunov_quadrature: symmetric part of g is not positive definite");
  // Tail beyond y_max is bounded by |c| e^{-2 c_lambda y_max} / (2 c_lambda):
  // negligible at 40 / c_lambda.
  double y_max = 40.0 / c_lambda;
  MatQuad q{g, c};
  // Split the range so the adaptive pass starts from a sensible partition:
  // nearly all mass sits in the first few multiples of 1/c_lambda.
  Mat j = q.integrate(0.0, 8.0 / c_lambda, 0.5e-10 * residual_scale(c));
  j += q.integrate(8.0 / c_lambda, y_max, 0.5e-10 * residual_scale(c));

  LyapunovSolution sol;
  sol.method = LyapunovMethod::quadrature;
  sol.J = std::move(j);
  sol.residual = lyapunov_residual(g, c, sol.J);
  if (sol.residual > kQuadTol * residual_scale(c))
    throw NumericError("solve_lyapunov_quadrature: residual above tolerance");
  return sol;
}

Mat noise_gramian(const Mat& g, const Mat& c, double t) {
  check_inputs(g, c);
  if (!(t >= 0.0)) throw std::invalid_argument("noise_gramian: t must be nonnegative");
  Mat p = solve_lyapunov_direct(g, c).J;
  Mat e = mat_exp(-t * Mat(g));
  return p - e * p * e.transposed();
}

}  // namespace sk
