#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "sk/errors.hpp"

namespace sk {

using Vec = std::vector<double>;

/// Dense row-major matrix for small fixed dimensions. Everything in this
/// toolkit lives at d <= 16 (physical dimension, at most doubled by the
/// colored-noise lifting), so all algorithms here are the straightforward
/// O(d^3) ones.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0.0) {}
  Mat(int rows, int cols, std::initializer_list<double> entries);

  static Mat identity(int n);
  static Mat zeros(int rows, int cols) { return Mat(rows, cols); }
  /// Column vector view of v.
  static Mat column(std::span<const double> v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  std::span<const double> entries() const { return a_; }
  std::span<double> entries() { return a_; }

  Mat transposed() const;
  /// (a + a*)/2; square matrices only.
  Mat sym_part() const;

  double max_abs() const;
  /// Induced infinity norm (max absolute row sum).
  double inf_norm() const;
  bool finite() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(double s);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(double s, Mat a);
Vec operator*(const Mat& a, std::span<const double> v);

/// Entrywise max-abs difference.
double max_abs_diff(const Mat& a, const Mat& b);

/// Solve a x = b by Gaussian elimination with partial pivoting.
Vec solve(Mat a, Vec b);
/// Multi-RHS variant; b has one column per right-hand side.
Mat solve(Mat a, Mat b);
Mat inverse(const Mat& a);

/// All eigenvalues of a symmetric matrix (cyclic Jacobi), ascending.
std::vector<double> sym_eigenvalues(Mat s);

/// Smallest eigenvalue of the symmetric part (g + g*)/2. This is the
/// quantity bounded below by c_lambda in the friction assumption.
double min_sym_eig(const Mat& g);

/// Matrix exponential by scaling-and-squaring with a Taylor core.
/// Relative error <= 1e-12 on norm-bounded inputs.
Mat mat_exp(const Mat& a);

/// Lower-triangular L with L L* = q for symmetric positive semidefinite q.
/// Pivots within rel_tol of zero are clamped to zero (rank-deficient q is
/// fine); pivots below -rel_tol * scale raise NumericError.
Mat cholesky_psd(Mat q, double rel_tol = 1e-11);

}  // namespace sk
