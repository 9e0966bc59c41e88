#include "sk/mat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace sk {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Mat::Mat(int rows, int cols, std::initializer_list<double> entries)
    : rows_(rows), cols_(cols), a_(entries) {
  require(a_.size() == size_t(rows) * size_t(cols), "Mat: entry count does not match shape");
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::column(std::span<const double> v) {
  Mat m(int(v.size()), 1);
  std::copy(v.begin(), v.end(), m.a_.begin());
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::sym_part() const {
  require(square(), "sym_part: matrix must be square");
  Mat s(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
  return s;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

double Mat::inf_norm() const {
  double m = 0.0;
  for (int i = 0; i < rows_; ++i) {
    double r = 0.0;
    for (int j = 0; j < cols_; ++j) r += std::abs((*this)(i, j));
    m = std::max(m, r);
  }
  return m;
}

bool Mat::finite() const {
  for (double x : a_)
    if (!std::isfinite(x)) return false;
  return true;
}

Mat& Mat::operator+=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Mat+: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Mat-: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (double& x : entries()) x *= s;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), "Mat*: shape mismatch");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Mat operator*(double s, Mat a) { return a *= s; }

Vec operator*(const Mat& a, std::span<const double> v) {
  require(a.cols() == int(v.size()), "Mat*vec: shape mismatch");
  Vec r(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: shape mismatch");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

namespace {

// In-place LU with partial pivoting; returns the permutation, throws on a
// numerically singular pivot.
std::vector<int> lu_decompose(Mat& a) {
  require(a.square(), "solve: matrix must be square");
  require(a.finite(), "solve: non-finite entries");
  int n = a.rows();
  std::vector<int> perm(n);
  double scale = std::max(a.max_abs(), 1e-300);
  double tol = scale * n * std::numeric_limits<double>::epsilon();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
    if (std::abs(a(piv, col)) <= tol) throw NumericError("solve: singular matrix");
    perm[col] = piv;
    if (piv != col)
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
    for (int i = col + 1; i < n; ++i) {
      double f = a(i, col) / a(col, col);
      a(i, col) = f;
      for (int j = col + 1; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return perm;
}

void lu_solve_inplace(const Mat& lu, const std::vector<int>& perm, Mat& b) {
  int n = lu.rows();
  // The factorization swapped full rows, so all interchanges apply to b
  // up front, followed by clean forward and back substitution.
  for (int col = 0; col < n; ++col)
    if (perm[col] != col)
      for (int j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(perm[col], j));
  for (int col = 0; col < n; ++col)
    for (int i = col + 1; i < n; ++i)
      for (int j = 0; j < b.cols(); ++j) b(i, j) -= lu(i, col) * b(col, j);
  for (int i = n - 1; i >= 0; --i) {
    for (int j = 0; j < b.cols(); ++j) {
      double s = b(i, j);
      for (int k = i + 1; k < n; ++k) s -= lu(i, k) * b(k, j);
      b(i, j) = s / lu(i, i);
    }
  }
}

}  // namespace

Mat solve(Mat a, Mat b) {
  require(a.rows() == b.rows(), "solve: rhs shape mismatch");
  auto perm = lu_decompose(a);
  lu_solve_inplace(a, perm, b);
  return b;
}

Vec solve(Mat a, Vec b) {
  Mat rhs = Mat::column(b);
  Mat x = solve(std::move(a), std::move(rhs));
  Vec r(x.rows());
  for (int i = 0; i < x.rows(); ++i) r[i] = x(i, 0);
  return r;
}

Mat inverse(const Mat& a) { return solve(a, Mat::identity(a.rows())); }

std::vector<double> sym_eigenvalues(Mat s) {
  require(s.square(), "sym_eigenvalues: matrix must be square");
  require(s.finite(), "sym_eigenvalues: non-finite entries");
  int n = s.rows();
  if (n == 1) return {s(0, 0)};

  auto off_norm = [&] {
    double o = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) o += 2.0 * s(i, j) * s(i, j);
    return std::sqrt(o);
  };
  double scale = std::max(s.max_abs(), 1e-300);

  for (int sweep = 0; sweep < 64 && off_norm() > 1e-15 * scale * n; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = s(p, q);
        if (std::abs(apq) <= 1e-18 * scale) continue;
        double theta = (s(q, q) - s(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;
        for (int i = 0; i < n; ++i) {
          double sip = s(i, p), siq = s(i, q);
          s(i, p) = c * sip - sn * siq;
          s(i, q) = sn * sip + c * siq;
        }
        for (int j = 0; j < n; ++j) {
          double spj = s(p, j), sqj = s(q, j);
          s(p, j) = c * spj - sn * sqj;
          s(q, j) = sn * spj + c * sqj;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = s(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

double min_sym_eig(const Mat& g) {
  require(g.square(), "min_sym_eig: matrix must be square");
  require(g.finite(), "min_sym_eig: non-finite entries");
  if (g.rows() == 1) return g(0, 0);
  return sym_eigenvalues(g.sym_part()).front();
}

Mat mat_exp(const Mat& a) {
  require(a.square(), "mat_exp: matrix must be square");
  require(a.finite(), "mat_exp: non-finite entries");
  int n = a.rows();
  if (n == 1) {
    Mat r(1, 1);
    r(0, 0) = std::exp(a(0, 0));
    return r;
  }
  double norm = a.inf_norm();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = int(std::ceil(std::log2(norm / 0.5)));
    squarings = std::min(squarings, 64);
  }
  Mat b = std::ldexp(1.0, -squarings) * a;

  // Taylor series; with |b| <= 0.5 thirty terms are far below epsilon.
  Mat result = Mat::identity(n);
  Mat term = Mat::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = (1.0 / k) * (term * b);
    result += term;
    if (term.max_abs() <= 1e-18 * std::max(result.max_abs(), 1.0)) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Mat cholesky_psd(Mat q, double rel_tol) {
  require(q.square(), "cholesky_psd: matrix must be square");
  require(q.finite(), "cholesky_psd: non-finite entries");
  int n = q.rows();
  double scale = std::max(q.max_abs(), 1e-300);
  Mat l(n, n);
  for (int j = 0; j < n; ++j) {
    double d = q(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d < -rel_tol * scale)
      throw NumericError("cholesky_psd: matrix is not positive semidefinite");
    if (d <= rel_tol * scale) {
      // Rank-deficient direction; leave the column zero.
      continue;
    }
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = q(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

}  // namespace sk
