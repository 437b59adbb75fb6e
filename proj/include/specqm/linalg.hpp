#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace specqm {

using Vector = std::vector<double>;

/// bad arguments (empty grid, z outside the allowed range, ...)
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
/// iteration failed to converge, root not bracketed, ...
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : r_(rows), c_(cols), d_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  double& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  double* data() { return d_.data(); }
  const double* data() const { return d_.data(); }
  double* row(std::size_t i) { return d_.data() + i * c_; }
  const double* row(std::size_t i) const { return d_.data() + i * c_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<double> d_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(double s, Matrix a);

Matrix matmul(const Matrix& A, const Matrix& B);
Vector matvec(const Matrix& A, const Vector& x);
double dot(const Vector& x, const Vector& y);
/// C_ij = A_ij v_j, i.e. A o [v] in the column-scaling sense
Matrix scale_cols(const Matrix& A, const Vector& v);
/// C_ij = v_i A_ij
Matrix scale_rows(const Vector& v, const Matrix& A);
/// elementwise (Schur) product
Matrix hadamard(const Matrix& A, const Matrix& B);
Matrix transpose(const Matrix& A);
double norm_inf(const Vector& x);

struct LinearSolveReport {
  Vector solution;
  double residual = 0.0;   ///< ||A x - b||_inf
  double condition = 0.0;  ///< 1-norm condition estimate
  bool singular = false;   ///< condition above the pole threshold
};

/// Threshold on the condition estimate above which a system is flagged.
inline constexpr double kSingularCondition = 1e12;

LinearSolveReport solve(const Matrix& A, const Vector& b);

struct MatrixSolveReport {
  Matrix solution;
  double condition = 0.0;
  bool singular = false;
};
MatrixSolveReport solve(const Matrix& A, const Matrix& B);

double determinant(const Matrix& A);
/// eigenvalues of a symmetric matrix, ascending
Vector symmetric_eigenvalues(const Matrix& A);

}  // namespace specqm
