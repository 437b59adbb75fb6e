#include "specqm/linalg.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "specqm/simd.hpp"

namespace specqm {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CMap = Eigen::Map<const RowMat>;

namespace {
void check_same(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch");
}
}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
  return *this;
}
Matrix& Matrix::operator-=(const Matrix& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
  return *this;
}
Matrix& Matrix::operator*=(double s) {
  for (double& v : d_) v *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix matmul(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw DomainError("matmul: inner dimension mismatch");
  Matrix C(A.rows(), B.cols());
  simd::active().gemm(A.data(), B.data(), C.data(), A.rows(), A.cols(), B.cols());
  return C;
}

Vector matvec(const Matrix& A, const Vector& x) {
  if (A.cols() != x.size()) throw DomainError("matvec: dimension mismatch");
  Vector y(A.rows());
  simd::active().gemv(A.data(), x.data(), y.data(), A.rows(), A.cols());
  return y;
}

double dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DomainError("dot: length mismatch");
  return simd::active().dot(x.data(), y.data(), x.size());
}

Matrix scale_cols(const Matrix& A, const Vector& v) {
  if (A.cols() != v.size()) throw DomainError("scale_cols: dimension mismatch");
  Matrix C(A.rows(), A.cols());
  simd::active().scale_cols(A.data(), v.data(), C.data(), A.rows(), A.cols());
  return C;
}

Matrix scale_rows(const Vector& v, const Matrix& A) {
  if (A.rows() != v.size()) throw DomainError("scale_rows: dimension mismatch");
  Matrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) *= v[i];
  return C;
}

Matrix hadamard(const Matrix& A, const Matrix& B) {
  check_same(A, B);
  Matrix C(A.rows(), A.cols());
  simd::active().hadamard(A.data(), B.data(), C.data(), A.rows() * A.cols());
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j);
  return T;
}

double norm_inf(const Vector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

LinearSolveReport solve(const Matrix& A, const Vector& b) {
  if (A.rows() != A.cols() || A.rows() != b.size()) throw DomainError("solve: shape mismatch");
  const auto n = static_cast<Eigen::Index>(A.rows());
  CMap Am(A.data(), n, n);
  Eigen::PartialPivLU<RowMat> lu(Am);
  Eigen::Map<const Eigen::VectorXd> bm(b.data(), n);
  Eigen::VectorXd x = lu.solve(bm);

  LinearSolveReport rep;
  rep.solution.assign(x.data(), x.data() + n);
  const double rc = lu.rcond();
  rep.condition = rc > 0.0 ? 1.0 / rc : INFINITY;
  rep.singular = !(rep.condition < kSingularCondition) || !x.allFinite();
  Vector r = matvec(A, rep.solution);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  rep.residual = norm_inf(r);
  return rep;
}

MatrixSolveReport solve(const Matrix& A, const Matrix& B) {
  if (A.rows() != A.cols() || A.rows() != B.rows()) throw DomainError("solve: shape mismatch");
  const auto n = static_cast<Eigen::Index>(A.rows());
  const auto m = static_cast<Eigen::Index>(B.cols());
  Eigen::PartialPivLU<RowMat> lu(CMap(A.data(), n, n));
  RowMat X = lu.solve(CMap(B.data(), n, m));
  MatrixSolveReport rep;
  rep.solution = Matrix(A.rows(), B.cols());
  Eigen::Map<RowMat>(rep.solution.data(), n, m) = X;
  const double rc = lu.rcond();
  rep.condition = rc > 0.0 ? 1.0 / rc : INFINITY;
  rep.singular = !(rep.condition < kSingularCondition) || !X.allFinite();
  return rep;
}

double determinant(const Matrix& A) {
  if (A.rows() != A.cols()) throw DomainError("determinant: not square");
  const auto n = static_cast<Eigen::Index>(A.rows());
  return Eigen::PartialPivLU<RowMat>(CMap(A.data(), n, n)).determinant();
}

Vector symmetric_eigenvalues(const Matrix& A) {
  if (A.rows() != A.cols()) throw DomainError("eigenvalues: not square");
  const auto n = static_cast<Eigen::Index>(A.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(CMap(A.data(), n, n)),
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("symmetric eigen-solver failed");
  const auto& ev = es.eigenvalues();
  return Vector(ev.data(), ev.data() + n);
}

}  // namespace specqm
