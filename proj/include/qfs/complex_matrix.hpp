#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qfs {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix in row-major order. The workhorse for every operator
/// in the library: gates, Kraus operators, observables, density matrices.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ComplexVector& entries() { return data_; }
  const ComplexVector& entries() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ComplexVector data_;
};

// Kronecker products. Matrix results are capped by caps().max_density_dim,
// vector results by caps().max_pure_dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex factor, const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);
ComplexMatrix outer(const ComplexVector& ket, const ComplexVector& bra);  // |ket><bra|

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex factor, const ComplexMatrix& a);

/// Reduced matrix over the kept subsystems of a mixed-radix space; the result
/// keeps subsystems in ascending index order regardless of the order of `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& radices,
                            const std::vector<std::size_t>& keep);

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

/// Eigendecomposition of a Hermitian matrix; deterministic for fixed input.
HermitianEig hermitian_eig(const ComplexMatrix& a);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double atol);
bool is_finite(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double atol);
bool is_unitary(const ComplexMatrix& a, double atol);
double norm2(const ComplexVector& v);

}  // namespace qfs
