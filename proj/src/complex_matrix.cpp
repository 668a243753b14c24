#include "qfs/complex_matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qfs/config.hpp"
#include "qfs/errors.hpp"
#include "qfs/indexing.hpp"
#include "qfs/tolerances.hpp"

namespace qfs {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw validation_error("matrix entry count does not match rows*cols");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw validation_error("ragged matrix initializer");
    std::size_t j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > caps().max_density_dim || cols > caps().max_density_dim) {
    throw dimension_error("kron result exceeds the configured operator dimension cap");
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() * b.size() > caps().max_pure_dim) {
    throw dimension_error("kron result exceeds the configured state dimension cap");
  }
  ComplexVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw validation_error("matmul dimension mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw validation_error("add dimension mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] += b.entries()[i];
  return out;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw validation_error("subtract dimension mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] -= b.entries()[i];
  return out;
}

ComplexMatrix scale(Complex factor, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (Complex& v : out.entries()) v *= factor;
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw validation_error("trace of a non-square matrix");
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
  if (a.cols() != x.size()) throw validation_error("matvec dimension mismatch");
  ComplexVector y(a.rows(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

ComplexMatrix outer(const ComplexVector& ket, const ComplexVector& bra) {
  ComplexMatrix out(ket.size(), bra.size());
  for (std::size_t i = 0; i < ket.size(); ++i) {
    for (std::size_t j = 0; j < bra.size(); ++j) {
      out(i, j) = ket[i] * std::conj(bra[j]);
    }
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return subtract(a, b); }
ComplexMatrix operator*(Complex factor, const ComplexMatrix& a) { return scale(factor, a); }

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& radices,
                            const std::vector<std::size_t>& keep) {
  const std::size_t dim = idx::product_of(radices);
  if (!rho.is_square() || rho.rows() != dim) {
    throw validation_error("partial_trace: matrix dimension does not match the subsystem radices");
  }
  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw validation_error("partial_trace: repeated subsystem index");
  }
  const auto strides = idx::strides_for(radices);
  const auto traced = idx::complement_of(radices.size(), kept);  // also range-checks kept
  const auto kept_offsets = idx::subset_offsets(radices, strides, kept);
  const auto traced_offsets = idx::subset_offsets(radices, strides, traced);

  const std::size_t m = kept_offsets.size();
  ComplexMatrix out(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Complex acc{0.0, 0.0};
      for (std::size_t t : traced_offsets) {
        acc += rho(kept_offsets[a] + t, kept_offsets[b] + t);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

HermitianEig hermitian_eig(const ComplexMatrix& a) {
  if (!a.is_square()) throw validation_error("hermitian_eig: matrix must be square");
  if (!is_hermitian(a, tol::equivalence)) throw validation_error("hermitian_eig: matrix is not Hermitian");
  const std::size_t n = a.rows();
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
  }
  // Symmetrize so roundoff in the input cannot leak into the decomposition.
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: eigensolver failed");

  HermitianEig result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      result.eigenvectors(i, j) = solver.eigenvectors()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return result;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const Complex& v : a.entries()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw validation_error("max_abs_diff dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double atol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= atol;
}

bool is_finite(const ComplexMatrix& a) {
  for (const Complex& v : a.entries()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& a, double atol) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > atol) return false;
    }
  }
  return true;
}

bool is_unitary(const ComplexMatrix& a, double atol) {
  if (!a.is_square()) return false;
  const ComplexMatrix product = matmul(dagger(a), a);
  return max_abs_diff(product, ComplexMatrix::identity(a.rows())) <= atol;
}

double norm2(const ComplexVector& v) {
  double s = 0.0;
  for (const Complex& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace qfs
