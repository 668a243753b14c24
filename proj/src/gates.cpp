#include "qfs/gates.hpp"

#include <cmath>

#include "qfs/errors.hpp"

namespace qfs::gates {

namespace {
const Complex kI{0.0, 1.0};
}

const ComplexMatrix& identity2() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

const ComplexMatrix& sigma_x() {
  static const ComplexMatrix m = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  return m;
}

const ComplexMatrix& sigma_y() {
  static const ComplexMatrix m = ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}});
  return m;
}

const ComplexMatrix& sigma_z() {
  static const ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  return m;
}

const ComplexMatrix& hadamard() {
  static const ComplexMatrix m = [] {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::from_rows({{s, s}, {s, -s}});
  }();
  return m;
}

const ComplexMatrix& s_gate() {
  static const ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, kI}});
  return m;
}

const ComplexMatrix& s_dagger() {
  static const ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -kI}});
  return m;
}

ComplexMatrix rx(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return ComplexMatrix::from_rows({{c, -kI * s}, {-kI * s, c}});
}

ComplexMatrix ry(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return ComplexMatrix::from_rows({{c, -s}, {s, c}});
}

ComplexMatrix rz(double theta) {
  const Complex lo = std::exp(-kI * (theta / 2.0));
  const Complex hi = std::exp(kI * (theta / 2.0));
  return ComplexMatrix::from_rows({{lo, 0.0}, {0.0, hi}});
}

ComplexMatrix identity(std::size_t dim) { return ComplexMatrix::identity(dim); }

ComplexMatrix swap_slots(std::size_t radix) {
  const std::size_t dim = radix * radix;
  ComplexMatrix m(dim, dim);
  for (std::size_t a = 0; a < radix; ++a) {
    for (std::size_t b = 0; b < radix; ++b) {
      m(b * radix + a, a * radix + b) = 1.0;
    }
  }
  return m;
}

const ComplexMatrix& pauli(char axis) {
  switch (axis) {
    case 'x':
    case 'X':
      return sigma_x();
    case 'y':
    case 'Y':
      return sigma_y();
    case 'z':
    case 'Z':
      return sigma_z();
    case 'i':
    case 'I':
      return identity2();
    default:
      throw validation_error(std::string("unknown Pauli axis '") + axis + "'");
  }
}

}  // namespace qfs::gates
