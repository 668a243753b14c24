#pragma once

#include "qfs/complex_matrix.hpp"

namespace qfs::gates {

// Single-qubit constants. Rotation convention: R_a(theta) = exp(-i theta sigma_a / 2),
// so R_x(theta)|0> has <sigma_z> = cos(theta).

const ComplexMatrix& identity2();
const ComplexMatrix& sigma_x();
const ComplexMatrix& sigma_y();
const ComplexMatrix& sigma_z();
const ComplexMatrix& hadamard();
const ComplexMatrix& s_gate();    // diag(1, i)
const ComplexMatrix& s_dagger();  // diag(1, -i)

ComplexMatrix rx(double theta);
ComplexMatrix ry(double theta);
ComplexMatrix rz(double theta);

ComplexMatrix identity(std::size_t dim);

// SWAP on two equal-radix slots: |a,b> -> |b,a>, dimension radix^2.
ComplexMatrix swap_slots(std::size_t radix);

// sigma_x / sigma_y / sigma_z / identity2 by axis character ('x','y','z','i').
const ComplexMatrix& pauli(char axis);

}  // namespace qfs::gates
