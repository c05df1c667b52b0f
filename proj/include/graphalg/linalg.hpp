#pragma once

#include <vector>

#include "graphalg/cmatrix.hpp"

namespace graphalg {

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi;
/// deterministic. Throws std::invalid_argument when the input is not
/// Hermitian (within a small multiple of its scale) or not square.
std::vector<double> hermitian_eigenvalues(CMatrix a);

/// Largest singular value, computed as sqrt(lambda_max(A^H A)).
double operator_norm(const CMatrix& a);

/// True when a is Hermitian and its eigenvalues are all >= -tol.
bool is_positive_semidefinite(const CMatrix& a, double tol);

}  // namespace graphalg
