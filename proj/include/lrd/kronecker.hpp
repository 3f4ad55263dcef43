#ifndef LRD_KRONECKER_HPP
#define LRD_KRONECKER_HPP

#include "lrd/matrix.hpp"

namespace lrd::linalg {

/// Kronecker product A ⊗ B: block (i,j) equals A(i,j)·B, so the second
/// factor's index runs fastest in both rows and columns. Throws
/// ParameterError if the result would overflow the entry budget.
Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace lrd::linalg

#endif  // LRD_KRONECKER_HPP
