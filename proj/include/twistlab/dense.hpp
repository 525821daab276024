#pragma once

#include <Eigen/Dense>

#include "twistlab/util.hpp"

namespace twistlab {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

struct EigResult {
    VectorXcd values;
    MatrixXcd right_vectors;  // empty unless requested
};

// Dense nonsymmetric eigensolve (LAPACK zgeev). Throws on non-finite input or
// solver non-convergence.
EigResult eig_dense(const MatrixXcd& M, bool with_vectors);

// Singular values in descending order (LAPACK zgesdd, values only).
VectorXd singular_values_dense(const MatrixXcd& M);

}  // namespace twistlab
