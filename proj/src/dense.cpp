#define lapack_complex_double std::complex<double>
#define lapack_complex_float std::complex<float>

#include "twistlab/dense.hpp"

#include <complex>

#include <lapacke.h>

namespace twistlab {

static void check_finite(const MatrixXcd& M, const char* who) {
    if (!M.allFinite()) throw std::domain_error(std::string(who) + ": non-finite entries");
    if (M.rows() != M.cols()) throw PreconditionError(std::string(who) + ": matrix must be square");
}

EigResult eig_dense(const MatrixXcd& M, bool with_vectors) {
    check_finite(M, "eig_dense");
    const lapack_int n = static_cast<lapack_int>(M.rows());
    EigResult res;
    res.values.resize(n);
    MatrixXcd A = M;  // zgeev overwrites its input
    if (with_vectors) res.right_vectors.resize(n, n);
    const lapack_int info = LAPACKE_zgeev(
        LAPACK_COL_MAJOR, 'N', with_vectors ? 'V' : 'N', n, A.data(), n, res.values.data(),
        nullptr, 1, with_vectors ? res.right_vectors.data() : nullptr, with_vectors ? n : 1);
    if (info != 0)
        throw AccuracyError("eig_dense: zgeev failed to converge (info=" + std::to_string(info) +
                            ")");
    return res;
}

VectorXd singular_values_dense(const MatrixXcd& M) {
    check_finite(M, "singular_values_dense");
    const lapack_int n = static_cast<lapack_int>(M.rows());
    VectorXd s(n);
    MatrixXcd A = M;
    const lapack_int info =
        LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', n, n, A.data(), n, s.data(), nullptr, 1, nullptr, 1);
    if (info != 0)
        throw AccuracyError("singular_values_dense: zgesdd failed (info=" + std::to_string(info) +
                            ")");
    return s;  // LAPACK returns descending order
}

}  // namespace twistlab
