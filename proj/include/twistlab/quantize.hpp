#pragma once

#include <functional>
#include <string>
#include <vector>

#include "twistlab/dense.hpp"
#include "twistlab/symbol.hpp"

namespace twistlab {

// paper_matrix places p_{j-s}(x_s) at entry (s,j), reproducing the displayed
// band matrix and the Jordan identity; convolution places p_{s-j}(x_s), the
// reading implied by the infinite-matrix formula. Both are kept; see README.
enum class QuantizationConvention { paper_matrix, convolution };

std::string convention_name(QuantizationConvention c);
QuantizationConvention convention_from_name(const std::string& name);

struct QuantMeta {
    int N = 0;
    int d = 1;
    std::string symbol_label;
    QuantizationConvention convention = QuantizationConvention::paper_matrix;
    bool mollified = false;
    double eta = 0.0;

    double h() const { return 1.0 / (kTwoPi * N); }  // h*2πN = 1 by construction
};

struct QuantMatrix {
    MatrixXcd data;
    QuantMeta meta;
};

// M_N(p): dense N^d x N^d, rows/cols indexed lexicographically over [1,N]^d,
// entry (s,j) = p_{j-s}(s/N) (paper_matrix) or p_{s-j}(s/N) (convolution).
QuantMatrix build_matrix(const Symbol& sym, int N, QuantizationConvention conv);

// Largest singular value.
double operator_norm(const MatrixXcd& M);
double operator_norm(const QuantMatrix& M);

// Fourier table c_{n,m} of a function on T^{2d}, |n_a| <= K_n, |m_a| <= K_m.
struct TorusCoeffTable {
    int d = 1;
    int K_n = 0;
    int K_m = 0;
    std::vector<Cx> c;  // lexicographic over (n, m), each axis from -K to +K

    Cx at(const std::vector<int>& n, const std::vector<int>& m) const;
    Cx& at(const std::vector<int>& n, const std::vector<int>& m);
    std::size_t size() const { return c.size(); }

    // Tail estimate sup over the truncation boundary of |c| <(n,m)>^0, logged
    // by callers that truncate smooth functions.
    double boundary_max_abs() const;
};

// Discrete Fourier coefficients from samples on a uniform grid over T^{2d}
// (x axes first, then ξ axes; grid[a] points per axis at t/grid[a]). Exact for
// trigonometric polynomials of per-axis degree <= grid/4 - 1.
TorusCoeffTable torus_coeffs(const std::vector<Cx>& samples, const std::vector<int>& grid, int d,
                             int K_n, int K_m);

// Convenience: sample a callable f(x, ξ) on an automatically sized grid.
TorusCoeffTable torus_coeffs_of(
    const std::function<Cx(const std::vector<double>&, const std::vector<double>&)>& f, int d,
    int K_n, int K_m);

// Fourier table of a symbol: c_{n,m} = m-th ξ-coefficient of p, expanded in x.
TorusCoeffTable torus_coeffs_of_symbol(const Symbol& sym, int K_n);

// f^t_N at α1=α2=1: entry (s,j) = Σ_{n,r} c_{n,j-s+rN} e^{(2iπ/N)[(1-t)<n,j> + t<n,s-rN>]}.
// Only t = 1/2 and t = 1 are supported.
QuantMatrix build_torus_matrix(const TorusCoeffTable& table, int N, double t);

struct TraceCheck {
    Cx lhs;       // trace of the t=1/2 torus matrix
    Cx rhs;       // N^d c_{0,0}
    double residual;
};

TraceCheck trace_formula_check(const TorusCoeffTable& table, int N);

struct AliasingCheck {
    double band_dev;  // entries with no wrap-around contribution
    double wrap_dev;  // entries with r != 0 terms, after adding them back
    double max_dev;   // max over all entries of |F1 - M - wraps|
};

// Compares M_N(p) with the t=1 torus matrix of the same symbol: they agree on
// the unaliased band, and the torus matrix's extra entries are the wrap-around
// terms p_{j-s+rN}(s/N).
AliasingCheck aliasing_decomposition_check(const Symbol& sym, int N);

// Binary export: 16-byte header (magic "TWQM", u32 dim little-endian, 8
// reserved zero bytes), then row-major interleaved re/im float64.
void write_matrix_binary(const QuantMatrix& M, const std::string& path);
MatrixXcd read_matrix_binary(const std::string& path);

// CSV of (row, col, re, im) for entries with |entry| > threshold.
void write_matrix_csv(const QuantMatrix& M, const std::string& path,
                      const std::vector<std::string>& header_comments = {},
                      double threshold = 1e-14);

}  // namespace twistlab
