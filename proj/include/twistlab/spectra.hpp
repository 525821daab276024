#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistlab/dense.hpp"
#include "twistlab/symbol.hpp"

namespace twistlab {

struct SpectralResult {
    VectorXcd eigenvalues;     // unordered multiset (solver order)
    VectorXd singular_values;  // descending
    double backward_error = 0.0;
};

// Dense nonsymmetric eigensolve plus SVD; backward_error is the largest
// right-eigenpair residual ||Mv - λv|| / ||M||_F.
SpectralResult compute_spectrum(const MatrixXcd& M);

struct EmpiricalMeasure {
    std::vector<Cx> points;  // uniform weight 1/|points|
    std::string provenance;

    double weight() const { return points.empty() ? 0.0 : 1.0 / points.size(); }
};

EmpiricalMeasure empirical_measure(const SpectralResult& res, std::string provenance = "spectrum");

enum class SampleMode { grid, halton };

// n atoms p(x_i, ξ_i) with (x_i, ξ_i) uniform-ish over [0,1]^d x T^d. Grid
// mode uses a ceil(n^(1/2d))-per-axis tensor grid offset by half a cell, so
// the atom count is rounded up to the full tensor grid; halton mode yields
// exactly n atoms.
EmpiricalMeasure pushforward_measure(const Symbol& sym, std::size_t n, SampleMode mode);

struct LogPot {
    double value;
    bool at_atom;  // true when the -infinity sentinel fired
};

// φ_μ(z) = (1/n) Σ log|ω_i - z|; sentinel when z is within 1e-14 of an atom.
LogPot log_potential(const EmpiricalMeasure& mu, Cx z);

// (1/dim) Σ_j log s_j(M - zI); sentinel when any singular value is zero.
LogPot log_potential(const MatrixXcd& M, Cx z);

// #{ j : s_j(M - zI)^2 <= alpha }, the eigenvalue count of (M-z)*(M-z) in [0,α].
int singular_count(const MatrixXcd& M, Cx z, double alpha);

enum class DistanceMethod { w1_assignment, histogram_tv, logpot_grid };

std::string distance_method_name(DistanceMethod m);
DistanceMethod distance_method_from_name(const std::string& name);

struct DistanceOptions {
    // w1_assignment: exact O(n^3) optimal assignment on uniform subsamples
    std::size_t w1_cap = 1024;
    std::uint64_t subsample_seed = 0;
    // histogram_tv: declared bounding box, bin count, Gaussian bandwidth
    double box_re_lo = 0.0, box_re_hi = 0.0, box_im_lo = 0.0, box_im_hi = 0.0;
    int hist_bins = 64;
    double bandwidth = 0.0;
    // logpot_grid
    int grid_n = 21;
};

double measure_distance(const EmpiricalMeasure& mu1, const EmpiricalMeasure& mu2,
                        DistanceMethod method, const DistanceOptions& opt = {});

// Exact minimum-cost perfect matching value (shortest augmenting paths).
double assignment_cost(const std::vector<std::vector<double>>& cost);

// Deterministic uniform subsample of size k (seeded reservoir).
std::vector<Cx> reservoir_subsample(const std::vector<Cx>& points, std::size_t k,
                                    std::uint64_t seed);

void write_measure_csv(const EmpiricalMeasure& mu, const std::string& path,
                       const std::vector<std::string>& header_comments = {});

void write_spectrum_csv(const SpectralResult& res, const std::string& path,
                        const std::vector<std::string>& header_comments = {});

}  // namespace twistlab
