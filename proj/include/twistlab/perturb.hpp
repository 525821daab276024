#pragma once

#include <cstdint>
#include <string>

#include "twistlab/dense.hpp"

namespace twistlab {

enum class EnsembleKind { ginibre_complex, haar_unitary_scaled, bernoulli_pm1 };

std::string ensemble_name(EnsembleKind kind);
EnsembleKind ensemble_from_name(const std::string& name);

// Sampling is a pure function of (kind, seed, dim): the stream id is
// derive(kind, dim, seed) and entries are drawn in column-major order.
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::ginibre_complex;
    std::uint64_t seed = 0;
    Eigen::Index dim = 1;
};

// ginibre_complex: independent standard complex Gaussians (re and im each of
// variance 1/2, so E|q|^2 = 1). haar_unitary_scaled: sqrt(dim) * U with U Haar
// unitary, obtained as the QR factor of a Ginibre draw with the R-diagonal
// phases absorbed into Q (the standard construction). bernoulli_pm1: entries
// +-1 equiprobable.
MatrixXcd sample(const EnsembleSpec& spec);

struct DeltaSchedule {
    double kappa3 = 0.5;
    double delta0 = 1.1;
};

// δ(N) = N^-(κ3+δ0)
double coupling_delta(const DeltaSchedule& sched, int N);

// Documented κ3 per ensemble at our normalizations: d/2 throughout
// (||Q|| ~ 2 sqrt(dim) for ginibre/bernoulli, exactly sqrt(dim) for Haar).
double default_kappa3(EnsembleKind kind, int d);

// Fraction of trials with s_min(A + Q) <= dim^(-beta/d); trial i draws from
// the sub-stream derive(spec.seed, i).
double smin_anticoncentration_probe(const EnsembleSpec& spec, const MatrixXcd& A, double beta,
                                    int trials, int d = 1);

}  // namespace twistlab
