#include "twistlab/perturb.hpp"

#include <cmath>

#include "twistlab/rng.hpp"

namespace twistlab {

std::string ensemble_name(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::ginibre_complex: return "ginibre_complex";
        case EnsembleKind::haar_unitary_scaled: return "haar_unitary_scaled";
        case EnsembleKind::bernoulli_pm1: return "bernoulli_pm1";
    }
    return "?";
}

EnsembleKind ensemble_from_name(const std::string& name) {
    if (name == "ginibre_complex") return EnsembleKind::ginibre_complex;
    if (name == "haar_unitary_scaled") return EnsembleKind::haar_unitary_scaled;
    if (name == "bernoulli_pm1") return EnsembleKind::bernoulli_pm1;
    throw PreconditionError("unknown ensemble kind: " + name);
}

static MatrixXcd sample_ginibre(CounterRng& rng, Eigen::Index n) {
    MatrixXcd Q(n, n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = rng.next_gaussian();
            const double im = rng.next_gaussian();
            Q(i, j) = Cx(re, im) * inv_sqrt2;
        }
    return Q;
}

MatrixXcd sample(const EnsembleSpec& spec) {
    if (spec.dim < 1) throw PreconditionError("sample: dim must be >= 1");
    CounterRng rng(CounterRng::derive(
        {static_cast<std::uint64_t>(spec.kind), static_cast<std::uint64_t>(spec.dim), spec.seed}));
    const Eigen::Index n = spec.dim;
    switch (spec.kind) {
        case EnsembleKind::ginibre_complex: return sample_ginibre(rng, n);
        case EnsembleKind::haar_unitary_scaled: {
            const MatrixXcd G = sample_ginibre(rng, n);
            Eigen::HouseholderQR<MatrixXcd> qr(G);
            MatrixXcd Q = qr.householderQ() * MatrixXcd::Identity(n, n);
            const MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
            for (Eigen::Index j = 0; j < n; ++j) {
                const Cx r = R(j, j);
                const double a = std::abs(r);
                Q.col(j) *= (a > 0.0) ? r / a : Cx(1.0, 0.0);
            }
            return std::sqrt(static_cast<double>(n)) * Q;
        }
        case EnsembleKind::bernoulli_pm1: {
            MatrixXcd Q(n, n);
            for (Eigen::Index j = 0; j < n; ++j)
                for (Eigen::Index i = 0; i < n; ++i)
                    Q(i, j) = (rng.next_u64() & 1u) ? Cx(1.0, 0.0) : Cx(-1.0, 0.0);
            return Q;
        }
    }
    throw PreconditionError("sample: unknown ensemble kind");
}

double coupling_delta(const DeltaSchedule& sched, int N) {
    if (N < 1) throw PreconditionError("coupling_delta: N must be >= 1");
    if (sched.delta0 <= 0.0 || sched.kappa3 < 0.0)
        throw PreconditionError("coupling_delta: need delta0 > 0 and kappa3 >= 0");
    return std::pow(static_cast<double>(N), -(sched.kappa3 + sched.delta0));
}

double default_kappa3(EnsembleKind kind, int d) {
    (void)kind;
    return 0.5 * d;
}

double smin_anticoncentration_probe(const EnsembleSpec& spec, const MatrixXcd& A, double beta,
                                    int trials, int d) {
    if (A.rows() != spec.dim || A.cols() != spec.dim)
        throw PreconditionError("smin probe: A dimension mismatch");
    if (trials < 1) throw PreconditionError("smin probe: trials must be >= 1");
    const double threshold = std::pow(static_cast<double>(spec.dim), -beta / d);
    int hits = 0;
    for (int i = 0; i < trials; ++i) {
        EnsembleSpec trial = spec;
        trial.seed = CounterRng::derive({spec.seed, static_cast<std::uint64_t>(i)});
        const VectorXd s = singular_values_dense(A + sample(trial));
        if (s(s.size() - 1) <= threshold) ++hits;
    }
    return static_cast<double>(hits) / trials;
}

}  // namespace twistlab
