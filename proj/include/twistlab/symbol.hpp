#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/expression.hpp"
#include "twistlab/util.hpp"

namespace twistlab {

// Frequency lattice Λ = Π_j [-lows_j, highs_j] ∩ Z, iterated lexicographically.
struct FrequencyLattice {
    int d = 1;
    std::vector<int> lows;   // n_j >= 0
    std::vector<int> highs;  // m_j >= 0

    static FrequencyLattice make(int d, std::vector<int> lows, std::vector<int> highs);

    std::size_t size() const;
    std::vector<std::vector<int>> all() const;  // deterministic lexicographic order
    bool contains(const std::vector<int>& nu) const;
    int max_abs() const;
};

// One cell of a partition of [0,1]^d with a closed-form value on it.
// Cells are half-open [lo,hi) per axis; a cell with hi == 1 also owns x == 1,
// so lookup is total on [0,1]^d (right-continuous convention).
struct Piece {
    std::vector<double> lo;
    std::vector<double> hi;
    Expression expr;
};

class CoefficientFunction {
public:
    CoefficientFunction() = default;  // identically zero, d=1

    static CoefficientFunction zero(int d);
    static CoefficientFunction constant(int d, Cx c);
    static CoefficientFunction piecewise(int d, std::vector<Piece> pieces, double holder);
    // Opaque evaluator, used for mollified and externally sampled coefficients.
    static CoefficientFunction smooth(int d, std::function<Cx(const std::vector<double>&)> fn,
                                      double holder);

    Cx operator()(const std::vector<double>& x) const;
    int d() const { return d_; }
    double holder_exponent() const { return holder_; }
    bool closed_form() const { return !fn_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

private:
    int d_ = 1;
    std::vector<Piece> pieces_;
    std::function<Cx(const std::vector<double>&)> fn_;
    double holder_ = 1.0;
};

// The declared singularity set: points for d=1, axis-aligned hyperplanes for d>=2.
struct SingularSet {
    std::vector<double> points;
    struct Plane {
        int axis;
        double coord;
    };
    std::vector<Plane> planes;

    bool empty() const { return points.empty() && planes.empty(); }
};

class Symbol {
public:
    Symbol() = default;
    Symbol(int d, FrequencyLattice lattice, std::map<std::vector<int>, CoefficientFunction> coeffs,
           SingularSet singularities, std::string label);

    int d() const { return d_; }
    const FrequencyLattice& lattice() const { return lattice_; }
    const CoefficientFunction& coeff(const std::vector<int>& nu) const;
    const std::map<std::vector<int>, CoefficientFunction>& coeffs() const { return coeffs_; }
    const SingularSet& singularities() const { return singularities_; }
    const std::string& label() const { return label_; }
    double holder_exponent() const;  // min over coefficients

private:
    int d_ = 1;
    FrequencyLattice lattice_;
    std::map<std::vector<int>, CoefficientFunction> coeffs_;
    SingularSet singularities_;
    std::string label_;
};

struct MollifierSpec {
    int d = 1;
    double eta = 1.0 / 6.0;  // must lie in (0, 1/4)
    int quad_nodes = 64;
    double norm_const = 0.0;  // fixed by make() so the quadrature of the bump is 1

    static MollifierSpec make(int d, double eta = 1.0 / 6.0, int quad_nodes = 64);
};

// p(x,ξ) = Σ_{ν∈Λ} p_ν(x) e^{2iπ<ν,ξ>}; ξ is wrapped mod 1 per axis.
Cx eval_symbol(const Symbol& sym, const std::vector<double>& x, const std::vector<double>& xi);

// Discrete Fourier estimates of p_ν(x) for ν ∈ Λ from uniform ξ-grid samples
// (flattened lexicographically, grid[a] points on axis a at ξ_a = t/grid[a]).
std::vector<Cx> project_to_lattice(const std::vector<Cx>& samples, const std::vector<int>& grid,
                                   const FrequencyLattice& lattice);

// norm_const * exp(-1/(1-|y|^2)) inside the unit ball, 0 outside.
double bump(const std::vector<double>& y, const MollifierSpec& spec);

// p̃_ν(x) = ∫ p_ν(x - h^η y) ψ(y) dy with the 1-periodic extension of p_ν in x
// (x=0 takes the x=1 values). Quadrature panels are split at the points where
// the shifted argument crosses a declared singularity; each evaluation is
// re-done with doubled nodes and must agree to 1e-6 relative.
Symbol mollify(const Symbol& sym, double h, const MollifierSpec& spec);

struct DecayCheck {
    double c_k;
    bool pass;
};

// Ĉ_k = max over sampled x and ν ∈ Λ of |p_ν(x)| <ν>^k.
DecayCheck coeff_decay_check(const Symbol& sym, int k, int x_samples);

// Built-ins: "jordan", "hpm_example", "bidiagonal(a,b)".
Symbol symbol_from_library(const std::string& name);

Symbol read_symbol_manifest(const std::string& path);
void write_symbol_manifest(const Symbol& sym, const std::string& path);
Symbol parse_symbol_manifest(const std::string& text);
std::string serialize_symbol_manifest(const Symbol& sym);

// Resolve a symbol reference: library name (possibly parameterized) or manifest path.
Symbol resolve_symbol(const std::string& ref);

}  // namespace twistlab
