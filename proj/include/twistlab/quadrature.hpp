#pragma once

#include <functional>
#include <vector>

#include "twistlab/util.hpp"

namespace twistlab {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1,1]
    std::vector<double> weights;  // sum to 2
};

// Nodes/weights by Newton iteration on Legendre polynomials; cached per n.
const GaussLegendreRule& gauss_legendre(int n);

// ∫_a^b f, single Gauss-Legendre panel of n nodes.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);
Cx integrate_gl_cx(const std::function<Cx(double)>& f, double a, double b, int n);

// ∫_a^b f split at interior breakpoints (sorted, clipped to (a,b)), n nodes per panel.
Cx integrate_split_cx(const std::function<Cx(double)>& f, double a, double b,
                      const std::vector<double>& breakpoints, int n);

}  // namespace twistlab
