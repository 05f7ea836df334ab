#pragma once

#include "wep4/laurent.hpp"

#include <array>
#include <functional>
#include <vector>

namespace wep4 {

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1], ascending
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussLegendreRule gauss_legendre(int n);

/// Integral of a C^4-valued holomorphic integrand along the straight segment a -> b.
std::array<Complex, 4> integrate_segment(const std::function<std::array<Complex, 4>(Complex)>& integrand, Complex a,
                                         Complex b, const GaussLegendreRule& rule);

} // namespace wep4
