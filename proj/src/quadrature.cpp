#include "wep4/quadrature.hpp"

#include "wep4/errors.hpp"

#include <cmath>
#include <numbers>

namespace wep4 {

GaussLegendreRule gauss_legendre(int n)
{
    if (n < 1) {
        throw ParameterError("Gauss-Legendre rule needs at least one node");
    }
    GaussLegendreRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like starting guess for the i-th largest root.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    return rule;
}

std::array<Complex, 4> integrate_segment(const std::function<std::array<Complex, 4>(Complex)>& integrand, Complex a,
                                         Complex b, const GaussLegendreRule& rule)
{
    const Complex mid = 0.5 * (a + b);
    const Complex half = 0.5 * (b - a);
    std::array<Complex, 4> sum{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const auto v = integrand(mid + half * rule.nodes[i]);
        for (std::size_t k = 0; k < 4; ++k) {
            sum[k] += rule.weights[i] * v[k];
        }
    }
    for (auto& s : sum) {
        s *= half;
    }
    return sum;
}

} // namespace wep4
