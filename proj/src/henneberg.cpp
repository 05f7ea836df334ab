#include "wep4/henneberg.hpp"

#include "wep4/errors.hpp"

#include <cmath>
#include <string>

namespace wep4 {

namespace {

bool is_positive_odd(int k)
{
    return k > 0 && k % 2 == 1;
}

void require_odd_pair(int m, int n)
{
    if (!is_positive_odd(m) || !is_positive_odd(n)) {
        throw ParameterError("m and n must be positive odd integers, got m=" + std::to_string(m) +
                             ", n=" + std::to_string(n));
    }
}

} // namespace

FamilyParams::FamilyParams(int m, int n, Complex lambda)
    : m_(m)
    , n_(n)
    , lambda_(lambda)
{
    require_odd_pair(m, n);
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
        throw ParameterError("lambda must be finite");
    }
    // Closed-form denominators; odd m, n keep them away from zero.
    for (int d : {m + n - 1, 3 * m + n - 1, m + 3 * n - 1, m + n + 1, m - n - 1, n - m - 1,
                  2 * m + n - 1, n + 1, m + 2 * n - 1, m + 1}) {
        if (d == 0) {
            throw ParameterError("vanishing closed-form denominator");
        }
    }
}

bool FamilyParams::lambda_is_real() const
{
    return std::abs(lambda_.imag()) <= 1e-12;
}

std::array<Complex, 4> MinimalCurve::operator()(Complex w) const
{
    return {X[0](w), X[1](w), X[2](w), X[3](w)};
}

WeierstrassTriple family_triple(const FamilyParams& p)
{
    const int m = p.m();
    const int n = p.n();
    WeierstrassTriple t;
    t.f = LaurentPoly{{m + n - 2, 2.0}, {-(m + n + 2), -2.0}};
    t.g = LaurentPoly::monomial(m);
    t.h = LaurentPoly::monomial(n, p.lambda());
    return t;
}

MinimalCurve integrate(const PhiForm& phi)
{
    MinimalCurve c;
    for (std::size_t k = 0; k < 4; ++k) {
        c.X[k] = antiderivative(phi.components[k]);
    }
    return c;
}

MinimalCurve family_curve(const FamilyParams& p)
{
    return integrate(phi_from_triple(family_triple(p)));
}

MinimalCurve fixed_gh_curve(const FamilyParams& p)
{
    WeierstrassTriple t = family_triple(p);
    t.g = LaurentPoly::monomial(1);
    t.h = LaurentPoly::monomial(1, p.lambda());
    return integrate(phi_from_triple(t));
}

PhiForm classic_henneberg_phi()
{
    const LaurentPoly one = LaurentPoly::constant(1.0);
    const LaurentPoly g = LaurentPoly::monomial(1);
    const LaurentPoly form{{0, 1.0}, {-4, -1.0}};
    PhiForm phi;
    phi.components[0] = 0.5 * ((one - g * g) * form);
    phi.components[1] = Complex{0.0, 0.5} * ((one + g * g) * form);
    phi.components[2] = g * form;
    // Regularity uses |f|(1+|g|^2+|h|^2) with f the dz-coefficient.
    phi.source = WeierstrassTriple{form, g, LaurentPoly{}};
    return phi;
}

LaurentPoly seed_phi(int m, int n)
{
    require_odd_pair(m, n);
    const int s = m + n;
    const double c = 2.0 / (static_cast<double>(s - 1) * s * (s + 1));
    return LaurentPoly{{s + 1, c}, {1 - s, c}};
}

std::array<Complex, 4> integral_free_point(const LaurentPoly& seed, Complex lambda, Complex w)
{
    const Complex I{0.0, 1.0};
    const Complex L = 1.0 + lambda * lambda;
    const Complex phi0 = seed(w);
    const Complex phi1 = derivative(seed)(w);
    const Complex phi2 = derivative(seed, 2)(w);
    const Complex w2 = w * w;
    const Complex shift = w * phi1 - phi0;

    const Complex k1 = 0.5 * (1.0 - L * w2) * phi2 + L * shift;
    const Complex k2 = 0.5 * I * (1.0 + L * w2) * phi2 - I * L * shift;
    const Complex k3 = w * phi2 - phi1;
    return {k1, k2, k3, lambda * k3};
}

Complex recover_seed(const std::array<Complex, 4>& k, Complex lambda, Complex w)
{
    const Complex L = 1.0 + lambda * lambda;
    if (std::abs(L) < 1e-9) {
        throw ParameterError("seed recovery is singular for lambda^2 = -1");
    }
    const Complex I{0.0, 1.0};
    const Complex Lw2 = L * w * w;
    return (Lw2 - 1.0) / (2.0 * L) * k[0] - I * (Lw2 + 1.0) / (2.0 * L) * k[1] -
           w / L * (k[2] + lambda * k[3]);
}

} // namespace wep4
