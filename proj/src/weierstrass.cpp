#include "wep4/weierstrass.hpp"

#include <cmath>

namespace wep4 {

namespace {

const Complex kI{0.0, 1.0};
const LaurentPoly kOne = LaurentPoly::constant(1.0);

} // namespace

std::array<Complex, 4> PhiForm::operator()(Complex w) const
{
    return {components[0](w), components[1](w), components[2](w), components[3](w)};
}

LaurentPoly PhiForm::null_sum() const
{
    LaurentPoly s;
    for (const auto& c : components) {
        s += c * c;
    }
    return s;
}

PhiForm phi_from_triple(const WeierstrassTriple& t)
{
    const LaurentPoly sq = t.g * t.g + t.h * t.h;
    PhiForm phi;
    phi.components[0] = 0.5 * (t.f * (kOne - sq));
    phi.components[1] = (0.5 * kI) * (t.f * (kOne + sq));
    phi.components[2] = t.f * t.g;
    phi.components[3] = t.f * t.h;
    phi.source = t;
    return phi;
}

PhiForm phi_from_kw(const KwData& d)
{
    const LaurentPoly prod = d.g1 * d.g2;
    PhiForm phi;
    phi.components[0] = 0.5 * ((kOne + prod) * d.h);
    phi.components[1] = (0.5 * kI) * ((kOne - prod) * d.h);
    phi.components[2] = 0.5 * ((d.g1 - d.g2) * d.h);
    phi.components[3] = (-0.5 * kI) * ((d.g1 + d.g2) * d.h);
    return phi;
}

double nullity_residual(const PhiForm& phi, Complex w)
{
    const auto v = phi(w);
    Complex sum{};
    double norm = 0.0;
    for (const auto& c : v) {
        sum += c * c;
        norm += std::norm(c);
    }
    return norm == 0.0 ? 0.0 : std::abs(sum) / norm;
}

ConformalFactor conformal_factor(const PhiForm& phi, Complex w)
{
    const auto v = phi(w);
    double total = 0.0;
    for (const auto& c : v) {
        total += std::norm(c);
    }
    ConformalFactor out;
    out.E = 0.5 * total;
    if (phi.source) {
        const auto& t = *phi.source;
        out.reg_weight = std::abs(t.f(w)) * (1.0 + std::norm(t.g(w)) + std::norm(t.h(w)));
    } else {
        out.reg_weight = 2.0 * std::sqrt(out.E);
    }
    return out;
}

double regularity_threshold(const PhiForm& phi, Complex w)
{
    int top = 0;
    for (const auto& c : phi.components) {
        if (auto e = c.max_exponent()) {
            top = std::max(top, *e);
        }
    }
    return 1e-6 * (1.0 + std::pow(std::abs(w), top));
}

} // namespace wep4
