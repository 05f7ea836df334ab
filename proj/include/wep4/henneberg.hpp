#pragma once

#include "wep4/laurent.hpp"
#include "wep4/weierstrass.hpp"

#include <array>

namespace wep4 {

/// Member (m, n, lambda) of the higher-order Henneberg family; m and n positive odd.
class FamilyParams {
public:
    FamilyParams(int m, int n, Complex lambda);

    int m() const { return m_; }
    int n() const { return n_; }
    Complex lambda() const { return lambda_; }

    /// |Im lambda| <= 1e-12.
    bool lambda_is_real() const;

private:
    int m_;
    int n_;
    Complex lambda_;
};

/// Holomorphic curve in C^4; the immersion is its real part.
struct MinimalCurve {
    std::array<LaurentPoly, 4> X;

    std::array<Complex, 4> operator()(Complex w) const;
};

/// f = 2w^(-m-n-2)(w^(2m+2n) - 1), g = w^m, h = lambda w^n.
WeierstrassTriple family_triple(const FamilyParams& p);

/// Termwise antiderivative of each component, constants zero.
MinimalCurve integrate(const PhiForm& phi);

MinimalCurve family_curve(const FamilyParams& p);

/// Family f with g = w and h = lambda w held fixed.
MinimalCurve fixed_gh_curve(const FamilyParams& p);

/// Classical R^3 Henneberg one-form (g = z, dz-coefficient 1 - z^-4), phi_4 = 0.
PhiForm classic_henneberg_phi();

/// Seed whose third derivative is the family f:
/// 2/((m+n-1)(m+n)(m+n+1)) (w^(m+n+1) + w^(1-m-n)).
LaurentPoly seed_phi(int m, int n);

/// Immersion curve point built from derivatives of a seed Phi (g = w, h = lambda w, f = Phi''').
std::array<Complex, 4> integral_free_point(const LaurentPoly& seed, Complex lambda, Complex w);

/// Inverts integral_free_point for Phi(w). Throws ParameterError when |1 + lambda^2| < 1e-9.
Complex recover_seed(const std::array<Complex, 4>& k, Complex lambda, Complex w);

} // namespace wep4
