#pragma once

#include "wep4/laurent.hpp"

#include <array>
#include <optional>

namespace wep4 {

/// Holomorphic data (f, g, h) of the four-dimensional representation.
struct WeierstrassTriple {
    LaurentPoly f;
    LaurentPoly g;
    LaurentPoly h;
};

/// Kawakami-Watanabe data: two Gauss-map components and the one-form coefficient h.
struct KwData {
    LaurentPoly g1;
    LaurentPoly g2;
    LaurentPoly h;
};

/// The four holomorphic one-form components phi_1..phi_4.
/// When built from a triple the source is kept so that regularity can use |f|(1+|g|^2+|h|^2).
struct PhiForm {
    std::array<LaurentPoly, 4> components;
    std::optional<WeierstrassTriple> source;

    std::array<Complex, 4> operator()(Complex w) const;

    /// sum_k phi_k^2 as a Laurent polynomial.
    LaurentPoly null_sum() const;
};

/// phi = (f(1-g^2-h^2)/2, i f(1+g^2+h^2)/2, f g, f h).
PhiForm phi_from_triple(const WeierstrassTriple& t);

/// phi = ((1+g1 g2)/2, i(1-g1 g2)/2, (g1-g2)/2, -i(g1+g2)/2) h.
PhiForm phi_from_kw(const KwData& d);

/// |sum phi_k(w)^2| / sum |phi_k(w)|^2, and 0 where every component vanishes.
double nullity_residual(const PhiForm& phi, Complex w);

struct ConformalFactor {
    double E = 0.0;          ///< <X_u, X_u> = <X_v, X_v> = sum |phi_k|^2 / 2
    double reg_weight = 0.0; ///< |f|(1+|g|^2+|h|^2), or 2 sqrt(E) without a source triple
};

ConformalFactor conformal_factor(const PhiForm& phi, Complex w);

/// Threshold below which reg_weight marks a point non-regular:
/// 1e-6 (1 + |w|^d), d the top exponent of phi (at least 0).
double regularity_threshold(const PhiForm& phi, Complex w);

} // namespace wep4
