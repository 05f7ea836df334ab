#pragma once

#include "wep4/henneberg.hpp"
#include "wep4/types.hpp"
#include "wep4/weierstrass.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

namespace wep4 {

/// Real part of the curve at w. Throws PunctureError at w = 0.
Vec4 immersion_point(const MinimalCurve& c, Complex w);

/// Pointwise first-order data. X_u = Re Phi(w), X_v = -Im Phi(w).
struct SurfaceJet {
    Vec4 position = Vec4::Zero();
    Vec4 xu = Vec4::Zero();
    Vec4 xv = Vec4::Zero();
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
    double reg_weight = 0.0;
    bool regular = false;
};

SurfaceJet surface_jet(const PhiForm& phi, const MinimalCurve& c, Complex w);

/// psi_1 = (-Xu2, Xu1, -Xu4, Xu3), psi_2 likewise from X_v.
std::pair<Vec4, Vec4> psi_vectors(const SurfaceJet& j);

/// Closed-form scalars for H(1,1) with real lambda; p and q are the claimed
/// values of <X_u, X_u> and <X_u, psi_2>.
struct FrameScalars {
    double p = 0.0;
    double q = 0.0;
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
};

/// Requires m = n = 1, real lambda and w != 0 (ParameterError / PunctureError otherwise).
FrameScalars frame_scalars(const FamilyParams& p, Complex w);

struct NormalFrame {
    Vec4 e1 = Vec4::Zero();
    Vec4 e2 = Vec4::Zero();
    Vec4 n1 = Vec4::Zero();
    Vec4 n2 = Vec4::Zero();
};

/// Gram-Schmidt on (X_u, X_v, psi_1, psi_2).
/// Throws NonRegularPointError off the regular set, DegenerateFrameError if the four vectors lose rank.
NormalFrame normal_frame(const SurfaceJet& j);

/// The two normals as displayed for H(1,1) with real lambda, evaluated literally.
/// Throws DegenerateFrameError when B <= 1e-12 (the display divides by B).
std::pair<Vec4, Vec4> displayed_normals(const SurfaceJet& j, const FrameScalars& s);

/// K = -Laplacian(ln E) / (2E): five-point Laplacian with h = 1e-4 max(1, |w|),
/// one Richardson step between h and h/2. Throws NonRegularPointError at non-regular points.
double gauss_curvature(const PhiForm& phi, Complex w);

/// Largest |five-point Laplacian| over the four coordinates of a map C -> R^4.
double harmonicity_residual(const std::function<Vec4(Complex)>& map, Complex w, double h);

/// Same, for the real part of a minimal curve. Throws PunctureError if the stencil reaches w = 0.
double harmonicity_residual(const MinimalCurve& c, Complex w, double h);

/// Integer bivariate polynomial, keyed by (power of u, power of v).
using IntPoly2 = std::map<std::pair<int, int>, std::int64_t>;

struct CurvatureDenominatorCheck {
    IntPoly2 expanded;    ///< ((u^2+v^2)^2 - 1)^2 + (4uv)^2 expanded
    IntPoly2 displayed;   ///< the octic as printed
    bool identity_holds = false;
    bool positive_k1 = false; ///< D(u,v) > 0 on the sample grid off the branch locus, k = 1
    bool positive_k2 = false; ///< same for k = 2
    int branch_zeros = 0;     ///< grid points where the middle factor vanishes
};

/// D(u, v) = (u^2+v^2+1) (((u^2+v^2)^2-1)^2 + (4uv)^2) (2(u^2+v^2)+1)^k.
double curvature_denominator(double u, double v, int k);

CurvatureDenominatorCheck curvature_denominator_check();

} // namespace wep4
