#include "wep4/geometry.hpp"

#include "wep4/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace wep4 {

Vec4 immersion_point(const MinimalCurve& c, Complex w)
{
    const auto z = c(w);
    return {z[0].real(), z[1].real(), z[2].real(), z[3].real()};
}

SurfaceJet surface_jet(const PhiForm& phi, const MinimalCurve& c, Complex w)
{
    SurfaceJet j;
    j.position = immersion_point(c, w);
    const auto v = phi(w);
    for (int k = 0; k < 4; ++k) {
        j.xu[k] = v[k].real();
        j.xv[k] = -v[k].imag();
    }
    j.E = j.xu.squaredNorm();
    j.F = j.xu.dot(j.xv);
    j.G = j.xv.squaredNorm();
    j.reg_weight = conformal_factor(phi, w).reg_weight;
    j.regular = j.reg_weight > regularity_threshold(phi, w);
    return j;
}

std::pair<Vec4, Vec4> psi_vectors(const SurfaceJet& j)
{
    const auto rotate = [](const Vec4& x) { return Vec4(-x[1], x[0], -x[3], x[2]); };
    return {rotate(j.xu), rotate(j.xv)};
}

FrameScalars frame_scalars(const FamilyParams& p, Complex w)
{
    if (p.m() != 1 || p.n() != 1 || !p.lambda_is_real()) {
        throw ParameterError("frame scalars are defined for m = n = 1 and real lambda");
    }
    if (w == Complex{}) {
        throw PunctureError("frame scalars at w = 0");
    }
    const double u = w.real();
    const double v = w.imag();
    const double lam = p.lambda().real();
    const double g1 = u, g2 = v, h1 = u, h2 = v;
    const double r2 = u * u + v * v;

    FrameScalars s;
    s.A = std::pow(r2, 4) - 2.0 * r2 * r2 + 16.0 * u * u * v * v;
    s.B = std::pow(-g1 + lam * h2, 2) + std::pow(g2 + lam * h1, 2);
    s.C = std::pow(g1 + lam * h2, 2) + std::pow(-g2 + lam * h1, 2);
    s.D = std::pow(r2, -4);
    s.p = (s.A + 1.0) * (s.B + 1.0) * (s.C + 1.0) * s.D;
    s.q = (s.A + 1.0) * (1.0 - s.B) * (s.C + 1.0) * s.D;
    return s;
}

NormalFrame normal_frame(const SurfaceJet& j)
{
    if (!j.regular) {
        throw NonRegularPointError("normal frame requested at a non-regular point");
    }
    const auto [psi1, psi2] = psi_vectors(j);
    Eigen::Matrix4d M;
    M << j.xu, j.xv, psi1, psi2;

    const Eigen::JacobiSVD<Eigen::Matrix4d> svd(M);
    const auto& sv = svd.singularValues();
    if (!(sv[3] > 1e-10 * sv[0])) {
        throw DegenerateFrameError("X_u, X_v, psi_1, psi_2 do not span R^4");
    }

    // Modified Gram-Schmidt with one re-orthogonalisation pass.
    std::array<Vec4, 4> q;
    for (int c = 0; c < 4; ++c) {
        Vec4 x = M.col(c);
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < c; ++k) {
                x -= q[k].dot(x) * q[k];
            }
        }
        q[c] = x.normalized();
    }
    return {q[0], q[1], q[2], q[3]};
}

std::pair<Vec4, Vec4> displayed_normals(const SurfaceJet& j, const FrameScalars& s)
{
    if (!(s.B > 1e-12)) {
        throw DegenerateFrameError("displayed normals divide by B, which vanishes here");
    }
    const auto [psi1, psi2] = psi_vectors(j);
    const double scale = std::sqrt((s.B + 1.0) / (4.0 * (s.A + 1.0) * s.B * (s.C + 1.0) * s.D));
    const Vec4 n1 = scale * ((1.0 - s.B) / (1.0 + s.B) * j.xv + psi1);
    const Vec4 n2 = scale * ((s.B - 1.0) / (s.B + 1.0) * j.xu + psi2);
    return {n1, n2};
}

double gauss_curvature(const PhiForm& phi, Complex w)
{
    const auto centre = conformal_factor(phi, w);
    const double eps = regularity_threshold(phi, w);
    if (!(centre.reg_weight > eps) || !(centre.E > eps * eps)) {
        throw NonRegularPointError("Gauss curvature is undefined at a non-regular point");
    }
    const auto log_e = [&](Complex z) { return std::log(conformal_factor(phi, z).E); };
    const double centre_log = std::log(centre.E);
    const auto laplacian = [&](double h) {
        const Complex dx{h, 0.0};
        const Complex dy{0.0, h};
        return (log_e(w + dx) + log_e(w - dx) + log_e(w + dy) + log_e(w - dy) - 4.0 * centre_log) / (h * h);
    };
    const double h = 1e-4 * std::max(1.0, std::abs(w));
    const double lap = (4.0 * laplacian(0.5 * h) - laplacian(h)) / 3.0;
    return -lap / (2.0 * centre.E);
}

double harmonicity_residual(const std::function<Vec4(Complex)>& map, Complex w, double h)
{
    const Complex dx{h, 0.0};
    const Complex dy{0.0, h};
    const Vec4 lap = (map(w + dx) + map(w - dx) + map(w + dy) + map(w - dy) - 4.0 * map(w)) / (h * h);
    return lap.cwiseAbs().maxCoeff();
}

double harmonicity_residual(const MinimalCurve& c, Complex w, double h)
{
    if (std::abs(w) <= 2.0 * h && c.X[0].has_negative_exponents()) {
        throw PunctureError("harmonicity stencil reaches the puncture");
    }
    return harmonicity_residual([&c](Complex z) { return immersion_point(c, z); }, w, h);
}

namespace {

IntPoly2 multiply(const IntPoly2& a, const IntPoly2& b)
{
    IntPoly2 out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

IntPoly2 add(IntPoly2 a, const IntPoly2& b)
{
    for (const auto& [e, c] : b) {
        a[e] += c;
    }
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    return a;
}

} // namespace

double curvature_denominator(double u, double v, int k)
{
    const double r2 = u * u + v * v;
    const double middle = std::pow(r2 * r2 - 1.0, 2) + std::pow(4.0 * u * v, 2);
    return (r2 + 1.0) * middle * std::pow(2.0 * r2 + 1.0, k);
}

CurvatureDenominatorCheck curvature_denominator_check()
{
    const IntPoly2 r2{{{2, 0}, 1}, {{0, 2}, 1}};
    const IntPoly2 inner = add(multiply(r2, r2), IntPoly2{{{0, 0}, -1}});
    const IntPoly2 four_uv{{{1, 1}, 4}};

    CurvatureDenominatorCheck out;
    out.expanded = add(multiply(inner, inner), multiply(four_uv, four_uv));
    out.displayed = {{{8, 0}, 1},  {{6, 2}, 4},  {{4, 4}, 6}, {{2, 6}, 4}, {{0, 8}, 1},
                     {{4, 0}, -2}, {{0, 4}, -2}, {{2, 2}, 12}, {{0, 0}, 1}};
    out.identity_holds = out.expanded == out.displayed;

    out.positive_k1 = true;
    out.positive_k2 = true;
    for (int i = -40; i <= 40; ++i) {
        for (int k = -40; k <= 40; ++k) {
            if (i == 0 && k == 0) {
                continue;
            }
            const double u = i / 20.0;
            const double v = k / 20.0;
            const double r = u * u + v * v;
            if (std::pow(r * r - 1.0, 2) + std::pow(4.0 * u * v, 2) == 0.0) {
                ++out.branch_zeros;
                continue;
            }
            out.positive_k1 = out.positive_k1 && curvature_denominator(u, v, 1) > 0.0;
            out.positive_k2 = out.positive_k2 && curvature_denominator(u, v, 2) > 0.0;
        }
    }
    return out;
}

} // namespace wep4
