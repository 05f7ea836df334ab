#include "wep4/fidelity.hpp"

#include "wep4/geometry.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace wep4 {

namespace {

bool same_lambda(Complex a, Complex b)
{
    return std::abs(a - b) <= 1e-12;
}

std::string format_coefficient(double c)
{
    // Small rationals read better than 17 digits.
    for (int den = 1; den <= 64; ++den) {
        const double num = std::round(c * den);
        if (num != 0.0 && std::abs(c * den - num) <= 1e-7 * std::max(1.0, std::abs(c * den))) {
            char buf[48];
            if (den == 1) {
                std::snprintf(buf, sizeof buf, "%+.0f", num);
            } else {
                std::snprintf(buf, sizeof buf, "%+.0f/%d", num, den);
            }
            return buf;
        }
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%+.6g", c);
    return buf;
}

// Least-squares fit of a residual onto Re w^k and Im w^k, k in [kmin, kmax].
std::string harmonic_terms(const std::vector<Complex>& points, const std::vector<double>& residual, int kmin, int kmax)
{
    struct Column {
        int k;
        bool imag;
    };
    std::vector<Column> cols;
    for (int k = kmin; k <= kmax; ++k) {
        cols.push_back({k, false});
        if (k != 0) {
            cols.push_back({k, true});
        }
    }
    const auto rows = static_cast<Eigen::Index>(points.size());
    const auto ncols = static_cast<Eigen::Index>(cols.size());
    if (rows < ncols + 4) {
        return "too few samples to resolve the deviating terms";
    }
    Eigen::MatrixXd A(rows, ncols);
    Eigen::VectorXd b(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index c = 0; c < ncols; ++c) {
            const Complex z = ipow(points[i], cols[c].k);
            A(i, c) = cols[c].imag ? z.imag() : z.real();
        }
        b(i) = residual[i];
    }
    const Eigen::VectorXd norms = A.colwise().norm();
    for (Eigen::Index c = 0; c < ncols; ++c) {
        A.col(c) /= norms(c);
    }
    const Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
    const double misfit = (A * x - b).norm();
    if (!(misfit <= 1e-8 * b.norm())) {
        return "residual is not a combination of Re/Im w^k (non-harmonic slip)";
    }
    std::string terms;
    for (Eigen::Index c = 0; c < ncols; ++c) {
        const double coef = x(c) / norms(c);
        if (std::abs(coef) > 1e-9) {
            terms += " " + format_coefficient(coef) + (cols[c].imag ? "*Im(w^" : "*Re(w^") +
                     std::to_string(cols[c].k) + ")";
        }
    }
    return "fixture - pipeline =" + terms;
}

} // namespace

std::string_view to_string(Verdict v)
{
    return v == Verdict::pass ? "PASS" : "DEVIATES";
}

const FixtureAudit* FidelityReport::find(FixtureId id) const
{
    for (const auto& a : audits) {
        if (a.id == id) {
            return &a;
        }
    }
    return nullptr;
}

std::string FidelityReport::format() const
{
    static constexpr std::array<const char*, 4> kAxis = {"x", "y", "z", "w"};
    std::ostringstream os;
    os.precision(3);
    os << "fidelity report  m=" << m << " n=" << n << " lambda=" << lambda.real() << (lambda.imag() < 0 ? "" : "+")
       << lambda.imag() << "i  samples=" << samples << "  tol=" << tolerance << '\n';
    if (audits.empty()) {
        os << "  no displayed parametrization applies to this family member\n";
    }
    for (const auto& a : audits) {
        os << "  " << to_string(a.id) << " vs " << a.reference << ": " << to_string(a.verdict) << '\n';
        for (std::size_t k = 0; k < 4; ++k) {
            const auto& c = a.components[k];
            os << "    " << kAxis[k] << "  max|dev|=" << std::scientific << c.max_abs_deviation
               << "  scaled=" << c.max_scaled_deviation << std::defaultfloat;
            if (!c.diagnosis.empty()) {
                os << "  " << c.diagnosis;
            }
            os << '\n';
        }
        if (a.derivative_deviation) {
            const auto& d = *a.derivative_deviation;
            os << "    d/du vs X_u:" << std::scientific;
            for (int k = 0; k < 4; ++k) {
                os << ' ' << d[k];
            }
            os << "  d/dv vs X_v:";
            for (int k = 4; k < 8; ++k) {
                os << ' ' << d[k];
            }
            os << std::defaultfloat << '\n';
        }
    }
    return os.str();
}

std::vector<FixtureId> applicable_fixtures(const FamilyParams& p)
{
    std::vector<FixtureId> out;
    for (auto id : kAllFixtures) {
        const auto& info = fixture_info(id);
        if (info.m != p.m() || info.n != p.n()) {
            continue;
        }
        if (info.needs_real_lambda && !p.lambda_is_real()) {
            continue;
        }
        if (info.fixed_lambda && !same_lambda(*info.fixed_lambda, p.lambda())) {
            continue;
        }
        out.push_back(id);
    }
    return out;
}

FidelityReport fidelity_report(const FamilyParams& p, std::span<const Complex> samples, double tolerance)
{
    FidelityReport report;
    report.m = p.m();
    report.n = p.n();
    report.lambda = p.lambda();
    report.samples = samples.size();
    report.tolerance = tolerance;

    const PhiForm phi = phi_from_triple(family_triple(p));
    const MinimalCurve curve = integrate(phi);
    const std::vector<Complex> points(samples.begin(), samples.end());

    for (auto id : applicable_fixtures(p)) {
        const auto& info = fixture_info(id);
        FixtureAudit audit{id, {}, {}, std::nullopt, Verdict::pass};
        audit.reference = info.quantity == FixtureQuantity::position ? "immersion"
                          : info.quantity == FixtureQuantity::xu     ? "X_u"
                                                                     : "X_v";

        std::array<std::vector<double>, 4> fix;
        std::array<std::vector<double>, 4> ref;
        std::array<double, 8> deriv{};
        for (const Complex w : points) {
            const Vec4 f = fixture_eval_at(id, w, p.lambda());
            const SurfaceJet jet = surface_jet(phi, curve, w);
            const Vec4 r = info.quantity == FixtureQuantity::position ? jet.position
                           : info.quantity == FixtureQuantity::xu     ? jet.xu
                                                                      : jet.xv;
            for (int k = 0; k < 4; ++k) {
                fix[k].push_back(f[k]);
                ref[k].push_back(r[k]);
            }
            if (info.quantity == FixtureQuantity::position) {
                const double h = 1e-6 * std::max(1.0, std::abs(w));
                const Vec4 du = (fixture_eval_at(id, w + Complex{h, 0}, p.lambda()) -
                                 fixture_eval_at(id, w - Complex{h, 0}, p.lambda())) / (2.0 * h);
                const Vec4 dv = (fixture_eval_at(id, w + Complex{0, h}, p.lambda()) -
                                 fixture_eval_at(id, w - Complex{0, h}, p.lambda())) / (2.0 * h);
                for (int k = 0; k < 4; ++k) {
                    deriv[k] = std::max(deriv[k], std::abs(du[k] - jet.xu[k]) / std::max(1.0, std::abs(jet.xu[k])));
                    deriv[4 + k] =
                        std::max(deriv[4 + k], std::abs(dv[k] - jet.xv[k]) / std::max(1.0, std::abs(jet.xv[k])));
                }
            }
        }
        if (info.quantity == FixtureQuantity::position) {
            audit.derivative_deviation = deriv;
        }

        // Exponent window for the term fit: the reference's own range, widened by two.
        int kmin = 0;
        int kmax = 0;
        for (int k = 0; k < 4; ++k) {
            const auto& poly = info.quantity == FixtureQuantity::position ? curve.X[k] : phi.components[k];
            if (!poly.is_zero()) {
                kmin = std::min(kmin, *poly.min_exponent());
                kmax = std::max(kmax, *poly.max_exponent());
            }
        }
        kmin -= 2;
        kmax += 2;

        for (int k = 0; k < 4; ++k) {
            auto& c = audit.components[k];
            std::vector<double> diff(points.size());
            double fr = 0.0;
            double rr = 0.0;
            for (std::size_t i = 0; i < points.size(); ++i) {
                diff[i] = fix[k][i] - ref[k][i];
                c.max_abs_deviation = std::max(c.max_abs_deviation, std::abs(diff[i]));
                c.max_scaled_deviation =
                    std::max(c.max_scaled_deviation, std::abs(diff[i]) / std::max(1.0, std::abs(ref[k][i])));
                fr += fix[k][i] * ref[k][i];
                rr += ref[k][i] * ref[k][i];
            }
            if (c.max_scaled_deviation <= tolerance) {
                continue;
            }
            audit.verdict = Verdict::deviates;
            if (rr > 0.0) {
                const double factor = fr / rr;
                double worst = 0.0;
                for (std::size_t i = 0; i < points.size(); ++i) {
                    worst = std::max(worst, std::abs(fix[k][i] - factor * ref[k][i]) /
                                                std::max(1.0, std::abs(factor * ref[k][i])));
                }
                if (worst <= tolerance * std::max(1.0, std::abs(factor)) * 10.0) {
                    c.scale_factor = factor;
                    c.diagnosis = "global factor " + format_coefficient(factor);
                    continue;
                }
            }
            c.diagnosis = harmonic_terms(points, diff, kmin, kmax);
        }
        report.audits.push_back(std::move(audit));
    }
    return report;
}

} // namespace wep4
