#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wep4/errors.hpp"
#include "wep4/henneberg.hpp"

#include <limits>
#include <random>
#include <vector>

using namespace wep4;

namespace {

struct Term {
    int e;
    Complex c;
};

// phi_k of the family written out by hand as term lists:
// f/2 = w^a - w^-b with a = m+n-2, b = m+n+2.
std::array<std::vector<Term>, 4> family_phi_terms(int m, int n, Complex lam)
{
    const int a = m + n - 2;
    const int b = m + n + 2;
    const Complex l2 = lam * lam;
    const Complex I{0.0, 1.0};
    std::array<std::vector<Term>, 4> t;
    // (w^a - w^-b)(1 - w^2m - l2 w^2n)
    t[0] = {{a, 1.0}, {a + 2 * m, -1.0}, {a + 2 * n, -l2}, {-b, -1.0}, {2 * m - b, 1.0}, {2 * n - b, l2}};
    // i (w^a - w^-b)(1 + w^2m + l2 w^2n)
    t[1] = {{a, I}, {a + 2 * m, I}, {a + 2 * n, I * l2}, {-b, -I}, {2 * m - b, -I}, {2 * n - b, -I * l2}};
    t[2] = {{a + m, 2.0}, {m - b, -2.0}};
    t[3] = {{a + n, 2.0 * lam}, {n - b, -2.0 * lam}};
    return t;
}

// Closed-form curve: each term c w^e integrates to c w^(e+1) / (e+1).
std::array<Complex, 4> closed_form_curve(int m, int n, Complex lam, Complex w)
{
    std::array<Complex, 4> x{};
    const auto t = family_phi_terms(m, n, lam);
    for (std::size_t k = 0; k < 4; ++k) {
        for (const auto& [e, c] : t[k]) {
            REQUIRE(e != -1);
            x[k] += c * std::pow(w, static_cast<double>(e + 1)) / static_cast<double>(e + 1);
        }
    }
    return x;
}

// Same, for g = w and h = lambda w held fixed.
std::array<Complex, 4> closed_form_fixed_gh(int m, int n, Complex lam, Complex w)
{
    const int a = m + n - 2;
    const int b = m + n + 2;
    const Complex L = 1.0 + lam * lam;
    const Complex I{0.0, 1.0};
    const std::vector<Term> t1 = {{a, 1.0}, {a + 2, -L}, {-b, -1.0}, {2 - b, L}};
    const std::vector<Term> t2 = {{a, I}, {a + 2, I * L}, {-b, -I}, {2 - b, -I * L}};
    const std::vector<Term> t3 = {{a + 1, 2.0}, {1 - b, -2.0}};
    std::array<Complex, 4> x{};
    for (std::size_t k = 0; k < 3; ++k) {
        for (const auto& [e, c] : (k == 0 ? t1 : k == 1 ? t2 : t3)) {
            x[k] += c * std::pow(w, static_cast<double>(e + 1)) / static_cast<double>(e + 1);
        }
    }
    x[3] = lam * x[2];
    return x;
}

std::array<Complex, 4> contour_derivative(const std::function<std::array<Complex, 4>(Complex)>& F, Complex w,
                                          double rho)
{
    const int N = 64;
    std::array<Complex, 4> d{};
    for (int j = 0; j < N; ++j) {
        const Complex e = std::polar(1.0, 2.0 * M_PI * j / N);
        const auto v = F(w + rho * e);
        for (std::size_t k = 0; k < 4; ++k) {
            d[k] += v[k] / e;
        }
    }
    for (auto& c : d) {
        c /= N * rho;
    }
    return d;
}

double rel_gap(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b)
{
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        num += std::norm(a[k] - b[k]);
        den += std::norm(b[k]);
    }
    return std::sqrt(num) / std::max(1.0, std::sqrt(den));
}

const std::vector<std::pair<int, int>> kPairs = {{1, 1}, {1, 3}, {3, 1}, {3, 3}, {3, 5}};
const std::vector<Complex> kLambdas = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.5, -2.0}};

} // namespace

TEST_CASE("family parameters")
{
    CHECK_THROWS_AS(FamilyParams(2, 1, 0.0), ParameterError);
    CHECK_THROWS_AS(FamilyParams(1, -1, 0.0), ParameterError);
    CHECK_THROWS_AS(FamilyParams(1, 1, Complex{NAN, 0.0}), ParameterError);
    CHECK(FamilyParams(1, 1, 2.0).lambda_is_real());
    CHECK_FALSE(FamilyParams(1, 1, Complex{2.0, 1e-9}).lambda_is_real());
}

TEST_CASE("family triple")
{
    const Complex lam{0.3, 0.4};
    const auto t11 = family_triple(FamilyParams(1, 1, lam));
    CHECK(t11.f == LaurentPoly{{0, 2.0}, {-4, -2.0}});
    CHECK(t11.g == LaurentPoly{{1, 1.0}});
    CHECK(t11.h == LaurentPoly{{1, lam}});

    const auto t13 = family_triple(FamilyParams(1, 3, lam));
    CHECK(t13.f == LaurentPoly{{2, 2.0}, {-6, -2.0}});
    CHECK(t13.h == LaurentPoly{{3, lam}});
}

TEST_CASE("family curve coefficients")
{
    for (const Complex lam : kLambdas) {
        const Complex L = 1.0 + lam * lam;
        const MinimalCurve c = family_curve(FamilyParams(1, 1, lam));
        CHECK(coefficients_close(c.X[0], LaurentPoly{{1, 1.0}, {3, -L / 3.0}, {-3, 1.0 / 3}, {-1, -L}}));
        CHECK(coefficients_close(c.X[3], LaurentPoly{{2, lam}, {-2, lam}}));
        // The y coordinate: negative powers carry the same sign as the positive ones.
        const Complex I{0.0, 1.0};
        CHECK(coefficients_close(c.X[1], LaurentPoly{{1, I}, {3, I * L / 3.0}, {-3, I / 3.0}, {-1, I * L}}));
    }
    const MinimalCurve c13 = family_curve(FamilyParams(1, 3, {1.0, 1.0}));
    CHECK(coefficients_close(c13.X[2], LaurentPoly{{4, 0.5}, {-4, 0.5}}));
}

TEST_CASE("family curve against the closed form")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> r(0.5, 2.0);
    std::uniform_real_distribution<double> th(0.0, 2.0 * M_PI);
    for (const auto& [m, n] : kPairs) {
        for (const Complex lam : kLambdas) {
            const MinimalCurve c = family_curve(FamilyParams(m, n, lam));
            for (int t = 0; t < 20; ++t) {
                const Complex w = std::polar(r(rng), th(rng));
                CHECK(rel_gap(c(w), closed_form_curve(m, n, lam, w)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("integrate back-differentiates")
{
    for (const auto& [m, n] : kPairs) {
        for (const Complex lam : kLambdas) {
            const PhiForm phi = phi_from_triple(family_triple(FamilyParams(m, n, lam)));
            const MinimalCurve c = integrate(phi);
            for (std::size_t k = 0; k < 4; ++k) {
                CHECK(coefficients_close(derivative(c.X[k]), phi.components[k]));
            }
        }
    }
}

TEST_CASE("fixed g, h curve")
{
    for (const Complex lam : kLambdas) {
        const FamilyParams p(1, 1, lam);
        const MinimalCurve a = fixed_gh_curve(p);
        const MinimalCurve b = family_curve(p);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(coefficients_close(a.X[k], b.X[k]));
        }
    }
    const MinimalCurve k13 = fixed_gh_curve(FamilyParams(1, 3, {1.0, 1.0}));
    CHECK(coefficients_close(k13.X[2], LaurentPoly{{4, 0.5}, {-4, 0.5}}));

    // k1 for (1,3,0): integrate (w^2 - w^-6)(1 - w^2) by hand.
    const MinimalCurve k130 = fixed_gh_curve(FamilyParams(1, 3, 0.0));
    CHECK(coefficients_close(k130.X[0], LaurentPoly{{3, 1.0 / 3}, {5, -1.0 / 5}, {-5, 1.0 / 5}, {-3, -1.0 / 3}}));

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> r(0.5, 2.0);
    std::uniform_real_distribution<double> th(0.0, 2.0 * M_PI);
    for (const auto& [m, n] : kPairs) {
        const Complex lam{0.5, -2.0};
        const MinimalCurve c = fixed_gh_curve(FamilyParams(m, n, lam));
        const Complex w = std::polar(r(rng), th(rng));
        CHECK(rel_gap(c(w), closed_form_fixed_gh(m, n, lam, w)) <= 1e-12);
    }
}

TEST_CASE("classical Henneberg")
{
    const PhiForm phi = classic_henneberg_phi();
    CHECK(phi.components[2] == LaurentPoly{{1, 1.0}, {-3, -1.0}});
    CHECK(phi.null_sum().is_zero());
    const MinimalCurve classic = integrate(phi);
    const MinimalCurve h = family_curve(FamilyParams(1, 1, 0.0));
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(coefficients_close(h.X[k], 2.0 * classic.X[k]));
    }
    CHECK(h.X[3].is_zero());
}

TEST_CASE("seed")
{
    CHECK(coefficients_close(seed_phi(1, 1), LaurentPoly{{3, 1.0 / 3}, {-1, 1.0 / 3}}));
    CHECK(coefficients_close(seed_phi(1, 3), LaurentPoly{{5, 1.0 / 30}, {-3, 1.0 / 30}}));
    CHECK(coefficients_close(derivative(seed_phi(1, 1), 3), LaurentPoly{{0, 2.0}, {-4, -2.0}}));
    for (const auto& [m, n] : kPairs) {
        CHECK(coefficients_close(derivative(seed_phi(m, n), 3), family_triple(FamilyParams(m, n, 0.0)).f));
    }
}

TEST_CASE("integral-free point")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> r(0.8, 2.0);
    std::uniform_real_distribution<double> th(0.0, 2.0 * M_PI);
    const MinimalCurve h110 = family_curve(FamilyParams(1, 1, 0.0));
    for (int t = 0; t < 100; ++t) {
        const Complex w = std::polar(r(rng), th(rng));
        const auto k = integral_free_point(seed_phi(1, 1), 0.0, w);
        const auto x = h110(w);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(std::abs(k[i] - x[i]) <= 1e-12 * std::max(1.0, std::abs(x[i])));
        }
    }

    const Complex lam{0.5, -2.0};
    for (const auto& [m, n] : kPairs) {
        const LaurentPoly seed = seed_phi(m, n);
        const PhiForm phi = phi_from_triple({derivative(seed, 3), LaurentPoly{{1, 1.0}}, LaurentPoly{{1, lam}}});
        for (int t = 0; t < 100; ++t) {
            const Complex w = std::polar(r(rng), th(rng));
            const auto k = integral_free_point(seed, lam, w);
            if (std::abs(k[2]) > 1e-9) {
                CHECK(std::abs(k[3] / k[2] - lam) <= 1e-12 * std::abs(lam));
            }
            const auto d = contour_derivative([&](Complex z) { return integral_free_point(seed, lam, z); }, w, 0.3);
            CHECK(rel_gap(d, phi(w)) <= 1e-11);
        }
    }
}

TEST_CASE("seed recovery")
{
    const LaurentPoly seed = seed_phi(1, 1);
    const Complex w{2.0, 0.0};
    CHECK(std::abs(recover_seed(integral_free_point(seed, 1.0, w), 1.0, w) - seed(w)) <= 1e-12 * std::abs(seed(w)));
    CHECK_THROWS_AS(recover_seed(integral_free_point(seed, Complex{0.0, 1.0}, w), Complex{0.0, 1.0}, w),
                    ParameterError);

    const Complex c{1.25, -0.5};
    for (const Complex lam : kLambdas) {
        const Complex z{0.3, 1.7};
        // Exact in exact arithmetic; in doubles the two k-terms cancel at the scale |L z^2| |c|.
        const double scale = 1.0 + std::abs((1.0 + lam * lam) * z * z);
        CHECK(std::abs(recover_seed(integral_free_point(LaurentPoly{{0, c}}, lam, z), lam, z) - c) <=
              4.0 * std::numeric_limits<double>::epsilon() * scale * std::abs(c));
    }
}
