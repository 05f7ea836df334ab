#include "wep4/fixtures.hpp"

#include "wep4/errors.hpp"

#include <cmath>

namespace wep4 {

namespace {

constexpr Complex kOnePlusI{1.0, 1.0};

const std::array<FixtureInfo, 8> kInfo = {{
    {"case1_real", FixtureCoords::cartesian, FixtureQuantity::position, 1, 1, false, std::nullopt},
    {"case2_real_lambda", FixtureCoords::cartesian, FixtureQuantity::position, 1, 1, true, std::nullopt},
    {"ex1_cart", FixtureCoords::cartesian, FixtureQuantity::position, 1, 1, false, kOnePlusI},
    {"ex1_polar", FixtureCoords::polar, FixtureQuantity::position, 1, 1, false, kOnePlusI},
    {"ex2_cart", FixtureCoords::cartesian, FixtureQuantity::position, 1, 3, false, kOnePlusI},
    {"ex2_polar", FixtureCoords::polar, FixtureQuantity::position, 1, 3, false, kOnePlusI},
    {"xu_case2", FixtureCoords::cartesian, FixtureQuantity::xu, 1, 1, true, std::nullopt},
    {"xv_case2", FixtureCoords::cartesian, FixtureQuantity::xv, 1, 1, true, std::nullopt},
}};

Vec4 case1_real(double u, double v, double al, double be)
{
    const double r2 = u * u + v * v;
    const double c = 1.0 + al * al - be * be;
    const double ab = 2.0 * al * be;
    const double re3 = u * u * u - 3.0 * u * v * v;
    const double im3 = 3.0 * u * u * v - v * v * v;
    const double x = u - c / 3.0 * re3 - c / r2 * u + re3 / (3.0 * r2 * r2 * r2) + ab / 3.0 * im3 + ab / r2 * v;
    const double y = -v - c / 3.0 * im3 - c / r2 * v - im3 / (3.0 * r2 * r2 * r2) - ab / 3.0 * re3 + ab / r2 * u;
    const double z = (u * u - v * v) * (1.0 + 1.0 / (r2 * r2));
    const double w = al * (u * u - v * v) * (1.0 + 1.0 / (r2 * r2)) - 2.0 * be * u * v * (1.0 - 1.0 / (r2 * r2));
    return {x, y, z, w};
}

Vec4 case2_real_lambda(double u, double v, double lam)
{
    const double r2 = u * u + v * v;
    const double c = 1.0 + lam * lam;
    const double re3 = u * u * u - 3.0 * u * v * v;
    const double im3 = 3.0 * u * u * v - v * v * v;
    const double x = u - c / 3.0 * re3 + re3 / (3.0 * r2 * r2 * r2) - c * u / r2;
    const double y = -v - c / 3.0 * im3 - im3 / (3.0 * r2 * r2 * r2) - c * v / r2;
    const double z = u * u - v * v + (u * u - v * v) / (r2 * r2);
    return {x, y, z, lam * z};
}

Vec4 ex1_cart(double u, double v)
{
    const double r2 = u * u + v * v;
    const double re3 = u * u * u - 3.0 * u * v * v;
    const double im3 = 3.0 * u * u * v - v * v * v;
    const double x = u - re3 / 3.0 - u / r2 + re3 / (3.0 * r2 * r2 * r2) + 2.0 / 3.0 * im3 + 2.0 * v / r2;
    const double y = -v - im3 / 3.0 - v / r2 - im3 / (3.0 * r2 * r2 * r2) - 2.0 / 3.0 * re3 + 2.0 * u / r2;
    const double z = (u * u - v * v) * (1.0 + 1.0 / (r2 * r2));
    const double w = (u * u - v * v) * (1.0 + 1.0 / (r2 * r2)) - 2.0 * u * v * (1.0 - 1.0 / (r2 * r2));
    return {x, y, z, w};
}

Vec4 ex1_polar(double r, double t)
{
    const double r3 = r * r * r;
    const double x = (r - 1.0 / r) * std::cos(t) + 2.0 / r * std::sin(t) - (r3 - 1.0 / r3) / 3.0 * std::cos(3.0 * t) +
                     2.0 / 3.0 * r3 * std::sin(3.0 * t);
    const double y = -(r + 1.0 / r) * std::sin(t) + 2.0 / r * std::cos(t) - (r3 + 1.0 / r3) / 3.0 * std::sin(3.0 * t) -
                     2.0 / 3.0 * r3 * std::cos(3.0 * t);
    const double z = (r * r + 1.0 / (r * r)) * std::cos(2.0 * t);
    const double w = (r * r + 1.0 / (r * r)) * std::cos(2.0 * t) - (r * r - 1.0 / (r * r)) * std::sin(2.0 * t);
    return {x, y, z, w};
}

Vec4 ex2_cart(double u, double v)
{
    const double u2 = u * u;
    const double v2 = v * v;
    const double r2 = u2 + v2;
    const double u3 = u2 * u, v3 = v2 * v;
    const double u4 = u2 * u2, v4 = v2 * v2;
    const double u5 = u4 * u, v5 = v4 * v;
    const double u6 = u4 * u2, v6 = v4 * v2;
    const double u7 = u6 * u, v7 = v6 * v;
    const double u8 = u4 * u4, v8 = v4 * v4;
    const double u9 = u8 * u, v9 = v8 * v;
    const double r6 = r2 * r2 * r2;
    const double r10 = r6 * r2 * r2;

    const double x = (u3 - 3.0 * u * v2) / 3.0 - (u7 - 21.0 * u5 * v2 + 35.0 * u3 * v4 - 7.0 * u * v6) / 7.0 +
                     2.0 / 9.0 * (9.0 * u8 * v - 84.0 * u6 * v3 + 126.0 * u4 * v5 - 36.0 * u2 * v7 + v9) +
                     (u5 - 10.0 * u3 * v2 + 5.0 * u * v4) / (5.0 * r10) - (u3 - 3.0 * u * v2) / (3.0 * r6) - 2.0 * v;
    const double y = -(3.0 * u2 * v - v3) / 3.0 - (7.0 * u6 * v - 35.0 * u4 * v3 + 21.0 * u2 * v5 - v7) / 7.0 -
                     2.0 / 9.0 * (u9 - 36.0 * u7 * v2 + 126.0 * u5 * v4 - 84.0 * u3 * v6 + 9.0 * u * v8) -
                     (5.0 * u4 * v - 10.0 * u2 * v3 + v5) / (5.0 * r10) - (3.0 * u2 * v - v3) / (3.0 * r6) + 2.0 * u;
    const double z = (u4 - 6.0 * u2 * v2 + v4) * (1.0 + 1.0 / (r2 * r2 * r2 * r2));
    const double w = (u6 - 15.0 * u4 * v2 + 15.0 * u2 * v4 - v6) / 3.0 -
                     (6.0 * u5 * v - 20.0 * u3 * v3 + 6.0 * u * v5) / 3.0 + (u2 - v2 + 2.0 * u * v) / (r2 * r2);
    return {x, y, z, w};
}

Vec4 ex2_polar(double r, double t)
{
    const double r3 = r * r * r;
    const double r4 = r * r3;
    const double r5 = r * r4;
    const double r6 = r * r5;
    const double r7 = r * r6;
    const double r9 = r7 * r * r;
    const double x = (r3 - 1.0 / r3) / 3.0 * std::cos(3.0 * t) - r7 / 7.0 * std::cos(7.0 * t) +
                     2.0 * r9 / 9.0 * std::sin(9.0 * t) + 1.0 / (5.0 * r5) * std::cos(5.0 * t) - 2.0 * r * std::sin(t);
    const double y = -(r3 + 1.0 / r3) / 3.0 * std::sin(3.0 * t) - r7 / 7.0 * std::sin(7.0 * t) -
                     2.0 * r9 / 9.0 * std::cos(9.0 * t) - 1.0 / (5.0 * r5) * std::sin(5.0 * t) + 2.0 * r * std::cos(t);
    const double z = (r4 + 1.0 / r4) * std::cos(4.0 * t);
    const double w = r6 / 3.0 * (std::cos(6.0 * t) - std::sin(6.0 * t)) +
                     1.0 / (r * r) * (std::cos(2.0 * t) + std::sin(2.0 * t));
    return {x, y, z, w};
}

// g = g1 + i g2 = w and h = lambda (h1 + i h2) = lambda w, so g1 = h1 = u and g2 = h2 = v.
Vec4 xu_case2(double u, double v, double lam)
{
    const double g1 = u, g2 = v, h1 = u, h2 = v;
    const double l2 = lam * lam;
    const double u2 = u * u, v2 = v * v;
    const double u3 = u2 * u, v3 = v2 * v;
    const double u4 = u2 * u2, v4 = v2 * v2;
    const double r2 = u2 + v2;
    const double r8 = r2 * r2 * r2 * r2;

    const double x1 =
        g2 * g2 - g1 * g1 - l2 * h1 * h1 + l2 * h2 * h2 + 1.0 +
        1.0 / r8 *
            (u4 * g1 * g1 - u4 * g2 * g2 + v4 * g1 * g1 - v4 * g2 * g2 + 6.0 * u2 * v2 - u4 - v4 -
             6.0 * u2 * v2 * g1 * g1 + 6.0 * u2 * v2 * g2 * g2 + u4 * l2 * h1 * h1 + v4 * l2 * h1 * h1 +
             u4 * l2 * h2 * h2 + v4 * l2 * h2 * h2 - 8.0 * u * v3 * g1 * g2 + 8.0 * u3 * v * g1 * g2 -
             6.0 * u2 * v2 * l2 * h1 * h1 + 6.0 * u2 * v2 * l2 * h2 * h2 - 8.0 * u * v3 * l2 * h1 * h2 +
             8.0 * u3 * v * l2 * h1 * h2);
    const double x2 =
        -2.0 * g1 * g2 - 2.0 * l2 * h1 * h2 +
        2.0 / r8 *
            (2.0 * u * v3 - 2.0 * u3 * v + u4 * g1 * g2 + v4 * g1 * g2 + 2.0 * u * v3 * g1 * g1 +
             2.0 * u * v3 * g2 * g2 - 2.0 * u3 * v * g1 * g1 - 2.0 * u3 * v * g2 * g2 + 6.0 * u2 * v * g1 * g2 +
             u4 * l2 * h1 * h2 + v4 * l2 * h1 * h2 + 2.0 * u * v3 * l2 * h1 * h1 + 2.0 * u * v3 * l2 * h2 * h2 -
             2.0 * u3 * v * l2 * h1 * h1 - 2.0 * u3 * v * l2 * h2 * h2 - 6.0 * u2 * v * l2 * h1 * h2);
    const double x3 = 2.0 * g1 - 2.0 / r8 * (u4 * g1 + v4 * g1 - 6.0 * u2 * v2 * g1 - 4.0 * u * v3 * g2 + 4.0 * u3 * v * g2);
    const double x4 = 2.0 * lam * h1 -
                      2.0 * lam / r8 * (u4 * h1 + v4 * h1 - 6.0 * u2 * v2 * h1 - 4.0 * u * v3 * h2 + 4.0 * u3 * v * h2);
    return {x1, x2, x3, x4};
}

Vec4 xv_case2(double u, double v, double lam)
{
    const double g1 = u, g2 = v, h1 = u, h2 = v;
    const double l2 = lam * lam;
    const double u2 = u * u, v2 = v * v;
    const double u3 = u2 * u, v3 = v2 * v;
    const double u4 = u2 * u2, v4 = v2 * v2;
    const double r2 = u2 + v2;
    const double r8 = r2 * r2 * r2 * r2;

    const double x1 =
        2.0 * g1 * g2 + 2.0 * l2 * h1 * h2 -
        2.0 / r8 *
            (-2.0 * u * v3 + 2.0 * u3 * v + u4 * g1 * g2 + v4 * g1 * g2 + 2.0 * u * v3 * g1 * g1 +
             2.0 * u * v3 * g2 * g2 - 2.0 * u3 * v * g1 * g1 - 2.0 * u3 * v * g2 * g2 + 6.0 * u2 * v * g1 * g2 +
             u4 * l2 * h1 * h2 + v4 * l2 * h1 * h2 + 2.0 * u * v3 * l2 * h1 * h1 + 2.0 * u * v3 * l2 * h2 * h2 -
             2.0 * u3 * v * l2 * h1 * h1 - 2.0 * u3 * v * l2 * h2 * h2 - 6.0 * u2 * v * l2 * h1 * h2);
    const double x2 =
        -g1 * g1 + g2 * g2 - l2 * h1 * h1 + l2 * h2 * h2 - 1.0 +
        1.0 / r8 *
            (u4 * g1 * g1 + u4 * g2 * g2 + v4 * g1 * g1 + v4 * g2 * g2 + 6.0 * u2 * v2 * g1 * g1 +
             6.0 * u2 * v2 * g2 * g2 + u4 * l2 * h1 * h1 + u4 * l2 * h2 * h2 + v4 * l2 * h1 * h1 +
             v4 * l2 * h2 * h2 - 8.0 * u * v3 * g1 * g2 + 8.0 * u3 * v * g1 * g2 - 6.0 * u2 * v2 * l2 * h1 * h1 +
             6.0 * u2 * v2 * l2 * h2 * h2 - 8.0 * u * v3 * l2 * h1 * h2 + 8.0 * u3 * v * l2 * h1 * h2);
    const double x3 = -2.0 * g2 + 2.0 / r8 * (u4 * g2 + v4 * g2 - 6.0 * u2 * v2 * g2 + 4.0 * u * v3 * g1 - 4.0 * u3 * v * g1);
    const double x4 = -2.0 * lam * h2 +
                      2.0 * lam / r8 * (u4 * h2 + v4 * h2 - 6.0 * u2 * v2 * h2 + 4.0 * u * v3 * h1 - 4.0 * u3 * v * h1);
    return {x1, x2, x3, x4};
}

double real_lambda(Complex lambda, FixtureId id)
{
    if (std::abs(lambda.imag()) > 1e-12) {
        throw ParameterError(std::string(to_string(id)) + " requires a real lambda");
    }
    return lambda.real();
}

} // namespace

const FixtureInfo& fixture_info(FixtureId id)
{
    return kInfo[static_cast<std::size_t>(id)];
}

std::string_view to_string(FixtureId id)
{
    return fixture_info(id).name;
}

std::optional<FixtureId> parse_fixture(std::string_view name)
{
    for (auto id : kAllFixtures) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

Vec4 fixture_eval(FixtureId id, double a, double b, Complex lambda)
{
    const auto& info = fixture_info(id);
    if (info.coords == FixtureCoords::polar) {
        if (!(a > 0.0)) {
            throw PunctureError(std::string(info.name) + ": polar radius must be positive");
        }
    } else if (a == 0.0 && b == 0.0) {
        throw PunctureError(std::string(info.name) + ": origin is excluded");
    }

    switch (id) {
    case FixtureId::case1_real:
        return case1_real(a, b, lambda.real(), lambda.imag());
    case FixtureId::case2_real_lambda:
        return case2_real_lambda(a, b, real_lambda(lambda, id));
    case FixtureId::ex1_cart:
        return ex1_cart(a, b);
    case FixtureId::ex1_polar:
        return ex1_polar(a, b);
    case FixtureId::ex2_cart:
        return ex2_cart(a, b);
    case FixtureId::ex2_polar:
        return ex2_polar(a, b);
    case FixtureId::xu_case2:
        return xu_case2(a, b, real_lambda(lambda, id));
    case FixtureId::xv_case2:
        return xv_case2(a, b, real_lambda(lambda, id));
    }
    throw ParameterError("unknown fixture");
}

Vec4 fixture_eval_at(FixtureId id, Complex w, Complex lambda)
{
    if (fixture_info(id).coords == FixtureCoords::polar) {
        return fixture_eval(id, std::abs(w), std::arg(w), lambda);
    }
    return fixture_eval(id, w.real(), w.imag(), lambda);
}

} // namespace wep4
