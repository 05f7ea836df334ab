#pragma once

#include "wep4/laurent.hpp"
#include "wep4/types.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace wep4 {

// Closed real-coordinate parametrizations as printed in the source
// derivation, transcribed term by term with no corrections. The identifiers
// are stable and used on the command line.
enum class FixtureId {
    case1_real,        // H(1,1), lambda = alpha + i beta, Cartesian
    case2_real_lambda, // H(1,1), real lambda, Cartesian
    ex1_cart,          // H(1,1), lambda = 1+i, Cartesian
    ex1_polar,         // H(1,1), lambda = 1+i, polar (r, theta)
    ex2_cart,          // H(1,3), lambda = 1+i, Cartesian
    ex2_polar,         // H(1,3), lambda = 1+i, polar
    xu_case2,          // X_u for H(1,1), real lambda
    xv_case2,          // X_v for H(1,1), real lambda
};

inline constexpr std::array<FixtureId, 8> kAllFixtures = {
    FixtureId::case1_real, FixtureId::case2_real_lambda, FixtureId::ex1_cart, FixtureId::ex1_polar,
    FixtureId::ex2_cart,   FixtureId::ex2_polar,         FixtureId::xu_case2, FixtureId::xv_case2,
};

enum class FixtureCoords { cartesian, polar };
enum class FixtureQuantity { position, xu, xv };

struct FixtureInfo {
    std::string_view name;
    FixtureCoords coords;
    FixtureQuantity quantity;
    int m;
    int n;
    bool needs_real_lambda;
    std::optional<Complex> fixed_lambda; // set when the display hard-codes lambda
};

const FixtureInfo& fixture_info(FixtureId id);
std::string_view to_string(FixtureId id);
std::optional<FixtureId> parse_fixture(std::string_view name);

/// Evaluates a fixture at (u, v) or (r, theta). lambda is read only by the
/// case1/case2/xu/xv displays; case2/xu/xv need it real.
/// Throws PunctureError at the origin (or r <= 0) and ParameterError for a complex lambda
/// where a real one is required.
Vec4 fixture_eval(FixtureId id, double a, double b, Complex lambda = {1.0, 1.0});

/// Evaluates at the parameter w, converting to the fixture's coordinates.
Vec4 fixture_eval_at(FixtureId id, Complex w, Complex lambda = {1.0, 1.0});

} // namespace wep4
