#pragma once

#include "wep4/fixtures.hpp"
#include "wep4/henneberg.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wep4 {

enum class Verdict { pass, deviates };

std::string_view to_string(Verdict v);

struct ComponentAudit {
    double max_abs_deviation = 0.0;
    double max_scaled_deviation = 0.0;  ///< |fixture - pipeline| / max(1, |pipeline|)
    std::optional<double> scale_factor; ///< set when fixture = c * pipeline with c != 1
    std::string diagnosis;              ///< empty when the component agrees
};

struct FixtureAudit {
    FixtureId id;
    std::string reference; ///< "immersion", "X_u" or "X_v"
    std::array<ComponentAudit, 4> components;
    /// Position displays only: max scaled gap between central differences of the
    /// fixture and the analytic X_u, X_v (per component, u then v).
    std::optional<std::array<double, 8>> derivative_deviation;
    Verdict verdict = Verdict::pass;
};

struct FidelityReport {
    int m = 0;
    int n = 0;
    Complex lambda;
    std::size_t samples = 0;
    double tolerance = 0.0;
    std::vector<FixtureAudit> audits;

    const FixtureAudit* find(FixtureId id) const;
    std::string format() const;
};

/// Displays that describe the family member p (matching m, n and lambda constraints).
std::vector<FixtureId> applicable_fixtures(const FamilyParams& p);

/// Compares every applicable display against the integrated pipeline at the samples.
/// A component passes when its scaled deviation stays within `tolerance`. Deviating
/// components are diagnosed as a global factor, as a combination of Re/Im w^k terms
/// (the offending terms), or as a non-harmonic slip.
FidelityReport fidelity_report(const FamilyParams& p, std::span<const Complex> samples, double tolerance = 1e-12);

} // namespace wep4
