#pragma once

#include "wep4/henneberg.hpp"
#include "wep4/weierstrass.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wep4 {

// Invariant suites run by `wep4 verify` for one family member. Each suite
// counts individual checks; a suite that does not apply to the member is
// reported as skipped and does not count as a failure.

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    bool skipped = false;
    std::string detail;

    bool ok() const { return skipped || passed == total; }
    void check(bool condition, const std::string& what = {});
};

struct VerifyOptions {
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
};

/// Uniform draws from the annulus r_min <= |w| <= r_max.
std::vector<Complex> sample_annulus(std::size_t count, std::uint64_t seed, double r_min = 0.5, double r_max = 2.0);

/// Annulus draws, keeping only points where phi is regular.
std::vector<Complex> regular_samples(const PhiForm& phi, std::size_t count, std::uint64_t seed, double r_min = 0.5,
                                     double r_max = 2.0);

SuiteResult nullity_suite(const FamilyParams& p, const VerifyOptions& opt);
SuiteResult back_differentiation_suite(const FamilyParams& p);
SuiteResult quadrature_suite(const FamilyParams& p, const VerifyOptions& opt);
SuiteResult conformality_suite(const FamilyParams& p, const VerifyOptions& opt);
SuiteResult harmonicity_suite(const FamilyParams& p, const VerifyOptions& opt);
SuiteResult frame_suite(const FamilyParams& p, const VerifyOptions& opt);
SuiteResult curvature_suite(const FamilyParams& p, const VerifyOptions& opt);
SuiteResult integral_free_suite(const FamilyParams& p, const VerifyOptions& opt);
SuiteResult reduction_suite(const FamilyParams& p);
SuiteResult fidelity_suite(const FamilyParams& p, const VerifyOptions& opt);
SuiteResult mesh_suite(const FamilyParams& p);

std::vector<SuiteResult> run_verification(const FamilyParams& p, const VerifyOptions& opt);

} // namespace wep4
