#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wep4/fidelity.hpp"
#include "wep4/verify.hpp"

#include <algorithm>

using namespace wep4;

namespace {

FidelityReport report_for(int m, int n, Complex lam)
{
    return fidelity_report(FamilyParams(m, n, lam), sample_annulus(200, 42));
}

bool has(const std::vector<FixtureId>& ids, FixtureId id)
{
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

} // namespace

TEST_CASE("applicable fixtures")
{
    const auto a = applicable_fixtures(FamilyParams(1, 1, {1.0, 1.0}));
    CHECK(has(a, FixtureId::ex1_cart));
    CHECK(has(a, FixtureId::case1_real));
    CHECK_FALSE(has(a, FixtureId::case2_real_lambda));
    CHECK_FALSE(has(a, FixtureId::ex2_cart));

    const auto b = applicable_fixtures(FamilyParams(1, 1, 2.0));
    CHECK(has(b, FixtureId::case2_real_lambda));
    CHECK(has(b, FixtureId::xu_case2));
    CHECK_FALSE(has(b, FixtureId::ex1_cart));

    CHECK(applicable_fixtures(FamilyParams(3, 5, 1.0)).empty());
    CHECK(has(applicable_fixtures(FamilyParams(1, 3, {1.0, 1.0})), FixtureId::ex2_polar));
}

TEST_CASE("case1_real with real lambda: only y deviates, by the negative-power terms")
{
    for (const double lam : {0.0, 1.0, 2.0}) {
        const FidelityReport r = report_for(1, 1, lam);
        const FixtureAudit* a = r.find(FixtureId::case1_real);
        REQUIRE(a != nullptr);
        CHECK(a->verdict == Verdict::deviates);
        CHECK(a->components[0].max_scaled_deviation <= 1e-12);
        CHECK(a->components[2].max_scaled_deviation <= 1e-12);
        CHECK(a->components[3].max_scaled_deviation <= 1e-12);
        CHECK(a->components[1].max_scaled_deviation > 1e-3);
        const std::string& d = a->components[1].diagnosis;
        CHECK(d.find("+2/3*Im(w^-3)") != std::string::npos);
        CHECK(d.find(std::to_string(static_cast<int>(2 * (1 + lam * lam))) + "*Im(w^-1)") != std::string::npos);
    }
}

TEST_CASE("case2_real_lambda agrees with case1_real")
{
    const FidelityReport r = report_for(1, 1, 2.0);
    const FixtureAudit* c1 = r.find(FixtureId::case1_real);
    const FixtureAudit* c2 = r.find(FixtureId::case2_real_lambda);
    REQUIRE(c1 != nullptr);
    REQUIRE(c2 != nullptr);
    CHECK(c2->components[1].diagnosis == c1->components[1].diagnosis);
}

TEST_CASE("ex1 audit identifies the offending terms")
{
    const FidelityReport r = report_for(1, 1, {1.0, 1.0});
    for (const auto id : {FixtureId::ex1_cart, FixtureId::ex1_polar}) {
        const FixtureAudit* a = r.find(id);
        REQUIRE(a != nullptr);
        CHECK(a->verdict == Verdict::deviates);
        CHECK(a->components[0].diagnosis == "fixture - pipeline = -4*Im(w^-1)");
        CHECK(a->components[1].diagnosis == "fixture - pipeline = +2/3*Im(w^-3) +4*Re(w^-1) +2*Im(w^-1)");
        CHECK(a->components[2].diagnosis.empty());
        CHECK(a->components[3].diagnosis.empty());
    }
    CHECK(r.format().find("ex1_polar vs immersion: DEVIATES") != std::string::npos);
}

TEST_CASE("ex2 audit: z is twice the integral")
{
    const FidelityReport r = report_for(1, 3, {1.0, 1.0});
    for (const auto id : {FixtureId::ex2_cart, FixtureId::ex2_polar}) {
        const FixtureAudit* a = r.find(id);
        REQUIRE(a != nullptr);
        const auto& z = a->components[2];
        REQUIRE(z.scale_factor.has_value());
        CHECK(*z.scale_factor == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(a->verdict == Verdict::deviates);
    }
}

TEST_CASE("tangent displays: third and fourth rows agree, first two do not")
{
    for (const double lam : {0.0, 1.0}) {
        const FidelityReport r = report_for(1, 1, lam);
        for (const auto id : {FixtureId::xu_case2, FixtureId::xv_case2}) {
            const FixtureAudit* a = r.find(id);
            REQUIRE(a != nullptr);
            CHECK(a->components[2].max_scaled_deviation <= 1e-12);
            CHECK(a->components[3].max_scaled_deviation <= 1e-12);
            CHECK(a->components[1].max_scaled_deviation > 1e-3);
        }
    }
    const FixtureAudit* xu = report_for(1, 1, 1.0).find(FixtureId::xu_case2);
    CHECK(xu->components[0].max_scaled_deviation > 1e-3);
}

TEST_CASE("format")
{
    const std::string text = report_for(1, 1, 0.0).format();
    CHECK(text.rfind("fidelity report  m=1 n=1 lambda=0", 0) == 0);
    CHECK(text.find("case1_real vs immersion: DEVIATES") != std::string::npos);
    CHECK(text.find("xu_case2 vs X_u") != std::string::npos);
    CHECK(report_for(3, 5, 1.0).audits.empty());
}
