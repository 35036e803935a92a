#include "biquad/smoothness.hpp"

#include "biquad/catalog.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace biquad;
using testutil::random_presentation3;

namespace {

bool condition_failed(const ConditionReport& report, const std::string& id) {
    for (const auto& e : report.entries)
        if (e.id == id && !e.holds) return true;
    return false;
}

}  // namespace

TEST_CASE("sufficiency conditions on catalog entries") {
    CHECK(sufficiency_conditions(catalog_get("weyl-1")).all_hold());
    CHECK(sufficiency_conditions(catalog_get("weyl-2")).all_hold());
    CHECK(sufficiency_conditions(catalog_get("multiplicative-weyl-3")).all_hold());
    CHECK(sufficiency_conditions(catalog_get("difference-ops-1-1")).all_hold());

    auto qweyl = sufficiency_conditions(catalog_get("quantum-weyl"));
    CHECK_FALSE(qweyl.all_hold());
    CHECK(condition_failed(qweyl, "b(q-1) - a_i a_j"));
    // the reported left side is exactly q - 1 after clearing unit factors
    bool found = false;
    for (const auto& e : qweyl.entries)
        if (!e.holds) {
            CHECK(e.id == "b(q-1) - a_i a_j");
            CHECK(e.lhs.equals(Scalar::parameter("q") - Scalar(1)));
            CHECK(e.lhs.str() == "q - 1");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("rank obstruction") {
    auto sl2 = calculus_obstruction(catalog_get("u-sl2"));
    REQUIRE(sl2.has_value());
    CHECK(sl2->i == 1);
    CHECK(sl2->j == 2);
    CHECK(sl2->k == 3);

    auto dispin = calculus_obstruction(catalog_get("dispin"));
    REQUIRE(dispin.has_value());
    CHECK(dispin->i == 1);
    CHECK(dispin->j == 3);
    CHECK(dispin->k == 2);

    CHECK_FALSE(calculus_obstruction(catalog_get("quantum-plane")).has_value());
}

TEST_CASE("witness verification") {
    auto qplane = catalog_get("quantum-plane");
    auto tw = std::get<TwistFamily>(derive_forced_twists(qplane));
    auto result = verify_witness(qplane, tw, 4);
    CHECK(result.pass());

    auto qweyl = catalog_get("quantum-weyl");
    auto qtw = std::get<TwistFamily>(derive_forced_twists(qweyl));
    auto qres = verify_witness(qweyl, qtw, 4);
    CHECK_FALSE(qres.all_relations_preserved());
    CHECK_FALSE(qres.pass());

    // The cyclic three-pair algebra with generic constants: the forced
    // twists scale each relation's pair by a non-unit factor, so none of
    // them extends to an endomorphism and the witness fails honestly.
    auto cyc = catalog_get("cyclic-quantum-weyl-3");
    auto ctw = std::get<TwistFamily>(derive_forced_twists(cyc));
    const Scalar s = Scalar::parameter("s");
    CHECK(ctw.rho[0].images[1].first.equals(Scalar(1) / (s * s)));  // rho_x: y -> y/s^2
    CHECK(ctw.rho[1].images[0].first.equals(s * s));                // rho_y: x -> s^2 x
    CHECK(ctw.rho[0].images[2].first.equals(s * s));                // rho_x: z -> s^2 z
    CHECK(ctw.rho[2].images[0].first.equals(Scalar(1) / (s * s)));  // rho_z: x -> x/s^2
    CHECK(ctw.rho[1].images[2].first.equals(Scalar(1) / (s * s)));  // rho_y: z -> z/s^2
    CHECK(ctw.rho[2].images[1].first.equals(s * s));                // rho_z: y -> s^2 y
    auto cres = verify_witness(cyc, ctw, 3);
    CHECK(cres.commuting);
    CHECK(cres.connected);
    CHECK_FALSE(cres.all_relations_preserved());
    CHECK_FALSE(cres.pass());
}

TEST_CASE("verdicts across the catalog") {
    auto expect = [](const std::string& name, SmoothStatus status) {
        CAPTURE(name);
        auto verdict = analyze(catalog_get(name));
        CHECK(verdict.status == status);
        CHECK(verdict.gkdim == catalog_get(name).n);
        if (status == SmoothStatus::smooth) {
            CHECK(verdict.witness.has_value());
            CHECK_FALSE(verdict.obstruction.has_value());
        }
        if (status == SmoothStatus::not_smooth) {
            CHECK(verdict.obstruction.has_value());
            CHECK_FALSE(verdict.witness.has_value());
        }
    };
    expect("polynomial-1", SmoothStatus::smooth);
    expect("polynomial-3", SmoothStatus::smooth);
    expect("quantum-plane", SmoothStatus::smooth);
    expect("weyl-1", SmoothStatus::smooth);
    expect("u-n2", SmoothStatus::smooth);
    expect("shift-ops-1-1", SmoothStatus::smooth);
    expect("u-sl2", SmoothStatus::not_smooth);
    expect("u-so3", SmoothStatus::not_smooth);
    expect("dispin", SmoothStatus::not_smooth);
    expect("q-heisenberg-1", SmoothStatus::not_smooth);
    expect("quantum-weyl", SmoothStatus::undetermined);
}

TEST_CASE("analyze rejects inconsistent presentations") {
    AlgebraPresentation bad;
    bad.n = 3;
    bad.params = {"q"};
    bad.set_q(1, 2, Scalar::parameter("q"));
    bad.set_a(2, 3, 1, Scalar(1));
    CHECK_THROWS_AS(analyze(bad), InconsistentPresentation);

    AlgebraPresentation invalid;
    invalid.n = 2;
    invalid.set_q(1, 2, Scalar(0));
    CHECK_THROWS_AS(analyze(invalid), ValidationError);
}

TEST_CASE("orientation invariance of the verdict") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        auto pres = catalog_get(name);
        CHECK(analyze(pres, 3).status == analyze(translate_orientation(pres), 3).status);
    }
}

TEST_CASE("verdict status is orientation-independent on random instances") {
    int analyzed = 0;
    for (int t = 0; t < 30 && analyzed < 8; ++t) {
        AlgebraPresentation pres = random_presentation3();
        if (!check_pbw_by_overlaps(pres).consistent) continue;
        ++analyzed;
        CHECK(analyze(pres, 3).status == analyze(translate_orientation(pres), 3).status);
    }
    CHECK(analyzed > 0);
}

TEST_CASE("conditions certify the constructive witness on random instances") {
    int tested = 0;
    for (int t = 0; t < 40; ++t) {
        AlgebraPresentation pres = random_presentation3();
        if (!check_pbw_by_overlaps(pres).consistent) continue;
        if (!sufficiency_conditions(pres).all_hold()) {
            // the obstruction case must also be consistent with the twists
            if (calculus_obstruction(pres))
                CHECK(std::holds_alternative<Obstruction>(derive_forced_twists(pres)));
            continue;
        }
        REQUIRE_FALSE(calculus_obstruction(pres).has_value());
        auto tw = std::get<TwistFamily>(derive_forced_twists(pres));
        CAPTURE(t);
        CHECK(verify_witness(pres, tw, 3).pass());
        ++tested;
    }
    CHECK(tested > 0);
}
