#include "biquad/pbw.hpp"

namespace biquad {

PBWReport check_pbw_by_overlaps(const AlgebraPresentation& pres) {
    const AlgebraPresentation d = to_descending(pres);
    PBWReport report;
    for (int i = 1; i <= d.n; ++i) {
        for (int j = i + 1; j <= d.n; ++j) {
            for (int k = j + 1; k <= d.n; ++k) {
                Word w{k, j, i};
                NormalPoly top = normalize(w, d, Strategy::leftmost);
                NormalPoly bottom = normalize(w, d, Strategy::rightmost);
                NormalPoly diff = normal_sub(top, bottom);
                if (!normal_is_zero(diff))
                    report.failures.push_back({{i, j, k}, std::move(diff)});
            }
        }
    }
    report.consistent = report.failures.empty();
    return report;
}

bool ClosedConditionReport::all_hold() const {
    for (const auto& e : entries)
        if (!e.holds) return false;
    return true;
}

ClosedConditionReport check_pbw3_conditions(const AlgebraPresentation& pres) {
    if (pres.n != 3)
        throw WrongArity("closed consistency conditions require exactly 3 generators");
    const AlgebraPresentation d = to_descending(pres);

    const Scalar q1 = d.q_at(1, 2), q2 = d.q_at(1, 3), q3 = d.q_at(2, 3);
    const Scalar a = d.a_at(1, 2, 1), b = d.a_at(1, 2, 2), c = d.a_at(1, 2, 3);
    const Scalar al = d.a_at(1, 3, 1), be = d.a_at(1, 3, 2), ga = d.a_at(1, 3, 3);
    const Scalar la = d.a_at(2, 3, 1), mu = d.a_at(2, 3, 2), nu = d.a_at(2, 3, 3);
    const Scalar b1 = d.b_at(1, 2), b2 = d.b_at(1, 3), b3 = d.b_at(2, 3);
    const Scalar one(1);

    ClosedConditionReport report;
    auto add = [&](std::string id, const Scalar& lhs) {
        ClosedConditionEntry e;
        e.id = std::move(id);
        e.holds = lhs.is_zero();
        e.lhs = lhs.unit_reduced();
        report.entries.push_back(std::move(e));
    };

    add("(1-q3)*al - (1-q2)*mu", (one - q3) * al - (one - q2) * mu);
    add("(1-q3)*a - (1-q1)*nu", (one - q3) * a - (one - q1) * nu);
    add("(1-q2)*b - (1-q1)*ga", (one - q2) * b - (one - q1) * ga);
    add("(1-q1*q2)*la", (one - q1 * q2) * la);
    add("(q1-q3)*be", (q1 - q3) * be);
    add("(1-q2*q3)*c", (one - q2 * q3) * c);
    add("((1-q3)*al - mu)*a + (b + q1*ga)*la - nu*al + (q1*q2 - 1)*b3",
        ((one - q3) * al - mu) * a + (b + q1 * ga) * la - nu * al + (q1 * q2 - one) * b3);
    add("(a - nu)*be + q1*ga*mu - q3*al*b + (q1 - q3)*b2",
        (a - nu) * be + q1 * ga * mu - q3 * al * b + (q1 - q3) * b2);
    add("(a + (q1-1)*nu)*ga + b*nu - (mu + q3*al)*c + (1 - q2*q3)*b1",
        (a + (q1 - one) * nu) * ga + b * nu - (mu + q3 * al) * c + (one - q2 * q3) * b1);
    add("-(mu + q3*al)*b1 + (a - nu)*b2 + (b + q1*ga)*b3",
        -((mu + q3 * al) * b1) + (a - nu) * b2 + (b + q1 * ga) * b3);
    return report;
}

}  // namespace biquad
