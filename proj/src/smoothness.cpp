#include "biquad/smoothness.hpp"

namespace biquad {

bool ConditionReport::all_hold() const {
    for (const auto& e : entries)
        if (!e.holds) return false;
    return true;
}

std::vector<const ConditionEntry*> ConditionReport::failed() const {
    std::vector<const ConditionEntry*> out;
    for (const auto& e : entries)
        if (!e.holds) out.push_back(&e);
    return out;
}

ConditionReport sufficiency_conditions(const AlgebraPresentation& pres) {
    // The condition formulas apply to the ascending form of the relations;
    // several of them are not unit-covariant under reorientation, so the
    // translation is not optional.
    AlgebraPresentation asc = to_descending(pres);
    asc = translate_orientation(asc);
    const Scalar one(1);
    auto q = [&](int u, int v) { return asc.q_at(u, v); };
    auto a = [&](int u, int v, int k) { return asc.a_at(u, v, k); };
    auto b = [&](int u, int v) { return asc.b_at(u, v); };

    ConditionReport report;
    auto add = [&](std::string id, std::array<int, 3> idx, const Scalar& lhs) {
        ConditionEntry e;
        e.id = std::move(id);
        e.indices = idx;
        e.holds = lhs.is_zero();
        e.lhs = lhs.unit_reduced();
        report.entries.push_back(std::move(e));
    };

    const int n = asc.n;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k)
                if (k != i && k != j) add("a(i,j;k) = 0, k != i,j", {i, j, k}, a(i, j, k));
            add("b(q-1) - a_i a_j", {i, j, 0},
                b(i, j) * (q(i, j) - one) - a(i, j, i) * a(i, j, j));
        }
    }

    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            for (int w = v + 1; w <= n; ++w) {
                // middle index between the pair: (i,k,j) = (u,v,w)
                add("a_ij,j(1-q_ik) - a_ik,k(1-q_ij)", {u, v, w},
                    a(u, w, w) * (one - q(u, v)) - a(u, v, v) * (one - q(u, w)));
                add("a_kj,j(1-q_ik) - a_ik,i(1-q_kj)", {u, v, w},
                    a(v, w, w) * (one - q(u, v)) - a(u, v, u) * (one - q(v, w)));
                add("a_ij,j a_kj,j + b_kj(q_kj - q_ij)", {u, v, w},
                    a(u, w, w) * a(v, w, w) + b(v, w) * (q(v, w) - q(u, w)));
                add("b_ij(q_ik - q_kj) + a_kj,k a_ij,j q_ik - q_kj a_ik,k a_ij,i", {u, v, w},
                    b(u, w) * (q(u, v) - q(v, w)) + a(v, w, v) * a(u, w, w) * q(u, v) -
                        q(v, w) * a(u, v, v) * a(u, w, u));
                // index below the pair: (k,i,j) = (u,v,w)
                add("a_ij,i(1-q_kj) - a_kj,k(1-q_ij)", {u, v, w},
                    a(v, w, v) * (one - q(u, w)) - a(u, w, u) * (one - q(v, w)));
                add("a_ki,i(1-q_kj) - a_kj,j(1-q_ki)", {u, v, w},
                    a(u, v, v) * (one - q(u, w)) - a(u, w, w) * (one - q(u, v)));
                add("a_ij,j(1-q_ki) - a_ki,k(1-q_ij)", {u, v, w},
                    a(v, w, w) * (one - q(u, v)) - a(u, v, u) * (one - q(v, w)));
                add("b_ij(1 - q_ki q_kj) + a_ki,k a_ij,i + q_ki a_ij,j a_kj,k", {u, v, w},
                    b(v, w) * (one - q(u, v) * q(u, w)) + a(u, v, u) * a(v, w, v) +
                        q(u, v) * a(v, w, w) * a(u, w, u));
                // index above the pair: (i,j,k) = (u,v,w)
                add("a_jk,k(1-q_ij) - a_ij,i(1-q_jk)", {u, v, w},
                    a(v, w, w) * (one - q(u, v)) - a(u, v, u) * (one - q(v, w)));
                add("a_ik,i(1-q_jk) - a_jk,j(1-q_ik)", {u, v, w},
                    a(u, w, u) * (one - q(v, w)) - a(v, w, v) * (one - q(u, w)));
                add("a_ik,k(1-q_ij) - a_ij,j(1-q_ik)", {u, v, w},
                    a(u, w, w) * (one - q(u, v)) - a(u, v, v) * (one - q(u, w)));
                add("b_ij(1 - q_ik q_jk) + a_ik,k a_ij,i + q_ik a_ij,j a_jk,k", {u, v, w},
                    b(u, v) * (one - q(u, w) * q(v, w)) + a(u, w, w) * a(u, v, u) +
                        q(u, w) * a(u, v, v) * a(v, w, w));
            }
        }
    }
    return report;
}

std::optional<Obstruction> calculus_obstruction(const AlgebraPresentation& pres) {
    const AlgebraPresentation d = to_descending(pres);
    for (int i = 1; i <= d.n; ++i)
        for (int j = i + 1; j <= d.n; ++j)
            for (int k = 1; k <= d.n; ++k)
                if (k != i && k != j && !d.a_at(i, j, k).is_zero())
                    return Obstruction{i, j, k};
    return std::nullopt;
}

bool WitnessVerification::all_relations_preserved() const {
    for (bool ok : relation_preserving)
        if (!ok) return false;
    return true;
}

bool WitnessVerification::pass() const {
    return all_relations_preserved() && commuting && dd_zero && leibniz && connected &&
           integral_identity;
}

WitnessVerification verify_witness(const AlgebraPresentation& pres, const TwistFamily& tw,
                                   int depth) {
    const AlgebraPresentation d = to_descending(pres);
    WitnessVerification result;
    result.depth = depth;

    for (int k = 1; k <= d.n; ++k)
        result.relation_preserving.push_back(preserves_relations(tw.rho[k - 1], d));

    result.commuting = true;
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            result.commuting = result.commuting && commute_on_generators(tw.rho[i], tw.rho[j]);

    result.dd_zero = true;
    if (d.n >= 2) {
        for (const auto& alpha : monomials_up_to(d.n, depth)) {
            if (!d_on_forms(differential(normal_monomial(alpha), d, tw), d, tw).is_zero()) {
                result.dd_zero = false;
                break;
            }
        }
    }

    // Product rule at degree 0 over monomial pairs of half the depth each.
    result.leibniz = true;
    int half = std::max(1, depth / 2);
    auto monos = monomials_up_to(d.n, half);
    for (const auto& alpha : monos) {
        for (const auto& beta : monos) {
            NormalPoly pa = normal_monomial(alpha), pb = normal_monomial(beta);
            KForm lhs = differential(multiply(pa, pb, d), d, tw);
            KForm rhs = form_add(form_right_multiply(differential(pa, d, tw), pb, d),
                                 left_multiply_form(pa, differential(pb, d, tw), d, tw));
            if (!form_equal(lhs, rhs)) {
                result.leibniz = false;
                break;
            }
        }
        if (!result.leibniz) break;
    }

    auto kernel = kernel_of_d(d, tw, depth);
    result.connected = kernel.size() == 1 && kernel.front().size() == 1 &&
                       kernel.front().begin()->first == ExponentVector(d.n, 0);

    result.integral_identity = true;
    for (int j = 1; j <= d.n - 1; ++j)
        result.integral_identity = result.integral_identity && verify_integral_identity(j, d, tw);

    return result;
}

std::string to_string(SmoothStatus s) {
    switch (s) {
        case SmoothStatus::smooth: return "smooth";
        case SmoothStatus::not_smooth: return "not-smooth";
        default: return "undetermined";
    }
}

SmoothnessVerdict analyze(const AlgebraPresentation& pres, int depth) {
    const AlgebraPresentation d = to_descending(pres);
    auto violations = validate(d);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    PBWReport pbw = check_pbw_by_overlaps(d);
    if (!pbw.consistent) throw InconsistentPresentation(std::move(pbw));

    SmoothnessVerdict verdict;
    verdict.gkdim = d.n;
    verdict.conditions = sufficiency_conditions(d);

    if (auto obs = calculus_obstruction(d)) {
        verdict.status = SmoothStatus::not_smooth;
        verdict.obstruction = obs;
        return verdict;
    }

    TwistFamily tw = std::get<TwistFamily>(derive_forced_twists(d));
    WitnessVerification check = verify_witness(d, tw, depth);
    verdict.verification = check;
    if (check.pass()) {
        verdict.status = SmoothStatus::smooth;
        verdict.witness = std::move(tw);
    } else {
        verdict.status = SmoothStatus::undetermined;
    }
    return verdict;
}

}  // namespace biquad
