#include "biquad/calculus.hpp"

#include "biquad/catalog.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>

using namespace biquad;
using testutil::commutative;
using testutil::uniform;

namespace {

const Scalar q = Scalar::parameter("q");

TwistFamily forced(const AlgebraPresentation& pres) {
    return std::get<TwistFamily>(derive_forced_twists(pres));
}

NormalPoly mono(std::initializer_list<unsigned> alpha, Scalar c = Scalar(1)) {
    return normal_monomial(ExponentVector(alpha), std::move(c));
}

ExponentVector random_exponents(int n, int deg) {
    ExponentVector alpha(n, 0);
    for (int d = 0; d < deg; ++d) ++alpha[uniform(0, n - 1)];
    return alpha;
}

// A generic scaling presentation: x_j x_i = l_ij x_i x_j with one parameter
// per pair.  Useful for wedge bookkeeping tests in any dimension.
AlgebraPresentation generic_scaling(int n) {
    AlgebraPresentation pres;
    pres.n = n;
    pres.name = "generic-scaling";
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::string p = "l" + std::to_string(i) + std::to_string(j);
            pres.params.push_back(p);
            pres.set_q(i, j, Scalar::parameter(p));
        }
    return pres;
}

}  // namespace

TEST_CASE("forced twists") {
    auto qplane = catalog_get("quantum-plane");
    TwistFamily tw = forced(qplane);
    CHECK(tw.rho[0].images[1].first.equals(q));             // rho_1: x2 -> q x2
    CHECK(tw.rho[0].images[1].second.is_zero());
    CHECK(tw.rho[1].images[0].first.equals(Scalar(1) / q));  // rho_2: x1 -> x1/q
    CHECK(tw.rho[0].images[0].first.equals(Scalar(1)));      // rho_k fixes x_k

    auto comm = commutative(3);
    TwistFamily id = forced(comm);
    for (int k = 0; k < 3; ++k) CHECK(id.rho[k].equals(AffineEndo::identity(3)));

    auto sl2 = catalog_get("u-sl2");
    auto res = derive_forced_twists(sl2);
    REQUIRE(std::holds_alternative<Obstruction>(res));
    auto obs = std::get<Obstruction>(res);
    CHECK(obs.i == 1);
    CHECK(obs.j == 2);
    CHECK(obs.k == 3);
}

TEST_CASE("first-order differential") {
    auto comm = commutative(2);
    TwistFamily tw = forced(comm);

    KForm d1 = differential(mono({1, 0}), comm, tw);
    CHECK(form_equal(d1, KForm::basis(2, {1}, normal_const(2, Scalar(1)))));

    KForm d12 = differential(mono({1, 1}), comm, tw);
    KForm expected = KForm::basis(2, {1}, mono({0, 1}));
    expected.add_term({2}, mono({1, 0}));
    CHECK(form_equal(d12, expected));

    CHECK(differential(normal_const(2, Scalar(7)), comm, tw).is_zero());

    auto qplane = catalog_get("quantum-plane");
    TwistFamily qtw = forced(qplane);
    for (auto [m, l] : {std::pair{2u, 3u}, {1u, 1u}, {3u, 2u}}) {
        KForm d = differential(mono({m, l}), qplane, qtw);
        KForm want = KForm::basis(2, {1}, mono({m - 1, l}, Scalar(long(m))));
        want.add_term({2}, mono({m, l - 1}, Scalar(long(l)) * q.pow(-long(m))));
        CAPTURE(m); CAPTURE(l);
        CHECK(form_equal(d, want));
    }
}

TEST_CASE("closed-form skew partials") {
    auto comm = commutative(2);
    TwistFamily tw = forced(comm);
    CHECK(normal_equal(partial_closed_form(2, {3, 2}, comm, tw), mono({3, 1}, Scalar(2))));
    CHECK(normal_is_zero(partial_closed_form(1, {0, 3}, comm, tw)));

    auto qplane = catalog_get("quantum-plane");
    TwistFamily qtw = forced(qplane);
    CHECK(normal_equal(partial_closed_form(2, {4, 2}, qplane, qtw),
                       mono({4, 1}, Scalar(2) * q.pow(-4))));
}

TEST_CASE("closed form matches the recursion") {
    for (const auto& name : {"quantum-plane", "weyl-1", "u-n2", "difference-ops-1-1",
                             "multiplicative-weyl-3"}) {
        auto pres = catalog_get(name);
        TwistFamily tw = forced(pres);
        for (const auto& alpha : monomials_up_to(pres.n, 4)) {
            KForm d = differential(normal_monomial(alpha), pres, tw);
            for (int k = 1; k <= pres.n; ++k) {
                auto it = d.coeffs.find({k});
                NormalPoly via_d = it == d.coeffs.end() ? normal_zero() : it->second;
                CAPTURE(name); CAPTURE(k);
                CHECK(normal_equal(via_d, partial_closed_form(k, alpha, pres, tw)));
            }
        }
    }
}

TEST_CASE("wedge products") {
    auto qplane = catalog_get("quantum-plane");
    TwistFamily tw = forced(qplane);
    NormalPoly one2 = normal_const(2, Scalar(1));

    CHECK(wedge(KForm::basis(2, {1}, one2), KForm::basis(2, {1}, one2), qplane, tw).is_zero());

    KForm w21 = wedge(KForm::basis(2, {2}, one2), KForm::basis(2, {1}, one2), qplane, tw);
    CHECK(form_equal(w21, KForm::basis(2, {1, 2}, normal_const(2, -q))));

    auto scal3 = generic_scaling(3);
    TwistFamily tw3 = forced(scal3);
    NormalPoly one3 = normal_const(3, Scalar(1));
    KForm w321 = wedge(wedge(KForm::basis(3, {3}, one3), KForm::basis(3, {2}, one3), scal3, tw3),
                       KForm::basis(3, {1}, one3), scal3, tw3);
    Scalar factor = -(Scalar::parameter("l12") * Scalar::parameter("l13") *
                      Scalar::parameter("l23"));
    CHECK(form_equal(w321, KForm::basis(3, {1, 2, 3}, normal_const(3, factor))));

    CHECK_THROWS_AS(wedge(w321, KForm::basis(3, {1}, one3), scal3, tw3), DegreeOverflow);
}

TEST_CASE("wedge reorder factor is route-independent") {
    // Bubble the dx sequence into order two ways and compare against wedge().
    auto scal4 = generic_scaling(4);
    TwistFamily tw = forced(scal4);
    NormalPoly one4 = normal_const(4, Scalar(1));

    std::vector<int> perm{1, 2, 3, 4};
    do {
        auto factor_by = [&](bool leftmost) {
            std::vector<int> seq = perm;
            Scalar f(1);
            while (!std::is_sorted(seq.begin(), seq.end())) {
                if (leftmost) {
                    for (std::size_t t = 0; t + 1 < seq.size(); ++t)
                        if (seq[t] > seq[t + 1]) {
                            f *= -scal4.q_at(seq[t + 1], seq[t]);
                            std::swap(seq[t], seq[t + 1]);
                            break;
                        }
                } else {
                    for (std::size_t t = seq.size() - 1; t >= 1; --t)
                        if (seq[t - 1] > seq[t]) {
                            f *= -scal4.q_at(seq[t], seq[t - 1]);
                            std::swap(seq[t - 1], seq[t]);
                            break;
                        }
                }
            }
            return f;
        };
        Scalar left = factor_by(true), right = factor_by(false);
        CHECK(left.equals(right));

        KForm w = KForm::basis(4, {perm[0]}, one4);
        for (int t = 1; t < 4; ++t) w = wedge(w, KForm::basis(4, {perm[t]}, one4), scal4, tw);
        CHECK(form_equal(w, KForm::basis(4, {1, 2, 3, 4}, normal_const(4, left))));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("d on higher forms") {
    auto comm = commutative(2);
    TwistFamily tw = forced(comm);
    KForm f = KForm::basis(2, {1}, mono({0, 1}));  // dx1 * x2
    KForm df = d_on_forms(f, comm, tw);
    CHECK(form_equal(df, KForm::basis(2, {1, 2}, normal_const(2, Scalar(-1)))));

    CHECK(d_on_forms(differential(mono({1, 1}), comm, tw), comm, tw).is_zero());

    auto qplane = catalog_get("quantum-plane");
    TwistFamily qtw = forced(qplane);
    CHECK(d_on_forms(differential(mono({1, 1}), qplane, qtw), qplane, qtw).is_zero());

    KForm top = KForm::basis(2, {1, 2}, normal_const(2, Scalar(1)));
    CHECK_THROWS_AS(d_on_forms(top, qplane, qtw), DegreeOverflow);
}

TEST_CASE("left module action on forms") {
    auto qplane = catalog_get("quantum-plane");
    TwistFamily tw = forced(qplane);
    NormalPoly x1 = mono({1, 0});

    KForm f0 = KForm::from_poly(2, mono({0, 1}));
    CHECK(form_equal(left_multiply_form(x1, f0, qplane, tw),
                     KForm::from_poly(2, mono({1, 1}))));

    KForm dx2 = KForm::basis(2, {2}, normal_const(2, Scalar(1)));
    CHECK(form_equal(left_multiply_form(x1, dx2, qplane, tw),
                     KForm::basis(2, {2}, mono({1, 0}, Scalar(1) / q))));

    KForm omega = KForm::basis(2, {1, 2}, normal_const(2, Scalar(1)));
    CHECK(form_equal(left_multiply_form(x1, omega, qplane, tw),
                     KForm::basis(2, {1, 2}, mono({1, 0}, Scalar(1) / q))));
}

TEST_CASE("volume data") {
    auto comm = commutative(3);
    CHECK(volume_data(comm, forced(comm)).nu_omega.equals(AffineEndo::identity(3)));

    auto qplane = catalog_get("quantum-plane");
    VolumeData v = volume_data(qplane, forced(qplane));
    CHECK(v.nu_omega.images[0].first.equals(Scalar(1) / q));
    CHECK(v.nu_omega.images[1].first.equals(q));

    KForm top = KForm::basis(2, {1, 2}, normal_add(mono({1, 0}), normal_const(2, Scalar(3))));
    CHECK(normal_equal(v.pi_omega(top), normal_add(mono({1, 0}), normal_const(2, Scalar(3)))));
}

TEST_CASE("volume twist law") {
    for (const auto& name : {"quantum-plane", "weyl-1", "difference-ops-1-1"}) {
        auto pres = catalog_get(name);
        TwistFamily tw = forced(pres);
        VolumeData v = volume_data(pres, tw);
        std::vector<int> full(pres.n);
        for (int k = 0; k < pres.n; ++k) full[k] = k + 1;
        KForm omega = KForm::basis(pres.n, full, normal_const(pres.n, Scalar(1)));
        for (int t = 0; t < 20; ++t) {
            NormalPoly a = normal_monomial(random_exponents(pres.n, uniform(0, 3)));
            CHECK(form_equal(left_multiply_form(a, omega, pres, tw),
                             form_right_multiply(omega, apply_endo(v.nu_omega, a, pres), pres)));
        }
    }
}

TEST_CASE("integral form generators") {
    auto qplane = catalog_get("quantum-plane");
    TwistFamily tw = forced(qplane);
    auto pairs = integral_form_generators(1, qplane, tw);
    REQUIRE(pairs.size() == 2);
    // ({1}: dx1 pairs with -1/q dx2), ({2}: dx2 pairs with dx1)
    CHECK(form_equal(pairs[0].first, KForm::basis(2, {1}, normal_const(2, Scalar(1)))));
    CHECK(form_equal(pairs[0].second, KForm::basis(2, {2}, normal_const(2, -(Scalar(1) / q)))));
    CHECK(form_equal(pairs[1].first, KForm::basis(2, {2}, normal_const(2, Scalar(1)))));
    CHECK(form_equal(pairs[1].second, KForm::basis(2, {1}, normal_const(2, Scalar(1)))));

    // j = n and the j = 0 analogue
    auto full = integral_form_generators(2, qplane, tw);
    REQUIRE(full.size() == 1);
    CHECK(full[0].first.degree == 2);
    CHECK(form_equal(full[0].second, KForm::from_poly(2, normal_const(2, Scalar(1)))));
    auto empty = integral_form_generators(0, qplane, tw);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].first.degree == 0);
    CHECK(empty[0].second.degree == 2);

    // defining property: wbar ^ w = omega, on a 3-generator example
    auto scal3 = catalog_get("multiplicative-weyl-3");
    TwistFamily tw3 = forced(scal3);
    KForm omega = KForm::basis(3, {1, 2, 3}, normal_const(3, Scalar(1)));
    for (int j = 0; j <= 3; ++j)
        for (const auto& [w, wbar] : integral_form_generators(j, scal3, tw3))
            CHECK(form_equal(wedge(wbar, w, scal3, tw3), omega));
}

TEST_CASE("integral-form reconstruction identities") {
    auto comm = commutative(2);
    CHECK(verify_integral_identity(1, comm, forced(comm)));

    auto qplane = catalog_get("quantum-plane");
    CHECK(verify_integral_identity(1, qplane, forced(qplane)));

    auto mw3 = catalog_get("multiplicative-weyl-3");
    TwistFamily tw3 = forced(mw3);
    CHECK(verify_integral_identity(1, mw3, tw3));
    CHECK(verify_integral_identity(2, mw3, tw3));
}

TEST_CASE("kernel of d") {
    auto comm = commutative(2);
    auto k1 = kernel_of_d(comm, forced(comm), 3);
    REQUIRE(k1.size() == 1);
    CHECK(normal_equal(k1[0], normal_const(2, Scalar(1))));

    auto qplane = catalog_get("quantum-plane");
    auto k2 = kernel_of_d(qplane, forced(qplane), 5);
    REQUIRE(k2.size() == 1);
    CHECK(normal_equal(k2[0], normal_const(2, Scalar(1))));

    auto weyl = catalog_get("weyl-1");
    auto k3 = kernel_of_d(weyl, forced(weyl), 4);
    REQUIRE(k3.size() == 1);
    CHECK(normal_equal(k3[0], normal_const(2, Scalar(1))));

    // every kernel element actually satisfies d(a) = 0
    for (const auto& b : k3) CHECK(differential(b, weyl, forced(weyl)).is_zero());
}

TEST_CASE("product rule at degree zero") {
    for (const auto& name : {"quantum-plane", "weyl-1", "u-n2", "difference-ops-1-1"}) {
        auto pres = catalog_get(name);
        TwistFamily tw = forced(pres);
        for (int t = 0; t < 25; ++t) {
            NormalPoly a = normal_monomial(random_exponents(pres.n, uniform(0, 3)));
            NormalPoly b = normal_monomial(random_exponents(pres.n, uniform(0, 3)));
            KForm lhs = differential(multiply(a, b, pres), pres, tw);
            KForm rhs = form_add(form_right_multiply(differential(a, pres, tw), b, pres),
                                 left_multiply_form(a, differential(b, pres, tw), pres, tw));
            CHECK(form_equal(lhs, rhs));
        }
    }
}
