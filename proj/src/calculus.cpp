#include "biquad/calculus.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace biquad {

std::variant<TwistFamily, Obstruction> derive_forced_twists(const AlgebraPresentation& pres) {
    const AlgebraPresentation d = to_descending(pres);
    for (int i = 1; i <= d.n; ++i)
        for (int j = i + 1; j <= d.n; ++j)
            for (int k = 1; k <= d.n; ++k)
                if (k != i && k != j && !d.a_at(i, j, k).is_zero())
                    return Obstruction{i, j, k};

    TwistFamily tw;
    tw.rho.assign(d.n, AffineEndo::identity(d.n));
    for (int i = 1; i <= d.n; ++i) {
        for (int j = i + 1; j <= d.n; ++j) {
            Scalar qv = d.q_at(i, j);
            Scalar qinv = Scalar(1) / qv;
            tw.rho[i - 1].images[j - 1] = {qv, d.a_at(i, j, i)};
            tw.rho[j - 1].images[i - 1] = {qinv, -(qinv * d.a_at(i, j, j))};
        }
    }
    return tw;
}

// ---- forms ----

KForm KForm::zero(int n, int degree) {
    KForm f;
    f.n = n;
    f.degree = degree;
    return f;
}

KForm KForm::from_poly(int n, const NormalPoly& p) {
    KForm f = zero(n, 0);
    if (!normal_is_zero(p)) f.coeffs.emplace(std::vector<int>{}, p);
    return f;
}

KForm KForm::basis(int n, std::vector<int> subset, NormalPoly coeff) {
    KForm f = zero(n, static_cast<int>(subset.size()));
    assert(std::is_sorted(subset.begin(), subset.end()));
    if (!normal_is_zero(coeff)) f.coeffs.emplace(std::move(subset), std::move(coeff));
    return f;
}

void KForm::add_term(const std::vector<int>& subset, const NormalPoly& c) {
    if (normal_is_zero(c)) return;
    auto it = coeffs.find(subset);
    if (it == coeffs.end()) {
        coeffs.emplace(subset, c);
    } else {
        it->second = normal_add(it->second, c);
        if (normal_is_zero(it->second)) coeffs.erase(it);
    }
}

KForm form_add(const KForm& f, const KForm& g) {
    assert(f.degree == g.degree && f.n == g.n);
    KForm r = f;
    for (const auto& [s, c] : g.coeffs) r.add_term(s, c);
    return r;
}

KForm form_sub(const KForm& f, const KForm& g) {
    return form_add(f, form_scale(g, Scalar(-1)));
}

KForm form_scale(const KForm& f, const Scalar& c) {
    KForm r = KForm::zero(f.n, f.degree);
    if (c.is_zero()) return r;
    for (const auto& [s, p] : f.coeffs) r.coeffs.emplace(s, normal_scale(p, c));
    return r;
}

bool form_equal(const KForm& f, const KForm& g) {
    return form_sub(f, g).is_zero();
}

KForm form_right_multiply(const KForm& f, const NormalPoly& p, const AlgebraPresentation& pres) {
    KForm r = KForm::zero(f.n, f.degree);
    for (const auto& [s, c] : f.coeffs) r.add_term(s, multiply(c, p, pres));
    return r;
}

namespace {

NormalPoly apply_twists_in_order(const std::vector<int>& seq, const NormalPoly& p,
                                 const AlgebraPresentation& pres, const TwistFamily& tw) {
    NormalPoly r = p;
    for (int s : seq) r = apply_endo(tw.rho[s - 1], r, pres);
    return r;
}

// Sort a duplicate-free index sequence by adjacent swaps, accumulating the
// factor -q_ij per swap.  The factor does not depend on the swap order.
std::pair<std::vector<int>, Scalar> sort_with_factor(std::vector<int> seq,
                                                     const AlgebraPresentation& pres) {
    Scalar factor(1);
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
            if (seq[t] > seq[t + 1]) {
                factor *= -pres.q_at(seq[t + 1], seq[t]);
                std::swap(seq[t], seq[t + 1]);
                moved = true;
            }
        }
    }
    return {std::move(seq), std::move(factor)};
}

}  // namespace

KForm differential(const NormalPoly& a, const AlgebraPresentation& pres, const TwistFamily& tw) {
    const AlgebraPresentation d = to_descending(pres);
    KForm out = KForm::zero(d.n, 1);
    for (const auto& [alpha, c] : a) {
        Word w = word_of(alpha);
        // d over the word, one letter at a time: d(w' x_k) = d(w') x_k + dx_k rho_k(w').
        KForm dw = KForm::zero(d.n, 1);
        NormalPoly prefix = normal_const(d.n, Scalar(1));
        for (std::size_t t = 0; t < w.size(); ++t) {
            int k = w[t];
            ExponentVector ek(d.n, 0);
            ek[k - 1] = 1;
            NormalPoly letter = normal_monomial(ek);
            dw = form_right_multiply(dw, letter, d);
            dw.add_term({k}, apply_endo(tw.rho[k - 1], prefix, d));
            prefix = multiply(prefix, letter, d);
        }
        out = form_add(out, form_scale(dw, c));
    }
    return out;
}

NormalPoly partial_closed_form(int k, const ExponentVector& alpha,
                               const AlgebraPresentation& pres, const TwistFamily& tw) {
    const AlgebraPresentation d = to_descending(pres);
    assert(k >= 1 && k <= d.n);
    if (alpha[k - 1] == 0) return normal_zero();
    NormalPoly acc = normal_const(d.n, Scalar(static_cast<long>(alpha[k - 1])));
    for (int r = 1; r < k; ++r) {
        NormalPoly base = tw.rho[k - 1].image_of(r);
        for (unsigned e = 0; e < alpha[r - 1]; ++e) acc = multiply(acc, base, d);
    }
    ExponentVector tail(d.n, 0);
    tail[k - 1] = alpha[k - 1] - 1;
    for (int r = k + 1; r <= d.n; ++r) tail[r - 1] = alpha[r - 1];
    return multiply(acc, normal_monomial(tail), d);
}

KForm wedge(const KForm& f, const KForm& g, const AlgebraPresentation& pres,
            const TwistFamily& tw) {
    const AlgebraPresentation d = to_descending(pres);
    if (f.degree + g.degree > d.n) throw DegreeOverflow();
    KForm out = KForm::zero(d.n, f.degree + g.degree);
    for (const auto& [S, a] : f.coeffs) {
        for (const auto& [T, b] : g.coeffs) {
            bool dup = false;
            for (int s : S)
                if (std::binary_search(T.begin(), T.end(), s)) dup = true;
            if (dup) continue;
            NormalPoly coeff = multiply(apply_twists_in_order(T, a, d, tw), b, d);
            std::vector<int> seq = S;
            seq.insert(seq.end(), T.begin(), T.end());
            auto [sorted, factor] = sort_with_factor(std::move(seq), d);
            out.add_term(sorted, normal_scale(coeff, factor));
        }
    }
    return out;
}

KForm d_on_forms(const KForm& f, const AlgebraPresentation& pres, const TwistFamily& tw) {
    const AlgebraPresentation d = to_descending(pres);
    if (f.degree >= d.n) throw DegreeOverflow();
    KForm out = KForm::zero(d.n, f.degree + 1);
    Scalar sign = f.degree % 2 == 0 ? Scalar(1) : Scalar(-1);
    for (const auto& [S, a] : f.coeffs) {
        KForm base = KForm::basis(d.n, S, normal_const(d.n, Scalar(1)));
        out = form_add(out, form_scale(wedge(base, differential(a, d, tw), d, tw), sign));
    }
    return out;
}

KForm left_multiply_form(const NormalPoly& p, const KForm& f, const AlgebraPresentation& pres,
                         const TwistFamily& tw) {
    const AlgebraPresentation d = to_descending(pres);
    KForm out = KForm::zero(d.n, f.degree);
    for (const auto& [S, a] : f.coeffs)
        out.add_term(S, multiply(apply_twists_in_order(S, p, d, tw), a, d));
    return out;
}

NormalPoly VolumeData::pi_omega(const KForm& top) const {
    assert(top.degree == n);
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 1);
    auto it = top.coeffs.find(full);
    return it == top.coeffs.end() ? normal_zero() : it->second;
}

VolumeData volume_data(const AlgebraPresentation& pres, const TwistFamily& tw) {
    VolumeData v;
    v.n = pres.n;
    AffineEndo nu = AffineEndo::identity(pres.n);
    for (int k = 1; k <= pres.n; ++k) nu = compose(tw.rho[k - 1], nu);
    v.nu_omega = nu;
    return v;
}

namespace {

void subsets_of_size(int n, int j, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == j) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

}  // namespace

std::vector<std::pair<KForm, KForm>> integral_form_generators(int j,
                                                              const AlgebraPresentation& pres,
                                                              const TwistFamily& tw) {
    // The prefactors are scalars, so the twists never act; the parameter is
    // kept so the family reads as part of the calculus data.
    (void)tw;
    const AlgebraPresentation d = to_descending(pres);
    std::vector<std::vector<int>> subsets;
    subsets_of_size(d.n, j, subsets);
    NormalPoly one = normal_const(d.n, Scalar(1));
    std::vector<std::pair<KForm, KForm>> out;
    for (const auto& S : subsets) {
        std::vector<int> comp;
        for (int v = 1; v <= d.n; ++v)
            if (!std::binary_search(S.begin(), S.end(), v)) comp.push_back(v);
        std::vector<int> seq = comp;
        seq.insert(seq.end(), S.begin(), S.end());
        auto [sorted, factor] = sort_with_factor(std::move(seq), d);
        // wbar ^ w = omega exactly.
        KForm w = KForm::basis(d.n, S, one);
        KForm wbar = KForm::basis(d.n, comp, normal_const(d.n, Scalar(1) / factor));
        out.emplace_back(std::move(w), std::move(wbar));
    }
    return out;
}

bool verify_integral_identity(int j, const AlgebraPresentation& pres, const TwistFamily& tw) {
    const AlgebraPresentation d = to_descending(pres);
    assert(j >= 1 && j <= d.n - 1);
    auto gens_j = integral_form_generators(j, d, tw);
    auto gens_complement = integral_form_generators(d.n - j, d, tw);
    VolumeData vol = volume_data(d, tw);
    AffineEndo nu_inv = vol.nu_omega.inverse();

    std::vector<std::vector<int>> subsets;
    subsets_of_size(d.n, j, subsets);
    for (const auto& T : subsets) {
        for (const auto& alpha : monomials_up_to(d.n, 2)) {
            KForm wprime = KForm::basis(d.n, T, normal_monomial(alpha));

            KForm recon1 = KForm::zero(d.n, j);
            for (const auto& [w, wbar] : gens_j) {
                NormalPoly c = vol.pi_omega(wedge(wbar, wprime, d, tw));
                recon1 = form_add(recon1, form_right_multiply(w, c, d));
            }
            if (!form_equal(recon1, wprime)) return false;

            KForm recon2 = KForm::zero(d.n, j);
            for (const auto& [w, wbar] : gens_complement) {
                NormalPoly c = vol.pi_omega(wedge(wprime, w, d, tw));
                recon2 = form_add(recon2, left_multiply_form(apply_endo(nu_inv, c, d), wbar, d, tw));
            }
            if (!form_equal(recon2, wprime)) return false;
        }
    }
    return true;
}

std::vector<ExponentVector> monomials_up_to(int n, int bound) {
    std::vector<ExponentVector> out;
    ExponentVector cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = static_cast<unsigned>(e);
            rec(pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

std::vector<NormalPoly> kernel_of_d(const AlgebraPresentation& pres, const TwistFamily& tw,
                                    int degree_bound) {
    const AlgebraPresentation d = to_descending(pres);
    std::vector<ExponentVector> cols = monomials_up_to(d.n, degree_bound);
    std::map<ExponentVector, int, DegLexLess> col_index;
    for (std::size_t c = 0; c < cols.size(); ++c) col_index.emplace(cols[c], static_cast<int>(c));

    // One equation per (partial index k, target monomial): sparse rows over columns.
    std::map<std::pair<int, ExponentVector>, std::map<int, Scalar>> rows;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        KForm df = differential(normal_monomial(cols[c]), d, tw);
        for (const auto& [S, poly] : df.coeffs) {
            int k = S[0];
            for (const auto& [beta, v] : poly)
                rows[{k, beta}][static_cast<int>(c)] = v;
        }
    }

    std::vector<std::map<int, Scalar>> mat;
    mat.reserve(rows.size());
    for (auto& [key, row] : rows) mat.push_back(std::move(row));

    // Gaussian elimination to find the nullspace.
    const int ncols = static_cast<int>(cols.size());
    std::vector<int> pivot_row_of_col(ncols, -1);
    std::vector<bool> row_used(mat.size(), false);
    for (int c = 0; c < ncols; ++c) {
        int pick = -1;
        std::size_t best_size = 0;
        for (std::size_t r = 0; r < mat.size(); ++r) {
            if (row_used[r]) continue;
            auto it = mat[r].find(c);
            if (it == mat[r].end() || it->second.is_zero()) continue;
            if (pick < 0 || mat[r].size() < best_size) {
                pick = static_cast<int>(r);
                best_size = mat[r].size();
            }
        }
        if (pick < 0) continue;  // free column
        row_used[pick] = true;
        pivot_row_of_col[c] = pick;
        Scalar inv = Scalar(1) / mat[pick][c];
        for (auto& [cc, v] : mat[pick]) v *= inv;
        for (std::size_t r = 0; r < mat.size(); ++r) {
            if (static_cast<int>(r) == pick) continue;
            auto it = mat[r].find(c);
            if (it == mat[r].end() || it->second.is_zero()) continue;
            Scalar factor = it->second;
            for (const auto& [cc, v] : mat[pick]) {
                auto jt = mat[r].find(cc);
                if (jt == mat[r].end()) {
                    Scalar nv = -(factor * v);
                    if (!nv.is_zero()) mat[r].emplace(cc, nv);
                } else {
                    jt->second -= factor * v;
                    if (jt->second.is_zero()) mat[r].erase(jt);
                }
            }
        }
    }

    std::vector<NormalPoly> basis;
    for (int c = 0; c < ncols; ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        NormalPoly vec = normal_monomial(cols[c]);
        for (int p = 0; p < ncols; ++p) {
            int r = pivot_row_of_col[p];
            if (r < 0) continue;
            auto it = mat[r].find(c);
            if (it != mat[r].end() && !it->second.is_zero())
                vec = normal_add(vec, normal_monomial(cols[p], -it->second));
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace biquad
