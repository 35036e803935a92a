#include "biquad/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace biquad {

bool DegLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    for (std::size_t r = 0; r < a.size() && r < b.size(); ++r)
        if (a[r] != b[r]) return a[r] > b[r];
    return a.size() < b.size();
}

FreePoly FreePoly::word(Word w, Scalar c) {
    FreePoly p;
    if (!c.is_zero()) p.terms.emplace(std::move(w), std::move(c));
    return p;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

NormalPoly normal_zero() { return {}; }

NormalPoly normal_const(int n, const Scalar& c) {
    NormalPoly p;
    if (!c.is_zero()) p.emplace(ExponentVector(n, 0), c);
    return p;
}

NormalPoly normal_monomial(ExponentVector alpha, Scalar c) {
    NormalPoly p;
    if (!c.is_zero()) p.emplace(std::move(alpha), std::move(c));
    return p;
}

NormalPoly normal_add(const NormalPoly& a, const NormalPoly& b) {
    NormalPoly r = a;
    for (const auto& [m, c] : b) {
        auto it = r.find(m);
        if (it == r.end()) {
            r.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

NormalPoly normal_sub(const NormalPoly& a, const NormalPoly& b) {
    return normal_add(a, normal_scale(b, Scalar(-1)));
}

NormalPoly normal_scale(const NormalPoly& a, const Scalar& c) {
    if (c.is_zero()) return {};
    NormalPoly r = a;
    for (auto& [m, v] : r) v *= c;
    return r;
}

bool normal_is_zero(const NormalPoly& a) { return a.empty(); }

bool normal_equal(const NormalPoly& a, const NormalPoly& b) {
    return normal_is_zero(normal_sub(a, b));
}

Word word_of(const ExponentVector& alpha) {
    Word w;
    for (std::size_t r = 0; r < alpha.size(); ++r)
        for (unsigned k = 0; k < alpha[r]; ++k) w.push_back(static_cast<int>(r) + 1);
    return w;
}

ExponentVector exponents_of(const Word& w, int n) {
    ExponentVector alpha(n, 0);
    for (std::size_t t = 0; t < w.size(); ++t) {
        assert(w[t] >= 1 && w[t] <= n);
        assert(t == 0 || w[t - 1] <= w[t]);
        ++alpha[w[t] - 1];
    }
    return alpha;
}

namespace {

// Index of the chosen descent, or -1 when the word is ascending.
int find_descent(const Word& w, Strategy strategy) {
    if (strategy == Strategy::leftmost) {
        for (std::size_t t = 0; t + 1 < w.size(); ++t)
            if (w[t] > w[t + 1]) return static_cast<int>(t);
        return -1;
    }
    for (std::size_t t = w.size(); t >= 2; --t)
        if (w[t - 2] > w[t - 1]) return static_cast<int>(t) - 2;
    return -1;
}

FreePoly reduce_at(const Word& w, std::size_t t, const AlgebraPresentation& pres) {
    const int j = w[t], i = w[t + 1];  // j > i: rewrite x_j x_i
    FreePoly out;
    Word prefix(w.begin(), w.begin() + t);
    Word suffix(w.begin() + t + 2, w.end());
    auto glue = [&](std::initializer_list<int> mid) {
        Word r = prefix;
        r.insert(r.end(), mid.begin(), mid.end());
        r.insert(r.end(), suffix.begin(), suffix.end());
        return r;
    };
    out.add_term(glue({i, j}), pres.q_at(i, j));
    for (int k = 1; k <= pres.n; ++k) {
        Scalar av = pres.a_at(i, j, k);
        if (!av.is_zero()) out.add_term(glue({k}), av);
    }
    Scalar bv = pres.b_at(i, j);
    if (!bv.is_zero()) out.add_term(glue({}), bv);
    return out;
}

}  // namespace

FreePoly reduce_once(const Word& w, const AlgebraPresentation& pres, Strategy strategy) {
    const AlgebraPresentation d = to_descending(pres);
    int t = find_descent(w, strategy);
    if (t < 0) throw NoDescent();
    return reduce_at(w, static_cast<std::size_t>(t), d);
}

NormalPoly normalize(const FreePoly& p, const AlgebraPresentation& pres, Strategy strategy) {
    const AlgebraPresentation d = to_descending(pres);
    NormalPoly done;
    std::map<Word, Scalar> pending = p.terms;
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        Scalar c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;
        int t = find_descent(w, strategy);
        if (t < 0) {
            ExponentVector alpha = exponents_of(w, d.n);
            auto jt = done.find(alpha);
            if (jt == done.end()) {
                done.emplace(std::move(alpha), c);
            } else {
                jt->second += c;
                if (jt->second.is_zero()) done.erase(jt);
            }
            continue;
        }
        for (const auto& [w2, c2] : reduce_at(w, static_cast<std::size_t>(t), d).terms) {
            auto jt = pending.find(w2);
            if (jt == pending.end()) {
                pending.emplace(w2, c * c2);
            } else {
                jt->second += c * c2;
                if (jt->second.is_zero()) pending.erase(jt);
            }
        }
    }
    return done;
}

NormalPoly normalize(const Word& w, const AlgebraPresentation& pres, Strategy strategy) {
    return normalize(FreePoly::word(w), pres, strategy);
}

NormalPoly multiply(const NormalPoly& a, const NormalPoly& b, const AlgebraPresentation& pres) {
    const AlgebraPresentation d = to_descending(pres);
    NormalPoly out;
    for (const auto& [alpha, ca] : a) {
        Word wa = word_of(alpha);
        for (const auto& [beta, cb] : b) {
            Word w = wa;
            Word wb = word_of(beta);
            w.insert(w.end(), wb.begin(), wb.end());
            out = normal_add(out, normal_scale(normalize(w, d), ca * cb));
        }
    }
    return out;
}

// ---- affine endomorphisms ----

AffineEndo AffineEndo::identity(int n) {
    AffineEndo e;
    e.images.assign(n, {Scalar(1), Scalar(0)});
    return e;
}

bool AffineEndo::is_bijective() const {
    for (const auto& [l, m] : images)
        if (l.is_zero()) return false;
    return true;
}

AffineEndo AffineEndo::inverse() const {
    AffineEndo r;
    r.images.reserve(images.size());
    for (const auto& [l, m] : images)
        r.images.emplace_back(Scalar(1) / l, -(m / l));
    return r;
}

bool AffineEndo::equals(const AffineEndo& o) const {
    if (images.size() != o.images.size()) return false;
    for (std::size_t k = 0; k < images.size(); ++k)
        if (!images[k].first.equals(o.images[k].first) ||
            !images[k].second.equals(o.images[k].second))
            return false;
    return true;
}

NormalPoly AffineEndo::image_of(int j) const {
    const int nn = n();
    ExponentVector e(nn, 0);
    e[j - 1] = 1;
    NormalPoly p = normal_monomial(e, images[j - 1].first);
    return normal_add(p, normal_const(nn, images[j - 1].second));
}

AffineEndo compose(const AffineEndo& e1, const AffineEndo& e2) {
    assert(e1.n() == e2.n());
    AffineEndo r;
    r.images.reserve(e1.images.size());
    for (std::size_t k = 0; k < e1.images.size(); ++k) {
        const auto& [l1, m1] = e1.images[k];
        const auto& [l2, m2] = e2.images[k];
        r.images.emplace_back(l1 * l2, l2 * m1 + m2);
    }
    return r;
}

NormalPoly apply_endo(const AffineEndo& e, const NormalPoly& p, const AlgebraPresentation& pres) {
    const AlgebraPresentation d = to_descending(pres);
    NormalPoly out;
    for (const auto& [alpha, c] : p) {
        NormalPoly acc = normal_const(d.n, Scalar(1));
        for (int j = 1; j <= d.n; ++j) {
            if (alpha[j - 1] == 0) continue;
            NormalPoly img = e.image_of(j);
            for (unsigned k = 0; k < alpha[j - 1]; ++k) acc = multiply(acc, img, d);
        }
        out = normal_add(out, normal_scale(acc, c));
    }
    return out;
}

bool preserves_relations(const AffineEndo& e, const AlgebraPresentation& pres) {
    const AlgebraPresentation d = to_descending(pres);
    for (int i = 1; i <= d.n; ++i) {
        for (int j = i + 1; j <= d.n; ++j) {
            NormalPoly lhs = multiply(e.image_of(j), e.image_of(i), d);
            lhs = normal_sub(lhs, normal_scale(multiply(e.image_of(i), e.image_of(j), d),
                                               d.q_at(i, j)));
            for (int k = 1; k <= d.n; ++k) {
                Scalar av = d.a_at(i, j, k);
                if (!av.is_zero()) lhs = normal_sub(lhs, normal_scale(e.image_of(k), av));
            }
            lhs = normal_sub(lhs, normal_const(d.n, d.b_at(i, j)));
            if (!normal_is_zero(lhs)) return false;
        }
    }
    return true;
}

bool commute_on_generators(const AffineEndo& e1, const AffineEndo& e2) {
    return compose(e1, e2).equals(compose(e2, e1));
}

std::string to_string(const NormalPoly& p, int n) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Largest monomial first.
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [alpha, c] = *it;
        // Pull the sign out when the coefficient is a single-term fraction.
        bool negative = false;
        Scalar mag = c;
        if (c.num().size() == 1 && c.num().begin()->second < 0) {
            negative = true;
            mag = -c;
        }
        bool compound = mag.num().size() > 1;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        unsigned deg = std::accumulate(alpha.begin(), alpha.end(), 0u);
        std::string cs = mag.str();
        if (compound) cs = "(" + cs + ")";
        if (deg == 0) {
            os << cs;
        } else {
            if (!mag.is_one()) os << cs << " ";
            bool sep = false;
            for (int r = 0; r < n; ++r) {
                if (alpha[r] == 0) continue;
                if (sep) os << " ";
                os << "x" << (r + 1);
                if (alpha[r] > 1) os << "^" << alpha[r];
                sep = true;
            }
        }
    }
    return os.str();
}

}  // namespace biquad
