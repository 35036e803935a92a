#include "biquad/presentation.hpp"

#include <sstream>

namespace biquad {

std::string to_string(Orientation o) {
    return o == Orientation::descending ? "descending" : "ascending";
}

Scalar AlgebraPresentation::q_at(int i, int j) const {
    auto it = q.find({i, j});
    return it == q.end() ? Scalar(1) : it->second;
}

Scalar AlgebraPresentation::a_at(int i, int j, int k) const {
    auto it = a.find({i, j, k});
    return it == a.end() ? Scalar(0) : it->second;
}

Scalar AlgebraPresentation::b_at(int i, int j) const {
    auto it = b.find({i, j});
    return it == b.end() ? Scalar(0) : it->second;
}

void AlgebraPresentation::set_q(int i, int j, Scalar v) { q[{i, j}] = std::move(v); }
void AlgebraPresentation::set_a(int i, int j, int k, Scalar v) { a[{i, j, k}] = std::move(v); }
void AlgebraPresentation::set_b(int i, int j, Scalar v) { b[{i, j}] = std::move(v); }

std::vector<std::string> validate(const AlgebraPresentation& pres) {
    std::vector<std::string> out;
    auto fail = [&](const std::string& m) { out.push_back(m); };

    if (pres.n < 1) fail("generator count must be at least 1");

    std::set<std::string> declared(pres.params.begin(), pres.params.end());
    if (declared.size() != pres.params.size()) fail("duplicate parameter name");
    for (const auto& p : pres.params) {
        bool ok = !p.empty() && std::isalpha(static_cast<unsigned char>(p[0]));
        for (char c : p)
            ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) fail("invalid parameter name '" + p + "'");
    }

    auto pair_ok = [&](int i, int j) { return 1 <= i && i < j && j <= pres.n; };
    auto check_params = [&](const Scalar& s, const std::string& where) {
        for (const auto& v : s.parameters())
            if (!declared.count(v)) fail("undeclared parameter '" + v + "' in " + where);
    };

    for (const auto& [ij, v] : pres.q) {
        std::ostringstream w;
        w << "q(" << ij.first << "," << ij.second << ")";
        if (!pair_ok(ij.first, ij.second)) fail(w.str() + ": index out of range");
        if (v.is_zero()) fail(w.str() + ": q must be nonzero");
        check_params(v, w.str());
    }
    for (const auto& [ijk, v] : pres.a) {
        std::ostringstream w;
        w << "a(" << ijk[0] << "," << ijk[1] << "," << ijk[2] << ")";
        if (!pair_ok(ijk[0], ijk[1]) || ijk[2] < 1 || ijk[2] > pres.n)
            fail(w.str() + ": index out of range");
        check_params(v, w.str());
    }
    for (const auto& [ij, v] : pres.b) {
        std::ostringstream w;
        w << "b(" << ij.first << "," << ij.second << ")";
        if (!pair_ok(ij.first, ij.second)) fail(w.str() + ": index out of range");
        check_params(v, w.str());
    }
    return out;
}

AlgebraPresentation translate_orientation(const AlgebraPresentation& pres) {
    AlgebraPresentation out;
    out.n = pres.n;
    out.params = pres.params;
    out.name = pres.name;
    out.orientation = pres.orientation == Orientation::descending ? Orientation::ascending
                                                                  : Orientation::descending;
    for (int i = 1; i <= pres.n; ++i) {
        for (int j = i + 1; j <= pres.n; ++j) {
            Scalar qv = pres.q_at(i, j);
            Scalar qinv = Scalar(1) / qv;
            if (!qv.equals(Scalar(1))) out.set_q(i, j, qinv);
            for (int k = 1; k <= pres.n; ++k) {
                Scalar av = pres.a_at(i, j, k);
                if (!av.is_zero()) out.set_a(i, j, k, -(qinv * av));
            }
            Scalar bv = pres.b_at(i, j);
            if (!bv.is_zero()) out.set_b(i, j, -(qinv * bv));
        }
    }
    return out;
}

AlgebraPresentation to_descending(const AlgebraPresentation& pres) {
    if (pres.orientation == Orientation::descending) return pres;
    return translate_orientation(pres);
}

bool presentations_equal(const AlgebraPresentation& x, const AlgebraPresentation& y) {
    if (x.n != y.n) return false;
    if (std::set<std::string>(x.params.begin(), x.params.end()) !=
        std::set<std::string>(y.params.begin(), y.params.end()))
        return false;
    AlgebraPresentation a = to_descending(x), b = to_descending(y);
    for (int i = 1; i <= a.n; ++i) {
        for (int j = i + 1; j <= a.n; ++j) {
            if (!a.q_at(i, j).equals(b.q_at(i, j))) return false;
            if (!a.b_at(i, j).equals(b.b_at(i, j))) return false;
            for (int k = 1; k <= a.n; ++k)
                if (!a.a_at(i, j, k).equals(b.a_at(i, j, k))) return false;
        }
    }
    return true;
}

}  // namespace biquad
