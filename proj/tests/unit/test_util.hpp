#pragma once

#include "biquad/presentation.hpp"
#include "biquad/rewrite.hpp"
#include "biquad/scalar.hpp"

#include <random>
#include <vector>

namespace testutil {

using namespace biquad;

inline std::mt19937& rng() {
    static std::mt19937 gen(20250810u);
    return gen;
}

inline int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

/// A scalar from the small pool {0, +-1, +-2, q, 1/q}.
inline Scalar pool_scalar(bool allow_zero = true) {
    static const Scalar q = Scalar::parameter("q");
    int lo = allow_zero ? 0 : 1;
    switch (uniform(lo, 6)) {
        case 0: return Scalar(0);
        case 1: return Scalar(1);
        case 2: return Scalar(-1);
        case 3: return Scalar(2);
        case 4: return Scalar(-2);
        case 5: return q;
        default: return Scalar(1) / q;
    }
}

/// Small random scalar built from parameters and rationals; never relies on
/// canonical representation, only on field identities.
inline Scalar random_scalar(int depth = 2) {
    if (depth == 0) {
        switch (uniform(0, 3)) {
            case 0: return Scalar(Rational(uniform(-4, 4)));
            case 1: return Scalar::parameter("q");
            case 2: return Scalar::parameter("s");
            default: return Scalar(Rational(uniform(1, 5), uniform(1, 5)));
        }
    }
    Scalar a = random_scalar(depth - 1), b = random_scalar(depth - 1);
    switch (uniform(0, 3)) {
        case 0: return a + b;
        case 1: return a - b;
        case 2: return a * b;
        default: return b.is_zero() ? a : a / b;
    }
}

/// Random 3-generator presentation with q from the pool (nonzero) and a, b
/// from the pool, zero-biased so confluent instances occur often.
inline AlgebraPresentation random_presentation3() {
    AlgebraPresentation pres;
    pres.n = 3;
    pres.params = {"q"};
    pres.name = "random-3";
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
            pres.set_q(i, j, pool_scalar(false));
            for (int k = 1; k <= 3; ++k)
                if (uniform(0, 5) == 0) pres.set_a(i, j, k, pool_scalar());
            if (uniform(0, 2) == 0) pres.set_b(i, j, pool_scalar());
        }
    }
    return pres;
}

inline Word random_word(int n, int max_len) {
    Word w(uniform(0, max_len));
    for (auto& x : w) x = uniform(1, n);
    return w;
}

/// Commutative polynomial presentation, handy as the classical baseline.
inline AlgebraPresentation commutative(int n) {
    AlgebraPresentation pres;
    pres.n = n;
    pres.name = "commutative";
    return pres;
}

}  // namespace testutil
