#pragma once

// Random exact inputs shared by the unit tests.

#include "waring/symtensor.hpp"

#include <random>

namespace waring::testing {

inline Field tau_minus_two() { return Field::with_tau(Rational(-2)); }

/// Small-height element: numerators in [-3, 3], denominators in [1, 3].
inline FieldElem random_elem(Field f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    std::array<Rational, 6> c;
    for (auto& q : c) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
    }
    return f.from_coeffs(c);
}

inline FieldElem random_nonzero(Field f, std::mt19937_64& rng)
{
    FieldElem x = random_elem(f, rng);
    while (x.is_zero()) x = random_elem(f, rng);
    return x;
}

inline SquareMatrix random_matrix(Field f, int n, std::mt19937_64& rng)
{
    SquareMatrix m(f, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = random_elem(f, rng);
    return m;
}

/// Sparse integer matrix in Q(zeta), cheap enough for pullback-heavy tests.
inline SquareMatrix random_light_matrix(Field f, int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(-1, 1), which(0, 2);
    SquareMatrix m(f, n);
    const FieldElem z = f.zeta();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            FieldElem s = f.from_int(d(rng));
            int k = which(rng);
            m(r, c) = k == 0 ? s : k == 1 ? s * z : s * z * z;
        }
    return m;
}

}  // namespace waring::testing
