#pragma once

#include "msym/polyring.hpp"

#include <random>
#include <stdexcept>

namespace testsupport {

using namespace msym;

inline QtRational random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-3, 3), e(0, 1), pick(0, 3);
    QtRational x = QtRational(c(rng)) * QtRational::monomial(1, e(rng), e(rng));
    if (pick(rng) == 0) x = x / one_minus(1, e(rng));
    return x;
}

/// Random polynomial of total degree <= deg in n variables.
inline MultiPoly random_poly(std::mt19937& rng, int n, int deg, int terms) {
    MultiPoly f(n);
    std::uniform_int_distribution<int> dd(0, deg);
    for (int k = 0; k < terms; ++k) {
        std::vector<int> ex(n, 0);
        int left = dd(rng);
        std::uniform_int_distribution<int> var(0, n - 1);
        while (left-- > 0) ++ex[var(rng)];
        f.add_term(make_exponent(ex), random_scalar(rng));
    }
    return f;
}

/// Exact quotient h / (x_i - x_j); throws when the division is not exact.
inline MultiPoly divide_by_difference(MultiPoly h, int i, int j) {
    const int n = h.nvars();
    MultiPoly quot(n);
    const MultiPoly d = MultiPoly::variable(n, i) - MultiPoly::variable(n, j);
    while (!h.is_zero()) {
        auto best = h.terms().begin();
        for (auto it = h.terms().begin(); it != h.terms().end(); ++it)
            if (it->first[i - 1] > best->first[i - 1]) best = it;
        if (best->first[i - 1] == 0) throw std::logic_error("not divisible");
        Exponent e = best->first;
        --e[i - 1];
        const MultiPoly mono = MultiPoly::term(n, e, best->second);
        quot += mono;
        h -= d * mono;
    }
    return quot;
}

}  // namespace testsupport
