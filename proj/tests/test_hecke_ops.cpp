#include "doctest.h"
#include "msym/combinatorics.hpp"
#include "msym/hecke_ops.hpp"
#include "support.hpp"

using namespace msym;
using testsupport::random_poly;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }
const QtRational t = QtRational::t();
const QtRational q = QtRational::q();

MultiPoly T_by_definition(const MultiPoly& f, int i) {
    const int n = f.nvars();
    const MultiPoly num = (t * x(n, i) - x(n, i + 1)) * (exchange(f, i, i + 1) - f);
    return f * t + testsupport::divide_by_difference(num, i, i + 1);
}

}  // namespace

TEST_CASE("T_i matches its defining divided difference") {
    CHECK(apply_T(x(2, 1), 1) == x(2, 2));
    std::mt19937 rng(1);
    for (int k = 0; k < 20; ++k) {
        const auto f = random_poly(rng, 3, 4, 5);
        for (int i = 1; i <= 2; ++i) CHECK(apply_T(f, i) == T_by_definition(f, i));
    }
}

TEST_CASE("T_i basic relations") {
    const auto sym = x(3, 1) * x(3, 2) + x(3, 3);
    CHECK(apply_T(sym, 1) == sym * t);
    CHECK(apply_Tbar(x(2, 2), 1) == x(2, 1));
    CHECK(apply_Tbar(sym, 1) == sym * QtRational::t_pow(-1));
    std::mt19937 rng(2);
    for (int k = 0; k < 10; ++k) {
        const auto f = random_poly(rng, 4, 3, 4);
        for (int i = 1; i <= 3; ++i) {
            const auto Tf = apply_T(f, i);
            CHECK((apply_T(Tf, i) + Tf - Tf * t - f * t).is_zero());
            CHECK(apply_Tbar(Tf, i) == f);
            CHECK(apply_T(apply_Tbar(f, i), i) == f);
        }
        CHECK(apply_T_word(f, {1, 2, 1}) == apply_T_word(f, {2, 1, 2}));
        CHECK(apply_T_word(f, {1, 3}) == apply_T_word(f, {3, 1}));
    }
}

TEST_CASE("omega and Phi") {
    CHECK(apply_omega(x(3, 1)) == q * x(3, 3));
    CHECK(apply_omega(x(3, 2)) == x(3, 1));
    CHECK(apply_Phi(MultiPoly::constant(2, 1)) == QtRational::t_pow(-1) * x(2, 2));
    std::mt19937 rng(3);
    for (int k = 0; k < 5; ++k) {
        const auto f = random_poly(rng, 4, 3, 4);
        for (int i = 2; i <= 3; ++i) CHECK(apply_omega(apply_T(f, i)) == apply_T(apply_omega(f), i - 1));
        const auto hf = f.component(2);
        if (!hf.is_zero()) CHECK(apply_Phi(hf).is_homogeneous());
        if (!hf.is_zero()) CHECK(apply_Phi(hf).total_degree() == 3);
    }
}

TEST_CASE("Cherednik operators") {
    std::mt19937 rng(4);
    const int N = 3;
    for (int k = 0; k < 4; ++k) {
        const auto f = random_poly(rng, N, 2, 3);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) CHECK(apply_Y(apply_Y(f, j), i) == apply_Y(apply_Y(f, i), j));
        for (int i = 1; i < N; ++i) {
            CHECK(apply_T(apply_Y(f, i), i) ==
                  apply_Y(apply_T(f, i), i + 1) + apply_Y(f, i) * (t - QtRational(1)));
            CHECK(apply_T(apply_Y(f, i + 1), i) ==
                  apply_Y(apply_T(f, i), i) - apply_Y(f, i) * (t - QtRational(1)));
        }
    }
    // triangular action on monomials
    for (const auto& eta : compositions(3, N)) {
        const auto mono = MultiPoly::monomial(N, eta);
        const auto r = row_function(eta);
        for (int i = 1; i <= N; ++i) {
            const auto y = apply_Y(mono, i);
            const auto eig = QtRational::monomial(1, eta[i - 1], 1 - r[i - 1]);
            CHECK(y.coefficient_of(eta) == eig);
            for (const auto& [e, c] : y.terms()) {
                const auto nu = exponent_vector(e, N);
                if (nu != eta) CHECK(bruhat_less(nu, eta));
            }
        }
    }
}

TEST_CASE("symmetrizer") {
    const OperatorContext c20{2, 0};
    CHECK(symmetrize_t(c20, x(2, 2)) == t * (x(2, 1) + x(2, 2)));
    const OperatorContext c41{4, 1};
    const auto one = symmetrize_t(c41, MultiPoly::constant(4, 1));
    CHECK(one.size() == 1);
    CHECK(one.total_degree() == 0);
    CHECK(one.coefficient_of({0, 0, 0, 0}) == t_factorial(3));
    std::mt19937 rng(6);
    for (int k = 0; k < 5; ++k) {
        const auto f = random_poly(rng, 5, 3, 4);
        for (int m = 0; m <= 2; ++m) {
            const OperatorContext ctx{5, m};
            const auto s = symmetrize_t(ctx, f);
            CHECK(symmetrize_t(ctx, f, SymAlgo::right) == s);
            CHECK(symmetrize_t(ctx, f, SymAlgo::left) == s);
            if (m == 2) CHECK(symmetrize_t(ctx, f, SymAlgo::naive) == s);
            for (int i = m + 1; i < 5; ++i) {
                CHECK(apply_T(s, i) == s * t);
                CHECK(exchange(s, i, i + 1) == s);
            }
        }
    }
}

TEST_CASE("D operator") {
    const OperatorContext ctx{3, 2};
    CHECK(apply_D(ctx, MultiPoly(3)).is_zero());
    const auto f = x(3, 1) * x(3, 3) + x(3, 2);
    CHECK(apply_D(ctx, f) == apply_Y(f, 3) - f * QtRational::t_pow(-2));
}

TEST_CASE("operators on a variable block") {
    std::mt19937 rng(8);
    const auto f = random_poly(rng, 3, 3, 4);
    const auto shifted = relabel(f, 5, {3, 4, 5});
    const Block b{2, 3};
    CHECK(apply_T(shifted, 1, b) == relabel(apply_T(f, 1), 5, {3, 4, 5}));
    CHECK(apply_Y(shifted, 2, b) == relabel(apply_Y(f, 2), 5, {3, 4, 5}));
    CHECK_THROWS_AS(apply_T(f, 3), std::out_of_range);
}
