#include "doctest.h"
#include "msym/hecke_ops.hpp"
#include "msym/macdonald.hpp"
#include "msym/structure.hpp"
#include "support.hpp"

using namespace msym;

namespace {

const QtRational t = QtRational::t();
const QtRational q = QtRational::q();
MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }
MPartition L(const char* s) { return MPartition::parse(s); }

MultiPoly random_msym(std::mt19937& rng, int m, int d, int N) {
    PolyBuilder b(N);
    for (const auto& lab : enumerate_mpartitions(m, d))
        if (rng() % 2) b.add(monomial_m(lab, N), testsupport::random_scalar(rng));
    return b.build();
}

// omega^{-1} f(x_1..x_N) = f(x_2, ..., x_N, x_1/q)
MultiPoly omega_inverse(const MultiPoly& f) {
    const int N = f.nvars();
    MultiPoly r(N);
    for (const auto& [e, c] : f.terms()) {
        Exponent y{};
        for (int k = 1; k < N; ++k) y[k] = e[k - 1];
        y[0] = e[N - 1];
        r.add_term(y, e[N - 1] ? c * QtRational::q_pow(-e[N - 1]) : c);
    }
    return r;
}

MultiPoly apply_T_inverse(const MultiPoly& f, int i) { return apply_Tbar(f, i); }

// Y_i^{-1} = t^{N-i} T_{i-1}..T_1 omega^{-1} Tbar_{N-1}..Tbar_i
MultiPoly apply_Y_inverse(const MultiPoly& f, int i) {
    const int N = f.nvars();
    MultiPoly g = f;
    for (int j = i; j <= N - 1; ++j) g = apply_T_inverse(g, j);
    g = omega_inverse(g);
    for (int j = 1; j <= i - 1; ++j) g = apply_T(g, j);
    return g * QtRational::t_pow(N - i);
}

}  // namespace

TEST_CASE("monomial and power-sum bases") {
    CHECK(monomial_m(L("(1;1)"), 3) == x(3, 1) * (x(3, 2) + x(3, 3)));
    CHECK(monomial_m(L("(0;)"), 1) == MultiPoly::constant(1, 1));
    CHECK(monomial_m(L("(;1,1)"), 3) == x(3, 1) * x(3, 2) + x(3, 1) * x(3, 3) + x(3, 2) * x(3, 3));
    CHECK_THROWS_AS(monomial_m(L("(;1,1)"), 1), std::invalid_argument);

    CHECK(powersum_t(L("(0,1;)"), 2) == x(2, 2));
    CHECK(powersum_t(L("(0;1)"), 2) == x(2, 1) + x(2, 2));
    // at t = 1 the deformation is x^a p_lambda
    for (const auto& lab : enumerate_mpartitions(2, 3)) {
        const MultiPoly f = powersum_t(lab, 5);
        std::vector<int> e(5, 0);
        std::copy(lab.a.begin(), lab.a.end(), e.begin());
        const MultiPoly expected = MultiPoly::monomial(5, e) * powersum(lab.lambda, 5);
        const MultiPoly at1 = f.map_coeffs([](const QtRational& c) {
            const mpq_class v = c.eval(mpq_class(3, 7), mpq_class(1));
            return QtRational(QtPoly(v.get_num())) / QtRational(QtPoly(v.get_den()));
        });
        CHECK(at1 == expected);
    }
}

TEST_CASE("expansions round-trip and reject bad input") {
    const Expansion e = expand_in_basis(x(2, 1) + x(2, 2), 0, ExpansionBasis::m_Lambda);
    CHECK(e.coeffs.size() == 1);
    CHECK(e.coeff(L("(;1)")).is_one());

    std::mt19937 rng(11);
    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 3; ++d) {
            const int N = faithful_n(m, d);
            const MultiPoly f = random_msym(rng, m, d, N);
            for (auto b : {ExpansionBasis::m_Lambda, ExpansionBasis::p_Lambda_t, ExpansionBasis::P_Lambda}) {
                const Expansion ex = expand_in_basis(f, m, b);
                for (const auto& [lab, c] : ex.coeffs) {
                    CHECK_FALSE(c.is_zero());
                    CHECK(lab.m() == m);
                    CHECK(lab.degree() == d);
                }
                CHECK(reconstruct(ex, N) == f);
            }
        }

    CHECK_THROWS_AS(expand_in_basis(x(3, 2), 1, ExpansionBasis::m_Lambda), std::invalid_argument);
    CHECK_THROWS_AS(expand_in_basis(x(2, 1) * x(2, 2) * (x(2, 1) + x(2, 2)), 0, ExpansionBasis::m_Lambda), std::invalid_argument);
    CHECK_THROWS_AS(expand_in_basis(x(2, 1) + x(2, 1) * x(2, 2), 0, ExpansionBasis::m_Lambda), std::invalid_argument);
    CHECK_FALSE(is_m_symmetric(x(3, 2), 1));
    CHECK(is_m_symmetric(x(3, 2), 0) == false);
    CHECK(is_m_symmetric(x(3, 2) + x(3, 3), 1));
}

TEST_CASE("P is unitriangular in the monomial basis") {
    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 3; ++d)
            for (const auto& [lab, P] : msym_P_table(m, d)) {
                const Expansion ex = expand_in_basis(P, m, ExpansionBasis::m_Lambda);
                CHECK(ex.coeff(lab).is_one());
                for (const auto& [om, c] : ex.coeffs)
                    if (!(om == lab)) CHECK(dominance_leq(om, lab));
            }
}

TEST_CASE("scalar product on power sums and Macdonald polynomials") {
    CHECK(scalar_product_m(powersum_t(L("(;1)"), 1), powersum_t(L("(;1)"), 1), 0) == one_minus(1, 0) / one_minus(0, 1));
    CHECK(scalar_product_m(powersum_t(L("(0,1;)"), 3), powersum_t(L("(0,1;)"), 3), 2) == q * t);
    CHECK(z_lambda_qt({2, 1, 1}) == QtRational(4) * one_minus(2, 0) * one_minus(1, 0).pow(2) /
                                        (one_minus(0, 2) * one_minus(0, 1).pow(2)));

    // p-orthogonality recovered from monomial expansions
    for (int m = 0; m <= 1; ++m) {
        const int N = faithful_n(m, 2);
        const auto labels = enumerate_mpartitions(m, 2);
        for (const auto& a : labels)
            for (const auto& b : labels) {
                const QtRational s = scalar_product_m(powersum_t(a, N), powersum_t(b, N), m);
                CHECK(s == (a == b ? powersum_norm(a) : QtRational()));
            }
    }

    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 3; ++d) {
            const auto& tab = msym_P_table(m, d);
            for (const auto& [la, Pa] : tab)
                for (const auto& [lb, Pb] : tab) {
                    const QtRational s = scalar_product_m(Pa, Pb, m);
                    if (la == lb) CHECK(s == norm_formula(la));
                    else CHECK(s.is_zero());
                }
        }
}

TEST_CASE("norm formula examples") {
    CHECK(norm_formula(L("(;1)")) == one_minus(1, 0) / one_minus(0, 1));
    const QtRational expected =
        one_minus(1, 0) * one_minus(2, 2) * one_minus(3, 2) * one_minus(4, 6) * one_minus(1, 1) * one_minus(2, 3) *
        one_minus(1, 0) * one_minus(2, 4) * one_minus(1, 3) * one_minus(1, 2) /
        (one_minus(0, 1) * one_minus(1, 1) * one_minus(2, 3) * one_minus(3, 5) * one_minus(1, 2) * one_minus(2, 4) *
         one_minus(1, 1) * one_minus(2, 5) * one_minus(0, 2) * one_minus(0, 1));
    const QtRational qt_power = QtRational::monomial(1, 4, inv({2, 0, 0, 2}));
    CHECK(norm_formula(L("(2,0,0,2;4,1,1)")) == qt_power * expected);
}

TEST_CASE("inclusion coefficients") {
    const Expansion e = inclusion_coeffs(L("(;1)"));
    CHECK(e.coeffs.size() == 2);
    CHECK(e.coeff(L("(1;)")).is_one());
    CHECK(e.coeff(L("(0;1)")) == one_minus(1, 0) / one_minus(1, 1));
    const Expansion e0 = inclusion_coeffs(L("(0;)"));
    CHECK(e0.coeffs.size() == 1);
    CHECK(e0.coeff(L("(0,0;)")).is_one());

    for (int m = 0; m <= 1; ++m)
        for (int d = 0; d <= 3; ++d)
            for (const auto& lab : enumerate_mpartitions(m, d)) {
                const int N = faithful_n(m + 1, d);
                PolyBuilder rhs(N);
                for (const auto& [om, psi] : inclusion_coeffs(lab).coeffs) rhs.add(msym_P(om, N), psi);
                CHECK(msym_P(lab, N) == rhs.build());
            }
}

TEST_CASE("restriction") {
    const Restriction r0 = restriction(L("(0;)"));
    CHECK(r0.hat == MPartition{});
    CHECK(r0.factor.is_one());
    const Restriction r1 = restriction(L("(1;)"));
    CHECK(r1.hat == L("(;1)"));
    CHECK(r1.factor == q * one_minus(0, 1) / one_minus(1, 1));

    for (int m = 1; m <= 2; ++m)
        for (int d = 0; d <= 3; ++d)
            for (const auto& lab : enumerate_mpartitions(m, d)) {
                const int N = faithful_n(m, d);
                const Restriction r = restriction(lab);
                CHECK(restrict_poly(msym_P(lab, N), m) == msym_P(r.hat, N - 1) * r.factor);
            }

    // r(i(P)) = P, and every Omega restricts back to Lambda
    for (int m = 0; m <= 1; ++m)
        for (int d = 0; d <= 3; ++d)
            for (const auto& lab : enumerate_mpartitions(m, d)) {
                QtRational total;
                for (const auto& [om, psi] : inclusion_coeffs(lab).coeffs) {
                    const Restriction r = restriction(om);
                    CHECK(r.hat == lab);
                    total += psi * r.factor;
                }
                CHECK(total.is_one());
            }

    // adjointness of inclusion and restriction
    std::mt19937 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        const int m = trial % 2;
        const int d = 1 + trial % 3;
        const int N = faithful_n(m + 1, d);
        const MultiPoly f = random_msym(rng, m, d, N);
        const MultiPoly g = random_msym(rng, m + 1, d, N);
        CHECK(scalar_product_m(f, g, m + 1) == scalar_product_m(f, restrict_poly(g, m + 1), m));
    }
}

TEST_CASE("principal specialization") {
    CHECK(principal_specialization(L("(;1)"), 2) == QtRational(1) + t);
    CHECK(principal_specialization(L("(1;)"), 2) == one_minus(1, 2) / one_minus(1, 1));
    CHECK(principal_value(nonsym_E({1, 0})) == one_minus(1, 2) / one_minus(1, 1));
    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 3; ++d)
            for (const auto& lab : enumerate_mpartitions(m, d)) {
                const int N = m + 3;
                if (N < lab.length()) continue;
                CHECK(principal_value(msym_P(lab, N)) == principal_specialization(lab, N));
            }
    for (int N = 1; N <= 3; ++N)
        for (int d = 0; d <= 3; ++d)
            for (const auto& eta : compositions(d, N)) CHECK(principal_value(nonsym_E(eta)) == e_specialization(eta));
}

TEST_CASE("evaluation u_Lambda") {
    // (0^m; empty) is the principal evaluation
    const MultiPoly f = nonsym_E({2, 0, 1});
    CHECK(evaluation_u(L("(0,0;)"), f) == principal_value(f));

    // f(Y^{-1}) P = u_Lambda(f) P
    std::mt19937 rng(3);
    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 2; ++d)
            for (const auto& lab : enumerate_mpartitions(m, d)) {
                const int N = m + 2;
                if (N < lab.length()) continue;
                const MultiPoly P = msym_P(lab, N);
                const auto pt = evaluation_point(lab, N);
                for (int i = 1; i <= m; ++i) {
                    CHECK(apply_Y(apply_Y_inverse(P, i), i) == P);
                    CHECK(apply_Y_inverse(P, i) == P * pt[i - 1]);
                }
                PolyBuilder sym(N);
                std::vector<QtRational> vals;
                for (int i = m + 1; i <= N; ++i) {
                    sym.add(apply_Y_inverse(P, i));
                    vals.push_back(pt[i - 1]);
                }
                CHECK(sym.build() == P * sum(vals));
            }
}

TEST_CASE("evaluation symmetry") {
    for (int m = 0; m <= 1; ++m) {
        std::vector<MPartition> labels;
        for (int d = 0; d <= 2; ++d)
            for (const auto& lab : enumerate_mpartitions(m, d)) labels.push_back(lab);
        const int N = m + 2;
        for (const auto& la : labels)
            for (const auto& lb : labels) {
                const MultiPoly Pa = msym_P(la, N);
                const MultiPoly Pb = msym_P(lb, N);
                const QtRational lhs = evaluation_u(lb, Pa) / principal_value(Pa);
                const QtRational rhs = evaluation_u(la, Pb) / principal_value(Pb);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("sesquilinear product") {
    const MultiPoly P1 = msym_P(L("(;1)"), 1);
    CHECK(sesquilinear_product(P1, P1, 0) == one_minus(1, 0) / one_minus(0, 1));
    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 2; ++d) {
            const auto& tab = msym_P_table(m, d);
            for (const auto& [la, Pa] : tab)
                for (const auto& [lb, Pb] : tab) {
                    const QtRational s = sesquilinear_product(Pa, Pb, m);
                    if (la == lb) {
                        CHECK(s == sesquilinear_norm_formula(la));
                        CHECK(s == norm_formula(la) / QtRational::monomial(1, size_of(la.a), inv(la.a)));
                    } else {
                        CHECK(s.is_zero());
                    }
                }
        }
}

TEST_CASE("Gram-Schmidt reproduces P") {
    for (int m = 0; m <= 1; ++m)
        for (int d = 0; d <= 2; ++d) {
            const auto gs = gram_schmidt_P(m, d);
            const auto& tab = msym_P_table(m, d);
            REQUIRE(gs.size() == tab.size());
            for (std::size_t i = 0; i < gs.size(); ++i) {
                CHECK(gs[i].first == tab[i].first);
                CHECK(gs[i].second == tab[i].second);
            }
        }
}

TEST_CASE("eigenoperators are self-adjoint") {
    std::mt19937 rng(17);
    for (int m = 1; m <= 2; ++m) {
        const int d = 2;
        const int N = faithful_n(m, d);
        const MultiPoly f = random_msym(rng, m, d, N);
        const MultiPoly g = random_msym(rng, m, d, N);
        for (int i = 1; i <= m; ++i)
            CHECK(scalar_product_m(apply_Y(f, i), g, m) == scalar_product_m(f, apply_Y(g, i), m));
        const OperatorContext ctx{N, m};
        CHECK(scalar_product_m(apply_D(ctx, f), g, m) == scalar_product_m(f, apply_D(ctx, g), m));
    }
}
