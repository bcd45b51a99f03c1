#include "doctest.h"
#include "msym/kernels.hpp"
#include "msym/structure.hpp"

using namespace msym;

namespace {

const QtRational t = QtRational::t();
const QtRational q = QtRational::q();

BiPoly at_t1(const BiPoly& k) {
    return k.map_coeffs([](const QtRational& c) {
        const mpq_class v = c.eval(mpq_class(2, 5), mpq_class(1));
        return QtRational(QtPoly(v.get_num())) / QtRational(QtPoly(v.get_den()));
    });
}

}  // namespace

TEST_CASE("BiPoly basics") {
    const BiPoly k = BiPoly::tensor(MultiPoly::variable(2, 1), MultiPoly::variable(1, 1));
    CHECK(k.nx() == 2);
    CHECK(k.ny() == 1);
    CHECK(k.to_string() == "x1*y1");
    CHECK(k.swapped().to_string() == "x1*y1");
    CHECK(k.swapped().nx() == 1);
    const auto& [e, c] = *k.poly().terms().begin();
    CHECK(BiPoly::x_exponent(e, 2) == std::vector<int>{1, 0});
    CHECK(BiPoly::y_exponent(e, 2, 1) == std::vector<int>{1});
    CHECK(c.is_one());
    CHECK(k.component(1, 1) == k);
    CHECK(k.component(0, 0).is_zero());
    CHECK(k.truncated(0).is_zero());
}

TEST_CASE("K_0 truncations") {
    const BiPoly k = k0_truncated(2, 2, 3);
    CHECK(k.component(0, 0).poly() == MultiPoly::constant(4, 1));
    const BiPoly p11 = BiPoly::tensor(powersum({1}, 2), powersum({1}, 2));
    CHECK(k.component(1, 1) == p11 * (one_minus(0, 1) / one_minus(1, 0)));
    for (int n = 1; n <= 3; ++n) CHECK(k0_truncated(n, n, 3) == k0_product_form(n, n, 3));
    CHECK(k0_truncated(1, 2, 3) == k0_product_form(1, 2, 3));
}

TEST_CASE("K_m truncations and their expansions") {
    CHECK(km_truncated(0, 2, 2, 3) == k0_truncated(2, 2, 3));
    const BiPoly e0 = km_expansion(0, 1, 1, 1);
    CHECK(e0.component(1, 1).poly().terms().begin()->second == one_minus(0, 1) / one_minus(1, 0));
    for (int m = 0; m <= 1; ++m)
        for (const auto& c : reproducing_kernel_check(m, m == 0 ? 3 : 2)) {
            INFO(c.identity);
            CHECK(c.holds);
        }
    // mixed alphabets: P vanishes when the alphabet is too short
    CHECK(km_truncated(1, 1, 3, 2) == km_expansion(1, 1, 3, 2));
}

TEST_CASE("Hall-Littlewood kernel") {
    const KernelCheck c1 = hl_kernel_check(1, 3);
    CHECK(c1.holds);
    BiPoly geo(1, 1);
    for (int a = 0; a <= 3; ++a) geo += BiPoly::tensor(MultiPoly::monomial(1, {a}), MultiPoly::monomial(1, {a}));
    CHECK(c1.rhs == geo);
    for (int m = 2; m <= 3; ++m) {
        const KernelCheck c = hl_kernel_check(m, m == 2 ? 3 : 2);
        CHECK(c.holds);
        // at t = 1 both sides are sums of x^a y^a
        BiPoly mono(m, m);
        for (int d = 0; d <= (m == 2 ? 3 : 2); ++d)
            for (const auto& a : compositions(d, m))
                mono += BiPoly::tensor(MultiPoly::monomial(m, a), MultiPoly::monomial(m, a));
        CHECK(at_t1(c.lhs) == mono);
        CHECK(at_t1(c.rhs) == mono);
    }
}

TEST_CASE("Cauchy-type identities") {
    CHECK(cauchy_identity_check(0, 3).holds);
    const KernelCheck c1 = cauchy_identity_check(1, 2);
    CHECK(c1.holds);
    const KernelCheck small = cauchy_identity_check(1, 1, 1);
    CHECK(small.holds);
    CHECK(small.lhs.component(1, 1).poly().terms().begin()->second == one_minus(1, 1) / one_minus(1, 0));
    CHECK(cauchy_identity_check(2, 2).holds);

    const KernelCheck n1 = nonsym_cauchy_check(1, 3);
    CHECK(n1.holds);
    CHECK(n1.rhs.component(1, 1).poly().terms().begin()->second == one_minus(1, 1) / one_minus(1, 0));
    CHECK(nonsym_cauchy_check(2, 2).holds);
    CHECK(nonsym_cauchy_check(3, 2).holds);
    for (int m = 1; m <= 2; ++m) CHECK(nonsym_cauchy_variant_check(m, 2).holds);
}

TEST_CASE("kernel operator symmetries") {
    CHECK(kernel_hecke_symmetry_check(1, 2).size() == 1);
    for (int m = 1; m <= 3; ++m)
        for (const auto& c : kernel_hecke_symmetry_check(m, 2)) {
            INFO(c.identity);
            CHECK(c.holds);
        }
    for (const auto& c : kernel_hecke_symmetry_check(2, 2, 3)) CHECK(c.holds);
    for (int m = 0; m <= 2; ++m)
        for (const auto& c : kernel_eigen_symmetry_check(m, m + 1, 2)) {
            INFO(c.identity);
            CHECK(c.holds);
        }
}
