#pragma once

/**
 * @file kernels.hpp
 * @brief Degree-truncated reproducing kernels and Cauchy-type identities.
 *
 * A BiPoly lives in x_1..x_nx, y_1..y_ny, stored as one MultiPoly whose first
 * nx variables are x. Every kernel here is bihomogeneous with equal x- and
 * y-degrees, so truncating at x-degree maxdeg is exact degree by degree.
 */

#include "msym/combinatorics.hpp"
#include "msym/hecke_ops.hpp"
#include "msym/polyring.hpp"

#include <string>
#include <vector>

namespace msym {

class BiPoly {
public:
    BiPoly(int nx = 0, int ny = 0);
    BiPoly(int nx, int ny, MultiPoly poly);
    /// f(x) g(y).
    static BiPoly tensor(const MultiPoly& fx, const MultiPoly& gy);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    const MultiPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    Block xblock() const { return {0, nx_}; }
    Block yblock() const { return {nx_, ny_}; }

    static std::vector<int> x_exponent(const Exponent& e, int nx);
    static std::vector<int> y_exponent(const Exponent& e, int nx, int ny);

    /// Terms with x-degree and y-degree at most maxdeg.
    BiPoly truncated(int maxdeg) const;
    /// The (dx, dy)-bihomogeneous component.
    BiPoly component(int dx, int dy) const;
    /// Exchanges the two alphabets; the result has nx and ny swapped.
    BiPoly swapped() const;
    /// Applies fn to every coefficient.
    BiPoly map_coeffs(const std::function<QtRational(const QtRational&)>& fn) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const QtRational& c) {
        a.poly_ *= c;
        return a;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.poly_ == b.poly_;
    }

    std::string to_string() const;

private:
    int nx_;
    int ny_;
    MultiPoly poly_;
};

/// Product truncated at x- and y-degree maxdeg without forming higher terms.
BiPoly truncated_product(const BiPoly& a, const BiPoly& b, int maxdeg);

/// sum over |lambda| <= maxdeg of z_lambda(q,t)^{-1} p_lambda(x) p_lambda(y).
BiPoly k0_truncated(int nx, int ny, int maxdeg);
/// prod_{i,j} (t x_i y_j; q)_inf / (x_i y_j; q)_inf expanded factor by factor.
BiPoly k0_product_form(int nx, int ny, int maxdeg);

/// prod_{i+j<=m} (1 - t c x_i y_j) / prod_{i+j<=m+1} (1 - c x_i y_j).
BiPoly kernel_factor(int m, int nx, int ny, int maxdeg, const QtRational& c);
/// prod_{i<j<=m} (1 - t x_i y_j)/(1 - x_i y_j) prod_{i<=m} 1/(1 - x_i y_i).
BiPoly cauchy_factor(int m, int nx, int ny, int maxdeg);

/// t^{-C(m,2)} K_0 T^{(x)}_{omega_m}[kernel_factor(q^{-1})].
BiPoly km_truncated(int m, int nx, int ny, int maxdeg);
/// K_0 kernel_factor(q^{-1}) = t^{C(m,2)} Tbar^{(x)}_{omega_m} K_m.
BiPoly km_bar_truncated(int m, int nx, int ny, int maxdeg);
/// sum of b_Lambda P_Lambda(x) P_Lambda(y), b_Lambda = 1/norm_formula.
BiPoly km_expansion(int m, int nx, int ny, int maxdeg);
/// sum of q^{-|a|} t^{-Inv(a)} z_lambda(q,t)^{-1} p_Lambda(x;t) p_Lambda(y;t).
BiPoly km_powersum_expansion(int m, int nx, int ny, int maxdeg);

struct KernelCheck {
    std::string identity;
    bool holds = false;
    BiPoly lhs;
    BiPoly rhs;
};

KernelCheck hl_kernel_check(int m, int maxdeg);
KernelCheck cauchy_identity_check(int m, int maxdeg, int n = -1);
KernelCheck nonsym_cauchy_check(int m, int maxdeg);
/// The older non-symmetric Cauchy identity with the (j < i) products.
KernelCheck nonsym_cauchy_variant_check(int m, int maxdeg);
/// T_i^{(x)} Kbar_m = T_{m-i}^{(y)} Kbar_m for every 1 <= i <= m-1, plus the
/// Tbar_{omega_m} relation between K_m and Kbar_m.
std::vector<KernelCheck> kernel_hecke_symmetry_check(int m, int maxdeg, int n = -1);
/// Y_i^{(x)} K_m = Y_i^{(y)} K_m (i <= m) and D^{(x)} K_m = D^{(y)} K_m in n variables.
std::vector<KernelCheck> kernel_eigen_symmetry_check(int m, int n, int maxdeg);
/// K_m equals both dual-pair expansions, and the pairs are dual for <.,.>_m.
std::vector<KernelCheck> reproducing_kernel_check(int m, int maxdeg);

}  // namespace msym
