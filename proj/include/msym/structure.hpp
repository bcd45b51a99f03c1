#pragma once

/**
 * @file structure.hpp
 * @brief Bases of the ring of m-symmetric functions, the scalar product, norms,
 * inclusion/restriction and evaluations.
 *
 * Infinite-alphabet statements are realized in N = m + degree variables
 * (the faithful N), where every basis element of that degree is nonzero and
 * the bases stay linearly independent.
 */

#include "msym/combinatorics.hpp"
#include "msym/polyring.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace msym {

enum class ExpansionBasis { m_Lambda, p_Lambda_t, P_Lambda };

std::string expansion_basis_name(ExpansionBasis b);
ExpansionBasis parse_expansion_basis(const std::string& s);

struct Expansion {
    ExpansionBasis basis = ExpansionBasis::m_Lambda;
    std::map<MPartition, QtRational> coeffs;  // never stores zeros
    int m = 0;
    int degree = 0;

    QtRational coeff(const MPartition& p) const;
    friend bool operator==(const Expansion&, const Expansion&) = default;
};

inline int faithful_n(int m, int degree) { return m + degree; }

/// x^a m_lambda(x_{m+1}, ..., x_N).
MultiPoly monomial_m(const MPartition& p, int N);
/// p_lambda(x_1..x_N) in N variables.
MultiPoly powersum(const Partition& lambda, int N);
/// H_a(x;t) p_lambda(x).
MultiPoly powersum_t(const MPartition& p, int N);
MultiPoly basis_element(ExpansionBasis b, const MPartition& p, int N);

/// True when f is symmetric in x_{m+1}, ..., x_N.
bool is_m_symmetric(const MultiPoly& f, int m);

/// Exact coefficients of a homogeneous f in R_m. Throws std::invalid_argument
/// when f is not m-symmetric, not homogeneous, or N < m + degree.
Expansion expand_in_basis(const MultiPoly& f, int m, ExpansionBasis b);
/// Sum of coefficients times basis elements in N variables.
MultiPoly reconstruct(const Expansion& e, int N);

/// z_lambda(q,t) = z_lambda prod (1 - q^{lambda_i}) / (1 - t^{lambda_i}).
QtRational z_lambda_qt(const Partition& lambda);
/// <p_Lambda(x;t), p_Lambda(x;t)>_m.
QtRational powersum_norm(const MPartition& p);
/// <f, g>_m for f, g in R_m (possibly inhomogeneous).
QtRational scalar_product_m(const MultiPoly& f, const MultiPoly& g, int m);
/// The squared norm of P_Lambda left unexpanded: q^q_exp t^t_exp times
/// prod (1 - q^i t^j) over num divided by the same over den, one factor per
/// square in row order.
struct NormFactors {
    int q_exp = 0;
    int t_exp = 0;
    std::vector<std::pair<int, int>> num;
    std::vector<std::pair<int, int>> den;

    /// The product without the monomial.
    QtRational product() const;
    QtRational value() const;
    std::string to_string() const;
};

NormFactors norm_factors(const MPartition& p);
/// Closed-form squared norm of P_Lambda.
QtRational norm_formula(const MPartition& p);
/// c_Lambda^{-1} prod (1 - q^{a~+1} t^{l~}); the diagonal of the sesquilinear product.
QtRational sesquilinear_norm_formula(const MPartition& p);

/// psi_{Omega/Lambda} for every (m+1)-partition Omega from Lambda plus a circle.
Expansion inclusion_coeffs(const MPartition& p);

struct Restriction {
    MPartition hat;
    QtRational factor;
};

/// r(P_Lambda) = factor * P_hat for an m-partition Lambda with m >= 1.
Restriction restriction(const MPartition& p);
/// r: R_m -> R_{m-1}; sets x_m = 0 and renumbers x_{m+1}, ... down by one.
MultiPoly restrict_poly(const MultiPoly& f, int m);

/// P_Lambda(1, t, ..., t^{N-1}) from the product formula.
QtRational principal_specialization(const MPartition& p, int N);
/// E_eta(1, t, ..., t^{N-1}) from the product formula, N = eta.size().
QtRational e_specialization(const Composition& eta);
/// f(1, t, ..., t^{N-1}).
QtRational principal_value(const MultiPoly& f);
/// x_i -> q^{-gamma_i} t^{r_gamma(i) - 1} with gamma = gamma_Lambda padded to N.
std::vector<QtRational> evaluation_point(const MPartition& p, int N);
QtRational evaluation_u(const MPartition& p, const MultiPoly& f);

/// t^{-C(m,2)} <f, conj(tau_1..tau_m K_{omega_m} Tbar_{omega_m} g)>_m.
QtRational sesquilinear_product(const MultiPoly& f, const MultiPoly& g, int m);
/// The twisted second argument conj(tau_1..tau_m K_{omega_m} Tbar_{omega_m} g).
MultiPoly sesquilinear_twist(const MultiPoly& g, int m);

/// Gram-Schmidt on m_Lambda, increasing in dominance, against <.,.>_m, in the
/// faithful N. Returned in enumeration order (dominance-larger first).
std::vector<std::pair<MPartition, MultiPoly>> gram_schmidt_P(int m, int degree);

/// P_Lambda for every m-partition of the given degree at the faithful N, cached.
const std::vector<std::pair<MPartition, MultiPoly>>& msym_P_table(int m, int degree);

void clear_structure_cache();

}  // namespace msym
