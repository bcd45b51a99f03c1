#pragma once

/**
 * @file macdonald.hpp
 * @brief Non-symmetric and m-symmetric Macdonald polynomials.
 */

#include "msym/combinatorics.hpp"
#include "msym/hecke_ops.hpp"
#include "msym/polyring.hpp"

#include <string>
#include <variant>
#include <vector>

namespace msym {

enum class BasisKind { E, P, J, H };

std::string basis_name(BasisKind k);

struct LabeledPoly {
    std::variant<Composition, MPartition> label;
    MultiPoly poly;
    BasisKind kind;
};

struct EigenvalueVector {
    std::vector<QtRational> y_eigs;
    QtRational d_eig;
};

/// eta-bar_i = q^{eta_i} t^{1 - r_eta(i)}.
QtRational eta_bar(const Composition& eta, int i);

/// E_eta in N = eta.size() variables. Results are memoized; with check set
/// the Y-eigenvalue and triangularity conditions are verified first.
MultiPoly nonsym_E(const Composition& eta, bool check = false);
/// Throws std::logic_error with a diagnostic when E fails a defining property.
void check_nonsym_E(const Composition& eta, const MultiPoly& E);
void clear_E_cache();
std::size_t E_cache_size();

/// H_a in N >= a.size() variables (it only involves x_1..x_m).
MultiPoly hall_littlewood_H(const Composition& a, int N);

/// u_{Lambda,N}(t).
QtRational normalization_u(const MPartition& p, int N);
/// P_Lambda in N variables; zero when N < m + l(lambda).
MultiPoly msym_P(const MPartition& p, int N);
/// c_Lambda = prod over squares of (1 - q^{a} t^{l+1}).
QtRational c_lambda(const MPartition& p);
MultiPoly integral_J(const MPartition& p, int N);

EigenvalueVector eigenvalues(const MPartition& p);

struct BoxRaise {
    MPartition raised;
    QtRational factor;
};

/// Lambda^box and the factor in Psi_N J_Lambda = factor * J_{Lambda^box}.
BoxRaise psi_box_raise(const MPartition& p);
/// Psi_N = (1-t)(1 + T_{N-1} + ... + T_m...T_{N-1}) Phi_q with m >= 1.
MultiPoly apply_Psi(const MultiPoly& f, int m);

struct InversionCheck {
    MultiPoly lhs;
    MultiPoly rhs;
    bool holds;
};

/// Both sides of the q,t-inversion identity for P_Lambda in N variables.
InversionCheck invert_qt(const MPartition& p, int N);

LabeledPoly labeled_E(const Composition& eta);
LabeledPoly labeled_P(const MPartition& p, int N);
LabeledPoly labeled_J(const MPartition& p, int N);
LabeledPoly labeled_H(const Composition& a, int N);

}  // namespace msym
