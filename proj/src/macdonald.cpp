#include "msym/macdonald.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace msym {

namespace {

std::mutex g_cache_mutex;
std::map<Composition, MultiPoly> g_E_cache;

std::string show(const Composition& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

MultiPoly build_E(const Composition& eta) {
    const int N = static_cast<int>(eta.size());
    if (std::all_of(eta.begin(), eta.end(), [](int v) { return v == 0; })) return MultiPoly::constant(N, 1);

    if (eta.back() > 0) {
        Composition nu(N);
        nu[0] = eta.back() - 1;
        std::copy(eta.begin(), eta.end() - 1, nu.begin() + 1);
        const int r1 = row_function(nu)[0];
        return apply_Phi(nonsym_E(nu)) * QtRational::t_pow(N - r1);
    }

    int i = N - 1;
    while (i >= 1 && !(eta[i - 1] > eta[i])) --i;
    if (i < 1) throw std::logic_error("build_E: no descent in " + show(eta));
    Composition nu = eta;
    std::swap(nu[i - 1], nu[i]);
    const QtRational delta = eta_bar(nu, i) / eta_bar(nu, i + 1);
    if (delta.is_one()) throw std::logic_error("build_E: degenerate delta at " + show(nu));
    const QtRational c = (QtRational::t() - QtRational(1)) / (QtRational(1) - delta.inverse());
    const MultiPoly E = nonsym_E(nu);
    PolyBuilder out(N);
    const QtRational tinv = QtRational::t_pow(-1);
    out.add(apply_T(E, i), tinv);
    out.add(E, -(c * tinv));
    return out.build();
}

}  // namespace

std::string basis_name(BasisKind k) {
    switch (k) {
        case BasisKind::E: return "E";
        case BasisKind::P: return "P";
        case BasisKind::J: return "J";
        case BasisKind::H: return "H";
    }
    return "?";
}

QtRational eta_bar(const Composition& eta, int i) {
    const auto r = row_function(eta);
    return QtRational::monomial(1, eta[i - 1], 1 - r[i - 1]);
}

MultiPoly nonsym_E(const Composition& eta, bool check) {
    if (eta.empty()) throw std::invalid_argument("nonsym_E: empty composition");
    for (int v : eta)
        if (v < 0) throw std::invalid_argument("nonsym_E: negative entry");
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_E_cache.find(eta);
        if (it != g_E_cache.end()) {
            if (!check) return it->second;
            MultiPoly E = it->second;
            check_nonsym_E(eta, E);
            return E;
        }
    }
    MultiPoly E = build_E(eta);
    if (check) check_nonsym_E(eta, E);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_E_cache.try_emplace(eta, std::move(E)).first->second;
}

void check_nonsym_E(const Composition& eta, const MultiPoly& E) {
    const int N = static_cast<int>(eta.size());
    if (!E.coefficient_of(eta).is_one()) throw std::logic_error("E" + show(eta) + " is not monic");
    for (const auto& [e, c] : E.terms()) {
        const auto nu = exponent_vector(e, N);
        if (nu != eta && !bruhat_less(nu, eta))
            throw std::logic_error("E" + show(eta) + " has a term outside the Bruhat order: " + show(nu));
    }
    for (int i = 1; i <= N; ++i)
        if (!(apply_Y(E, i) == E * eta_bar(eta, i)))
            throw std::logic_error("E" + show(eta) + " fails the eigenvalue check for Y_" + std::to_string(i));
}

void clear_E_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_E_cache.clear();
}

std::size_t E_cache_size() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_E_cache.size();
}

MultiPoly hall_littlewood_H(const Composition& a, int N) {
    const int m = static_cast<int>(a.size());
    if (N < m) throw std::invalid_argument("hall_littlewood_H: N < m");
    std::vector<int> target(std::max(m, 1));
    std::iota(target.begin(), target.end(), 1);
    if (m == 0) return MultiPoly::constant(N, 1);
    int i = 1;
    while (i < m && a[i - 1] >= a[i]) ++i;
    if (i == m) return relabel(MultiPoly::monomial(m, a), N, target);
    Composition b = a;
    std::swap(b[i - 1], b[i]);
    return relabel(apply_T(hall_littlewood_H(b, m), i), N, target);
}

QtRational normalization_u(const MPartition& p, int N) {
    const int m = p.m();
    std::map<int, int> counts;
    for (int k = 1; k <= N - m; ++k) ++counts[k <= static_cast<int>(p.lambda.size()) ? p.lambda[k - 1] : 0];
    QtRational u = QtRational::t_pow((N - m) * (N - m - 1) / 2);
    for (const auto& [part, n] : counts) u *= t_factorial(n, true);
    return u;
}

MultiPoly msym_P(const MPartition& p, int N) {
    if (N < p.m()) throw std::invalid_argument("msym_P: N < m");
    if (N < p.length()) return MultiPoly(N);
    if (N == 0) return MultiPoly::constant(0, 1);
    const MultiPoly E = nonsym_E(p.eta(N));
    MultiPoly P = symmetrize_t({N, p.m()}, E) * normalization_u(p, N).inverse();
    if (!P.coefficient_of(p.gamma(N)).is_one())
        throw std::logic_error("P" + p.to_string() + " is not monic on its leading monomial");
    return P;
}

QtRational c_lambda(const MPartition& p) {
    const Diagram d(p);
    QtRational c(1);
    for (const auto& s : d.squares()) c *= one_minus(d.stat(s, Stat::arm), d.stat(s, Stat::leg) + 1);
    return c;
}

MultiPoly integral_J(const MPartition& p, int N) { return msym_P(p, N) * c_lambda(p); }

EigenvalueVector eigenvalues(const MPartition& p) {
    EigenvalueVector ev;
    const Composition g = p.gamma(p.length());
    const auto r = row_function(g);
    for (int i = 0; i < p.m(); ++i) ev.y_eigs.push_back(QtRational::monomial(1, p.a[i], 1 - r[i]));
    std::vector<QtRational> parts;
    for (int i = p.m() + 1; i <= p.length(); ++i) {
        parts.push_back(QtRational::monomial(1, g[i - 1], 1 - r[i - 1]));
        parts.push_back(-QtRational::t_pow(1 - i));
    }
    ev.d_eig = sum(parts);
    return ev;
}

BoxRaise psi_box_raise(const MPartition& p) {
    if (p.m() < 1) throw std::invalid_argument("psi_box_raise requires m >= 1");
    MPartition raised{Composition(p.a.begin() + 1, p.a.end()), p.lambda};
    raised.lambda.push_back(p.a[0] + 1);
    std::sort(raised.lambda.begin(), raised.lambda.end(), std::greater<>());
    int count = 0;
    for (int j = 1; j < p.m(); ++j)
        if (p.a[j] <= p.a[0]) ++count;
    return {raised, QtRational::t_pow(-count)};
}

MultiPoly apply_Psi(const MultiPoly& f, int m) {
    const int N = f.nvars();
    if (m < 1 || m > N) throw std::invalid_argument("apply_Psi requires 1 <= m <= N");
    const MultiPoly g = apply_Phi(f);
    PolyBuilder out(N);
    out.add(g);
    MultiPoly h = g;
    for (int k = N - 1; k >= m; --k) {
        h = apply_T(h, k);
        out.add(h);
    }
    return out.build() * one_minus(0, 1);
}

InversionCheck invert_qt(const MPartition& p, int N) {
    const int m = p.m();
    const MultiPoly P = msym_P(p, N);
    std::vector<int> target(N);
    std::iota(target.begin(), target.end(), 1);
    for (int i = 1; i <= m; ++i) target[i - 1] = m + 1 - i;
    std::vector<QtRational> scale(N, QtRational(1));
    for (int i = 0; i < m; ++i) scale[i] = QtRational::q_pow(-1);
    MultiPoly lhs = relabel(scale_vars(P.map_coeffs([](const QtRational& c) { return c.conj(); }), scale), N, target);
    lhs *= QtRational::monomial(1, size_of(p.a), inv(p.a));
    MultiPoly rhs = apply_Tbar_word(P, longest_word(m)) * QtRational::t_pow(m * (m - 1) / 2);
    const bool holds = lhs == rhs;
    return {std::move(lhs), std::move(rhs), holds};
}

LabeledPoly labeled_E(const Composition& eta) { return {eta, nonsym_E(eta), BasisKind::E}; }
LabeledPoly labeled_P(const MPartition& p, int N) { return {p, msym_P(p, N), BasisKind::P}; }
LabeledPoly labeled_J(const MPartition& p, int N) { return {p, integral_J(p, N), BasisKind::J}; }
LabeledPoly labeled_H(const Composition& a, int N) { return {a, hall_littlewood_H(a, N), BasisKind::H}; }

}  // namespace msym
