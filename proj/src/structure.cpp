#include "msym/structure.hpp"

#include "msym/hecke_ops.hpp"
#include "msym/macdonald.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace msym {

namespace {

using Matrix = std::vector<std::vector<QtRational>>;

struct Tables {
    std::vector<MPartition> labels;
    std::map<MPartition, std::size_t> index;
    bool have_pinv = false;
    Matrix pinv;  // rows: m-basis labels, columns: p-basis labels
    bool have_P = false;
    std::vector<std::pair<MPartition, MultiPoly>> P;
    std::vector<std::map<MPartition, QtRational>> P_m;  // m-coefficients of each P
};

using TableKey = std::tuple<int, int, int>;  // m, degree, N

std::mutex g_table_mutex;
std::map<TableKey, Tables> g_tables;

Tables& tables_for(int m, int d, int N) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto [it, inserted] = g_tables.try_emplace({m, d, N});
    if (inserted) {
        it->second.labels = enumerate_mpartitions(m, d);
        for (std::size_t i = 0; i < it->second.labels.size(); ++i) it->second.index[it->second.labels[i]] = i;
    }
    return it->second;
}

MPartition label_of(const Exponent& e, int m, int N) {
    MPartition p;
    p.a.assign(e.begin(), e.begin() + m);
    p.lambda = strip_zeros(sorted_desc(std::vector<int>(e.begin() + m, e.begin() + N)));
    return p;
}

bool tail_sorted(const Exponent& e, int m, int N) {
    for (int k = m; k + 1 < N; ++k)
        if (e[k] < e[k + 1]) return false;
    return true;
}

Exponent sorted_tail(Exponent e, int m, int N) {
    std::sort(e.begin() + m, e.begin() + N, std::greater<>());
    return e;
}

// Number of distinct rearrangements of the tail.
std::size_t orbit_size(const Exponent& e, int m, int N) {
    std::vector<int> tail(e.begin() + m, e.begin() + N);
    std::sort(tail.begin(), tail.end());
    std::size_t n = 0;
    do ++n;
    while (std::next_permutation(tail.begin(), tail.end()));
    return n;
}

// m-coefficients; throws when f is not symmetric in the tail variables.
std::map<MPartition, QtRational> m_coeffs(const MultiPoly& f, int m) {
    const int N = f.nvars();
    const std::string msg =
        "polynomial is not symmetric in x_" + std::to_string(m + 1) + "..x_" + std::to_string(N);
    std::map<MPartition, QtRational> out;
    std::size_t expected_terms = 0;
    for (const auto& [e, c] : f.terms()) {
        if (tail_sorted(e, m, N)) {
            out.emplace(label_of(e, m, N), c);
            expected_terms += orbit_size(e, m, N);
        } else if (!(f.coeff(sorted_tail(e, m, N)) == c)) {
            throw std::invalid_argument(msg);
        }
    }
    if (expected_terms != f.size()) throw std::invalid_argument(msg);
    return out;
}

void check_input(const MultiPoly& f, int m, int& degree) {
    if (m < 0 || m > f.nvars()) throw std::invalid_argument("expand_in_basis: m out of range");
    if (!f.is_homogeneous()) throw std::invalid_argument("expand_in_basis: polynomial is not homogeneous");
    degree = f.is_zero() ? 0 : f.total_degree();
    if (f.nvars() < faithful_n(m, degree))
        throw std::invalid_argument("expand_in_basis: N = " + std::to_string(f.nvars()) + " is below m + degree = " +
                                    std::to_string(faithful_n(m, degree)));
}

int pivot_weight(const QtRational& x) { return static_cast<int>(x.num().size() + x.den().size()); }

// Inverse by Gauss-Jordan with light pivots; throws if singular.
Matrix invert(Matrix a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<QtRational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = QtRational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        for (std::size_t r = col; r < n; ++r)
            if (!a[r][col].is_zero() && (best == n || pivot_weight(a[r][col]) < pivot_weight(a[best][col]))) best = r;
        if (best == n) throw std::logic_error("basis transition matrix is singular");
        std::swap(a[col], a[best]);
        std::swap(inv[col], inv[best]);
        const QtRational p = a[col][col].inverse();
        if (!p.is_one()) {
            for (auto& x : a[col]) x *= p;
            for (auto& x : inv[col]) x *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const QtRational f = a[r][col];
            for (std::size_t k = col; k < n; ++k)
                if (!a[col][k].is_zero()) a[r][k] -= f * a[col][k];
            for (std::size_t k = 0; k < n; ++k)
                if (!inv[col][k].is_zero()) inv[r][k] -= f * inv[col][k];
        }
    }
    return inv;
}

const Matrix& p_inverse(int m, int d, int N) {
    Tables& tb = tables_for(m, d, N);
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        if (tb.have_pinv) return tb.pinv;
    }
    const std::size_t n = tb.labels.size();
    Matrix M(n, std::vector<QtRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [lab, c] : m_coeffs(powersum_t(tb.labels[i], N), m)) M[i][tb.index.at(lab)] = c;
    // c M = v  <=>  c = v M^{-1}
    Matrix inv = invert(std::move(M));
    std::lock_guard<std::mutex> lock(g_table_mutex);
    if (!tb.have_pinv) {
        tb.pinv = std::move(inv);
        tb.have_pinv = true;
    }
    return tb.pinv;
}

const Tables& P_tables(int m, int d, int N) {
    Tables& tb = tables_for(m, d, N);
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        if (tb.have_P) return tb;
    }
    std::vector<std::pair<MPartition, MultiPoly>> P;
    std::vector<std::map<MPartition, QtRational>> Pm;
    for (const auto& lab : tb.labels) {
        MultiPoly f = msym_P(lab, N);
        Pm.push_back(m_coeffs(f, m));
        P.emplace_back(lab, std::move(f));
    }
    std::lock_guard<std::mutex> lock(g_table_mutex);
    if (!tb.have_P) {
        tb.P = std::move(P);
        tb.P_m = std::move(Pm);
        tb.have_P = true;
    }
    return tb;
}

void put(std::map<MPartition, QtRational>& out, const MPartition& p, QtRational c) {
    if (!c.is_zero()) out.emplace(p, std::move(c));
}

}  // namespace

std::string expansion_basis_name(ExpansionBasis b) {
    switch (b) {
        case ExpansionBasis::m_Lambda: return "m_Lambda";
        case ExpansionBasis::p_Lambda_t: return "p_Lambda_t";
        case ExpansionBasis::P_Lambda: return "P_Lambda";
    }
    return "?";
}

ExpansionBasis parse_expansion_basis(const std::string& s) {
    if (s == "m_Lambda" || s == "m") return ExpansionBasis::m_Lambda;
    if (s == "p_Lambda_t" || s == "p") return ExpansionBasis::p_Lambda_t;
    if (s == "P_Lambda" || s == "P") return ExpansionBasis::P_Lambda;
    throw std::invalid_argument("unknown basis: " + s);
}

QtRational Expansion::coeff(const MPartition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? QtRational() : it->second;
}

MultiPoly monomial_m(const MPartition& p, int N) {
    const int m = p.m();
    if (N < p.length()) throw std::invalid_argument("monomial_m: N < m + l(lambda)");
    (void)MultiPoly::monomial(N, p.gamma(N));  // degree guard
    std::vector<int> tail(N - m, 0);
    for (std::size_t i = 0; i < p.lambda.size() && p.lambda[i] > 0; ++i) tail[i] = p.lambda[i];
    std::sort(tail.begin(), tail.end());
    MultiPoly f(N);
    std::vector<int> e(N);
    std::copy(p.a.begin(), p.a.end(), e.begin());
    do {
        std::copy(tail.begin(), tail.end(), e.begin() + m);
        f.add_term(make_exponent(e), QtRational(1));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return f;
}

MultiPoly powersum(const Partition& lambda, int N) {
    MultiPoly f = MultiPoly::constant(N, 1);
    for (int part : lambda) {
        if (part <= 0) continue;
        MultiPoly pr(N);
        for (int i = 0; i < N; ++i) {
            Exponent e{};
            e[i] = static_cast<std::uint8_t>(part);
            pr.add_term(e, QtRational(1));
        }
        f = f * pr;
    }
    return f;
}

MultiPoly powersum_t(const MPartition& p, int N) {
    if (N < p.m()) throw std::invalid_argument("powersum_t: N < m");
    return hall_littlewood_H(p.a, N) * powersum(p.lambda, N);
}

MultiPoly basis_element(ExpansionBasis b, const MPartition& p, int N) {
    switch (b) {
        case ExpansionBasis::m_Lambda: return monomial_m(p, N);
        case ExpansionBasis::p_Lambda_t: return powersum_t(p, N);
        case ExpansionBasis::P_Lambda: return msym_P(p, N);
    }
    throw std::invalid_argument("unknown basis");
}

bool is_m_symmetric(const MultiPoly& f, int m) {
    try {
        m_coeffs(f, m);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

Expansion expand_in_basis(const MultiPoly& f, int m, ExpansionBasis b) {
    Expansion out;
    out.basis = b;
    out.m = m;
    check_input(f, m, out.degree);
    if (f.is_zero()) return out;
    const int N = f.nvars();
    const int d = out.degree;
    auto mc = m_coeffs(f, m);
    switch (b) {
        case ExpansionBasis::m_Lambda: out.coeffs = std::move(mc); break;
        case ExpansionBasis::p_Lambda_t: {
            const Matrix& inv = p_inverse(m, d, N);
            const Tables& tb = tables_for(m, d, N);
            for (std::size_t j = 0; j < tb.labels.size(); ++j) {
                std::vector<QtRational> parts;
                for (const auto& [lab, c] : mc) {
                    const QtRational& x = inv[tb.index.at(lab)][j];
                    if (!x.is_zero()) parts.push_back(c * x);
                }
                put(out.coeffs, tb.labels[j], sum(std::move(parts)));
            }
            break;
        }
        case ExpansionBasis::P_Lambda: {
            const Tables& tb = P_tables(m, d, N);
            // unitriangular in dominance; labels are a linear extension, larger first
            for (std::size_t j = 0; j < tb.labels.size(); ++j) {
                auto it = mc.find(tb.labels[j]);
                if (it == mc.end()) continue;
                const QtRational c = it->second;
                for (const auto& [lab, x] : tb.P_m[j]) {
                    auto [jt, inserted] = mc.try_emplace(lab, -(c * x));
                    if (!inserted) {
                        jt->second -= c * x;
                        if (jt->second.is_zero()) mc.erase(jt);
                    }
                }
                out.coeffs.emplace(tb.labels[j], c);
            }
            if (!mc.empty()) throw std::logic_error("P-expansion left a nonzero remainder");
            break;
        }
    }
    return out;
}

MultiPoly reconstruct(const Expansion& e, int N) {
    PolyBuilder out(N);
    for (const auto& [lab, c] : e.coeffs) out.add(basis_element(e.basis, lab, N), c);
    return out.build();
}

QtRational z_lambda_qt(const Partition& lambda) {
    std::map<int, int> counts;
    for (int x : lambda)
        if (x > 0) ++counts[x];
    mpz_class z = 1;
    QtRational r(1);
    for (const auto& [part, n] : counts) {
        for (int k = 1; k <= n; ++k) z *= part * k;
        r *= (one_minus(part, 0) / one_minus(0, part)).pow(n);
    }
    return r * QtRational(QtPoly(z));
}

QtRational powersum_norm(const MPartition& p) {
    return QtRational::monomial(1, size_of(p.a), inv(p.a)) * z_lambda_qt(p.lambda);
}

QtRational scalar_product_m(const MultiPoly& f, const MultiPoly& g, int m) {
    const int d = std::max(f.total_degree(), g.total_degree());
    std::vector<QtRational> parts;
    for (int k = 0; k <= d; ++k) {
        const MultiPoly fk = f.component(k);
        const MultiPoly gk = g.component(k);
        if (fk.is_zero() && gk.is_zero()) continue;
        const Expansion ef = expand_in_basis(fk, m, ExpansionBasis::p_Lambda_t);
        const Expansion eg = expand_in_basis(gk, m, ExpansionBasis::p_Lambda_t);
        for (const auto& [lab, c] : ef.coeffs) {
            auto it = eg.coeffs.find(lab);
            if (it != eg.coeffs.end()) parts.push_back(c * it->second * powersum_norm(lab));
        }
    }
    return sum(std::move(parts));
}

QtRational NormFactors::product() const {
    QtRational n(1), d(1);
    for (const auto& [i, j] : num) n *= one_minus(i, j);
    for (const auto& [i, j] : den) d *= one_minus(i, j);
    return n / d;
}

QtRational NormFactors::value() const { return QtRational::monomial(1, q_exp, t_exp) * product(); }

std::string NormFactors::to_string() const {
    auto factors = [](const std::vector<std::pair<int, int>>& fs) {
        std::string s;
        for (const auto& [i, j] : fs) s += (s.empty() ? "(" : "*(") + one_minus(i, j).to_string() + ")";
        return s.empty() ? std::string("1") : s;
    };
    std::string out;
    if (q_exp || t_exp) out = QtRational::monomial(1, q_exp, t_exp).to_string() + "*";
    out += factors(num);
    if (den.size() == 1) out += "/" + factors(den);
    else if (!den.empty()) out += "/(" + factors(den) + ")";
    return out;
}

NormFactors norm_factors(const MPartition& p) {
    const Diagram dg(p);
    NormFactors f;
    f.q_exp = size_of(p.a);
    f.t_exp = inv(p.a);
    for (const auto& s : dg.squares()) {
        f.num.emplace_back(dg.stat(s, Stat::arm_tilde) + 1, dg.stat(s, Stat::leg_tilde));
        f.den.emplace_back(dg.stat(s, Stat::arm), dg.stat(s, Stat::leg) + 1);
    }
    return f;
}

QtRational sesquilinear_norm_formula(const MPartition& p) { return norm_factors(p).product(); }

QtRational norm_formula(const MPartition& p) { return norm_factors(p).value(); }

Expansion inclusion_coeffs(const MPartition& p) {
    Expansion out;
    out.basis = ExpansionBasis::P_Lambda;
    out.m = p.m() + 1;
    out.degree = p.degree();
    const Diagram dl(p);
    std::vector<int> parts = strip_zeros(p.lambda);
    parts.push_back(0);
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    for (int b : parts) {
        MPartition omega{p.a, strip_zeros(p.lambda)};
        omega.a.push_back(b);
        if (b > 0) omega.lambda.erase(std::find(omega.lambda.begin(), omega.lambda.end(), b));
        const Diagram dw(omega);
        QtRational psi(1);
        for (const auto& s : dw.squares()) {
            if (s.col != b + 1 || dw.rows()[s.row - 1].circle != 0) continue;
            psi *= one_minus(dl.stat(s, Stat::arm) + 1, dl.stat(s, Stat::leg_tilde)) /
                   one_minus(dw.stat(s, Stat::arm) + 1, dw.stat(s, Stat::leg_tilde));
        }
        put(out.coeffs, omega, psi);
    }
    return out;
}

Restriction restriction(const MPartition& p) {
    const int m = p.m();
    if (m < 1) throw std::invalid_argument("restriction requires m >= 1");
    const int last = p.a.back();
    MPartition hat{Composition(p.a.begin(), p.a.end() - 1), strip_zeros(p.lambda)};
    hat.lambda.push_back(last);
    hat.lambda = strip_zeros(sorted_desc(hat.lambda));
    int smaller = 0;
    for (int i = 0; i + 1 < m; ++i)
        if (p.a[i] < last) ++smaller;
    return {hat, QtRational::monomial(1, last, smaller) * c_lambda(hat) / c_lambda(p)};
}

MultiPoly restrict_poly(const MultiPoly& f, int m) {
    const int N = f.nvars();
    if (m < 1 || m > N) throw std::invalid_argument("restrict_poly requires 1 <= m <= N");
    MultiPoly r(N - 1);
    for (const auto& [e, c] : f.terms()) {
        if (e[m - 1] != 0) continue;
        Exponent x{};
        for (int k = 0, j = 0; k < N; ++k)
            if (k != m - 1) x[j++] = e[k];
        r.add_term(x, c);
    }
    return r;
}

QtRational principal_specialization(const MPartition& p, int N) {
    const int m = p.m();
    if (N < p.length()) throw std::invalid_argument("principal_specialization: N < m + l(lambda)");
    const Diagram dg(p);
    QtRational r = QtRational::t_pow(p.n() - coinv(p.a)) * t_factorial(N - m) / t_factorial(N);
    for (const auto& s : dg.all_cells()) {
        const int a = s.is_circle ? 0 : dg.stat(s, Stat::arm);
        const int l = s.is_circle ? 0 : dg.stat(s, Stat::leg);
        r *= one_minus(s.col - 1, N - (s.row - 1)) / one_minus(a, l + 1);
    }
    return r;
}

QtRational e_specialization(const Composition& eta) {
    const int N = static_cast<int>(eta.size());
    const MPartition p{eta, {}};
    const Diagram dg(p);
    QtRational r = QtRational::t_pow(n_of(sorted_desc(eta)) + inv(eta));
    for (const auto& s : dg.squares()) {
        const int a = dg.stat(s, Stat::arm);
        r *= one_minus(a, N - (s.row - 1)) / one_minus(a, dg.stat(s, Stat::leg) + 1);
    }
    return r;
}

QtRational principal_value(const MultiPoly& f) {
    std::vector<QtRational> pt;
    for (int i = 0; i < f.nvars(); ++i) pt.push_back(QtRational::t_pow(i));
    return evaluate(f, pt);
}

std::vector<QtRational> evaluation_point(const MPartition& p, int N) {
    const Composition g = p.gamma(N);
    const auto r = row_function(g);
    std::vector<QtRational> pt;
    for (int i = 0; i < N; ++i) pt.push_back(QtRational::monomial(1, -g[i], r[i] - 1));
    return pt;
}

QtRational evaluation_u(const MPartition& p, const MultiPoly& f) {
    return evaluate(f, evaluation_point(p, f.nvars()));
}

MultiPoly sesquilinear_twist(const MultiPoly& g, int m) {
    const int N = g.nvars();
    if (m < 0 || m > N) throw std::invalid_argument("sesquilinear_twist: m out of range");
    MultiPoly h = apply_Tbar_word(g, longest_word(m));
    std::vector<int> target(N);
    std::iota(target.begin(), target.end(), 1);
    for (int i = 1; i <= m; ++i) target[i - 1] = m + 1 - i;
    h = relabel(h, N, target);
    std::vector<QtRational> scale(N, QtRational(1));
    for (int i = 0; i < m; ++i) scale[i] = QtRational::q();
    h = scale_vars(h, scale);
    return h.map_coeffs([](const QtRational& c) { return c.conj(); });
}

QtRational sesquilinear_product(const MultiPoly& f, const MultiPoly& g, int m) {
    return scalar_product_m(f, sesquilinear_twist(g, m), m) * QtRational::t_pow(-m * (m - 1) / 2);
}

std::vector<std::pair<MPartition, MultiPoly>> gram_schmidt_P(int m, int degree) {
    const int N = faithful_n(m, degree);
    const auto labels = enumerate_mpartitions(m, degree);
    const std::size_t n = labels.size();
    // Each vector is carried in both m- and p-coordinates; <.,.>_m is diagonal in p.
    std::vector<std::vector<QtRational>> mc(n, std::vector<QtRational>(n)), pc(n, std::vector<QtRational>(n));
    std::vector<QtRational> pn;
    for (const auto& lab : labels) pn.push_back(powersum_norm(lab));
    std::map<MPartition, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[labels[i]] = i;
    auto dot = [&](const std::vector<QtRational>& u, const std::vector<QtRational>& v) {
        std::vector<QtRational> parts;
        for (std::size_t k = 0; k < n; ++k)
            if (!u[k].is_zero() && !v[k].is_zero()) parts.push_back(u[k] * v[k] * pn[k]);
        return sum(std::move(parts));
    };
    std::vector<QtRational> norms(n);
    for (std::size_t ii = n; ii-- > 0;) {
        mc[ii][ii] = QtRational(1);
        const auto mp = expand_in_basis(monomial_m(labels[ii], N), m, ExpansionBasis::p_Lambda_t);
        for (const auto& [lab, c] : mp.coeffs) pc[ii][index.at(lab)] = c;
        const std::vector<QtRational> base = pc[ii];
        for (std::size_t j = ii + 1; j < n; ++j) {
            const QtRational coef = dot(base, pc[j]) / norms[j];
            if (coef.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (!mc[j][k].is_zero()) mc[ii][k] -= coef * mc[j][k];
                if (!pc[j][k].is_zero()) pc[ii][k] -= coef * pc[j][k];
            }
        }
        norms[ii] = dot(pc[ii], pc[ii]);
    }
    std::vector<std::pair<MPartition, MultiPoly>> out;
    for (std::size_t i = 0; i < n; ++i) {
        PolyBuilder b(N);
        for (std::size_t k = 0; k < n; ++k)
            if (!mc[i][k].is_zero()) b.add(monomial_m(labels[k], N), mc[i][k]);
        out.emplace_back(labels[i], b.build());
    }
    return out;
}

const std::vector<std::pair<MPartition, MultiPoly>>& msym_P_table(int m, int degree) {
    return P_tables(m, degree, faithful_n(m, degree)).P;
}

void clear_structure_cache() {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    g_tables.clear();
}

}  // namespace msym
