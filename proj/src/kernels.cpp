#include "msym/kernels.hpp"

#include "msym/macdonald.hpp"
#include "msym/structure.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace msym {

namespace {

int block_degree(const Exponent& e, int from, int n) {
    int d = 0;
    for (int k = from; k < from + n; ++k) d += e[k];
    return d;
}

MultiPoly embed(const MultiPoly& f, int total, int offset) {
    std::vector<int> target(f.nvars());
    std::iota(target.begin(), target.end(), offset + 1);
    return relabel(f, total, target);
}

// sum_{n <= maxdeg} coeffs[n] (x_i y_j)^n
BiPoly pair_series(int nx, int ny, int i, int j, const std::vector<QtRational>& coeffs) {
    MultiPoly f(nx + ny);
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        Exponent e{};
        e[i - 1] = static_cast<std::uint8_t>(n);
        e[nx + j - 1] = static_cast<std::uint8_t>(n);
        f.add_term(e, coeffs[n]);
    }
    return BiPoly(nx, ny, std::move(f));
}

// 1 / (1 - c z)
std::vector<QtRational> geometric(const QtRational& c, int maxdeg) {
    std::vector<QtRational> v{QtRational(1)};
    for (int n = 1; n <= maxdeg; ++n) v.push_back(v.back() * c);
    return v;
}

// 1 - c z
std::vector<QtRational> linear(const QtRational& c) { return {QtRational(1), -c}; }

std::vector<QtRational> truncate_series(std::vector<QtRational> v, int maxdeg) {
    if (static_cast<int>(v.size()) > maxdeg + 1) v.resize(maxdeg + 1);
    return v;
}

BiPoly one(int nx, int ny) { return BiPoly(nx, ny, MultiPoly::constant(nx + ny, 1)); }

void check_sizes(int m, int nx, int ny, int maxdeg) {
    if (m < 0 || nx < m || ny < m) throw std::invalid_argument("kernel: need nx, ny >= m >= 0");
    if (maxdeg < 0) throw std::invalid_argument("kernel: maxdeg must be nonnegative");
    if (nx + ny > kMaxVars) throw std::invalid_argument("kernel: too many variables");
}

KernelCheck make_check(std::string name, BiPoly lhs, BiPoly rhs) {
    KernelCheck c;
    c.identity = std::move(name);
    c.holds = lhs == rhs;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

BiPoly scale_y(const BiPoly& k, int upto, const QtRational& c) {
    std::vector<QtRational> s(k.nx() + k.ny(), QtRational(1));
    for (int j = 0; j < upto; ++j) s[k.nx() + j] = c;
    return BiPoly(k.nx(), k.ny(), scale_vars(k.poly(), s));
}

QtRational nonsym_a_inverse(const Composition& eta) {
    const Diagram dg(MPartition{eta, {}});
    QtRational r(1);
    for (const auto& s : dg.squares()) {
        const int at = dg.stat(s, Stat::arm_tilde);
        r *= one_minus(at + 1, dg.stat(s, Stat::leg_tilde)) / one_minus(at + 1, dg.stat(s, Stat::leg) + 1);
    }
    return r;
}

BiPoly nonsym_cauchy_rhs(int m, int maxdeg) {
    BiPoly rhs(m, m);
    for (int k = 0; k <= maxdeg; ++k)
        for (const auto& eta : compositions(k, m)) {
            const MultiPoly E = nonsym_E(eta);
            rhs += BiPoly::tensor(E, E.map_coeffs([](const QtRational& c) { return c.conj(); })) *
                   nonsym_a_inverse(eta).inverse();
        }
    return rhs;
}

}  // namespace

BiPoly::BiPoly(int nx, int ny) : nx_(nx), ny_(ny), poly_(nx + ny) {}

BiPoly::BiPoly(int nx, int ny, MultiPoly poly) : nx_(nx), ny_(ny), poly_(std::move(poly)) {
    if (poly_.nvars() != nx + ny) throw std::invalid_argument("BiPoly: nvars mismatch");
}

BiPoly BiPoly::tensor(const MultiPoly& fx, const MultiPoly& gy) {
    const int nx = fx.nvars();
    const int ny = gy.nvars();
    return BiPoly(nx, ny, embed(fx, nx + ny, 0) * embed(gy, nx + ny, nx));
}

std::vector<int> BiPoly::x_exponent(const Exponent& e, int nx) { return exponent_vector(e, nx); }

std::vector<int> BiPoly::y_exponent(const Exponent& e, int nx, int ny) {
    return std::vector<int>(e.begin() + nx, e.begin() + nx + ny);
}

BiPoly BiPoly::truncated(int maxdeg) const {
    MultiPoly r(nx_ + ny_);
    for (const auto& [e, c] : poly_.terms())
        if (block_degree(e, 0, nx_) <= maxdeg && block_degree(e, nx_, ny_) <= maxdeg) r.add_term(e, c);
    return BiPoly(nx_, ny_, std::move(r));
}

BiPoly BiPoly::component(int dx, int dy) const {
    MultiPoly r(nx_ + ny_);
    for (const auto& [e, c] : poly_.terms())
        if (block_degree(e, 0, nx_) == dx && block_degree(e, nx_, ny_) == dy) r.add_term(e, c);
    return BiPoly(nx_, ny_, std::move(r));
}

BiPoly BiPoly::swapped() const {
    std::vector<int> target(nx_ + ny_);
    for (int k = 0; k < nx_; ++k) target[k] = ny_ + k + 1;
    for (int k = 0; k < ny_; ++k) target[nx_ + k] = k + 1;
    return BiPoly(ny_, nx_, relabel(poly_, nx_ + ny_, target));
}

BiPoly BiPoly::map_coeffs(const std::function<QtRational(const QtRational&)>& fn) const {
    return BiPoly(nx_, ny_, poly_.map_coeffs(fn));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (nx_ != o.nx_ || ny_ != o.ny_) throw std::invalid_argument("BiPoly: alphabet mismatch");
    poly_ += o.poly_;
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (nx_ != o.nx_ || ny_ != o.ny_) throw std::invalid_argument("BiPoly: alphabet mismatch");
    poly_ -= o.poly_;
    return *this;
}

std::string BiPoly::to_string() const {
    if (poly_.is_zero()) return "0";
    std::string s = poly_.to_string();
    // rename x_{nx+j} to y_j, highest index first so prefixes do not collide
    for (int j = ny_; j >= 1; --j) {
        const std::string from = "x" + std::to_string(nx_ + j);
        const std::string to = "y" + std::to_string(j);
        for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
            const std::size_t end = pos + from.size();
            if (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) continue;
            s.replace(pos, from.size(), to);
        }
    }
    return s;
}

BiPoly truncated_product(const BiPoly& a, const BiPoly& b, int maxdeg) {
    if (a.nx() != b.nx() || a.ny() != b.ny()) throw std::invalid_argument("BiPoly: alphabet mismatch");
    const int nx = a.nx();
    const int ny = a.ny();
    PolyBuilder out(nx + ny);
    for (const auto& [ea, ca] : a.poly().terms()) {
        const int ax = block_degree(ea, 0, nx);
        const int ay = block_degree(ea, nx, ny);
        if (ax > maxdeg || ay > maxdeg) continue;
        for (const auto& [eb, cb] : b.poly().terms()) {
            if (ax + block_degree(eb, 0, nx) > maxdeg || ay + block_degree(eb, nx, ny) > maxdeg) continue;
            Exponent e;
            for (int k = 0; k < kMaxVars; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
            out.add(e, ca * cb);
        }
    }
    return BiPoly(nx, ny, out.build());
}

BiPoly k0_truncated(int nx, int ny, int maxdeg) {
    check_sizes(0, nx, ny, maxdeg);
    BiPoly k(nx, ny);
    for (int d = 0; d <= maxdeg; ++d)
        for (const auto& lam : partitions(d))
            k += BiPoly::tensor(powersum(lam, nx), powersum(lam, ny)) * z_lambda_qt(lam).inverse();
    return k;
}

BiPoly k0_product_form(int nx, int ny, int maxdeg) {
    check_sizes(0, nx, ny, maxdeg);
    // (t z; q)_inf / (z; q)_inf = sum_n (t;q)_n / (q;q)_n z^n
    std::vector<QtRational> c{QtRational(1)};
    for (int n = 1; n <= maxdeg; ++n) c.push_back(c.back() * one_minus(n - 1, 1) / one_minus(n, 0));
    BiPoly k = one(nx, ny);
    for (int i = 1; i <= nx; ++i)
        for (int j = 1; j <= ny; ++j) k = truncated_product(k, pair_series(nx, ny, i, j, c), maxdeg);
    return k;
}

BiPoly kernel_factor(int m, int nx, int ny, int maxdeg, const QtRational& c) {
    check_sizes(m, nx, ny, maxdeg);
    BiPoly k = one(nx, ny);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; i + j <= m + 1; ++j) {
            k = truncated_product(k, pair_series(nx, ny, i, j, geometric(c, maxdeg)), maxdeg);
            if (i + j <= m)
                k = truncated_product(k, pair_series(nx, ny, i, j, truncate_series(linear(QtRational::t() * c), maxdeg)),
                                      maxdeg);
        }
    return k;
}

BiPoly cauchy_factor(int m, int nx, int ny, int maxdeg) {
    check_sizes(m, nx, ny, maxdeg);
    BiPoly k = one(nx, ny);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            k = truncated_product(k, pair_series(nx, ny, i, j, geometric(QtRational(1), maxdeg)), maxdeg);
            if (i < j)
                k = truncated_product(k, pair_series(nx, ny, i, j, truncate_series(linear(QtRational::t()), maxdeg)),
                                      maxdeg);
        }
    return k;
}

BiPoly km_bar_truncated(int m, int nx, int ny, int maxdeg) {
    return truncated_product(k0_truncated(nx, ny, maxdeg), kernel_factor(m, nx, ny, maxdeg, QtRational::q_pow(-1)),
                             maxdeg);
}

BiPoly km_truncated(int m, int nx, int ny, int maxdeg) {
    const BiPoly f = kernel_factor(m, nx, ny, maxdeg, QtRational::q_pow(-1));
    const BiPoly tf(nx, ny, apply_T_word(f.poly(), longest_word(m), f.xblock()));
    return truncated_product(k0_truncated(nx, ny, maxdeg), tf, maxdeg) * QtRational::t_pow(-m * (m - 1) / 2);
}

BiPoly km_expansion(int m, int nx, int ny, int maxdeg) {
    check_sizes(m, nx, ny, maxdeg);
    BiPoly k(nx, ny);
    for (int d = 0; d <= maxdeg; ++d)
        for (const auto& lab : enumerate_mpartitions(m, d)) {
            if (lab.length() > nx || lab.length() > ny) continue;
            k += BiPoly::tensor(msym_P(lab, nx), msym_P(lab, ny)) * norm_formula(lab).inverse();
        }
    return k;
}

BiPoly km_powersum_expansion(int m, int nx, int ny, int maxdeg) {
    check_sizes(m, nx, ny, maxdeg);
    BiPoly k(nx, ny);
    for (int d = 0; d <= maxdeg; ++d)
        for (const auto& lab : enumerate_mpartitions(m, d))
            k += BiPoly::tensor(powersum_t(lab, nx), powersum_t(lab, ny)) * powersum_norm(lab).inverse();
    return k;
}

KernelCheck hl_kernel_check(int m, int maxdeg) {
    const BiPoly f = kernel_factor(m, m, m, maxdeg, QtRational(1));
    const BiPoly lhs =
        BiPoly(m, m, apply_T_word(f.poly(), longest_word(m), f.xblock())) * QtRational::t_pow(-m * (m - 1) / 2);
    BiPoly rhs(m, m);
    for (int d = 0; d <= maxdeg; ++d)
        for (const auto& a : compositions(d, m)) {
            const MultiPoly H = hall_littlewood_H(a, m);
            rhs += BiPoly::tensor(H, H) * QtRational::t_pow(-inv(a));
        }
    return make_check("hall-littlewood kernel, m=" + std::to_string(m), lhs, rhs);
}

KernelCheck cauchy_identity_check(int m, int maxdeg, int n) {
    if (n < 0) n = m + maxdeg;
    const BiPoly k0 = scale_y(k0_truncated(n, n, maxdeg), m, QtRational::q());
    const BiPoly lhs = truncated_product(k0, cauchy_factor(m, n, n, maxdeg), maxdeg);
    BiPoly rhs(n, n);
    for (int d = 0; d <= maxdeg; ++d)
        for (const auto& lab : enumerate_mpartitions(m, d)) {
            if (lab.length() > n) continue;
            const MultiPoly P = msym_P(lab, n);
            rhs += BiPoly::tensor(P, P.map_coeffs([](const QtRational& c) { return c.conj(); })) *
                   sesquilinear_norm_formula(lab).inverse();
        }
    return make_check("cauchy identity, m=" + std::to_string(m), lhs, rhs);
}

KernelCheck nonsym_cauchy_check(int m, int maxdeg) {
    if (m < 1) throw std::invalid_argument("nonsym_cauchy_check requires m >= 1");
    const BiPoly k0 = scale_y(k0_truncated(m, m, maxdeg), m, QtRational::q());
    const BiPoly lhs = truncated_product(k0, cauchy_factor(m, m, m, maxdeg), maxdeg);
    return make_check("non-symmetric cauchy identity, m=" + std::to_string(m), lhs, nonsym_cauchy_rhs(m, maxdeg));
}

KernelCheck nonsym_cauchy_variant_check(int m, int maxdeg) {
    if (m < 1) throw std::invalid_argument("nonsym_cauchy_variant_check requires m >= 1");
    BiPoly lhs = k0_truncated(m, m, maxdeg);
    const QtRational t = QtRational::t();
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= i; ++j) {
            lhs = truncated_product(lhs, pair_series(m, m, i, j, geometric(t, maxdeg)), maxdeg);
            if (j < i)
                lhs = truncated_product(lhs, pair_series(m, m, i, j, truncate_series(linear(QtRational(1)), maxdeg)),
                                        maxdeg);
        }
    return make_check("non-symmetric cauchy identity (j<i variant), m=" + std::to_string(m), lhs,
                      nonsym_cauchy_rhs(m, maxdeg));
}

std::vector<KernelCheck> kernel_hecke_symmetry_check(int m, int maxdeg, int n) {
    if (n < 0) n = m;
    std::vector<KernelCheck> out;
    const BiPoly kbar = km_bar_truncated(m, n, n, maxdeg);
    const BiPoly km = km_truncated(m, n, n, maxdeg);
    out.push_back(make_check(
        "t^C(m,2) Tbar_omega K_m = Kbar_m",
        BiPoly(n, n, apply_Tbar_word(km.poly(), longest_word(m), km.xblock())) * QtRational::t_pow(m * (m - 1) / 2),
        kbar));
    for (int i = 1; i <= m - 1; ++i)
        out.push_back(make_check("T_" + std::to_string(i) + "(x) Kbar_m = T_" + std::to_string(m - i) + "(y) Kbar_m",
                                 BiPoly(n, n, apply_T(kbar.poly(), i, kbar.xblock())),
                                 BiPoly(n, n, apply_T(kbar.poly(), m - i, kbar.yblock()))));
    return out;
}

std::vector<KernelCheck> kernel_eigen_symmetry_check(int m, int n, int maxdeg) {
    std::vector<KernelCheck> out;
    const BiPoly k = km_truncated(m, n, n, maxdeg);
    for (int i = 1; i <= m; ++i)
        out.push_back(make_check("Y_" + std::to_string(i) + "(x) K_m = Y_" + std::to_string(i) + "(y) K_m",
                                 BiPoly(n, n, apply_Y(k.poly(), i, k.xblock())),
                                 BiPoly(n, n, apply_Y(k.poly(), i, k.yblock()))));
    if (m < n)
        out.push_back(make_check("D(x) K_m = D(y) K_m", BiPoly(n, n, apply_D({n, m, 0}, k.poly())),
                                 BiPoly(n, n, apply_D({n, m, n}, k.poly()))));
    return out;
}

std::vector<KernelCheck> reproducing_kernel_check(int m, int maxdeg) {
    const int n = m + maxdeg;
    std::vector<KernelCheck> out;
    const BiPoly k = km_truncated(m, n, n, maxdeg);
    out.push_back(make_check("K_m = sum b P(x) P(y)", k, km_expansion(m, n, n, maxdeg)));
    out.push_back(make_check("K_m = sum p(x;t) p*(y;t)", k, km_powersum_expansion(m, n, n, maxdeg)));
    out.push_back(make_check("K_m symmetric in x and y", k, k.swapped()));
    bool dual = true;
    for (int d = 0; d <= maxdeg; ++d) {
        const auto& tab = msym_P_table(m, d);
        for (const auto& [la, Pa] : tab)
            for (const auto& [lb, Pb] : tab) {
                const QtRational s = scalar_product_m(Pa, Pb, m) * norm_formula(lb).inverse();
                if (!(s == (la == lb ? QtRational(1) : QtRational()))) dual = false;
            }
    }
    KernelCheck c;
    c.identity = "<P_Lambda, b_Omega P_Omega>_m = delta";
    c.holds = dual;
    out.push_back(std::move(c));
    return out;
}

}  // namespace msym
