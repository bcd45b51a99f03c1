#include "msym/verify.hpp"

#include "msym/hecke_ops.hpp"
#include "msym/macdonald.hpp"
#include "msym/structure.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace msym {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

int pick(int value, int fallback) { return value >= 0 ? value : fallback; }

class Recorder {
public:
    Recorder(std::string identity, std::string bounds) {
        r_.identity = std::move(identity);
        r_.bounds = std::move(bounds);
    }

    void record(bool ok, const std::function<std::string()>& witness) {
        ++r_.cases;
        if (ok) return;
        r_.passed = false;
        if (r_.witnesses.size() < kMaxWitnesses) r_.witnesses.push_back(witness());
    }

    /// Runs body as one timed case; an exception counts as a failure.
    void run(const std::function<bool()>& body, const std::function<std::string()>& witness) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        add_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        if (error.empty()) record(ok, witness);
        else record(false, [&] { return witness() + ": " + error; });
    }

    void add_seconds(double s) { r_.seconds += s; }
    CheckResult finish() { return std::move(r_); }

private:
    CheckResult r_;
};

double seconds_of(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string bounds_m_deg(int m_lo, int m_hi, int deg) {
    std::string s = m_lo == m_hi ? "m=" + std::to_string(m_lo) : "m<=" + std::to_string(m_hi);
    if (m_lo > 0 && m_lo != m_hi) s = std::to_string(m_lo) + "<=" + s;
    return s + ", deg<=" + std::to_string(deg);
}

std::pair<int, int> m_range(const VerifyOptions& o, int lo, int default_hi) {
    if (o.m >= 0) return {o.m, o.m};
    return {lo, pick(o.m_max, default_hi)};
}

std::vector<MPartition> labels_up_to(int m, int deg) {
    std::vector<MPartition> out;
    for (int d = 0; d <= deg; ++d)
        for (auto& lab : enumerate_mpartitions(m, d)) out.push_back(std::move(lab));
    return out;
}

std::string pair_witness(const MPartition& a, const MPartition& b) {
    return "Lambda=" + a.to_string() + " Omega=" + b.to_string();
}

std::string comp_string(const Composition& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_eigen(const VerifyOptions& o, const Comparator&) {
    const int Nmax = pick(o.N, 4), deg = pick(o.deg_max, 4);
    Recorder rec("E_eta: Y_i eigenvalues and Bruhat unitriangularity",
                 "1<=N<=" + std::to_string(Nmax) + ", |eta|<=" + std::to_string(deg));
    for (int N = 1; N <= Nmax; ++N)
        for (int d = 0; d <= deg; ++d)
            for (const auto& eta : compositions(d, N))
                rec.run(
                    [&] {
                        check_nonsym_E(eta, nonsym_E(eta));
                        return true;
                    },
                    [&] { return "eta=" + comp_string(eta); });
    return {rec.finish()};
}

std::vector<CheckResult> suite_orthogonality(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 0, 2);
    const int deg = pick(o.deg_max, 4);
    const std::string bounds = bounds_m_deg(m_lo, m_hi, deg);
    Recorder off("<P_Lambda, P_Omega>_m = 0 for Lambda != Omega", bounds);
    Recorder diag("<P_Lambda, P_Lambda>_m = norm_formula(Lambda)", bounds);
    for (int m = m_lo; m <= m_hi; ++m) {
        // P_Lambda and its p-expansion are shared by every pair
        std::vector<std::pair<MPartition, Expansion>> pexp;
        const double setup = seconds_of([&] {
            for (int d = 0; d <= deg; ++d)
                for (const auto& [lab, P] : msym_P_table(m, d))
                    pexp.emplace_back(lab, expand_in_basis(P, m, ExpansionBasis::p_Lambda_t));
        });
        off.add_seconds(setup);
        diag.add_seconds(setup);
        for (const auto& [la, ea] : pexp)
            for (const auto& [lb, eb] : pexp) {
                auto product = [&] {
                    std::vector<QtRational> parts;
                    for (const auto& [lab, c] : ea.coeffs) {
                        auto it = eb.coeffs.find(lab);
                        if (it != eb.coeffs.end()) parts.push_back(c * it->second * powersum_norm(lab));
                    }
                    return sum(std::move(parts));
                };
                if (la == lb) diag.run([&] { return cmp.equal(product(), norm_formula(la)); }, [&] { return "Lambda=" + la.to_string(); });
                else off.run([&] { return cmp.equal(product(), QtRational()); }, [&] { return pair_witness(la, lb); });
            }
    }
    return {off.finish(), diag.finish()};
}

std::vector<CheckResult> suite_inclusion(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 0, 2);
    const int deg = pick(o.deg_max, 4);
    const int samples = pick(o.samples, 100);
    Recorder inc("i(P_Lambda) = sum_Omega psi_{Omega/Lambda} P_Omega", bounds_m_deg(m_lo, m_hi, deg));
    for (int m = m_lo; m <= m_hi; ++m)
        for (const auto& lab : labels_up_to(m, deg))
            inc.run(
                [&] {
                    const int N = faithful_n(m + 1, lab.degree());
                    PolyBuilder rhs(N);
                    for (const auto& [om, psi] : inclusion_coeffs(lab).coeffs) rhs.add(msym_P(om, N), psi);
                    return cmp.equal(msym_P(lab, N), rhs.build());
                },
                [&] { return "Lambda=" + lab.to_string(); });

    Recorder adj("<i(f), g>_{m+1} = <f, r(g)>_m",
                 bounds_m_deg(m_lo, m_hi, deg) + ", " + std::to_string(samples) + " pairs, seed " +
                     std::to_string(o.seed));
    std::mt19937 rng(o.seed);
    const int span = m_hi - m_lo + 1;
    for (int k = 0; k < samples; ++k) {
        const int m = m_lo + k % span;
        const int d = deg > 0 ? 1 + (k / span) % deg : 0;
        const int N = faithful_n(m + 1, d);
        const MultiPoly f = random_msym(rng, m, d, N);
        const MultiPoly g = random_msym(rng, m + 1, d, N);
        adj.run([&] { return cmp.equal(scalar_product_m(f, g, m + 1), scalar_product_m(f, restrict_poly(g, m + 1), m)); },
                [&] { return "pair " + std::to_string(k) + " (m=" + std::to_string(m) + ", d=" + std::to_string(d) + ")"; });
    }
    return {inc.finish(), adj.finish()};
}

std::vector<CheckResult> suite_restriction(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 1, 2);
    const int deg = pick(o.deg_max, 4);
    Recorder r("r(P_Lambda) = factor * P_hat", bounds_m_deg(std::max(m_lo, 1), m_hi, deg));
    for (int m = std::max(m_lo, 1); m <= m_hi; ++m)
        for (const auto& lab : labels_up_to(m, deg))
            r.run(
                [&] {
                    const int N = faithful_n(m, lab.degree());
                    const Restriction res = restriction(lab);
                    return cmp.equal(restrict_poly(msym_P(lab, N), m), msym_P(res.hat, N - 1) * res.factor);
                },
                [&] { return "Lambda=" + lab.to_string(); });
    Recorder ri("sum_Omega psi_{Omega/Lambda} * restriction factor of Omega = 1",
                bounds_m_deg(m_lo > 0 ? m_lo - 1 : 0, m_hi - 1, deg));
    for (int m = m_lo > 0 ? m_lo - 1 : 0; m <= m_hi - 1; ++m)
        for (const auto& lab : labels_up_to(m, deg))
            ri.run(
                [&] {
                    QtRational total;
                    for (const auto& [om, psi] : inclusion_coeffs(lab).coeffs) {
                        const Restriction res = restriction(om);
                        if (!(res.hat == lab)) return false;
                        total += psi * res.factor;
                    }
                    return cmp.equal(total, QtRational(1));
                },
                [&] { return "Lambda=" + lab.to_string(); });
    return {r.finish(), ri.finish()};
}

std::vector<CheckResult> suite_specialization(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 0, 2);
    const int deg = pick(o.deg_max, 4);
    const std::string nb = o.N >= 0 ? "N=" + std::to_string(o.N) : "N=m+" + std::to_string(deg);
    Recorder r("P_Lambda(1, t, ..., t^{N-1}) = principal_specialization(Lambda, N)",
               bounds_m_deg(m_lo, m_hi, deg) + ", " + nb);
    for (int m = m_lo; m <= m_hi; ++m) {
        const int N = o.N >= 0 ? o.N : m + deg;
        for (const auto& lab : labels_up_to(m, deg))
            r.run([&] { return cmp.equal(principal_value(msym_P(lab, N)), principal_specialization(lab, N)); },
                  [&] { return "Lambda=" + lab.to_string(); });
    }
    return {r.finish()};
}

std::vector<CheckResult> suite_e_specialization(const VerifyOptions& o, const Comparator& cmp) {
    const int Nmax = pick(o.N, 3), deg = pick(o.deg_max, 3);
    Recorder r("E_eta(1, t, ..., t^{N-1}) = e_specialization(eta)",
               "1<=N<=" + std::to_string(Nmax) + ", |eta|<=" + std::to_string(deg));
    for (int N = 1; N <= Nmax; ++N)
        for (int d = 0; d <= deg; ++d)
            for (const auto& eta : compositions(d, N))
                r.run([&] { return cmp.equal(principal_value(nonsym_E(eta)), e_specialization(eta)); },
                      [&] { return "eta=" + comp_string(eta); });
    return {r.finish()};
}

std::vector<CheckResult> suite_evaluation_symmetry(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 0, 1);
    const int deg = pick(o.deg_max, 3);
    const std::string nb = o.N >= 0 ? "N=" + std::to_string(o.N) : "N=m+" + std::to_string(deg);
    Recorder r("u_Omega(P~_Lambda) = u_Lambda(P~_Omega)", bounds_m_deg(m_lo, m_hi, deg) + ", " + nb);
    for (int m = m_lo; m <= m_hi; ++m) {
        const int N = o.N >= 0 ? o.N : m + deg;
        std::vector<MPartition> labels;
        std::map<MPartition, MultiPoly> normalized;
        for (const auto& lab : labels_up_to(m, deg)) {
            if (lab.length() > N) continue;
            const MultiPoly P = msym_P(lab, N);
            labels.push_back(lab);
            normalized.emplace(lab, P * principal_value(P).inverse());
        }
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i; j < labels.size(); ++j) {
                const auto& la = labels[i];
                const auto& lb = labels[j];
                r.run([&] { return cmp.equal(evaluation_u(lb, normalized.at(la)), evaluation_u(la, normalized.at(lb))); },
                      [&] { return pair_witness(la, lb); });
            }
    }
    return {r.finish()};
}

std::vector<CheckResult> suite_inversion(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 0, 2);
    const int deg = pick(o.deg_max, 3);
    const std::string nb = o.N >= 0 ? "N=" + std::to_string(o.N) : "N=m+2";
    Recorder r("q^{|a|} t^{Inv(a)} (P_Lambda)^* = t^{C(m,2)} Tbar_{w_0} P_Lambda", bounds_m_deg(m_lo, m_hi, deg) + ", " + nb);
    for (int m = m_lo; m <= m_hi; ++m) {
        const int N = o.N >= 0 ? o.N : m + 2;
        for (const auto& lab : labels_up_to(m, deg))
            r.run(
                [&] {
                    const InversionCheck c = invert_qt(lab, N);
                    return cmp.equal(c.lhs, c.rhs);
                },
                [&] { return "Lambda=" + lab.to_string(); });
    }
    return {r.finish()};
}

std::vector<CheckResult> suite_gram_schmidt(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 0, 1);
    const int deg = pick(o.deg_max, 3);
    Recorder r("Gram-Schmidt on m_Lambda in dominance order = P_Lambda", bounds_m_deg(m_lo, m_hi, deg));
    for (int m = m_lo; m <= m_hi; ++m)
        for (int d = 0; d <= deg; ++d) {
            std::vector<std::pair<MPartition, MultiPoly>> gs, tab;
            r.add_seconds(seconds_of([&] {
                gs = gram_schmidt_P(m, d);
                tab = msym_P_table(m, d);
            }));
            if (gs.size() != tab.size()) {
                r.record(false, [&] { return "m=" + std::to_string(m) + " d=" + std::to_string(d) + ": size"; });
                continue;
            }
            for (std::size_t i = 0; i < gs.size(); ++i)
                r.record(gs[i].first == tab[i].first && cmp.equal(gs[i].second, tab[i].second),
                         [&] { return "Lambda=" + tab[i].first.to_string(); });
        }
    return {r.finish()};
}

void record_kernel(Recorder& r, const Comparator& cmp, const std::function<KernelCheck()>& make,
                   const std::string& where) {
    r.run(
        [&] {
            const KernelCheck c = make();
            return cmp.probabilistic() ? cmp.equal(c.lhs, c.rhs) : c.holds;
        },
        [&] { return where; });
}

std::vector<CheckResult> suite_cauchy(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 0, 2);
    const int deg = pick(o.deg_max, 2);
    const std::string bounds = bounds_m_deg(m_lo, m_hi, deg);
    Recorder sym("m-symmetric Cauchy identity", bounds);
    Recorder ns("non-symmetric Cauchy identity", bounds_m_deg(std::max(m_lo, 1), m_hi, deg));
    Recorder var("non-symmetric Cauchy identity, (j<i) variant", bounds_m_deg(std::max(m_lo, 1), m_hi, deg));
    for (int m = m_lo; m <= m_hi; ++m) {
        const std::string w = "m=" + std::to_string(m);
        record_kernel(sym, cmp, [&] { return cauchy_identity_check(m, deg); }, w);
        if (m < 1) continue;
        record_kernel(ns, cmp, [&] { return nonsym_cauchy_check(m, deg); }, w);
        record_kernel(var, cmp, [&] { return nonsym_cauchy_variant_check(m, deg); }, w);
    }
    return {sym.finish(), ns.finish(), var.finish()};
}

std::vector<CheckResult> suite_hall_littlewood(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 1, 2);
    const int deg = pick(o.deg_max, 3);
    Recorder r("q=0 kernel: sum H_a(x) H~_a(y) = Cauchy product", bounds_m_deg(std::max(m_lo, 1), m_hi, deg));
    for (int m = std::max(m_lo, 1); m <= m_hi; ++m)
        record_kernel(r, cmp, [&] { return hl_kernel_check(m, deg); }, "m=" + std::to_string(m));
    return {r.finish()};
}

std::vector<CheckResult> suite_reproducing(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 0, 1);
    const int deg = pick(o.deg_max, 3);
    std::map<std::string, Recorder> recs;
    std::vector<std::string> order;
    for (int m = m_lo; m <= m_hi; ++m) {
        std::vector<KernelCheck> checks;
        std::string error;
        const double secs = seconds_of([&] {
            try {
                checks = reproducing_kernel_check(m, deg);
            } catch (const std::exception& e) {
                error = e.what();
            }
        });
        if (!error.empty()) {
            const std::string id = "K_m reproducing kernel";
            if (!recs.count(id)) {
                recs.emplace(id, Recorder(id, bounds_m_deg(m_lo, m_hi, deg)));
                order.push_back(id);
            }
            recs.at(id).record(false, [&] { return "m=" + std::to_string(m) + ": " + error; });
            continue;
        }
        for (const auto& c : checks) {
            if (!recs.count(c.identity)) {
                recs.emplace(c.identity, Recorder(c.identity, bounds_m_deg(m_lo, m_hi, deg)));
                order.push_back(c.identity);
            }
            recs.at(c.identity).add_seconds(secs);
            recs.at(c.identity).record(cmp.probabilistic() ? cmp.equal(c.lhs, c.rhs) : c.holds,
                                       [&] { return "m=" + std::to_string(m); });
        }
    }
    std::vector<CheckResult> out;
    for (const auto& id : order) out.push_back(recs.at(id).finish());
    return out;
}

std::vector<CheckResult> suite_kernel_symmetry(const VerifyOptions& o, const Comparator& cmp) {
    const auto [m_lo, m_hi] = m_range(o, 1, 2);
    const int deg = pick(o.deg_max, 2);
    Recorder hecke("Hecke symmetry of the kernels", bounds_m_deg(std::max(m_lo, 1), m_hi, deg));
    Recorder eigen("Y_i and D act equally on both alphabets of K_m", bounds_m_deg(std::max(m_lo, 1), m_hi, deg));
    for (int m = std::max(m_lo, 1); m <= m_hi; ++m) {
        const std::string w = "m=" + std::to_string(m);
        auto each = [&](Recorder& r, const std::function<std::vector<KernelCheck>()>& make) {
            std::vector<KernelCheck> cs;
            std::string error;
            r.add_seconds(seconds_of([&] {
                try {
                    cs = make();
                } catch (const std::exception& e) {
                    error = e.what();
                }
            }));
            if (!error.empty()) {
                r.record(false, [&] { return w + ": " + error; });
                return;
            }
            for (const auto& c : cs)
                r.record(cmp.probabilistic() ? cmp.equal(c.lhs, c.rhs) : c.holds, [&] { return w + ": " + c.identity; });
        };
        each(hecke, [&] { return kernel_hecke_symmetry_check(m, deg); });
        each(eigen, [&] { return kernel_eigen_symmetry_check(m, m + 1, deg); });
    }
    return {hecke.finish(), eigen.finish()};
}

std::vector<CheckResult> suite_braid(const VerifyOptions& o, const Comparator& cmp) {
    const int Nmax = pick(o.N, 5), deg = pick(o.deg_max, 3), samples = pick(o.samples, 100);
    if (Nmax < 2) throw std::invalid_argument("braid suite needs N >= 2");
    const std::string bounds = "2<=N<=" + std::to_string(Nmax) + ", deg<=" + std::to_string(deg) + ", " +
                               std::to_string(samples) + " samples, seed " + std::to_string(o.seed);
    const QtRational t = QtRational::t();
    const QtRational tm1 = t - QtRational(1);
    Recorder quad("(T_i - t)(T_i + 1) = 0 and T_i Tbar_i = 1", bounds);
    Recorder braid("T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}, T_i T_j = T_j T_i for |i-j|>1", bounds);
    Recorder omega("omega T_i = T_{i-1} omega", bounds);
    Recorder ycomm("Y_i Y_j = Y_j Y_i", bounds);
    Recorder exch("T_i Y_i = Y_{i+1} T_i + (t-1) Y_i, T_i Y_{i+1} T_i = t Y_i, T_j Y_i = Y_i T_j", bounds);
    Recorder sym("t-symmetrizer factorizations L'S = SR = LS = sum of T_sigma", bounds);

    std::mt19937 rng(o.seed);
    for (int k = 0; k < samples; ++k) {
        const int N = 2 + k % (Nmax - 1);
        const MultiPoly f = random_poly(rng, N, deg, 4);
        auto w = [&](const std::string& extra) {
            return [=] { return "sample " + std::to_string(k) + " (N=" + std::to_string(N) + extra + ")"; };
        };
        auto at = [&](int i) { return w(", i=" + std::to_string(i)); };

        for (int i = 1; i < N; ++i)
            quad.run(
                [&] {
                    const MultiPoly Tf = apply_T(f, i);
                    const MultiPoly lhs = apply_T(Tf, i) + Tf - Tf * t - f * t;
                    return cmp.equal(lhs, MultiPoly(N)) && cmp.equal(apply_Tbar(Tf, i), f) &&
                           cmp.equal(apply_T(apply_Tbar(f, i), i), f);
                },
                at(i));

        for (int i = 1; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                braid.run(
                    [&] {
                        if (j == i + 1) return cmp.equal(apply_T_word(f, {i, j, i}), apply_T_word(f, {j, i, j}));
                        return cmp.equal(apply_T_word(f, {i, j}), apply_T_word(f, {j, i}));
                    },
                    w(", i=" + std::to_string(i) + ", j=" + std::to_string(j)));

        for (int i = 2; i < N; ++i)
            omega.run([&] { return cmp.equal(apply_omega(apply_T(f, i)), apply_T(apply_omega(f), i - 1)); }, at(i));

        std::vector<MultiPoly> Yf;
        for (int i = 1; i <= N; ++i) Yf.push_back(apply_Y(f, i));
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                ycomm.run([&] { return cmp.equal(apply_Y(Yf[j - 1], i), apply_Y(Yf[i - 1], j)); },
                          w(", i=" + std::to_string(i) + ", j=" + std::to_string(j)));

        for (int i = 1; i < N; ++i)
            exch.run(
                [&] {
                    const MultiPoly Tf = apply_T(f, i);
                    const bool a = cmp.equal(apply_T(Yf[i - 1], i), apply_Y(Tf, i + 1) + Yf[i - 1] * tm1);
                    const bool b = cmp.equal(apply_T(apply_Y(Tf, i + 1), i), Yf[i - 1] * t);
                    return a && b;
                },
                at(i));
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j < N; ++j) {
                if (j == i - 1 || j == i) continue;
                exch.run([&] { return cmp.equal(apply_T(Yf[i - 1], j), apply_Y(apply_T(f, j), i)); },
                         w(", i=" + std::to_string(i) + ", j=" + std::to_string(j)));
            }

        for (int m = 0; m < N; ++m)
            sym.run(
                [&] {
                    const OperatorContext ctx{N, m};
                    const MultiPoly s = symmetrize_t(ctx, f);
                    return cmp.equal(symmetrize_t(ctx, f, SymAlgo::right), s) &&
                           cmp.equal(symmetrize_t(ctx, f, SymAlgo::left), s) &&
                           cmp.equal(symmetrize_t(ctx, f, SymAlgo::naive), s);
                },
                w(", m=" + std::to_string(m)));
    }
    return {quad.finish(), braid.finish(), omega.finish(), ycomm.finish(), exch.finish(), sym.finish()};
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyOptions&, const Comparator&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"braid", suite_braid},
        {"cauchy", suite_cauchy},
        {"e-specialization", suite_e_specialization},
        {"eigen", suite_eigen},
        {"evaluation-symmetry", suite_evaluation_symmetry},
        {"gram-schmidt", suite_gram_schmidt},
        {"hall-littlewood", suite_hall_littlewood},
        {"inclusion", suite_inclusion},
        {"inversion", suite_inversion},
        {"kernel-symmetry", suite_kernel_symmetry},
        {"orthogonality", suite_orthogonality},
        {"reproducing", suite_reproducing},
        {"restriction", suite_restriction},
        {"specialization", suite_specialization},
    };
    return r;
}

}  // namespace

std::string Comparator::mode() const {
    if (!pt_) return "exact";
    return "probabilistic: coefficients compared at q=" + pt_->first.get_str() + ", t=" + pt_->second.get_str();
}

bool Comparator::equal(const QtRational& a, const QtRational& b) const {
    if (!pt_) return a == b;
    try {
        return a.eval(pt_->first, pt_->second) == b.eval(pt_->first, pt_->second);
    } catch (const ZeroDivisionError&) {
        return a == b;
    }
}

bool Comparator::equal(const MultiPoly& a, const MultiPoly& b) const {
    if (a.nvars() != b.nvars()) return false;
    if (!pt_) return a == b;
    const QtRational zero;
    for (const auto& [e, c] : a.terms()) {
        auto it = b.terms().find(e);
        if (!equal(c, it == b.terms().end() ? zero : it->second)) return false;
    }
    for (const auto& [e, c] : b.terms())
        if (!a.terms().count(e) && !equal(c, zero)) return false;
    return true;
}

bool Comparator::equal(const BiPoly& a, const BiPoly& b) const {
    return a.nx() == b.nx() && a.ny() == b.ny() && equal(a.poly(), b.poly());
}

std::string first_difference(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        return "variable counts differ: " + std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars());
    const MultiPoly d = a - b;
    if (d.is_zero()) return "no difference";
    const auto& [e, c] = *d.terms().begin();
    const auto ev = exponent_vector(e, a.nvars());
    return "exponent " + comp_string(ev) + ": lhs " + a.coefficient_of(ev).to_string() + ", rhs " +
           b.coefficient_of(ev).to_string();
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

bool suite_exists(const std::string& name) {
    for (const auto& [n, fn] : registry())
        if (n == name) return true;
    return false;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts) {
    for (const auto& [n, fn] : registry())
        if (n == name) return fn(opts, Comparator(opts.qt_point));
    throw std::invalid_argument("unknown suite '" + name + "'");
}

QtRational random_scalar(std::mt19937& rng) {
    int c = static_cast<int>(rng() % 6) - 3;
    if (c >= 0) ++c;
    const int qe = static_cast<int>(rng() % 2), te = static_cast<int>(rng() % 2);
    QtRational x = QtRational(c) * QtRational::monomial(1, qe, te);
    if (rng() % 4 == 0) x = x / one_minus(1, static_cast<int>(rng() % 2));
    return x;
}

MultiPoly random_poly(std::mt19937& rng, int n, int deg, int terms) {
    MultiPoly f(n);
    for (int k = 0; k < terms; ++k) {
        std::vector<int> ex(n, 0);
        int left = static_cast<int>(rng() % (deg + 1));
        while (left-- > 0) ++ex[rng() % n];
        f.add_term(make_exponent(ex), random_scalar(rng));
    }
    return f;
}

MultiPoly random_msym(std::mt19937& rng, int m, int d, int N) {
    const auto labels = enumerate_mpartitions(m, d);
    PolyBuilder b(N);
    bool any = false;
    for (const auto& lab : labels)
        if (rng() % 2) {
            b.add(monomial_m(lab, N), random_scalar(rng));
            any = true;
        }
    if (!any) b.add(monomial_m(labels[rng() % labels.size()], N), random_scalar(rng));
    return b.build();
}

}  // namespace msym
