// msym: command-line front end for expansions, coefficient tables and
// verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "msym/kernels.hpp"
#include "msym/macdonald.hpp"
#include "msym/serialize.hpp"
#include "msym/structure.hpp"
#include "msym/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace msym;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Common {
    std::string format = "text";
    bool check = false;
    std::vector<std::string> qt_point;
};

struct LabelArgs {
    int m = -1;
    std::optional<std::string> a;
    std::optional<std::string> lambda;
    std::optional<std::string> label;
    int N = -1;
};

std::vector<int> parse_list(const std::string& flag, const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError(flag + ": '" + item + "' is not an integer");
        }
        if (used != item.size()) throw UsageError(flag + ": '" + item + "' is not an integer");
        if (v < 0) throw UsageError(flag + ": entries must be nonnegative");
        out.push_back(v);
    }
    if (!text.empty() && text.back() == ',') throw UsageError(flag + ": trailing comma");
    return out;
}

MPartition label_from(const LabelArgs& la) {
    MPartition p;
    if (la.label) {
        if (la.a || la.lambda) throw UsageError("--label cannot be combined with --a or --lambda");
        try {
            p = MPartition::parse(*la.label);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--label: ") + e.what());
        }
    } else {
        if (la.a) p.a = parse_list("--a", *la.a);
        else if (la.m >= 0) p.a.assign(la.m, 0);
        else throw UsageError("give --m, --a or --label");
        if (la.lambda) p.lambda = parse_list("--lambda", *la.lambda);
        for (std::size_t i = 1; i < p.lambda.size(); ++i)
            if (p.lambda[i] > p.lambda[i - 1]) throw UsageError("--lambda must be weakly decreasing");
        p.lambda = strip_zeros(p.lambda);
    }
    if (la.m >= 0 && la.m != p.m())
        throw UsageError("--m " + std::to_string(la.m) + " does not match the " + std::to_string(p.m()) +
                         " entries of a");
    return p;
}

Json label_params(const MPartition& p) {
    Json j;
    j["m"] = p.m();
    j["a"] = p.a;
    j["lambda"] = p.lambda;
    return j;
}

std::optional<std::pair<mpq_class, mpq_class>> qt_point_from(const Common& c) {
    if (c.qt_point.empty()) return std::nullopt;
    if (c.qt_point.size() != 2) throw UsageError("--qt-point takes two rationals");
    try {
        mpq_class q0(c.qt_point[0]), t0(c.qt_point[1]);
        q0.canonicalize();
        t0.canonicalize();
        return std::make_pair(q0, t0);
    } catch (const std::exception&) {
        throw UsageError("--qt-point: expected rationals such as 3/7");
    }
}

std::string basis_symbol(ExpansionBasis b) {
    return b == ExpansionBasis::m_Lambda ? "m" : b == ExpansionBasis::p_Lambda_t ? "p" : "P";
}

std::string expansion_text(const Expansion& e) {
    const std::string sym = basis_symbol(e.basis);
    if (e.coeffs.empty()) return "0";
    std::string out;
    for (const auto& [lab, c] : e.coeffs) {
        std::string term;
        if (c.is_one()) term = sym;
        else if ((-c).is_one()) term = "-" + sym;
        else term = "(" + c.to_string() + ")*" + sym;
        out += (out.empty() ? "" : " + ") + term + lab.to_string();
    }
    return out;
}

/// Output of one command: text lines and the JSON result.
struct Outcome {
    Json params = Json::object();
    Json result = Json::object();
    std::vector<std::string> lines;
    bool checked = false;
    bool check_ok = true;
    std::string check_mode;
    std::string witness;
};

void run_check(Outcome& out, const Common& common, const std::function<std::pair<MultiPoly, MultiPoly>()>& sides) {
    if (!common.check) return;
    const Comparator cmp(qt_point_from(common));
    const auto [lhs, rhs] = sides();
    out.checked = true;
    out.check_mode = cmp.mode();
    out.check_ok = cmp.equal(lhs, rhs);
    if (!out.check_ok) out.witness = first_difference(lhs, rhs);
}

void run_scalar_check(Outcome& out, const Common& common, const QtRational& formula,
                      const std::function<QtRational()>& recompute) {
    if (!common.check) return;
    const Comparator cmp(qt_point_from(common));
    const QtRational direct = recompute();
    out.checked = true;
    out.check_mode = cmp.mode();
    out.check_ok = cmp.equal(formula, direct);
    if (!out.check_ok) out.witness = "formula " + formula.to_string() + ", direct " + direct.to_string();
}

int emit(const std::string& command, const Common& common, const Outcome& out) {
    if (common.format == "json") {
        Json j;
        j["command"] = command;
        j["params"] = out.params;
        j["result"] = out.result;
        if (out.checked) {
            Json c;
            c["status"] = out.check_ok ? "pass" : "fail";
            c["mode"] = out.check_mode;
            if (!out.check_ok) c["witness"] = out.witness;
            j["check"] = c;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& l : out.lines) std::cout << l << "\n";
        if (out.checked) {
            std::cout << "check: " << (out.check_ok ? "pass" : "fail") << " (" << out.check_mode << ")\n";
            if (!out.check_ok) std::cout << "counterexample: " << out.witness << "\n";
        }
    }
    return out.check_ok ? kOk : kFailed;
}

int faithful_or(int N, const MPartition& p) { return N >= 0 ? N : faithful_n(p.m(), p.degree()); }

// ---------------------------------------------------------------------------

Outcome cmd_expand_e(const std::string& eta_text, int N) {
    const Composition eta = parse_list("--eta", eta_text);
    if (eta.empty()) throw UsageError("--eta must have at least one entry");
    if (N >= 0 && N != static_cast<int>(eta.size()))
        throw UsageError("--N " + std::to_string(N) + " does not match the length of eta");
    const MultiPoly E = nonsym_E(eta);
    Outcome out;
    out.params["eta"] = eta;
    out.params["N"] = eta.size();
    out.result["text"] = E.to_string();
    out.result["polynomial"] = to_json(E);
    out.lines.push_back(E.to_string());
    return out;
}

Outcome cmd_expand_p(const MPartition& p, int N, ExpansionBasis basis, const Common& common) {
    N = faithful_or(N, p);
    if (N < 0) throw UsageError("--N must be nonnegative");
    const MultiPoly P = msym_P(p, N);
    const int Nf = faithful_n(p.m(), p.degree());
    const MultiPoly Pf = N >= Nf ? P : msym_P(p, Nf);
    const Expansion e = expand_in_basis(Pf, p.m(), basis);
    Outcome out;
    out.params = label_params(p);
    out.params["N"] = N;
    out.params["basis"] = expansion_basis_name(basis);
    out.result["text"] = P.to_string();
    out.result["polynomial"] = to_json(P);
    out.result["expansion"] = to_json(e);
    out.lines.push_back(P.to_string());
    out.lines.push_back(basis_symbol(basis) + "-expansion: " + expansion_text(e));
    run_check(out, common, [&] { return std::make_pair(reconstruct(e, Pf.nvars()), Pf); });
    return out;
}

Outcome cmd_norm(const MPartition& p, const Common& common) {
    const NormFactors f = norm_factors(p);
    const QtRational n = f.value();
    Outcome out;
    out.params = label_params(p);
    out.result["norm"] = n.to_string();
    out.result["factored"] = f.to_string();
    out.lines.push_back(f.to_string());
    out.lines.push_back("= " + n.to_string());
    run_scalar_check(out, common, n, [&] {
        const MultiPoly P = msym_P(p, faithful_n(p.m(), p.degree()));
        return scalar_product_m(P, P, p.m());
    });
    return out;
}

Outcome cmd_inclusion(const MPartition& p, const Common& common) {
    const Expansion e = inclusion_coeffs(p);
    Outcome out;
    out.params = label_params(p);
    out.result = to_json(e);
    for (const auto& [om, c] : e.coeffs) out.lines.push_back(om.to_string() + ": " + c.to_string());
    run_check(out, common, [&] {
        const int N = faithful_n(p.m() + 1, p.degree());
        PolyBuilder rhs(N);
        for (const auto& [om, psi] : e.coeffs) rhs.add(msym_P(om, N), psi);
        return std::make_pair(msym_P(p, N), rhs.build());
    });
    return out;
}

Outcome cmd_restrict(const MPartition& p, const Common& common) {
    if (p.m() < 1) throw UsageError("restrict needs m >= 1");
    const Restriction r = restriction(p);
    Outcome out;
    out.params = label_params(p);
    out.result["label"] = to_json(r.hat);
    out.result["factor"] = r.factor.to_string();
    out.lines.push_back("label: " + r.hat.to_string());
    out.lines.push_back("factor: " + r.factor.to_string());
    run_check(out, common, [&] {
        const int N = faithful_n(p.m(), p.degree());
        return std::make_pair(restrict_poly(msym_P(p, N), p.m()), msym_P(r.hat, N - 1) * r.factor);
    });
    return out;
}

Outcome cmd_eval_label(const MPartition& p, int N, const Common& common) {
    if (N < 0) throw UsageError("eval needs --N");
    const QtRational v = principal_specialization(p, N);
    Outcome out;
    out.params = label_params(p);
    out.params["N"] = N;
    out.result["value"] = v.to_string();
    out.lines.push_back(v.to_string());
    run_scalar_check(out, common, v, [&] { return principal_value(msym_P(p, N)); });
    return out;
}

Outcome cmd_eval_eta(const std::string& eta_text, int N, const Common& common) {
    const Composition eta = parse_list("--eta", eta_text);
    if (eta.empty()) throw UsageError("--eta must have at least one entry");
    if (N >= 0 && N != static_cast<int>(eta.size()))
        throw UsageError("--N " + std::to_string(N) + " does not match the length of eta");
    const QtRational v = e_specialization(eta);
    Outcome out;
    out.params["eta"] = eta;
    out.params["N"] = eta.size();
    out.result["value"] = v.to_string();
    out.lines.push_back(v.to_string());
    run_scalar_check(out, common, v, [&] { return principal_value(nonsym_E(eta)); });
    return out;
}

Outcome cmd_kernel(int m, int maxdeg, int nx, int ny, const std::string& form, const Common& common) {
    if (m < 0) throw UsageError("kernel needs --m >= 0");
    if (maxdeg < 0) throw UsageError("--deg-max must be nonnegative");
    if (nx < 0) nx = m + maxdeg;
    if (ny < 0) ny = nx;
    if (nx < m || ny < m) throw UsageError("--nx and --ny must be at least m");
    BiPoly k;
    if (form == "km") k = km_truncated(m, nx, ny, maxdeg);
    else if (form == "kbar") k = km_bar_truncated(m, nx, ny, maxdeg);
    else if (form == "expansion") k = km_expansion(m, nx, ny, maxdeg);
    else if (form == "k0") k = k0_truncated(nx, ny, maxdeg);
    else throw UsageError("--form must be km, kbar, expansion or k0");
    Outcome out;
    out.params["m"] = m;
    out.params["deg_max"] = maxdeg;
    out.params["nx"] = nx;
    out.params["ny"] = ny;
    out.params["form"] = form;
    out.result["text"] = k.to_string();
    out.result["kernel"] = to_json(k);
    out.lines.push_back(k.to_string());
    if (common.check) {
        const Comparator cmp(qt_point_from(common));
        const BiPoly a = km_truncated(m, nx, ny, maxdeg);
        const BiPoly b = km_expansion(m, nx, ny, maxdeg);
        out.checked = true;
        out.check_mode = cmp.mode() + "; K_m = sum b P(x) P(y)";
        out.check_ok = cmp.equal(a, b);
        if (!out.check_ok) out.witness = first_difference(a.poly(), b.poly());
    }
    return out;
}

int cmd_verify(const std::string& suite, const VerifyOptions& vo, const Common& common, bool timing) {
    if (!suite_exists(suite)) {
        std::string names;
        for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
        throw UsageError("unknown suite '" + suite + "'; available: " + names);
    }
    const std::vector<CheckResult> results = run_suite(suite, vo);
    const Comparator cmp(vo.qt_point);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;

    if (common.format == "json") {
        Json j;
        j["command"] = "verify";
        Json params;
        params["suite"] = suite;
        if (vo.m >= 0) params["m"] = vo.m;
        if (vo.m_max >= 0) params["m_max"] = vo.m_max;
        if (vo.deg_max >= 0) params["deg_max"] = vo.deg_max;
        if (vo.N >= 0) params["N"] = vo.N;
        if (vo.samples >= 0) params["samples"] = vo.samples;
        params["seed"] = vo.seed;
        params["mode"] = cmp.mode();
        j["params"] = params;
        Json report = Json::array();
        for (const auto& r : results) {
            Json e;
            e["identity"] = r.identity;
            e["bounds"] = r.bounds;
            e["status"] = r.passed ? "pass" : "fail";
            e["cases"] = r.cases;
            if (timing) e["seconds"] = r.seconds;
            if (!r.witnesses.empty()) e["witnesses"] = r.witnesses;
            report.push_back(e);
        }
        j["report"] = report;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "suite " << suite << " (" << cmp.mode() << ")\n";
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.identity << " [" << r.bounds << "] cases=" << r.cases;
            if (timing) {
                char buf[32];
                std::snprintf(buf, sizeof buf, " %.3fs", r.seconds);
                std::cout << buf;
            }
            std::cout << "\n";
            for (const auto& w : r.witnesses) std::cout << "  witness: " << w << "\n";
        }
        std::cout << (all ? "all passed" : "FAILED") << "\n";
    }
    return all ? kOk : kFailed;
}

void add_label_flags(CLI::App* sub, LabelArgs& la) {
    sub->add_option("--m", la.m, "number of non-symmetric entries");
    sub->add_option("--a", la.a, "comma-separated composition a; empty for m = 0");
    sub->add_option("--lambda", la.lambda, "comma-separated partition lambda; empty for none");
    sub->add_option("--label", la.label, "label as (a;lambda), e.g. (1,0;2,1)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-symmetric Macdonald polynomials: expansions, tables and verification sweeps"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--check", common.check, "recompute by the defining construction and compare");
    app.add_option("--qt-point", common.qt_point, "compare values at q = q0, t = t0 (probabilistic)")
        ->expected(2)
        ->type_name("Q0 T0");

    std::string eta_text;
    int N = -1;
    auto* expand_e = app.add_subcommand("expand-e", "non-symmetric Macdonald polynomial E_eta");
    expand_e->add_option("--eta", eta_text, "comma-separated composition")->required();
    expand_e->add_option("--N", N, "number of variables (the length of eta)");

    LabelArgs la;
    std::string basis_text = "m";
    auto* expand_p = app.add_subcommand("expand-p", "m-symmetric Macdonald polynomial P_Lambda and its expansion");
    add_label_flags(expand_p, la);
    expand_p->add_option("--N", la.N, "number of variables (default m + degree)");
    expand_p->add_option("--basis", basis_text, "expansion basis: m, p or P");

    auto* norm = app.add_subcommand("norm", "closed-form norm of P_Lambda");
    add_label_flags(norm, la);
    auto* inclusion = app.add_subcommand("inclusion", "coefficients of P_Lambda in the basis of R_{m+1}");
    add_label_flags(inclusion, la);
    auto* restrict_cmd = app.add_subcommand("restrict", "restriction of P_Lambda to R_{m-1}");
    add_label_flags(restrict_cmd, la);

    std::optional<std::string> eval_eta;
    auto* eval = app.add_subcommand("eval", "principal specialization of P_Lambda, or of E_eta with --eta");
    add_label_flags(eval, la);
    eval->add_option("--N", la.N, "number of variables");
    eval->add_option("--eta", eval_eta, "evaluate E_eta instead");

    std::string suite;
    VerifyOptions vo;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--m-max", vo.m_max, "largest m");
    verify->add_option("--m", vo.m, "a single m");
    verify->add_option("--deg-max", vo.deg_max, "largest degree");
    verify->add_option("--N", vo.N, "number of variables, or its bound");
    verify->add_option("--seed", vo.seed, "seed for random inputs");
    verify->add_option("--samples", vo.samples, "number of random inputs");
    verify->add_flag("--timing", timing, "report timing (output is then not byte-stable)");

    int km_m = -1, km_deg = 3, nx = -1, ny = -1;
    std::string form = "km";
    auto* kernel = app.add_subcommand("kernel", "degree-truncated reproducing kernel");
    kernel->add_option("--m", km_m, "m")->required();
    kernel->add_option("--deg-max", km_deg, "truncation degree (default 3)");
    kernel->add_option("--nx", nx, "x variables (default m + deg-max)");
    kernel->add_option("--ny", ny, "y variables (default nx)");
    kernel->add_option("--form", form, "km, kbar, expansion or k0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*verify) {
            if (common.check) throw UsageError("--check does not apply to verify");
            vo.qt_point = qt_point_from(common);
            return cmd_verify(suite, vo, common, timing);
        }
        qt_point_from(common);
        std::string name;
        Outcome out;
        if (*expand_e) {
            name = "expand-e";
            out = cmd_expand_e(eta_text, N);
        } else if (*expand_p) {
            name = "expand-p";
            ExpansionBasis b;
            try {
                b = parse_expansion_basis(basis_text);
            } catch (const std::exception& e) {
                throw UsageError(std::string("--basis: ") + e.what());
            }
            out = cmd_expand_p(label_from(la), la.N, b, common);
        } else if (*norm) {
            name = "norm";
            out = cmd_norm(label_from(la), common);
        } else if (*inclusion) {
            name = "inclusion";
            out = cmd_inclusion(label_from(la), common);
        } else if (*restrict_cmd) {
            name = "restrict";
            out = cmd_restrict(label_from(la), common);
        } else if (*eval) {
            name = "eval";
            if (eval_eta) {
                if (la.a || la.lambda || la.label || la.m >= 0) throw UsageError("--eta cannot be combined with a label");
                out = cmd_eval_eta(*eval_eta, la.N, common);
            } else {
                out = cmd_eval_label(label_from(la), la.N, common);
            }
        } else if (*kernel) {
            name = "kernel";
            out = cmd_kernel(km_m, km_deg, nx, ny, form, common);
        }
        return emit(name, common, out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
}
