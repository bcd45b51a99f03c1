// Polynomial gcd and exact division in Z[q,t].
//
// Bivariate polynomials are handled as polynomials in q with coefficients in
// Z[t]. The gcd first tries the heuristic evaluation/interpolation scheme
// (evaluate at a large integer, take integer gcds, reconstruct by
// balanced radix expansion, confirm by trial division) and falls back to a
// primitive pseudo-remainder sequence when the heuristic gives up.

#include "msym/qt_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace msym {
namespace {

using UPoly = std::vector<mpz_class>;  // Z[x], index = degree
using BPoly = std::vector<UPoly>;      // Z[t][q], outer index = q-degree

constexpr int kHeuristicAttempts = 6;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class content(const UPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

mpz_class content(const BPoly& p) {
    mpz_class g = 0;
    for (const auto& row : p)
        for (const auto& c : row) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) return g;
        }
    return g;
}

mpz_class max_norm(const UPoly& p) {
    mpz_class m = 0;
    for (const auto& c : p)
        if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    return m;
}

mpz_class max_norm(const BPoly& p) {
    mpz_class m = 0;
    for (const auto& row : p)
        for (const auto& c : row)
            if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    return m;
}

void divide_content(UPoly& p, const mpz_class& c) {
    if (c == 1) return;
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

void divide_content(BPoly& p, const mpz_class& c) {
    if (c == 1) return;
    for (auto& row : p) divide_content(row, c);
}

void negate(UPoly& p) {
    for (auto& c : p) c = -c;
}

void negate(BPoly& p) {
    for (auto& row : p) negate(row);
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

void sub_scaled_shifted(UPoly& a, const UPoly& b, const mpz_class& c, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (std::size_t j = 0; j < b.size(); ++j)
        mpz_submul(a[j + shift].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
}

void sub_into(UPoly& a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
}

// a = b * quot exactly in Z[x]
bool div_exact(UPoly a, const UPoly& b, UPoly& quot) {
    if (b.empty()) return false;
    quot.clear();
    if (a.empty()) return true;
    const int db = degree(b);
    if (degree(a) < db) return false;
    quot.assign(a.size() - b.size() + 1, 0);
    const mpz_class& lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        const mpz_class& la = a.back();
        if (!mpz_divisible_p(la.get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
        const int shift = degree(a) - db;
        sub_scaled_shifted(a, b, c, shift);
        quot[shift] = c;
        trim(a);
    }
    if (!a.empty()) return false;
    trim(quot);
    return true;
}

mpz_class eval(const UPoly& p, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

// Balanced radix-x expansion of h.
UPoly interpolate(mpz_class h, const mpz_class& x) {
    UPoly r;
    const mpz_class half = x / 2;
    while (h != 0) {
        mpz_class g;
        mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
        if (g > half) g -= x;
        r.push_back(g);
        h -= g;
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    }
    return r;
}

mpz_class isqrt(const mpz_class& x) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

mpz_class initial_point(const mpz_class& nf, const mpz_class& ng, const mpz_class& lf,
                        const mpz_class& lg) {
    const mpz_class b = 2 * std::min(nf, ng) + 29;
    const mpz_class root = 99 * isqrt(b);
    const mpz_class small = std::min<mpz_class>(b, root);
    const mpz_class rf = nf / abs(lf);
    const mpz_class rg = ng / abs(lg);
    const mpz_class ratio = 2 * std::min(rf, rg) + 2;
    return std::max(small, ratio);
}

mpz_class next_point(const mpz_class& x) { return 73794 * x * isqrt(isqrt(x)) / 27011; }

void make_primitive_positive(UPoly& p) {
    divide_content(p, content(p));
    if (!p.empty() && p.back() < 0) negate(p);
}

bool ugcd_heuristic(const UPoly& f, const UPoly& g, UPoly& out) {
    mpz_class x = initial_point(max_norm(f), max_norm(g), f.back(), g.back());
    for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt, x = next_point(x)) {
        const mpz_class ff = eval(f, x);
        const mpz_class gg = eval(g, x);
        if (ff == 0 || gg == 0) continue;
        mpz_class hh;
        mpz_gcd(hh.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
        UPoly h = interpolate(hh, x);
        make_primitive_positive(h);
        UPoly tmp;
        if (!h.empty() && div_exact(f, h, tmp) && div_exact(g, h, tmp)) {
            out = std::move(h);
            return true;
        }
        UPoly cf = interpolate(ff / hh, x);
        if (!cf.empty() && div_exact(f, cf, h)) {
            make_primitive_positive(h);
            if (!h.empty() && div_exact(g, h, tmp)) {
                out = std::move(h);
                return true;
            }
        }
        UPoly cg = interpolate(gg / hh, x);
        if (!cg.empty() && div_exact(g, cg, h)) {
            make_primitive_positive(h);
            if (!h.empty() && div_exact(f, h, tmp)) {
                out = std::move(h);
                return true;
            }
        }
    }
    return false;
}

UPoly prem(UPoly a, const UPoly& b) {
    const int db = degree(b);
    const mpz_class& lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        const mpz_class la = a.back();
        const int shift = degree(a) - db;
        for (auto& c : a) c *= lb;
        sub_scaled_shifted(a, b, la, shift);
        trim(a);
    }
    return a;
}

UPoly ugcd_prs(UPoly f, UPoly g) {
    if (degree(f) < degree(g)) std::swap(f, g);
    while (!g.empty()) {
        UPoly r = prem(f, g);
        make_primitive_positive(r);
        f = std::move(g);
        g = std::move(r);
    }
    make_primitive_positive(f);
    return f;
}

// Full gcd in Z[x] with positive leading coefficient.
UPoly ugcd(UPoly f, UPoly g) {
    trim(f);
    trim(g);
    if (f.empty()) {
        if (!g.empty() && g.back() < 0) negate(g);
        return g;
    }
    if (g.empty()) {
        if (f.back() < 0) negate(f);
        return f;
    }
    const mpz_class cf = content(f);
    const mpz_class cg = content(g);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    if (degree(f) == 0 || degree(g) == 0) return {c};
    divide_content(f, cf);
    divide_content(g, cg);
    UPoly h;
    if (!ugcd_heuristic(f, g, h)) h = ugcd_prs(f, g);
    for (auto& x : h) x *= c;
    return h;
}

// ---- bivariate ----

UPoly eval_t(const BPoly& p, const mpz_class& x) {
    UPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = eval(p[i], x);
    trim(r);
    return r;
}

BPoly interpolate_t(const UPoly& h, const mpz_class& x) {
    BPoly r(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) r[i] = interpolate(h[i], x);
    trim(r);
    return r;
}

const mpz_class& ground_lc(const BPoly& p) { return p.back().back(); }

void make_primitive_positive(BPoly& p) {
    divide_content(p, content(p));
    if (!p.empty() && ground_lc(p) < 0) negate(p);
}

bool div_exact(BPoly a, const BPoly& b, BPoly& quot) {
    if (b.empty()) return false;
    quot.clear();
    if (a.empty()) return true;
    const int db = degree(b);
    if (degree(a) < db) return false;
    quot.assign(a.size() - b.size() + 1, UPoly{});
    const UPoly& lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        UPoly c;
        if (!div_exact(a.back(), lb, c)) return false;
        const int shift = degree(a) - db;
        for (std::size_t j = 0; j < b.size(); ++j) {
            UPoly prod = mul(c, b[j]);
            sub_into(a[j + shift], prod);
        }
        if (!a.back().empty()) return false;
        quot[shift] = std::move(c);
        trim(a);
    }
    if (!a.empty()) return false;
    trim(quot);
    return true;
}

bool bgcd_heuristic(const BPoly& f, const BPoly& g, BPoly& out) {
    mpz_class x = initial_point(max_norm(f), max_norm(g), ground_lc(f), ground_lc(g));
    for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt, x = next_point(x)) {
        const UPoly ff = eval_t(f, x);
        const UPoly gg = eval_t(g, x);
        if (ff.empty() || gg.empty()) continue;
        const UPoly hh = ugcd(ff, gg);
        BPoly h = interpolate_t(hh, x);
        make_primitive_positive(h);
        BPoly tmp;
        if (!h.empty() && div_exact(f, h, tmp) && div_exact(g, h, tmp)) {
            out = std::move(h);
            return true;
        }
        UPoly cff;
        if (div_exact(ff, hh, cff)) {
            BPoly cf = interpolate_t(cff, x);
            if (!cf.empty() && div_exact(f, cf, h)) {
                make_primitive_positive(h);
                if (!h.empty() && div_exact(g, h, tmp)) {
                    out = std::move(h);
                    return true;
                }
            }
        }
        UPoly cgg;
        if (div_exact(gg, hh, cgg)) {
            BPoly cg = interpolate_t(cgg, x);
            if (!cg.empty() && div_exact(g, cg, h)) {
                make_primitive_positive(h);
                if (!h.empty() && div_exact(f, h, tmp)) {
                    out = std::move(h);
                    return true;
                }
            }
        }
    }
    return false;
}

UPoly content_t(const BPoly& p) {
    UPoly c;
    for (const auto& row : p) {
        c = ugcd(c, row);
        if (c.size() == 1 && c[0] == 1) break;
    }
    return c;
}

void divide_content_t(BPoly& p, const UPoly& c) {
    if (c.size() == 1 && c[0] == 1) return;
    for (auto& row : p) {
        UPoly qt;
        div_exact(row, c, qt);
        row = std::move(qt);
    }
}

BPoly bprem(BPoly a, const BPoly& b) {
    const int db = degree(b);
    const UPoly& lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        const UPoly la = a.back();
        const int shift = degree(a) - db;
        for (auto& row : a) row = mul(row, lb);
        for (std::size_t j = 0; j < b.size(); ++j) sub_into(a[j + shift], mul(la, b[j]));
        trim(a);
    }
    return a;
}

BPoly bgcd_prs(BPoly f, BPoly g) {
    const UPoly cf = content_t(f);
    const UPoly cg = content_t(g);
    const UPoly c = ugcd(cf, cg);
    divide_content_t(f, cf);
    divide_content_t(g, cg);
    if (degree(f) < degree(g)) std::swap(f, g);
    while (!g.empty()) {
        BPoly r = bprem(f, g);
        if (!r.empty()) divide_content_t(r, content_t(r));
        f = std::move(g);
        g = std::move(r);
    }
    if (degree(f) == 0) f = BPoly{UPoly{1}};
    for (auto& row : f) row = mul(row, c);
    make_primitive_positive(f);
    return f;
}

BPoly to_dense(const QtPoly& p, int qshift, int tshift) {
    BPoly r;
    for (const auto& term : p.terms()) {
        const int i = term.qe - qshift;
        const int j = term.te - tshift;
        if (static_cast<int>(r.size()) <= i) r.resize(i + 1);
        if (static_cast<int>(r[i].size()) <= j) r[i].resize(j + 1, 0);
        r[i][j] = term.coeff;
    }
    return r;
}

QtPoly from_dense(const BPoly& p, int qshift, int tshift) {
    std::vector<QtTerm> terms;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0)
                terms.push_back({static_cast<int>(i) + qshift, static_cast<int>(j) + tshift, p[i][j]});
    return QtPoly::from_sorted_terms(std::move(terms));
}

QtPoly positive_first(QtPoly p) {
    if (!p.is_zero() && p.leading_coeff() < 0) return -p;
    return p;
}

}  // namespace

QtPoly gcd(const QtPoly& a, const QtPoly& b) {
    if (a.is_zero()) return positive_first(b);
    if (b.is_zero()) return positive_first(a);
    const int mq = std::min(a.min_qe(), b.min_qe());
    const int mt = std::min(a.min_te(), b.min_te());
    mpz_class c;
    {
        const mpz_class ca = a.content();
        const mpz_class cb = b.content();
        mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
    if (a.is_monomial() || b.is_monomial() || a.is_constant() || b.is_constant())
        return QtPoly::monomial(c, mq, mt);
    if (a == b || a == -b) return positive_first(a);

    BPoly f = to_dense(a, a.min_qe(), a.min_te());
    BPoly g = to_dense(b, b.min_qe(), b.min_te());
    divide_content(f, a.content());
    divide_content(g, b.content());

    BPoly h;
    if (degree(f) == 0 || degree(g) == 0) {
        // One side lies in Z[t]: the gcd divides every q-coefficient of the other.
        UPoly acc = degree(f) == 0 ? f[0] : g[0];
        const BPoly& other = degree(f) == 0 ? g : f;
        for (const auto& row : other) {
            acc = ugcd(acc, row);
            if (acc.size() == 1) break;
        }
        h = BPoly{acc};
    } else if (!bgcd_heuristic(f, g, h)) {
        h = bgcd_prs(f, g);
    }
    divide_content(h, content(h));
    for (auto& row : h)
        for (auto& x : row) x *= c;
    return positive_first(from_dense(h, mq, mt));
}

bool try_divide(const QtPoly& a, const QtPoly& b, QtPoly& quot) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        quot = QtPoly();
        return true;
    }
    if (b.is_monomial()) {
        const auto& bt = b.terms().front();
        std::vector<QtTerm> terms;
        terms.reserve(a.size());
        for (const auto& term : a.terms()) {
            if (term.qe < bt.qe || term.te < bt.te) return false;
            if (!mpz_divisible_p(term.coeff.get_mpz_t(), bt.coeff.get_mpz_t())) return false;
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), term.coeff.get_mpz_t(), bt.coeff.get_mpz_t());
            terms.push_back({term.qe - bt.qe, term.te - bt.te, std::move(c)});
        }
        quot = QtPoly::from_sorted_terms(std::move(terms));
        return true;
    }
    if (a.q_degree() < b.q_degree() || a.t_degree() < b.t_degree()) return false;
    const BPoly f = to_dense(a, 0, 0);
    const BPoly g = to_dense(b, 0, 0);
    BPoly qd;
    if (!div_exact(f, g, qd)) return false;
    quot = from_dense(qd, 0, 0);
    return true;
}

QtPoly divide_exact(const QtPoly& a, const QtPoly& b) {
    QtPoly quot;
    if (!try_divide(a, b, quot))
        throw std::logic_error("divide_exact: " + b.to_string() + " does not divide " + a.to_string());
    return quot;
}

}  // namespace msym
