#include "msym/polyring.hpp"

#include <atomic>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace msym {

namespace {

std::atomic<int> g_max_degree{-1};

int env_max_degree() {
    if (const char* s = std::getenv("MSYM_MAXDEG")) {
        try {
            const int d = std::stoi(s);
            if (d > 0) return d;
        } catch (const std::exception&) {
        }
    }
    return 12;
}

void check_degree(int d) {
    if (d > max_degree())
        throw std::length_error("degree " + std::to_string(d) + " exceeds the limit " +
                                std::to_string(max_degree()) + " (MSYM_MAXDEG)");
}

std::string coeff_prefix(const QtRational& c) {
    if (c.is_one()) return "";
    if ((-c).is_one()) return "-";
    const std::string s = c.to_string();
    if (!c.is_polynomial()) return "(" + s + ")*";
    if (c.num().size() == 1) return s + "*";
    return "(" + s + ")*";
}

}  // namespace

int max_degree() {
    int d = g_max_degree.load();
    if (d < 0) {
        d = env_max_degree();
        g_max_degree.store(d);
    }
    return d;
}

void set_max_degree(int d) { g_max_degree.store(d); }

Exponent make_exponent(const std::vector<int>& e) {
    if (e.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
    Exponent r{};
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 255) throw std::invalid_argument("exponent out of range");
        r[i] = static_cast<std::uint8_t>(e[i]);
    }
    return r;
}

std::vector<int> exponent_vector(const Exponent& e, int n) { return std::vector<int>(e.begin(), e.begin() + n); }

int exponent_degree(const Exponent& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

void check_same_nvars(const MultiPoly& f, const MultiPoly& g) {
    if (f.nvars() != g.nvars())
        throw std::invalid_argument("nvars mismatch: " + std::to_string(f.nvars()) + " vs " +
                                    std::to_string(g.nvars()));
}

void check_index(const MultiPoly& f, int i) {
    if (i < 1 || i > f.nvars())
        throw std::out_of_range("variable index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(f.nvars()));
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("nvars out of range");
}

MultiPoly MultiPoly::constant(int nvars, const QtRational& c) {
    MultiPoly f(nvars);
    if (!c.is_zero()) f.terms_.emplace(Exponent{}, c);
    return f;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    MultiPoly f(nvars);
    check_index(f, i);
    Exponent e{};
    e[i - 1] = 1;
    f.terms_.emplace(e, QtRational(1));
    return f;
}

MultiPoly MultiPoly::monomial(int nvars, const std::vector<int>& e, const QtRational& c) {
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent length mismatch");
    return term(nvars, make_exponent(e), c);
}

MultiPoly MultiPoly::term(int nvars, const Exponent& e, const QtRational& c) {
    MultiPoly f(nvars);
    for (int k = nvars; k < kMaxVars; ++k)
        if (e[k] != 0) throw std::invalid_argument("exponent beyond nvars");
    check_degree(exponent_degree(e));
    if (!c.is_zero()) f.terms_.emplace(e, c);
    return f;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exponent_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = exponent_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exponent_degree(e) != d) return false;
    return true;
}

QtRational MultiPoly::coefficient_of(const std::vector<int>& e) const {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    for (int x : e)
        if (x < 0 || x > 255) return {};
    return coeff(make_exponent(e));
}

QtRational MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QtRational() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const QtRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_nvars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_nvars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const QtRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_nvars(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars());
    check_degree(a.total_degree() + b.total_degree());
    PolyBuilder out(a.nvars());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e;
            for (int k = 0; k < kMaxVars; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
            out.add(e, ca * cb);
        }
    return out.build();
}

MultiPoly MultiPoly::map_coeffs(const std::function<QtRational(const QtRational&)>& fn) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        QtRational x = fn(c);
        if (!x.is_zero()) r.terms_.emplace_hint(r.terms_.end(), e, std::move(x));
    }
    return r;
}

MultiPoly MultiPoly::component(int d) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (exponent_degree(e) == d) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        std::string mono;
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) {
            const std::string cs = c.to_string();
            s += c.is_polynomial() && c.num().size() == 1 ? cs : "(" + cs + ")";
        } else {
            s += coeff_prefix(c) + mono;
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& f) { return os << f.to_string(); }

void PolyBuilder::add(const Exponent& e, const QtRational& c) {
    if (!c.is_zero()) acc_[e].push_back(c);
}

void PolyBuilder::add(const MultiPoly& f, const QtRational& c) {
    if (f.nvars() != nvars_) throw std::invalid_argument("PolyBuilder: nvars mismatch");
    if (c.is_zero()) return;
    for (const auto& [e, x] : f.terms()) acc_[e].push_back(c.is_one() ? x : x * c);
}

MultiPoly PolyBuilder::build() {
    MultiPoly r(nvars_);
    for (auto& [e, values] : acc_) {
        QtRational c = values.size() == 1 ? std::move(values[0]) : sum(std::move(values));
        if (!c.is_zero()) r.terms_.emplace_hint(r.terms_.end(), e, std::move(c));
    }
    acc_.clear();
    return r;
}

MultiPoly poly_arith(const MultiPoly& f, const MultiPoly& g, PolyOp kind) {
    switch (kind) {
        case PolyOp::add: return f + g;
        case PolyOp::sub: return f - g;
        case PolyOp::mul: return f * g;
    }
    throw std::invalid_argument("poly_arith: unknown kind");
}

MultiPoly scalar_mul(const MultiPoly& f, const QtRational& c) { return f * c; }

MultiPoly exchange(const MultiPoly& f, int i, int j) {
    check_index(f, i);
    check_index(f, j);
    if (i == j) return f;
    MultiPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exponent x = e;
        std::swap(x[i - 1], x[j - 1]);
        r.add_term(x, c);
    }
    return r;
}

MultiPoly qshift(const MultiPoly& f, int i) {
    check_index(f, i);
    MultiPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, e[i - 1] ? c * QtRational::q_pow(e[i - 1]) : c);
    return r;
}

MultiPoly set_var_zero(const MultiPoly& f, int i) {
    check_index(f, i);
    const int n = i == f.nvars() ? f.nvars() - 1 : f.nvars();
    MultiPoly r(n);
    for (const auto& [e, c] : f.terms())
        if (e[i - 1] == 0) r.add_term(e, c);
    return r;
}

MultiPoly relabel(const MultiPoly& f, int new_nvars, const std::vector<int>& target) {
    if (static_cast<int>(target.size()) != f.nvars()) throw std::invalid_argument("relabel: map length mismatch");
    for (int t : target)
        if (t < 1 || t > new_nvars) throw std::out_of_range("relabel: target out of range");
    PolyBuilder out(new_nvars);
    for (const auto& [e, c] : f.terms()) {
        Exponent x{};
        for (int k = 0; k < f.nvars(); ++k) x[target[k] - 1] = static_cast<std::uint8_t>(x[target[k] - 1] + e[k]);
        out.add(x, c);
    }
    return out.build();
}

MultiPoly scale_vars(const MultiPoly& f, const std::vector<QtRational>& scale) {
    if (static_cast<int>(scale.size()) != f.nvars()) throw std::invalid_argument("scale_vars: length mismatch");
    MultiPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        QtRational x = c;
        for (int k = 0; k < f.nvars(); ++k)
            if (e[k]) x *= scale[k].pow(e[k]);
        r.add_term(e, x);
    }
    return r;
}

QtRational evaluate(const MultiPoly& f, const std::vector<QtRational>& values) {
    if (static_cast<int>(values.size()) != f.nvars()) throw std::invalid_argument("evaluate: length mismatch");
    const int d = f.total_degree();
    std::vector<std::vector<QtRational>> powers(f.nvars());
    for (int k = 0; k < f.nvars(); ++k) {
        powers[k].push_back(QtRational(1));
        for (int j = 1; j <= d; ++j) powers[k].push_back(powers[k].back() * values[k]);
    }
    std::vector<QtRational> parts;
    parts.reserve(f.size());
    for (const auto& [e, c] : f.terms()) {
        QtRational x = c;
        for (int k = 0; k < f.nvars(); ++k)
            if (e[k]) x *= powers[k][e[k]];
        parts.push_back(std::move(x));
    }
    return sum(std::move(parts));
}

}  // namespace msym
