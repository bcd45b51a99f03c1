#include "msym/qt_field.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace msym {

// ---------------------------------------------------------------- QtPoly

namespace {

bool exp_less(const QtTerm& a, const QtTerm& b) {
    return a.qe != b.qe ? a.qe < b.qe : a.te < b.te;
}

std::string monomial_text(int qe, int te) {
    std::string s;
    if (qe > 0) s += qe == 1 ? "q" : "q^" + std::to_string(qe);
    if (te > 0) {
        if (!s.empty()) s += "*";
        s += te == 1 ? "t" : "t^" + std::to_string(te);
    }
    return s;
}

}  // namespace

QtPoly::QtPoly(long c) {
    if (c != 0) terms_.push_back({0, 0, mpz_class(c)});
}

QtPoly::QtPoly(const mpz_class& c) {
    if (c != 0) terms_.push_back({0, 0, c});
}

QtPoly QtPoly::monomial(const mpz_class& c, int qe, int te) {
    if (qe < 0 || te < 0) throw std::invalid_argument("QtPoly: negative exponent");
    QtPoly p;
    if (c != 0) p.terms_.push_back({qe, te, c});
    return p;
}

QtPoly QtPoly::from_terms(std::vector<QtTerm> terms) {
    std::sort(terms.begin(), terms.end(), exp_less);
    QtPoly p;
    for (auto& term : terms) {
        if (term.qe < 0 || term.te < 0) throw std::invalid_argument("QtPoly: negative exponent");
        if (!p.terms_.empty() && p.terms_.back().qe == term.qe && p.terms_.back().te == term.te) {
            p.terms_.back().coeff += term.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(term));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

QtPoly QtPoly::from_sorted_terms(std::vector<QtTerm> terms) {
    QtPoly p;
    p.terms_ = std::move(terms);
    return p;
}

bool QtPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].qe == 0 && terms_[0].te == 0 && terms_[0].coeff == 1;
}

bool QtPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].qe == 0 && terms_[0].te == 0);
}

int QtPoly::q_degree() const { return terms_.empty() ? 0 : terms_.back().qe; }

int QtPoly::t_degree() const {
    int d = 0;
    for (const auto& term : terms_) d = std::max(d, term.te);
    return d;
}

int QtPoly::min_qe() const { return terms_.empty() ? 0 : terms_.front().qe; }

int QtPoly::min_te() const {
    if (terms_.empty()) return 0;
    int d = terms_.front().te;
    for (const auto& term : terms_) d = std::min(d, term.te);
    return d;
}

mpz_class QtPoly::content() const {
    mpz_class g = 0;
    for (const auto& term : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QtPoly QtPoly::operator-() const {
    QtPoly r = *this;
    for (auto& term : r.terms_) term.coeff = -term.coeff;
    return r;
}

QtPoly& QtPoly::operator+=(const QtPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<QtTerm> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        if (exp_less(*i, *j)) {
            out.push_back(std::move(*i++));
        } else if (exp_less(*j, *i)) {
            out.push_back(*j++);
        } else {
            mpz_class c = i->coeff + j->coeff;
            if (c != 0) out.push_back({i->qe, i->te, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
    for (; j != o.terms_.end(); ++j) out.push_back(*j);
    terms_ = std::move(out);
    return *this;
}

QtPoly& QtPoly::operator-=(const QtPoly& o) { return *this += -o; }

QtPoly operator*(const QtPoly& a, const QtPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (b.terms_.size() == 1 && b.terms_[0].qe == 0 && b.terms_[0].te == 0) {
        QtPoly r = a;
        r *= b.terms_[0].coeff;
        return r;
    }
    if (a.terms_.size() == 1 && a.terms_[0].qe == 0 && a.terms_[0].te == 0) {
        QtPoly r = b;
        r *= a.terms_[0].coeff;
        return r;
    }
    const int q0 = a.min_qe() + b.min_qe();
    const int t0 = a.min_te() + b.min_te();
    const int nq = a.q_degree() + b.q_degree() - q0 + 1;
    const int nt = a.t_degree() + b.t_degree() - t0 + 1;
    const long cells = static_cast<long>(nq) * nt;
    if (cells <= 1 << 16) {
        std::vector<mpz_class> dense(cells);
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) {
                const long idx = static_cast<long>(x.qe + y.qe - q0) * nt + (x.te + y.te - t0);
                mpz_addmul(dense[idx].get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
            }
        std::vector<QtTerm> out;
        for (long idx = 0; idx < cells; ++idx)
            if (dense[idx] != 0)
                out.push_back({static_cast<int>(idx / nt) + q0, static_cast<int>(idx % nt) + t0,
                               std::move(dense[idx])});
        return QtPoly::from_sorted_terms(std::move(out));
    }
    std::vector<QtTerm> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) out.push_back({x.qe + y.qe, x.te + y.te, x.coeff * y.coeff});
    return QtPoly::from_terms(std::move(out));
}

QtPoly& QtPoly::operator*=(const QtPoly& o) { return *this = *this * o; }

QtPoly& QtPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    if (c == 1) return *this;
    for (auto& term : terms_) term.coeff *= c;
    return *this;
}

QtPoly QtPoly::shifted(int qe, int te) const {
    QtPoly r = *this;
    for (auto& term : r.terms_) {
        term.qe += qe;
        term.te += te;
        if (term.qe < 0 || term.te < 0) throw std::invalid_argument("QtPoly::shifted: negative exponent");
    }
    return r;
}

QtPoly QtPoly::divided_by(const mpz_class& c) const {
    QtPoly r = *this;
    for (auto& term : r.terms_) mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), c.get_mpz_t());
    return r;
}

bool operator==(const QtPoly& a, const QtPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.qe != y.qe || x.te != y.te || x.coeff != y.coeff) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const QtPoly& a, const QtPoly& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (auto c = x.qe <=> y.qe; c != 0) return c;
        if (auto c = x.te <=> y.te; c != 0) return c;
        const int cc = cmp(x.coeff, y.coeff);
        if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.terms_.size() <=> b.terms_.size();
}

mpq_class QtPoly::eval(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class r = 0;
    std::map<int, mpq_class> qpow;
    for (const auto& term : terms_) {
        mpq_class qp, tp;
        mpz_pow_ui(qp.get_num_mpz_t(), q0.get_num_mpz_t(), term.qe);
        mpz_pow_ui(qp.get_den_mpz_t(), q0.get_den_mpz_t(), term.qe);
        mpz_pow_ui(tp.get_num_mpz_t(), t0.get_num_mpz_t(), term.te);
        mpz_pow_ui(tp.get_den_mpz_t(), t0.get_den_mpz_t(), term.te);
        qp.canonicalize();
        tp.canonicalize();
        r += mpq_class(term.coeff) * qp * tp;
    }
    return r;
}

QtPoly QtPoly::reversed() const {
    const int dq = q_degree();
    const int dt = t_degree();
    std::vector<QtTerm> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) out.push_back({dq - term.qe, dt - term.te, term.coeff});
    return from_terms(std::move(out));
}

QtPoly QtPoly::q_power_substituted(int k) const {
    if (k < 1) throw std::invalid_argument("q_power_substituted: k must be positive");
    QtPoly r = *this;
    for (auto& term : r.terms_) term.qe *= k;
    return r;
}

std::string QtPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& term : terms_) {
        const bool negative = term.coeff < 0;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        const mpz_class mag = abs(term.coeff);
        const std::string mono = monomial_text(term.qe, term.te);
        if (mono.empty()) {
            s += mag.get_str();
        } else if (mag == 1) {
            s += mono;
        } else {
            s += mag.get_str() + "*" + mono;
        }
    }
    return s;
}

std::size_t QtPoly::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& term : terms_) {
        h ^= static_cast<std::size_t>(term.qe) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(term.te);
        h *= 0x100000001b3ULL;
        h ^= static_cast<std::size_t>(mpz_get_si(term.coeff.get_mpz_t()));
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const QtPoly& p) { return os << p.to_string(); }

// ------------------------------------------------------------ QtRational

QtRational::QtRational(QtPoly num, QtPoly den) {
    if (den.is_zero()) throw ZeroDivisionError("QtRational: zero denominator");
    if (num.is_zero()) {
        den_ = QtPoly(1);
        return;
    }
    if (!den.is_one()) {
        const QtPoly g = gcd(num, den);
        if (!g.is_one()) {
            num = divide_exact(num, g);
            den = divide_exact(den, g);
        }
    }
    num_ = std::move(num);
    den_ = std::move(den);
    fix_sign();
}

void QtRational::fix_sign() {
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QtRational QtRational::fraction(const mpz_class& n, const mpz_class& d) {
    return QtRational(QtPoly(n), QtPoly(d));
}

QtRational QtRational::monomial(const mpz_class& c, int qe, int te) {
    if (c == 0) return {};
    QtPoly num = QtPoly::monomial(c, std::max(qe, 0), std::max(te, 0));
    QtPoly den = QtPoly::monomial(1, std::max(-qe, 0), std::max(-te, 0));
    return QtRational(std::move(num), std::move(den), Reduced{});
}

QtRational QtRational::operator-() const { return QtRational(-num_, den_, Reduced{}); }

QtRational& QtRational::operator+=(const QtRational& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        QtPoly n = num_ + o.num_;
        return *this = QtRational(std::move(n), den_);
    }
    const QtPoly g = gcd(den_, o.den_);
    if (g.is_one()) {
        QtPoly n = num_ * o.den_ + o.num_ * den_;
        QtPoly d = den_ * o.den_;
        if (n.is_zero()) return *this = QtRational();
        num_ = std::move(n);
        den_ = std::move(d);
        fix_sign();
        return *this;
    }
    const QtPoly b1 = divide_exact(den_, g);
    const QtPoly d1 = divide_exact(o.den_, g);
    QtPoly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) return *this = QtRational();
    const QtPoly g2 = gcd(n, g);
    QtPoly d = b1 * o.den_;
    if (!g2.is_one()) {
        n = divide_exact(n, g2);
        d = divide_exact(d, g2);
    }
    num_ = std::move(n);
    den_ = std::move(d);
    fix_sign();
    return *this;
}

QtRational& QtRational::operator-=(const QtRational& o) { return *this += -o; }

QtRational& QtRational::operator*=(const QtRational& o) {
    if (is_zero() || o.is_zero()) return *this = QtRational();
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    QtPoly a = num_;
    QtPoly b = den_;
    QtPoly c = o.num_;
    QtPoly d = o.den_;
    if (!d.is_one()) {
        const QtPoly g1 = gcd(a, d);
        if (!g1.is_one()) {
            a = divide_exact(a, g1);
            d = divide_exact(d, g1);
        }
    }
    if (!b.is_one()) {
        const QtPoly g2 = gcd(c, b);
        if (!g2.is_one()) {
            c = divide_exact(c, g2);
            b = divide_exact(b, g2);
        }
    }
    num_ = a * c;
    den_ = b * d;
    fix_sign();
    return *this;
}

QtRational& QtRational::operator/=(const QtRational& o) { return *this *= o.inverse(); }

QtRational QtRational::inverse() const {
    if (is_zero()) throw ZeroDivisionError("QtRational: inverse of zero");
    QtRational r(den_, num_, Reduced{});
    r.fix_sign();
    return r;
}

QtRational QtRational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    QtRational result(1);
    QtRational base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

QtRational QtRational::conj() const {
    if (is_zero()) return {};
    // p(1/q,1/t) = reversed(p) * q^{-dq} t^{-dt}
    const int sq = den_.q_degree() - num_.q_degree();
    const int st = den_.t_degree() - num_.t_degree();
    QtPoly n = num_.reversed().shifted(std::max(sq, 0), std::max(st, 0));
    QtPoly d = den_.reversed().shifted(std::max(-sq, 0), std::max(-st, 0));
    return QtRational(std::move(n), std::move(d));
}

QtRational QtRational::q_power_substituted(int k) const {
    return QtRational(num_.q_power_substituted(k), den_.q_power_substituted(k));
}

mpq_class QtRational::eval(const mpq_class& q0, const mpq_class& t0) const {
    const mpq_class d = den_.eval(q0, t0);
    if (d == 0) throw ZeroDivisionError("qt_eval: denominator vanishes at the point");
    return num_.eval(q0, t0) / d;
}

std::string QtRational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::size_t QtRational::hash() const { return num_.hash() * 31 + den_.hash(); }

namespace {

// Recursive-descent parser for sums/products/quotients of integers, q, t.
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    QtRational parse_all() {
        QtRational v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse '" + std::string(s_) + "': " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    QtRational expr() {
        QtRational v;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        v = term();
        if (negate) v = -v;
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else break;
        }
        return v;
    }
    QtRational term() {
        QtRational v = power();
        for (;;) {
            if (accept('*')) v *= power();
            else if (accept('/')) {
                QtRational d = power();
                if (d.is_zero()) throw ZeroDivisionError("parse: division by zero");
                v /= d;
            } else break;
        }
        return v;
    }
    QtRational power() {
        QtRational base = atom();
        if (accept('^')) {
            skip();
            bool neg = accept('-');
            const long e = integer();
            base = base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }
    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    QtRational atom() {
        skip();
        if (accept('(')) {
            QtRational v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (accept('q')) return QtRational::q();
        if (accept('t')) return QtRational::t();
        if (accept('-')) return -atom();
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("unexpected character");
        return QtRational(QtPoly(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

QtRational QtRational::parse(std::string_view text) { return Parser(text).parse_all(); }

std::ostream& operator<<(std::ostream& os, const QtRational& x) { return os << x.to_string(); }

QtRational qt_arith(const QtRational& lhs, const QtRational& rhs, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return lhs + rhs;
        case ArithKind::sub: return lhs - rhs;
        case ArithKind::mul: return lhs * rhs;
        case ArithKind::div:
            if (rhs.is_zero()) throw ZeroDivisionError("qt_arith: division by zero");
            return lhs / rhs;
    }
    throw std::invalid_argument("qt_arith: unknown kind");
}

mpq_class qt_eval(const QtRational& x, const mpq_class& q0, const mpq_class& t0) {
    return x.eval(q0, t0);
}

QtRational sum(std::vector<QtRational> values) {
    if (values.empty()) return {};
    if (values.size() == 1) return std::move(values[0]);
    std::sort(values.begin(), values.end(),
              [](const QtRational& a, const QtRational& b) { return a.den() < b.den(); });
    QtRational total;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i + 1;
        QtPoly num = values[i].num();
        while (j < values.size() && values[j].den() == values[i].den()) num += values[j++].num();
        if (!num.is_zero()) total += QtRational(std::move(num), values[i].den());
        i = j;
    }
    return total;
}

QtRational one_minus(int qe, int te) {
    if (qe >= 0 && te >= 0) return QtRational(QtPoly(1) - QtPoly::monomial(1, qe, te));
    return QtRational(1) - QtRational::monomial(1, qe, te);
}

QtRational t_factorial(int k, bool inverse_t) {
    QtRational r(1);
    const int sign = inverse_t ? -1 : 1;
    for (int i = 1; i <= k; ++i) r *= one_minus(0, sign * i) / one_minus(0, sign);
    return r;
}

}  // namespace msym
