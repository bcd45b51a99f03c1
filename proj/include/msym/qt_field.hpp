#pragma once

/**
 * @file qt_field.hpp
 * @brief Exact arithmetic in the field Q(q,t).
 *
 * QtPoly is a sparse polynomial in Z[q,t]; QtRational is a reduced quotient
 * of two such polynomials. Every QtRational is kept in canonical form:
 *
 *   - gcd(num, den) = 1 in Z[q,t],
 *   - the first term of den in (q-major, ascending) lexicographic order has
 *     a positive coefficient.
 *
 * Canonical forms make equality a structural comparison. Negative powers of
 * q and t never appear as exponents; they are cleared into the denominator.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace msym {

class ZeroDivisionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct QtTerm {
    int qe = 0;
    int te = 0;
    mpz_class coeff;
};

/// Sparse polynomial in Z[q,t]. Terms are sorted by (qe, te) ascending and
/// never carry a zero coefficient.
class QtPoly {
public:
    QtPoly() = default;
    QtPoly(long c);  // NOLINT(implicit)
    explicit QtPoly(const mpz_class& c);

    static QtPoly monomial(const mpz_class& c, int qe, int te);
    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    static QtPoly from_terms(std::vector<QtTerm> terms);
    /// Trusts that terms are sorted, unique and nonzero.
    static QtPoly from_sorted_terms(std::vector<QtTerm> terms);

    const std::vector<QtTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    int q_degree() const;
    int t_degree() const;
    int min_qe() const;
    int min_te() const;
    /// Positive gcd of the coefficients (0 for the zero polynomial).
    mpz_class content() const;
    /// Coefficient of the first term in canonical order.
    const mpz_class& leading_coeff() const { return terms_.front().coeff; }

    QtPoly operator-() const;
    QtPoly& operator+=(const QtPoly& o);
    QtPoly& operator-=(const QtPoly& o);
    QtPoly& operator*=(const QtPoly& o);
    QtPoly& operator*=(const mpz_class& c);
    /// Multiplies by q^qe t^te (exponents must keep every term nonnegative).
    QtPoly shifted(int qe, int te) const;
    /// Divides every coefficient by c; c must divide all of them.
    QtPoly divided_by(const mpz_class& c) const;

    friend QtPoly operator+(QtPoly a, const QtPoly& b) { return a += b; }
    friend QtPoly operator-(QtPoly a, const QtPoly& b) { return a -= b; }
    friend QtPoly operator*(const QtPoly& a, const QtPoly& b);

    friend bool operator==(const QtPoly& a, const QtPoly& b);
    friend std::strong_ordering operator<=>(const QtPoly& a, const QtPoly& b);

    mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;
    /// p(1/q, 1/t) * q^{q_degree} t^{t_degree}.
    QtPoly reversed() const;
    /// p(q^k, t) for k >= 1.
    QtPoly q_power_substituted(int k) const;

    std::string to_string() const;
    std::size_t hash() const;

private:
    std::vector<QtTerm> terms_;
};

/// gcd in Z[q,t], normalized so that its first term is positive.
QtPoly gcd(const QtPoly& a, const QtPoly& b);
/// Returns true and sets quot when b divides a exactly in Z[q,t].
bool try_divide(const QtPoly& a, const QtPoly& b, QtPoly& quot);
/// Exact quotient; throws std::logic_error when b does not divide a.
QtPoly divide_exact(const QtPoly& a, const QtPoly& b);

/// Element of Q(q,t) in canonical reduced form.
class QtRational {
public:
    QtRational() : den_(1) {}
    QtRational(long c) : num_(c), den_(1) {}  // NOLINT(implicit)
    QtRational(QtPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(implicit)
    /// Reduces num/den; throws ZeroDivisionError when den is zero.
    QtRational(QtPoly num, QtPoly den);
    /// Integer fraction n/d.
    static QtRational fraction(const mpz_class& n, const mpz_class& d);
    /// c * q^qe * t^te, exponents of any sign.
    static QtRational monomial(const mpz_class& c, int qe, int te);
    static QtRational q_pow(int e) { return monomial(1, e, 0); }
    static QtRational t_pow(int e) { return monomial(1, 0, e); }
    static QtRational q() { return q_pow(1); }
    static QtRational t() { return t_pow(1); }

    const QtPoly& num() const { return num_; }
    const QtPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    QtRational operator-() const;
    QtRational& operator+=(const QtRational& o);
    QtRational& operator-=(const QtRational& o);
    QtRational& operator*=(const QtRational& o);
    QtRational& operator/=(const QtRational& o);

    friend QtRational operator+(QtRational a, const QtRational& b) { return a += b; }
    friend QtRational operator-(QtRational a, const QtRational& b) { return a -= b; }
    friend QtRational operator*(QtRational a, const QtRational& b) { return a *= b; }
    friend QtRational operator/(QtRational a, const QtRational& b) { return a /= b; }
    friend bool operator==(const QtRational& a, const QtRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    QtRational inverse() const;
    QtRational pow(int e) const;
    /// The substitution (q,t) -> (1/q, 1/t).
    QtRational conj() const;
    /// The substitution q -> q^k, k >= 1.
    QtRational q_power_substituted(int k) const;

    /// Exact value at (q0,t0); throws ZeroDivisionError when den vanishes.
    mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;

    std::string to_string() const;
    static QtRational parse(std::string_view text);
    std::size_t hash() const;

private:
    struct Reduced {};
    QtRational(QtPoly num, QtPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void fix_sign();

    QtPoly num_;
    QtPoly den_;
};

enum class ArithKind { add, sub, mul, div };

QtRational qt_arith(const QtRational& lhs, const QtRational& rhs, ArithKind kind);
mpq_class qt_eval(const QtRational& x, const mpq_class& q0, const mpq_class& t0);

/// Sum of many values. Terms sharing a denominator are added on numerators
/// first so only one reduction per distinct denominator is paid.
QtRational sum(std::vector<QtRational> values);

/// (1 - q^a t^b)
QtRational one_minus(int qe, int te);
/// [k]_t! = (1-t)(1-t^2)...(1-t^k)/(1-t)^k; with inverse_t the parameter is 1/t.
QtRational t_factorial(int k, bool inverse_t = false);

std::ostream& operator<<(std::ostream& os, const QtPoly& p);
std::ostream& operator<<(std::ostream& os, const QtRational& x);

}  // namespace msym
