#pragma once

/**
 * @file polyring.hpp
 * @brief Sparse polynomials in x_1..x_N over Q(q,t).
 *
 * Terms are kept in a map ordered by exponent vector, descending and
 * x_1-major, which is also the printing order.
 */

#include "msym/qt_field.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace msym {

inline constexpr int kMaxVars = 16;

using Exponent = std::array<std::uint8_t, kMaxVars>;

struct ExponentGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

Exponent make_exponent(const std::vector<int>& e);
std::vector<int> exponent_vector(const Exponent& e, int n);
int exponent_degree(const Exponent& e);

/// Max total degree any operation may produce (MSYM_MAXDEG, default 12).
int max_degree();
void set_max_degree(int d);

class MultiPoly {
public:
    using TermMap = std::map<Exponent, QtRational, ExponentGreater>;

    explicit MultiPoly(int nvars = 0);
    static MultiPoly constant(int nvars, const QtRational& c);
    /// x_i, 1-based.
    static MultiPoly variable(int nvars, int i);
    static MultiPoly monomial(int nvars, const std::vector<int>& e, const QtRational& c = 1);
    static MultiPoly term(int nvars, const Exponent& e, const QtRational& c = 1);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int total_degree() const;
    bool is_homogeneous() const;

    QtRational coefficient_of(const std::vector<int>& e) const;
    QtRational coeff(const Exponent& e) const;

    /// Adds c*x^e in place.
    void add_term(const Exponent& e, const QtRational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const QtRational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const QtRational& c) { return a *= c; }
    friend MultiPoly operator*(const QtRational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    MultiPoly map_coeffs(const std::function<QtRational(const QtRational&)>& fn) const;
    /// Homogeneous component of total degree d.
    MultiPoly component(int d) const;

    std::string to_string() const;

private:
    friend class PolyBuilder;
    int nvars_;
    TermMap terms_;
};

/// Accumulates many contributions per monomial and sums them once, grouping
/// equal denominators.
class PolyBuilder {
public:
    explicit PolyBuilder(int nvars) : nvars_(nvars) {}
    void add(const Exponent& e, const QtRational& c);
    void add(const MultiPoly& f, const QtRational& c = 1);
    MultiPoly build();

private:
    int nvars_;
    std::map<Exponent, std::vector<QtRational>, ExponentGreater> acc_;
};

enum class PolyOp { add, sub, mul };

MultiPoly poly_arith(const MultiPoly& f, const MultiPoly& g, PolyOp kind);
MultiPoly scalar_mul(const MultiPoly& f, const QtRational& c);

/// K_{i,j}: swaps x_i and x_j.
MultiPoly exchange(const MultiPoly& f, int i, int j);
/// tau_i: x_i -> q x_i.
MultiPoly qshift(const MultiPoly& f, int i);
/// x_i -> 0; when i = N the result has N-1 variables.
MultiPoly set_var_zero(const MultiPoly& f, int i);

/// Maps variable k (1-based) of f to variable target[k-1] of a polynomial in
/// new_nvars variables.
MultiPoly relabel(const MultiPoly& f, int new_nvars, const std::vector<int>& target);
/// x_i -> scale_i * x_i with Q(q,t) scalars.
MultiPoly scale_vars(const MultiPoly& f, const std::vector<QtRational>& scale);
/// Exact value at x_i = values[i-1].
QtRational evaluate(const MultiPoly& f, const std::vector<QtRational>& values);

void check_same_nvars(const MultiPoly& f, const MultiPoly& g);
void check_index(const MultiPoly& f, int i);

std::ostream& operator<<(std::ostream& os, const MultiPoly& f);

}  // namespace msym
