#pragma once

/**
 * @file verify.hpp
 * @brief Named verification sweeps over labels, seeds and kernels.
 *
 * Each suite returns one result per identity, in a fixed order. Labels are
 * visited in enumeration order and random inputs come from a seeded
 * mt19937 reduced by modulo, so a report depends only on its options.
 */

#include "msym/kernels.hpp"
#include "msym/polyring.hpp"

#include <gmpxx.h>

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace msym {

/// Negative bounds mean "use the suite default".
struct VerifyOptions {
    int m_max = -1;
    int deg_max = -1;
    int N = -1;
    int m = -1;  // a single m instead of 0..m_max
    unsigned seed = 1;
    int samples = -1;
    /// Compare coefficients at (q0, t0) instead of in Q(q,t).
    std::optional<std::pair<mpq_class, mpq_class>> qt_point;
};

struct CheckResult {
    std::string identity;
    std::string bounds;
    bool passed = true;
    long cases = 0;
    /// Time spent on this identity; work shared by several identities is
    /// counted in each of them.
    double seconds = 0;
    /// The first failing inputs, in visiting order.
    std::vector<std::string> witnesses;
};

/// Exact equality, or equality of values at a point when one is set. A pole
/// at the point falls back to exact comparison.
class Comparator {
public:
    Comparator() = default;
    explicit Comparator(std::optional<std::pair<mpq_class, mpq_class>> pt) : pt_(std::move(pt)) {}

    bool probabilistic() const { return pt_.has_value(); }
    std::string mode() const;

    bool equal(const QtRational& a, const QtRational& b) const;
    bool equal(const MultiPoly& a, const MultiPoly& b) const;
    bool equal(const BiPoly& a, const BiPoly& b) const;

private:
    std::optional<std::pair<mpq_class, mpq_class>> pt_;
};

/// First differing term of a - b, for counterexample dumps.
std::string first_difference(const MultiPoly& a, const MultiPoly& b);

std::vector<std::string> suite_names();
bool suite_exists(const std::string& name);
/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts);

/// Random nonzero element of Q(q,t) with small numerator and an occasional (1 - q t^e) denominator.
QtRational random_scalar(std::mt19937& rng);
/// Random polynomial of total degree <= deg in n variables.
MultiPoly random_poly(std::mt19937& rng, int n, int deg, int terms);
/// Random nonzero combination of m-symmetric monomials of degree d in N variables.
MultiPoly random_msym(std::mt19937& rng, int m, int d, int N);

}  // namespace msym
