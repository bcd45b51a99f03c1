#pragma once

/**
 * @file combinatorics.hpp
 * @brief Compositions, partitions, m-partitions and their circled diagrams.
 */

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace msym {

using Composition = std::vector<int>;
/// Weakly decreasing; trailing zeros are tolerated by every comparator.
using Partition = std::vector<int>;

int size_of(const std::vector<int>& v);
/// Number of nonzero parts.
int length_of(const Partition& p);
Partition sorted_desc(const Composition& c);
Partition strip_zeros(Partition p);

struct Rearrangement {
    Partition plus;        // eta^+, same length as eta
    std::vector<int> row;  // r_eta(i), 1-based
    std::vector<int> w;    // inverse of row: w[k-1] = i with r_eta(i) = k
};

/// Rows of equal entries are ranked left to right.
Rearrangement rearrange_and_w(const Composition& eta);
std::vector<int> row_function(const Composition& eta);

int inv(const Composition& a);    // #{i<j : a_i < a_j}
int coinv(const Composition& a);  // #{i<j : a_i >= a_j}
int n_of(const Partition& p);     // sum (i-1) p_i

bool dominance_leq(const Partition& mu, const Partition& lambda);
/// Bruhat order on permutations (one-line, 1-based) via the tableau criterion.
bool permutation_bruhat_leq(const std::vector<int>& u, const std::vector<int>& v);
/// nu strictly below eta in the Bruhat order on compositions.
bool bruhat_less(const Composition& nu, const Composition& eta);

std::vector<Composition> compositions(int degree, int length);
/// All partitions of degree in reverse lexicographic order.
std::vector<Partition> partitions(int degree);

struct MPartition {
    Composition a;
    Partition lambda;

    int m() const { return static_cast<int>(a.size()); }
    int degree() const { return size_of(a) + size_of(lambda); }
    int length() const { return m() + length_of(lambda); }
    /// Lambda^{(i)}: circles 1..i turned into squares.
    Partition level(int i) const;
    /// gamma = (a, lambda, 0^{N-m-l}); requires N >= length().
    Composition gamma(int N) const;
    /// eta_{Lambda,N} = (a, lambda_{N-m}, ..., lambda_1).
    Composition eta(int N) const;
    int n() const { return n_of(level(m())); }

    std::string to_string() const;
    static MPartition parse(std::string_view text);

    friend bool operator==(const MPartition&, const MPartition&) = default;
    friend auto operator<=>(const MPartition&, const MPartition&) = default;
};

/// Omega <= Lambda in the m-partition dominance order.
bool dominance_leq(const MPartition& omega, const MPartition& lambda);

/// Sorted so that dominance-larger labels come first; ties by (a, lambda).
std::vector<MPartition> enumerate_mpartitions(int m, int degree, int max_sym_length = -1);

struct Cell {
    int row = 0;
    int col = 0;
    bool is_circle = false;
    int label = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

enum class Stat { arm, arm_tilde, leg, leg_tilde, coarm, coleg };

class Diagram {
public:
    struct Row {
        int size;
        int circle;  // label, 0 for a symmetric row
    };

    explicit Diagram(const MPartition& p);

    const std::vector<Row>& rows() const { return rows_; }
    /// Row (1-based) carrying circle i.
    int circle_row(int i) const { return circle_row_[i - 1]; }
    /// Squares only, row by row.
    std::vector<Cell> squares() const;
    /// Squares and circles.
    std::vector<Cell> all_cells() const;
    bool contains(const Cell& s) const;
    int stat(const Cell& s, Stat which) const;

private:
    std::vector<Row> rows_;
    std::vector<int> circle_row_;
};

int diagram_stats(const MPartition& p, const Cell& s, Stat which);

}  // namespace msym
