#include "msym/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace msym {

int size_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

int length_of(const Partition& p) {
    return static_cast<int>(std::count_if(p.begin(), p.end(), [](int x) { return x != 0; }));
}

Partition sorted_desc(const Composition& c) {
    Partition p = c;
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

Partition strip_zeros(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Rearrangement rearrange_and_w(const Composition& eta) {
    const int n = static_cast<int>(eta.size());
    Rearrangement r;
    r.w.resize(n);
    std::iota(r.w.begin(), r.w.end(), 1);
    std::stable_sort(r.w.begin(), r.w.end(), [&](int i, int j) { return eta[i - 1] > eta[j - 1]; });
    r.row.resize(n);
    r.plus.resize(n);
    for (int k = 0; k < n; ++k) {
        r.row[r.w[k] - 1] = k + 1;
        r.plus[k] = eta[r.w[k] - 1];
    }
    return r;
}

std::vector<int> row_function(const Composition& eta) { return rearrange_and_w(eta).row; }

int inv(const Composition& a) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] < a[j]) ++c;
    return c;
}

int coinv(const Composition& a) {
    const int m = static_cast<int>(a.size());
    return m * (m - 1) / 2 - inv(a);
}

int n_of(const Partition& p) {
    int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (size_of(mu) != size_of(lambda)) return false;
    const std::size_t n = std::max(mu.size(), lambda.size());
    int sm = 0, sl = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sm += i < mu.size() ? mu[i] : 0;
        sl += i < lambda.size() ? lambda[i] : 0;
        if (sm > sl) return false;
    }
    return true;
}

bool permutation_bruhat_leq(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("permutation length mismatch");
    std::vector<int> su, sv;
    for (std::size_t k = 0; k < u.size(); ++k) {
        su.insert(std::upper_bound(su.begin(), su.end(), u[k]), u[k]);
        sv.insert(std::upper_bound(sv.begin(), sv.end(), v[k]), v[k]);
        for (std::size_t j = 0; j <= k; ++j)
            if (su[j] > sv[j]) return false;
    }
    return true;
}

bool bruhat_less(const Composition& nu, const Composition& eta) {
    if (nu.size() != eta.size()) throw std::invalid_argument("bruhat_less: length mismatch");
    if (size_of(nu) != size_of(eta)) throw std::invalid_argument("bruhat_less: degree mismatch");
    if (nu == eta) return false;
    const Partition np = sorted_desc(nu);
    const Partition ep = sorted_desc(eta);
    if (np != ep) return dominance_leq(np, ep);
    return permutation_bruhat_leq(row_function(eta), row_function(nu));
}

std::vector<Composition> compositions(int degree, int length) {
    std::vector<Composition> out;
    if (length == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Composition c(length, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == length - 1) {
            c[pos] = left;
            out.push_back(c);
            return;
        }
        for (int v = left; v >= 0; --v) {
            c[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, degree);
    return out;
}

std::vector<Partition> partitions(int degree) {
    std::vector<Partition> out;
    Partition p;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(p);
            return;
        }
        for (int v = std::min(left, maxpart); v >= 1; --v) {
            p.push_back(v);
            rec(left - v, v);
            p.pop_back();
        }
    };
    rec(degree, degree);
    return out;
}

Partition MPartition::level(int i) const {
    if (i < 0 || i > m()) throw std::out_of_range("level index out of range");
    Partition p = lambda;
    for (int k = 0; k < m(); ++k) p.push_back(a[k] + (k < i ? 1 : 0));
    return strip_zeros(sorted_desc(p));
}

Composition MPartition::gamma(int N) const {
    if (N < length()) throw std::invalid_argument("gamma: N smaller than the length");
    Composition g = a;
    g.insert(g.end(), lambda.begin(), lambda.end());
    g.resize(N, 0);
    return g;
}

Composition MPartition::eta(int N) const {
    if (N < m()) throw std::invalid_argument("eta: N smaller than m");
    Composition e = a;
    for (int k = N - m(); k >= 1; --k) e.push_back(k <= static_cast<int>(lambda.size()) ? lambda[k - 1] : 0);
    return e;
}

std::string MPartition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ";";
    if (!lambda.empty()) os << " ";
    for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
    os << ")";
    return os.str();
}

namespace {

std::vector<int> parse_list(std::string_view s) {
    std::vector<int> out;
    std::string item;
    auto flush = [&]() {
        std::size_t b = item.find_first_not_of(' ');
        if (b == std::string::npos) {
            item.clear();
            return false;
        }
        std::size_t e = item.find_last_not_of(' ');
        const std::string tok = item.substr(b, e - b + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer '" + tok + "'");
        }
        if (used != tok.size() || v < 0) throw std::invalid_argument("bad integer '" + tok + "'");
        out.push_back(v);
        item.clear();
        return true;
    };
    for (char ch : s) {
        if (ch == ',') {
            if (!flush()) throw std::invalid_argument("empty list entry");
        } else {
            item += ch;
        }
    }
    if (!flush() && !out.empty()) throw std::invalid_argument("empty list entry");
    return out;
}

}  // namespace

MPartition MPartition::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.size() < 3 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("m-partition must look like (a1,...,am; l1,l2,...)");
    s = s.substr(1, s.size() - 2);
    const auto semi = s.find(';');
    if (semi == std::string_view::npos || s.find(';', semi + 1) != std::string_view::npos)
        throw std::invalid_argument("m-partition needs exactly one ';'");
    MPartition p{parse_list(s.substr(0, semi)), parse_list(s.substr(semi + 1))};
    for (std::size_t i = 0; i < p.lambda.size(); ++i)
        if (p.lambda[i] == 0 || (i && p.lambda[i] > p.lambda[i - 1]))
            throw std::invalid_argument("lambda must be a partition with positive parts");
    return p;
}

bool dominance_leq(const MPartition& omega, const MPartition& lambda) {
    if (omega.m() != lambda.m()) throw std::invalid_argument("dominance_leq: m mismatch");
    if (omega.degree() != lambda.degree()) throw std::invalid_argument("dominance_leq: degree mismatch");
    for (int i = 0; i <= omega.m(); ++i)
        if (!dominance_leq(omega.level(i), lambda.level(i))) return false;
    return true;
}

std::vector<MPartition> enumerate_mpartitions(int m, int degree, int max_sym_length) {
    if (m < 0 || degree < 0) throw std::invalid_argument("enumerate_mpartitions: negative input");
    std::vector<std::pair<int, MPartition>> keyed;
    for (int k = 0; k <= degree; ++k)
        for (const auto& a : compositions(k, m))
            for (const auto& lam : partitions(degree - k)) {
                if (max_sym_length >= 0 && length_of(lam) > max_sym_length) continue;
                MPartition p{a, lam};
                int key = 0;
                for (int i = 0; i <= m; ++i) key += n_of(p.level(i));
                keyed.emplace_back(key, std::move(p));
            }
    std::sort(keyed.begin(), keyed.end());
    std::vector<MPartition> out;
    out.reserve(keyed.size());
    for (auto& [key, p] : keyed) out.push_back(std::move(p));
    return out;
}

Diagram::Diagram(const MPartition& p) {
    struct Entry {
        int size, circle;
    };
    std::vector<Entry> entries;
    for (int i = 0; i < p.m(); ++i) entries.push_back({p.a[i], i + 1});
    for (int x : p.lambda)
        if (x > 0) entries.push_back({x, 0});
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        if (x.size != y.size) return x.size > y.size;
        return (x.circle != 0) > (y.circle != 0);
    });
    circle_row_.resize(p.m());
    for (std::size_t r = 0; r < entries.size(); ++r) {
        rows_.push_back({entries[r].size, entries[r].circle});
        if (entries[r].circle) circle_row_[entries[r].circle - 1] = static_cast<int>(r) + 1;
    }
}

std::vector<Cell> Diagram::squares() const {
    std::vector<Cell> out;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (int j = 1; j <= rows_[r].size; ++j) out.push_back({static_cast<int>(r) + 1, j, false, 0});
    return out;
}

std::vector<Cell> Diagram::all_cells() const {
    std::vector<Cell> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (int j = 1; j <= rows_[r].size; ++j) out.push_back({static_cast<int>(r) + 1, j, false, 0});
        if (rows_[r].circle) out.push_back({static_cast<int>(r) + 1, rows_[r].size + 1, true, rows_[r].circle});
    }
    return out;
}

bool Diagram::contains(const Cell& s) const {
    if (s.row < 1 || s.row > static_cast<int>(rows_.size()) || s.col < 1) return false;
    const Row& r = rows_[s.row - 1];
    if (s.is_circle) return r.circle != 0 && s.col == r.size + 1 && (s.label == 0 || s.label == r.circle);
    return s.col <= r.size;
}

int Diagram::stat(const Cell& s, Stat which) const {
    if (!contains(s)) throw std::out_of_range("cell outside the diagram");
    if (which == Stat::coarm) return s.col - 1;
    if (which == Stat::coleg) return s.row - 1;
    if (s.is_circle) return 0;
    const Row& row = rows_[s.row - 1];
    switch (which) {
        case Stat::arm: return row.size - s.col + (row.circle ? 1 : 0);
        case Stat::arm_tilde: return row.size - s.col;
        case Stat::leg:
        case Stat::leg_tilde: {
            int squares_below = 0;
            int circles_smaller = 0;
            int circles_all = 0;
            for (std::size_t r = s.row; r < rows_.size(); ++r) {
                if (rows_[r].size >= s.col) ++squares_below;
                else if (rows_[r].circle && rows_[r].size + 1 == s.col) {
                    ++circles_all;
                    if (row.circle && rows_[r].circle < row.circle) ++circles_smaller;
                }
            }
            if (which == Stat::leg || row.circle) return squares_below + circles_smaller;
            return squares_below + circles_all;
        }
        default: break;
    }
    throw std::logic_error("unreachable");
}

int diagram_stats(const MPartition& p, const Cell& s, Stat which) { return Diagram(p).stat(s, which); }

}  // namespace msym
