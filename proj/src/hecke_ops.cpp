#include "msym/hecke_ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace msym {

namespace {

Block resolve(const MultiPoly& f, Block b) {
    if (b.n < 0) b.n = f.nvars() - b.offset;
    if (b.offset < 0 || b.n < 0 || b.offset + b.n > f.nvars()) throw std::out_of_range("operator block out of range");
    return b;
}

void check_generator(const Block& b, int i) {
    if (i < 1 || i > b.n - 1)
        throw std::out_of_range("Hecke generator index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(b.n - 1));
}

// S^t over block variables lo..hi (1-based, inclusive).
MultiPoly sym_range(const MultiPoly& f, int lo, int hi, SymAlgo algo, const Block& b) {
    if (hi <= lo || f.is_zero()) return f;
    switch (algo) {
        case SymAlgo::left_prime: {
            const MultiPoly g = sym_range(f, lo, hi - 1, algo, b);
            PolyBuilder out(f.nvars());
            out.add(g);
            MultiPoly h = g;
            for (int k = hi - 1; k >= lo; --k) {
                h = apply_T(h, k, b);
                out.add(h);
            }
            return out.build();
        }
        case SymAlgo::right: {
            MultiPoly h = f;
            for (int k = hi - 1; k >= lo; --k) h = f + apply_T(h, k, b);
            return sym_range(h, lo + 1, hi, algo, b);
        }
        case SymAlgo::left: {
            const MultiPoly g = sym_range(f, lo + 1, hi, algo, b);
            PolyBuilder out(f.nvars());
            out.add(g);
            MultiPoly h = g;
            for (int k = lo; k <= hi - 1; ++k) {
                h = apply_T(h, k, b);
                out.add(h);
            }
            return out.build();
        }
        case SymAlgo::naive: {
            const int n = hi - lo + 1;
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            PolyBuilder out(f.nvars());
            do {
                std::vector<int> p = perm;
                std::vector<int> word;
                for (bool moved = true; moved;) {
                    moved = false;
                    for (int j = 0; j + 1 < n; ++j)
                        if (p[j] > p[j + 1]) {
                            std::swap(p[j], p[j + 1]);
                            word.push_back(j + lo);
                            moved = true;
                        }
                }
                out.add(apply_T_word(f, word, b));
            } while (std::next_permutation(perm.begin(), perm.end()));
            return out.build();
        }
    }
    throw std::invalid_argument("unknown symmetrizer algorithm");
}

}  // namespace

MultiPoly apply_T(const MultiPoly& f, int i, Block b) {
    b = resolve(f, b);
    check_generator(b, i);
    const int xi = b.offset + i - 1;
    const int yi = xi + 1;
    const QtRational t = QtRational::t();
    const QtRational t_minus_1 = t - QtRational(1);
    const QtRational one_minus_t = QtRational(1) - t;
    PolyBuilder out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        const int a = e[xi];
        const int bb = e[yi];
        if (a == bb) {
            out.add(e, c * t);
            continue;
        }
        Exponent x = e;
        if (a < bb) {
            const QtRational ct = c * t_minus_1;
            for (int k = 0; k < bb - a; ++k) {
                x[xi] = static_cast<std::uint8_t>(a + k);
                x[yi] = static_cast<std::uint8_t>(bb - k);
                out.add(x, ct);
            }
            x[xi] = static_cast<std::uint8_t>(bb);
            x[yi] = static_cast<std::uint8_t>(a);
            out.add(x, c * t);
        } else {
            x[xi] = static_cast<std::uint8_t>(bb);
            x[yi] = static_cast<std::uint8_t>(a);
            out.add(x, c);
            if (a - bb > 1) {
                const QtRational ct = c * one_minus_t;
                for (int k = 1; k < a - bb; ++k) {
                    x[xi] = static_cast<std::uint8_t>(bb + k);
                    x[yi] = static_cast<std::uint8_t>(a - k);
                    out.add(x, ct);
                }
            }
        }
    }
    return out.build();
}

MultiPoly apply_Tbar(const MultiPoly& f, int i, Block b) {
    const QtRational tinv = QtRational::t_pow(-1);
    PolyBuilder out(f.nvars());
    out.add(apply_T(f, i, b), tinv);
    out.add(f, tinv - QtRational(1));
    return out.build();
}

MultiPoly apply_T_word(const MultiPoly& f, const std::vector<int>& word, Block b) {
    MultiPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply_T(g, *it, b);
    return g;
}

MultiPoly apply_Tbar_word(const MultiPoly& f, const std::vector<int>& word, Block b) {
    MultiPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply_Tbar(g, *it, b);
    return g;
}

std::vector<int> longest_word(int m) {
    std::vector<int> w;
    for (int k = 1; k < m; ++k)
        for (int j = k; j >= 1; --j) w.push_back(j);
    return w;
}

MultiPoly apply_omega(const MultiPoly& f, Block b) {
    b = resolve(f, b);
    if (b.n == 0) return f;
    MultiPoly r(f.nvars());
    const int first = b.offset;
    const int last = b.offset + b.n - 1;
    for (const auto& [e, c] : f.terms()) {
        Exponent x = e;
        for (int k = first; k < last; ++k) x[k] = e[k + 1];
        x[last] = e[first];
        r.add_term(x, e[first] ? c * QtRational::q_pow(e[first]) : c);
    }
    return r;
}

MultiPoly apply_Y(const MultiPoly& f, int i, Block b) {
    b = resolve(f, b);
    const int N = b.n;
    if (i < 1 || i > N) throw std::out_of_range("Y index out of range");
    MultiPoly g = f;
    for (int j = i - 1; j >= 1; --j) g = apply_Tbar(g, j, b);
    g = apply_omega(g, b);
    for (int j = N - 1; j >= i; --j) g = apply_T(g, j, b);
    return g * QtRational::t_pow(i - N);
}

MultiPoly apply_Phi(const MultiPoly& f, Block b) {
    b = resolve(f, b);
    const int N = b.n;
    if (N < 1) throw std::out_of_range("Phi needs at least one variable");
    MultiPoly g(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exponent x = e;
        x[b.offset] = static_cast<std::uint8_t>(x[b.offset] + 1);
        g.add_term(x, c);
    }
    for (int j = 1; j <= N - 1; ++j) g = apply_T(g, j, b);
    return g * QtRational::t_pow(1 - N);
}

MultiPoly apply_D(const OperatorContext& ctx, const MultiPoly& f) {
    if (ctx.m < 0 || ctx.m >= ctx.nvars) throw std::invalid_argument("apply_D requires 0 <= m < N");
    const Block b = ctx.block();
    PolyBuilder out(f.nvars());
    std::vector<QtRational> consts;
    for (int i = ctx.m + 1; i <= ctx.nvars; ++i) {
        out.add(apply_Y(f, i, b));
        consts.push_back(QtRational::t_pow(1 - i));
    }
    out.add(f, -sum(consts));
    return out.build();
}

MultiPoly symmetrize_t(const OperatorContext& ctx, const MultiPoly& f, SymAlgo algo) {
    if (ctx.m < 0 || ctx.m > ctx.nvars) throw std::invalid_argument("symmetrize_t requires 0 <= m <= N");
    const Block b = resolve(f, ctx.block());
    return sym_range(f, ctx.m + 1, ctx.nvars, algo, b);
}

}  // namespace msym
