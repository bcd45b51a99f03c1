#pragma once

/**
 * @file hecke_ops.hpp
 * @brief Hecke generators, Cherednik operators and the t-symmetrizer.
 *
 * Every operator acts on a block of consecutive variables, by default all of
 * them. Indices are 1-based and relative to the block, so a two-alphabet
 * polynomial can be acted on in its x or y variables separately.
 */

#include "msym/polyring.hpp"

#include <vector>

namespace msym {

struct Block {
    int offset = 0;
    int n = -1;  // -1: every variable after offset
};

struct OperatorContext {
    int nvars = 0;
    int m = 0;
    int offset = 0;
    Block block() const { return {offset, nvars}; }
};

MultiPoly apply_T(const MultiPoly& f, int i, Block b = {});
MultiPoly apply_Tbar(const MultiPoly& f, int i, Block b = {});
/// T_{i_1} ... T_{i_k} f for word (i_1..i_k); the last letter acts first.
MultiPoly apply_T_word(const MultiPoly& f, const std::vector<int>& word, Block b = {});
MultiPoly apply_Tbar_word(const MultiPoly& f, const std::vector<int>& word, Block b = {});
/// A reduced word of the longest permutation of S_m.
std::vector<int> longest_word(int m);

/// omega f(x_1..x_N) = f(q x_N, x_1, ..., x_{N-1}).
MultiPoly apply_omega(const MultiPoly& f, Block b = {});
MultiPoly apply_Y(const MultiPoly& f, int i, Block b = {});
MultiPoly apply_Phi(const MultiPoly& f, Block b = {});
/// D = Y_{m+1} + ... + Y_N - sum_{i=m+1}^N t^{1-i}.
MultiPoly apply_D(const OperatorContext& ctx, const MultiPoly& f);

enum class SymAlgo {
    left_prime,  // L'_{m+1,N} S_{m+1,N-1}
    right,       // S_{m+2,N} R_{m+1,N}
    left,        // L_{m+1,N} S_{m+2,N}
    naive,       // sum of T_sigma over S_{N-m}
};

/// S^t_{m+1,N} on the block of ctx.
MultiPoly symmetrize_t(const OperatorContext& ctx, const MultiPoly& f, SymAlgo algo = SymAlgo::left_prime);

}  // namespace msym
