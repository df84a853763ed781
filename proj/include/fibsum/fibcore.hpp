#pragma once

/**
 * Fibonacci / Lucas evaluation, exact and modular.
 *
 * Indexing convention: F_1 = F_2 = 1, F_0 = 0, extended to negative indices
 * by F_{-n} = (-1)^{n+1} F_n, so F_{n+2} = F_{n+1} + F_n holds for every
 * integer n. Lucas numbers are L_n = F_{n-1} + F_{n+1} (L_0 = 2, L_1 = 1).
 *
 * All evaluation — exact or modular — runs through one fast-doubling kernel
 * driven by the bits of the index, most significant first:
 *
 *     F_{2j}   = F_j * (2 F_{j+1} - F_j)
 *     F_{2j+1} = F_j^2 + F_{j+1}^2
 *
 * so the index may itself be an arbitrary-precision integer (the modular
 * entry points are routinely called with indices like F_k + 2).
 */

#include <fibsum/integer.hpp>

namespace fibsum {

// Consecutive Fibonacci residues (F_n mod m, F_{n+1} mod m); the index n is
// carried by context. Both residues lie in [0, modulus).
struct FibPairMod {
    Integer modulus;
    Integer fn;
    Integer fnext;
};

// F_n for any integer n (exact).
Integer fib(const Integer& n);

// L_n for any integer n (exact).
Integer lucas(const Integer& n);

// (F_n mod m, F_{n+1} mod m) in O(bits(n)) modular multiplications.
// Requires n >= 0 and m >= 1.
FibPairMod fib_pair_mod(const Integer& n, const Integer& m);

// F_n mod m, in [0, m). Requires n >= 0 and m >= 1.
Integer fib_mod(const Integer& n, const Integer& m);

// S_n = F_1 + ... + F_n = F_{n+2} - 1. Requires n >= 0.
Integer sum_fib(const Integer& n);

// S_n mod m, in [0, m). Requires n >= 0 and m >= 1.
Integer sum_fib_mod(const Integer& n, const Integer& m);

}  // namespace fibsum
