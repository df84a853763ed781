#pragma once

#include <fibsum/integer.hpp>

#include <cstdint>
#include <vector>

namespace fibsum {

// Deterministic primality for 0 <= n < 2^64 (fixed Miller-Rabin base set,
// exact at this range). Larger inputs are rejected.
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

// Legendre symbol (5/p) for odd primes p != 5: +1 when p == +-1 (mod 5),
// -1 when p == +-2 (mod 5).
int legendre5(const Integer& p);

// Euler-criterion evaluation 5^{(p-1)/2} mod p mapped to {-1, +1};
// cross-check for legendre5, never the primary path.
int legendre5_euler(const Integer& p);

struct ResidueReport {
    Integer p;
    Integer sp_mod_p;  // S_p mod p
    int character5;    // (5/p); 0 recorded at p = 5
    bool divisible;    // sp_mod_p == 0
};

// Residue of S_p modulo an odd prime p.
ResidueReport sp_residue(const Integer& p);

// Odd prime p with p == 2 (mod 3) and p == +-2 (mod 5): the hypotheses of
// the {2p, 4p} family. The constructor validates all three conditions.
struct QualifyingPrime {
    Integer p;
    int residue_mod3;  // always 2
    int residue_mod5;  // 2 or 3

    explicit QualifyingPrime(const Integer& prime);
};

// All qualifying primes <= limit, ascending.
std::vector<QualifyingPrime> qualifying_primes(const Integer& limit);

}  // namespace fibsum
