#pragma once

#include <fibsum/integer.hpp>

#include <string>

namespace fibsum {

// Verdict of one identity check: both sides are carried so a failure is
// diagnosable from the verdict alone.
struct IdentityVerdict {
    bool holds;
    Integer lhs;
    Integer rhs;
    std::string context;
};

// Cassini: F_{n+1}^2 - F_n F_{n+2} = (-1)^n, any integer n.
IdentityVerdict check_cassini(const Integer& n);

// Index addition specialized to F_{2n+1} = F_n^2 + F_{n+1}^2, n >= 0.
IdentityVerdict check_addition(const Integer& n);

// Difference F_a - F_b factored through u = (a-b)/2, v = (a+b)/2:
//   a == b     (mod 4)  ->  F_a - F_b = F_u L_v
//   a == b + 2 (mod 4)  ->  F_a - F_b = F_v L_u
// Requires a > b >= 0 with a == b (mod 2).
IdentityVerdict check_luca_difference(const Integer& a, const Integer& b);

// S_n built by direct summation against the closed form F_{n+2} - 1.
IdentityVerdict check_sum_identity(const Integer& n);

// Strong divisibility: gcd(F_a, F_b) = F_{gcd(a,b)}, a, b >= 1.
IdentityVerdict check_strong_divisibility(const Integer& a, const Integer& b);

// F_k is odd iff k is not a multiple of 3, k >= 1.
IdentityVerdict check_parity_rule(const Integer& k);

}  // namespace fibsum
