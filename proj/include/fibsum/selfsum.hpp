#pragma once

#include <fibsum/integer.hpp>
#include <fibsum/primes.hpp>

#include <vector>

namespace fibsum {

// How the divisibility F_k | (F_{F_k+2} - 1) was evaluated:
//   period_reduced   — index (F_k + 2) mod 2k, valid for even k because
//                      pi(F_k) | 2k;
//   direct_big_index — fast doubling straight at index F_k + 2.
enum class EvalStrategy { period_reduced, direct_big_index };

const char* eval_strategy_name(EvalStrategy strategy);

struct SelfSummableRecord {
    long k;
    bool fib_k_odd;
    bool verdict;  // F_k | S_{F_k}
    EvalStrategy strategy;
};

// Is F_k self-summable, i.e. does F_k divide S_{F_k}? Picks the strategy
// by parity of k; the two-argument form forces one (used by the
// strategy-agreement sweep).
SelfSummableRecord is_self_summable(long k);
SelfSummableRecord is_self_summable(long k, EvalStrategy strategy);

// All k <= limit with a true verdict, ascending.
std::vector<SelfSummableRecord> scan_self_summable(long limit);

// The odd-F_k sublist (k not divisible by 3).
std::vector<SelfSummableRecord> scan_odd_self_summable(long limit);

// Certificate for one member n of the {2p, 4p} family: F_n is odd, the
// divisibility F_n | S_{F_n} holds, and F_n mod 2n is recorded.
struct FamilyCertificate {
    QualifyingPrime p;
    Integer n;  // 2p or 4p
    bool fib_n_odd;
    Integer congruence_residue;  // F_n mod 2n, in [0, 2n)
    bool divisibility_holds;
};

// Certificates for n = 2p and n = 4p.
std::vector<FamilyCertificate> theorem_family(const QualifyingPrime& p);

// Does m = 3 * 2^{j+3} divide S_m?
bool check_even_family(long j);

// Does n divide F_n?
bool is_self_fibonacci(const Integer& n);

}  // namespace fibsum
