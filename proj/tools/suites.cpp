#include "suites.hpp"

#include <fibsum/fibcore.hpp>
#include <fibsum/identities.hpp>
#include <fibsum/pisano.hpp>
#include <fibsum/primes.hpp>
#include <fibsum/selfsum.hpp>

#include <algorithm>
#include <ostream>
#include <set>
#include <vector>

namespace fibsum::cli {

namespace {

bool report(std::ostream& out, const char* name, long cases, const std::string& failure) {
    if (failure.empty()) {
        out << "ok " << name << " (" << cases << " cases)\n";
        return true;
    }
    out << "FAIL " << name << ": " << failure << "\n";
    return false;
}

std::string describe(const IdentityVerdict& v) {
    return v.context + " lhs=" + v.lhs.get_str() + " rhs=" + v.rhs.get_str();
}

}  // namespace

bool suite_identities(std::ostream& out) {
    bool all_ok = true;
    {
        long cases = 0;
        std::string failure;
        for (long n = -50; n <= 500 && failure.empty(); ++n, ++cases)
            if (auto v = check_cassini(n); !v.holds) failure = describe(v);
        all_ok &= report(out, "cassini[-50..500]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long n = 0; n <= 500 && failure.empty(); ++n, ++cases)
            if (auto v = check_addition(n); !v.holds) failure = describe(v);
        all_ok &= report(out, "addition[0..500]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long a = 1; a <= 200 && failure.empty(); ++a)
            for (long b = a % 2; b < a && failure.empty(); b += 2, ++cases)
                if (auto v = check_luca_difference(a, b); !v.holds) failure = describe(v);
        all_ok &= report(out, "luca-difference[b<a<=200]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long n = 0; n <= 5000 && failure.empty(); ++n, ++cases)
            if (auto v = check_sum_identity(n); !v.holds) failure = describe(v);
        all_ok &= report(out, "sum-identity[0..5000]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long a = 1; a <= 200 && failure.empty(); ++a)
            for (long b = 1; b <= 200 && failure.empty(); ++b, ++cases)
                if (auto v = check_strong_divisibility(a, b); !v.holds) failure = describe(v);
        all_ok &= report(out, "strong-divisibility[1..200]^2", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long k = 1; k <= 3000 && failure.empty(); ++k, ++cases)
            if (auto v = check_parity_rule(k); !v.holds) failure = describe(v);
        all_ok &= report(out, "parity-rule[1..3000]", cases, failure);
    }
    return all_ok;
}

bool suite_pisano(std::ostream& out) {
    bool all_ok = true;
    {
        // Minimality: an independent pair walk must first land on (0, 1) at
        // exactly pisano(m).period.
        long cases = 0;
        std::string failure;
        for (long m = 1; m <= 1000 && failure.empty(); ++m, ++cases) {
            Integer period = pisano(m).period;
            if (m == 1) {
                if (period != 1) failure = "pisano(1) = " + period.get_str();
                continue;
            }
            Integer a = 1, b = 1, t = 1;
            while (!(a == 0 && b == 1)) {
                Integer next = (a + b) % m;
                a = b;
                b = next;
                ++t;
            }
            if (t != period)
                failure = "m=" + std::to_string(m) + ": walk returns at t=" + t.get_str() +
                          " but pisano reports " + period.get_str();
            else if (!is_period_multiple(m, period))
                failure = "m=" + std::to_string(m) + ": reported period fails the congruence";
        }
        all_ok &= report(out, "pisano-minimality[1..1000]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long n = 4; n <= 30 && failure.empty(); n += 2, ++cases) {
            Integer refined = pisano_fib_even(n).period;
            Integer searched = pisano(fib(n)).period;
            if (refined != searched)
                failure = "n=" + std::to_string(n) + ": divisor-refinement " +
                          refined.get_str() + " != iterative " + searched.get_str();
        }
        all_ok &= report(out, "pisano-fib-agreement[even 4..30]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long n = 2; n <= 2000 && failure.empty(); n += 2, ++cases)
            if (!check_prop_pisano(n))
                failure = "pi(F_n) does not divide 2n at n=" + std::to_string(n);
        all_ok &= report(out, "prop-pisano[even 2..2000]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long p = 2; p < 2000 && failure.empty(); ++p) {
            if (!is_prime_u64(p) || (p % 5 != 2 && p % 5 != 3)) continue;
            ++cases;
            if (!check_wall(p)) failure = "pi(p) does not divide 2(p+1) at p=" + std::to_string(p);
        }
        all_ok &= report(out, "wall[p<2000]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long p = 3; p < 500 && failure.empty(); p += 2) {
            if (!is_prime_u64(p)) continue;
            ++cases;
            if (!check_lcm_rule(p))
                failure = "pi(4p) != lcm(6, pi(p)) at p=" + std::to_string(p);
        }
        all_ok &= report(out, "lcm-rule[odd p<500]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        RatioBound prev = ratio_bound(4);
        if (!(prev.observed <= prev.bound)) failure = "observed > bound at M=4";
        for (long M = 6; M <= 100 && failure.empty(); M += 2, ++cases) {
            RatioBound cur = ratio_bound(M);
            if (!(cur.observed <= cur.bound))
                failure = "observed > bound at M=" + std::to_string(M);
            else if (!(cur.bound < prev.bound))
                failure = "bound not strictly decreasing at M=" + std::to_string(M);
            prev = cur;
        }
        all_ok &= report(out, "ratio-bound[even 4..100]", cases, failure);
    }
    return all_ok;
}

bool suite_primes(std::ostream& out) {
    bool all_ok = true;
    {
        // Residue classification is confirmed by direct summation below 100
        // before being asserted across the full range.
        long cases = 0;
        std::string failure;
        for (long p = 3; p < 10000 && failure.empty(); p += 2) {
            if (!is_prime_u64(p)) continue;
            ++cases;
            ResidueReport rep = sp_residue(p);
            if (rep.divisible) {
                failure = "S_p divisible by p at p=" + std::to_string(p);
                break;
            }
            if (p < 100) {
                Integer direct = 0, a = 1, b = 1;
                for (long i = 1; i <= p; ++i) {
                    direct += a;
                    Integer next = a + b;
                    a = b;
                    b = next;
                }
                if (mod_floor(direct, p) != rep.sp_mod_p) {
                    failure = "summation oracle disagrees at p=" + std::to_string(p);
                    break;
                }
            }
            if (p == 5) continue;  // character 0, outside both branches
            Integer expected = rep.character5 == 1 ? Integer(1) : Integer(p - 2);
            if (rep.sp_mod_p != expected)
                failure = "S_p mod p = " + rep.sp_mod_p.get_str() + " at p=" +
                          std::to_string(p) + ", expected " + expected.get_str() +
                          " on character " + std::to_string(rep.character5);
        }
        all_ok &= report(out, "sp-residues[p<10^4]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long p = 3; p < 10000 && failure.empty(); p += 2) {
            if (p == 5 || !is_prime_u64(p)) continue;
            ++cases;
            if (legendre5(p) != legendre5_euler(p))
                failure = "table/Euler mismatch at p=" + std::to_string(p);
        }
        all_ok &= report(out, "legendre5-euler[p<10^4]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        std::vector<long> direct;
        for (long p = 3; p <= 100000; p += 2)
            if (is_prime_u64(p) && p % 3 == 2 && (p % 5 == 2 || p % 5 == 3))
                direct.push_back(p);
        auto emitted = qualifying_primes(100000);
        if (emitted.size() != direct.size()) {
            failure = "filter emits " + std::to_string(emitted.size()) + " primes, direct " +
                      std::to_string(direct.size());
        } else {
            for (std::size_t i = 0; i < emitted.size() && failure.empty(); ++i, ++cases) {
                const QualifyingPrime& q = emitted[i];
                long r15 = q.residue_mod5 == 2 ? 2 : 8;  // CRT of (2 mod 3, r5 mod 5)
                if (q.p != direct[i])
                    failure = "mismatch at position " + std::to_string(i) + ": " +
                              q.p.get_str() + " vs " + std::to_string(direct[i]);
                else if (q.residue_mod3 != 2 || (q.residue_mod5 != 2 && q.residue_mod5 != 3) ||
                         mod_floor(q.p, 15) != r15)
                    failure = "invariant violated at p=" + q.p.get_str();
            }
        }
        all_ok &= report(out, "qualifying-primes[<=10^5]", cases, failure);
    }
    return all_ok;
}

bool suite_selfsum(std::ostream& out) {
    bool all_ok = true;
    {
        long cases = 0;
        std::string failure;
        for (long k = 2; k <= 300 && failure.empty(); k += 2, ++cases) {
            bool reduced = is_self_summable(k, EvalStrategy::period_reduced).verdict;
            bool direct = is_self_summable(k, EvalStrategy::direct_big_index).verdict;
            if (reduced != direct)
                failure = "strategies disagree at k=" + std::to_string(k);
        }
        all_ok &= report(out, "strategy-agreement[even k<=300]", cases, failure);
    }
    {
        // Literal definition: sum F_1..F_{F_k} mod F_k by the pair recurrence.
        long cases = 0;
        std::string failure;
        for (long k = 1; k <= 25 && failure.empty(); ++k, ++cases) {
            Integer fk = fib(k);
            Integer total = 0, a = mod_floor(1, fk), b = a;
            for (Integer i = 1; i <= fk; ++i) {
                total += a;
                if (total >= fk) total -= fk;
                Integer next = a + b;
                if (next >= fk) next -= fk;
                a = b;
                b = next;
            }
            if ((total == 0) != is_self_summable(k).verdict)
                failure = "reformulation disagrees with direct summation at k=" +
                          std::to_string(k);
        }
        all_ok &= report(out, "literal-definition[k<=25]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        std::set<long> odd_hits;
        for (const auto& rec : scan_odd_self_summable(600)) odd_hits.insert(rec.k);
        for (const auto& q : qualifying_primes(150)) {
            for (const auto& cert : theorem_family(q)) {
                ++cases;
                long n = to_long(cert.n, "family member");
                if (!odd_hits.count(n)) {
                    failure = "family member n=" + std::to_string(n) +
                              " missing from the odd scan";
                    break;
                }
            }
            if (!failure.empty()) break;
        }
        all_ok &= report(out, "theorem-coverage[q(150) in odd(600)]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long k = 1; k <= 300 && failure.empty(); ++k, ++cases)
            if (is_self_summable(k).fib_k_odd != (k % 3 != 0))
                failure = "parity flag wrong at k=" + std::to_string(k);
        all_ok &= report(out, "parity-consistency[k<=300]", cases, failure);
    }
    {
        long cases = 0;
        std::string failure;
        for (long j = 0; j <= 15 && failure.empty(); ++j, ++cases)
            if (!check_even_family(j))
                failure = "3*2^(j+3) fails to divide its sum at j=" + std::to_string(j);
        all_ok &= report(out, "even-family[j<=15]", cases, failure);
    }
    {
        std::string failure;
        std::vector<long> hits;
        for (long n = 1; n <= 100; ++n)
            if (is_self_fibonacci(n)) hits.push_back(n);
        std::vector<long> expected = {1, 5, 12, 24, 25, 36, 48, 60, 72, 96};
        if (hits != expected) {
            failure = "n<=100 self-Fibonacci list is {";
            for (long n : hits) failure += std::to_string(n) + " ";
            failure += "}";
        }
        all_ok &= report(out, "self-fibonacci[n<=100]", 100, failure);
    }
    return all_ok;
}

bool suite_all(std::ostream& out) {
    bool ok = suite_identities(out);
    ok &= suite_pisano(out);
    ok &= suite_primes(out);
    ok &= suite_selfsum(out);
    return ok;
}

}  // namespace fibsum::cli
