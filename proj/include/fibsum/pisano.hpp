#pragma once

#include <fibsum/integer.hpp>

#include <map>
#include <string>

namespace fibsum {

enum class PeriodMethod { iterative_search, divisor_refinement };

const char* period_method_name(PeriodMethod method);

struct PisanoRecord {
    Integer modulus;
    Integer period;
    PeriodMethod method;
};

// Largest modulus accepted by the iterative search. The walk visits up to
// 6m states, so this keeps a single call well under a second.
inline constexpr long kIterativeSearchBound = 10'000'000;

// True iff pi(m) | t, via the pair characterization F_t == 0, F_{t+1} == 1
// (mod m). m >= 1, t >= 1.
bool is_period_multiple(const Integer& m, const Integer& t);

// Minimal period by stepping (F_i, F_{i+1}) mod m until the pair returns to
// (0, 1). Aborts past the classical maximum 6m.
PisanoRecord pisano(const Integer& m);

// pi(F_n) for even n > 1, found by testing divisors of 2n in increasing
// order; the first period multiple among them is the period since
// pi(F_n) | 2n for even n.
PisanoRecord pisano_fib_even(long n);

// Checks pi(F_n) | 2n directly through is_period_multiple(F_n, 2n) with no
// period search. n even, n > 1.
bool check_prop_pisano(long n);

// Wall: pi(p) | 2(p+1) for primes p == +-2 (mod 5).
bool check_wall(const Integer& p);

// pi(4p) = lcm(6, pi(p)) for odd primes p.
bool check_lcm_rule(const Integer& p);

struct RatioBound {
    Rational observed;  // pi(F_M) / F_M
    Rational bound;     // 2M / F_M
};

// Exact rationals witnessing pi(F_M)/F_M <= 2M/F_M for even M > 1.
RatioBound ratio_bound(long M);

// File-backed memo of computed periods, one "modulus period method" line
// per record. Loading validates each entry against is_period_multiple.
class PisanoCache {
  public:
    PisanoCache() = default;

    void load(const std::string& path);
    void save(const std::string& path) const;

    PisanoRecord get(const Integer& m);
    std::size_t size() const { return records_.size(); }

  private:
    std::map<Integer, PisanoRecord> records_;
};

}  // namespace fibsum
