#include <fibsum/identities.hpp>

#include <fibsum/fibcore.hpp>

namespace fibsum {

namespace {

IdentityVerdict verdict(Integer lhs, Integer rhs, std::string context) {
    bool holds = (lhs == rhs);
    return IdentityVerdict{holds, std::move(lhs), std::move(rhs), std::move(context)};
}

}  // namespace

IdentityVerdict check_cassini(const Integer& n) {
    Integer fn = fib(n);
    Integer lhs = fib(n + 1) * fib(n + 1) - fn * fib(n + 2);
    Integer rhs = mpz_even_p(n.get_mpz_t()) ? 1 : -1;
    return verdict(std::move(lhs), std::move(rhs),
                   "cassini(n=" + n.get_str() + ")");
}

IdentityVerdict check_addition(const Integer& n) {
    if (n < 0) throw std::invalid_argument("check_addition: n must be >= 0");
    Integer fn = fib(n);
    Integer fn1 = fib(n + 1);
    return verdict(fib(2 * n + 1), fn * fn + fn1 * fn1,
                   "addition(n=" + n.get_str() + ")");
}

IdentityVerdict check_luca_difference(const Integer& a, const Integer& b) {
    if (b < 0 || a <= b)
        throw std::invalid_argument("check_luca_difference: need a > b >= 0");
    if (mod_floor(a - b, 2) != 0)
        throw std::invalid_argument("check_luca_difference: need a == b (mod 2)");
    Integer u = (a - b) / 2;
    Integer v = (a + b) / 2;
    Integer lhs = fib(a) - fib(b);
    bool same_mod4 = mod_floor(a - b, 4) == 0;
    Integer rhs = same_mod4 ? Integer(fib(u) * lucas(v)) : Integer(fib(v) * lucas(u));
    return verdict(std::move(lhs), std::move(rhs),
                   "luca_difference(a=" + a.get_str() + ", b=" + b.get_str() +
                       ", u=" + u.get_str() + ", v=" + v.get_str() + ", form=" +
                       (same_mod4 ? "F_u*L_v" : "F_v*L_u") + ")");
}

IdentityVerdict check_sum_identity(const Integer& n) {
    if (n < 0) throw std::invalid_argument("check_sum_identity: n must be >= 0");
    Integer total = 0, a = 1, b = 1;  // a = F_i starting at i = 1
    for (Integer i = 1; i <= n; ++i) {
        total += a;
        Integer next = a + b;
        a = b;
        b = next;
    }
    return verdict(std::move(total), sum_fib(n), "sum_identity(n=" + n.get_str() + ")");
}

IdentityVerdict check_strong_divisibility(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("check_strong_divisibility: need a, b >= 1");
    Integer lhs = gcd(fib(a), fib(b));
    Integer rhs = fib(gcd(a, b));
    return verdict(std::move(lhs), std::move(rhs),
                   "strong_divisibility(a=" + a.get_str() + ", b=" + b.get_str() + ")");
}

IdentityVerdict check_parity_rule(const Integer& k) {
    if (k < 1) throw std::invalid_argument("check_parity_rule: k must be >= 1");
    Integer lhs = mod_floor(fib(k), 2);          // 1 iff F_k odd
    Integer rhs = mod_floor(k, 3) != 0 ? 1 : 0;  // 1 iff 3 does not divide k
    return verdict(std::move(lhs), std::move(rhs), "parity_rule(k=" + k.get_str() + ")");
}

}  // namespace fibsum
