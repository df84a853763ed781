#include <fibsum/primes.hpp>

#include <fibsum/fibcore.hpp>

namespace fibsum {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Witnesses covering all n < 2^64 (Sorenson & Webster).
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Integer& n) {
    if (n < 0) return false;
    if (n > 0 && mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        throw std::invalid_argument("is_prime: argument must be < 2^64, got " + n.get_str());
    return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
}

int legendre5(const Integer& p) {
    if (p == 2 || p == 5 || !is_prime(p))
        throw std::invalid_argument("legendre5: p must be an odd prime != 5");
    Integer r = mod_floor(p, 5);
    return (r == 1 || r == 4) ? 1 : -1;
}

int legendre5_euler(const Integer& p) {
    if (p == 2 || p == 5 || !is_prime(p))
        throw std::invalid_argument("legendre5_euler: p must be an odd prime != 5");
    Integer e = (p - 1) / 2;
    Integer value;
    Integer base = 5;
    mpz_powm(value.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return value == 1 ? 1 : -1;
}

ResidueReport sp_residue(const Integer& p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("sp_residue: p must be an odd prime");
    Integer residue = sum_fib_mod(p, p);
    int character = p == 5 ? 0 : legendre5(p);
    return ResidueReport{p, residue, character, residue == 0};
}

QualifyingPrime::QualifyingPrime(const Integer& prime) : p(prime) {
    if (prime == 2 || !is_prime(prime))
        throw std::invalid_argument("QualifyingPrime: not an odd prime: " + prime.get_str());
    Integer r3 = mod_floor(prime, 3);
    Integer r5 = mod_floor(prime, 5);
    if (r3 != 2)
        throw std::invalid_argument("QualifyingPrime: need p == 2 (mod 3), got " +
                                    prime.get_str());
    if (r5 != 2 && r5 != 3)
        throw std::invalid_argument("QualifyingPrime: need p == +-2 (mod 5), got " +
                                    prime.get_str());
    residue_mod3 = static_cast<int>(r3.get_si());
    residue_mod5 = static_cast<int>(r5.get_si());
}

std::vector<QualifyingPrime> qualifying_primes(const Integer& limit) {
    if (limit < 2) throw std::invalid_argument("qualifying_primes: limit must be >= 2");
    std::vector<QualifyingPrime> result;
    // p == 2 (mod 3) and p == +-2 (mod 5) collapse to p mod 15 in {2, 8};
    // stepping candidates by residue keeps the sieve-free scan cheap.
    for (Integer p = 3; p <= limit; p += 2) {
        Integer r15 = mod_floor(p, 15);
        if (r15 != 2 && r15 != 8) continue;
        if (!is_prime(p)) continue;
        result.emplace_back(p);
    }
    return result;
}

}  // namespace fibsum
