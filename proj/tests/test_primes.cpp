#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fibsum/fibcore.hpp>
#include <fibsum/primes.hpp>

#include <vector>

using namespace fibsum;

namespace {

bool trial_division(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("is_prime basics and edge values") {
    CHECK(is_prime(17));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(121393));  // F_26 = 233 * 521
    CHECK(is_prime(233));
    CHECK(is_prime(Integer("2305843009213693951")));        // 2^61 - 1
    CHECK_FALSE(is_prime(Integer("9223372036854775807")));  // 2^63 - 1
    CHECK_FALSE(is_prime(Integer("18446744073709551615")));  // 2^64 - 1
    CHECK_THROWS_AS(is_prime(Integer("18446744073709551616")), std::invalid_argument);
}

TEST_CASE("is_prime agrees with trial division") {
    for (long n = 0; n <= 20000; ++n) CHECK(is_prime_u64(n) == trial_division(n));
}

TEST_CASE("legendre5 table and Euler criterion") {
    CHECK(legendre5(11) == 1);
    CHECK(legendre5(7) == -1);
    CHECK(legendre5(19) == 1);
    CHECK(legendre5(3) == -1);
    for (long p = 3; p < 3000; p += 2) {
        if (p == 5 || !is_prime_u64(p)) continue;
        CHECK(legendre5(p) == legendre5_euler(p));
    }
    CHECK_THROWS_AS(legendre5(5), std::invalid_argument);
    CHECK_THROWS_AS(legendre5(2), std::invalid_argument);
    CHECK_THROWS_AS(legendre5(15), std::invalid_argument);
    CHECK_THROWS_AS(legendre5_euler(5), std::invalid_argument);
}

TEST_CASE("sp_residue paper-stated small cases") {
    ResidueReport r3 = sp_residue(3);
    CHECK(r3.sp_mod_p == 1);
    CHECK_FALSE(r3.divisible);
    ResidueReport r5 = sp_residue(5);
    CHECK(r5.sp_mod_p == 2);
    CHECK(r5.character5 == 0);
    ResidueReport r7 = sp_residue(7);
    CHECK(r7.sp_mod_p == 5);
    CHECK(r7.character5 == -1);
    ResidueReport r11 = sp_residue(11);
    CHECK(r11.sp_mod_p == 1);
    CHECK(r11.character5 == 1);
    CHECK_THROWS_AS(sp_residue(4), std::invalid_argument);
    CHECK_THROWS_AS(sp_residue(2), std::invalid_argument);
}

TEST_CASE("S_p is never divisible by p, residue set by (5/p)") {
    for (long p = 3; p < 2000; p += 2) {
        if (!is_prime_u64(p)) continue;
        ResidueReport rep = sp_residue(p);
        CHECK_FALSE(rep.divisible);
        // Direct-summation confirmation below 100.
        if (p < 100) {
            Integer direct = 0, a = 1, b = 1;
            for (long i = 1; i <= p; ++i) {
                direct += a;
                Integer next = a + b;
                a = b;
                b = next;
            }
            CHECK(mod_floor(direct, p) == rep.sp_mod_p);
        }
        if (p == 5) continue;
        Integer expected = rep.character5 == 1 ? Integer(1) : Integer(p - 2);
        CHECK(rep.sp_mod_p == expected);
    }
}

TEST_CASE("QualifyingPrime validates the theorem hypotheses") {
    QualifyingPrime q17(17);
    CHECK(q17.residue_mod3 == 2);
    CHECK(q17.residue_mod5 == 2);
    QualifyingPrime q23(23);
    CHECK(q23.residue_mod5 == 3);
    CHECK_THROWS_AS(QualifyingPrime(19), std::invalid_argument);  // 19 == 1 mod 3
    CHECK_THROWS_AS(QualifyingPrime(11), std::invalid_argument);  // 11 == 1 mod 5
    CHECK_THROWS_AS(QualifyingPrime(15), std::invalid_argument);  // composite
    CHECK_THROWS_AS(QualifyingPrime(2), std::invalid_argument);   // even
    CHECK_THROWS_AS(QualifyingPrime(5), std::invalid_argument);   // 5 == 0 mod 5
}

TEST_CASE("qualifying_primes lists") {
    auto q60 = qualifying_primes(60);
    REQUIRE(q60.size() == 4);
    CHECK(q60[0].p == 17);
    CHECK(q60[1].p == 23);
    CHECK(q60[2].p == 47);
    CHECK(q60[3].p == 53);
    CHECK(qualifying_primes(16).empty());
    CHECK(qualifying_primes(2).empty());
    CHECK_THROWS_AS(qualifying_primes(1), std::invalid_argument);

    std::vector<long> first20 = {17,  23,  47,  53,  83,  107, 113, 137, 167, 173,
                                 197, 227, 233, 257, 263, 293, 317, 347, 353, 383};
    auto q383 = qualifying_primes(383);
    REQUIRE(q383.size() == 20);
    for (std::size_t i = 0; i < 20; ++i) CHECK(q383[i].p == first20[i]);
}

TEST_CASE("qualifying filter equals the direct two-congruence sieve") {
    std::vector<long> direct;
    for (long p = 3; p <= 20000; p += 2)
        if (is_prime_u64(p) && p % 3 == 2 && (p % 5 == 2 || p % 5 == 3)) direct.push_back(p);
    auto emitted = qualifying_primes(20000);
    REQUIRE(emitted.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(emitted[i].p == direct[i]);
        long r15 = emitted[i].residue_mod5 == 2 ? 2 : 8;
        CHECK(mod_floor(emitted[i].p, 15) == r15);
    }
}
