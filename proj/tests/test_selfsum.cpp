#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fibsum/fibcore.hpp>
#include <fibsum/selfsum.hpp>

#include <vector>

using namespace fibsum;

namespace {

std::vector<long> keys(const std::vector<SelfSummableRecord>& recs) {
    std::vector<long> ks;
    for (const auto& r : recs) ks.push_back(r.k);
    return ks;
}

}  // namespace

TEST_CASE("is_self_summable spot values") {
    CHECK(is_self_summable(1).verdict);
    CHECK(is_self_summable(2).verdict);
    CHECK(is_self_summable(3).verdict);   // F_3 = 2 divides S_2 = 2
    CHECK_FALSE(is_self_summable(4).verdict);  // F_4 = 3, S_3 = 4
    CHECK(is_self_summable(34).verdict);
    CHECK_FALSE(is_self_summable(35).verdict);
    CHECK_THROWS_AS(is_self_summable(0), std::invalid_argument);
    CHECK_THROWS_AS(is_self_summable(-3), std::invalid_argument);
}

TEST_CASE("strategy selection and agreement") {
    CHECK(is_self_summable(34).strategy == EvalStrategy::period_reduced);
    CHECK(is_self_summable(35).strategy == EvalStrategy::direct_big_index);
    CHECK_THROWS_AS(is_self_summable(35, EvalStrategy::period_reduced),
                    std::invalid_argument);
    for (long k = 2; k <= 300; k += 2)
        CHECK(is_self_summable(k, EvalStrategy::period_reduced).verdict ==
              is_self_summable(k, EvalStrategy::direct_big_index).verdict);
}

TEST_CASE("verdict matches the literal definition at small k") {
    for (long k = 1; k <= 25; ++k) {
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
        CHECK((total == 0) == is_self_summable(k).verdict);
    }
}

TEST_CASE("scan reproduces the published lists") {
    std::vector<long> first16 = {1,  2,  3,  12, 24, 34, 36, 46,
                                 48, 60, 68, 72, 92, 94, 96, 106};
    CHECK(keys(scan_self_summable(106)) == first16);
    CHECK(keys(scan_self_summable(2)) == std::vector<long>{1, 2});
    CHECK(keys(scan_self_summable(11)) == std::vector<long>{1, 2, 3});

    std::vector<long> odd14 = {1, 2, 34, 46, 68, 92, 94, 106, 166, 188, 212, 214, 226, 274};
    CHECK(keys(scan_odd_self_summable(274)) == odd14);
    CHECK(keys(scan_odd_self_summable(33)) == std::vector<long>{1, 2});
    CHECK(keys(scan_odd_self_summable(1)) == std::vector<long>{1});

    std::vector<long> odd26 = {1,   2,   34,  46,  68,  92,  94,  106, 166, 188, 212, 214, 226,
                               274, 332, 334, 346, 394, 428, 452, 454, 466, 514, 526, 548, 586};
    CHECK(keys(scan_odd_self_summable(600)) == odd26);
    CHECK_THROWS_AS(scan_self_summable(0), std::invalid_argument);
}

TEST_CASE("records carry the parity of F_k") {
    for (const auto& rec : scan_self_summable(300)) CHECK(rec.fib_k_odd == (rec.k % 3 != 0));
    for (long k = 1; k <= 200; ++k) CHECK(is_self_summable(k).fib_k_odd == (k % 3 != 0));
}

TEST_CASE("family certificates for p = 17") {
    QualifyingPrime q(17);
    auto certs = theorem_family(q);
    REQUIRE(certs.size() == 2);

    CHECK(certs[0].n == 34);
    CHECK(certs[0].fib_n_odd);
    CHECK(certs[0].divisibility_holds);
    CHECK(certs[0].congruence_residue == 67);  // F_34 == -1 (mod 68)

    CHECK(certs[1].n == 68);
    CHECK(certs[1].fib_n_odd);
    CHECK(certs[1].divisibility_holds);
    CHECK(certs[1].congruence_residue == 133);  // F_68 == -3 (mod 136)
    CHECK(certs[1].p.p == 17);
}

TEST_CASE("family congruence law across the first twenty primes") {
    // n = 2p lands on F_{-2} = -1 mod 2n; n = 4p lands on F_{-4} = -3 mod 2n.
    // Divisibility holds in both cases.
    std::vector<long> first20 = {17,  23,  47,  53,  83,  107, 113, 137, 167, 173,
                                 197, 227, 233, 257, 263, 293, 317, 347, 353, 383};
    for (long p : first20) {
        auto certs = theorem_family(QualifyingPrime(p));
        REQUIRE(certs.size() == 2);
        for (const auto& cert : certs) {
            CHECK(cert.fib_n_odd);
            CHECK(cert.divisibility_holds);
        }
        CHECK(certs[0].congruence_residue == 2 * certs[0].n - 1);
        CHECK(certs[1].congruence_residue == 2 * certs[1].n - 3);
    }
}

TEST_CASE("even family 3 * 2^(j+3)") {
    CHECK(check_even_family(0));  // S_24 = 121392 = 24 * 5058
    CHECK(sum_fib(24) == 24 * 5058);
    CHECK(check_even_family(1));  // S_48 = 12586269024 = 48 * 262213938
    CHECK(sum_fib(48) == Integer(48) * 262213938);
    for (long j = 0; j <= 15; ++j) CHECK(check_even_family(j));
    CHECK_THROWS_AS(check_even_family(-1), std::invalid_argument);
}

TEST_CASE("self-Fibonacci predicate") {
    CHECK(is_self_fibonacci(1));
    CHECK(is_self_fibonacci(12));  // F_12 = 144
    CHECK_FALSE(is_self_fibonacci(7));
    std::vector<long> hits;
    for (long n = 1; n <= 100; ++n)
        if (is_self_fibonacci(n)) hits.push_back(n);
    CHECK(hits == std::vector<long>{1, 5, 12, 24, 25, 36, 48, 60, 72, 96});
    CHECK_THROWS_AS(is_self_fibonacci(0), std::invalid_argument);
}
