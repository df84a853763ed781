#include <fibsum/fibcore.hpp>

#include <utility>

namespace fibsum {

namespace {

// Fast-doubling walk over the bits of n (n >= 0), most significant bit
// first. Maintains (F_j, F_{j+1}) for the prefix j of n's bits; `reduce`
// normalizes every intermediate (identity for exact evaluation, reduction
// into [0, m) for modular evaluation).
template <typename Reduce>
std::pair<Integer, Integer> doubling_walk(const Integer& n, Reduce&& reduce) {
    Integer a = 0, b = 1;  // (F_0, F_1)
    reduce(b);
    if (n == 0) return {a, b};

    Integer t, u;
    const mp_bitcnt_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        t = 2 * b - a;  // may be negative before reduction
        reduce(t);
        t *= a;         // F_{2j}
        reduce(t);
        u = a * a + b * b;  // F_{2j+1}
        reduce(u);
        if (mpz_tstbit(n.get_mpz_t(), i)) {
            a = u;
            b = t + u;  // F_{2j+2}
            reduce(b);
        } else {
            a = t;
            b = u;
        }
    }
    return {a, b};
}

std::pair<Integer, Integer> fib_pair_exact(const Integer& n) {
    return doubling_walk(n, [](Integer&) {});
}

}  // namespace

Integer fib(const Integer& n) {
    if (n >= 0) return fib_pair_exact(n).first;
    Integer k = -n;
    Integer value = fib_pair_exact(k).first;
    return mpz_even_p(k.get_mpz_t()) ? Integer(-value) : value;
}

Integer lucas(const Integer& n) { return fib(n - 1) + fib(n + 1); }

FibPairMod fib_pair_mod(const Integer& n, const Integer& m) {
    if (m <= 0) throw std::invalid_argument("fib_pair_mod: modulus must be >= 1");
    if (n < 0) throw std::invalid_argument("fib_pair_mod: index must be >= 0");
    auto [a, b] = doubling_walk(n, [&m](Integer& x) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    });
    return FibPairMod{m, std::move(a), std::move(b)};
}

Integer fib_mod(const Integer& n, const Integer& m) {
    return fib_pair_mod(n, m).fn;
}

Integer sum_fib(const Integer& n) {
    if (n < 0) throw std::invalid_argument("sum_fib: index must be >= 0");
    return fib(n + 2) - 1;
}

Integer sum_fib_mod(const Integer& n, const Integer& m) {
    if (m <= 0) throw std::invalid_argument("sum_fib_mod: modulus must be >= 1");
    if (n < 0) throw std::invalid_argument("sum_fib_mod: index must be >= 0");
    return mod_floor(fib_mod(n + 2, m) - 1, m);
}

}  // namespace fibsum
