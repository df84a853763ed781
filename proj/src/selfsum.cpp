#include <fibsum/selfsum.hpp>

#include <fibsum/fibcore.hpp>

namespace fibsum {

const char* eval_strategy_name(EvalStrategy strategy) {
    switch (strategy) {
        case EvalStrategy::period_reduced: return "period-reduced";
        case EvalStrategy::direct_big_index: return "direct-big-index";
    }
    return "unknown";
}

namespace {

bool fib_index_odd(long k) { return k % 3 != 0; }

// F_k | S_{F_k}  <=>  F_{F_k + 2} == 1 (mod F_k).
bool divides_own_sum(long k, EvalStrategy strategy) {
    if (k == 1 || k == 2) return true;  // F_k = 1
    Integer fk = fib(k);
    Integer index;
    if (strategy == EvalStrategy::period_reduced) {
        // pi(F_k) | 2k for even k, so the index may be reduced mod 2k.
        index = mod_floor(fk + 2, 2 * k);
    } else {
        index = fk + 2;
    }
    return fib_mod(index, fk) == 1;
}

}  // namespace

SelfSummableRecord is_self_summable(long k, EvalStrategy strategy) {
    if (k < 1) throw std::invalid_argument("is_self_summable: k must be >= 1");
    if (strategy == EvalStrategy::period_reduced && k % 2 != 0)
        throw std::invalid_argument(
            "is_self_summable: period-reduced strategy requires even k");
    return SelfSummableRecord{k, fib_index_odd(k), divides_own_sum(k, strategy), strategy};
}

SelfSummableRecord is_self_summable(long k) {
    if (k < 1) throw std::invalid_argument("is_self_summable: k must be >= 1");
    EvalStrategy strategy =
        k % 2 == 0 ? EvalStrategy::period_reduced : EvalStrategy::direct_big_index;
    return is_self_summable(k, strategy);
}

std::vector<SelfSummableRecord> scan_self_summable(long limit) {
    if (limit < 1) throw std::invalid_argument("scan_self_summable: limit must be >= 1");
    std::vector<SelfSummableRecord> hits;
    for (long k = 1; k <= limit; ++k) {
        SelfSummableRecord rec = is_self_summable(k);
        if (rec.verdict) hits.push_back(std::move(rec));
    }
    return hits;
}

std::vector<SelfSummableRecord> scan_odd_self_summable(long limit) {
    std::vector<SelfSummableRecord> hits;
    for (SelfSummableRecord& rec : scan_self_summable(limit))
        if (rec.fib_k_odd) hits.push_back(std::move(rec));
    return hits;
}

std::vector<FamilyCertificate> theorem_family(const QualifyingPrime& p) {
    std::vector<FamilyCertificate> certs;
    for (int mult : {2, 4}) {
        Integer n = mult * p.p;
        long k = to_long(n, "family index");
        SelfSummableRecord rec = is_self_summable(k);
        certs.push_back(FamilyCertificate{p, n, rec.fib_k_odd,
                                          fib_mod(n, 2 * n), rec.verdict});
    }
    return certs;
}

bool check_even_family(long j) {
    if (j < 0) throw std::invalid_argument("check_even_family: j must be >= 0");
    Integer m = Integer(3) << static_cast<unsigned long>(j + 3);  // 3 * 2^(j+3)
    return sum_fib_mod(m, m) == 0;
}

bool is_self_fibonacci(const Integer& n) {
    if (n < 1) throw std::invalid_argument("is_self_fibonacci: n must be >= 1");
    return fib_mod(n, n) == 0;
}

}  // namespace fibsum
