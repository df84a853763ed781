#include <fibsum/pisano.hpp>

#include <fibsum/fibcore.hpp>
#include <fibsum/primes.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace fibsum {

const char* period_method_name(PeriodMethod method) {
    switch (method) {
        case PeriodMethod::iterative_search: return "iterative-search";
        case PeriodMethod::divisor_refinement: return "divisor-refinement";
    }
    return "unknown";
}

bool is_period_multiple(const Integer& m, const Integer& t) {
    if (m < 1) throw std::invalid_argument("is_period_multiple: modulus must be >= 1");
    if (t < 1) throw std::invalid_argument("is_period_multiple: t must be >= 1");
    FibPairMod pair = fib_pair_mod(t, m);
    return pair.fn == 0 && pair.fnext == mod_floor(1, m);
}

PisanoRecord pisano(const Integer& m) {
    if (m < 1) throw std::invalid_argument("pisano: modulus must be >= 1");
    if (m > kIterativeSearchBound)
        throw std::invalid_argument("pisano: modulus exceeds iterative search bound " +
                                    Integer(kIterativeSearchBound).get_str());
    if (m == 1) return PisanoRecord{m, 1, PeriodMethod::iterative_search};

    // Walk (F_t, F_{t+1}) mod m; the period is the least t landing on (0, 1).
    Integer a = 1, b = 1;  // (F_1, F_2), already reduced since m >= 2
    Integer limit = 6 * m;
    for (Integer t = 1; t <= limit; ++t) {
        if (a == 0 && b == 1) return PisanoRecord{m, t, PeriodMethod::iterative_search};
        Integer next = a + b;
        if (next >= m) next -= m;
        a = b;
        b = next;
    }
    throw std::runtime_error("pisano: no period found below 6m for m = " + m.get_str() +
                             " (bound exceeded)");
}

namespace {

std::vector<long> divisors_ascending(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

PisanoRecord pisano_fib_even(long n) {
    if (n <= 1 || n % 2 != 0)
        throw std::invalid_argument("pisano_fib_even: n must be even and > 1");
    Integer fn = fib(n);
    for (long d : divisors_ascending(2 * n)) {
        if (is_period_multiple(fn, d))
            return PisanoRecord{fn, d, PeriodMethod::divisor_refinement};
    }
    throw std::runtime_error("pisano_fib_even: no divisor of 2n is a period of F_n, n = " +
                             std::to_string(n));
}

bool check_prop_pisano(long n) {
    if (n <= 1 || n % 2 != 0)
        throw std::invalid_argument("check_prop_pisano: n must be even and > 1");
    return is_period_multiple(fib(n), 2 * n);
}

bool check_wall(const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("check_wall: p must be prime");
    Integer r5 = mod_floor(p, 5);
    if (r5 != 2 && r5 != 3)
        throw std::invalid_argument("check_wall: p must be == +-2 (mod 5)");
    Integer period = pisano(p).period;
    return mod_floor(2 * (p + 1), period) == 0;
}

bool check_lcm_rule(const Integer& p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("check_lcm_rule: p must be an odd prime");
    Integer pip = pisano(p).period;
    Integer expected = lcm(Integer(6), pip);
    return pisano(4 * p).period == expected;
}

RatioBound ratio_bound(long M) {
    if (M <= 1 || M % 2 != 0)
        throw std::invalid_argument("ratio_bound: M must be even and > 1");
    Integer fm = fib(M);
    Integer period = pisano_fib_even(M).period;
    Rational observed(period, fm);
    observed.canonicalize();
    Rational bound(2 * M, fm);
    bound.canonicalize();
    return RatioBound{observed, bound};
}

void PisanoCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("PisanoCache: cannot open " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string m_str, t_str, method_str;
        if (!(fields >> m_str >> t_str >> method_str))
            throw std::runtime_error("PisanoCache: malformed line " + std::to_string(lineno) +
                                     " in " + path);
        Integer m = parse_integer(m_str);
        Integer t = parse_integer(t_str);
        if (!is_period_multiple(m, t))
            throw std::runtime_error("PisanoCache: line " + std::to_string(lineno) +
                                     " claims period " + t.get_str() + " for modulus " +
                                     m.get_str() + " but the pair congruence fails");
        PeriodMethod method = method_str == "divisor-refinement"
                                  ? PeriodMethod::divisor_refinement
                                  : PeriodMethod::iterative_search;
        records_.insert_or_assign(m, PisanoRecord{m, t, method});
    }
}

void PisanoCache::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("PisanoCache: cannot write " + path);
    for (const auto& [m, rec] : records_)
        out << m.get_str() << ' ' << rec.period.get_str() << ' '
            << period_method_name(rec.method) << '\n';
}

PisanoRecord PisanoCache::get(const Integer& m) {
    auto it = records_.find(m);
    if (it != records_.end()) return it->second;
    PisanoRecord rec = pisano(m);
    records_.emplace(m, rec);
    return rec;
}

}  // namespace fibsum
