#include "cli.hpp"

#include "suites.hpp"

#include <fibsum/fibcore.hpp>
#include <fibsum/identities.hpp>
#include <fibsum/pisano.hpp>
#include <fibsum/primes.hpp>
#include <fibsum/selfsum.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace fibsum::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { plain, bfile, jsonl };

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "b-file") return Format::bfile;
    return Format::jsonl;
}

// Streams one line per element: bare values (plain), "ordinal value"
// (b-file), or a JSON object per record (json-lines).
template <typename T, typename Value, typename Record>
void write_sequence(std::ostream& os, Format format, const std::vector<T>& items,
                    Value&& value_of, Record&& record_of) {
    std::size_t ordinal = 0;
    for (const T& item : items) {
        ++ordinal;
        switch (format) {
            case Format::plain: os << value_of(item) << '\n'; break;
            case Format::bfile: os << ordinal << ' ' << value_of(item) << '\n'; break;
            case Format::jsonl: os << record_of(item).dump() << '\n'; break;
        }
    }
}

json to_json(const SelfSummableRecord& rec) {
    return json{{"k", rec.k},
                {"fib_k_odd", rec.fib_k_odd},
                {"verdict", rec.verdict},
                {"strategy", eval_strategy_name(rec.strategy)}};
}

json to_json(const QualifyingPrime& q) {
    return json{{"p", q.p.get_str()},
                {"residue_mod3", q.residue_mod3},
                {"residue_mod5", q.residue_mod5}};
}

json to_json(const ResidueReport& rep) {
    return json{{"p", rep.p.get_str()},
                {"sp_mod_p", rep.sp_mod_p.get_str()},
                {"character5", rep.character5},
                {"divisible", rep.divisible}};
}

json to_json(const FamilyCertificate& cert) {
    return json{{"p", cert.p.p.get_str()},
                {"n", cert.n.get_str()},
                {"fib_n_odd", cert.fib_n_odd},
                {"congruence_residue", cert.congruence_residue.get_str()},
                {"divisibility_holds", cert.divisibility_holds}};
}

json to_json(const PisanoRecord& rec) {
    return json{{"modulus", rec.modulus.get_str()},
                {"period", rec.period.get_str()},
                {"method", period_method_name(rec.method)}};
}

int report_verdict(std::ostream& out, const IdentityVerdict& v) {
    if (v.holds) {
        out << "ok " << v.context << '\n';
        return 0;
    }
    out << "FAIL " << v.context << ": lhs=" << v.lhs.get_str()
        << " rhs=" << v.rhs.get_str() << '\n';
    return 1;
}

int report_flag(std::ostream& out, const std::string& what, bool ok) {
    out << (ok ? "ok " : "FAIL ") << what << '\n';
    return ok ? 0 : 1;
}

Integer need_arg(const std::vector<Integer>& xs, std::size_t i, const char* name) {
    if (i >= xs.size())
        throw std::invalid_argument(std::string("verify ") + name + ": missing argument " +
                                    std::to_string(i + 1));
    return xs[i];
}

int run_verify(const std::string& name, const std::vector<Integer>& xs, std::ostream& out) {
    auto arg = [&](std::size_t i) { return need_arg(xs, i, name.c_str()); };
    auto arg_long = [&](std::size_t i) { return to_long(need_arg(xs, i, name.c_str())); };

    if (name == "identities") return suite_identities(out) ? 0 : 1;
    if (name == "pisano") return suite_pisano(out) ? 0 : 1;
    if (name == "primes") return suite_primes(out) ? 0 : 1;
    if (name == "selfsum") return suite_selfsum(out) ? 0 : 1;
    if (name == "all") return suite_all(out) ? 0 : 1;

    if (name == "cassini") return report_verdict(out, check_cassini(arg(0)));
    if (name == "addition") return report_verdict(out, check_addition(arg(0)));
    if (name == "luca-difference")
        return report_verdict(out, check_luca_difference(arg(0), arg(1)));
    if (name == "sum-identity") return report_verdict(out, check_sum_identity(arg(0)));
    if (name == "strong-divisibility")
        return report_verdict(out, check_strong_divisibility(arg(0), arg(1)));
    if (name == "parity-rule") return report_verdict(out, check_parity_rule(arg(0)));

    if (name == "period-multiple") {
        Integer m = arg(0), t = arg(1);
        return report_flag(out, "pi(" + m.get_str() + ") divides " + t.get_str(),
                           is_period_multiple(m, t));
    }
    if (name == "prop-pisano") {
        long n = arg_long(0);
        return report_flag(out, "pi(F_" + std::to_string(n) + ") divides 2n",
                           check_prop_pisano(n));
    }
    if (name == "wall") {
        Integer p = arg(0);
        return report_flag(out, "pi(" + p.get_str() + ") divides 2(p+1)", check_wall(p));
    }
    if (name == "lcm-rule") {
        Integer p = arg(0);
        return report_flag(out, "pi(4*" + p.get_str() + ") = lcm(6, pi(p))",
                           check_lcm_rule(p));
    }
    if (name == "ratio-bound") {
        long M = arg_long(0);
        RatioBound rb = ratio_bound(M);
        bool ok = rb.observed <= rb.bound;
        out << (ok ? "ok " : "FAIL ") << "ratio-bound(M=" << M
            << "): pi(F_M)/F_M = " << rb.observed.get_str()
            << " <= " << rb.bound.get_str() << " = 2M/F_M\n";
        return ok ? 0 : 1;
    }
    if (name == "self-summable") {
        long k = arg_long(0);
        SelfSummableRecord rec = is_self_summable(k);
        out << (rec.verdict ? "ok " : "FAIL ") << "self-summable(k=" << k << "): F_k "
            << (rec.verdict ? "divides" : "does not divide") << " S_{F_k} ["
            << eval_strategy_name(rec.strategy) << "]\n";
        return rec.verdict ? 0 : 1;
    }
    if (name == "even-family") {
        long j = arg_long(0);
        return report_flag(out, "3*2^(j+3) divides its sum at j=" + std::to_string(j),
                           check_even_family(j));
    }
    if (name == "self-fibonacci") {
        Integer n = arg(0);
        return report_flag(out, n.get_str() + " divides F_" + n.get_str(),
                           is_self_fibonacci(n));
    }
    throw std::invalid_argument("verify: unknown check '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fibonacci divisibility toolkit: sums, Pisano periods, and the\n"
                 "self-summable indices k with F_k | (F_1 + ... + F_{F_k})"};
    app.name("fibsum");
    app.require_subcommand(1);

    std::string format_name = "plain";
    std::string out_path, cache_path;

    auto add_format = [&](CLI::App* sc) {
        sc->add_option("--format", format_name, "plain, json-lines, or b-file")
            ->check(CLI::IsMember({"plain", "json-lines", "b-file"}));
    };
    auto add_out = [&](CLI::App* sc) {
        sc->add_option("--out", out_path, "write output lines to this file");
    };

    std::string fib_n, fib_mod_str;
    CLI::App* sc_fib = app.add_subcommand("fib", "F_n (n may be negative)");
    sc_fib->add_option("n", fib_n, "index")->required();
    sc_fib->add_option("--mod", fib_mod_str, "reduce modulo this (requires n >= 0)");

    std::string lucas_n;
    CLI::App* sc_lucas = app.add_subcommand("lucas", "L_n = F_{n-1} + F_{n+1}");
    sc_lucas->add_option("n", lucas_n, "index")->required();

    std::string sum_n, sum_mod_str;
    CLI::App* sc_sum = app.add_subcommand("sum", "S_n = F_1 + ... + F_n = F_{n+2} - 1");
    sc_sum->add_option("n", sum_n, "index, n >= 0")->required();
    sc_sum->add_option("--mod", sum_mod_str, "reduce modulo this");

    std::string pisano_m;
    long pisano_fib_n = 0;
    CLI::App* sc_pisano = app.add_subcommand("pisano", "Pisano period pi(m)");
    sc_pisano->add_option("m", pisano_m, "modulus");
    sc_pisano->add_option("--fib-even", pisano_fib_n,
                          "compute pi(F_n) for even n via divisors of 2n");
    sc_pisano->add_option("--cache", cache_path, "period cache file (read and updated)");
    add_format(sc_pisano);

    std::string primes_limit, primes_sp;
    CLI::App* sc_primes =
        app.add_subcommand("primes", "primes p == 2 (mod 3), p == +-2 (mod 5); S_p residues");
    sc_primes->add_option("--limit", primes_limit, "list qualifying primes <= limit");
    sc_primes->add_option("--sp", primes_sp, "report S_p mod p for this odd prime");
    add_format(sc_primes);
    add_out(sc_primes);

    long scan_limit = 0;
    bool scan_odd = false;
    CLI::App* sc_scan = app.add_subcommand("scan", "self-summable indices k <= limit");
    sc_scan->add_option("--limit", scan_limit, "largest index to test")->required();
    sc_scan->add_flag("--odd", scan_odd, "keep only k with F_k odd");
    add_format(sc_scan);
    add_out(sc_scan);

    std::vector<std::string> family_ps;
    long family_first = 0;
    CLI::App* sc_family =
        app.add_subcommand("family", "certificates for n = 2p and n = 4p");
    sc_family->add_option("p", family_ps, "qualifying primes");
    sc_family->add_option("--first", family_first, "use the first K qualifying primes");
    add_format(sc_family);
    add_out(sc_family);

    std::string verify_name;
    std::vector<std::string> verify_args;
    CLI::App* sc_verify = app.add_subcommand(
        "verify", "run a named check or module suite; exit 1 on any failed verdict");
    sc_verify->add_option("check", verify_name,
                          "identities|pisano|primes|selfsum|all, or a single check: "
                          "cassini N, addition N, luca-difference A B, sum-identity N, "
                          "strong-divisibility A B, parity-rule K, period-multiple M T, "
                          "prop-pisano N, wall P, lcm-rule P, ratio-bound M, "
                          "self-summable K, even-family J, self-fibonacci N")
        ->required();
    sc_verify->add_option("args", verify_args, "check arguments");

    std::string export_seq;
    std::string export_limit;
    std::string export_format_name = "b-file";
    CLI::App* sc_export = app.add_subcommand("export", "write a sequence as a b-file");
    sc_export->add_option("sequence", export_seq, "which sequence")
        ->required()
        ->check(CLI::IsMember({"self-summable", "odd-self-summable", "qualifying-primes",
                               "pisano", "self-fibonacci"}));
    sc_export->add_option("--limit", export_limit, "range bound")->required();
    sc_export->add_option("--format", export_format_name, "plain, json-lines, or b-file")
        ->check(CLI::IsMember({"plain", "json-lines", "b-file"}));
    add_out(sc_export);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::ofstream out_file;
    std::ostream* data = &out;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            err << "error: cannot write " << out_path << '\n';
            return 2;
        }
        data = &out_file;
    }
    Format format = parse_format(format_name);

    try {
        if (sc_fib->parsed()) {
            Integer n = parse_integer(fib_n);
            if (!fib_mod_str.empty())
                out << fib_mod(n, parse_integer(fib_mod_str)).get_str() << '\n';
            else
                out << fib(n).get_str() << '\n';
            return 0;
        }
        if (sc_lucas->parsed()) {
            out << lucas(parse_integer(lucas_n)).get_str() << '\n';
            return 0;
        }
        if (sc_sum->parsed()) {
            Integer n = parse_integer(sum_n);
            if (!sum_mod_str.empty())
                out << sum_fib_mod(n, parse_integer(sum_mod_str)).get_str() << '\n';
            else
                out << sum_fib(n).get_str() << '\n';
            return 0;
        }
        if (sc_pisano->parsed()) {
            PisanoRecord rec{1, 1, PeriodMethod::iterative_search};
            if (pisano_fib_n != 0) {
                rec = pisano_fib_even(pisano_fib_n);
            } else if (!pisano_m.empty()) {
                Integer m = parse_integer(pisano_m);
                if (!cache_path.empty()) {
                    PisanoCache cache;
                    if (std::filesystem::exists(cache_path)) cache.load(cache_path);
                    rec = cache.get(m);
                    cache.save(cache_path);
                } else {
                    rec = pisano(m);
                }
            } else {
                err << "error: pisano needs a modulus or --fib-even\n";
                return 2;
            }
            if (format == Format::jsonl)
                out << to_json(rec).dump() << '\n';
            else
                out << rec.period.get_str() << '\n';
            return 0;
        }
        if (sc_primes->parsed()) {
            if (!primes_sp.empty()) {
                ResidueReport rep = sp_residue(parse_integer(primes_sp));
                if (format == Format::jsonl)
                    *data << to_json(rep).dump() << '\n';
                else
                    *data << "p=" << rep.p.get_str() << " sp_mod_p=" << rep.sp_mod_p.get_str()
                          << " character5=" << rep.character5 << " divisible="
                          << (rep.divisible ? "true" : "false") << '\n';
                return 0;
            }
            if (primes_limit.empty()) {
                err << "error: primes needs --limit or --sp\n";
                return 2;
            }
            auto list = qualifying_primes(parse_integer(primes_limit));
            write_sequence(*data, format, list,
                           [](const QualifyingPrime& q) { return q.p.get_str(); },
                           [](const QualifyingPrime& q) { return to_json(q); });
            return 0;
        }
        if (sc_scan->parsed()) {
            auto hits = scan_odd ? scan_odd_self_summable(scan_limit)
                                 : scan_self_summable(scan_limit);
            write_sequence(*data, format, hits,
                           [](const SelfSummableRecord& r) { return std::to_string(r.k); },
                           [](const SelfSummableRecord& r) { return to_json(r); });
            return 0;
        }
        if (sc_family->parsed()) {
            std::vector<QualifyingPrime> ps;
            if (family_first > 0) {
                // Qualifying primes have density ~4/15 of primes; 20 of them
                // sit below 400, so grow the window geometrically.
                for (Integer limit = 400;; limit *= 2) {
                    auto all = qualifying_primes(limit);
                    if (static_cast<long>(all.size()) >= family_first) {
                        ps.assign(all.begin(), all.begin() + family_first);
                        break;
                    }
                }
            }
            for (const std::string& text : family_ps) ps.emplace_back(parse_integer(text));
            if (ps.empty()) {
                err << "error: family needs primes or --first\n";
                return 2;
            }
            std::vector<FamilyCertificate> certs;
            for (const QualifyingPrime& q : ps)
                for (FamilyCertificate& cert : theorem_family(q))
                    certs.push_back(std::move(cert));
            write_sequence(*data, format, certs,
                           [](const FamilyCertificate& c) {
                               return "p=" + c.p.p.get_str() + " n=" + c.n.get_str() +
                                      " fib_n_odd=" + (c.fib_n_odd ? "true" : "false") +
                                      " congruence_residue=" + c.congruence_residue.get_str() +
                                      " divisibility_holds=" +
                                      (c.divisibility_holds ? "true" : "false");
                           },
                           [](const FamilyCertificate& c) { return to_json(c); });
            return 0;
        }
        if (sc_verify->parsed()) {
            std::vector<Integer> xs;
            for (const std::string& text : verify_args) xs.push_back(parse_integer(text));
            return run_verify(verify_name, xs, out);
        }
        if (sc_export->parsed()) {
            Format fmt = parse_format(export_format_name);
            if (export_seq == "self-summable" || export_seq == "odd-self-summable") {
                long limit = to_long(parse_integer(export_limit), "--limit");
                auto hits = export_seq == "self-summable" ? scan_self_summable(limit)
                                                          : scan_odd_self_summable(limit);
                write_sequence(*data, fmt, hits,
                               [](const SelfSummableRecord& r) { return std::to_string(r.k); },
                               [](const SelfSummableRecord& r) { return to_json(r); });
            } else if (export_seq == "qualifying-primes") {
                auto list = qualifying_primes(parse_integer(export_limit));
                write_sequence(*data, fmt, list,
                               [](const QualifyingPrime& q) { return q.p.get_str(); },
                               [](const QualifyingPrime& q) { return to_json(q); });
            } else if (export_seq == "pisano") {
                long limit = to_long(parse_integer(export_limit), "--limit");
                std::vector<PisanoRecord> recs;
                for (long m = 1; m <= limit; ++m) recs.push_back(pisano(m));
                write_sequence(*data, fmt, recs,
                               [](const PisanoRecord& r) { return r.period.get_str(); },
                               [](const PisanoRecord& r) { return to_json(r); });
            } else {
                long limit = to_long(parse_integer(export_limit), "--limit");
                std::vector<Integer> hits;
                for (Integer n = 1; n <= limit; ++n)
                    if (is_self_fibonacci(n)) hits.push_back(n);
                write_sequence(*data, fmt, hits,
                               [](const Integer& n) { return n.get_str(); },
                               [](const Integer& n) { return json{{"n", n.get_str()}}; });
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace fibsum::cli
