// arithspin: Euler characteristics and commensurability of arithmetic spin groups.
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arithspin/errors.hpp"
#include "arithspin/euler.hpp"
#include "arithspin/profinite.hpp"
#include "arithspin/qforms.hpp"
#include "arithspin/serialize.hpp"
#include "arithspin/verify.hpp"

using namespace arithspin;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kValidation = 2, kInvariant = 3 };

struct Flags {
    bool pretty = false;
    bool csv = false;
    bool factored = false;
    std::uint64_t prime_bound = 10000;
    int d_max = 10;
};

void emit(const json& j, const Flags& f) { std::cout << (f.pretty ? j.dump(2) : j.dump()) << '\n'; }

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long long p = 0;
        try {
            p = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad prime in S: '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad prime in S: '" + item + "'");
        out.push_back(qforms::Place::finite(p).prime());
    }
    return out;
}

void print_table_pretty(const std::vector<euler::EulerResult>& rows) {
    std::cout << std::left << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(4) << "d" << std::setw(6)
              << "dimX" << std::setw(6) << "delta" << std::setw(6) << "sign" << std::setw(11) << "case"
              << "chi\n";
    for (const auto& r : rows) {
        const auto& g = r.descriptor;
        std::cout << std::left << std::setw(4) << g.m() << std::setw(4) << g.n() << std::setw(4) << g.d()
                  << std::setw(6) << g.dim_x() << std::setw(6) << g.delta() << std::setw(6) << r.sign
                  << std::setw(11) << euler::to_string(r.case_tag) << r.factored << '\n';
    }
}

int run_verify(const std::string& suite, const Flags& f) {
    verify::Options opts;
    opts.prime_bound = f.prime_bound;
    const auto results = verify::run(suite, opts);
    bool all_ok = true;
    json out = json::array();
    for (const auto& r : results) {
        all_ok = all_ok && r.passed;
        if (f.pretty) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(10) << r.name << std::fixed
                      << std::setprecision(2) << r.seconds << "s  " << r.detail << '\n';
        } else {
            out.push_back({{"suite", r.name},
                           {"passed", r.passed},
                           {"checks", r.checks},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
        }
    }
    if (!f.pretty) std::cout << json({{"passed", all_ok}, {"suites", out}}).dump() << '\n';
    return all_ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler characteristics and profinite commensurability of arithmetic spin groups"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags flags;
    app.add_flag("--pretty", flags.pretty, "Human-readable output");

    int m = 0, n = 0, m2 = 0, n2 = 0;
    std::string form_text, place_text, primes_text, suite = "all";
    bool sweep = false;

    auto* chi = app.add_subcommand("chi", "Euler characteristic of Gamma_{m,n}");
    chi->add_option("m", m)->required();
    chi->add_option("n", n)->required();
    chi->add_flag("--factored", flags.factored, "Print only the factored value");

    auto* sign = app.add_subcommand("sign", "Sign of chi(Gamma_{m,n})");
    sign->add_option("m", m)->required();
    sign->add_option("n", n)->required();

    auto* profile = app.add_subcommand("profile", "l2-invariant profile");
    profile->add_option("m", m)->required();
    profile->add_option("n", n)->required();

    auto* compare = app.add_subcommand("compare", "Local equivalence of b_{m,n} and b_{m2,n2}");
    compare->add_option("m", m)->required();
    compare->add_option("n", n)->required();
    compare->add_option("m2", m2)->required();
    compare->add_option("n2", n2)->required();

    auto* table = app.add_subcommand("table", "chi for all 3 <= m + n <= d_max");
    table->add_option("--d-max", flags.d_max, "Largest m + n")->capture_default_str();
    table->add_flag("--csv", flags.csv, "CSV output");
    table->add_flag("--sweep", sweep, "Locally equivalent pairs instead of single groups");

    auto* witt = app.add_subcommand("witt", "Witt decomposition of a diagonal form at a place");
    witt->add_option("form", form_text, "\"1,1,-1\" or \"b(m,n)\"")->required();
    witt->add_option("place", place_text, "prime or inf")->required();

    auto* srank = app.add_subcommand("srank", "Sign of chi for Spin(b_{m,n})(Z[1/S])");
    srank->add_option("m", m)->required();
    srank->add_option("n", n)->required();
    srank->add_option("S", primes_text, "comma-separated primes")->required();

    auto* check = app.add_subcommand("verify", "Run self-checks");
    check->add_option("suite", suite, "exactq, clifford, oracles, adelic, float or all")->capture_default_str();
    check->add_option("--prime-bound", flags.prime_bound, "Prime bound for the float check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kValidation;
    }

    try {
        if (*chi) {
            const auto r = euler::chi_closed(m, n);
            if (flags.factored)
                std::cout << r.factored << '\n';
            else
                emit(io::chi_json(r), flags);
        } else if (*sign) {
            emit({{"m", m}, {"n", n}, {"sign", euler::chi_sign(m, n)}}, flags);
        } else if (*profile) {
            const auto p = euler::l2_profile(m, n);
            emit({{"m", m}, {"n", n}, {"dimX", p.dim_x}, {"delta", p.delta}, {"l2", io::l2_json(p)}}, flags);
        } else if (*compare) {
            emit(io::compare_json(profinite::profinitely_commensurable(m, n, m2, n2)), flags);
        } else if (*table) {
            if (sweep) {
                const auto s = profinite::sweep_theorem_frank_dim(flags.d_max);
                if (flags.csv)
                    std::cout << io::sweep_csv(s);
                else
                    emit(io::sweep_json(s), flags);
                if (!s.violations.empty()) return kInvariant;
            } else {
                const auto rows = io::chi_table(flags.d_max);
                if (flags.csv)
                    std::cout << io::table_csv(rows);
                else if (flags.pretty)
                    print_table_pretty(rows);
                else
                    std::cout << io::table_json(rows).dump() << '\n';
            }
        } else if (*witt) {
            const auto form = qforms::DiagonalForm::parse(form_text);
            emit(io::witt_json(qforms::witt_decomposition(form, qforms::Place::parse(place_text))), flags);
        } else if (*srank) {
            emit(io::srank_json(m, n, euler::s_arithmetic_sign(m, n, parse_prime_list(primes_text))), flags);
        } else if (*check) {
            return run_verify(suite, flags);
        }
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kOk;
}
