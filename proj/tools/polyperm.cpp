#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyperm/fractal.hpp"
#include "polyperm/json_io.hpp"
#include "polyperm/report.hpp"
#include "polyperm/verify.hpp"

namespace {

using namespace polyperm;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t env_gate() {
    const char* raw = std::getenv("POLYPERM_GATE");
    if (!raw) return kDefaultEnumerationGate;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (!end || *end != '\0' || v == 0) throw Error("POLYPERM_GATE must be a positive integer");
    return v;
}

unsigned env_threads() {
    const char* raw = std::getenv("POLYPERM_THREADS");
    if (!raw) return 1;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (!end || *end != '\0' || v == 0 || v > 256)
        throw Error("POLYPERM_THREADS must be an integer in [1, 256]");
    return static_cast<unsigned>(v);
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_analyze(std::uint32_t n, bool as_json, std::uint64_t gate) {
    AnalyzeOptions opts;
    opts.jet_gate = gate;
    const GroupReport report = analyze_ring(n, opts);
    if (as_json)
        print_json(group_report_json(report));
    else
        std::cout << group_report_text(report);
    return kExitOk;
}

int run_verify(const std::string& suite, bool as_json, std::uint64_t gate) {
    if (!is_known_suite(suite)) throw Error("unknown verification suite: " + suite);
    const SuiteResult result = run_suite(suite, gate);
    if (as_json) {
        print_json(suite_result_json(result));
    } else {
        for (const auto& check : result.checks)
            std::cout << (check.pass ? "pass" : "FAIL") << "  " << check.name << "  ("
                      << check.millis << " ms)  " << check.detail << "\n";
        std::cout << (result.pass ? "PASS" : "FAIL") << "  suite " << result.suite << "\n";
    }
    return result.pass ? kExitOk : kExitVerificationFailed;
}

int run_atlas(std::uint32_t max_n, const std::string& out_path, const std::string& format,
              std::uint64_t gate, unsigned threads) {
    AtlasOptions opts;
    opts.jet_gate = gate;
    opts.threads = threads;
    const auto records = atlas_sweep(max_n, opts);
    std::ofstream out(out_path);
    if (!out) throw Error("unwritable output path: " + out_path);
    if (format == "csv")
        out << atlas_csv(records);
    else
        out << atlas_json(records).dump(2) << "\n";
    if (!out.good()) throw Error("failed writing output path: " + out_path);
    std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
    return kExitOk;
}

int run_pfb(std::uint32_t n, bool as_json) {
    const std::uint32_t bound = pfb_upper_bound(n);
    if (as_json)
        print_json({{"n", n}, {"pfb_upper_bound", bound}});
    else
        std::cout << "pfb(Z/" << n << ") <= " << bound << "\n";
    return kExitOk;
}

int run_rivest(const std::string& poly_text, std::uint32_t modulus, bool as_json) {
    const ResiduePoly f = parse_poly(poly_text, modulus);
    const bool result = rivest_is_permutation(f);
    if (as_json)
        print_json({{"modulus", modulus},
                    {"poly", format_poly(f)},
                    {"is_permutation", result}});
    else
        std::cout << format_poly(f) << " mod " << modulus << ": "
                  << (result ? "permutation" : "not a permutation") << "\n";
    return kExitOk;
}

int run_fractal(std::uint32_t p, std::uint32_t k, bool as_json, std::uint64_t gate) {
    try {
        const FractalReport report = compare_pgr_fpg(p, k, gate);
        if (as_json) {
            print_json(fractal_report_json(report));
        } else {
            std::cout << "Fpg(Z/" << p << "^" << k << ") = " << report.fpg_order << " ("
                      << report.fpg_method
                      << "; derived closed form prod (p!)^(p^l), cross-checked by exhaustive "
                         "scan where p^k <= 8)\n"
                      << "Pgr(Z/" << p << "^" << k << ") = " << report.pgr_order << " ("
                      << report.pgr_method << ")\n"
                      << "proper subgroup: " << (report.is_proper ? "yes" : "no") << "\n";
            if (report.index_integral) std::cout << "index: " << report.index << "\n";
        }
    } catch (const GateExceeded& e) {
        // Degrade to the fractal side only; the polynomial side is gated.
        const BigInt fpg = fpg_order_recursion(p, k);
        if (as_json) {
            print_json({{"p", p},
                        {"k", k},
                        {"fpg_order", fpg.str()},
                        {"fpg_method", "recursion"},
                        {"pgr_order", nullptr},
                        {"pgr_method", "gated"},
                        {"proper", nullptr},
                        {"index", nullptr},
                        {"note", std::string("pgr order not computed: ") + e.what()}});
        } else {
            std::cout << "Fpg(Z/" << p << "^" << k << ") = " << fpg << " (recursion)\n"
                      << "Pgr(Z/" << p << "^" << k << "): not computed (" << e.what() << ")\n";
        }
    }
    return kExitOk;
}

int run_is_poly(std::uint32_t p, std::uint32_t k, const std::string& cycles, bool as_json) {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        n *= p;
        if (n > (1ULL << 20)) throw Error("p^k too large for a permutation table");
    }
    const Permutation f = parse_cycles(cycles, static_cast<std::uint32_t>(n));
    const bool poly = is_polynomial_function(table_from_permutation(f), p, k);
    const bool fractal = is_fractal(f, p, k);
    if (as_json)
        print_json({{"p", p},
                    {"k", k},
                    {"perm", format_cycles(f)},
                    {"is_polynomial", poly},
                    {"is_fractal", fractal}});
    else
        std::cout << format_cycles(f) << " on Z/" << n << ": polynomial "
                  << (poly ? "yes" : "no") << ", fractal " << (fractal ? "yes" : "no") << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polypermutation groups of Z/n: orders, generators, structure checks"};
    app.require_subcommand(1);

    std::uint32_t n = 0, max_n = 0, p = 0, k = 0, modulus = 0;
    std::string suite, out_path, format = "csv", poly_text, cycles;
    bool as_json = false;

    auto* analyze = app.add_subcommand("analyze", "analyze Pgr(Z/n) for one modulus");
    analyze->add_option("n", n, "modulus (>= 2)")->required();
    analyze->add_flag("--json", as_json, "emit JSON");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "counting | rivest | p2-structure | fractal | reductions | all")
        ->required();
    verify->add_flag("--json", as_json, "emit JSON");

    auto* atlas = app.add_subcommand("atlas", "tabulate orders for n = 2..max_n");
    atlas->add_option("max_n", max_n, "largest modulus (2..10000)")->required();
    atlas->add_option("--out", out_path, "output file")->required();
    atlas->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* pfb = app.add_subcommand("pfb", "degree bound for polynomial functions on Z/n");
    pfb->add_option("n", n, "modulus (>= 2)")->required();
    pfb->add_flag("--json", as_json, "emit JSON");

    auto* rivest = app.add_subcommand("rivest", "parity criterion over Z/2^w");
    rivest->add_option("poly", poly_text, "polynomial, e.g. \"x^4+x^2+x\" or \"[0,1,6,1]\"")
        ->required();
    rivest->add_option("--modulus", modulus, "power of two >= 4")->required();
    rivest->add_flag("--json", as_json, "emit JSON");

    auto* fractal = app.add_subcommand("fractal", "compare Pgr(Z/p^k) with the fractal group");
    fractal->add_option("p", p, "prime")->required();
    fractal->add_option("k", k, "exponent (>= 1)")->required();
    fractal->add_flag("--json", as_json, "emit JSON");

    auto* is_poly = app.add_subcommand("is-poly", "is a permutation induced by a polynomial?");
    is_poly->add_option("p", p, "prime")->required();
    is_poly->add_option("k", k, "exponent (>= 1)")->required();
    is_poly->add_option("--perm", cycles, "cycle notation on p^k points")->required();
    is_poly->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const std::uint64_t gate = env_gate();
        const unsigned threads = env_threads();
        if (analyze->parsed()) return run_analyze(n, as_json, gate);
        if (verify->parsed()) return run_verify(suite, as_json, gate);
        if (atlas->parsed()) return run_atlas(max_n, out_path, format, gate, threads);
        if (pfb->parsed()) return run_pfb(n, as_json);
        if (rivest->parsed()) return run_rivest(poly_text, modulus, as_json);
        if (fractal->parsed()) return run_fractal(p, k, as_json, gate);
        if (is_poly->parsed()) return run_is_poly(p, k, cycles, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
