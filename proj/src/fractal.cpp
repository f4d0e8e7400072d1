#include "polyperm/fractal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "polyperm/residue.hpp"

namespace polyperm {

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) r *= base;
    return r;
}

// 3 bits per image; enough for up to 8 points.
std::uint32_t pack8(const std::vector<std::uint32_t>& images) {
    std::uint32_t key = 0;
    for (std::size_t i = 0; i < images.size(); ++i) key |= images[i] << (3 * i);
    return key;
}

}  // namespace

bool is_fractal(const Permutation& f, std::uint32_t p, std::uint32_t k) {
    if (!RingSpec::is_prime(p) || k < 1) throw Error("is_fractal: need a prime p and k >= 1");
    const std::uint64_t n = pow_u64(p, k);
    if (f.size() != n) throw SizeMismatch("is_fractal: permutation must act on p^k points");
    for (std::uint32_t level = 1; level < k; ++level)
        if (!try_reduce_permutation(f, static_cast<std::uint32_t>(pow_u64(p, level)))) return false;
    return true;
}

FpgScanResult fpg_enumerate(std::uint32_t p, std::uint32_t k) {
    if (!RingSpec::is_prime(p) || k < 1) throw Error("fpg_enumerate: need a prime p and k >= 1");
    const std::uint64_t n64 = pow_u64(p, k);
    if (n64 > 8) throw GateExceeded("fpg_enumerate: p^k must be <= 8 for the exhaustive scan");
    const auto n = static_cast<std::uint32_t>(n64);

    std::vector<std::uint32_t> moduli;
    for (std::uint32_t level = 1; level < k; ++level)
        moduli.push_back(static_cast<std::uint32_t>(pow_u64(p, level)));

    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<std::vector<std::uint32_t>> fractal;
    do {
        bool ok = true;
        for (std::uint32_t d : moduli) {
            for (std::uint32_t x = d; x < n && ok; ++x)
                if (images[x] % d != images[x % d] % d) ok = false;
            if (!ok) break;
        }
        if (ok) fractal.push_back(images);
    } while (std::next_permutation(images.begin(), images.end()));

    FpgScanResult result;
    result.count = fractal.size();

    std::unordered_set<std::uint32_t> keys;
    keys.reserve(fractal.size() * 2);
    for (const auto& f : fractal) keys.insert(pack8(f));
    result.group_closed = true;
    std::vector<std::uint32_t> scratch(n);
    for (const auto& f : fractal) {
        for (std::uint32_t x = 0; x < n; ++x) scratch[f[x]] = x;  // inverse
        if (!keys.count(pack8(scratch))) {
            result.group_closed = false;
            break;
        }
        for (const auto& g : fractal) {
            for (std::uint32_t x = 0; x < n; ++x) scratch[x] = g[f[x]];
            if (!keys.count(pack8(scratch))) {
                result.group_closed = false;
                break;
            }
        }
        if (!result.group_closed) break;
    }
    return result;
}

BigInt fpg_order_recursion(std::uint32_t p, std::uint32_t k) {
    if (!RingSpec::is_prime(p) || k < 1) throw Error("fpg_order_recursion: need a prime p and k >= 1");
    const BigInt p_factorial = factorial(p);
    BigInt order = 1;
    std::uint64_t fibres = 1;  // p^level
    for (std::uint32_t level = 0; level < k; ++level, fibres *= p) order *= big_pow(p_factorial, fibres);
    return order;
}

FractalReport compare_pgr_fpg(std::uint32_t p, std::uint32_t k, std::uint64_t jet_gate) {
    FractalReport report;
    report.p = p;
    report.k = k;

    report.fpg_order = fpg_order_recursion(p, k);
    if (pow_u64(p, k) <= 8) {
        const auto scan = fpg_enumerate(p, k);
        if (BigInt(scan.count) != report.fpg_order || !scan.group_closed)
            throw Error("compare_pgr_fpg: exhaustive scan disagrees with the recursion");
        report.fpg_method = "scan";
    } else {
        report.fpg_method = "recursion";
    }

    if (k == 1) {
        report.pgr_order = factorial(p);
        report.pgr_method = "formula";
    } else if (p >= k) {
        report.pgr_order = pgr_order_formula(p, k);
        report.pgr_method = "formula";
    } else {
        report.pgr_order = enumerate_polynomial_functions(p, k, jet_gate).bijective.size();
        report.pgr_method = "enumeration";
    }

    report.is_proper = report.pgr_order < report.fpg_order;
    if (report.fpg_order % report.pgr_order == 0) {
        report.index_integral = true;
        report.index = report.fpg_order / report.pgr_order;
    }
    return report;
}

}  // namespace polyperm
