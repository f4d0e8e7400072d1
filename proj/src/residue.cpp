#include "polyperm/residue.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "polyperm/bigint.hpp"

namespace polyperm {

BigInt factorial(std::uint64_t n) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt big_pow(BigInt base, std::uint64_t exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// RingSpec

RingSpec::RingSpec(std::uint32_t n) : n_(n) {
    if (n < 2) throw Error("RingSpec: modulus must be >= 2");
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            std::uint32_t k = 0;
            while (m % p == 0) {
                m /= p;
                ++k;
            }
            factors_.push_back({static_cast<std::uint32_t>(p), k});
        }
    }
    if (m > 1) factors_.push_back({static_cast<std::uint32_t>(m), 1});
}

RingSpec::RingSpec(std::uint32_t n, std::vector<PrimePower> factors) : n_(n), factors_(std::move(factors)) {
    if (n < 2) throw Error("RingSpec: modulus must be >= 2");
    std::uint64_t prod = 1;
    std::uint32_t prev = 0;
    for (const auto& f : factors_) {
        if (f.p <= prev) throw Error("RingSpec: primes must be strictly increasing");
        if (!is_prime(f.p)) throw Error("RingSpec: factor base is not prime");
        if (f.k < 1) throw Error("RingSpec: exponent must be >= 1");
        prev = f.p;
        for (std::uint32_t i = 0; i < f.k; ++i) {
            prod *= f.p;
            if (prod > n) throw Error("RingSpec: factorization does not reconstruct modulus");
        }
    }
    if (prod != n) throw Error("RingSpec: factorization does not reconstruct modulus");
}

bool RingSpec::squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.k == 1; });
}

bool RingSpec::is_prime(std::uint32_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// ResiduePoly

ResiduePoly::ResiduePoly(std::uint32_t n, std::vector<std::uint32_t> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
    if (n < 2) throw Error("ResiduePoly: modulus must be >= 2");
    for (std::uint32_t c : coeffs_)
        if (c >= n) throw Error("ResiduePoly: coefficient not reduced mod n");
}

ResiduePoly ResiduePoly::from_integers(std::uint32_t n, const std::vector<long long>& coeffs) {
    if (n < 2) throw Error("ResiduePoly: modulus must be >= 2");
    std::vector<std::uint32_t> reduced;
    reduced.reserve(coeffs.size());
    for (long long c : coeffs) {
        long long r = c % static_cast<long long>(n);
        if (r < 0) r += n;
        reduced.push_back(static_cast<std::uint32_t>(r));
    }
    return ResiduePoly(n, std::move(reduced));
}

int ResiduePoly::degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

ResiduePoly ResiduePoly::canonical() const {
    std::vector<std::uint32_t> c(coeffs_.begin(), coeffs_.begin() + (degree() + 1));
    return ResiduePoly(n_, std::move(c));
}

ResiduePoly ResiduePoly::operator+(const ResiduePoly& rhs) const {
    if (n_ != rhs.n_) throw SizeMismatch("polynomial addition: modulus mismatch");
    std::vector<std::uint32_t> c(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint64_t s = 0;
        if (i < coeffs_.size()) s += coeffs_[i];
        if (i < rhs.coeffs_.size()) s += rhs.coeffs_[i];
        c[i] = static_cast<std::uint32_t>(s % n_);
    }
    return ResiduePoly(n_, std::move(c));
}

ResiduePoly ResiduePoly::operator*(const ResiduePoly& rhs) const {
    if (n_ != rhs.n_) throw SizeMismatch("polynomial multiplication: modulus mismatch");
    if (degree() < 0 || rhs.degree() < 0) return ResiduePoly(n_, {});
    std::vector<std::uint32_t> c(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            std::uint64_t v = c[i + j] + static_cast<std::uint64_t>(coeffs_[i]) * rhs.coeffs_[j] % n_;
            c[i + j] = static_cast<std::uint32_t>(v % n_);
        }
    }
    return ResiduePoly(n_, std::move(c));
}

// ---------------------------------------------------------------------------
// FunctionTable

FunctionTable::FunctionTable(std::uint32_t n, std::vector<std::uint32_t> images)
    : n_(n), images_(std::move(images)) {
    if (n < 2) throw Error("FunctionTable: modulus must be >= 2");
    if (images_.size() != n) throw SizeMismatch("FunctionTable: length must equal modulus");
    for (std::uint32_t v : images_)
        if (v >= n) throw Error("FunctionTable: entry not reduced mod n");
}

bool FunctionTable::is_bijective() const {
    std::vector<bool> seen(n_, false);
    for (std::uint32_t v : images_) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool FunctionTable::operator<(const FunctionTable& rhs) const {
    if (n_ != rhs.n_) return n_ < rhs.n_;
    return images_ < rhs.images_;
}

// ---------------------------------------------------------------------------
// Operations

std::uint32_t eval_poly(const ResiduePoly& f, std::uint32_t x) {
    const std::uint32_t n = f.modulus();
    if (x >= n) throw Error("eval_poly: argument not reduced mod n");
    std::uint64_t acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % n;
    return static_cast<std::uint32_t>(acc);
}

FunctionTable poly_to_table(const ResiduePoly& f) {
    const std::uint32_t n = f.modulus();
    std::vector<std::uint32_t> images(n);
    for (std::uint32_t x = 0; x < n; ++x) images[x] = eval_poly(f, x);
    return FunctionTable(n, std::move(images));
}

bool is_permutation_polynomial(const ResiduePoly& f) {
    return poly_to_table(f).is_bijective();
}

ResiduePoly formal_derivative(const ResiduePoly& f) {
    const std::uint32_t n = f.modulus();
    const auto& c = f.coeffs();
    if (c.size() <= 1) return ResiduePoly(n, {});
    std::vector<std::uint32_t> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        d[i - 1] = static_cast<std::uint32_t>((i % n) * static_cast<std::uint64_t>(c[i]) % n);
    return ResiduePoly(n, std::move(d));
}

std::uint32_t pfb_upper_bound(std::uint32_t n) {
    RingSpec ring(n);
    std::uint32_t k_max = 0;
    for (const auto& f : ring.factors()) k_max = std::max(k_max, f.k);
    const std::uint64_t cap = static_cast<std::uint64_t>(n) * k_max + 2;

    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::uint32_t> power(n);
    for (std::uint32_t x = 0; x < n; ++x) power[x] = x;
    seen.insert(power);
    for (std::uint64_t d = 2; d <= cap; ++d) {
        for (std::uint32_t x = 0; x < n; ++x)
            power[x] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(power[x]) * x % n);
        if (!seen.insert(power).second) return static_cast<std::uint32_t>(d - 1);
    }
    return static_cast<std::uint32_t>(cap);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

std::uint64_t parse_uint(const std::string& s, std::size_t& pos, const char* what) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw ParseError(std::string("expected ") + what + " in polynomial text");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
        if (v > 0x7fffffffULL) throw ParseError("numeric literal too large in polynomial text");
        ++pos;
    }
    return v;
}

ResiduePoly parse_coeff_list(const std::string& s, std::uint32_t n) {
    if (s.size() < 2 || s.back() != ']') throw ParseError("unterminated coefficient list");
    std::vector<std::uint32_t> coeffs;
    std::size_t pos = 1;
    if (s == "[]") return ResiduePoly(n, {});
    while (true) {
        if (pos < s.size() && s[pos] == '-') throw ParseError("negative coefficient rejected");
        std::uint64_t v = parse_uint(s, pos, "coefficient");
        if (v >= n) throw ParseError("coefficient not reduced mod n");
        coeffs.push_back(static_cast<std::uint32_t>(v));
        if (pos >= s.size()) throw ParseError("unterminated coefficient list");
        if (s[pos] == ']') {
            if (pos + 1 != s.size()) throw ParseError("trailing characters after coefficient list");
            break;
        }
        if (s[pos] != ',') throw ParseError("expected ',' in coefficient list");
        ++pos;
    }
    return ResiduePoly(n, std::move(coeffs));
}

ResiduePoly parse_monomial_form(const std::string& s, std::uint32_t n) {
    if (s.empty()) throw ParseError("empty polynomial text");
    std::vector<std::uint32_t> coeffs;
    auto add_term = [&](std::uint64_t coeff, std::uint64_t power) {
        if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
        coeffs[power] = static_cast<std::uint32_t>((coeffs[power] + coeff) % n);
    };
    std::size_t pos = 0;
    while (true) {
        if (pos < s.size() && s[pos] == '-') throw ParseError("negative coefficient rejected");
        std::uint64_t coeff = 1;
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = parse_uint(s, pos, "coefficient");
            if (coeff >= n) throw ParseError("coefficient not reduced mod n");
            have_coeff = true;
        }
        std::uint64_t power = 0;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                power = parse_uint(s, pos, "exponent");
                if (power > 1000000) throw ParseError("exponent too large");
            }
        } else if (!have_coeff) {
            throw ParseError("malformed term in polynomial text");
        }
        add_term(coeff, power);
        if (pos == s.size()) break;
        if (s[pos] != '+') throw ParseError("expected '+' between terms");
        ++pos;
        if (pos == s.size()) throw ParseError("dangling '+' in polynomial text");
    }
    return ResiduePoly(n, std::move(coeffs));
}

}  // namespace

ResiduePoly parse_poly(const std::string& text, std::uint32_t n) {
    if (n < 2) throw Error("parse_poly: modulus must be >= 2");
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty polynomial text");
    if (s.front() == '[') return parse_coeff_list(s, n);
    return parse_monomial_form(s, n);
}

std::string format_poly(const ResiduePoly& f) {
    const int deg = f.degree();
    if (deg < 0) return "0";
    std::string out;
    const auto& c = f.coeffs();
    for (int i = deg; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]);
            out += 'x';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

std::string format_coeff_list(const ResiduePoly& f) {
    std::string out = "[";
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    out += ']';
    return out;
}

}  // namespace polyperm
