#include "polyperm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace polyperm {

Permutation::Permutation(std::uint32_t n) : images_(n) {
    std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t v : images_) {
        if (v >= images_.size() || seen[v]) throw Error("Permutation: image sequence is not a bijection");
        seen[v] = true;
    }
}

bool Permutation::is_identity() const {
    for (std::uint32_t x = 0; x < images_.size(); ++x)
        if (images_[x] != x) return false;
    return true;
}

std::uint64_t Permutation::order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t ord = 1;
    for (std::uint32_t x = 0; x < images_.size(); ++x) {
        if (seen[x]) continue;
        std::uint64_t len = 0;
        std::uint32_t y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = images_[y];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size()) throw SizeMismatch("compose: size mismatch");
    std::vector<std::uint32_t> images(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) images[x] = g.apply(f.apply(x));
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& f) {
    std::vector<std::uint32_t> images(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) images[f.apply(x)] = x;
    return Permutation(std::move(images));
}

Permutation parse_cycles(const std::string& text, std::uint32_t n) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<bool> used(n, false);

    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_spaces();
    if (pos < text.size() && text[pos] == 'e') {
        ++pos;
        skip_spaces();
        if (pos != text.size()) throw ParseError("trailing characters after identity 'e'");
        return Permutation(std::move(images));
    }

    bool any_cycle = false;
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
        ++pos;
        std::vector<std::uint32_t> cycle;
        while (true) {
            skip_spaces();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected label in cycle notation");
            std::uint64_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                if (v > 0xffffffffULL) throw ParseError("label too large");
                ++pos;
            }
            if (v >= n) throw ParseError("cycle label out of range");
            if (used[v]) throw ParseError("repeated label in cycle notation");
            used[v] = true;
            cycle.push_back(static_cast<std::uint32_t>(v));
            skip_spaces();
            if (pos >= text.size()) throw ParseError("unterminated cycle");
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            throw ParseError("expected ',' or ')' in cycle notation");
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        any_cycle = true;
        skip_spaces();
    }
    if (!any_cycle) throw ParseError("empty cycle notation");
    return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& f) {
    std::string out;
    std::vector<bool> seen(f.size(), false);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        if (seen[x] || f.apply(x) == x) {
            seen[x] = true;
            continue;
        }
        out += '(';
        std::uint32_t y = x;
        bool first = true;
        while (!seen[y]) {
            seen[y] = true;
            if (!first) out += ',';
            out += std::to_string(y);
            first = false;
            y = f.apply(y);
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

Permutation permutation_from_table(const FunctionTable& t) {
    if (!t.is_bijective()) throw Error("table is not bijective");
    return Permutation(t.images());
}

FunctionTable table_from_permutation(const Permutation& f) {
    return FunctionTable(f.size(), f.images());
}

std::size_t PermHash::operator()(const Permutation& f) const {
    // FNV-1a over the image words.
    std::size_t h = 1469598103934665603ULL;
    for (std::uint32_t v : f.images()) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace polyperm
