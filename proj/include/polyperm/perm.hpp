#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyperm/residue.hpp"

namespace polyperm {

/// A permutation of {0, ..., N-1}, stored as its image sequence.
///
/// Products throughout this library are read left to right: the product f*g
/// means "apply f first, then g", i.e. (f*g)(x) = g(f(x)). See compose().
class Permutation {
public:
    /// Identity on n points.
    explicit Permutation(std::uint32_t n);

    /// Throws unless images is a bijection of [0, N).
    explicit Permutation(std::vector<std::uint32_t> images);

    std::uint32_t size() const { return static_cast<std::uint32_t>(images_.size()); }
    std::uint32_t apply(std::uint32_t x) const { return images_[x]; }
    std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    bool is_identity() const;

    /// Multiplicative order (lcm of cycle lengths).
    std::uint64_t order() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

private:
    std::vector<std::uint32_t> images_;
};

/// Apply f first, then g: result(x) = g(f(x)).
Permutation compose(const Permutation& f, const Permutation& g);

Permutation inverse(const Permutation& f);

/// Parses disjoint-cycle notation over labels 0..N-1, e.g. "(0,1,2,3)(5,7)".
/// "e" denotes the identity. Throws ParseError on repeated labels, labels
/// >= n, or malformed parentheses.
Permutation parse_cycles(const std::string& text, std::uint32_t n);

/// Canonical cycle text: fixed points omitted, cycles ordered by least
/// element and rotated to start at it; the identity prints as "e".
std::string format_cycles(const Permutation& f);

/// Throws unless the table is bijective.
Permutation permutation_from_table(const FunctionTable& t);

FunctionTable table_from_permutation(const Permutation& f);

struct PermHash {
    std::size_t operator()(const Permutation& f) const;
};

}  // namespace polyperm
