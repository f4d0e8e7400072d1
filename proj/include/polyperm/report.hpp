#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyperm/bigint.hpp"
#include "polyperm/carlitz.hpp"
#include "polyperm/residue.hpp"

namespace polyperm {

struct GeneratorEntry {
    std::string cycles;
    std::string source_poly;  ///< inducing polynomial when known, else empty
};

/// Everything a single-ring analysis produces. Orders are exact; gated
/// computations leave order empty and explain themselves in notes.
struct GroupReport {
    std::uint32_t n = 0;
    std::string ring_label;  ///< e.g. "Z/8"
    std::vector<PrimePower> factorization;
    std::optional<BigInt> order;
    std::string order_method;  ///< formula | enumeration | formula+enumeration | product | gated
    std::optional<bool> proper_subgroup;  ///< order < n!, when order is known
    std::vector<GeneratorEntry> generators;
    std::string recognition;  ///< empty when not attempted
    std::map<std::uint64_t, std::uint64_t> element_orders;  ///< empty when not computed
    std::vector<std::string> notes;
};

struct AnalyzeOptions {
    std::uint64_t jet_gate = kDefaultEnumerationGate;
    bool want_generators = true;
    /// Cross-check the closed form against exhaustive enumeration when the
    /// factor fits the enumeration gates.
    bool cross_check = true;
};

GroupReport analyze_ring(std::uint32_t n, const AnalyzeOptions& opts = {});

struct AtlasOptions {
    std::uint64_t jet_gate = kDefaultEnumerationGate;
    unsigned threads = 1;
};

/// Order records for every n in [2, max_n] (max_n <= 10^4), without
/// generators or recognition. Per-n work shares a prime-power memo; records
/// come back sorted by n regardless of thread count.
std::vector<GroupReport> atlas_sweep(std::uint32_t max_n, const AtlasOptions& opts = {});

/// "2^3*5" style.
std::string format_factorization(const std::vector<PrimePower>& factors);

/// CSV with header "n,order,method,factorization"; gated rows carry "gated"
/// in the order and method columns.
std::string atlas_csv(const std::vector<GroupReport>& records);

/// Human-readable multi-line report.
std::string group_report_text(const GroupReport& r);

}  // namespace polyperm
