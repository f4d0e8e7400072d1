#include "polyperm/json_io.hpp"

namespace polyperm {

using nlohmann::json;

json group_report_json(const GroupReport& r) {
    json factors = json::array();
    for (const auto& f : r.factorization) factors.push_back({{"p", f.p}, {"k", f.k}});
    json generators = json::array();
    for (const auto& g : r.generators) {
        json entry = {{"cycles", g.cycles}};
        entry["source_poly"] = g.source_poly.empty() ? json() : json(g.source_poly);
        generators.push_back(std::move(entry));
    }
    json element_orders = json();
    if (!r.element_orders.empty()) {
        element_orders = json::object();
        for (const auto& [ord, count] : r.element_orders)
            element_orders[std::to_string(ord)] = count;
    }
    return json{{"ring", r.ring_label},
                {"n", r.n},
                {"factorization", factors},
                {"order", r.order ? json(r.order->str()) : json()},
                {"order_method", r.order_method},
                {"proper_subgroup", r.proper_subgroup ? json(*r.proper_subgroup) : json()},
                {"generators", generators},
                {"recognition", r.recognition.empty() ? json() : json(r.recognition)},
                {"element_orders", element_orders},
                {"notes", r.notes}};
}

json atlas_json(const std::vector<GroupReport>& records) {
    json out = json::array();
    for (const auto& r : records) out.push_back(group_report_json(r));
    return out;
}

json fractal_report_json(const FractalReport& r) {
    json out{{"p", r.p},
             {"k", r.k},
             {"fpg_order", r.fpg_order.str()},
             {"fpg_method", r.fpg_method},
             {"pgr_order", r.pgr_order.str()},
             {"pgr_method", r.pgr_method},
             {"fpg_note", "derived closed form prod (p!)^(p^l); cross-checked by exhaustive scan where p^k <= 8"},
             {"proper", r.is_proper}};
    if (r.index_integral)
        out["index"] = r.index.str();
    else
        out["index"] = json{{"fpg", r.fpg_order.str()}, {"pgr", r.pgr_order.str()}};
    return out;
}

json suite_result_json(const SuiteResult& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"status", c.pass ? "pass" : "fail"},
                          {"detail", c.detail},
                          {"millis", c.millis}});
    return json{{"suite", r.suite}, {"pass", r.pass}, {"checks", checks}};
}

json p2_verify_report_json(const P2VerifyReport& r) {
    return json{{"p", r.p},
                {"mode", r.exhaustive ? "exhaustive" : "randomized"},
                {"group_order", r.group_order.str()},
                {"triple_count", r.triple_count.str()},
                {"injective", r.injective},
                {"surjective", r.surjective},
                {"homomorphism", r.homomorphism},
                {"pairs_checked", r.pairs_checked},
                {"counterexample", r.counterexample.empty() ? json() : json(r.counterexample)},
                {"pass", r.pass}};
}

json jet_json(const CarlitzJet& j) {
    return json{{"p", j.prime()}, {"k", j.levels()}, {"c", j.coefficients()}};
}

CarlitzJet jet_from_json(const json& j) {
    try {
        return CarlitzJet(j.at("p").get<std::uint32_t>(), j.at("k").get<std::uint32_t>(),
                          j.at("c").get<std::vector<std::vector<std::uint32_t>>>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("jet JSON: ") + e.what());
    }
}

json triple_json(const P2Triple& t) {
    return json{{"p", t.prime()}, {"a", t.a()}, {"u", t.u()}, {"sigma", format_cycles(t.sigma())}};
}

P2Triple triple_from_json(const json& j) {
    try {
        const auto p = j.at("p").get<std::uint32_t>();
        return P2Triple(p, j.at("a").get<std::vector<std::uint32_t>>(),
                        j.at("u").get<std::vector<std::uint32_t>>(),
                        parse_cycles(j.at("sigma").get<std::string>(), p));
    } catch (const json::exception& e) {
        throw ParseError(std::string("triple JSON: ") + e.what());
    }
}

}  // namespace polyperm
