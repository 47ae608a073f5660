#include "polarcog/serialize.hpp"

#include "polarcog/errors.hpp"
#include "polarcog/graph6.hpp"

namespace polarcog {

namespace {

nlohmann::json members_json(VertexSet s) { return s.members(); }

VertexSet set_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InvalidInput("vertex set must be a JSON array");
    VertexSet s;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidInput("vertex must be an integer");
        const int x = v.get<int>();
        if (x < 0 || x >= kMaxVertices) throw InvalidInput("vertex out of range");
        if (s.contains(x)) throw InvalidInput("vertex listed twice");
        s.insert(x);
    }
    return s;
}

}  // namespace

nlohmann::json to_json(const PolarPartition& p) {
    nlohmann::json parts = nlohmann::json::array();
    for (VertexSet part : p.a_parts) parts.push_back(members_json(part));
    return {{"A", parts}, {"B", members_json(p.b)}};
}

PolarPartition partition_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("B") || !j["A"].is_array())
        throw InvalidInput("partition must be an object with \"A\" and \"B\"");
    PolarPartition p;
    for (const auto& part : j["A"]) p.a_parts.push_back(set_from_json(part));
    p.b = set_from_json(j["B"]);
    return p;
}

nlohmann::json to_json(const Certificate& c) {
    if (c.verdict == Certificate::Verdict::Polar) return {{"verdict", "polar"}, {"partition", to_json(c.partition)}};
    return {{"verdict", "obstruction"}, {"vertices", members_json(c.obstruction)}, {"canonical", c.canonical}};
}

nlohmann::json catalog_json(const std::vector<FamilyMember>& members) {
    nlohmann::json out = nlohmann::json::array();
    for (const FamilyMember& m : members) {
        out.push_back({{"expr", m.expr.to_string()},
                       {"g6", graph6_encode(m.graph)},
                       {"order", m.graph.order()},
                       {"connected", m.graph.is_connected()}});
    }
    return out;
}

}  // namespace polarcog
