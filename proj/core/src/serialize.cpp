#include "mt/serialize.hpp"

#include <algorithm>

#include <json.hpp>

namespace mt {

using nlohmann::json;

namespace {

json vertices(const VertexSet& s) { return s.members(); }

template <class... Named>
json parts(Named&&... named) {
    json p = json::object();
    ((p[named.first] = vertices(named.second)), ...);
    return p;
}

[[noreturn]] void schema(const std::string& what) { throw SchemaError("certificate schema: " + what); }

std::vector<int> int_array(const json& j, const std::string& where) {
    if (!j.is_array()) schema(where + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > (1 << 30))
            schema(where + " must hold non-negative vertex numbers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

std::string_view certificate_kind(const RecognitionResult& r) {
    return std::visit(
        [](const auto& c) -> std::string_view {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, MTPartition>) return "mt-partition";
            if constexpr (std::is_same_v<T, MTFourPartition>) return "mt-four-partition";
            if constexpr (std::is_same_v<T, TC12Partition>) return "tc12-partition";
            if constexpr (std::is_same_v<T, SplitPartition>) return "split-partition";
            if constexpr (std::is_same_v<T, NoCertificate>)
                return c.kind == NoKind::PromiseViolation ? "promise-violation" : "obstruction";
            return "none";
        },
        r.certificate);
}

std::string to_json(const RecognitionResult& r, GraphClass cls, int indent) {
    json j;
    j["class"] = class_name(cls);
    j["verdict"] = verdict_name(r.verdict);
    j["kind"] = certificate_kind(r);
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, MTPartition> || std::is_same_v<T, TC12Partition>)
                j["partition"] = parts(std::pair{"A", c.A}, std::pair{"B", c.B});
            if constexpr (std::is_same_v<T, MTFourPartition>)
                j["partition"] = parts(std::pair{"K", c.K}, std::pair{"Mbar", c.Mbar}, std::pair{"S", c.S},
                                       std::pair{"M", c.M});
            if constexpr (std::is_same_v<T, SplitPartition>)
                j["partition"] = parts(std::pair{"K", c.K}, std::pair{"S", c.S});
            if constexpr (std::is_same_v<T, NoCertificate>) {
                j["obstruction_id"] = c.obstruction_id;
                j["witness"] = c.witness;
                j["catalog"] = c.catalog;
            }
        },
        r.certificate);
    j["partition_omitted"] = r.partition_omitted;
    if (!r.route.empty()) j["route"] = r.route;
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump(indent);
}

ParsedResult result_from_json(std::string_view text, int order) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        schema(std::string("not JSON: ") + e.what());
    }
    if (!j.is_object()) schema("top level must be an object");
    static const std::vector<std::string> known = {"class",   "verdict", "kind",  "partition", "witness", "obstruction_id",
                                                   "catalog", "route",   "note",  "partition_omitted"};
    for (const auto& [k, v] : j.items())
        if (std::find(known.begin(), known.end(), k) == known.end()) schema("unknown field " + k);
    auto str = [&](const char* key, bool required) -> std::string {
        if (!j.contains(key)) {
            if (required) schema(std::string("missing ") + key);
            return {};
        }
        if (!j[key].is_string()) schema(std::string(key) + " must be a string");
        return j[key].get<std::string>();
    };

    ParsedResult out;
    std::string cls = str("class", true);
    if (cls == "mt") out.cls = GraphClass::MT;
    else if (cls == "tc12") out.cls = GraphClass::TC12;
    else if (cls == "split") out.cls = GraphClass::Split;
    else schema("unknown class " + cls);

    std::string verdict = str("verdict", true);
    RecognitionResult& r = out.result;
    if (verdict == "yes") r.verdict = Verdict::Yes;
    else if (verdict == "no") r.verdict = Verdict::No;
    else if (verdict == "undecided") r.verdict = Verdict::Undecided;
    else schema("unknown verdict " + verdict);
    r.route = str("route", false);
    r.note = str("note", false);
    if (j.contains("partition_omitted")) {
        if (!j["partition_omitted"].is_boolean()) schema("partition_omitted must be a boolean");
        r.partition_omitted = j["partition_omitted"].get<bool>();
    }

    std::string kind = str("kind", true);
    bool is_partition = kind == "mt-partition" || kind == "mt-four-partition" || kind == "tc12-partition" ||
                        kind == "split-partition";
    bool is_no = kind == "obstruction" || kind == "promise-violation";
    if (!is_partition && !is_no && kind != "none") schema("unknown kind " + kind);
    if (!is_partition && j.contains("partition")) schema("partition present for kind " + kind);
    if (!is_no && (j.contains("witness") || j.contains("obstruction_id") || j.contains("catalog")))
        schema("witness fields present for kind " + kind);

    if (is_partition) {
        if (!j.contains("partition") || !j["partition"].is_object()) schema("partition object required");
        const json& p = j["partition"];
        std::vector<std::string> names;
        if (kind == "mt-four-partition") names = {"K", "Mbar", "S", "M"};
        else if (kind == "split-partition") names = {"K", "S"};
        else names = {"A", "B"};
        for (const auto& [k, v] : p.items())
            if (std::find(names.begin(), names.end(), k) == names.end()) schema("unexpected part " + k);
        std::vector<std::vector<int>> raw;
        int universe = order;
        for (const auto& name : names) {
            if (!p.contains(name)) schema("missing part " + name);
            raw.push_back(int_array(p[name], "partition." + name));
            for (int v : raw.back()) universe = std::max(universe, v + 1);
        }
        std::vector<VertexSet> sets;
        for (const auto& vs : raw) sets.push_back(VertexSet::of(universe, vs));
        if (kind == "mt-partition") r.certificate = MTPartition{sets[0], sets[1]};
        else if (kind == "tc12-partition") r.certificate = TC12Partition{sets[0], sets[1]};
        else if (kind == "split-partition") r.certificate = SplitPartition{sets[0], sets[1]};
        else r.certificate = MTFourPartition{sets[0], sets[1], sets[2], sets[3]};
    } else if (is_no) {
        NoCertificate c;
        c.obstruction_id = str("obstruction_id", true);
        c.catalog = str("catalog", true);
        if (!j.contains("witness")) schema("missing witness");
        c.witness = int_array(j["witness"], "witness");
        c.kind = kind == "promise-violation" ? NoKind::PromiseViolation : NoKind::Obstruction;
        r.certificate = std::move(c);
    }
    return out;
}

}  // namespace mt
