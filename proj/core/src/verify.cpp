#include "mt/verify.hpp"

#include <algorithm>

#include "mt/catalog.hpp"

namespace mt {

std::string oracle_witness_id(const Graph& h) {
    return h.order() <= kCanonicalMaxOrder ? canonical_form(h) : write_graph6(h);
}

bool catalog_allowed(GraphClass cls, std::string_view catalog, bool promise) {
    switch (cls) {
        case GraphClass::MT:
            if (promise) return catalog == "F" || catalog == "P4";
            return catalog == "fdisc" || catalog == "fcog" || catalog == "forest" || catalog == "oracle";
        case GraphClass::TC12:
            if (promise) return catalog == "F";
            return catalog == "F" || catalog == "holes" || catalog == "oracle";
        case GraphClass::Split:
            return !promise && (catalog == "split" || catalog == "oracle");
    }
    return false;
}

Check verify_witness(const Graph& g, const NoCertificate& c, GraphClass cls, int cap) {
    bool promise = c.kind == NoKind::PromiseViolation;
    if (!catalog_allowed(cls, c.catalog, promise))
        return Check::reject("catalog-not-allowed", {}, c.catalog + " for class " + std::string(class_name(cls)));
    if (const auto* cat = catalog_by_name(c.catalog)) return verify_no_certificate(g, c, *cat);

    // catalog "oracle"
    if (int(c.witness.size()) > cap) return Check::reject("witness-above-cap", c.witness);
    std::vector<int> sorted = c.witness;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return Check::reject("witness-repeats", c.witness);
    for (int v : sorted)
        if (v < 0 || v >= g.order()) return Check::reject("witness-range", {v});
    Graph h = induced_subgraph(g, c.witness).graph;
    if (c.obstruction_id != oracle_witness_id(h))
        return Check::reject("witness-id", c.witness, "id must be the graph6 of the witness, canonical up to 12 vertices");
    if (!is_minimal_obstruction(h, oracle_for(cls, cap))) return Check::reject("witness-not-minimal", c.witness);
    return Check::accept();
}

Check verify_result(const Graph& g, const RecognitionResult& r, GraphClass cls, int cap) {
    const Certificate& cert = r.certificate;
    switch (r.verdict) {
        case Verdict::Yes:
            if (std::holds_alternative<std::monostate>(cert))
                return r.partition_omitted ? Check::accept() : Check::reject("missing-partition");
            if (cls == GraphClass::MT) {
                if (auto* p = std::get_if<MTPartition>(&cert)) return verify_mt_partition(g, *p);
                if (auto* p = std::get_if<MTFourPartition>(&cert)) return verify_mt_four_partition(g, *p);
            }
            if (cls == GraphClass::TC12)
                if (auto* p = std::get_if<TC12Partition>(&cert)) return verify_tc12_partition(g, *p);
            if (cls == GraphClass::Split)
                if (auto* p = std::get_if<SplitPartition>(&cert)) return verify_split_partition(g, *p);
            return Check::reject("certificate-type", {}, "partition does not match the class");
        case Verdict::No:
            if (std::holds_alternative<std::monostate>(cert)) return Check::accept();  // decision only
            if (auto* c = std::get_if<NoCertificate>(&cert)) {
                if (c->kind == NoKind::PromiseViolation) return Check::reject("kind-mismatch");
                return verify_witness(g, *c, cls, cap);
            }
            return Check::reject("certificate-type", {}, "a no-answer carries a partition");
        case Verdict::Undecided:
            if (std::holds_alternative<std::monostate>(cert)) return Check::accept();
            if (auto* c = std::get_if<NoCertificate>(&cert)) {
                if (c->kind != NoKind::PromiseViolation) return Check::reject("kind-mismatch");
                return verify_witness(g, *c, cls, cap);
            }
            return Check::reject("certificate-type");
    }
    return Check::reject("verdict");
}

}  // namespace mt
