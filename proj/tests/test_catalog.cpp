#include <set>

#include "doctest.h"
#include "mt/catalog.hpp"
#include "mt/oracle.hpp"
#include "support.hpp"

using namespace mt;
using namespace testing_support;

TEST_CASE("catalog sizes") {
    CHECK(split_catalog().size() == 3);
    CHECK(f_catalog().size() == 6);
    CHECK(component_catalog().size() == 12);
    CHECK(fdisc_catalog().size() == 28);
    CHECK(fcog_catalog().size() == 20);
    CHECK(forest_catalog().size() == 11);
    for (auto name : catalog_names()) CHECK(catalog_by_name(name) != nullptr);
    CHECK(catalog_by_name("nope") == nullptr);
}

TEST_CASE("catalog rejects duplicates") {
    ObstructionCatalog c("t");
    c.add("P3", path_graph(3));
    CHECK_THROWS_AS(c.add("P3", complete_graph(3)), CatalogError);
    CHECK_THROWS_AS(c.add("other", from_edges(3, {{0, 2}, {2, 1}})), CatalogError);
}

TEST_CASE("component graphs") {
    const auto& c = component_catalog();
    CHECK(isomorphic(c.find("C6")->graph, cycle_graph(6)));
    CHECK(c.find("K4")->graph.size() == 6);
    for (const auto& e : c.entries()) CHECK(is_connected(e.graph));
}

TEST_CASE("F catalog: every member but C4 lies outside tc12") {
    for (const auto& e : f_catalog().entries()) {
        CAPTURE(e.name);
        CHECK(e.promise == (e.name == "C4"));
        CHECK(naive_tc12(e.graph) == e.promise);
        if (!e.promise) CHECK(is_minimal_obstruction(e.graph, oracle_for(GraphClass::TC12)));
    }
}

TEST_CASE("split catalog entries are minimal non-split graphs") {
    for (const auto& e : split_catalog().entries()) {
        CHECK_FALSE(naive_split(e.graph));
        CHECK(is_minimal_obstruction(e.graph, oracle_for(GraphClass::Split)));
    }
}

TEST_CASE("every MT catalog entry is a minimal obstruction") {
    auto mt = oracle_for(GraphClass::MT);
    for (const auto* cat : {&fdisc_catalog(), &fcog_catalog(), &forest_catalog()})
        for (const auto& e : cat->entries()) {
            CAPTURE(e.name);
            CHECK_FALSE(e.promise);
            CHECK(is_minimal_obstruction(e.graph, mt));
        }
}

TEST_CASE("fdisc structure") {
    const auto& c = fdisc_catalog();
    CHECK(c.find("3P3"));
    for (const auto& e : c.entries()) {
        auto comps = connected_components(e.graph);
        int big = 0;
        for (const auto& s : comps) big += s.size() >= 3;
        CHECK(comps.size() >= 2);
        CHECK(big >= 2);
    }
}

TEST_CASE("fcog entries are cographs and include the complements") {
    const auto& c = fcog_catalog();
    for (const auto& e : c.entries()) CHECK(is_cograph(e.graph));
    Graph k4k3 = disjoint_union(complete_graph(4), complete_graph(3));
    CHECK(c.find_form(canonical_form(complement(k4k3))));
    CHECK(c.find_form(canonical_form(k4k3)));
}

TEST_CASE("forest catalog matches the generated family") {
    const auto& c = forest_catalog();
    CHECK(isomorphic(c.find("ll-ll")->graph, path_graph(9)));
    CHECK(isomorphic(c.find("eps")->graph, graph_3p3()));
    std::set<CanonicalForm> generated, transcribed;
    for (const auto& g : generate_forest_obstructions()) generated.insert(canonical_form(g));
    for (const auto& e : c.entries()) {
        CHECK(e.graph.order() == 9);
        CHECK(is_forest(e.graph));
        transcribed.insert(e.form);
    }
    CHECK(generated.size() == 11);
    CHECK(generated == transcribed);
}
