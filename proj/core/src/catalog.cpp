#include "mt/catalog.hpp"

#include <map>
#include <mutex>

#include "mt/oracle.hpp"

namespace mt {

namespace {

using Edges = std::vector<std::pair<int, int>>;

Graph G(int n, Edges e) { return Graph(n, e); }

Graph p3() { return path_graph(3); }
Graph k3() { return complete_graph(3); }
Graph plus(const Graph& a, const Graph& b) { return disjoint_union(a, b); }

std::vector<std::pair<std::string, Graph>> component_list() {
    return {
        {"C4", cycle_graph(4)},
        {"diamond", G(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}})},
        {"K4", complete_graph(4)},
        {"C5", cycle_graph(5)},
        {"bull", G(5, {{0, 1}, {1, 2}, {1, 4}, {3, 4}, {4, 0}})},
        {"H", G(6, {{4, 2}, {4, 3}, {4, 5}, {5, 0}, {5, 1}})},
        {"X95", G(6, {{4, 2}, {4, 3}, {4, 5}, {5, 0}, {5, 1}, {0, 1}})},
        {"2K3+e", G(6, {{4, 2}, {4, 3}, {4, 5}, {5, 0}, {5, 1}, {0, 1}, {2, 3}})},
        {"P6", path_graph(6)},
        {"X172", G(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}})},
        {"co-X98", G(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})},
        {"C6", cycle_graph(6)},
    };
}

std::vector<std::pair<std::string, Graph>> three_component_list() {
    return {
        {"3P3", plus(plus(p3(), p3()), p3())},
        {"2P3+K3", plus(plus(p3(), p3()), k3())},
        {"P3+2K3", plus(plus(p3(), k3()), k3())},
        {"3K3", plus(plus(k3(), k3()), k3())},
    };
}

std::vector<std::pair<std::string, Graph>> forest_list() {
    return {
        {"eps", G(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}})},
        {"ll", G(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}})},
        {"lc", G(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}})},
        {"cc", G(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {1, 4}})},
        {"ll-ll", path_graph(9)},
        {"ll-lc", G(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {5, 7}})},
        {"ll-cl", G(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {4, 7}, {6, 8}})},
        {"cl-cl", G(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {1, 3}, {4, 6}})},
        {"cl-cc", G(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {1, 3}, {4, 7}})},
        {"cl-lc", G(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {1, 3}, {5, 7}})},
        {"cc-ll", G(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 4}})},
    };
}

template <class Build>
const ObstructionCatalog& cached(Build build) {
    static std::once_flag once;
    static ObstructionCatalog cat;
    std::call_once(once, [&] { cat = build(); });
    return cat;
}

}  // namespace

Graph graph_3p3() { return three_component_list()[0].second; }

const ObstructionCatalog& split_catalog() {
    return cached([] {
        ObstructionCatalog c("split");
        c.add("2K2", G(4, {{0, 1}, {2, 3}}));
        c.add("C4", cycle_graph(4));
        c.add("C5", cycle_graph(5));
        return c;
    });
}

const ObstructionCatalog& f_catalog() {
    return cached([] {
        ObstructionCatalog c("F");
        c.add("2P3", plus(p3(), p3()));
        c.add("P3+K3", plus(p3(), k3()));
        c.add("2K3", plus(k3(), k3()));
        c.add("C4", cycle_graph(4), "a (1,2)-tc graph; witnesses that the input is not C4-free", true);
        c.add("C5", cycle_graph(5));
        c.add("C6", cycle_graph(6));
        return c;
    });
}

const ObstructionCatalog& holes_catalog() {
    return cached([] {
        ObstructionCatalog c("holes");
        c.add("C7", cycle_graph(7));
        return c;
    });
}

const ObstructionCatalog& component_catalog() {
    return cached([] {
        ObstructionCatalog c("components");
        for (auto& [name, g] : component_list()) c.add(name, g);
        return c;
    });
}

const ObstructionCatalog& fdisc_catalog() {
    return cached([] {
        ObstructionCatalog c("fdisc");
        for (auto& [name, g] : three_component_list()) c.add(name, g);
        for (auto& [name, g] : component_list()) {
            c.add(name + "+P3", plus(g, p3()));
            c.add(name + "+K3", plus(g, k3()));
        }
        return c;
    });
}

const ObstructionCatalog& fcog_catalog() {
    return cached([] {
        std::vector<std::pair<std::string, Graph>> base = three_component_list();
        auto comps = component_list();
        for (int i : {0, 1, 2}) {
            base.emplace_back(comps[i].first + "+P3", plus(comps[i].second, p3()));
            base.emplace_back(comps[i].first + "+K3", plus(comps[i].second, k3()));
        }
        ObstructionCatalog c("fcog");
        for (auto& [name, g] : base) c.add(name, g);
        for (auto& [name, g] : base) {
            if (find_P4(g)) throw CatalogError("fcog: " + name + " contains P4");
            c.add("co-(" + name + ")", complement(g));
        }
        return c;
    });
}

const ObstructionCatalog& forest_catalog() {
    return cached([] {
        ObstructionCatalog c("forest");
        for (auto& [name, g] : forest_list()) c.add(name, g);
        return c;
    });
}

const ObstructionCatalog& p4_catalog() {
    return cached([] {
        ObstructionCatalog c("P4");
        c.add("P4", path_graph(4), "witnesses that the input is not a cograph", true);
        return c;
    });
}

const ObstructionCatalog* catalog_by_name(std::string_view name) {
    if (name == "split") return &split_catalog();
    if (name == "F") return &f_catalog();
    if (name == "holes") return &holes_catalog();
    if (name == "components") return &component_catalog();
    if (name == "fdisc") return &fdisc_catalog();
    if (name == "fcog") return &fcog_catalog();
    if (name == "forest") return &forest_catalog();
    if (name == "P4") return &p4_catalog();
    return nullptr;
}

std::vector<std::string_view> catalog_names() { return {"split", "F", "holes", "components", "fdisc", "fcog", "forest", "P4"}; }

std::vector<Graph> generate_forest_obstructions() {
    Graph base = graph_3p3();
    auto comp = [](int v) { return v / 3; };
    std::vector<std::pair<int, int>> cross;
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            if (comp(u) != comp(v)) cross.emplace_back(u, v);
    std::vector<Edges> candidates{{}};
    for (std::size_t i = 0; i < cross.size(); ++i) {
        candidates.push_back({cross[i]});
        for (std::size_t j = i + 1; j < cross.size(); ++j) {
            auto [a, b] = cross[i];
            auto [c, d] = cross[j];
            if (a == c || a == d || b == c || b == d) continue;
            candidates.push_back({cross[i], cross[j]});
        }
    }
    std::map<CanonicalForm, Graph> out;
    auto member = oracle_for(GraphClass::MT);
    for (const auto& extra : candidates) {
        Edges e = base.edges();
        e.insert(e.end(), extra.begin(), extra.end());
        Graph g(9, e);
        if (!is_forest(g)) continue;
        CanonicalForm f = canonical_form(g);
        if (out.count(f)) continue;
        if (is_minimal_obstruction(g, member)) out.emplace(f, g);
    }
    std::vector<Graph> result;
    for (auto& [f, g] : out) result.push_back(g);
    return result;
}

}  // namespace mt
