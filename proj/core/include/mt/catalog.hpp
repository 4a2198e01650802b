#pragma once

#include <string_view>
#include <vector>

#include "mt/certificates.hpp"

namespace mt {

// Named catalogs. Each is built once and cached.
const ObstructionCatalog& split_catalog();        // 2K2, C4, C5
const ObstructionCatalog& f_catalog();            // 2P3, P3+K3, 2K3, C4 (promise), C5, C6
const ObstructionCatalog& component_catalog();    // the twelve J graphs
const ObstructionCatalog& fdisc_catalog();        // 28 disconnected minimal MT-obstructions
const ObstructionCatalog& fcog_catalog();         // cograph minimal MT-obstructions
const ObstructionCatalog& forest_catalog();       // 11 forests on 9 vertices, transcribed
const ObstructionCatalog& p4_catalog();           // P4, the cograph promise witness
// C7 is C4-free and F-free yet not (1,2)-tc; the tc12 recognizer cites it from here.
const ObstructionCatalog& holes_catalog();

// Lookup by catalog name: split, F, holes, components, fdisc, fcog, forest, P4.
const ObstructionCatalog* catalog_by_name(std::string_view name);
std::vector<std::string_view> catalog_names();

// The forest obstructions rebuilt from 3P3 by joining components with one or
// two edges (no two new edges sharing a vertex), deduplicated and filtered by
// the MT oracle for minimality.
std::vector<Graph> generate_forest_obstructions();

Graph graph_3p3();

}  // namespace mt
