#pragma once

#include <string>
#include <utility>
#include <vector>

#include "klr/cartan_datum.hpp"

namespace klr {

// Ribbon graph with vertex multiplicities. rotation[v] lists the edge ids at v in
// cyclic order; a loop appears twice.
struct BrauerGraph {
    IntVec mult;
    std::vector<std::pair<int, int>> edges;
    std::vector<IntVec> rotation;
};

// Fills rotations of vertices of degree <= 2 when missing, then validates.
BrauerGraph make_brauer_graph(IntVec mult, std::vector<std::pair<int, int>> edges,
                              std::vector<IntVec> rotation = {});

void validate(const BrauerGraph& g);

// Arrow alpha_{v,i}: E_{v,i} -> E_{v,i+1} (i is 0-based here).
struct QuiverArrow {
    int vertex;
    int index;
    int src;
    int dst;
};

// coeff * (cycle)^power * tail, arrows given by index into QuiverPresentation::arrows.
struct PathTerm {
    int coeff = 1;
    std::vector<int> cycle;
    int power = 0;
    std::vector<int> tail;
};

struct Relation {
    int family;  // 1, 2 or 3
    std::vector<PathTerm> terms;
};

struct QuiverPresentation {
    int n_vertices = 0;  // one per edge of the Brauer graph
    std::vector<QuiverArrow> arrows;
    std::vector<Relation> relations;

    std::string arrow_name(int a) const;
    std::string relation_string(const Relation& r) const;
};

QuiverPresentation quiver_presentation(const BrauerGraph& g);

// C_{E,E} = sum of endpoint multiplicities, C_{E,F} = multiplicity of the shared vertex.
IntMatrix cartan_matrix(const BrauerGraph& g);

struct DerivedInvariants {
    int n_vertices = 0;
    int n_edges = 0;
    int n_faces = 0;
    IntVec mult_multiset;       // sorted
    IntVec perimeter_multiset;  // sorted
    bool bipartite = false;

    bool operator==(const DerivedInvariants&) const = default;
};

DerivedInvariants derived_invariants(const BrauerGraph& g);

bool derived_equivalent(const BrauerGraph& a, const BrauerGraph& b);

// Line with s + 2 vertices; vertex a (1-based) has multiplicity 1, the others m.
BrauerGraph gamma_family(int s, int a, int m);

// Line with n edges and the given multiplicity at every vertex.
BrauerGraph line_graph(int n_edges, int mult);

struct DecompOptions {
    int max_entry = 0;           // 0 selects floor(sqrt(min diagonal))
    bool unitriangular = true;   // keep only D with a unitriangular square part
    long node_cap = 50'000'000;  // search nodes before SearchSpaceExceeded
};

struct DecompResult {
    std::vector<IntMatrix> solutions;  // rows sorted descending
    long nodes = 0;

    bool unique() const { return solutions.size() == 1; }
};

DecompResult decomp_search(const IntMatrix& c, const DecompOptions& options = {});

// D^t D
IntMatrix gram(const IntMatrix& d);

} // namespace klr
