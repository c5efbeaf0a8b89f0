#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "klr/maximal_weights.hpp"

namespace klr {

struct Arrow {
    int src;
    int dst;
    int i;
    int j;

    auto operator<=>(const Arrow&) const = default;
};

// Vertices sorted by (height of beta, coefficients); arrows sorted by (src, dst, i, j).
struct WeightQuiver {
    int ell = 1;
    LevelKDominant base;
    std::vector<MaxWeightEntry> vertices;
    std::vector<Arrow> arrows;

    // Index of the vertex with these coefficients, or -1.
    int find(const LevelKDominant& w) const;
    int base_index() const { return find(base); }
};

struct TQuiver {
    WeightQuiver quiver;
    // tags[v] is the set of s with vertex v in T(Lambda)_s; empty for the base vertex.
    std::vector<std::set<int>> tags;
};

// Lambda_{i-1} + Lambda_{j+1} replacing Lambda_i + Lambda_j.
LevelKDominant move(const LevelKDominant& w, int i, int j);

// min(x + Delta_{i,j}) == 0
bool has_arrow(const IntVec& x, int i, int j);

WeightQuiver build_quiver(const LevelKDominant& base);

std::vector<LevelKDominant> successors(const WeightQuiver& q, const LevelKDominant& v);

TQuiver t_subquiver(const LevelKDominant& base);

// Closed-form beta sets; index s = 0..5.
std::array<std::vector<RootVector>, 6> t_beta_sets(const LevelKDominant& base);

// I(Lambda)_s = { i : m_i >= s + 1 }
std::vector<int> multiplicity_support(const LevelKDominant& w, int s);

} // namespace klr
