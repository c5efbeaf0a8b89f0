#pragma once

#include <vector>

#include "klr/laurent_poly.hpp"
#include "klr/maximal_weights.hpp"

namespace klr {

using Partition = std::vector<int>;

struct Multipartition {
    std::vector<Partition> components;

    int size() const;
    auto operator<=>(const Multipartition&) const = default;
};

// Node (component, row, column), all 0-based. Later components sit below earlier ones.
struct Node {
    int comp;
    int row;
    int col;

    auto operator<=>(const Node&) const = default;
};

struct StandardTableau {
    // filling[s][r][c] is the entry at node (s, r, c), numbered from 1
    std::vector<std::vector<IntVec>> filling;
    IntVec residues;
    int degree = 0;
};

inline constexpr int kDefaultMaxSize = 14;

// Expression Lambda = Lambda_{i_1} + ... + Lambda_{i_k} with i_1 <= ... <= i_k.
IntVec canonical_charges(const LevelKDominant& base);

int node_residue(const IntVec& charges, int e, const Node& p);

std::vector<Node> addable_nodes(const Multipartition& mp);
std::vector<Node> removable_nodes(const Multipartition& mp);

// Residue content as coefficients of alpha_0..alpha_{e-1}.
IntVec content(const Multipartition& mp, const IntVec& charges, int e);

// Addable minus removable nodes of residue res(p) strictly below p.
int d_below(const Multipartition& mp, const IntVec& charges, int e, const Node& p);

std::vector<Multipartition> enumerate_with_content(const IntVec& charges, const RootVector& beta,
                                                   int max_size = kDefaultMaxSize);

std::vector<StandardTableau> std_tableaux(const Multipartition& mp, const IntVec& charges, int e);

// All sequences nu with sum alpha_{nu_t} = beta, lexicographic.
std::vector<IntVec> residue_sequences(const RootVector& beta);

// dim_q e(nu) R^Lambda(beta) e(nu2)
LaurentPoly graded_dim(const IntVec& charges, const RootVector& beta, const IntVec& nu, const IntVec& nu2,
                       int max_size = kDefaultMaxSize);

// dim_q R^Lambda(beta)
LaurentPoly graded_dim_total(const IntVec& charges, const RootVector& beta, int max_size = kDefaultMaxSize);

// Pairwise graded_dim over a list of idempotents.
std::vector<std::vector<LaurentPoly>> graded_dim_matrix(const IntVec& charges, const RootVector& beta,
                                                        const std::vector<IntVec>& idempotents,
                                                        int max_size = kDefaultMaxSize);

} // namespace klr
