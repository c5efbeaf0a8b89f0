#pragma once

#include <vector>

#include "klr/cartan_datum.hpp"

namespace klr {

// A level-k dominant weight modulo delta is its coefficient vector (m_0, ..., m_ell).
using LevelKDominant = IntVec;

struct MaxWeightEntry {
    LevelKDominant weight;
    IntVec x;
    RootVector beta;
    WeightCoeffs max_weight;
};

int level(const LevelKDominant& w);

// sum_{i >= 1} i * m_i mod e
int ev(const LevelKDominant& w);

// All level-k dominant weights with the same ev, sorted lexicographically.
std::vector<LevelKDominant> equiv_class(const LevelKDominant& w);

// Unique X >= 0 with min X = 0 solving A X^t = Y^t, Y_i = <h_i, base - target>.
IntVec solve_x(const LevelKDominant& base, const LevelKDominant& target);

// One entry per member of equiv_class(base), in the same order.
std::vector<MaxWeightEntry> max_plus(const LevelKDominant& base);

// Membership of beta in the set P^Lambda = { beta_{Lambda'} }.
bool in_p_lambda(const LevelKDominant& base, const RootVector& beta);

} // namespace klr
