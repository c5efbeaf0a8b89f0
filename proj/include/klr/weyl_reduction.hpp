#pragma once

#include "klr/maximal_weights.hpp"

namespace klr {

struct DominateResult {
    WeightCoeffs weight;
    long count = 0;
};

struct OrbitResult {
    enum class Status { Zero, Nonzero };

    Status status = Status::Zero;
    RootVector beta0;  // member of P^Lambda when Nonzero
    int m = 0;         // delta depth
    long reflection_count = 0;
};

const char* to_string(OrbitResult::Status status);

// r_i mu = mu - <h_i, mu> alpha_i
WeightCoeffs simple_reflect(const WeightCoeffs& mu, int i);

// Reflect at the smallest index with a negative pairing until dominant.
DominateResult dominate(const WeightCoeffs& mu, long cap);

// 10 * (|beta| + 1) * e
long default_iteration_cap(const RootVector& beta);

// Lambda - beta in the Lambda/delta basis.
WeightCoeffs weight_of(const LevelKDominant& base, const RootVector& beta);

// Root coordinates of Lambda - mu, which must lie in Lambda + Q.
RootVector root_difference(const LevelKDominant& base, const WeightCoeffs& mu);

// cap <= 0 selects default_iteration_cap(beta).
OrbitResult orbit_representative(const LevelKDominant& base, const RootVector& beta, long cap = 0);

} // namespace klr
