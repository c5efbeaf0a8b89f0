#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "klr/error.hpp"

namespace klr {

using IntVec = std::vector<int>;
using IntMatrix = std::vector<IntVec>;

// Affine type A_ell^(1). Indices live in I = {0..ell} and are reduced mod e = ell + 1.
struct AffineRank {
    int ell;

    explicit AffineRank(int ell_);

    int e() const { return ell + 1; }
    int mod(long long i) const;
};

// Weight sum_i lambda[i] Lambda_i + delta * delta. Negative coefficients are allowed.
struct WeightCoeffs {
    IntVec lambda;
    int delta = 0;

    int level() const;
    bool dominant() const;

    auto operator<=>(const WeightCoeffs&) const = default;
};

// Element sum_i coeffs[i] alpha_i of the root lattice.
struct RootVector {
    IntVec coeffs;

    int height() const;
    bool nonnegative() const;

    auto operator<=>(const RootVector&) const = default;
};

IntMatrix cartan_matrix(const AffineRank& rank);

// <h_i, mu>; i is reduced mod e.
int pairing(int i, const WeightCoeffs& mu);

WeightCoeffs alpha_to_weight(int i, const AffineRank& rank);

// sum_i beta_i alpha_i in the Lambda/delta basis.
WeightCoeffs root_to_weight(const RootVector& beta);

// beta = beta0 + m delta with min(beta0) = 0.
std::pair<RootVector, int> delta_decompose(const RootVector& beta);

// Coefficient at i moves to i + shift (mod e).
IntVec rotate(const IntVec& v, int shift);
WeightCoeffs sigma_rotate(const WeightCoeffs& w, int shift);
RootVector sigma_rotate(const RootVector& beta, int shift);

// Indicator of the cyclic interval [i, j].
IntVec interval_delta(int i, int j, const AffineRank& rank);

// "2Λ_0+Λ_3" style; "0" for the zero vector.
std::string format_weight(const IntVec& coeffs);
std::string format_weight(const WeightCoeffs& w);
std::string format_root(const RootVector& beta);
std::string format_vector(const IntVec& v);

} // namespace klr
