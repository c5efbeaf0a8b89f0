#include "klr/weyl_reduction.hpp"

namespace klr {

const char* to_string(OrbitResult::Status status) {
    return status == OrbitResult::Status::Zero ? "Zero" : "Nonzero";
}

WeightCoeffs simple_reflect(const WeightCoeffs& mu, int i) {
    const AffineRank rank(static_cast<int>(mu.lambda.size()) - 1);
    const int p = pairing(i, mu);
    const WeightCoeffs a = alpha_to_weight(i, rank);
    WeightCoeffs out = mu;
    for (int h = 0; h < rank.e(); ++h) out.lambda[h] -= p * a.lambda[h];
    out.delta -= p * a.delta;
    return out;
}

DominateResult dominate(const WeightCoeffs& mu, long cap) {
    DominateResult r{mu, 0};
    const int e = static_cast<int>(mu.lambda.size());
    while (true) {
        int pivot = -1;
        for (int i = 0; i < e; ++i)
            if (r.weight.lambda[i] < 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return r;
        if (r.count >= cap)
            throw Error(ErrorKind::IterationCapExceeded,
                        "no dominant weight after " + std::to_string(cap) + " reflections from " + format_weight(mu));
        r.weight = simple_reflect(r.weight, pivot);
        ++r.count;
    }
}

long default_iteration_cap(const RootVector& beta) {
    return 10L * (beta.height() + 1) * static_cast<long>(beta.coeffs.size());
}

WeightCoeffs weight_of(const LevelKDominant& base, const RootVector& beta) {
    if (beta.coeffs.size() != base.size()) throw Error(ErrorKind::ParameterRange, "beta and weight differ in rank");
    const WeightCoeffs b = root_to_weight(beta);
    WeightCoeffs mu{base, -b.delta};
    for (std::size_t i = 0; i < base.size(); ++i) mu.lambda[i] -= b.lambda[i];
    return mu;
}

RootVector root_difference(const LevelKDominant& base, const WeightCoeffs& mu) {
    // solve_x fixes the solution up to the kernel (1^e); the delta coefficient of
    // sum x_i alpha_i is x_0, which pins the representative.
    const IntVec x = solve_x(base, mu.lambda);
    RootVector out{x};
    const int shift = -mu.delta - x[0];
    for (int& c : out.coeffs) c += shift;
    return out;
}

OrbitResult orbit_representative(const LevelKDominant& base, const RootVector& beta, long cap) {
    if (level(base) < 1) throw Error(ErrorKind::LevelTooSmall, "level must be >= 1");
    if (!beta.nonnegative()) throw Error(ErrorKind::ParameterRange, "beta must lie in Q_+");
    if (cap <= 0) cap = default_iteration_cap(beta);
    const DominateResult d = dominate(weight_of(base, beta), cap);
    OrbitResult r;
    r.reflection_count = d.count;
    const RootVector diff = root_difference(base, d.weight);
    if (!diff.nonnegative()) return r;
    auto [beta0, m] = delta_decompose(diff);
    if (!in_p_lambda(base, beta0)) return r;
    r.status = OrbitResult::Status::Nonzero;
    r.beta0 = std::move(beta0);
    r.m = m;
    return r;
}

} // namespace klr
