#include "klr/classifier.hpp"

#include <algorithm>
#include <set>

#include "klr/weight_quiver.hpp"

namespace klr {

const char* to_string(RepType type) {
    switch (type) {
    case RepType::Zero: return "Zero";
    case RepType::Finite: return "Finite";
    case RepType::Tame: return "Tame";
    case RepType::Wild: return "Wild";
    }
    return "?";
}

const char* to_string(TClass t) {
    switch (t) {
    case TClass::TIsTwo: return "TIsTwo";
    case TClass::TIsMinusTwo: return "TIsMinusTwo";
    case TClass::TIsSignEll: return "TIsSignEll";
    case TClass::TOther: return "TOther";
    }
    return "?";
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_classifiable(const LevelKDominant& base) {
    if (level(base) < 3)
        throw Error(ErrorKind::LevelTooSmall,
                    "level " + std::to_string(level(base)) +
                        " is not supported; classify needs level >= 3");
}

bool contains(const std::vector<RootVector>& set, const RootVector& beta) {
    return std::find(set.begin(), set.end(), beta) != set.end();
}

} // namespace

void validate(const FieldParams& params, int ell) {
    if (params.char_p != 0 && !is_prime(params.char_p))
        throw Error(ErrorKind::ParameterRange, "characteristic must be 0 or a prime, got " + std::to_string(params.char_p));
    const bool ell_one_class = params.t_class == TClass::TIsTwo || params.t_class == TClass::TIsMinusTwo;
    if (ell == 1 && params.t_class == TClass::TIsSignEll)
        throw Error(ErrorKind::ParameterRange, "for ell = 1 the t-class is one of TIsTwo, TIsMinusTwo, TOther");
    if (ell >= 2 && ell_one_class)
        throw Error(ErrorKind::ParameterRange, "for ell >= 2 the t-class is one of TIsSignEll, TOther");
}

ScriptSets script_sets(const LevelKDominant& base, int char_p) {
    require_classifiable(base);
    const AffineRank rank(static_cast<int>(base.size()) - 1);
    const int e = rank.e();
    const std::array<std::vector<RootVector>, 6> tb = t_beta_sets(base);
    const std::vector<int> idx = multiplicity_support(base, 0);
    const int h = static_cast<int>(idx.size());

    std::array<std::set<RootVector>, 6> raw;
    auto root = [&](std::initializer_list<std::pair<int, int>> terms) {
        RootVector r{IntVec(e, 0)};
        for (const auto& [i, c] : terms) r.coeffs[rank.mod(i)] += c;
        return r;
    };
    for (int j = 0; j < h; ++j) {
        const int a = idx[j];
        const int next = idx[(j + 1) % h];
        const int prev = idx[(j + h - 1) % h];
        const int ma = base[a];
        const int mb = base[next];
        if (a != next) {
            const RootVector interval{interval_delta(a, next, rank)};
            if (ma == 1 && mb == 1) raw[0].insert(interval);
            if ((ma == 1) != (mb == 1)) raw[1].insert(interval);
        }
        const bool prev_apart = prev != rank.mod(a - 1);
        const bool next_apart = next != rank.mod(a + 1);
        if (ma == 2 && prev_apart && next_apart && char_p != 2) raw[2].insert(root({{a, 2}, {a - 1, 1}, {a + 1, 1}}));
        if (ma == 3 && char_p != 3) {
            if (next_apart) raw[3].insert(root({{a, 2}, {a + 1, 1}}));
            if (prev_apart) raw[3].insert(root({{a, 2}, {a - 1, 1}}));
        }
        if (ma == 4 && char_p != 2) raw[4].insert(root({{a, 2}}));
        for (int p = 0; p < h; ++p) {
            const int b = idx[p];
            if (p == j || ma != 2 || base[b] != 2) continue;
            if (b == rank.mod(a + 1) || b == rank.mod(a - 1)) continue;
            raw[5].insert(root({{a, 1}, {b, 1}}));
        }
    }

    // Each script set sits inside the corresponding T-set; intersecting enforces
    // the rank conditions (ell >= 2, 3) and [i,j] != I built into those sets.
    static constexpr std::array<int, 6> source{0, 0, 2, 3, 4, 5};
    ScriptSets out;
    for (int s = 0; s < 6; ++s)
        for (const RootVector& r : raw[s])
            if (contains(tb[source[s]], r)) out.ST[s].push_back(r);

    std::set<RootVector> f(out.ST[0].begin(), out.ST[0].end());
    f.insert(RootVector{IntVec(e, 0)});
    f.insert(tb[1].begin(), tb[1].end());
    out.F.assign(f.begin(), f.end());
    return out;
}

Classification classify_detailed(const LevelKDominant& base, const RootVector& beta, const FieldParams& params,
                                 long cap) {
    require_classifiable(base);
    const AffineRank rank(static_cast<int>(base.size()) - 1);
    validate(params, rank.ell);
    Classification c;
    c.orbit = orbit_representative(base, beta, cap);
    if (c.orbit.status == OrbitResult::Status::Zero) {
        c.type = RepType::Zero;
        c.reason = "Lambda - beta is not a weight of V(Lambda)";
        return c;
    }
    const RootVector& b0 = c.orbit.beta0;
    const int m = c.orbit.m;
    if (b0.height() == 0) {
        if (m == 0) {
            c.type = RepType::Finite;
            c.reason = "beta reduces to 0";
        } else if (m == 1) {
            const bool single = multiplicity_support(base, 0).size() == 1;
            const bool tame = single && params.t_class == TClass::TOther;
            c.type = tame ? RepType::Tame : RepType::Wild;
            c.reason = tame ? "delta with Lambda = k Lambda_i and generic t"
                            : (single ? "delta with special t" : "delta with Lambda not a multiple of one Lambda_i");
        } else {
            c.type = RepType::Wild;
            c.reason = "m delta with m >= 2";
        }
        return c;
    }
    if (m >= 1) {
        c.type = RepType::Wild;
        c.reason = "nonzero beta0 plus a positive multiple of delta";
        return c;
    }
    const ScriptSets sets = script_sets(base, params.char_p);
    if (contains(sets.F, b0)) {
        c.type = RepType::Finite;
        c.reason = contains(sets.ST[0], b0) ? "beta0 in ST_0" : "beta0 = alpha_i with m_i >= 2";
        return c;
    }
    for (int s = 1; s <= 5; ++s)
        if (contains(sets.ST[s], b0)) {
            c.type = RepType::Tame;
            c.reason = "beta0 in ST_" + std::to_string(s);
            return c;
        }
    c.type = RepType::Wild;
    c.reason = "beta0 outside the finite and tame sets";
    return c;
}

RepType classify(const LevelKDominant& base, const RootVector& beta, const FieldParams& params, long cap) {
    return classify_detailed(base, beta, params, cap).type;
}

} // namespace klr
