#pragma once

#include <array>
#include <string>
#include <vector>

#include "klr/weyl_reduction.hpp"

namespace klr {

// Class of the parameter t. TIsTwo/TIsMinusTwo apply when ell = 1,
// TIsSignEll (t = (-1)^(ell+1)) when ell >= 2.
enum class TClass { TIsTwo, TIsMinusTwo, TIsSignEll, TOther };

struct FieldParams {
    int char_p = 0;
    TClass t_class = TClass::TOther;
};

enum class RepType { Zero, Finite, Tame, Wild };

const char* to_string(RepType type);
const char* to_string(TClass t);

struct ScriptSets {
    std::vector<RootVector> F;               // {0} u ST_0 u T_1
    std::array<std::vector<RootVector>, 6> ST;  // ST[0..5]
};

struct Classification {
    RepType type = RepType::Zero;
    OrbitResult orbit;
    std::string reason;
};

void validate(const FieldParams& params, int ell);

ScriptSets script_sets(const LevelKDominant& base, int char_p);

Classification classify_detailed(const LevelKDominant& base, const RootVector& beta, const FieldParams& params,
                                 long cap = 0);

RepType classify(const LevelKDominant& base, const RootVector& beta, const FieldParams& params, long cap = 0);

} // namespace klr
