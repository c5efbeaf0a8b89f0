#include <random>

#include <doctest.h>

#include "goldens.hpp"
#include "klr/maximal_weights.hpp"
#include "oracles.hpp"

using namespace klr;
using golden::lam;

TEST_CASE("ev") {
    CHECK(ev(IntVec{3, 0, 0}) == 0);
    CHECK(ev(IntVec{1, 0, 0, 1, 0, 0, 1}) == 2);
    CHECK(ev(IntVec{0, 1, 0, 0, 2, 0, 0}) == 2);
}

TEST_CASE("equivalence classes") {
    CHECK(equiv_class(IntVec{0, 0, 1, 0}) == std::vector<IntVec>{{0, 0, 1, 0}});
    for (int ell = 1; ell <= 8; ++ell) {
        const int e = ell + 1;
        std::vector<IntVec> expect{lam(e, {{0, 2}})};
        for (int i = 1; 2 * i <= e; ++i) expect.push_back(lam(e, {{i, 1}, {e - i, 1}}));
        std::sort(expect.begin(), expect.end());
        CHECK(equiv_class(lam(e, {{0, 2}})) == expect);
    }
    std::vector<IntVec> figure;
    for (const auto& [w, x] : golden::c036_members()) figure.push_back(w);
    std::sort(figure.begin(), figure.end());
    CHECK(equiv_class(IntVec{1, 0, 0, 1, 0, 0, 1}) == figure);
}

TEST_CASE("equivalence classes agree with the composition filter oracle") {
    for (int ell = 1; ell <= 5; ++ell)
        for (int k = 1; k <= 4; ++k)
            for (const IntVec& base : oracle::class_members(lam(ell + 1, {{0, k}})))
                CHECK(equiv_class(base) == oracle::class_members(base));
}

TEST_CASE("solve_x examples") {
    for (int ell = 2; ell <= 7; ++ell) {
        IntVec expect(ell + 1, 0);
        expect[0] = 1;
        CHECK(solve_x(lam(ell + 1, {{0, 2}}), lam(ell + 1, {{1, 1}, {ell, 1}})) == expect);
    }
    CHECK(solve_x(IntVec{1, 0, 0, 1, 0, 0, 1}, IntVec{0, 0, 0, 3, 0, 0, 0}) == IntVec{3, 2, 1, 0, 1, 2, 3});
    CHECK(solve_x(IntVec{2, 0, 1}, IntVec{2, 0, 1}) == IntVec{0, 0, 0});
    CHECK_THROWS_AS(solve_x(IntVec{2, 0, 1}, IntVec{3, 0, 0}), Error);
}

TEST_CASE("X-vectors of the twelve-member class") {
    const IntVec base{1, 0, 0, 1, 0, 0, 1};
    for (const auto& [w, x] : golden::c036_members()) CHECK(solve_x(base, w) == x);
}

TEST_CASE("solve_x agrees with the recurrence oracle") {
    for (int ell = 1; ell <= 7; ++ell)
        for (int k = 1; k <= 4; ++k)
            for (const IntVec& base : oracle::class_members(lam(ell + 1, {{0, k}}))) {
                for (const IntVec& target : oracle::class_members(base)) {
                    IntVec x;
                    REQUIRE(oracle::solve_x(base, target, x));
                    CHECK(solve_x(base, target) == x);
                }
            }
}

TEST_CASE("solve_x solution is the unique shift with minimum zero") {
    const AffineRank r(5);
    const IntMatrix a = cartan_matrix(r);
    for (const IntVec& base : {IntVec{3, 0, 1, 0, 0, 1}, IntVec{0, 2, 0, 2, 0, 0}, IntVec{1, 1, 1, 1, 1, 0}})
        for (const MaxWeightEntry& m : max_plus(base)) {
            CHECK(*std::min_element(m.x.begin(), m.x.end()) == 0);
            for (int i = 0; i < r.e(); ++i) {
                int lhs = 0;
                for (int j = 0; j < r.e(); ++j) lhs += a[i][j] * m.x[j];
                CHECK(lhs == base[i] - m.weight[i]);
            }
            for (int c : {-2, -1, 1, 2}) {
                int lo = m.x[0] + c;
                for (int v : m.x) lo = std::min(lo, v + c);
                CHECK(lo != 0);
            }
        }
}

TEST_CASE("max_plus entries round-trip through pairing") {
    for (const IntVec& base : {IntVec{1, 0, 0, 1, 0, 0, 1}, IntVec{4, 0, 0, 2, 0, 0, 1}, IntVec{3, 1}}) {
        const auto entries = max_plus(base);
        CHECK(entries.size() == equiv_class(base).size());
        for (const MaxWeightEntry& m : entries) {
            CHECK(m.beta.coeffs == m.x);
            CHECK(m.max_weight.dominant());
            for (int i = 0; i < static_cast<int>(base.size()); ++i) CHECK(pairing(i, m.max_weight) == m.weight[i]);
            CHECK(in_p_lambda(base, m.beta));
        }
    }
    const auto single = max_plus(IntVec{0, 1, 0});
    REQUIRE(single.size() == 1);
    CHECK(single[0].beta.height() == 0);
}

TEST_CASE("solve_x is sigma-equivariant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int ell = 1 + static_cast<int>(rng() % 6);
        const int e = ell + 1;
        const int k = 1 + static_cast<int>(rng() % 5);
        IntVec base(e, 0);
        for (int t = 0; t < k; ++t) ++base[rng() % e];
        const auto cls = equiv_class(base);
        const IntVec& target = cls[rng() % cls.size()];
        const int s = static_cast<int>(rng() % e);
        CHECK(solve_x(rotate(base, s), rotate(target, s)) == rotate(solve_x(base, target), s));
    }
}

TEST_CASE("adding a common summand preserves beta") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int e = 2 + static_cast<int>(rng() % 6);
        IntVec bar(e, 0), tilde(e, 0);
        for (int t = 0, k = 1 + static_cast<int>(rng() % 3); t < k; ++t) ++bar[rng() % e];
        for (int t = 0, k = 1 + static_cast<int>(rng() % 3); t < k; ++t) ++tilde[rng() % e];
        IntVec full(e);
        for (int i = 0; i < e; ++i) full[i] = bar[i] + tilde[i];
        const auto cls = equiv_class(bar);
        const IntVec& target = cls[rng() % cls.size()];
        IntVec shifted(e);
        for (int i = 0; i < e; ++i) shifted[i] = target[i] + tilde[i];
        CHECK(solve_x(full, shifted) == solve_x(bar, target));
        CHECK(in_p_lambda(full, RootVector{solve_x(bar, target)}));
    }
}
