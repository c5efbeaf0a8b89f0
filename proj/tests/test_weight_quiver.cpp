#include <random>

#include <doctest.h>

#include "goldens.hpp"
#include "klr/quiver_io.hpp"
#include "klr/weight_quiver.hpp"

using namespace klr;
using golden::GArrow;
using golden::lam;

namespace {

std::set<GArrow> arrow_set(const WeightQuiver& q) {
    std::set<GArrow> out;
    for (const Arrow& a : q.arrows) out.insert({q.vertices[a.src].weight, a.i, a.j, q.vertices[a.dst].weight});
    return out;
}

std::set<IntVec> vertex_set(const WeightQuiver& q) {
    std::set<IntVec> out;
    for (const MaxWeightEntry& v : q.vertices) out.insert(v.weight);
    return out;
}

IntVec random_weight(std::mt19937& rng, int e, int k) {
    IntVec w(e, 0);
    for (int t = 0; t < k; ++t) ++w[rng() % e];
    return w;
}

} // namespace

TEST_CASE("move") {
    for (int ell = 2; ell <= 6; ++ell) {
        const int e = ell + 1;
        CHECK(move(lam(e, {{0, 2}}), 0, 0) == lam(e, {{1, 1}, {ell, 1}}));
    }
    CHECK(move(IntVec{0, 1, 0, 1, 0, 1, 0}, 1, 3) == IntVec{1, 0, 0, 0, 1, 1, 0});
    const IntVec w{0, 1, 1, 0, 2};
    CHECK(move(w, 2, 1) == w);
    CHECK(move(w, 1 + 5, 4) == move(w, 1, 4));
    CHECK_THROWS_AS(move(w, 0, 4), Error);
}

TEST_CASE("has_arrow") {
    CHECK(has_arrow(IntVec{1, 0, 0, 0, 0, 0, 1}, 1, 3));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if ((j + 1) % 5 != i) CHECK(has_arrow(IntVec(5, 0), i, j));
    for (int ell = 3; ell <= 7; ++ell) {
        // X of Lambda_2 + 2 Lambda_ell under 3 Lambda_0 is (2, 1, 0, ..., 0)
        IntVec x(ell + 1, 0);
        x[0] = 2;
        x[1] = 1;
        CHECK(solve_x(lam(ell + 1, {{0, 3}}), lam(ell + 1, {{2, 1}, {ell, 2}})) == x);
        CHECK_FALSE(has_arrow(x, 2, ell));
    }
}

TEST_CASE("quiver on the twelve-member class") {
    const WeightQuiver q = build_quiver(IntVec{1, 0, 0, 1, 0, 0, 1});
    CHECK(q.vertices.size() == 12);
    CHECK(arrow_set(q) == golden::c036_arrows());
    CHECK(q.arrows.size() == 21);
    for (const auto& [w, x] : golden::c036_members()) {
        const int v = q.find(w);
        REQUIRE(v >= 0);
        CHECK(q.vertices[v].x == x);
    }
    CHECK(q.base_index() == 0);
}

TEST_CASE("quiver of 2 Lambda_0 is a chain") {
    for (int ell = 1; ell <= 11; ++ell) {
        const int e = ell + 1;
        const WeightQuiver q = build_quiver(lam(e, {{0, 2}}));
        const int len = (ell + 1) / 2;
        REQUIRE(static_cast<int>(q.arrows.size()) == len);
        std::set<GArrow> expect{{lam(e, {{0, 2}}), 0, 0, lam(e, {{1, 1}, {ell, 1}})}};
        for (int i = 1; i < len; ++i)
            expect.insert({lam(e, {{i, 1}, {e - i, 1}}), ell - i + 1, i, lam(e, {{i + 1, 1}, {e - i - 1, 1}})});
        CHECK(arrow_set(q) == expect);
        // X_{Lambda_i + Lambda_{e-i}} = (i, i-1, ..., 1, 0^{ell-2i+2}, 1, ..., i-1)
        for (int i = 1; 2 * i <= e; ++i)
            CHECK(q.vertices[q.find(lam(e, {{i, 1}, {e - i, 1}}))].x == golden::level2_outer(ell, 0, i));
    }
}

TEST_CASE("quiver of Lambda_0 + Lambda_s has two branches") {
    for (int ell = 3; ell <= 9; ++ell)
        for (int s = 1; s < ell; ++s) {
            const int e = ell + 1;
            const WeightQuiver q = build_quiver(lam(e, {{0, 1}, {s, 1}}));
            const auto arrows = arrow_set(q);
            CHECK(arrows.count({lam(e, {{0, 1}, {s, 1}}), s, 0, lam(e, {{s - 1, 1}, {1, 1}})}) == (s >= 2 ? 1 : 0));
            CHECK(arrows.count({lam(e, {{0, 1}, {s, 1}}), 0, s, lam(e, {{ell, 1}, {s + 1, 1}})}) == 1);
            for (int j = 1; 2 * j <= s; ++j)
                CHECK(q.vertices[q.find(lam(e, {{j, 1}, {s - j, 1}}))].x == golden::level2_inner(ell, s, j));
            for (int i = 1; 2 * i <= e - s; ++i)
                CHECK(q.vertices[q.find(lam(e, {{s + i, 1}, {e - i, 1}}))].x == golden::level2_outer(ell, s, i));
            int out_deg = 0;
            for (const Arrow& a : q.arrows) out_deg += a.src == q.base_index();
            CHECK(out_deg == (s >= 2 ? 2 : 1));
        }
}

TEST_CASE("successors") {
    for (int ell = 2; ell <= 6; ++ell)
        for (int k = 3; k <= 5; ++k) {
            const int e = ell + 1;
            const WeightQuiver q = build_quiver(lam(e, {{0, k}}));
            CHECK(successors(q, q.base) == std::vector<IntVec>{lam(e, {{0, k - 2}, {1, 1}, {ell, 1}})});
        }
    for (int ell = 4; ell <= 7; ++ell) {
        const int e = ell + 1;
        const WeightQuiver q = build_quiver(lam(e, {{0, 4}}));
        std::vector<IntVec> expect{lam(e, {{0, 2}, {2, 1}, {ell - 1, 1}}), lam(e, {{0, 1}, {2, 1}, {ell, 2}}),
                                   lam(e, {{0, 1}, {1, 2}, {ell - 1, 1}}), lam(e, {{1, 2}, {ell, 2}})};
        std::sort(expect.begin(), expect.end());
        CHECK(successors(q, lam(e, {{0, 2}, {1, 1}, {ell, 1}})) == expect);
    }
    CHECK_THROWS_AS(build_quiver(IntVec{0, 0, 1}), Error);
    const WeightQuiver q2 = build_quiver(IntVec{0, 0, 2});
    CHECK_THROWS_AS(successors(q2, IntVec{2, 0, 0}), Error);
}

TEST_CASE("tagged subquiver example") {
    const TQuiver t = t_subquiver(IntVec{4, 0, 0, 2, 0, 0, 1});
    CHECK(t.quiver.vertices.size() == 14);
    CHECK(t.tags[t.quiver.base_index()].empty());
    for (const auto& [w, tags] : golden::t4036_tags()) {
        const int v = t.quiver.find(w);
        REQUIRE(v >= 0);
        CHECK(t.tags[v] == tags);
    }
    CHECK(arrow_set(t.quiver) == golden::t4036_arrows());
}

TEST_CASE("tagged subquiver of 3 Lambda_0") {
    for (int ell = 3; ell <= 7; ++ell) {
        const int e = ell + 1;
        const TQuiver t = t_subquiver(lam(e, {{0, 3}}));
        std::map<int, std::set<IntVec>> by_tag;
        for (std::size_t v = 0; v < t.tags.size(); ++v)
            for (int s : t.tags[v]) by_tag[s].insert(t.quiver.vertices[v].weight);
        CHECK(by_tag[0].empty());
        CHECK(by_tag[1] == std::set<IntVec>{lam(e, {{0, 1}, {1, 1}, {ell, 1}})});
        CHECK(by_tag[2] == std::set<IntVec>{lam(e, {{0, 1}, {2, 1}, {ell - 1, 1}})});
        CHECK(by_tag[3] == std::set<IntVec>{lam(e, {{1, 2}, {ell - 1, 1}}), lam(e, {{2, 1}, {ell, 2}})});
        CHECK(by_tag[4].empty());
        CHECK(by_tag[5].empty());
    }
    const TQuiver t2 = t_subquiver(IntVec{2, 0, 0, 0});
    CHECK(t2.quiver.vertices.size() == 3);
    CHECK(t2.tags[t2.quiver.find(IntVec{0, 1, 0, 1})] == std::set<int>{1});
    CHECK(t2.tags[t2.quiver.find(IntVec{0, 0, 2, 0})] == std::set<int>{2});
}

TEST_CASE("closed-form beta sets") {
    const auto sets = t_beta_sets(IntVec{4, 0, 0, 2, 0, 0, 1});
    CHECK(sets[4] == std::vector<RootVector>{RootVector{lam(7, {{0, 2}})}});
    CHECK(sets[5] == std::vector<RootVector>{RootVector{lam(7, {{0, 1}, {3, 1}})}});
    std::vector<RootVector> t1{RootVector{lam(7, {{0, 1}})}, RootVector{lam(7, {{3, 1}})}};
    std::sort(t1.begin(), t1.end());
    CHECK(sets[1] == t1);
    for (int k = 3; k <= 5; ++k) {
        const auto s = t_beta_sets(lam(4, {{0, k}}));
        CHECK(s[0].empty());
        CHECK(s[1] == std::vector<RootVector>{RootVector{lam(4, {{0, 1}})}});
    }
    const auto level2 = t_beta_sets(IntVec{1, 0, 1, 0, 0});
    CHECK(level2[1].empty());
}

TEST_CASE("closed-form beta sets match the constructed subquiver") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const int ell = 1 + static_cast<int>(rng() % 7);
        const IntVec base = random_weight(rng, ell + 1, 2 + static_cast<int>(rng() % 5));
        const TQuiver t = t_subquiver(base);
        const auto sets = t_beta_sets(base);
        for (int s = 0; s < 6; ++s) {
            std::set<RootVector> built;
            for (std::size_t v = 0; v < t.tags.size(); ++v)
                if (t.tags[v].count(s)) built.insert(t.quiver.vertices[v].beta);
            CHECK(built == std::set<RootVector>(sets[s].begin(), sets[s].end()));
        }
    }
}

TEST_CASE("quiver structural properties") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        const int ell = 1 + static_cast<int>(rng() % 7);
        const int e = ell + 1;
        const IntVec base = random_weight(rng, e, 2 + static_cast<int>(rng() % 4));
        const WeightQuiver q = build_quiver(base);
        const AffineRank rank(ell);

        const auto cls = equiv_class(base);
        CHECK(vertex_set(q) == std::set<IntVec>(cls.begin(), cls.end()));
        for (const MaxWeightEntry& v : q.vertices) CHECK(v.x == solve_x(base, v.weight));

        // every adjacent pair is oriented exactly one way, and X changes by Delta or Delta - 1
        for (const MaxWeightEntry& v : q.vertices)
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j) {
                    if (j == rank.mod(i - 1)) continue;
                    if (v.weight[i] == 0 || v.weight[j] == 0 || (i == j && v.weight[i] < 2)) continue;
                    const IntVec w = move(v.weight, i, j);
                    const IntVec& xw = q.vertices[q.find(w)].x;
                    const bool fwd = has_arrow(v.x, i, j);
                    const bool back = has_arrow(xw, rank.mod(j + 1), rank.mod(i - 1));
                    CHECK(fwd != back);
                    const IntVec d = interval_delta(i, j, rank);
                    int lo = v.x[0] + d[0];
                    for (int h = 0; h < e; ++h) lo = std::min(lo, v.x[h] + d[h]);
                    CHECK((lo == 0 || lo == 1));
                }

        // every vertex is reachable from the base along arrows
        std::vector<char> seen(q.vertices.size(), 0);
        std::vector<int> stack{q.base_index()};
        seen[q.base_index()] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const Arrow& a : q.arrows)
                if (a.src == v && !seen[a.dst]) {
                    seen[a.dst] = 1;
                    stack.push_back(a.dst);
                }
        }
        CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(q.vertices.size()));
        for (const Arrow& a : q.arrows) CHECK(a.src != a.dst);
    }
}

TEST_CASE("quiver and subquiver are sigma-equivariant") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        const int ell = 1 + static_cast<int>(rng() % 6);
        const int e = ell + 1;
        const IntVec base = random_weight(rng, e, 2 + static_cast<int>(rng() % 4));
        const int s = 1 + static_cast<int>(rng() % ell);
        std::set<GArrow> image;
        for (const GArrow& a : arrow_set(build_quiver(base)))
            image.insert({rotate(a.src, s), (a.i + s) % e, (a.j + s) % e, rotate(a.dst, s)});
        CHECK(arrow_set(build_quiver(rotate(base, s))) == image);

        const TQuiver t = t_subquiver(base);
        const TQuiver ts = t_subquiver(rotate(base, s));
        std::set<std::pair<IntVec, std::set<int>>> tags, tags_s;
        for (std::size_t v = 0; v < t.tags.size(); ++v) tags.insert({rotate(t.quiver.vertices[v].weight, s), t.tags[v]});
        for (std::size_t v = 0; v < ts.tags.size(); ++v) tags_s.insert({ts.quiver.vertices[v].weight, ts.tags[v]});
        CHECK(tags == tags_s);
    }
}

TEST_CASE("subquiver embeds under adding a summand") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        const int e = 2 + static_cast<int>(rng() % 6);
        const IntVec bar = random_weight(rng, e, 2 + static_cast<int>(rng() % 3));
        const IntVec tilde = random_weight(rng, e, 1 + static_cast<int>(rng() % 2));
        IntVec full(e);
        for (int i = 0; i < e; ++i) full[i] = bar[i] + tilde[i];
        const TQuiver small = t_subquiver(bar);
        const TQuiver big = t_subquiver(full);
        std::set<RootVector> big_betas;
        for (const MaxWeightEntry& v : big.quiver.vertices) big_betas.insert(v.beta);
        for (const MaxWeightEntry& v : small.quiver.vertices) {
            IntVec shifted(e);
            for (int i = 0; i < e; ++i) shifted[i] = v.weight[i] + tilde[i];
            CHECK(big.quiver.find(shifted) >= 0);
            CHECK(big_betas.count(v.beta) == 1);
        }
        const auto big_arrows = arrow_set(big.quiver);
        for (const GArrow& a : arrow_set(small.quiver)) {
            IntVec src(e), dst(e);
            for (int i = 0; i < e; ++i) {
                src[i] = a.src[i] + tilde[i];
                dst[i] = a.dst[i] + tilde[i];
            }
            CHECK(big_arrows.count({src, a.i, a.j, dst}) == 1);
        }
    }
}

TEST_CASE("json round trip and dot export") {
    for (const IntVec& base : {IntVec{1, 0, 0, 1, 0, 0, 1}, IntVec{2, 0}, IntVec{3, 1, 0, 2}}) {
        const WeightQuiver q = build_quiver(base);
        const WeightQuiver r = quiver_from_json(nlohmann::json::parse(to_json(q).dump()));
        CHECK(r.ell == q.ell);
        CHECK(r.base == q.base);
        REQUIRE(r.vertices.size() == q.vertices.size());
        for (std::size_t v = 0; v < q.vertices.size(); ++v) {
            CHECK(r.vertices[v].weight == q.vertices[v].weight);
            CHECK(r.vertices[v].x == q.vertices[v].x);
            CHECK(r.vertices[v].beta == q.vertices[v].beta);
            CHECK(r.vertices[v].max_weight == q.vertices[v].max_weight);
        }
        CHECK(r.arrows == q.arrows);
    }
    const std::string dot = to_dot(build_quiver(IntVec{2, 0}));
    CHECK(dot.find("v0 [label=\"2Λ_0\"]") != std::string::npos);
    CHECK(dot.find("v0 -> v1 [label=\"(0,0)\"]") != std::string::npos);
}
