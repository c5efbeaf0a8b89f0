#include "klr/weight_quiver.hpp"

#include <algorithm>
#include <deque>

namespace klr {

namespace {

AffineRank rank_of(const LevelKDominant& w) {
    if (w.size() < 2) throw Error(ErrorKind::ParameterRange, "weight needs at least 2 coefficients");
    return AffineRank(static_cast<int>(w.size()) - 1);
}

void require_level(const LevelKDominant& w, int min_level) {
    if (level(w) < min_level)
        throw Error(ErrorKind::LevelTooSmall,
                    "level " + std::to_string(level(w)) + " < " + std::to_string(min_level));
}

bool can_move(const LevelKDominant& w, int i, int j) {
    return i == j ? w[i] >= 2 : (w[i] >= 1 && w[j] >= 1);
}

MaxWeightEntry make_entry(const LevelKDominant& base, const LevelKDominant& w, const IntVec& x) {
    MaxWeightEntry entry;
    entry.weight = w;
    entry.x = x;
    entry.beta = RootVector{x};
    const WeightCoeffs b = root_to_weight(entry.beta);
    entry.max_weight.lambda.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) entry.max_weight.lambda[i] = base[i] - b.lambda[i];
    entry.max_weight.delta = -b.delta;
    return entry;
}

// Sort vertices canonically and renumber arrows.
void canonicalize(WeightQuiver& q) {
    std::vector<int> order(q.vertices.size());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<int>(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int ha = q.vertices[a].beta.height();
        const int hb = q.vertices[b].beta.height();
        if (ha != hb) return ha < hb;
        return q.vertices[a].weight < q.vertices[b].weight;
    });
    std::vector<int> pos(order.size());
    std::vector<MaxWeightEntry> sorted;
    for (std::size_t k = 0; k < order.size(); ++k) {
        pos[order[k]] = static_cast<int>(k);
        sorted.push_back(q.vertices[order[k]]);
    }
    q.vertices = std::move(sorted);
    for (Arrow& a : q.arrows) {
        a.src = pos[a.src];
        a.dst = pos[a.dst];
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    q.arrows.erase(std::unique(q.arrows.begin(), q.arrows.end()), q.arrows.end());
}

} // namespace

int WeightQuiver::find(const LevelKDominant& w) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].weight == w) return static_cast<int>(v);
    return -1;
}

LevelKDominant move(const LevelKDominant& w, int i, int j) {
    const AffineRank rank = rank_of(w);
    i = rank.mod(i);
    j = rank.mod(j);
    if (!can_move(w, i, j))
        throw Error(ErrorKind::InsufficientMultiplicity,
                    "cannot apply (" + std::to_string(i) + "," + std::to_string(j) + ") to " + format_weight(w));
    LevelKDominant out = w;
    out[i] -= 1;
    out[j] -= 1;
    out[rank.mod(i - 1)] += 1;
    out[rank.mod(j + 1)] += 1;
    return out;
}

bool has_arrow(const IntVec& x, int i, int j) {
    const AffineRank rank = rank_of(x);
    const IntVec d = interval_delta(i, j, rank);
    int lo = x[0] + d[0];
    for (int h = 1; h < rank.e(); ++h) lo = std::min(lo, x[h] + d[h]);
    return lo == 0;
}

WeightQuiver build_quiver(const LevelKDominant& base) {
    const AffineRank rank = rank_of(base);
    require_level(base, 2);
    WeightQuiver q;
    q.ell = rank.ell;
    q.base = base;
    std::map<LevelKDominant, int> index;
    std::deque<int> frontier;
    auto add_vertex = [&](const LevelKDominant& w, const IntVec& x) {
        const auto it = index.find(w);
        if (it != index.end()) {
            if (q.vertices[it->second].x != x)
                throw std::logic_error("inconsistent X-vector at " + format_weight(w));
            return it->second;
        }
        const int id = static_cast<int>(q.vertices.size());
        q.vertices.push_back(make_entry(base, w, x));
        index.emplace(w, id);
        frontier.push_back(id);
        return id;
    };
    add_vertex(base, IntVec(rank.e(), 0));
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop_front();
        for (int i = 0; i < rank.e(); ++i) {
            for (int j = 0; j < rank.e(); ++j) {
                if (j == rank.mod(i - 1)) continue;
                // copies, since add_vertex may grow q.vertices
                const LevelKDominant w = q.vertices[v].weight;
                const IntVec x = q.vertices[v].x;
                if (!can_move(w, i, j) || !has_arrow(x, i, j)) continue;
                IntVec nx = x;
                const IntVec d = interval_delta(i, j, rank);
                for (int h = 0; h < rank.e(); ++h) nx[h] += d[h];
                const int dst = add_vertex(move(w, i, j), nx);
                q.arrows.push_back(Arrow{v, dst, i, j});
            }
        }
    }
    canonicalize(q);
    return q;
}

std::vector<LevelKDominant> successors(const WeightQuiver& q, const LevelKDominant& v) {
    const int id = q.find(v);
    if (id < 0) throw Error(ErrorKind::VertexNotFound, format_weight(v));
    std::set<LevelKDominant> out;
    for (const Arrow& a : q.arrows)
        if (a.src == id) out.insert(q.vertices[a.dst].weight);
    return {out.begin(), out.end()};
}

std::vector<int> multiplicity_support(const LevelKDominant& w, int s) {
    std::vector<int> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] >= s + 1) out.push_back(static_cast<int>(i));
    return out;
}

TQuiver t_subquiver(const LevelKDominant& base) {
    const AffineRank rank = rank_of(base);
    require_level(base, 2);
    const int ell = rank.ell;
    TQuiver t;
    t.quiver.ell = ell;
    t.quiver.base = base;
    std::map<LevelKDominant, int> index;
    auto vertex = [&](const LevelKDominant& w) {
        const auto it = index.find(w);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(t.quiver.vertices.size());
        t.quiver.vertices.push_back(make_entry(base, w, solve_x(base, w)));
        t.tags.emplace_back();
        index.emplace(w, id);
        return id;
    };
    auto step = [&](int src, int i, int j, int tag) {
        const LevelKDominant w = move(t.quiver.vertices[src].weight, i, j);
        const int dst = vertex(w);
        t.tags[dst].insert(tag);
        t.quiver.arrows.push_back(Arrow{src, dst, rank.mod(i), rank.mod(j)});
        return dst;
    };

    const int root = vertex(base);
    const std::vector<int> i0 = multiplicity_support(base, 0);
    const std::vector<int> i1 = multiplicity_support(base, 1);
    const std::vector<int> i2 = multiplicity_support(base, 2);
    const std::vector<int> i3 = multiplicity_support(base, 3);

    for (int i : i0)
        for (int j : i0)
            if (i != j && j != rank.mod(i - 1)) step(root, i, j, 0);
    std::map<int, int> lii;
    for (int i : i1) lii[i] = step(root, i, i, 1);
    if (ell >= 3)
        for (int i : i1) step(lii[i], i - 1, i + 1, 2);
    if (ell >= 2)
        for (int i : i2) {
            step(lii[i], i, i + 1, 3);
            step(lii[i], i - 1, i, 3);
        }
    for (int i : i3) step(lii[i], i, i, 4);
    if (ell >= 2)
        for (int i : i1)
            for (int j : i1)
                if (i != j) step(lii[i], j, j, 5);

    canonicalize(t.quiver);
    // canonicalize permuted the vertices; rebuild tags to match
    std::vector<std::set<int>> tags(t.quiver.vertices.size());
    for (const auto& [w, old] : index) tags[t.quiver.find(w)] = t.tags[old];
    t.tags = std::move(tags);
    return t;
}

std::array<std::vector<RootVector>, 6> t_beta_sets(const LevelKDominant& base) {
    const AffineRank rank = rank_of(base);
    const int e = rank.e();
    const int ell = rank.ell;
    std::array<std::set<RootVector>, 6> sets;
    auto unit = [&](std::initializer_list<std::pair<int, int>> terms) {
        RootVector r{IntVec(e, 0)};
        for (const auto& [i, c] : terms) r.coeffs[rank.mod(i)] += c;
        return r;
    };
    const std::vector<int> i0 = multiplicity_support(base, 0);
    for (int i : i0)
        for (int j : i0)
            if (i != j && j != rank.mod(i - 1)) sets[0].insert(RootVector{interval_delta(i, j, rank)});
    for (int i : multiplicity_support(base, 1)) {
        sets[1].insert(unit({{i, 1}}));
        if (ell >= 3) sets[2].insert(unit({{i, 2}, {i - 1, 1}, {i + 1, 1}}));
    }
    if (ell >= 2)
        for (int i : multiplicity_support(base, 2)) {
            sets[3].insert(unit({{i, 2}, {i + 1, 1}}));
            sets[3].insert(unit({{i, 2}, {i - 1, 1}}));
        }
    for (int i : multiplicity_support(base, 3)) sets[4].insert(unit({{i, 2}}));
    if (ell >= 2)
        for (int i : multiplicity_support(base, 1))
            for (int j : multiplicity_support(base, 1))
                if (i != j) sets[5].insert(unit({{i, 1}, {j, 1}}));
    std::array<std::vector<RootVector>, 6> out;
    for (int s = 0; s < 6; ++s) out[s].assign(sets[s].begin(), sets[s].end());
    return out;
}

} // namespace klr
