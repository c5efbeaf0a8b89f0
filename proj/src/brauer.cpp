#include "klr/brauer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace klr {

namespace {

int n_vertices(const BrauerGraph& g) { return static_cast<int>(g.mult.size()); }
int n_edges(const BrauerGraph& g) { return static_cast<int>(g.edges.size()); }

IntVec incident_edges(const BrauerGraph& g, int v) {
    IntVec out;
    for (int e = 0; e < n_edges(g); ++e) {
        if (g.edges[e].first == v) out.push_back(e);
        if (g.edges[e].second == v) out.push_back(e);
    }
    return out;
}

// Dart 2e sits at edges[e].first, dart 2e+1 at edges[e].second.
struct Darts {
    IntVec vertex;  // vertex of each dart
    IntVec succ;    // next dart around its vertex
    IntVec pos;     // position of the dart in rotation[vertex]
    std::vector<IntVec> at;  // darts around each vertex in cyclic order
};

Darts make_darts(const BrauerGraph& g) {
    const int ne = n_edges(g);
    Darts d;
    d.vertex.resize(2 * ne);
    d.succ.resize(2 * ne);
    d.pos.resize(2 * ne);
    d.at.resize(n_vertices(g));
    for (int e = 0; e < ne; ++e) {
        d.vertex[2 * e] = g.edges[e].first;
        d.vertex[2 * e + 1] = g.edges[e].second;
    }
    for (int v = 0; v < n_vertices(g); ++v) {
        std::vector<bool> first_used(ne, false);
        for (int e : g.rotation[v]) {
            int dart;
            if (g.edges[e].first == v && g.edges[e].second == v) {
                dart = first_used[e] ? 2 * e + 1 : 2 * e;
                first_used[e] = true;
            } else {
                dart = g.edges[e].first == v ? 2 * e : 2 * e + 1;
            }
            d.pos[dart] = static_cast<int>(d.at[v].size());
            d.at[v].push_back(dart);
        }
        const int c = static_cast<int>(d.at[v].size());
        for (int i = 0; i < c; ++i) d.succ[d.at[v][i]] = d.at[v][(i + 1) % c];
    }
    return d;
}

bool connected(const BrauerGraph& g) {
    const int nv = n_vertices(g);
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (const auto& [u, v] : g.edges) parent[root(u)] = root(v);
    for (int v = 1; v < nv; ++v)
        if (root(v) != root(0)) return false;
    return true;
}

void require_simple(const BrauerGraph& g) {
    std::vector<std::pair<int, int>> seen;
    for (const auto& [u, v] : g.edges) {
        if (u == v) throw Error(ErrorKind::UnsupportedGraph, "loops are not supported");
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw Error(ErrorKind::UnsupportedGraph, "multiple edges are not supported");
}

} // namespace

void validate(const BrauerGraph& g) {
    const int nv = n_vertices(g);
    if (nv == 0 || g.edges.empty()) throw Error(ErrorKind::InvalidGraph, "a Brauer graph needs at least one edge");
    for (int m : g.mult)
        if (m < 1) throw Error(ErrorKind::InvalidGraph, "multiplicities must be >= 1");
    for (const auto& [u, v] : g.edges)
        if (u < 0 || u >= nv || v < 0 || v >= nv) throw Error(ErrorKind::InvalidGraph, "edge endpoint out of range");
    if (static_cast<int>(g.rotation.size()) != nv) throw Error(ErrorKind::InvalidGraph, "one rotation per vertex");
    for (int v = 0; v < nv; ++v) {
        IntVec expect = incident_edges(g, v);
        IntVec got = g.rotation[v];
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        if (expect != got)
            throw Error(ErrorKind::InvalidGraph,
                        "rotation at vertex " + std::to_string(v) + " must list exactly its incident edges");
    }
    if (!connected(g)) throw Error(ErrorKind::InvalidGraph, "graph is not connected");
}

BrauerGraph make_brauer_graph(IntVec mult, std::vector<std::pair<int, int>> edges, std::vector<IntVec> rotation) {
    BrauerGraph g{std::move(mult), std::move(edges), std::move(rotation)};
    g.rotation.resize(g.mult.size());
    for (int v = 0; v < n_vertices(g); ++v) {
        if (!g.rotation[v].empty()) continue;
        const IntVec inc = incident_edges(g, v);
        if (inc.size() > 2)
            throw Error(ErrorKind::InvalidGraph,
                        "vertex " + std::to_string(v) + " has degree > 2 and needs an explicit rotation");
        g.rotation[v] = inc;
    }
    validate(g);
    return g;
}

std::string QuiverPresentation::arrow_name(int a) const {
    return "a[" + std::to_string(arrows[a].vertex) + "," + std::to_string(arrows[a].index) + "]";
}

std::string QuiverPresentation::relation_string(const Relation& r) const {
    std::ostringstream os;
    for (std::size_t t = 0; t < r.terms.size(); ++t) {
        const PathTerm& term = r.terms[t];
        if (term.coeff < 0) os << (t ? " - " : "-");
        else if (t) os << " + ";
        if (!term.cycle.empty()) {
            os << '(';
            for (std::size_t i = 0; i < term.cycle.size(); ++i) os << (i ? " " : "") << arrow_name(term.cycle[i]);
            os << ")^" << term.power;
        }
        for (std::size_t i = 0; i < term.tail.size(); ++i)
            os << ((i || !term.cycle.empty()) ? " " : "") << arrow_name(term.tail[i]);
    }
    return os.str();
}

QuiverPresentation quiver_presentation(const BrauerGraph& g) {
    validate(g);
    const Darts d = make_darts(g);
    QuiverPresentation q;
    q.n_vertices = n_edges(g);
    // arrow id of alpha_{v,i}
    std::vector<IntVec> arrow_at(n_vertices(g));
    for (int v = 0; v < n_vertices(g); ++v) {
        const int c = static_cast<int>(d.at[v].size());
        for (int i = 0; i < c; ++i) {
            arrow_at[v].push_back(static_cast<int>(q.arrows.size()));
            q.arrows.push_back(QuiverArrow{v, i, d.at[v][i] / 2, d.at[v][(i + 1) % c] / 2});
        }
    }
    auto cycle_from = [&](int v, int j) {
        const int c = static_cast<int>(arrow_at[v].size());
        IntVec cyc;
        for (int t = 0; t < c; ++t) cyc.push_back(arrow_at[v][(j + t) % c]);
        return cyc;
    };
    for (int v = 0; v < n_vertices(g); ++v)
        for (int j = 0; j < static_cast<int>(arrow_at[v].size()); ++j)
            q.relations.push_back(Relation{1, {PathTerm{1, cycle_from(v, j), g.mult[v], {arrow_at[v][j]}}}});
    for (int e = 0; e < n_edges(g); ++e) {
        const auto [u, v] = g.edges[e];
        if (u == v) continue;
        const int i = d.pos[2 * e];
        const int j = d.pos[2 * e + 1];
        q.relations.push_back(Relation{
            2, {PathTerm{1, cycle_from(u, i), g.mult[u], {}}, PathTerm{-1, cycle_from(v, j), g.mult[v], {}}}});
    }
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        const int u = q.arrows[a].vertex;
        const int c = static_cast<int>(d.at[u].size());
        // dart of E_{u,i+1} at u, then the same edge seen from its other end
        const int dart = d.at[u][(q.arrows[a].index + 1) % c];
        const int other = dart ^ 1;
        const int v = d.vertex[other];
        if (v == u) continue;
        q.relations.push_back(Relation{3, {PathTerm{1, {}, 0, {a, arrow_at[v][d.pos[other]]}}}});
    }
    return q;
}

IntMatrix cartan_matrix(const BrauerGraph& g) {
    validate(g);
    require_simple(g);
    const int ne = n_edges(g);
    IntMatrix c(ne, IntVec(ne, 0));
    for (int a = 0; a < ne; ++a) {
        const auto [u, v] = g.edges[a];
        c[a][a] = g.mult[u] + g.mult[v];
        for (int b = 0; b < ne; ++b) {
            if (b == a) continue;
            const auto [x, y] = g.edges[b];
            for (int w : {u, v})
                if (w == x || w == y) c[a][b] += g.mult[w];
        }
    }
    return c;
}

DerivedInvariants derived_invariants(const BrauerGraph& g) {
    validate(g);
    const Darts d = make_darts(g);
    DerivedInvariants inv;
    inv.n_vertices = n_vertices(g);
    inv.n_edges = n_edges(g);
    std::vector<bool> seen(d.vertex.size(), false);
    for (int start = 0; start < static_cast<int>(seen.size()); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (int x = start; !seen[x]; x = d.succ[x ^ 1]) {
            seen[x] = true;
            ++len;
        }
        inv.perimeter_multiset.push_back(len);
    }
    inv.n_faces = static_cast<int>(inv.perimeter_multiset.size());
    inv.mult_multiset = g.mult;
    std::sort(inv.mult_multiset.begin(), inv.mult_multiset.end());
    std::sort(inv.perimeter_multiset.begin(), inv.perimeter_multiset.end());

    IntVec color(inv.n_vertices, -1);
    inv.bipartite = true;
    color[0] = 0;
    IntVec stack{0};
    while (!stack.empty() && inv.bipartite) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : g.edges) {
            if (a != v && b != v) continue;
            const int w = a == v ? b : a;
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                stack.push_back(w);
            } else if (color[w] == color[v]) {
                inv.bipartite = false;
            }
        }
    }
    return inv;
}

bool derived_equivalent(const BrauerGraph& a, const BrauerGraph& b) {
    if (a.edges.size() < 2 || b.edges.size() < 2)
        throw Error(ErrorKind::LocalAlgebraUnsupported, "single-edge Brauer graphs give local algebras");
    return derived_invariants(a) == derived_invariants(b);
}

BrauerGraph gamma_family(int s, int a, int m) {
    if (s < 0 || a < 1 || a > s + 2 || m < 1)
        throw Error(ErrorKind::ParameterRange, "need s >= 0, 1 <= a <= s + 2, m >= 1");
    IntVec mult(s + 2, m);
    mult[a - 1] = 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= s; ++i) edges.emplace_back(i, i + 1);
    return make_brauer_graph(std::move(mult), std::move(edges));
}

BrauerGraph line_graph(int n, int mult) {
    if (n < 1 || mult < 1) throw Error(ErrorKind::ParameterRange, "need at least one edge and mult >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
    return make_brauer_graph(IntVec(n + 1, mult), std::move(edges));
}

IntMatrix gram(const IntMatrix& d) {
    const std::size_t n = d.empty() ? 0 : d[0].size();
    IntMatrix c(n, IntVec(n, 0));
    for (const IntVec& row : d)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += row[i] * row[j];
    return c;
}

namespace {

// Some column order and injective column -> row assignment with the assigned
// row equal to 1 at its column and 0 at all later columns.
bool is_unitriangular(const IntMatrix& d) {
    const int n = d.empty() ? 0 : static_cast<int>(d[0].size());
    std::vector<bool> placed(n, false);
    std::vector<bool> used(d.size(), false);
    for (int step = 0; step < n; ++step) {
        bool progress = false;
        for (int c = 0; c < n && !progress; ++c) {
            if (placed[c]) continue;
            for (std::size_t r = 0; r < d.size() && !progress; ++r) {
                if (used[r] || d[r][c] != 1) continue;
                bool ok = true;
                for (int o = 0; o < n; ++o)
                    if (o != c && !placed[o] && d[r][o] != 0) ok = false;
                if (ok) {
                    placed[c] = true;
                    used[r] = true;
                    progress = true;
                }
            }
        }
        if (!progress) return false;
    }
    return true;
}

} // namespace

DecompResult decomp_search(const IntMatrix& c, const DecompOptions& options) {
    const int n = static_cast<int>(c.size());
    if (n == 0) throw Error(ErrorKind::ParameterRange, "empty matrix");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(c[i].size()) != n) throw Error(ErrorKind::ParameterRange, "matrix must be square");
        if (c[i][i] < 0) throw Error(ErrorKind::ParameterRange, "diagonal must be nonnegative");
        for (int j = 0; j < n; ++j)
            if (c[i][j] != c[j][i]) throw Error(ErrorKind::ParameterRange, "matrix must be symmetric");
    }
    int min_diag = c[0][0];
    for (int i = 1; i < n; ++i) min_diag = std::min(min_diag, c[i][i]);
    const int bound = options.max_entry > 0 ? options.max_entry
                                            : static_cast<int>(std::floor(std::sqrt(static_cast<double>(min_diag))));
    int trace = 0;
    for (int i = 0; i < n; ++i) trace += c[i][i];

    // Candidate rows, descending lexicographic.
    std::vector<IntVec> cand;
    IntVec row(n, 0);
    std::function<void(int)> gen = [&](int pos) {
        if (pos == n) {
            if (std::any_of(row.begin(), row.end(), [](int x) { return x != 0; })) cand.push_back(row);
            return;
        }
        for (int v = bound; v >= 0; --v) {
            if (v * v > c[pos][pos]) continue;
            bool ok = true;
            for (int q = 0; q < pos && ok; ++q) ok = row[q] * v <= c[q][pos];
            if (!ok) continue;
            row[pos] = v;
            gen(pos + 1);
        }
        row[pos] = 0;
    };
    gen(0);
    IntVec lead(cand.size());
    for (std::size_t k = 0; k < cand.size(); ++k)
        lead[k] = static_cast<int>(std::find_if(cand[k].begin(), cand[k].end(), [](int x) { return x != 0; }) -
                                   cand[k].begin());

    DecompResult result;
    IntMatrix rem = c;
    IntMatrix chosen;
    std::function<void(std::size_t)> search = [&](std::size_t start) {
        if (++result.nodes > options.node_cap)
            throw Error(ErrorKind::SearchSpaceExceeded, "node cap " + std::to_string(options.node_cap) + " reached");
        int c0 = -1;
        for (int i = 0; i < n; ++i)
            if (rem[i][i] > 0) {
                c0 = i;
                break;
            }
        if (c0 < 0) {
            for (const IntVec& r : rem)
                for (int x : r)
                    if (x != 0) return;
            if (static_cast<int>(chosen.size()) < n || static_cast<int>(chosen.size()) > trace) return;
            if (!options.unitriangular || is_unitriangular(chosen)) result.solutions.push_back(chosen);
            return;
        }
        // Column c0 can only be filled by rows whose first nonzero entry is at c0.
        for (std::size_t k = start; k < cand.size(); ++k) {
            if (lead[k] < c0) continue;
            if (lead[k] > c0) break;
            const IntVec& r = cand[k];
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) ok = rem[i][j] >= r[i] * r[j];
            if (!ok) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rem[i][j] -= r[i] * r[j];
            chosen.push_back(r);
            search(k);
            chosen.pop_back();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rem[i][j] += r[i] * r[j];
        }
    };
    search(0);
    return result;
}

} // namespace klr
