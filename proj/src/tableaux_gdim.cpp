#include "klr/tableaux_gdim.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace klr {

namespace {

using ShapePolys = std::map<Multipartition, LaurentPoly>;

int row_len(const Partition& p, int r) { return r < static_cast<int>(p.size()) ? p[r] : 0; }

int modulo(int a, int e) {
    const int r = a % e;
    return r < 0 ? r + e : r;
}

int rank_e(const RootVector& beta) {
    if (beta.coeffs.size() < 2) throw Error(ErrorKind::ParameterRange, "beta needs at least 2 coefficients");
    return static_cast<int>(beta.coeffs.size());
}

void check_size(const RootVector& beta, int max_size) {
    if (!beta.nonnegative()) throw Error(ErrorKind::ParameterRange, "beta must lie in Q_+");
    if (beta.height() > max_size)
        throw Error(ErrorKind::EnumerationCapExceeded,
                    "|beta| = " + std::to_string(beta.height()) + " exceeds the cap " + std::to_string(max_size));
}

IntVec reduce_charges(const IntVec& charges, int e) {
    if (charges.empty()) throw Error(ErrorKind::ParameterRange, "at least one charge is required");
    IntVec out(charges);
    for (int& c : out) c = modulo(c, e);
    return out;
}

void add_node(Multipartition& mp, const Node& p) {
    Partition& part = mp.components[p.comp];
    if (p.row == static_cast<int>(part.size())) part.push_back(1);
    else ++part[p.row];
}

void remove_node(Multipartition& mp, const Node& p) {
    Partition& part = mp.components[p.comp];
    if (--part[p.row] == 0) part.pop_back();
}

// One forward step of the growth-sequence recursion: add a node of residue r
// (any residue still available in budget when r < 0).
ShapePolys grow(const ShapePolys& states, const IntVec& charges, int e, int r, const IntVec* target) {
    ShapePolys next;
    for (const auto& [shape, poly] : states) {
        IntVec have;
        if (target) have = content(shape, charges, e);
        for (const Node& p : addable_nodes(shape)) {
            const int res = node_residue(charges, e, p);
            if (r >= 0 && res != r) continue;
            if (target && have[res] >= (*target)[res]) continue;
            Multipartition bigger = shape;
            add_node(bigger, p);
            next[bigger] += poly * LaurentPoly::monomial(d_below(bigger, charges, e, p));
        }
    }
    return next;
}

ShapePolys tableaux_by_sequence(const IntVec& charges, int e, const IntVec& nu) {
    ShapePolys states;
    states[Multipartition{std::vector<Partition>(charges.size())}] = LaurentPoly(1);
    for (int r : nu) states = grow(states, charges, e, r, nullptr);
    return states;
}

void check_sequence(const IntVec& nu, const RootVector& beta) {
    IntVec c(beta.coeffs.size(), 0);
    for (int r : nu) {
        if (r < 0 || r >= static_cast<int>(c.size()))
            throw Error(ErrorKind::ContentMismatch, "residue " + std::to_string(r) + " out of range");
        ++c[r];
    }
    if (c != beta.coeffs)
        throw Error(ErrorKind::ContentMismatch, format_vector(nu) + " does not have content " + format_root(beta));
}

} // namespace

int Multipartition::size() const {
    int n = 0;
    for (const Partition& p : components) n = std::accumulate(p.begin(), p.end(), n);
    return n;
}

IntVec canonical_charges(const LevelKDominant& base) {
    IntVec out;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (int c = 0; c < base[i]; ++c) out.push_back(static_cast<int>(i));
    return out;
}

int node_residue(const IntVec& charges, int e, const Node& p) { return modulo(charges[p.comp] + p.col - p.row, e); }

std::vector<Node> addable_nodes(const Multipartition& mp) {
    std::vector<Node> out;
    for (int s = 0; s < static_cast<int>(mp.components.size()); ++s) {
        const Partition& part = mp.components[s];
        for (int r = 0; r <= static_cast<int>(part.size()); ++r)
            if (r == 0 || part[r - 1] > row_len(part, r)) out.push_back(Node{s, r, row_len(part, r)});
    }
    return out;
}

std::vector<Node> removable_nodes(const Multipartition& mp) {
    std::vector<Node> out;
    for (int s = 0; s < static_cast<int>(mp.components.size()); ++s) {
        const Partition& part = mp.components[s];
        for (int r = 0; r < static_cast<int>(part.size()); ++r)
            if (part[r] > row_len(part, r + 1)) out.push_back(Node{s, r, part[r] - 1});
    }
    return out;
}

IntVec content(const Multipartition& mp, const IntVec& charges, int e) {
    IntVec c(e, 0);
    for (int s = 0; s < static_cast<int>(mp.components.size()); ++s)
        for (int r = 0; r < static_cast<int>(mp.components[s].size()); ++r)
            for (int col = 0; col < mp.components[s][r]; ++col) ++c[node_residue(charges, e, Node{s, r, col})];
    return c;
}

int d_below(const Multipartition& mp, const IntVec& charges, int e, const Node& p) {
    const std::vector<Node> removable = removable_nodes(mp);
    if (std::find(removable.begin(), removable.end(), p) == removable.end())
        throw Error(ErrorKind::NodeNotRemovable, "node is not removable");
    const int w = node_residue(charges, e, p);
    auto below = [&](const Node& n) { return n.comp > p.comp || (n.comp == p.comp && n.row > p.row); };
    int d = 0;
    for (const Node& n : addable_nodes(mp))
        if (below(n) && node_residue(charges, e, n) == w) ++d;
    for (const Node& n : removable)
        if (below(n) && node_residue(charges, e, n) == w) --d;
    return d;
}

std::vector<Multipartition> enumerate_with_content(const IntVec& charges_in, const RootVector& beta, int max_size) {
    const int e = rank_e(beta);
    check_size(beta, max_size);
    const IntVec charges = reduce_charges(charges_in, e);
    const int k = static_cast<int>(charges.size());
    std::vector<Multipartition> out;
    IntVec budget = beta.coeffs;
    Multipartition cur{std::vector<Partition>(k)};

    // Component s, row r, row lengths bounded by prev.
    auto rec = [&](auto&& self, int s, int r, int prev) -> void {
        if (s == k) {
            if (std::all_of(budget.begin(), budget.end(), [](int b) { return b == 0; })) out.push_back(cur);
            return;
        }
        self(self, s + 1, 0, max_size);
        int len = 0;
        std::vector<int> used;
        while (len < prev) {
            const int res = modulo(charges[s] + len - r, e);
            if (budget[res] == 0) break;
            --budget[res];
            used.push_back(res);
            ++len;
            cur.components[s].push_back(len);
            self(self, s, r + 1, len);
            cur.components[s].pop_back();
        }
        for (int res : used) ++budget[res];
    };
    rec(rec, 0, 0, max_size);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StandardTableau> std_tableaux(const Multipartition& mp, const IntVec& charges_in, int e) {
    const IntVec charges = reduce_charges(charges_in, e);
    if (charges.size() != mp.components.size())
        throw Error(ErrorKind::ParameterRange, "charge count differs from the number of components");
    const int n = mp.size();
    if (n == 0) {
        StandardTableau t;
        t.filling.resize(mp.components.size());
        return {t};
    }
    std::vector<StandardTableau> out;
    for (const Node& p : removable_nodes(mp)) {
        Multipartition smaller = mp;
        remove_node(smaller, p);
        const int d = d_below(mp, charges, e, p);
        const int res = node_residue(charges, e, p);
        for (StandardTableau t : std_tableaux(smaller, charges, e)) {
            auto& rows = t.filling[p.comp];
            if (p.row == static_cast<int>(rows.size())) rows.emplace_back();
            rows[p.row].push_back(n);
            t.residues.push_back(res);
            t.degree += d;
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<IntVec> residue_sequences(const RootVector& beta) {
    IntVec seq;
    for (int i = 0; i < static_cast<int>(beta.coeffs.size()); ++i)
        for (int c = 0; c < beta.coeffs[i]; ++c) seq.push_back(i);
    std::vector<IntVec> out;
    do out.push_back(seq);
    while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

LaurentPoly graded_dim(const IntVec& charges_in, const RootVector& beta, const IntVec& nu, const IntVec& nu2,
                       int max_size) {
    const int e = rank_e(beta);
    check_size(beta, max_size);
    check_sequence(nu, beta);
    check_sequence(nu2, beta);
    const IntVec charges = reduce_charges(charges_in, e);
    const ShapePolys left = tableaux_by_sequence(charges, e, nu);
    const ShapePolys right = nu == nu2 ? left : tableaux_by_sequence(charges, e, nu2);
    LaurentPoly out;
    for (const auto& [shape, poly] : left) {
        const auto it = right.find(shape);
        if (it != right.end()) out += poly * it->second;
    }
    return out;
}

LaurentPoly graded_dim_total(const IntVec& charges_in, const RootVector& beta, int max_size) {
    const int e = rank_e(beta);
    check_size(beta, max_size);
    const IntVec charges = reduce_charges(charges_in, e);
    ShapePolys states;
    states[Multipartition{std::vector<Partition>(charges.size())}] = LaurentPoly(1);
    for (int step = 0; step < beta.height(); ++step) states = grow(states, charges, e, -1, &beta.coeffs);
    LaurentPoly out;
    for (const auto& [shape, poly] : states) out += poly * poly;
    return out;
}

std::vector<std::vector<LaurentPoly>> graded_dim_matrix(const IntVec& charges, const RootVector& beta,
                                                        const std::vector<IntVec>& idempotents, int max_size) {
    const std::size_t n = idempotents.size();
    std::vector<std::vector<LaurentPoly>> out(n, std::vector<LaurentPoly>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            out[a][b] = graded_dim(charges, beta, idempotents[a], idempotents[b], max_size);
            out[b][a] = out[a][b];
        }
    return out;
}

} // namespace klr
