#include "klr/maximal_weights.hpp"

#include <algorithm>
#include <numeric>

#include <boost/rational.hpp>

namespace klr {

namespace {

using Q = boost::rational<long long>;

AffineRank rank_of(const LevelKDominant& w) {
    if (w.size() < 2) throw Error(ErrorKind::ParameterRange, "weight needs at least 2 coefficients");
    return AffineRank(static_cast<int>(w.size()) - 1);
}

void check_dominant(const LevelKDominant& w) {
    for (int c : w)
        if (c < 0) throw Error(ErrorKind::ParameterRange, "dominant weight has a negative coefficient");
}

void compositions(int remaining, std::size_t pos, LevelKDominant& cur, int target_ev,
                  std::vector<LevelKDominant>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        if (ev(cur) == target_ev) out.push_back(cur);
        return;
    }
    for (int c = 0; c <= remaining; ++c) {
        cur[pos] = c;
        compositions(remaining - c, pos + 1, cur, target_ev, out);
    }
}

} // namespace

int level(const LevelKDominant& w) { return std::accumulate(w.begin(), w.end(), 0); }

int ev(const LevelKDominant& w) {
    const AffineRank rank = rank_of(w);
    long long s = 0;
    for (int i = 1; i < rank.e(); ++i) s += static_cast<long long>(i) * w[i];
    return rank.mod(s);
}

std::vector<LevelKDominant> equiv_class(const LevelKDominant& w) {
    const AffineRank rank = rank_of(w);
    check_dominant(w);
    std::vector<LevelKDominant> out;
    LevelKDominant cur(rank.e(), 0);
    compositions(level(w), 0, cur, ev(w), out);
    return out;
}

IntVec solve_x(const LevelKDominant& base, const LevelKDominant& target) {
    const AffineRank rank = rank_of(base);
    if (target.size() != base.size()) throw Error(ErrorKind::NoSolution, "rank mismatch");
    const int e = rank.e();
    const int n = rank.ell;
    const IntMatrix a = cartan_matrix(rank);
    IntVec y(e);
    for (int i = 0; i < e; ++i) y[i] = base[i] - target[i];

    // Pin x_0 = 0 and solve rows 1..ell for x_1..x_ell.
    std::vector<std::vector<Q>> m(n, std::vector<Q>(n + 1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = a[r + 1][c + 1];
        m[r][n] = y[r + 1];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col] == Q(0)) ++piv;
        if (piv == n) throw Error(ErrorKind::NoSolution, "singular reduced system");
        std::swap(m[piv], m[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == Q(0)) continue;
            const Q f = m[r][col] / m[col][col];
            for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<Q> x(e, Q(0));
    for (int r = 0; r < n; ++r) x[r + 1] = m[r][n] / m[r][r];

    Q row0 = 0;
    for (int c = 0; c < e; ++c) row0 += Q(a[0][c]) * x[c];
    if (row0 != Q(y[0])) throw Error(ErrorKind::NoSolution, format_weight(target) + " has a different level");
    IntVec out(e);
    for (int i = 0; i < e; ++i) {
        if (x[i].denominator() != 1)
            throw Error(ErrorKind::NoSolution, format_weight(target) + " is not equivalent to " + format_weight(base));
        out[i] = static_cast<int>(x[i].numerator());
    }
    const int lo = *std::min_element(out.begin(), out.end());
    for (int& v : out) v -= lo;
    return out;
}

std::vector<MaxWeightEntry> max_plus(const LevelKDominant& base) {
    const AffineRank rank = rank_of(base);
    std::vector<MaxWeightEntry> out;
    for (const LevelKDominant& w : equiv_class(base)) {
        MaxWeightEntry entry;
        entry.weight = w;
        entry.x = solve_x(base, w);
        entry.beta = RootVector{entry.x};
        const WeightCoeffs b = root_to_weight(entry.beta);
        entry.max_weight.lambda.resize(rank.e());
        for (int i = 0; i < rank.e(); ++i) entry.max_weight.lambda[i] = base[i] - b.lambda[i];
        entry.max_weight.delta = -b.delta;
        out.push_back(std::move(entry));
    }
    return out;
}

bool in_p_lambda(const LevelKDominant& base, const RootVector& beta) {
    for (const MaxWeightEntry& entry : max_plus(base))
        if (entry.beta == beta) return true;
    return false;
}

} // namespace klr
