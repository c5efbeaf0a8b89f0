#include "klr/cartan_datum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace klr {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::InsufficientMultiplicity: return "InsufficientMultiplicity";
    case ErrorKind::LevelTooSmall: return "LevelTooSmall";
    case ErrorKind::VertexNotFound: return "VertexNotFound";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::NodeNotRemovable: return "NodeNotRemovable";
    case ErrorKind::ContentMismatch: return "ContentMismatch";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::UnsupportedGraph: return "UnsupportedGraph";
    case ErrorKind::LocalAlgebraUnsupported: return "LocalAlgebraUnsupported";
    case ErrorKind::ParameterRange: return "ParameterRange";
    case ErrorKind::SearchSpaceExceeded: return "SearchSpaceExceeded";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    }
    return "Error";
}

AffineRank::AffineRank(int ell_) : ell(ell_) {
    if (ell < 1) throw Error(ErrorKind::ParameterRange, "ell must be >= 1, got " + std::to_string(ell));
}

int AffineRank::mod(long long i) const {
    long long r = i % e();
    return static_cast<int>(r < 0 ? r + e() : r);
}

int WeightCoeffs::level() const { return std::accumulate(lambda.begin(), lambda.end(), 0); }

bool WeightCoeffs::dominant() const {
    return std::all_of(lambda.begin(), lambda.end(), [](int c) { return c >= 0; });
}

int RootVector::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool RootVector::nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

IntMatrix cartan_matrix(const AffineRank& rank) {
    const int e = rank.e();
    IntMatrix a(e, IntVec(e, 0));
    for (int i = 0; i < e; ++i) {
        a[i][i] += 2;
        // for ell = 1 both neighbours coincide, giving the -2 entries
        a[i][rank.mod(i + 1)] -= 1;
        a[i][rank.mod(i - 1)] -= 1;
    }
    return a;
}

int pairing(int i, const WeightCoeffs& mu) {
    if (mu.lambda.empty()) throw Error(ErrorKind::IndexOutOfRange, "empty weight");
    const AffineRank rank(static_cast<int>(mu.lambda.size()) - 1);
    return mu.lambda[rank.mod(i)];
}

WeightCoeffs alpha_to_weight(int i, const AffineRank& rank) {
    const int m = rank.mod(i);
    WeightCoeffs w{IntVec(rank.e(), 0), m == 0 ? 1 : 0};
    w.lambda[m] += 2;
    w.lambda[rank.mod(m - 1)] -= 1;
    w.lambda[rank.mod(m + 1)] -= 1;
    return w;
}

WeightCoeffs root_to_weight(const RootVector& beta) {
    const AffineRank rank(static_cast<int>(beta.coeffs.size()) - 1);
    const IntMatrix a = cartan_matrix(rank);
    WeightCoeffs w{IntVec(rank.e(), 0), beta.coeffs[0]};
    for (int i = 0; i < rank.e(); ++i)
        for (int j = 0; j < rank.e(); ++j) w.lambda[i] += a[i][j] * beta.coeffs[j];
    return w;
}

std::pair<RootVector, int> delta_decompose(const RootVector& beta) {
    const int m = beta.coeffs.empty() ? 0 : *std::min_element(beta.coeffs.begin(), beta.coeffs.end());
    RootVector rest = beta;
    for (int& c : rest.coeffs) c -= m;
    return {rest, m};
}

IntVec rotate(const IntVec& v, int shift) {
    if (v.empty()) return v;
    const AffineRank rank(static_cast<int>(v.size()) - 1);
    IntVec out(v.size());
    for (int i = 0; i < rank.e(); ++i) out[rank.mod(i + shift)] = v[i];
    return out;
}

WeightCoeffs sigma_rotate(const WeightCoeffs& w, int shift) { return {rotate(w.lambda, shift), w.delta}; }

RootVector sigma_rotate(const RootVector& beta, int shift) { return {rotate(beta.coeffs, shift)}; }

IntVec interval_delta(int i, int j, const AffineRank& rank) {
    IntVec bits(rank.e(), 0);
    int p = rank.mod(i);
    const int last = rank.mod(j);
    while (true) {
        bits[p] = 1;
        if (p == last) break;
        p = rank.mod(p + 1);
    }
    return bits;
}

namespace {

void append_term(std::ostringstream& os, bool& first, int c, const std::string& sym) {
    if (c == 0) return;
    if (c < 0) os << '-';
    else if (!first) os << '+';
    if (c != 1 && c != -1) os << (c < 0 ? -c : c);
    os << sym;
    first = false;
}

} // namespace

std::string format_weight(const IntVec& coeffs) { return format_weight(WeightCoeffs{coeffs, 0}); }

std::string format_weight(const WeightCoeffs& w) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < w.lambda.size(); ++i) append_term(os, first, w.lambda[i], "Λ_" + std::to_string(i));
    append_term(os, first, w.delta, "δ");
    return first ? "0" : os.str();
}

std::string format_root(const RootVector& beta) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < beta.coeffs.size(); ++i) append_term(os, first, beta.coeffs[i], "α_" + std::to_string(i));
    return first ? "0" : os.str();
}

std::string format_vector(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

} // namespace klr
