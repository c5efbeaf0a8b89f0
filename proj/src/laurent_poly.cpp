#include "klr/laurent_poly.hpp"

#include <sstream>

namespace klr {

LaurentPoly::LaurentPoly(long long constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(int exponent, long long coeff) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

long long LaurentPoly::coeff(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

long long LaurentPoly::at_one() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::add_term(int exponent, long long coeff) {
    if (coeff == 0) return;
    const long long v = (terms_[exponent] += coeff);
    if (v == 0) terms_.erase(exponent);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (c < 0) os << '-';
        else if (!first) os << '+';
        const long long a = c < 0 ? -c : c;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a;
            os << 'q';
            if (e < 0) os << "^{" << e << '}';
            else if (e != 1) os << '^' << e;
        }
        first = false;
    }
    return os.str();
}

} // namespace klr
