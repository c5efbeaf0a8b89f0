#pragma once

#include <map>
#include <string>

namespace klr {

// Integer Laurent polynomial in q. Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long constant);

    static LaurentPoly monomial(int exponent, long long coeff = 1);

    const std::map<int, long long>& terms() const { return terms_; }
    long long coeff(int exponent) const;
    bool is_zero() const { return terms_.empty(); }
    long long at_one() const;

    void add_term(int exponent, long long coeff);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    // Ascending exponents: "1+2q^2+q^{-2}" style, coefficient 1 omitted.
    std::string to_string() const;

private:
    std::map<int, long long> terms_;
};

} // namespace klr
