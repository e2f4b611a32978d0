#pragma once

#include "arrcohom/scalar.hpp"

#include <string>
#include <vector>

namespace arrcohom {

// Dense univariate polynomial with arbitrary-precision integer coefficients;
// coefficients[k] is the coefficient of t^k. Trailing zeros trimmed.
class IntegerPoly {
public:
    IntegerPoly() = default;
    explicit IntegerPoly(std::vector<Integer> coefficients);
    static IntegerPoly constant(Integer c);
    static IntegerPoly monomial(Integer c, std::size_t degree);

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(std::size_t k) const;
    std::size_t degree() const;  // 0 for the zero polynomial
    bool is_zero() const { return coeffs_.empty(); }

    Integer operator()(const Integer& x) const;

    IntegerPoly& operator+=(const IntegerPoly& other);
    friend IntegerPoly operator+(IntegerPoly a, const IntegerPoly& b) { return a += b; }
    friend IntegerPoly operator*(const IntegerPoly& a, const IntegerPoly& b);
    friend bool operator==(const IntegerPoly& a, const IntegerPoly& b) = default;

    // "1 + 3t + 2t^2"; zero polynomial prints "0".
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

}  // namespace arrcohom
