#include "arrcohom/poly.hpp"

namespace arrcohom {

IntegerPoly::IntegerPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

IntegerPoly IntegerPoly::constant(Integer c)
{
    return IntegerPoly(std::vector<Integer>{std::move(c)});
}

IntegerPoly IntegerPoly::monomial(Integer c, std::size_t degree)
{
    std::vector<Integer> v(degree + 1, Integer(0));
    v[degree] = std::move(c);
    return IntegerPoly(std::move(v));
}

Integer IntegerPoly::coefficient(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

std::size_t IntegerPoly::degree() const
{
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
}

Integer IntegerPoly::operator()(const Integer& x) const
{
    Integer acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntegerPoly& IntegerPoly::operator+=(const IntegerPoly& other)
{
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

IntegerPoly operator*(const IntegerPoly& a, const IntegerPoly& b)
{
    if (a.is_zero() || b.is_zero()) return IntegerPoly();
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntegerPoly(std::move(out));
}

std::string IntegerPoly::to_string(const std::string& var) const
{
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (!unit) out += mag.get_str();
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    if (first) return "0";
    return out;
}

void IntegerPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace arrcohom
