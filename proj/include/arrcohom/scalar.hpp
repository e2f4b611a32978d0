#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace Eigen {

// Exact scalars for dense matrices; cost constants are rough relative weights.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 80
    };
};

}  // namespace Eigen

namespace arrcohom {

using Rational = mpq_class;
using Integer = mpz_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(const Integer& x) { return sgn(x); }

// Parses "p/q" or "p" in base 10; rejects empty strings and zero denominators.
inline Rational parse_rational(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal '" + text + "'");
    value.canonicalize();
    return Rational(value);
}

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace arrcohom
