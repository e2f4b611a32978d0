#pragma once

#include "arrcohom/scalar.hpp"

#include <cstdint>
#include <vector>

namespace arrcohom {

// Dense matrix over GF(p), entries reduced to {0,...,p-1}. The modulus is
// runtime data; all arithmetic is performed mod p with int64 intermediates,
// which is exact because construction requires p < 2^31.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(std::int64_t modulus, Index rows, Index cols);
    PrimeFieldMatrix(std::int64_t modulus, const IntegerMatrix& m);

    std::int64_t modulus() const { return p_; }
    Index rows() const { return entries_.rows(); }
    Index cols() const { return entries_.cols(); }
    std::int64_t operator()(Index i, Index j) const { return entries_(i, j); }
    void set(Index i, Index j, std::int64_t value);

private:
    std::int64_t p_;
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> entries_;
};

bool is_prime(std::int64_t n);

// Row-reduces m in place (pivot = first nonzero entry in row-major order,
// pivots normalized to 1, entries above and below cleared); returns the pivot
// column indices in order.
std::vector<Index> rref_in_place(RationalMatrix& m);

int rational_rank(const RationalMatrix& m);

// Basis of the right kernel, one column per basis vector; cols - rank columns.
RationalMatrix nullspace_rational(const RationalMatrix& m);

struct SmithNormalForm {
    std::vector<Integer> diagonal;  // d_1 | d_2 | ... | d_r, all positive
    IntegerMatrix matrix;           // full rows x cols diagonal matrix
    IntegerMatrix left;             // unimodular, rows x rows
    IntegerMatrix right;            // unimodular, cols x cols; left * m * right = matrix
};

SmithNormalForm smith_normal_form(const IntegerMatrix& m);

// Row-style Hermite normal form of the lattice spanned by the rows of m:
// zero rows dropped, pivots positive, entries above each pivot reduced into
// [0, pivot). Canonical for the row lattice.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

int prime_field_rank(const PrimeFieldMatrix& m);

Integer integer_determinant(const IntegerMatrix& m);

Rational rational_determinant(RationalMatrix m);

// Basis of {v integer : m v = 0} as columns; saturated (primitive) basis.
IntegerMatrix integer_kernel(const IntegerMatrix& m);

// Basis of span_Q(rows of m) intersected with Z^n, as rows.
IntegerMatrix saturate_row_lattice(const IntegerMatrix& m);

}  // namespace arrcohom
