#include "arrcohom/exactlin.hpp"

#include <stdexcept>

namespace arrcohom {

namespace {

// Deterministic Miller-Rabin, exact for all 64-bit inputs with this base set.
bool miller_rabin(std::uint64_t n, std::uint64_t a)
{
    if (a % n == 0) return true;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mulmod = [](std::uint64_t x, std::uint64_t y, std::uint64_t m) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
    };
    std::uint64_t x = 1;
    std::uint64_t base = a % n;
    std::uint64_t e = d;
    while (e > 0) {
        if (e & 1) x = mulmod(x, base, n);
        base = mulmod(base, base, n);
        e >>= 1;
    }
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (!miller_rabin(static_cast<std::uint64_t>(n), a)) return false;
    return true;
}

PrimeFieldMatrix::PrimeFieldMatrix(std::int64_t modulus, Index rows, Index cols)
    : p_(modulus), entries_(Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(rows, cols))
{
    if (p_ < 3 || p_ >= (std::int64_t(1) << 31) || !is_prime(p_))
        throw std::invalid_argument("modulus must be a prime >= 3 (and < 2^31)");
}

PrimeFieldMatrix::PrimeFieldMatrix(std::int64_t modulus, const IntegerMatrix& m)
    : PrimeFieldMatrix(modulus, m.rows(), m.cols())
{
    Integer p(static_cast<long>(p_));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            Integer r = m(i, j) % p;
            if (r < 0) r += p;
            entries_(i, j) = r.get_si();
        }
}

void PrimeFieldMatrix::set(Index i, Index j, std::int64_t value)
{
    std::int64_t r = value % p_;
    if (r < 0) r += p_;
    entries_(i, j) = r;
}

std::vector<Index> rref_in_place(RationalMatrix& m)
{
    std::vector<Index> pivot_cols;
    Index pivot_row = 0;
    for (Index col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        Index found = -1;
        for (Index i = pivot_row; i < m.rows(); ++i) {
            if (m(i, col) != 0) {
                found = i;
                break;
            }
        }
        if (found < 0) continue;
        if (found != pivot_row) m.row(found).swap(m.row(pivot_row));
        Rational inv = 1 / m(pivot_row, col);
        for (Index j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m(i, col) == 0) continue;
            Rational factor = m(i, col);
            for (Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

int rational_rank(const RationalMatrix& m)
{
    RationalMatrix work = m;
    return static_cast<int>(rref_in_place(work).size());
}

RationalMatrix nullspace_rational(const RationalMatrix& m)
{
    RationalMatrix work = m;
    std::vector<Index> pivots = rref_in_place(work);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    Index free_count = m.cols() - static_cast<Index>(pivots.size());
    RationalMatrix basis = RationalMatrix::Zero(m.cols(), free_count);
    Index out = 0;
    for (Index fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        basis(fc, out) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            basis(pivots[k], out) = -work(static_cast<Index>(k), fc);
        ++out;
    }
    return basis;
}

namespace {

// Index of the first nonzero entry (row-major) of the trailing submatrix
// starting at (t, t); {-1, -1} if the submatrix is zero.
std::pair<Index, Index> find_pivot(const IntegerMatrix& d, Index t)
{
    for (Index i = t; i < d.rows(); ++i)
        for (Index j = t; j < d.cols(); ++j)
            if (d(i, j) != 0) return {i, j};
    return {-1, -1};
}

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& m)
{
    const Index rows = m.rows(), cols = m.cols();
    SmithNormalForm out;
    out.matrix = m;
    out.left = IntegerMatrix::Identity(rows, rows);
    out.right = IntegerMatrix::Identity(cols, cols);
    IntegerMatrix& d = out.matrix;

    for (Index t = 0; t < std::min(rows, cols); ++t) {
        auto [pi, pj] = find_pivot(d, t);
        if (pi < 0) break;
        if (pi != t) {
            d.row(pi).swap(d.row(t));
            out.left.row(pi).swap(out.left.row(t));
        }
        if (pj != t) {
            d.col(pj).swap(d.col(t));
            out.right.col(pj).swap(out.right.col(t));
        }

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // Euclidean column clearing below the pivot.
            for (Index i = t + 1; i < rows; ++i) {
                while (d(i, t) != 0) {
                    Integer q = d(i, t) / d(t, t);  // truncated division
                    if (q != 0) {
                        d.row(i) -= q * d.row(t);
                        out.left.row(i) -= q * out.left.row(t);
                    }
                    if (d(i, t) != 0) {
                        d.row(i).swap(d.row(t));
                        out.left.row(i).swap(out.left.row(t));
                    }
                }
            }
            // Euclidean row clearing right of the pivot.
            for (Index j = t + 1; j < cols; ++j) {
                while (d(t, j) != 0) {
                    Integer q = d(t, j) / d(t, t);
                    if (q != 0) {
                        d.col(j) -= q * d.col(t);
                        out.right.col(j) -= q * out.right.col(t);
                    }
                    if (d(t, j) != 0) {
                        d.col(j).swap(d.col(t));
                        out.right.col(j).swap(out.right.col(t));
                        dirty = true;  // column swap can repopulate the pivot column
                    }
                }
            }
        }

        // Enforce divisibility: fold any non-multiple into the pivot row.
        bool divisibility_dirty = true;
        while (divisibility_dirty) {
            divisibility_dirty = false;
            for (Index i = t + 1; i < rows && !divisibility_dirty; ++i)
                for (Index j = t + 1; j < cols && !divisibility_dirty; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.row(t) += d.row(i);
                        out.left.row(t) += out.left.row(i);
                        divisibility_dirty = true;
                    }
            if (divisibility_dirty) {
                // Re-clear; pivot stays at (t, t) and strictly divides more afterwards.
                bool dirty2 = true;
                while (dirty2) {
                    dirty2 = false;
                    for (Index i = t + 1; i < rows; ++i) {
                        while (d(i, t) != 0) {
                            Integer q = d(i, t) / d(t, t);
                            if (q != 0) {
                                d.row(i) -= q * d.row(t);
                                out.left.row(i) -= q * out.left.row(t);
                            }
                            if (d(i, t) != 0) {
                                d.row(i).swap(d.row(t));
                                out.left.row(i).swap(out.left.row(t));
                            }
                        }
                    }
                    for (Index j = t + 1; j < cols; ++j) {
                        while (d(t, j) != 0) {
                            Integer q = d(t, j) / d(t, t);
                            if (q != 0) {
                                d.col(j) -= q * d.col(t);
                                out.right.col(j) -= q * out.right.col(t);
                            }
                            if (d(t, j) != 0) {
                                d.col(j).swap(d.col(t));
                                out.right.col(j).swap(out.right.col(t));
                                dirty2 = true;
                            }
                        }
                    }
                }
            }
        }

        if (d(t, t) < 0) {
            d.row(t) = -d.row(t);
            out.left.row(t) = -out.left.row(t);
        }
    }

    for (Index t = 0; t < std::min(rows, cols); ++t)
        if (d(t, t) != 0) out.diagonal.push_back(d(t, t));
    return out;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m)
{
    IntegerMatrix h = m;
    const Index rows = h.rows(), cols = h.cols();
    Index pivot_row = 0;
    std::vector<Index> pivot_cols;
    for (Index col = 0; col < cols && pivot_row < rows; ++col) {
        // Euclidean reduction of the column to a single nonzero entry.
        Index nz = -1;
        for (Index i = pivot_row; i < rows; ++i)
            if (h(i, col) != 0) {
                nz = i;
                break;
            }
        if (nz < 0) continue;
        if (nz != pivot_row) h.row(nz).swap(h.row(pivot_row));
        bool again = true;
        while (again) {
            again = false;
            for (Index i = pivot_row + 1; i < rows; ++i) {
                while (h(i, col) != 0) {
                    Integer q = h(i, col) / h(pivot_row, col);
                    if (q != 0) h.row(i) -= q * h.row(pivot_row);
                    if (h(i, col) != 0) h.row(i).swap(h.row(pivot_row));
                }
            }
        }
        if (h(pivot_row, col) < 0) h.row(pivot_row) = -h.row(pivot_row);
        // Reduce entries above the pivot into [0, pivot).
        for (Index i = 0; i < pivot_row; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(pivot_row, col).get_mpz_t());
            if (q != 0) h.row(i) -= q * h.row(pivot_row);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return h.topRows(pivot_row).eval();
}

int prime_field_rank(const PrimeFieldMatrix& m)
{
    const std::int64_t p = m.modulus();
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> w(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);

    auto invmod = [p](std::int64_t a) {
        // Extended Euclid; a nonzero mod p.
        std::int64_t t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p;
        return t;
    };

    Index pivot_row = 0;
    for (Index col = 0; col < w.cols() && pivot_row < w.rows(); ++col) {
        Index found = -1;
        for (Index i = pivot_row; i < w.rows(); ++i)
            if (w(i, col) % p != 0) {
                found = i;
                break;
            }
        if (found < 0) continue;
        if (found != pivot_row) w.row(found).swap(w.row(pivot_row));
        std::int64_t inv = invmod(w(pivot_row, col));
        for (Index j = col; j < w.cols(); ++j) w(pivot_row, j) = (w(pivot_row, j) * inv) % p;
        for (Index i = 0; i < w.rows(); ++i) {
            if (i == pivot_row) continue;
            std::int64_t f = w(i, col) % p;
            if (f == 0) continue;
            for (Index j = col; j < w.cols(); ++j) {
                w(i, j) = (w(i, j) - f * w(pivot_row, j)) % p;
                if (w(i, j) < 0) w(i, j) += p;
            }
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

Integer integer_determinant(const IntegerMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant requires a square matrix");
    const Index n = m.rows();
    if (n == 0) return Integer(1);
    // Bareiss fraction-free elimination.
    IntegerMatrix w = m;
    Integer prev(1);
    int sign = 1;
    for (Index k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            Index swap_row = -1;
            for (Index i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Integer(0);
            w.row(k).swap(w.row(swap_row));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j) {
                Integer num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                w(i, j) = num / prev;  // exact by Bareiss
            }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Integer(-w(n - 1, n - 1));
}

Rational rational_determinant(RationalMatrix m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant requires a square matrix");
    const Index n = m.rows();
    Rational det(1);
    for (Index k = 0; k < n; ++k) {
        Index pivot = -1;
        for (Index i = k; i < n; ++i)
            if (m(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != k) {
            m.row(k).swap(m.row(pivot));
            det = -det;
        }
        det *= m(k, k);
        for (Index i = k + 1; i < n; ++i) {
            Rational factor = m(i, k) / m(k, k);
            for (Index j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

IntegerMatrix integer_kernel(const IntegerMatrix& m)
{
    SmithNormalForm snf = smith_normal_form(m);
    const Index r = static_cast<Index>(snf.diagonal.size());
    // m * right has zero columns past r, so those right-columns span the kernel.
    return snf.right.rightCols(m.cols() - r).eval();
}

IntegerMatrix saturate_row_lattice(const IntegerMatrix& m)
{
    SmithNormalForm snf = smith_normal_form(m);
    const Index r = static_cast<Index>(snf.diagonal.size());
    if (r == 0) return IntegerMatrix(0, m.cols());
    // With L m R = D, rows of R^{-1} form a Z-basis of Z^n and the first r of
    // them span span_Q(rows m) intersect Z^n.
    Integer det = integer_determinant(snf.right);
    if (det != 1 && det != -1) throw std::runtime_error("right transform not unimodular");
    // Invert the unimodular matrix over the rationals and read back integers.
    const Index n = m.cols();
    RationalMatrix aug(n, 2 * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            aug(i, j) = Rational(snf.right(i, j));
            aug(i, n + j) = (i == j) ? 1 : 0;
        }
    rref_in_place(aug);
    IntegerMatrix inv(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            Rational v = aug(i, n + j);
            if (v.get_den() != 1) throw std::runtime_error("unimodular inverse not integral");
            inv(i, j) = v.get_num();
        }
    return hermite_normal_form(inv.topRows(r).eval());
}

}  // namespace arrcohom
