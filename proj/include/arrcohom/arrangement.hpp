#pragma once

#include "arrcohom/poly.hpp"
#include "arrcohom/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrcohom {

// Affine hyperplane {x : normal . x = offset} in Q^n.
struct Hyperplane {
    RationalVector normal;
    Rational offset;
};

// Ordered list of pairwise distinct hyperplanes in a fixed ambient dimension.
// Construction rejects zero normals and repeated hyperplanes (two lines
// defining the same affine subspace), naming both offending positions.
class Arrangement {
public:
    Arrangement(Index ambient_dim, std::vector<Hyperplane> hyperplanes,
                std::vector<std::string> labels = {});

    Index ambient_dim() const { return n_; }
    Index size() const { return static_cast<Index>(hyperplanes_.size()); }
    const Hyperplane& hyperplane(Index i) const { return hyperplanes_[static_cast<std::size_t>(i)]; }
    const std::string& label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }
    bool is_central() const { return central_; }

private:
    Index n_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<std::string> labels_;
    bool central_;
};

// Nonempty intersection of a (closed) set of hyperplanes.
struct Flat {
    std::vector<Index> hyperplanes;  // closed index set, sorted ascending
    RationalMatrix canonical;        // RREF of the defining system [A | c]; dedup key
    RationalVector point;            // one point on the subspace
    RationalMatrix directions;       // columns: basis of the direction space
    int codim = 0;
};

// Intersection poset ordered by reverse inclusion of subspaces (X <= Y iff
// X contains Y, equivalently index set containment), ranked by codimension,
// with Moebius values mu(bottom, X).
class FlatPoset {
public:
    FlatPoset(Index ambient_dim, std::vector<Flat> flats);

    Index ambient_dim() const { return n_; }
    Index size() const { return static_cast<Index>(flats_.size()); }
    const Flat& flat(Index i) const { return flats_[static_cast<std::size_t>(i)]; }
    int rank(Index i) const { return flats_[static_cast<std::size_t>(i)].codim; }
    const Integer& mobius(Index i) const { return mobius_[static_cast<std::size_t>(i)]; }
    Index bottom() const { return 0; }
    int max_rank() const { return max_rank_; }

    bool leq(Index i, Index j) const;  // flat i contains flat j
    std::vector<Index> flats_of_rank(int r) const;
    // Index of the flat with the given canonical form, if present.
    std::optional<Index> find_canonical(const RationalMatrix& canonical) const;
    // Index of the flat cut out by the given hyperplane set; nullopt if empty.
    std::optional<Index> find_by_hyperplanes(const Arrangement& a,
                                             const std::vector<Index>& hyperplanes) const;

private:
    Index n_;
    std::vector<Flat> flats_;
    std::vector<Integer> mobius_;
    int max_rank_;
};

FlatPoset build_flat_poset(const Arrangement& a);

// Subarrangement of hyperplanes containing x (same ambient coordinates);
// central after translating a point of x to the origin.
Arrangement localize(const Arrangement& a, const Flat& x);

// Arrangement induced on x: distinct nonempty traces of the non-containing
// hyperplanes, in coordinates given by the direction basis of x.
Arrangement restrict_to_flat(const Arrangement& a, const Flat& x);

// Localization translated so x passes through the origin and offsets dropped:
// the central local model at x.
Arrangement local_tangent_arrangement(const Arrangement& a, const Flat& x);

// Sum over flats of |mu(0,X)| t^{r(X)}; coefficients are the Betti numbers of
// the complement.
IntegerPoly whitney_poincare(const FlatPoset& p);

Integer euler_characteristic(const FlatPoset& p);

int corank(const FlatPoset& p);
int corank(const Arrangement& a);

enum class ComplementKind { linear, elliptic, toric };

// Expected duality dimension: n-r (linear), n+r (elliptic), n (toric).
// Elliptic with r == n means an empty elliptic arrangement, which is not a
// duality space; rejected.
int duality_dimension(ComplementKind kind, int n, int r);

struct DualityConstraintReport {
    bool betti_positive = false;   // b_i > 0 for i <= d and b_i = 0 for i > d
    bool b1_at_least_d = false;    // b_1 >= d
    bool signed_euler_ok = false;  // (-1)^d poin(-1) >= 0
    bool all() const { return betti_positive && b1_at_least_d && signed_euler_ok; }
};

DualityConstraintReport abelian_duality_constraints(const IntegerPoly& poin, int claimed_dim);

// Central arrangement in dimension n+1: each a.x = c homogenizes to
// a.x - c x_0 = 0, plus the hyperplane at infinity x_0 = 0 appended last.
Arrangement cone(const Arrangement& a);

// Affine chart {u.x = 1} of a central arrangement, u the normal of the
// hyperplane at the given index; that hyperplane goes to infinity.
Arrangement decone(const Arrangement& a, Index hyperplane_at_infinity);

}  // namespace arrcohom
