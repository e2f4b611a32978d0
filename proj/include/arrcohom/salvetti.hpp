#pragma once

#include "arrcohom/arrangement.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace arrcohom {

inline constexpr Index kDefaultFaceBound = 9;  // hyperplane cap for face enumeration
inline constexpr Index kMaxFaceAmbientDim = 4;
inline constexpr long kExhaustiveSweepBudget = 1'000'000;  // max (p-1)^m for full sweeps

// Relatively open cell of the real decomposition, recorded by its sign vector:
// one of '+', '0', '-' per hyperplane, taken at any relative interior point.
struct SignedFace {
    std::string signs;
    RationalVector witness;  // a relative interior point
    Index zero_flat = 0;     // poset index of the flat cut out by the zero set
    int dim = 0;
};

// All faces of the decomposition of R^n induced by a rational arrangement
// (rational coefficients make the complexified arrangement complexified-real).
class FacePoset {
public:
    FacePoset(Arrangement a, FlatPoset flats, std::vector<SignedFace> faces);

    const Arrangement& arrangement() const { return a_; }
    const FlatPoset& flats() const { return flats_; }
    Index ambient_dim() const { return a_.ambient_dim(); }
    Index size() const { return static_cast<Index>(faces_.size()); }
    const SignedFace& face(Index i) const { return faces_[static_cast<std::size_t>(i)]; }
    const std::vector<Index>& chambers() const { return chambers_; }

    // Face f lies in the closure of face g.
    bool in_closure(Index f, Index g) const;
    std::optional<Index> find_signs(const std::string& signs) const;

private:
    Arrangement a_;
    FlatPoset flats_;
    std::vector<SignedFace> faces_;
    std::vector<Index> chambers_;
};

// Exact enumeration of all realizable sign vectors: vertices of the
// arrangement boxed inside |x_i| <= K (K beyond every flat witness point) are
// closed under sign-vector composition, each face carrying an exact rational
// interior witness; faces strictly inside the box are the faces of a.
FacePoset enumerate_faces(const Arrangement& a, Index max_hyperplanes = kDefaultFaceBound);

// One cell per pair (face, adjacent chamber); the cell dimension is the
// codimension of the face's flat.
struct CwCell {
    Index face;
    Index chamber;
};

// Boundary entry: target cell one dimension down, orientation sign, and the
// exponent of t_H per hyperplane (1 when the chamber-to-chamber walk crosses
// H from its negative to its positive side).
struct BoundaryEntry {
    Index target;
    int sign;
    std::vector<int> crossings;
};

// Finite CW model of the complexified complement. One model serves every
// character: boundary entries carry monomial exponent vectors.
struct CWModel {
    Index ambient_dim = 0;
    Index hyperplane_count = 0;
    std::vector<std::vector<CwCell>> cells;  // by dimension
    // boundaries[k][c] = entries of the boundary of cell c in dimension k;
    // boundaries[0] is empty.
    std::vector<std::vector<std::vector<BoundaryEntry>>> boundaries;

    std::vector<long> cell_counts() const;
    Integer euler_characteristic() const;
};

CWModel build_cw_model(const FacePoset& fp);

// Rank-1 local system over GF(p): one unit residue per hyperplane.
struct Character {
    std::int64_t prime;
    std::vector<std::int64_t> values;  // residues in [1, p-1]

    bool operator==(const Character&) const = default;
};

Character trivial_character(std::int64_t prime, Index hyperplane_count);

// Twisted Betti numbers b_q = dim H^q(M, k_rho) for q = 0..n, computed from
// the specialized boundary ranks over GF(p).
std::vector<long> twisted_betti(const CWModel& m, const Character& rho);

// Advance a tuple in (Z/p)*^m through lexicographic order starting from all
// ones; returns false once the last tuple has been passed.
bool next_residue_tuple(std::vector<std::int64_t>& tuple, std::int64_t p);

// Characters with b_q > 0, full sweep over (GF(p)*)^{|A|} in lexicographic
// order. Rejects sweeps larger than the exhaustive budget.
std::vector<Character> characteristic_variety(const Arrangement& a, std::int64_t p, int q);

// Sampling fallback beyond the exhaustive budget: `samples` seeded draws,
// deduplicated positives in lexicographic order.
std::vector<Character> characteristic_variety_sampled(const Arrangement& a, std::int64_t p,
                                                      int q, long samples,
                                                      std::uint64_t seed);

}  // namespace arrcohom
