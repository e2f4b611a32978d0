#pragma once

#include "arrcohom/arrangement.hpp"
#include "arrcohom/poly.hpp"
#include "arrcohom/scalar.hpp"

#include <vector>

namespace arrcohom {

// Desk-scale bounds for layer enumeration: subsets of hypersurfaces are
// enumerated exhaustively and every connected component is materialized.
inline constexpr int kMaxToricHypersurfaces = 8;
inline constexpr int kMaxTorusDim = 4;
inline constexpr long kMaxLayerComponents = 100000;

// Hypersurface {x in (C*)^n : x^a = e^{2 pi i b}} with a primitive and b
// rational mod 1. (a, b) and (-a, -b) cut the same subset, so construction
// normalizes: first nonzero exponent positive, offset reduced into [0, 1).
class ToricHypersurface {
public:
    ToricHypersurface(IntegerVector exponents, Rational offset);

    const IntegerVector& exponents() const { return exponents_; }
    const Rational& offset() const { return offset_; }

    friend bool operator==(const ToricHypersurface& a, const ToricHypersurface& b)
    {
        return a.exponents_.size() == b.exponents_.size() && a.exponents_ == b.exponents_ &&
               a.offset_ == b.offset_;
    }

private:
    IntegerVector exponents_;
    Rational offset_;
};

// Finite set of toric hypersurfaces in a fixed torus (C*)^n. Two entries that
// normalize to the same hypersurface are rejected.
class ToricArrangement {
public:
    explicit ToricArrangement(int ambient_dim,
                              std::vector<ToricHypersurface> hypersurfaces = {});

    int ambient_dim() const { return n_; }
    Index size() const { return static_cast<Index>(hypersurfaces_.size()); }
    const ToricHypersurface& hypersurface(Index i) const
    {
        return hypersurfaces_[static_cast<std::size_t>(i)];
    }

private:
    int n_;
    std::vector<ToricHypersurface> hypersurfaces_;
};

// Connected component of an intersection, in angular coordinates z on the
// torus (x_j = e^{2 pi i z_j}): the layer is {z : saturation * z = offsets
// mod Z}. The constraint lattice is saturated, so that system is connected
// and the pair (saturation, offsets) determines the layer.
struct Layer {
    IntegerMatrix saturation;          // codim x n, Hermite normal form rows
    RationalVector offsets;            // codim entries in [0, 1)
    RationalVector point;              // representative z0, entries in [0, 1)
    IntegerMatrix directions;          // n x dim primitive basis of ker(saturation)
    std::vector<Index> hypersurfaces;  // indices of hypersurfaces containing the layer
    int codim = 0;
};

// Poset of all layers, ordered by reverse inclusion (bottom = the whole
// torus) and ranked by codimension. Equal-rank layers are ordered by the
// index set of the hypersurfaces through them, then by offsets.
class LayerPoset {
public:
    LayerPoset(int ambient_dim, std::vector<Layer> layers);

    int ambient_dim() const { return n_; }
    Index size() const { return static_cast<Index>(layers_.size()); }
    const Layer& layer(Index i) const { return layers_[static_cast<std::size_t>(i)]; }
    int rank(Index i) const { return layers_[static_cast<std::size_t>(i)].codim; }
    Integer mobius(Index i) const { return mobius_[static_cast<std::size_t>(i)]; }
    Index bottom() const { return 0; }
    int max_rank() const { return max_rank_; }

    // i <= j iff layer j is contained in layer i as a subset of the torus.
    bool leq(Index i, Index j) const
    {
        return leq_[static_cast<std::size_t>(i) * layers_.size() + static_cast<std::size_t>(j)];
    }

private:
    int n_;
    int max_rank_ = 0;
    std::vector<Layer> layers_;
    std::vector<Integer> mobius_;
    std::vector<bool> leq_;
};

LayerPoset build_layer_poset(const ToricArrangement& t);

// Traces of the non-containing hypersurfaces on the given layer, written in
// the layer's own torus coordinates z = point + directions * s. A trace with
// non-primitive exponent vector splits into gcd-many parallel primitive
// hypersurfaces; coincident traces merge.
ToricArrangement restrict_to_layer(const ToricArrangement& t, const LayerPoset& p, Index layer);

// Sum over layers of |mu(X)| t^codim(X) (1 + t)^dim(X).
IntegerPoly toric_poincare(const LayerPoset& p);

// Abelian duality constraints for the claimed dimension n (the toric slot of
// the duality trio), with the corank surfaced but not subtracted.
struct ToricDualityReport {
    int ambient_dim = 0;
    int corank = 0;
    IntegerPoly poincare;
    Integer euler;
    DualityConstraintReport constraints;
};

ToricDualityReport toric_duality_check(const ToricArrangement& t);

}  // namespace arrcohom
