#pragma once

#include "arrcohom/arrangement.hpp"

#include <vector>

namespace arrcohom {

enum class BuildingFlavor { minimal, maximal };

// Set of positive-rank flats closed under the decomposition requirement:
// every positive-rank flat factors into members with ranks adding.
// Minimal flavor keeps exactly the irreducible flats, maximal keeps all.
struct BuildingSet {
    BuildingFlavor flavor;
    std::vector<Index> members;  // poset flat indices, ascending

    bool contains(Index flat) const;
};

// True iff the localized arrangement at x admits no split A_1 | A_2 into two
// nonempty parts with rank(A_1) + rank(A_2) = rank(x).
bool is_irreducible(const Arrangement& a, const Flat& x);

// Factors of the localized arrangement at the flat x: the unique finest
// rank-additive partition. Returns the factors' closure flats, ascending.
// The bottom flat decomposes into nothing.
std::vector<Index> decompose_flat(const Arrangement& a, const FlatPoset& p, Index x);

BuildingSet minimal_building_set(const Arrangement& a, const FlatPoset& p);
BuildingSet maximal_building_set(const FlatPoset& p);

// A set of members is nested iff every contained antichain of size >= 2 has a
// join in the poset, the join is not itself a member, and the join's
// decomposition equals the antichain exactly.
bool is_nested_set(const Arrangement& a, const FlatPoset& p, const BuildingSet& g,
                   std::vector<Index> s);

// All nested sets of a building set, as a simplicial complex.
struct NestedSetComplex {
    BuildingSet building;
    std::vector<std::vector<Index>> faces;  // sorted poset indices; includes the empty face
    std::vector<long> f_vector;             // f_vector[k] = number of faces of cardinality k
};

NestedSetComplex nested_set_complex(const Arrangement& a, const FlatPoset& p,
                                    const BuildingSet& g);

// Meridian data of the local torus attached to a nested set s of the central
// model at x: one generator per member, with homology class the indicator
// vector of the hyperplanes containing that member.
struct LocalTorusData {
    Index flat;
    std::vector<Index> nested_set;
    int rank;
    std::vector<IntegerVector> generator_classes;  // length |A| each
};

LocalTorusData local_torus_data(const Arrangement& a, const FlatPoset& p, Index x,
                                const std::vector<Index>& s,
                                BuildingFlavor flavor = BuildingFlavor::minimal);

// Indicator vectors of {H : H contains g} for g ranging over the union of the
// chosen building sets of all flats; deduplicated, lexicographically sorted.
std::vector<IntegerVector> all_gamma_classes(const Arrangement& a, const FlatPoset& p,
                                             BuildingFlavor flavor = BuildingFlavor::minimal);

}  // namespace arrcohom
