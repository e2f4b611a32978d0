#pragma once

#include "arrcohom/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrcohom {

// Desk-scale bounds for stratum enumeration.
inline constexpr int kMaxOrbitPoints = 8;
inline constexpr int kMaxGroupOrder = 4;
inline constexpr int kMaxPunctures = 6;

// Orbit configuration space of n ordered disjoint orbits of a free action of
// a group of order m on a genus-g surface with k punctures. The group is
// abstract: only its order enters the counting.
struct OrbitConfigSpec {
    int genus = 0;
    int punctures = 0;
    int points = 1;
    int group_order = 1;
};

// Throws unless g >= 0, k >= 0, n >= 1, m >= 1, and m | k when k > 0 (a free
// action permutes the punctures in orbits of full size).
void validate_spec(const OrbitConfigSpec& spec);

// Block of a stratum: either a surface block, whose members collide up to
// group translation with labels normalized so the least member carries the
// identity, or a singleton pinned to one of the punctures. Members and
// puncture indices are 0-based.
struct StratumBlock {
    std::vector<int> members;
    bool puncture = false;
    int puncture_index = 0;
    std::vector<int> labels;

    friend bool operator==(const StratumBlock&, const StratumBlock&) = default;
};

struct OrbitStratum {
    std::vector<StratumBlock> blocks;  // ordered by least member

    friend bool operator==(const OrbitStratum&, const OrbitStratum&) = default;
};

// All strata: set partitions of the points, each block either a surface
// block with one of m^{|B|-1} normalized labelings or a pinned singleton,
// distinct blocks pinned at distinct punctures.
std::vector<OrbitStratum> enumerate_strata(const OrbitConfigSpec& spec);

// Cardinality of enumerate_strata computed per partition without
// materializing the strata.
Integer count_strata(const OrbitConfigSpec& spec);

// Number of surface blocks; the open stratum of the closure is the orbit
// configuration space of that many points.
int stratum_complement_type(const OrbitStratum& s);

// prod_{i=0}^{n-1} (2 - 2g - k - i m): the Euler characteristic, multiplied
// out along the bundles that delete one orbit at a time.
Integer euler_orbit_config(const OrbitConfigSpec& spec);

// Checks n! [t^n] (1+t)^{2-2g} = prod_{i=0}^{n-1} (2 - 2g - i) for all
// n <= n_max, expanding the left side as a power series (the reciprocal of
// (1+t)^{2g-2} when g >= 1), independent of the product route.
bool euler_unordered_series_check(int genus, int n_max);

enum class Trilean { yes, no, unknown };

std::string to_string(Trilean t);

struct DualityClassification {
    Trilean is_duality = Trilean::unknown;
    Trilean is_abelian_duality = Trilean::unknown;
    std::optional<int> dimension;
    std::string reason;
};

// k > 0: both duality and abelian duality of dimension n. k = 0: duality of
// dimension n+1 for g >= 1; abelian duality iff g = 1, with the g >= 2
// refutation known for the trivial group only (reported unknown otherwise);
// the sphere is neither.
DualityClassification classify_duality(const OrbitConfigSpec& spec);

struct SignedEulerReport {
    Integer euler;
    bool abelian_checked = false;  // an abelian duality dimension d was claimed
    bool abelian_sign_ok = true;   // (-1)^d euler >= 0
    bool witness_checked = false;  // g >= 2, k = 0, trivial group
    bool witness_ok = true;        // (-1)^{n+1} euler < 0
    bool consistent() const { return abelian_sign_ok && witness_ok; }
};

SignedEulerReport signed_euler_consistency(const OrbitConfigSpec& spec);

}  // namespace arrcohom
