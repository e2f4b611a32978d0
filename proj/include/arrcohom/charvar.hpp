#pragma once

#include "arrcohom/salvetti.hpp"
#include "arrcohom/wonderful.hpp"

#include <map>

namespace arrcohom {

// One evaluated meridian class: rho(gamma) = prod_H t_H^{v_H} in GF(p).
struct EvaluatedClass {
    IntegerVector gamma;
    std::int64_t value;
};

// Nonresonance of a character against a set of meridian classes: resonant
// classes are those evaluating to 1.
struct NonresonanceCertificate {
    Character character;
    std::vector<EvaluatedClass> checked;
    std::vector<std::size_t> resonant;  // indices into checked

    bool nonresonant() const { return resonant.empty(); }
};

NonresonanceCertificate is_nonresonant(const Character& rho,
                                       const std::vector<IntegerVector>& gammas);

// Character sweep: exhaustive over (GF(p)*)^m when within budget, otherwise
// seeded sampling of `samples` tuples.
struct SweepPlan {
    std::int64_t prime;
    bool exhaustive = true;
    long samples = 0;
    std::uint64_t seed = 0;
};

struct GenericVanishingFailure {
    Character character;
    std::vector<long> betti;
};

// Vanishing predicted for every nonresonant character: b_i = 0 below the
// duality dimension and b_{n_eff} = (-1)^{n_eff} chi there.
struct GenericVanishingReport {
    int n_eff = 0;
    Integer expected_top = 0;
    long swept = 0;
    long nonresonant_count = 0;
    std::vector<GenericVanishingFailure> failures;

    bool pass() const { return failures.empty(); }
};

GenericVanishingReport check_generic_vanishing(const Arrangement& a, const SweepPlan& plan);

struct PropagationViolation {
    Character character;
    int populated;  // degree with b > 0
    int vanishing;  // larger degree <= n_eff with b = 0
    std::vector<long> betti;
};

// Pointwise propagation of the characteristic varieties up to the duality
// dimension, plus V^0 = {trivial character}.
struct PropagationReport {
    std::int64_t prime = 0;
    int n_eff = 0;
    long swept = 0;
    bool v0_is_trivial_only = true;
    std::vector<PropagationViolation> violations;
    std::map<std::vector<long>, long> betti_histogram;

    bool pass() const { return violations.empty() && v0_is_trivial_only; }
};

PropagationReport check_propagation(const Arrangement& a, const SweepPlan& plan);

// Characters grouped by which meridian classes resonate.
struct ResonancePattern {
    std::vector<std::size_t> resonant_classes;  // indices into gammas
    long count = 0;
};

struct ResonanceSummary {
    std::vector<IntegerVector> gammas;
    std::vector<ResonancePattern> patterns;  // sorted by resonant class set
    long total = 0;
    long nonresonant_count = 0;
};

ResonanceSummary resonance_locus_summary(const Arrangement& a, const SweepPlan& plan);

}  // namespace arrcohom
