#include "arrcohom/charvar.hpp"

#include "arrcohom/exactlin.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace arrcohom {

namespace {

std::int64_t power_mod(std::int64_t base, Integer exponent, std::int64_t p)
{
    base = ((base % p) + p) % p;
    if (base == 0) throw std::invalid_argument("character value divisible by the prime");
    // reduce by Fermat: base^(p-1) = 1
    Integer e = exponent % (p - 1);
    if (e < 0) e += p - 1;
    std::int64_t k = e.get_si();
    std::int64_t result = 1;
    while (k > 0) {
        if (k & 1) result = result * base % p;
        base = base * base % p;
        k >>= 1;
    }
    return result;
}

long exhaustive_count(std::int64_t p, Index m)
{
    long count = 1;
    for (Index i = 0; i < m; ++i) {
        if (count > kExhaustiveSweepBudget / (p - 1) + 1) return kExhaustiveSweepBudget + 1;
        count *= static_cast<long>(p - 1);
    }
    return count;
}

// Visit each character of the plan once, in lexicographic order for
// exhaustive sweeps and in sorted deduplicated order for sampled ones.
template <typename Fn>
long sweep_characters(const SweepPlan& plan, Index m, Fn&& fn)
{
    if (!is_prime(plan.prime) || plan.prime < 3)
        throw std::invalid_argument("sweep needs an odd prime");
    if (plan.exhaustive) {
        if (exhaustive_count(plan.prime, m) > kExhaustiveSweepBudget)
            throw std::invalid_argument(
                "character sweep exceeds the exhaustive budget; sample instead");
        long swept = 0;
        std::vector<std::int64_t> tuple(static_cast<std::size_t>(m), 1);
        do {
            fn(Character{plan.prime, tuple});
            ++swept;
        } while (next_residue_tuple(tuple, plan.prime));
        return swept;
    }
    if (plan.samples <= 0) throw std::invalid_argument("sample count must be positive");
    std::mt19937_64 rng(plan.seed);
    std::vector<std::vector<std::int64_t>> tuples;
    for (long s = 0; s < plan.samples; ++s) {
        std::vector<std::int64_t> tuple(static_cast<std::size_t>(m));
        for (auto& v : tuple)
            v = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(plan.prime - 1));
        tuples.push_back(std::move(tuple));
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    for (const auto& tuple : tuples) fn(Character{plan.prime, tuple});
    return static_cast<long>(tuples.size());
}

int effective_dimension(const Arrangement& a, const FlatPoset& p)
{
    return duality_dimension(ComplementKind::linear, static_cast<int>(a.ambient_dim()),
                             corank(p));
}

}  // namespace

NonresonanceCertificate is_nonresonant(const Character& rho,
                                       const std::vector<IntegerVector>& gammas)
{
    NonresonanceCertificate cert;
    cert.character = rho;
    for (const IntegerVector& gamma : gammas) {
        if (gamma.size() != static_cast<Index>(rho.values.size()))
            throw std::invalid_argument("class length does not match the character");
        std::int64_t value = 1;
        for (Index h = 0; h < gamma.size(); ++h)
            value = value * power_mod(rho.values[static_cast<std::size_t>(h)], gamma(h),
                                      rho.prime) %
                    rho.prime;
        if (value == 1) cert.resonant.push_back(cert.checked.size());
        cert.checked.push_back({gamma, value});
    }
    return cert;
}

GenericVanishingReport check_generic_vanishing(const Arrangement& a, const SweepPlan& plan)
{
    FacePoset fp = enumerate_faces(a);
    CWModel model = build_cw_model(fp);
    std::vector<IntegerVector> gammas = all_gamma_classes(a, fp.flats());

    GenericVanishingReport report;
    report.n_eff = effective_dimension(a, fp.flats());
    Integer chi = euler_characteristic(fp.flats());
    report.expected_top = report.n_eff % 2 == 0 ? chi : Integer(-chi);

    report.swept = sweep_characters(plan, a.size(), [&](const Character& rho) {
        if (!is_nonresonant(rho, gammas).nonresonant()) return;
        ++report.nonresonant_count;
        std::vector<long> betti = twisted_betti(model, rho);
        bool ok = Integer(betti[static_cast<std::size_t>(report.n_eff)]) == report.expected_top;
        for (int i = 0; i < report.n_eff; ++i) ok = ok && betti[static_cast<std::size_t>(i)] == 0;
        if (!ok) report.failures.push_back({rho, std::move(betti)});
    });
    return report;
}

PropagationReport check_propagation(const Arrangement& a, const SweepPlan& plan)
{
    FacePoset fp = enumerate_faces(a);
    CWModel model = build_cw_model(fp);

    PropagationReport report;
    report.prime = plan.prime;
    report.n_eff = effective_dimension(a, fp.flats());

    Character trivial = trivial_character(plan.prime, a.size());
    report.swept = sweep_characters(plan, a.size(), [&](const Character& rho) {
        std::vector<long> betti = twisted_betti(model, rho);
        for (int q = 0; q < report.n_eff; ++q)
            for (int q2 = q + 1; q2 <= report.n_eff; ++q2)
                if (betti[static_cast<std::size_t>(q)] > 0 &&
                    betti[static_cast<std::size_t>(q2)] == 0)
                    report.violations.push_back({rho, q, q2, betti});
        if (betti[0] > 0 && !(rho == trivial)) report.v0_is_trivial_only = false;
        if (rho == trivial && betti[0] == 0) report.v0_is_trivial_only = false;
        ++report.betti_histogram[betti];
    });
    return report;
}

ResonanceSummary resonance_locus_summary(const Arrangement& a, const SweepPlan& plan)
{
    FlatPoset flats = build_flat_poset(a);
    ResonanceSummary summary;
    summary.gammas = all_gamma_classes(a, flats);

    std::map<std::vector<std::size_t>, long> counts;
    summary.total = sweep_characters(plan, a.size(), [&](const Character& rho) {
        NonresonanceCertificate cert = is_nonresonant(rho, summary.gammas);
        if (cert.nonresonant()) ++summary.nonresonant_count;
        ++counts[cert.resonant];
    });
    for (auto& [pattern, count] : counts) summary.patterns.push_back({pattern, count});
    return summary;
}

}  // namespace arrcohom
