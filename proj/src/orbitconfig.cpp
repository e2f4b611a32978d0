#include "arrcohom/orbitconfig.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace arrcohom {

namespace {

Integer power(long base, long exp)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

Integer binomial(long a, long b)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

// Partitions of {0..n-1} as restricted growth strings, in lexicographic
// order; s[i] is the block of point i and blocks are numbered by first
// occurrence.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> s(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> grow = [&](int i, int used) {
        if (i == n) {
            visit(s);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            s[static_cast<std::size_t>(i)] = b;
            grow(i + 1, std::max(used, b + 1));
        }
    };
    grow(0, 0);
}

std::vector<std::vector<int>> blocks_of(const std::vector<int>& rgs)
{
    int count = 0;
    for (int b : rgs) count = std::max(count, b + 1);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < rgs.size(); ++i)
        blocks[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i));
    return blocks;
}

}  // namespace

void validate_spec(const OrbitConfigSpec& spec)
{
    if (spec.genus < 0) throw std::invalid_argument("genus must be nonnegative");
    if (spec.punctures < 0) throw std::invalid_argument("puncture count must be nonnegative");
    if (spec.points < 1) throw std::invalid_argument("need at least one point");
    if (spec.group_order < 1) throw std::invalid_argument("group order must be positive");
    if (spec.punctures > 0 && spec.punctures % spec.group_order != 0)
        throw std::invalid_argument(
            "a free action needs the group order to divide the puncture count");
}

std::vector<OrbitStratum> enumerate_strata(const OrbitConfigSpec& spec)
{
    validate_spec(spec);
    if (spec.points > kMaxOrbitPoints)
        throw std::invalid_argument("stratum enumeration supports at most " +
                                    std::to_string(kMaxOrbitPoints) + " points");
    if (spec.group_order > kMaxGroupOrder)
        throw std::invalid_argument("stratum enumeration supports group order at most " +
                                    std::to_string(kMaxGroupOrder));
    if (spec.punctures > kMaxPunctures)
        throw std::invalid_argument("stratum enumeration supports at most " +
                                    std::to_string(kMaxPunctures) + " punctures");

    const int n = spec.points;
    const int m = spec.group_order;
    const int k = spec.punctures;
    std::vector<OrbitStratum> out;

    for_each_partition(n, [&](const std::vector<int>& rgs) {
        std::vector<std::vector<int>> blocks = blocks_of(rgs);
        std::vector<int> singles;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (blocks[b].size() == 1) singles.push_back(static_cast<int>(b));

        for (long mask = 0; mask < (1L << singles.size()); ++mask) {
            std::vector<int> pinned;
            for (std::size_t j = 0; j < singles.size(); ++j)
                if (mask & (1L << j)) pinned.push_back(singles[j]);
            if (static_cast<int>(pinned.size()) > k) continue;

            // ordered injections of the pinned blocks into the punctures
            std::vector<int> assignment(pinned.size(), -1);
            std::vector<bool> taken(static_cast<std::size_t>(k), false);
            std::function<void(std::size_t)> assign = [&](std::size_t slot) {
                if (slot == pinned.size()) {
                    // labelings of the surface blocks, least member = identity
                    std::vector<std::size_t> surface;
                    for (std::size_t b = 0; b < blocks.size(); ++b)
                        if (std::find(pinned.begin(), pinned.end(), static_cast<int>(b)) ==
                            pinned.end())
                            surface.push_back(b);
                    std::vector<long> counter(surface.size(), 0);
                    while (true) {
                        OrbitStratum stratum;
                        std::size_t surface_at = 0;
                        for (std::size_t b = 0; b < blocks.size(); ++b) {
                            StratumBlock block;
                            block.members = blocks[b];
                            auto pin = std::find(pinned.begin(), pinned.end(),
                                                 static_cast<int>(b));
                            if (pin != pinned.end()) {
                                block.puncture = true;
                                block.puncture_index = assignment[static_cast<std::size_t>(
                                    pin - pinned.begin())];
                            } else {
                                block.labels.assign(blocks[b].size(), 0);
                                long code = counter[surface_at++];
                                for (std::size_t pos = blocks[b].size(); pos-- > 1;) {
                                    block.labels[pos] = static_cast<int>(code % m);
                                    code /= m;
                                }
                            }
                            stratum.blocks.push_back(std::move(block));
                        }
                        out.push_back(std::move(stratum));

                        std::size_t carry = surface.size();
                        while (carry > 0) {
                            std::size_t at = carry - 1;
                            long limit = 1;
                            for (std::size_t e = 1; e < blocks[surface[at]].size(); ++e)
                                limit *= m;
                            if (++counter[at] < limit) break;
                            counter[at] = 0;
                            --carry;
                        }
                        if (carry == 0) break;
                    }
                    return;
                }
                for (int p = 0; p < k; ++p) {
                    if (taken[static_cast<std::size_t>(p)]) continue;
                    taken[static_cast<std::size_t>(p)] = true;
                    assignment[slot] = p;
                    assign(slot + 1);
                    taken[static_cast<std::size_t>(p)] = false;
                }
            };
            assign(0);
        }
    });
    return out;
}

Integer count_strata(const OrbitConfigSpec& spec)
{
    validate_spec(spec);
    if (spec.points > kMaxOrbitPoints)
        throw std::invalid_argument("stratum enumeration supports at most " +
                                    std::to_string(kMaxOrbitPoints) + " points");

    const int n = spec.points;
    const int k = spec.punctures;
    Integer total(0);
    for_each_partition(n, [&](const std::vector<int>& rgs) {
        std::vector<std::vector<int>> blocks = blocks_of(rgs);
        long singles = 0;
        for (const auto& b : blocks)
            if (b.size() == 1) ++singles;

        // puncture choices: pick j singleton blocks, assign distinct punctures
        Integer pin_ways(0);
        for (long j = 0; j <= std::min<long>(singles, k); ++j) {
            Integer falling(1);
            for (long i = 0; i < j; ++i) falling *= Integer(k - i);
            pin_ways += binomial(singles, j) * falling;
        }
        total += pin_ways * power(spec.group_order,
                                  n - static_cast<long>(blocks.size()));
    });
    return total;
}

int stratum_complement_type(const OrbitStratum& s)
{
    int surface = 0;
    for (const StratumBlock& b : s.blocks)
        if (!b.puncture) ++surface;
    return surface;
}

Integer euler_orbit_config(const OrbitConfigSpec& spec)
{
    validate_spec(spec);
    Integer out(1);
    for (int i = 0; i < spec.points; ++i)
        out *= Integer(2 - 2 * spec.genus - spec.punctures - i * spec.group_order);
    return out;
}

bool euler_unordered_series_check(int genus, int n_max)
{
    if (genus < 0 || genus > 5)
        throw std::invalid_argument("series check supports genus at most 5");
    if (n_max < 1 || n_max > 10)
        throw std::invalid_argument("series check supports n at most 10");

    // coefficients of (1+t)^{2-2g} as a power series
    std::vector<Integer> series(static_cast<std::size_t>(n_max) + 1, Integer(0));
    if (genus == 0) {
        series[0] = 1;
        if (n_max >= 1) series[1] = 2;
        if (n_max >= 2) series[2] = 1;
    } else {
        // reciprocal of (1+t)^d: sum_{j=0}^{min(i,d)} C(d,j) a_{i-j} = [i=0]
        const long d = 2L * genus - 2;
        series[0] = 1;
        for (long i = 1; i <= n_max; ++i) {
            Integer acc(0);
            for (long j = 1; j <= std::min(i, d); ++j)
                acc += binomial(d, j) * series[static_cast<std::size_t>(i - j)];
            series[static_cast<std::size_t>(i)] = -acc;
        }
    }

    Integer factorial(1);
    Integer falling(1);
    for (long nn = 1; nn <= n_max; ++nn) {
        factorial *= nn;
        falling *= Integer(2 - 2 * genus - (nn - 1));
        if (factorial * series[static_cast<std::size_t>(nn)] != falling) return false;
    }
    return true;
}

std::string to_string(Trilean t)
{
    switch (t) {
        case Trilean::yes: return "yes";
        case Trilean::no: return "no";
        default: return "unknown";
    }
}

DualityClassification classify_duality(const OrbitConfigSpec& spec)
{
    validate_spec(spec);
    DualityClassification c;
    if (spec.punctures > 0) {
        c.is_duality = Trilean::yes;
        c.is_abelian_duality = Trilean::yes;
        c.dimension = spec.points;
        c.reason = "punctured surface: linear-type arrangement complement";
    } else if (spec.genus == 0) {
        c.is_duality = Trilean::no;
        c.is_abelian_duality = Trilean::no;
        c.dimension = std::nullopt;
        c.reason = "sphere: splits off a rotation group factor that is not a duality space";
    } else if (spec.genus == 1) {
        c.is_duality = Trilean::yes;
        c.is_abelian_duality = Trilean::yes;
        c.dimension = spec.points + 1;
        c.reason = "torus: elliptic arrangement complement";
    } else if (spec.group_order == 1) {
        c.is_duality = Trilean::yes;
        c.is_abelian_duality = Trilean::no;
        c.dimension = spec.points + 1;
        c.reason = "closed higher genus: signed Euler characteristic obstructs abelian duality";
    } else {
        c.is_duality = Trilean::yes;
        c.is_abelian_duality = Trilean::unknown;
        c.dimension = spec.points + 1;
        c.reason = "closed higher genus, nontrivial group: abelian duality undetermined";
    }
    return c;
}

SignedEulerReport signed_euler_consistency(const OrbitConfigSpec& spec)
{
    SignedEulerReport report;
    report.euler = euler_orbit_config(spec);
    DualityClassification c = classify_duality(spec);

    if (c.is_abelian_duality == Trilean::yes && c.dimension) {
        report.abelian_checked = true;
        Integer signed_euler = (*c.dimension % 2 == 0) ? report.euler : Integer(-report.euler);
        report.abelian_sign_ok = signed_euler >= 0;
    }
    if (spec.genus >= 2 && spec.punctures == 0 && spec.group_order == 1) {
        report.witness_checked = true;
        Integer signed_euler =
            ((spec.points + 1) % 2 == 0) ? report.euler : Integer(-report.euler);
        report.witness_ok = signed_euler < 0;
    }
    return report;
}

}  // namespace arrcohom
