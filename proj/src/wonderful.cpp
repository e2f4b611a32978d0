#include "arrcohom/wonderful.hpp"

#include "arrcohom/exactlin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arrcohom {

namespace {

// Rank of the normals of a hyperplane subset. For hyperplanes through a
// common flat this is the matroid rank of the subset.
int subset_rank(const Arrangement& a, const std::vector<Index>& subset)
{
    if (subset.empty()) return 0;
    RationalMatrix m(static_cast<Index>(subset.size()), a.ambient_dim());
    for (std::size_t i = 0; i < subset.size(); ++i)
        m.row(static_cast<Index>(i)) = a.hyperplane(subset[i]).normal.transpose();
    return rational_rank(m);
}

// Finest rank-additive partition of a closed hyperplane set, as index sets.
void split_into_factors(const Arrangement& a, const std::vector<Index>& subset,
                        std::vector<std::vector<Index>>& out)
{
    std::size_t m = subset.size();
    if (m == 0) return;
    if (m > 1) {
        int full = subset_rank(a, subset);
        // element 0 stays in the second part, so each split is seen once
        for (unsigned long mask = 1; mask < (1ul << (m - 1)); ++mask) {
            std::vector<Index> part1, part2{subset[0]};
            for (std::size_t i = 1; i < m; ++i)
                ((mask >> (i - 1)) & 1 ? part1 : part2).push_back(subset[i]);
            if (subset_rank(a, part1) + subset_rank(a, part2) == full) {
                split_into_factors(a, part1, out);
                split_into_factors(a, part2, out);
                return;
            }
        }
    }
    out.push_back(subset);
}

IntegerVector indicator_vector(const Arrangement& a, const Flat& x)
{
    IntegerVector v = IntegerVector::Zero(a.size());
    for (Index h : x.hyperplanes) v(h) = 1;
    return v;
}

bool lex_less(const IntegerVector& u, const IntegerVector& v)
{
    for (Index i = 0; i < u.size(); ++i) {
        if (u(i) != v(i)) return u(i) < v(i);
    }
    return false;
}

// Join of a set of flats: the closure flat of the union of their hyperplane
// sets, if the intersection is nonempty.
std::optional<Index> join_flat(const Arrangement& a, const FlatPoset& p,
                               const std::vector<Index>& flats)
{
    std::vector<Index> combined;
    for (Index f : flats)
        combined.insert(combined.end(), p.flat(f).hyperplanes.begin(),
                        p.flat(f).hyperplanes.end());
    std::sort(combined.begin(), combined.end());
    combined.erase(std::unique(combined.begin(), combined.end()), combined.end());
    return p.find_by_hyperplanes(a, combined);
}

bool pairwise_incomparable(const FlatPoset& p, const std::vector<Index>& flats)
{
    for (std::size_t i = 0; i < flats.size(); ++i)
        for (std::size_t j = i + 1; j < flats.size(); ++j)
            if (p.leq(flats[i], flats[j]) || p.leq(flats[j], flats[i])) return false;
    return true;
}

// One antichain of size >= 2: join exists, join is not a member, and the
// join decomposes into exactly the antichain.
bool antichain_ok(const Arrangement& a, const FlatPoset& p, const BuildingSet& g,
                  const std::vector<Index>& antichain,
                  std::map<Index, std::vector<Index>>& factor_cache)
{
    std::optional<Index> join = join_flat(a, p, antichain);
    if (!join) return false;
    if (g.contains(*join)) return false;
    auto it = factor_cache.find(*join);
    if (it == factor_cache.end())
        it = factor_cache.emplace(*join, decompose_flat(a, p, *join)).first;
    std::vector<Index> sorted = antichain;
    std::sort(sorted.begin(), sorted.end());
    return it->second == sorted;
}

// Check only the antichains that contain the element just added; the rest
// were certified when the smaller face was admitted.
bool extends_nested(const Arrangement& a, const FlatPoset& p, const BuildingSet& g,
                    const std::vector<Index>& face, Index added,
                    std::map<Index, std::vector<Index>>& factor_cache)
{
    std::vector<Index> compatible;
    for (Index f : face)
        if (!p.leq(f, added) && !p.leq(added, f)) compatible.push_back(f);
    std::size_t m = compatible.size();
    for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
        std::vector<Index> antichain{added};
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) antichain.push_back(compatible[i]);
        if (!pairwise_incomparable(p, antichain)) continue;
        if (!antichain_ok(a, p, g, antichain, factor_cache)) return false;
    }
    return true;
}

}  // namespace

bool BuildingSet::contains(Index flat) const
{
    return std::binary_search(members.begin(), members.end(), flat);
}

bool is_irreducible(const Arrangement& a, const Flat& x)
{
    if (x.codim < 1) throw std::invalid_argument("flat must have positive rank");
    std::size_t m = x.hyperplanes.size();
    if (m == 1) return true;
    for (unsigned long mask = 1; mask < (1ul << (m - 1)); ++mask) {
        std::vector<Index> part1, part2{x.hyperplanes[0]};
        for (std::size_t i = 1; i < m; ++i)
            ((mask >> (i - 1)) & 1 ? part1 : part2).push_back(x.hyperplanes[i]);
        if (subset_rank(a, part1) + subset_rank(a, part2) == x.codim) return false;
    }
    return true;
}

std::vector<Index> decompose_flat(const Arrangement& a, const FlatPoset& p, Index x)
{
    std::vector<std::vector<Index>> parts;
    split_into_factors(a, p.flat(x).hyperplanes, parts);
    std::vector<Index> factors;
    for (const auto& part : parts) {
        std::optional<Index> f = p.find_by_hyperplanes(a, part);
        if (!f) throw std::logic_error("factor of a flat is not a flat");
        factors.push_back(*f);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

BuildingSet minimal_building_set(const Arrangement& a, const FlatPoset& p)
{
    BuildingSet g{BuildingFlavor::minimal, {}};
    for (Index i = 0; i < p.size(); ++i)
        if (p.rank(i) >= 1 && is_irreducible(a, p.flat(i))) g.members.push_back(i);
    return g;
}

BuildingSet maximal_building_set(const FlatPoset& p)
{
    BuildingSet g{BuildingFlavor::maximal, {}};
    for (Index i = 0; i < p.size(); ++i)
        if (p.rank(i) >= 1) g.members.push_back(i);
    return g;
}

bool is_nested_set(const Arrangement& a, const FlatPoset& p, const BuildingSet& g,
                   std::vector<Index> s)
{
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    for (Index f : s)
        if (!g.contains(f)) return false;

    std::map<Index, std::vector<Index>> factor_cache;
    std::size_t m = s.size();
    for (unsigned long mask = 3; mask < (1ul << m); ++mask) {
        std::vector<Index> subset;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) subset.push_back(s[i]);
        if (subset.size() < 2) continue;
        if (!pairwise_incomparable(p, subset)) continue;
        if (!antichain_ok(a, p, g, subset, factor_cache)) return false;
    }
    return true;
}

NestedSetComplex nested_set_complex(const Arrangement& a, const FlatPoset& p,
                                    const BuildingSet& g)
{
    NestedSetComplex complex{g, {{}}, {1}};
    std::map<Index, std::vector<Index>> factor_cache;

    std::vector<std::vector<Index>> level{{}};
    while (!level.empty()) {
        std::vector<std::vector<Index>> next;
        for (const auto& face : level) {
            for (Index candidate : g.members) {
                if (!face.empty() && candidate <= face.back()) continue;
                if (!extends_nested(a, p, g, face, candidate, factor_cache)) continue;
                std::vector<Index> grown = face;
                grown.push_back(candidate);
                next.push_back(std::move(grown));
            }
        }
        if (next.empty()) break;
        complex.f_vector.push_back(static_cast<long>(next.size()));
        complex.faces.insert(complex.faces.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return complex;
}

LocalTorusData local_torus_data(const Arrangement& a, const FlatPoset& p, Index x,
                                const std::vector<Index>& s, BuildingFlavor flavor)
{
    BuildingSet full = flavor == BuildingFlavor::minimal ? minimal_building_set(a, p)
                                                         : maximal_building_set(p);
    // the central model at x only sees flats below x
    BuildingSet local{flavor, {}};
    for (Index f : full.members)
        if (p.leq(f, x)) local.members.push_back(f);

    if (!is_nested_set(a, p, local, s))
        throw std::invalid_argument("set is not nested in the local model");

    LocalTorusData data;
    data.flat = x;
    data.nested_set = s;
    std::sort(data.nested_set.begin(), data.nested_set.end());
    data.rank = static_cast<int>(s.size());
    for (Index f : data.nested_set)
        data.generator_classes.push_back(indicator_vector(a, p.flat(f)));
    return data;
}

std::vector<IntegerVector> all_gamma_classes(const Arrangement& a, const FlatPoset& p,
                                             BuildingFlavor flavor)
{
    BuildingSet g = flavor == BuildingFlavor::minimal ? minimal_building_set(a, p)
                                                      : maximal_building_set(p);
    std::vector<IntegerVector> classes;
    for (Index f : g.members) classes.push_back(indicator_vector(a, p.flat(f)));
    std::sort(classes.begin(), classes.end(), lex_less);
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

}  // namespace arrcohom
