#include "arrcohom/wonderful.hpp"

#include <doctest.h>

#include <algorithm>

using namespace arrcohom;

namespace {

Hyperplane plane(std::initializer_list<long> normal, long offset_num)
{
    Hyperplane h;
    h.normal = RationalVector(static_cast<Index>(normal.size()));
    Index i = 0;
    for (long v : normal) h.normal(i++) = v;
    h.offset = offset_num;
    return h;
}

Arrangement generic_three_lines()
{
    return Arrangement(2, {plane({1, 0}, 0), plane({0, 1}, 0), plane({1, 1}, 1)});
}

Arrangement concurrent_three_lines()
{
    return Arrangement(2, {plane({1, 0}, 0), plane({0, 1}, 0), plane({1, -1}, 0)});
}

Arrangement boolean_three()
{
    return Arrangement(3, {plane({1, 0, 0}, 0), plane({0, 1, 0}, 0), plane({0, 0, 1}, 0)});
}

Arrangement deconed_braid()
{
    return Arrangement(2, {plane({1, 0}, 0), plane({0, 1}, 0), plane({1, 0}, 1),
                           plane({0, 1}, 1), plane({1, -1}, 0)});
}

Index flat_of(const Arrangement& a, const FlatPoset& p, std::vector<Index> hyperplanes)
{
    auto f = p.find_by_hyperplanes(a, hyperplanes);
    REQUIRE(f.has_value());
    return *f;
}

// Reference complex: test every subset of the building set independently.
std::vector<std::vector<Index>> brute_force_nested_sets(const Arrangement& a,
                                                        const FlatPoset& p,
                                                        const BuildingSet& g)
{
    std::vector<std::vector<Index>> result;
    std::size_t m = g.members.size();
    REQUIRE(m <= 12);
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::vector<Index> subset;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) subset.push_back(g.members[i]);
        if (is_nested_set(a, p, g, subset)) result.push_back(subset);
    }
    return result;
}

std::vector<std::vector<Index>> sorted_faces(const NestedSetComplex& complex)
{
    std::vector<std::vector<Index>> faces = complex.faces;
    std::sort(faces.begin(), faces.end());
    return faces;
}

}  // namespace

TEST_CASE("irreducibility of small flats")
{
    Arrangement generic = generic_three_lines();
    FlatPoset pg = build_flat_poset(generic);
    // single hyperplane flats are always irreducible
    for (Index f : pg.flats_of_rank(1)) CHECK(is_irreducible(generic, pg.flat(f)));
    // double points of two generic lines split as 1 + 1
    for (Index f : pg.flats_of_rank(2)) CHECK_FALSE(is_irreducible(generic, pg.flat(f)));

    Arrangement concurrent = concurrent_three_lines();
    FlatPoset pc = build_flat_poset(concurrent);
    Index center = pc.flats_of_rank(2)[0];
    CHECK(is_irreducible(concurrent, pc.flat(center)));

    CHECK_THROWS_AS(is_irreducible(generic, pg.flat(pg.bottom())), std::invalid_argument);
}

TEST_CASE("decomposition into factors")
{
    Arrangement a = generic_three_lines();
    FlatPoset p = build_flat_poset(a);

    Index p12 = flat_of(a, p, {0, 1});
    std::vector<Index> factors = decompose_flat(a, p, p12);
    std::vector<Index> expected{flat_of(a, p, {0}), flat_of(a, p, {1})};
    std::sort(expected.begin(), expected.end());
    CHECK(factors == expected);

    Arrangement c = concurrent_three_lines();
    FlatPoset pc = build_flat_poset(c);
    Index center = pc.flats_of_rank(2)[0];
    CHECK(decompose_flat(c, pc, center) == std::vector<Index>{center});
}

TEST_CASE("factor ranks add up across the corpus")
{
    for (const Arrangement& a : {generic_three_lines(), concurrent_three_lines(),
                                 boolean_three(), deconed_braid()}) {
        FlatPoset p = build_flat_poset(a);
        BuildingSet minimal = minimal_building_set(a, p);
        for (Index x = 0; x < p.size(); ++x) {
            std::vector<Index> factors = decompose_flat(a, p, x);
            int total = 0;
            for (Index f : factors) {
                total += p.rank(f);
                CHECK(minimal.contains(f));
            }
            CHECK(total == p.rank(x));
        }
    }
}

TEST_CASE("minimal building sets")
{
    SUBCASE("generic three lines: only the hyperplane flats")
    {
        Arrangement a = generic_three_lines();
        FlatPoset p = build_flat_poset(a);
        BuildingSet g = minimal_building_set(a, p);
        CHECK(g.members.size() == 3);
        for (Index f : g.members) CHECK(p.rank(f) == 1);
    }
    SUBCASE("concurrent three lines: hyperplanes plus the center")
    {
        Arrangement a = concurrent_three_lines();
        FlatPoset p = build_flat_poset(a);
        BuildingSet g = minimal_building_set(a, p);
        CHECK(g.members.size() == 4);
        CHECK(g.contains(p.flats_of_rank(2)[0]));
    }
    SUBCASE("boolean: only the coordinate hyperplanes")
    {
        Arrangement a = boolean_three();
        FlatPoset p = build_flat_poset(a);
        BuildingSet g = minimal_building_set(a, p);
        CHECK(g.members.size() == 3);
        for (Index f : g.members) CHECK(p.rank(f) == 1);
    }
}

TEST_CASE("nested set complex of concurrent three lines")
{
    Arrangement a = concurrent_three_lines();
    FlatPoset p = build_flat_poset(a);
    BuildingSet g = minimal_building_set(a, p);
    NestedSetComplex complex = nested_set_complex(a, p, g);

    REQUIRE(complex.f_vector.size() == 3);
    CHECK(complex.f_vector[0] == 1);
    CHECK(complex.f_vector[1] == 4);
    CHECK(complex.f_vector[2] == 3);

    Index center = p.flats_of_rank(2)[0];
    Index h1 = flat_of(a, p, {0}), h2 = flat_of(a, p, {1});
    CHECK(is_nested_set(a, p, g, {h1, center}));
    CHECK_FALSE(is_nested_set(a, p, g, {h1, h2}));
}

TEST_CASE("nested set complex of generic three lines")
{
    Arrangement a = generic_three_lines();
    FlatPoset p = build_flat_poset(a);
    BuildingSet g = minimal_building_set(a, p);
    NestedSetComplex complex = nested_set_complex(a, p, g);

    // all pairs of lines are nested, the triple has no join in C^2
    REQUIRE(complex.f_vector.size() == 3);
    CHECK(complex.f_vector[1] == 3);
    CHECK(complex.f_vector[2] == 3);

    Index h1 = flat_of(a, p, {0}), h2 = flat_of(a, p, {1}), h3 = flat_of(a, p, {2});
    CHECK(is_nested_set(a, p, g, {h1, h2}));
    CHECK_FALSE(is_nested_set(a, p, g, {h1, h2, h3}));
}

TEST_CASE("single hyperplane gives a point complex")
{
    Arrangement a(2, {plane({1, 0}, 0)});
    FlatPoset p = build_flat_poset(a);
    NestedSetComplex complex = nested_set_complex(a, p, minimal_building_set(a, p));
    CHECK(complex.faces.size() == 2);  // empty face and one vertex
    REQUIRE(complex.f_vector.size() == 2);
    CHECK(complex.f_vector[1] == 1);
}

TEST_CASE("incremental complex equals brute force enumeration")
{
    for (const Arrangement& a : {generic_three_lines(), concurrent_three_lines(),
                                 boolean_three(), deconed_braid(),
                                 cone(deconed_braid())}) {
        FlatPoset p = build_flat_poset(a);
        for (bool minimal : {true, false}) {
            BuildingSet g = minimal ? minimal_building_set(a, p) : maximal_building_set(p);
            if (g.members.size() > 12) continue;
            NestedSetComplex complex = nested_set_complex(a, p, g);
            std::vector<std::vector<Index>> brute = brute_force_nested_sets(a, p, g);
            std::sort(brute.begin(), brute.end());
            CHECK(sorted_faces(complex) == brute);
        }
    }
}

TEST_CASE("maximal building set yields exactly the chains")
{
    for (const Arrangement& a : {generic_three_lines(), concurrent_three_lines(),
                                 deconed_braid()}) {
        FlatPoset p = build_flat_poset(a);
        BuildingSet g = maximal_building_set(p);
        NestedSetComplex complex = nested_set_complex(a, p, g);
        for (const auto& face : complex.faces) {
            for (std::size_t i = 0; i < face.size(); ++i)
                for (std::size_t j = i + 1; j < face.size(); ++j)
                    CHECK((p.leq(face[i], face[j]) || p.leq(face[j], face[i])));
        }
        // and conversely every chain is a face
        std::vector<std::vector<Index>> brute = brute_force_nested_sets(a, p, g);
        for (const auto& s : brute) {
            bool chain = true;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    chain = chain && (p.leq(s[i], s[j]) || p.leq(s[j], s[i]));
            CHECK(chain);
        }
    }
}

TEST_CASE("minimal nested sets stay within the ambient rank when essential")
{
    for (const Arrangement& a :
         {generic_three_lines(), concurrent_three_lines(), boolean_three(),
          deconed_braid(), cone(deconed_braid())}) {
        FlatPoset p = build_flat_poset(a);
        if (corank(p) != 0) continue;
        NestedSetComplex complex = nested_set_complex(a, p, minimal_building_set(a, p));
        for (const auto& face : complex.faces)
            CHECK(static_cast<int>(face.size()) <= p.max_rank());
    }
}

TEST_CASE("local torus data at the center of concurrent lines")
{
    Arrangement a = concurrent_three_lines();
    FlatPoset p = build_flat_poset(a);
    Index center = p.flats_of_rank(2)[0];
    Index h1 = flat_of(a, p, {0});

    LocalTorusData data = local_torus_data(a, p, center, {h1, center});
    CHECK(data.rank == 2);
    REQUIRE(data.generator_classes.size() == 2);
    IntegerVector e1(3), all(3);
    e1 << 1, 0, 0;
    all << 1, 1, 1;
    CHECK(data.generator_classes[0] == e1);
    CHECK(data.generator_classes[1] == all);

    // pairs of lines are not nested at the center
    Index h2 = flat_of(a, p, {1});
    CHECK_THROWS_AS(local_torus_data(a, p, center, {h1, h2}), std::invalid_argument);
}

TEST_CASE("local torus data at a double point of generic lines")
{
    Arrangement a = generic_three_lines();
    FlatPoset p = build_flat_poset(a);
    Index p12 = flat_of(a, p, {0, 1});
    Index h1 = flat_of(a, p, {0}), h2 = flat_of(a, p, {1}), h3 = flat_of(a, p, {2});

    LocalTorusData data = local_torus_data(a, p, p12, {h1, h2});
    CHECK(data.rank == 2);
    IntegerVector e1(3), e2(3);
    e1 << 1, 0, 0;
    e2 << 0, 1, 0;
    CHECK(data.generator_classes[0] == e1);
    CHECK(data.generator_classes[1] == e2);

    LocalTorusData single = local_torus_data(a, p, p12, {h1});
    CHECK(single.rank == 1);
    CHECK(single.generator_classes[0] == e1);

    // H3 misses the double point, so it is not in the local model
    CHECK_THROWS_AS(local_torus_data(a, p, p12, {h3}), std::invalid_argument);
}

TEST_CASE("gamma classes")
{
    SUBCASE("generic three lines: basis vectors only")
    {
        Arrangement a = generic_three_lines();
        FlatPoset p = build_flat_poset(a);
        std::vector<IntegerVector> classes = all_gamma_classes(a, p);
        REQUIRE(classes.size() == 3);
        Integer total = 0;
        for (const auto& v : classes) {
            CHECK(v.sum() == 1);
            total += v.sum();
        }
        CHECK(total == 3);
    }
    SUBCASE("concurrent three lines: basis vectors and the center class")
    {
        Arrangement a = concurrent_three_lines();
        FlatPoset p = build_flat_poset(a);
        std::vector<IntegerVector> classes = all_gamma_classes(a, p);
        REQUIRE(classes.size() == 4);
        IntegerVector all(3);
        all << 1, 1, 1;
        CHECK(std::count(classes.begin(), classes.end(), all) == 1);
    }
    SUBCASE("every basis vector appears for every arrangement")
    {
        for (const Arrangement& a : {generic_three_lines(), concurrent_three_lines(),
                                     boolean_three(), deconed_braid()}) {
            FlatPoset p = build_flat_poset(a);
            std::vector<IntegerVector> classes = all_gamma_classes(a, p);
            for (Index h = 0; h < a.size(); ++h) {
                IntegerVector e = IntegerVector::Zero(a.size());
                e(h) = 1;
                CHECK(std::count(classes.begin(), classes.end(), e) == 1);
            }
        }
    }
}
