#include "arrcohom/toric.hpp"

#include "doctest.h"

#include <algorithm>
#include <vector>

using namespace arrcohom;

namespace {

ToricHypersurface hsurf(std::initializer_list<long> exponents, const std::string& offset)
{
    IntegerVector a(static_cast<Index>(exponents.size()));
    Index i = 0;
    for (long e : exponents) a(i++) = e;
    return ToricHypersurface(a, parse_rational(offset));
}

// {x = 1} in (C*)^1
ToricArrangement one_point()
{
    return ToricArrangement(1, {hsurf({1}, "0")});
}

// {x = 1}, {x = -1} in (C*)^1: the solutions of x^2 = 1 fed in as two
// primitive hypersurfaces
ToricArrangement two_points()
{
    return ToricArrangement(1, {hsurf({1}, "0"), hsurf({1}, "1/2")});
}

// {x = 1}, {y = 1} in (C*)^2
ToricArrangement coord_pair()
{
    return ToricArrangement(2, {hsurf({1, 0}, "0"), hsurf({0, 1}, "0")});
}

// {x = 1}, {y = 1}, {xy = 1} in (C*)^2: three subtori through (1, 1)
ToricArrangement toric_braid()
{
    return ToricArrangement(2, {hsurf({1, 0}, "0"), hsurf({0, 1}, "0"), hsurf({1, 1}, "0")});
}

// {xy = 1}, {x/y = 1} in (C*)^2: the curves meet in the two points
// (1, 1) and (-1, -1)
ToricArrangement crossing_pair()
{
    return ToricArrangement(2, {hsurf({1, 1}, "0"), hsurf({1, -1}, "0")});
}

Index layer_with(const LayerPoset& p, const std::vector<Index>& hypersurfaces)
{
    for (Index i = 0; i < p.size(); ++i)
        if (p.layer(i).hypersurfaces == hypersurfaces) return i;
    REQUIRE(false);
    return -1;
}

int layers_of_rank(const LayerPoset& p, int r)
{
    int count = 0;
    for (Index i = 0; i < p.size(); ++i)
        if (p.rank(i) == r) ++count;
    return count;
}

// All points of the full intersection whose angular coordinates have
// denominator dividing q, as explicit certificates for component counts.
std::vector<RationalVector> grid_solutions(const ToricArrangement& t, long q)
{
    const Index n = t.ambient_dim();
    std::vector<RationalVector> out;
    std::vector<long> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        RationalVector z(n);
        for (Index j = 0; j < n; ++j) {
            Rational r(digits[static_cast<std::size_t>(j)], q);
            r.canonicalize();
            z(j) = r;
        }
        bool on = true;
        for (Index h = 0; h < t.size() && on; ++h) {
            Rational value(0);
            for (Index j = 0; j < n; ++j)
                value += Rational(t.hypersurface(h).exponents()(j)) * z(j);
            value -= t.hypersurface(h).offset();
            on = value.get_den() == 1;
        }
        if (on) out.push_back(z);
        std::size_t carry = 0;
        while (carry < digits.size()) {
            if (++digits[carry] < q) break;
            digits[carry] = 0;
            ++carry;
        }
        if (carry == digits.size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("layers of points on the circle")
{
    LayerPoset single = build_layer_poset(one_point());
    CHECK(single.size() == 2);
    CHECK(single.rank(0) == 0);
    CHECK(single.rank(1) == 1);
    CHECK(single.mobius(0) == 1);
    CHECK(single.mobius(1) == -1);
    CHECK(single.leq(0, 1));
    CHECK_FALSE(single.leq(1, 0));

    LayerPoset pair = build_layer_poset(two_points());
    CHECK(pair.size() == 3);
    CHECK(layers_of_rank(pair, 1) == 2);
    CHECK(pair.layer(layer_with(pair, {0})).point(0) == 0);
    CHECK(pair.layer(layer_with(pair, {1})).point(0) == Rational(1, 2));

    ToricArrangement thirds(1, {hsurf({1}, "0"), hsurf({1}, "1/3"), hsurf({1}, "2/3")});
    CHECK(build_layer_poset(thirds).size() == 4);
    CHECK(toric_poincare(build_layer_poset(thirds)) == IntegerPoly({1, 4}));
}

TEST_CASE("hypersurface normalization identifies inverse presentations")
{
    // x^{-1} = e^{-2 pi i b} cuts the same set as x = e^{2 pi i b}
    CHECK(hsurf({-1}, "1/2") == hsurf({1}, "1/2"));
    CHECK(hsurf({-1, 2}, "1/3") == hsurf({1, -2}, "2/3"));
    CHECK(ToricHypersurface(hsurf({1}, "7/3").exponents(), parse_rational("-2/3")) ==
          hsurf({1}, "1/3"));
}

TEST_CASE("toric input validation")
{
    IntegerVector doubled(1);
    doubled(0) = 2;
    CHECK_THROWS_AS(ToricHypersurface(doubled, Rational(0)), std::invalid_argument);
    IntegerVector even(2);
    even(0) = 2;
    even(1) = 4;
    CHECK_THROWS_AS(ToricHypersurface(even, Rational(0)), std::invalid_argument);
    IntegerVector zero(2);
    zero(0) = 0;
    zero(1) = 0;
    CHECK_THROWS_AS(ToricHypersurface(zero, Rational(0)), std::invalid_argument);

    CHECK_THROWS_AS(ToricArrangement(0), std::invalid_argument);
    CHECK_THROWS_AS(ToricArrangement(2, {hsurf({1}, "0")}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        ToricArrangement(1, {hsurf({1}, "0"), hsurf({-1}, "0")}),
        "hypersurface 1 and hypersurface 2 define the same subset of the torus",
        std::invalid_argument);
}

TEST_CASE("layer enumeration bounds")
{
    std::vector<ToricHypersurface> many;
    for (long k = 0; k < 9; ++k) many.push_back(hsurf({1}, std::to_string(k) + "/9"));
    CHECK_THROWS_AS(build_layer_poset(ToricArrangement(1, many)), std::invalid_argument);

    ToricArrangement wide(5, {hsurf({1, 0, 0, 0, 0}, "0")});
    CHECK_THROWS_AS(build_layer_poset(wide), std::invalid_argument);
}

TEST_CASE("coordinate pair of subtori")
{
    LayerPoset p = build_layer_poset(coord_pair());
    CHECK(p.size() == 4);
    CHECK(layers_of_rank(p, 1) == 2);
    CHECK(layers_of_rank(p, 2) == 1);
    CHECK(p.mobius(layer_with(p, {0, 1})) == 1);
    CHECK(toric_poincare(p) == IntegerPoly({1, 4, 4}));

    // multiplicative over independent factors: (1 + 2t)^2
    IntegerPoly factor = toric_poincare(build_layer_poset(one_point()));
    CHECK(toric_poincare(p) == factor * factor);
}

TEST_CASE("three subtori through a single point")
{
    LayerPoset p = build_layer_poset(toric_braid());
    CHECK(p.size() == 5);
    CHECK(layers_of_rank(p, 1) == 3);
    CHECK(layers_of_rank(p, 2) == 1);

    Index center = layer_with(p, {0, 1, 2});
    CHECK(p.rank(center) == 2);
    CHECK(p.mobius(center) == 2);
    CHECK(p.layer(center).point(0) == 0);
    CHECK(p.layer(center).point(1) == 0);

    CHECK(toric_poincare(p) == IntegerPoly({1, 5, 6}));
    CHECK(toric_poincare(p)(Integer(-1)) == 2);

    CHECK(grid_solutions(toric_braid(), 4).size() == 1);
}

TEST_CASE("disconnected intersections split into certified components")
{
    LayerPoset p = build_layer_poset(crossing_pair());
    CHECK(p.size() == 5);
    CHECK(layers_of_rank(p, 1) == 2);
    CHECK(layers_of_rank(p, 2) == 2);

    // both components lie on both curves, and each contributes mobius 1
    std::vector<RationalVector> points;
    for (Index i = 0; i < p.size(); ++i) {
        if (p.rank(i) != 2) continue;
        CHECK(p.layer(i).hypersurfaces == std::vector<Index>{0, 1});
        CHECK(p.mobius(i) == 1);
        points.push_back(p.layer(i).point);
    }

    // explicit enumeration on the denominator-4 grid certifies the count
    std::vector<RationalVector> grid = grid_solutions(crossing_pair(), 4);
    REQUIRE(grid.size() == 2);
    for (const RationalVector& z : grid) {
        bool found = false;
        for (const RationalVector& w : points)
            if (w(0) == z(0) && w(1) == z(1)) found = true;
        CHECK(found);
    }

    CHECK(toric_poincare(p) == IntegerPoly({1, 4, 5}));
}

TEST_CASE("degree one coefficient counts torus rank plus hypersurface components")
{
    for (const ToricArrangement& t :
         {one_point(), two_points(), coord_pair(), toric_braid(), crossing_pair()}) {
        LayerPoset p = build_layer_poset(t);
        Integer expected = t.ambient_dim() + layers_of_rank(p, 1);
        CHECK(toric_poincare(p).coefficient(1) == expected);
        CHECK(toric_poincare(p).coefficient(0) == 1);
    }
}

TEST_CASE("restriction to a layer")
{
    ToricArrangement t = coord_pair();
    LayerPoset p = build_layer_poset(t);

    ToricArrangement bottom = restrict_to_layer(t, p, p.bottom());
    REQUIRE(bottom.size() == t.size());
    CHECK(bottom.ambient_dim() == 2);
    for (Index h = 0; h < t.size(); ++h) CHECK(bottom.hypersurface(h) == t.hypersurface(h));

    ToricArrangement on_y = restrict_to_layer(t, p, layer_with(p, {1}));
    CHECK(on_y.ambient_dim() == 1);
    REQUIRE(on_y.size() == 1);
    CHECK(build_layer_poset(on_y).size() == 2);

    ToricArrangement diag(2, {hsurf({1, 1}, "0"), hsurf({1, 0}, "0")});
    LayerPoset dp = build_layer_poset(diag);
    ToricArrangement on_diag = restrict_to_layer(diag, dp, layer_with(dp, {0}));
    CHECK(on_diag.ambient_dim() == 1);
    REQUIRE(on_diag.size() == 1);
    CHECK(build_layer_poset(on_diag).size() == 2);

    Index point = layer_with(dp, {0, 1});
    CHECK_THROWS_AS(restrict_to_layer(diag, dp, point), std::invalid_argument);
}

TEST_CASE("restriction merges coincident traces and splits non-primitive ones")
{
    // on {x = 1} the traces of y = 1 and xy = 1 coincide
    ToricArrangement braid = toric_braid();
    LayerPoset bp = build_layer_poset(braid);
    ToricArrangement merged = restrict_to_layer(braid, bp, layer_with(bp, {0}));
    CHECK(merged.size() == 1);
    CHECK(toric_poincare(build_layer_poset(merged)) == IntegerPoly({1, 2}));

    // on {xy = 1} the trace of x/y = 1 is x^2 = 1: two points
    ToricArrangement crossing = crossing_pair();
    LayerPoset cp = build_layer_poset(crossing);
    ToricArrangement split = restrict_to_layer(crossing, cp, layer_with(cp, {0}));
    REQUIRE(split.size() == 2);
    std::vector<Rational> offsets = {split.hypersurface(0).offset(),
                                     split.hypersurface(1).offset()};
    std::sort(offsets.begin(), offsets.end());
    CHECK(offsets[0] == 0);
    CHECK(offsets[1] == Rational(1, 2));
    CHECK(split.hypersurface(0).exponents() == split.hypersurface(1).exponents());
}

TEST_CASE("restriction composes across nested layers")
{
    ToricArrangement t(3, {hsurf({1, 0, 0}, "0"), hsurf({0, 1, 0}, "0"), hsurf({0, 0, 1}, "0")});
    LayerPoset p = build_layer_poset(t);

    ToricArrangement direct = restrict_to_layer(t, p, layer_with(p, {0, 1}));
    REQUIRE(direct.size() == 1);
    CHECK(direct.ambient_dim() == 1);

    ToricArrangement once = restrict_to_layer(t, p, layer_with(p, {0}));
    REQUIRE(once.size() == 2);
    LayerPoset q = build_layer_poset(once);
    ToricArrangement twice = restrict_to_layer(once, q, layer_with(q, {0}));
    REQUIRE(twice.size() == 1);
    CHECK(twice.ambient_dim() == 1);

    // same restriction up to the layer's own coordinates, so the invariants
    // must agree exactly
    CHECK(toric_poincare(build_layer_poset(twice)) == toric_poincare(build_layer_poset(direct)));
    CHECK(twice.hypersurface(0).exponents() == direct.hypersurface(0).exponents());
    CHECK(twice.hypersurface(0).offset() == direct.hypersurface(0).offset());
}

TEST_CASE("toric duality reports")
{
    ToricDualityReport single = toric_duality_check(one_point());
    CHECK(single.ambient_dim == 1);
    CHECK(single.corank == 0);
    CHECK(single.poincare == IntegerPoly({1, 2}));
    CHECK(single.euler == -1);
    CHECK(single.constraints.betti_positive);
    CHECK(single.constraints.b1_at_least_d);
    CHECK(single.constraints.signed_euler_ok);
    CHECK(single.constraints.all());

    ToricDualityReport empty = toric_duality_check(ToricArrangement(2));
    CHECK(empty.corank == 2);
    CHECK(empty.poincare == IntegerPoly({1, 2, 1}));
    CHECK(empty.euler == 0);
    CHECK(empty.constraints.all());

    ToricDualityReport braid = toric_duality_check(toric_braid());
    CHECK(braid.corank == 0);
    CHECK(braid.poincare == IntegerPoly({1, 5, 6}));
    CHECK(braid.euler == 2);
    CHECK(braid.constraints.all());

    ToricDualityReport crossing = toric_duality_check(crossing_pair());
    CHECK(crossing.euler == 2);
    CHECK(crossing.constraints.all());
}

TEST_CASE("signed euler characteristic is nonnegative on the toric corpus")
{
    for (const ToricArrangement& t :
         {one_point(), two_points(), coord_pair(), toric_braid(), crossing_pair()}) {
        ToricDualityReport report = toric_duality_check(t);
        Integer signed_euler =
            (t.ambient_dim() % 2 == 0) ? report.euler : Integer(-report.euler);
        CHECK(signed_euler >= 0);
        CHECK(report.constraints.signed_euler_ok);
    }
}
