#include "arrcohom/toric.hpp"

#include "arrcohom/exactlin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arrcohom {

namespace {

// Representative of q mod 1 in [0, 1).
Rational frac_mod1(const Rational& q)
{
    Integer floor;
    mpz_fdiv_q(floor.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q - Rational(floor);
}

Integer content(const IntegerVector& v)
{
    Integer g(0);
    for (Index i = 0; i < v.size(); ++i)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v(i).get_mpz_t());
    return g;
}

RationalMatrix to_rational(const IntegerMatrix& m)
{
    RationalMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

bool all_zero(const IntegerMatrix& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

Rational row_dot(const IntegerMatrix& rows, Index r, const RationalVector& z)
{
    Rational acc(0);
    for (Index j = 0; j < z.size(); ++j) acc += Rational(rows(r, j)) * z(j);
    return acc;
}

std::string layer_key(const IntegerMatrix& saturation, const RationalVector& offsets)
{
    std::string key;
    for (Index i = 0; i < saturation.rows(); ++i)
        for (Index j = 0; j < saturation.cols(); ++j)
            key += saturation(i, j).get_str() + ",";
    key += "|";
    for (Index i = 0; i < offsets.size(); ++i) key += offsets(i).get_str() + ",";
    return key;
}

bool offsets_less(const RationalVector& a, const RationalVector& b)
{
    for (Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return a.size() < b.size();
}

}  // namespace

ToricHypersurface::ToricHypersurface(IntegerVector exponents, Rational offset)
    : exponents_(std::move(exponents)), offset_(std::move(offset))
{
    if (exponents_.size() == 0)
        throw std::invalid_argument("toric hypersurface needs a nonempty exponent vector");
    if (content(exponents_) != 1)
        throw std::invalid_argument("exponent vector must be primitive");
    offset_.canonicalize();  // callers may pass unreduced numerator/denominator pairs
    for (Index i = 0; i < exponents_.size(); ++i) {
        if (exponents_(i) == 0) continue;
        if (exponents_(i) < 0) {
            exponents_ = -exponents_;
            offset_ = -offset_;
        }
        break;
    }
    offset_ = frac_mod1(offset_);
}

ToricArrangement::ToricArrangement(int ambient_dim, std::vector<ToricHypersurface> hypersurfaces)
    : n_(ambient_dim), hypersurfaces_(std::move(hypersurfaces))
{
    if (n_ < 1) throw std::invalid_argument("torus dimension must be positive");
    for (std::size_t i = 0; i < hypersurfaces_.size(); ++i)
        if (hypersurfaces_[i].exponents().size() != n_)
            throw std::invalid_argument("hypersurface " + std::to_string(i + 1) +
                                        " has wrong exponent length");
    for (std::size_t i = 0; i < hypersurfaces_.size(); ++i)
        for (std::size_t j = i + 1; j < hypersurfaces_.size(); ++j)
            if (hypersurfaces_[i] == hypersurfaces_[j])
                throw std::invalid_argument("hypersurface " + std::to_string(i + 1) +
                                            " and hypersurface " + std::to_string(j + 1) +
                                            " define the same subset of the torus");
}

LayerPoset::LayerPoset(int ambient_dim, std::vector<Layer> layers)
    : n_(ambient_dim), layers_(std::move(layers))
{
    // rank first, then the hypersurfaces through the layer (which determine
    // its direction subtorus), then offsets to separate parallel translates
    std::sort(layers_.begin(), layers_.end(), [](const Layer& x, const Layer& y) {
        if (x.codim != y.codim) return x.codim < y.codim;
        if (x.hypersurfaces != y.hypersurfaces) return x.hypersurfaces < y.hypersurfaces;
        return offsets_less(x.offsets, y.offsets);
    });
    for (const Layer& l : layers_) max_rank_ = std::max(max_rank_, l.codim);

    // j lies inside i iff i's constraints vanish on j's directions and hold
    // at j's representative point
    const std::size_t m = layers_.size();
    leq_.assign(m * m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const Layer& li = layers_[i];
        for (std::size_t j = 0; j < m; ++j) {
            const Layer& lj = layers_[j];
            if (li.codim > lj.codim) continue;
            if (!all_zero(li.saturation * lj.directions)) continue;
            bool on = true;
            for (Index r = 0; r < li.saturation.rows(); ++r)
                if (frac_mod1(row_dot(li.saturation, r, lj.point) - li.offsets(r)) != 0) {
                    on = false;
                    break;
                }
            leq_[i * m + j] = on;
        }
    }

    // mu(0,0) = 1; for X > 0, sum over Z <= X of mu(0,Z) is 0.
    mobius_.assign(m, Integer(0));
    for (std::size_t x = 0; x < m; ++x) {
        if (layers_[x].codim == 0) {
            mobius_[x] = 1;
            continue;
        }
        Integer acc(0);
        for (std::size_t z = 0; z < x; ++z)
            if (leq_[z * m + x]) acc += mobius_[z];
        mobius_[x] = -acc;
    }
}

LayerPoset build_layer_poset(const ToricArrangement& t)
{
    const Index m = t.size();
    const Index n = t.ambient_dim();
    if (m > kMaxToricHypersurfaces)
        throw std::invalid_argument("layer enumeration supports at most " +
                            std::to_string(kMaxToricHypersurfaces) + " hypersurfaces");
    if (n > kMaxTorusDim)
        throw std::invalid_argument("layer enumeration supports torus dimension at most " +
                                    std::to_string(kMaxTorusDim));

    std::vector<Layer> layers;
    std::map<std::string, std::size_t> seen;

    Layer bottom;
    bottom.saturation = IntegerMatrix(0, n);
    bottom.offsets = RationalVector(0);
    bottom.point = RationalVector::Constant(n, Rational(0));
    bottom.directions = IntegerMatrix::Identity(n, n);
    bottom.codim = 0;
    seen[layer_key(bottom.saturation, bottom.offsets)] = 0;
    layers.push_back(std::move(bottom));

    auto contains_layer = [&](Index h, const IntegerMatrix& directions,
                              const RationalVector& point) {
        const IntegerVector& a = t.hypersurface(h).exponents();
        IntegerMatrix trace = a.transpose() * directions;
        if (!all_zero(trace)) return false;
        Rational value(0);
        for (Index j = 0; j < n; ++j) value += Rational(a(j)) * point(j);
        return frac_mod1(value - t.hypersurface(h).offset()) == 0;
    };

    long generated = 1;
    for (long mask = 1; mask < (1L << m); ++mask) {
        std::vector<Index> subset;
        for (Index h = 0; h < m; ++h)
            if (mask & (1L << h)) subset.push_back(h);

        IntegerMatrix a(static_cast<Index>(subset.size()), n);
        RationalVector b(static_cast<Index>(subset.size()));
        for (std::size_t r = 0; r < subset.size(); ++r) {
            a.row(static_cast<Index>(r)) = t.hypersurface(subset[r]).exponents().transpose();
            b(static_cast<Index>(r)) = t.hypersurface(subset[r]).offset();
        }

        // In coordinates z = V w the system a z = b mod Z^m reads
        // D w = U b mod Z^m, so rows past the rank decide solvability and
        // each diagonal entry d contributes d parallel solution slices.
        SmithNormalForm snf = smith_normal_form(a);
        const Index rank = static_cast<Index>(snf.diagonal.size());
        RationalVector ub = to_rational(snf.left) * b;
        bool compatible = true;
        for (Index j = rank; j < ub.size(); ++j)
            if (frac_mod1(ub(j)) != 0) {
                compatible = false;
                break;
            }
        if (!compatible) continue;

        Integer count(1);
        for (const Integer& d : snf.diagonal) count *= d;
        if (count + generated > kMaxLayerComponents)
            throw std::runtime_error("layer enumeration exceeded the supported size");
        generated += static_cast<long>(count.get_si());

        IntegerMatrix saturation = hermite_normal_form(saturate_row_lattice(a));
        IntegerMatrix directions = integer_kernel(saturation);
        RationalMatrix v = to_rational(snf.right);

        std::vector<Integer> digits(static_cast<std::size_t>(rank), Integer(0));
        while (true) {
            RationalVector w = RationalVector::Constant(n, Rational(0));
            for (Index j = 0; j < rank; ++j)
                w(j) = (ub(j) + Rational(digits[static_cast<std::size_t>(j)])) /
                       Rational(snf.diagonal[static_cast<std::size_t>(j)]);
            RationalVector z0 = v * w;
            for (Index j = 0; j < n; ++j) z0(j) = frac_mod1(z0(j));

            RationalVector offsets(saturation.rows());
            for (Index r = 0; r < saturation.rows(); ++r)
                offsets(r) = frac_mod1(row_dot(saturation, r, z0));

            std::string key = layer_key(saturation, offsets);
            if (!seen.count(key)) {
                seen[key] = layers.size();
                Layer layer;
                layer.saturation = saturation;
                layer.offsets = std::move(offsets);
                layer.point = std::move(z0);
                layer.directions = directions;
                layer.codim = static_cast<int>(rank);
                for (Index h = 0; h < m; ++h)
                    if (contains_layer(h, layer.directions, layer.point))
                        layer.hypersurfaces.push_back(h);
                layers.push_back(std::move(layer));
            }

            Index carry = 0;
            while (carry < rank) {
                digits[static_cast<std::size_t>(carry)] += 1;
                if (digits[static_cast<std::size_t>(carry)] <
                    snf.diagonal[static_cast<std::size_t>(carry)])
                    break;
                digits[static_cast<std::size_t>(carry)] = 0;
                ++carry;
            }
            if (carry == rank) break;
        }
    }

    return LayerPoset(static_cast<int>(n), std::move(layers));
}

ToricArrangement restrict_to_layer(const ToricArrangement& t, const LayerPoset& p, Index layer)
{
    if (layer < 0 || layer >= p.size()) throw std::invalid_argument("layer index out of range");
    const Layer& l = p.layer(layer);
    const Index n = t.ambient_dim();
    const Index dim = n - l.codim;
    if (dim == 0) throw std::invalid_argument("cannot restrict to a zero-dimensional layer");

    std::vector<bool> containing(static_cast<std::size_t>(t.size()), false);
    for (Index h : l.hypersurfaces) containing[static_cast<std::size_t>(h)] = true;

    std::vector<ToricHypersurface> traces;
    for (Index h = 0; h < t.size(); ++h) {
        if (containing[static_cast<std::size_t>(h)]) continue;
        const IntegerVector& a = t.hypersurface(h).exponents();
        IntegerVector pulled = l.directions.transpose() * a;
        Integer g = content(pulled);
        // constant trace on the layer: not containing, so the hypersurface
        // misses the layer entirely
        if (g == 0) continue;

        Rational shift(0);
        for (Index j = 0; j < n; ++j) shift += Rational(a(j)) * l.point(j);
        Rational base = frac_mod1(t.hypersurface(h).offset() - shift);

        if (!g.fits_slong_p())
            throw std::runtime_error("trace splitting exceeded the supported size");
        IntegerVector primitive(dim);
        for (Index j = 0; j < dim; ++j) primitive(j) = pulled(j) / g;
        for (long k = 0; k < g.get_si(); ++k) {
            ToricHypersurface trace(primitive, (base + Rational(k)) / Rational(g));
            if (std::find(traces.begin(), traces.end(), trace) == traces.end())
                traces.push_back(std::move(trace));
        }
    }
    return ToricArrangement(static_cast<int>(dim), std::move(traces));
}

IntegerPoly toric_poincare(const LayerPoset& p)
{
    IntegerPoly one_plus_t({Integer(1), Integer(1)});
    IntegerPoly out;
    for (Index i = 0; i < p.size(); ++i) {
        IntegerPoly term =
            IntegerPoly::monomial(abs(p.mobius(i)), static_cast<std::size_t>(p.rank(i)));
        for (int d = 0; d < p.ambient_dim() - p.rank(i); ++d) term = term * one_plus_t;
        out += term;
    }
    return out;
}

ToricDualityReport toric_duality_check(const ToricArrangement& t)
{
    LayerPoset p = build_layer_poset(t);
    ToricDualityReport report;
    report.ambient_dim = t.ambient_dim();
    report.corank = t.ambient_dim() - p.max_rank();
    report.poincare = toric_poincare(p);
    report.euler = report.poincare(Integer(-1));
    report.constraints = abelian_duality_constraints(report.poincare, t.ambient_dim());
    return report;
}

}  // namespace arrcohom
