#include "arrcohom/arrangement.hpp"

#include "arrcohom/exactlin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arrcohom {

namespace {

// Scales (normal | offset) so the first nonzero normal entry is 1; canonical
// representative of the affine subspace a hyperplane defines.
std::pair<RationalVector, Rational> normalized_form(const Hyperplane& h)
{
    Index lead = -1;
    for (Index i = 0; i < h.normal.size(); ++i)
        if (h.normal(i) != 0) {
            lead = i;
            break;
        }
    if (lead < 0) throw std::invalid_argument("hyperplane has zero normal vector");
    Rational inv = 1 / h.normal(lead);
    RationalVector scaled = h.normal * inv;
    return {scaled, h.offset * inv};
}

std::string matrix_key(const RationalMatrix& m)
{
    std::string key = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            key += ';';
            key += m(i, j).get_str();
        }
    return key;
}

// RREF of the system [normals | offsets] for the given hyperplane subset;
// nullopt if the intersection is empty (pivot in the offset column).
std::optional<RationalMatrix> reduced_system(const Arrangement& a, const std::vector<Index>& subset)
{
    const Index n = a.ambient_dim();
    RationalMatrix sys(static_cast<Index>(subset.size()), n + 1);
    for (std::size_t r = 0; r < subset.size(); ++r) {
        const Hyperplane& h = a.hyperplane(subset[r]);
        for (Index j = 0; j < n; ++j) sys(static_cast<Index>(r), j) = h.normal(j);
        sys(static_cast<Index>(r), n) = h.offset;
    }
    std::vector<Index> pivots = rref_in_place(sys);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    return sys.topRows(static_cast<Index>(pivots.size())).eval();
}

// Whether the affine functional (normal | offset) lies in the row space of
// the reduced system, i.e. vanishes on the flat.
bool vanishes_on(const RationalMatrix& canonical, const Hyperplane& h)
{
    const Index n = h.normal.size();
    RationalRowVector residual(n + 1);
    for (Index j = 0; j < n; ++j) residual(j) = h.normal(j);
    residual(n) = h.offset;
    for (Index r = 0; r < canonical.rows(); ++r) {
        // canonical rows have unit pivots; find the pivot column
        Index piv = -1;
        for (Index j = 0; j < canonical.cols(); ++j)
            if (canonical(r, j) != 0) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        Rational factor = residual(piv);
        if (factor != 0) residual -= factor * canonical.row(r);
    }
    return residual.isZero(0);
}

Flat make_flat(const Arrangement& a, const RationalMatrix& canonical)
{
    const Index n = a.ambient_dim();
    Flat f;
    f.canonical = canonical;
    f.codim = static_cast<int>(canonical.rows());
    for (Index h = 0; h < a.size(); ++h)
        if (vanishes_on(canonical, a.hyperplane(h))) f.hyperplanes.push_back(h);

    // Particular point: pivot variables take the offset column, free ones 0.
    f.point = RationalVector::Zero(n);
    RationalMatrix coeff = canonical.leftCols(n);
    for (Index r = 0; r < canonical.rows(); ++r) {
        Index piv = -1;
        for (Index j = 0; j < n; ++j)
            if (canonical(r, j) != 0) {
                piv = j;
                break;
            }
        f.point(piv) = canonical(r, n);
    }
    f.directions = nullspace_rational(coeff);
    return f;
}

}  // namespace

Arrangement::Arrangement(Index ambient_dim, std::vector<Hyperplane> hyperplanes,
                         std::vector<std::string> labels)
    : n_(ambient_dim), hyperplanes_(std::move(hyperplanes)), labels_(std::move(labels))
{
    if (n_ < 0) throw std::invalid_argument("ambient dimension must be nonnegative");
    if (labels_.empty()) {
        labels_.reserve(hyperplanes_.size());
        for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
            labels_.push_back("H" + std::to_string(i + 1));
    }
    if (labels_.size() != hyperplanes_.size())
        throw std::invalid_argument("label count does not match hyperplane count");

    std::vector<std::pair<RationalVector, Rational>> canon;
    canon.reserve(hyperplanes_.size());
    central_ = true;
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        const Hyperplane& h = hyperplanes_[i];
        if (h.normal.size() != n_)
            throw std::invalid_argument("hyperplane " + std::to_string(i + 1) +
                                        " has wrong normal length");
        canon.push_back(normalized_form(h));  // throws on zero normal
        if (h.offset != 0) central_ = false;
    }
    for (std::size_t i = 0; i < canon.size(); ++i)
        for (std::size_t j = i + 1; j < canon.size(); ++j)
            if (canon[i].second == canon[j].second && canon[i].first == canon[j].first)
                throw std::invalid_argument("hyperplane " + std::to_string(i + 1) +
                                            " and hyperplane " + std::to_string(j + 1) +
                                            " define the same affine subspace");
}

FlatPoset::FlatPoset(Index ambient_dim, std::vector<Flat> flats)
    : n_(ambient_dim), flats_(std::move(flats))
{
    // rank first, then hyperplane index sets: flats of equal rank follow the
    // input order of the hyperplanes cutting them
    std::sort(flats_.begin(), flats_.end(), [](const Flat& x, const Flat& y) {
        if (x.codim != y.codim) return x.codim < y.codim;
        return x.hyperplanes < y.hyperplanes;
    });
    max_rank_ = 0;
    for (const Flat& f : flats_) max_rank_ = std::max(max_rank_, f.codim);

    // mu(0,0) = 1; for X > 0, sum over Z <= X of mu(0,Z) is 0.
    mobius_.assign(flats_.size(), Integer(0));
    for (std::size_t x = 0; x < flats_.size(); ++x) {
        if (flats_[x].codim == 0) {
            mobius_[x] = 1;
            continue;
        }
        Integer acc(0);
        for (std::size_t z = 0; z < x; ++z)
            if (leq(static_cast<Index>(z), static_cast<Index>(x))) acc += mobius_[z];
        mobius_[x] = -acc;
    }
}

bool FlatPoset::leq(Index i, Index j) const
{
    const auto& small = flats_[static_cast<std::size_t>(i)].hyperplanes;
    const auto& large = flats_[static_cast<std::size_t>(j)].hyperplanes;
    return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

std::vector<Index> FlatPoset::flats_of_rank(int r) const
{
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i)
        if (rank(i) == r) out.push_back(i);
    return out;
}

std::optional<Index> FlatPoset::find_canonical(const RationalMatrix& canonical) const
{
    for (Index i = 0; i < size(); ++i) {
        const RationalMatrix& c = flats_[static_cast<std::size_t>(i)].canonical;
        if (c.rows() == canonical.rows() && c.cols() == canonical.cols() && c == canonical)
            return i;
    }
    return std::nullopt;
}

std::optional<Index> FlatPoset::find_by_hyperplanes(const Arrangement& a,
                                                    const std::vector<Index>& hyperplanes) const
{
    auto reduced = reduced_system(a, hyperplanes);
    if (!reduced) return std::nullopt;
    return find_canonical(*reduced);
}

FlatPoset build_flat_poset(const Arrangement& a)
{
    std::map<std::string, std::size_t> seen;
    std::vector<Flat> flats;

    auto empty_system = reduced_system(a, {});
    flats.push_back(make_flat(a, *empty_system));
    seen[matrix_key(flats[0].canonical)] = 0;

    // Closure walk: intersect every known flat with every hyperplane.
    for (std::size_t head = 0; head < flats.size(); ++head) {
        const std::vector<Index> base = flats[head].hyperplanes;
        for (Index h = 0; h < a.size(); ++h) {
            if (std::binary_search(base.begin(), base.end(), h)) continue;
            std::vector<Index> subset = base;
            subset.push_back(h);
            auto reduced = reduced_system(a, subset);
            if (!reduced) continue;
            std::string key = matrix_key(*reduced);
            if (seen.contains(key)) continue;
            seen[key] = flats.size();
            flats.push_back(make_flat(a, *reduced));
        }
    }
    return FlatPoset(a.ambient_dim(), std::move(flats));
}

Arrangement localize(const Arrangement& a, const Flat& x)
{
    std::vector<Hyperplane> hs;
    std::vector<std::string> labels;
    for (Index h : x.hyperplanes) {
        hs.push_back(a.hyperplane(h));
        labels.push_back(a.label(h));
    }
    return Arrangement(a.ambient_dim(), std::move(hs), std::move(labels));
}

Arrangement restrict_to_flat(const Arrangement& a, const Flat& x)
{
    const Index n = a.ambient_dim();
    const Index d = n - x.codim;
    if (d == 0) throw std::invalid_argument("cannot restrict to a point");

    std::vector<Hyperplane> hs;
    std::vector<std::string> labels;
    std::vector<std::pair<RationalVector, Rational>> canon;
    for (Index h = 0; h < a.size(); ++h) {
        if (std::binary_search(x.hyperplanes.begin(), x.hyperplanes.end(), h)) continue;
        const Hyperplane& w = a.hyperplane(h);
        // Trace on x in coordinates u with points p + B u.
        RationalVector trace_normal = x.directions.transpose() * w.normal;
        if (trace_normal.isZero(0)) continue;  // parallel to x, empty trace
        Rational trace_offset = w.offset - w.normal.dot(x.point);
        Hyperplane trace{trace_normal, trace_offset};
        auto nf = normalized_form(trace);
        bool duplicate = false;
        for (const auto& c : canon)
            if (c.second == nf.second && c.first == nf.first) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;
        canon.push_back(nf);
        hs.push_back(std::move(trace));
        labels.push_back(a.label(h));
    }
    return Arrangement(d, std::move(hs), std::move(labels));
}

Arrangement local_tangent_arrangement(const Arrangement& a, const Flat& x)
{
    std::vector<Hyperplane> hs;
    std::vector<std::string> labels;
    for (Index h : x.hyperplanes) {
        hs.push_back(Hyperplane{a.hyperplane(h).normal, Rational(0)});
        labels.push_back(a.label(h));
    }
    return Arrangement(a.ambient_dim(), std::move(hs), std::move(labels));
}

IntegerPoly whitney_poincare(const FlatPoset& p)
{
    IntegerPoly out;
    for (Index i = 0; i < p.size(); ++i)
        out += IntegerPoly::monomial(abs(p.mobius(i)), static_cast<std::size_t>(p.rank(i)));
    return out;
}

Integer euler_characteristic(const FlatPoset& p)
{
    return whitney_poincare(p)(Integer(-1));
}

int corank(const FlatPoset& p)
{
    return static_cast<int>(p.ambient_dim()) - p.max_rank();
}

int corank(const Arrangement& a)
{
    return corank(build_flat_poset(a));
}

int duality_dimension(ComplementKind kind, int n, int r)
{
    if (r < 0 || r > n) throw std::invalid_argument("corank must satisfy 0 <= r <= n");
    switch (kind) {
        case ComplementKind::linear:
            return n - r;
        case ComplementKind::elliptic:
            if (r == n)
                throw std::domain_error(
                    "empty elliptic arrangement (corank n) is not a duality space");
            return n + r;
        case ComplementKind::toric:
            return n;
    }
    throw std::invalid_argument("unknown complement kind");
}

DualityConstraintReport abelian_duality_constraints(const IntegerPoly& poin, int claimed_dim)
{
    for (const Integer& c : poin.coefficients())
        if (c < 0) throw std::invalid_argument("poincare polynomial has a negative coefficient");

    DualityConstraintReport report;
    report.betti_positive = true;
    for (int i = 0; i <= claimed_dim; ++i)
        if (poin.coefficient(static_cast<std::size_t>(i)) <= 0) report.betti_positive = false;
    for (std::size_t i = static_cast<std::size_t>(claimed_dim) + 1; i <= poin.degree(); ++i)
        if (poin.coefficient(i) != 0) report.betti_positive = false;

    report.b1_at_least_d = poin.coefficient(1) >= claimed_dim;

    Integer chi = poin(Integer(-1));
    Integer signed_chi = (claimed_dim % 2 == 0) ? chi : Integer(-chi);
    report.signed_euler_ok = signed_chi >= 0;
    return report;
}

Arrangement cone(const Arrangement& a)
{
    const Index n = a.ambient_dim();
    std::vector<Hyperplane> hs;
    std::vector<std::string> labels;
    for (Index h = 0; h < a.size(); ++h) {
        const Hyperplane& w = a.hyperplane(h);
        RationalVector normal(n + 1);
        normal(0) = -w.offset;
        for (Index j = 0; j < n; ++j) normal(j + 1) = w.normal(j);
        hs.push_back(Hyperplane{std::move(normal), Rational(0)});
        labels.push_back(a.label(h));
    }
    RationalVector infinity = RationalVector::Zero(n + 1);
    infinity(0) = 1;
    hs.push_back(Hyperplane{std::move(infinity), Rational(0)});
    labels.push_back("H_inf");
    return Arrangement(n + 1, std::move(hs), std::move(labels));
}

Arrangement decone(const Arrangement& a, Index hyperplane_at_infinity)
{
    if (!a.is_central()) throw std::invalid_argument("decone requires a central arrangement");
    if (hyperplane_at_infinity < 0 || hyperplane_at_infinity >= a.size())
        throw std::invalid_argument("hyperplane index out of range");
    const Index n = a.ambient_dim();
    const RationalVector& u = a.hyperplane(hyperplane_at_infinity).normal;

    // Chart {u.x = 1} parametrized by q + N v with u.q = 1, N = kernel of u.
    RationalVector q = RationalVector::Zero(n);
    for (Index i = 0; i < n; ++i)
        if (u(i) != 0) {
            q(i) = 1 / u(i);
            break;
        }
    RationalMatrix urow(1, n);
    for (Index i = 0; i < n; ++i) urow(0, i) = u(i);
    RationalMatrix kernel = nullspace_rational(urow);

    std::vector<Hyperplane> hs;
    std::vector<std::string> labels;
    for (Index h = 0; h < a.size(); ++h) {
        if (h == hyperplane_at_infinity) continue;
        const Hyperplane& w = a.hyperplane(h);
        RationalVector normal = kernel.transpose() * w.normal;
        Rational offset = -w.normal.dot(q);
        hs.push_back(Hyperplane{std::move(normal), std::move(offset)});
        labels.push_back(a.label(h));
    }
    return Arrangement(n - 1, std::move(hs), std::move(labels));
}

}  // namespace arrcohom
