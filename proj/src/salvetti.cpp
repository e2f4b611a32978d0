#include "arrcohom/salvetti.hpp"

#include "arrcohom/exactlin.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace arrcohom {

namespace {

// Linear constraint g(x) = normal . x - offset.
struct Constraint {
    RationalVector normal;
    Rational offset;

    Rational value(const RationalVector& x) const { return normal.dot(x) - offset; }
};

char sign_char(const Rational& v)
{
    int s = sign_of(v);
    return s > 0 ? '+' : (s < 0 ? '-' : '0');
}

std::string sign_vector(const std::vector<Constraint>& cons, const RationalVector& x)
{
    std::string s(cons.size(), '0');
    for (std::size_t i = 0; i < cons.size(); ++i) s[i] = sign_char(cons[i].value(x));
    return s;
}

std::string compose_signs(const std::string& first, const std::string& second)
{
    std::string out = first;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] == '0') out[i] = second[i];
    return out;
}

std::string point_key(const RationalVector& x)
{
    std::ostringstream os;
    for (Index i = 0; i < x.size(); ++i) os << x(i).get_str() << ';';
    return os.str();
}

// Point whose sign vector is compose(signs(u), signs(w)): step from u toward
// w, stopping before any constraint that is strict at u changes sign.
RationalVector compose_witness(const std::vector<Constraint>& cons, const RationalVector& u,
                               const RationalVector& w)
{
    Rational eps(1, 2);
    for (const Constraint& c : cons) {
        Rational gu = c.value(u);
        Rational gw = c.value(w);
        if (sign_of(gu) != 0 && sign_of(gw) != 0 && sign_of(gu) != sign_of(gw)) {
            Rational ratio = gu / (gu - gw) / 2;
            if (ratio < eps) eps = ratio;
        }
    }
    return u + eps * (w - u);
}

// Unique solution of the n x n system normal_i . x = offset_i, if invertible.
std::optional<RationalVector> solve_square(const std::vector<Constraint>& cons,
                                           const std::vector<Index>& subset, Index n)
{
    RationalMatrix aug(n, n + 1);
    for (Index i = 0; i < n; ++i) {
        const Constraint& c = cons[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])];
        aug.row(i).head(n) = c.normal.transpose();
        aug(i, n) = c.offset;
    }
    std::vector<Index> pivots = rref_in_place(aug);
    if (static_cast<Index>(pivots.size()) != n || pivots.back() == n) return std::nullopt;
    RationalVector x(n);
    for (Index i = 0; i < n; ++i) x(i) = aug(i, n);
    return x;
}

}  // namespace

FacePoset::FacePoset(Arrangement a, FlatPoset flats, std::vector<SignedFace> faces)
    : a_(std::move(a)), flats_(std::move(flats)), faces_(std::move(faces))
{
    std::sort(faces_.begin(), faces_.end(), [](const SignedFace& x, const SignedFace& y) {
        if (x.dim != y.dim) return x.dim > y.dim;
        return x.signs < y.signs;
    });
    for (Index i = 0; i < size(); ++i)
        if (faces_[static_cast<std::size_t>(i)].dim == a_.ambient_dim()) chambers_.push_back(i);
}

bool FacePoset::in_closure(Index f, Index g) const
{
    const std::string& sf = face(f).signs;
    const std::string& sg = face(g).signs;
    for (std::size_t i = 0; i < sf.size(); ++i)
        if (sf[i] != '0' && sf[i] != sg[i]) return false;
    return true;
}

std::optional<Index> FacePoset::find_signs(const std::string& signs) const
{
    for (Index i = 0; i < size(); ++i)
        if (face(i).signs == signs) return i;
    return std::nullopt;
}

FacePoset enumerate_faces(const Arrangement& a, Index max_hyperplanes)
{
    if (a.size() > max_hyperplanes)
        throw std::invalid_argument("face enumeration supports at most " +
                                    std::to_string(max_hyperplanes) + " hyperplanes");
    if (a.ambient_dim() > kMaxFaceAmbientDim)
        throw std::invalid_argument("face enumeration supports ambient dimension at most " +
                                    std::to_string(kMaxFaceAmbientDim));

    const Index n = a.ambient_dim();
    const Index m = a.size();
    FlatPoset flats = build_flat_poset(a);

    // margin beyond every flat witness point, so every face of a meets the
    // open box and every vertex of a is strictly inside it
    Rational box(1);
    for (Index f = 0; f < flats.size(); ++f) {
        const RationalVector& p = flats.flat(f).point;
        for (Index i = 0; i < n; ++i) {
            Rational bound = abs(p(i)) + 1;
            if (bound > box) box = bound;
        }
    }

    std::vector<Constraint> cons;
    for (Index h = 0; h < m; ++h)
        cons.push_back({a.hyperplane(h).normal, a.hyperplane(h).offset});
    for (Index i = 0; i < n; ++i) {
        RationalVector e = RationalVector::Zero(n);
        e(i) = 1;
        cons.push_back({e, box});
        cons.push_back({e, -box});
    }
    const Index total = static_cast<Index>(cons.size());

    // vertices of the boxed arrangement: all invertible n-subsets
    std::map<std::string, RationalVector> vertex_points;
    std::vector<Index> subset(static_cast<std::size_t>(n));
    auto collect = [&](auto&& self, Index next, Index chosen) -> void {
        if (chosen == n) {
            if (auto x = solve_square(cons, subset, n)) vertex_points.emplace(point_key(*x), *x);
            return;
        }
        if (total - next < n - chosen) return;
        for (Index i = next; i < total; ++i) {
            subset[static_cast<std::size_t>(chosen)] = i;
            self(self, i + 1, chosen + 1);
        }
    };
    if (n > 0) collect(collect, 0, 0);

    // closure of the vertex sign vectors under composition; every face of the
    // boxed decomposition meeting the closed box arises as vertex o face
    std::vector<std::string> sigs;
    std::vector<RationalVector> wits;
    std::map<std::string, Index> seen;
    std::deque<Index> work;
    auto admit = [&](std::string s, RationalVector x) {
        auto [it, fresh] = seen.emplace(std::move(s), static_cast<Index>(sigs.size()));
        if (!fresh) return;
        sigs.push_back(it->first);
        wits.push_back(std::move(x));
        work.push_back(it->second);
    };
    if (n == 0) admit(std::string(), RationalVector(0));
    for (const auto& [key, x] : vertex_points) admit(sign_vector(cons, x), x);
    std::vector<Index> vertex_ids(static_cast<std::size_t>(sigs.size()));
    for (std::size_t i = 0; i < vertex_ids.size(); ++i) vertex_ids[i] = static_cast<Index>(i);

    while (!work.empty()) {
        Index g = work.front();
        work.pop_front();
        for (Index v : vertex_ids) {
            std::string composed = compose_signs(sigs[static_cast<std::size_t>(v)],
                                                 sigs[static_cast<std::size_t>(g)]);
            if (seen.count(composed)) continue;
            RationalVector x = compose_witness(cons, wits[static_cast<std::size_t>(v)],
                                               wits[static_cast<std::size_t>(g)]);
            if (sign_vector(cons, x) != composed)
                throw std::logic_error("composition witness does not certify its face");
            admit(std::move(composed), std::move(x));
        }
    }

    // faces of a = faces strictly inside the box
    std::vector<SignedFace> faces;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        const std::string& s = sigs[i];
        bool interior = true;
        for (Index b = 0; b < n && interior; ++b)
            interior = s[static_cast<std::size_t>(m + 2 * b)] == '-' &&
                       s[static_cast<std::size_t>(m + 2 * b + 1)] == '+';
        if (!interior) continue;
        SignedFace f;
        f.signs = s.substr(0, static_cast<std::size_t>(m));
        f.witness = wits[i];
        std::vector<Index> zeros;
        for (Index h = 0; h < m; ++h)
            if (f.signs[static_cast<std::size_t>(h)] == '0') zeros.push_back(h);
        auto flat = flats.find_by_hyperplanes(a, zeros);
        if (!flat) throw std::logic_error("face zero set does not cut a flat");
        f.zero_flat = *flat;
        f.dim = static_cast<int>(n) - flats.rank(*flat);
        faces.push_back(std::move(f));
    }
    return FacePoset(a, std::move(flats), std::move(faces));
}

namespace {

// Orientation sign of the boundary step from a face to an adjacent face one
// dimension up. B and B2 are the canonical systems of the two flats; the
// first row of B outside the row span of B2 is an affine functional with a
// fixed sign on the bigger face, and the base change from B to [B2; that row]
// carries the orientation.
int orientation_sign(const FacePoset& fp, Index f, Index f2)
{
    const FlatPoset& flats = fp.flats();
    const RationalMatrix& b = flats.flat(fp.face(f).zero_flat).canonical;
    const RationalMatrix& b2 = flats.flat(fp.face(f2).zero_flat).canonical;
    const Index k = b.rows();
    const Index width = b.cols();

    RationalMatrix stacked(k, width);
    stacked.topRows(k - 1) = b2;
    Index w0 = -1;
    for (Index r = 0; r < k; ++r) {
        stacked.row(k - 1) = b.row(r);
        if (rational_rank(stacked) == k) {
            w0 = r;
            break;
        }
    }
    if (w0 < 0) throw std::logic_error("adjacent flats with equal spans");

    const Index n = width - 1;
    const RationalVector& witness = fp.face(f2).witness;
    Rational alpha = b.row(w0).head(n).dot(witness) - b(w0, n);
    int s1 = sign_of(alpha);
    if (s1 == 0) throw std::logic_error("separating functional vanishes on the open face");

    // coefficients of the stacked rows over the rows of b
    RationalMatrix aug(width, k + 1);
    aug.leftCols(k) = b.transpose();
    RationalMatrix coeffs(k, k);
    stacked.row(k - 1) = b.row(w0);
    for (Index t = 0; t < k; ++t) {
        RationalMatrix system = aug;
        system.col(k) = stacked.row(t).transpose();
        std::vector<Index> pivots = rref_in_place(system);
        if (static_cast<Index>(pivots.size()) != k || (!pivots.empty() && pivots.back() == k))
            throw std::logic_error("adjacent flat system outside the face span");
        for (Index j = 0; j < k; ++j) coeffs(t, j) = system(j, k);
    }
    int s2 = sign_of(rational_determinant(coeffs));
    return s1 * s2;
}

}  // namespace

std::vector<long> CWModel::cell_counts() const
{
    std::vector<long> counts;
    for (const auto& level : cells) counts.push_back(static_cast<long>(level.size()));
    return counts;
}

Integer CWModel::euler_characteristic() const
{
    Integer chi = 0;
    int sign = 1;
    for (const auto& level : cells) {
        chi += sign * static_cast<long>(level.size());
        sign = -sign;
    }
    return chi;
}

CWModel build_cw_model(const FacePoset& fp)
{
    const FlatPoset& flats = fp.flats();
    CWModel model;
    model.ambient_dim = fp.ambient_dim();
    model.hyperplane_count = fp.arrangement().size();

    int top = 0;
    for (Index f = 0; f < fp.size(); ++f)
        top = std::max(top, flats.rank(fp.face(f).zero_flat));

    std::vector<std::map<std::pair<Index, Index>, Index>> cell_ids(
        static_cast<std::size_t>(top) + 1);
    model.cells.resize(static_cast<std::size_t>(top) + 1);
    for (Index f = 0; f < fp.size(); ++f) {
        int k = flats.rank(fp.face(f).zero_flat);
        for (Index c : fp.chambers()) {
            if (!fp.in_closure(f, c)) continue;
            auto& level = model.cells[static_cast<std::size_t>(k)];
            cell_ids[static_cast<std::size_t>(k)][{f, c}] = static_cast<Index>(level.size());
            level.push_back({f, c});
        }
    }

    model.boundaries.resize(model.cells.size());
    for (std::size_t k = 1; k < model.cells.size(); ++k) {
        auto& level = model.boundaries[k];
        level.resize(model.cells[k].size());
        for (std::size_t ci = 0; ci < model.cells[k].size(); ++ci) {
            const CwCell& cell = model.cells[k][ci];
            const std::string& chamber_signs = fp.face(cell.chamber).signs;
            for (Index f2 = 0; f2 < fp.size(); ++f2) {
                if (flats.rank(fp.face(f2).zero_flat) != static_cast<int>(k) - 1) continue;
                if (!fp.in_closure(cell.face, f2)) continue;
                std::string target_signs = compose_signs(fp.face(f2).signs, chamber_signs);
                std::optional<Index> target_chamber = fp.find_signs(target_signs);
                if (!target_chamber) throw std::logic_error("composed chamber not enumerated");
                BoundaryEntry entry;
                entry.target = cell_ids[k - 1].at({f2, *target_chamber});
                entry.sign = orientation_sign(fp, cell.face, f2);
                entry.crossings.assign(static_cast<std::size_t>(model.hyperplane_count), 0);
                for (Index h = 0; h < model.hyperplane_count; ++h)
                    if (chamber_signs[static_cast<std::size_t>(h)] == '-' &&
                        target_signs[static_cast<std::size_t>(h)] == '+')
                        entry.crossings[static_cast<std::size_t>(h)] = 1;
                level[ci].push_back(std::move(entry));
            }
        }
    }
    return model;
}

Character trivial_character(std::int64_t prime, Index hyperplane_count)
{
    return Character{prime, std::vector<std::int64_t>(static_cast<std::size_t>(hyperplane_count), 1)};
}

std::vector<long> twisted_betti(const CWModel& m, const Character& rho)
{
    if (static_cast<Index>(rho.values.size()) != m.hyperplane_count)
        throw std::invalid_argument("character length does not match the arrangement");
    const std::int64_t p = rho.prime;
    std::vector<std::int64_t> t(rho.values.size());
    for (std::size_t h = 0; h < rho.values.size(); ++h) {
        t[h] = ((rho.values[h] % p) + p) % p;
        if (t[h] == 0) throw std::invalid_argument("character value divisible by the prime");
    }

    const std::size_t levels = m.cells.size();
    std::vector<int> ranks(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) {
        PrimeFieldMatrix d(p, static_cast<Index>(m.cells[k - 1].size()),
                           static_cast<Index>(m.cells[k].size()));
        for (std::size_t ci = 0; ci < m.boundaries[k].size(); ++ci)
            for (const BoundaryEntry& e : m.boundaries[k][ci]) {
                std::int64_t coeff = e.sign > 0 ? 1 : p - 1;
                for (std::size_t h = 0; h < e.crossings.size(); ++h)
                    if (e.crossings[h]) coeff = coeff * t[h] % p;
                std::int64_t prior = d(e.target, static_cast<Index>(ci));
                d.set(e.target, static_cast<Index>(ci), (prior + coeff) % p);
            }
        ranks[k] = prime_field_rank(d);
    }

    std::vector<long> betti(static_cast<std::size_t>(m.ambient_dim) + 1, 0);
    for (std::size_t q = 0; q < levels; ++q)
        betti[q] = static_cast<long>(m.cells[q].size()) - ranks[q] - ranks[q + 1];
    return betti;
}

bool next_residue_tuple(std::vector<std::int64_t>& tuple, std::int64_t p)
{
    for (std::size_t i = tuple.size(); i-- > 0;) {
        if (tuple[i] < p - 1) {
            ++tuple[i];
            std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(i) + 1, tuple.end(), 1);
            return true;
        }
    }
    return false;
}

namespace {

long exhaustive_count(std::int64_t p, Index m)
{
    long count = 1;
    for (Index i = 0; i < m; ++i) {
        if (count > kExhaustiveSweepBudget / (p - 1) + 1) return kExhaustiveSweepBudget + 1;
        count *= static_cast<long>(p - 1);
    }
    return count;
}

}  // namespace

std::vector<Character> characteristic_variety(const Arrangement& a, std::int64_t p, int q)
{
    if (exhaustive_count(p, a.size()) > kExhaustiveSweepBudget)
        throw std::invalid_argument("character sweep exceeds the exhaustive budget; sample instead");
    CWModel model = build_cw_model(enumerate_faces(a));
    std::vector<Character> found;
    std::vector<std::int64_t> tuple(static_cast<std::size_t>(a.size()), 1);
    do {
        Character rho{p, tuple};
        std::vector<long> betti = twisted_betti(model, rho);
        if (q <= static_cast<int>(betti.size()) - 1 && betti[static_cast<std::size_t>(q)] > 0)
            found.push_back(std::move(rho));
    } while (next_residue_tuple(tuple, p));
    return found;
}

std::vector<Character> characteristic_variety_sampled(const Arrangement& a, std::int64_t p,
                                                      int q, long samples, std::uint64_t seed)
{
    if (samples <= 0) throw std::invalid_argument("sample count must be positive");
    CWModel model = build_cw_model(enumerate_faces(a));
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::int64_t>> tuples;
    for (long s = 0; s < samples; ++s) {
        std::vector<std::int64_t> tuple(static_cast<std::size_t>(a.size()));
        for (auto& v : tuple) v = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
        tuples.push_back(std::move(tuple));
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());

    std::vector<Character> found;
    for (const auto& tuple : tuples) {
        Character rho{p, tuple};
        std::vector<long> betti = twisted_betti(model, rho);
        if (q <= static_cast<int>(betti.size()) - 1 && betti[static_cast<std::size_t>(q)] > 0)
            found.push_back(std::move(rho));
    }
    return found;
}

}  // namespace arrcohom
