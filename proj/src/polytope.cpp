#include "multbound/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "multbound/linalg.hpp"

namespace multbound {

Guards& guards() {
    static Guards g;
    return g;
}

namespace {

// ---------------------------------------------------------------- frames

// Affine coordinate frame for a point set: base point plus a basis of the
// direction space, with a precomputed solver for local coordinates.
struct AffineFrame {
    int ambient = 0;
    int k = 0;
    QVec base;
    std::vector<int> span_ids;  // base id followed by k direction point ids
    std::vector<QVec> dirs;
    std::vector<int> pivot_cols;
    QMatrix solver;  // inverse of dirs restricted to pivot columns

    QVec to_local(const QVec& p) const {
        QVec rhs(k);
        for (int r = 0; r < k; ++r) rhs[r] = p[pivot_cols[r]] - base[pivot_cols[r]];
        return linalg::mat_vec(solver, rhs);
    }
};

AffineFrame make_frame(const std::vector<QVec>& pts) {
    AffineFrame f;
    f.ambient = static_cast<int>(pts[0].size());
    f.base = pts[0];
    f.span_ids = {0};
    QMatrix reduced;
    std::vector<int> red_pivots;
    for (size_t i = 1; i < pts.size(); ++i) {
        QVec v(f.ambient);
        for (int c = 0; c < f.ambient; ++c) v[c] = pts[i][c] - f.base[c];
        for (size_t r = 0; r < reduced.size(); ++r) {
            int pc = red_pivots[r];
            if (v[pc] == 0) continue;
            Rational factor = v[pc] / reduced[r][pc];
            for (int c = 0; c < f.ambient; ++c) v[c] -= factor * reduced[r][c];
        }
        int pivot = -1;
        for (int c = 0; c < f.ambient; ++c)
            if (v[c] != 0) { pivot = c; break; }
        if (pivot < 0) continue;
        reduced.push_back(v);
        red_pivots.push_back(pivot);
        QVec d(f.ambient);
        for (int c = 0; c < f.ambient; ++c) d[c] = pts[i][c] - f.base[c];
        f.dirs.push_back(std::move(d));
        f.span_ids.push_back(static_cast<int>(i));
    }
    f.k = static_cast<int>(f.dirs.size());
    f.pivot_cols = red_pivots;
    if (f.k > 0) {
        QMatrix a(f.k, QVec(f.k));
        for (int r = 0; r < f.k; ++r)
            for (int j = 0; j < f.k; ++j) a[r][j] = f.dirs[j][f.pivot_cols[r]];
        auto inv = linalg::inverse(a);
        if (!inv) throw std::logic_error("affine frame solver is singular");
        f.solver = *inv;
    }
    return f;
}

// ------------------------------------------------- full-dimensional hull

struct RawFacet {
    std::vector<int> verts;  // sorted ids into the point list, complete incidence
    QVec normal;             // normal . x <= offset
    Rational offset;
    std::optional<std::vector<std::vector<int>>> ridges;
};

struct FullHull {
    std::vector<int> vertex_ids;
    std::vector<RawFacet> facets;
};

FullHull hull_fulldim(const std::vector<QVec>& pts, int k);

FullHull hull_1d(const std::vector<QVec>& pts) {
    int lo = 0, hi = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
        if (pts[i][0] < pts[lo][0]) lo = static_cast<int>(i);
        if (pts[i][0] > pts[hi][0]) hi = static_cast<int>(i);
    }
    FullHull h;
    h.vertex_ids = {std::min(lo, hi), std::max(lo, hi)};
    RawFacet up{{hi}, {Rational(1)}, pts[hi][0], std::nullopt};
    RawFacet down{{lo}, {Rational(-1)}, -pts[lo][0], std::nullopt};
    h.facets = {up, down};
    return h;
}

Rational cross2(const QVec& o, const QVec& a, const QVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

FullHull hull_2d(const std::vector<QVec>& pts) {
    std::vector<int> order(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
        return pts[a][1] < pts[b][1];
    });
    auto build = [&](bool upper) {
        std::vector<int> chain;
        for (size_t idx = 0; idx < order.size(); ++idx) {
            int i = order[upper ? order.size() - 1 - idx : idx];
            while (chain.size() >= 2 &&
                   cross2(pts[chain[chain.size() - 2]], pts[chain.back()], pts[i]) <= 0)
                chain.pop_back();
            chain.push_back(i);
        }
        return chain;
    };
    std::vector<int> lower = build(false), upper = build(true);
    std::vector<int> cycle = lower;
    cycle.pop_back();
    for (size_t i = 0; i + 1 < upper.size(); ++i) cycle.push_back(upper[i]);
    FullHull h;
    const size_t m = cycle.size();
    for (size_t i = 0; i < m; ++i) {
        int v = cycle[i], w = cycle[(i + 1) % m];
        QVec normal = {pts[w][1] - pts[v][1], pts[v][0] - pts[w][0]};
        RawFacet f;
        f.verts = {std::min(v, w), std::max(v, w)};
        f.offset = normal[0] * pts[v][0] + normal[1] * pts[v][1];
        f.normal = std::move(normal);
        h.facets.push_back(std::move(f));
    }
    h.vertex_ids = cycle;
    std::sort(h.vertex_ids.begin(), h.vertex_ids.end());
    return h;
}

// Hyperplane through the points `ids` (affinely independent, one less than
// ambient k); oriented so that `inside` satisfies normal . x < offset.
std::pair<QVec, Rational> hyperplane_through(const std::vector<QVec>& pts,
                                             const std::vector<int>& ids,
                                             const QVec& extra,
                                             bool use_extra,
                                             const QVec& inside) {
    const int k = static_cast<int>(pts[ids[0]].size());
    QMatrix rows;
    const QVec& base = pts[ids[0]];
    for (size_t i = 1; i < ids.size(); ++i) {
        QVec d(k);
        for (int c = 0; c < k; ++c) d[c] = pts[ids[i]][c] - base[c];
        rows.push_back(std::move(d));
    }
    if (use_extra) {
        QVec d(k);
        for (int c = 0; c < k; ++c) d[c] = extra[c] - base[c];
        rows.push_back(std::move(d));
    }
    auto ns = linalg::nullspace(rows);
    if (ns.size() != 1) throw std::logic_error("degenerate hyperplane span");
    QVec normal = ns[0];
    Rational offset = linalg::dot(normal, base);
    Rational side = linalg::dot(normal, inside) - offset;
    if (side == 0) throw std::logic_error("interior point on candidate hyperplane");
    if (side > 0) {
        for (auto& x : normal) x = -x;
        offset = -offset;
    }
    return {std::move(normal), offset};
}

// Canonical key for facet merging: primitive integer normal plus offset.
std::string facet_key(const QVec& normal, const Rational& offset) {
    Int lcm = 1;
    for (const auto& x : normal) {
        Int d = x.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    std::vector<Int> ints;
    ints.reserve(normal.size());
    Int content = 0;
    for (const auto& x : normal) {
        Rational scaled = x * Rational(lcm);
        Int v = scaled.get_num();
        ints.push_back(v);
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        content = g;
    }
    if (content == 0) throw std::logic_error("zero facet normal");
    std::string key;
    for (const auto& v : ints) key += Int(v / content).get_str() + ",";
    Rational off = offset * Rational(lcm) / Rational(content);
    key += "|" + to_string(off);
    return key;
}

std::vector<int> sorted_union(const std::vector<int>& a, int extra) {
    std::vector<int> r = a;
    auto it = std::lower_bound(r.begin(), r.end(), extra);
    if (it == r.end() || *it != extra) r.insert(it, extra);
    return r;
}

// Ridges (facets of a facet) as sorted global id lists.
const std::vector<std::vector<int>>& facet_ridges(const std::vector<QVec>& pts, int k,
                                                  RawFacet& f) {
    if (f.ridges) return *f.ridges;
    std::vector<std::vector<int>> out;
    if (static_cast<int>(f.verts.size()) == k) {
        // simplex facet: every (k-1)-subset is a ridge
        for (size_t skip = 0; skip < f.verts.size(); ++skip) {
            std::vector<int> r;
            for (size_t i = 0; i < f.verts.size(); ++i)
                if (i != skip) r.push_back(f.verts[i]);
            out.push_back(std::move(r));
        }
    } else {
        std::vector<QVec> sub;
        sub.reserve(f.verts.size());
        for (int id : f.verts) sub.push_back(pts[id]);
        AffineFrame frame = make_frame(sub);
        if (frame.k != k - 1) throw std::logic_error("facet has wrong affine dimension");
        std::vector<QVec> local;
        local.reserve(sub.size());
        for (const auto& p : sub) local.push_back(frame.to_local(p));
        FullHull sh = hull_fulldim(local, k - 1);
        for (const auto& sf : sh.facets) {
            std::vector<int> r;
            for (int li : sf.verts) r.push_back(f.verts[li]);
            std::sort(r.begin(), r.end());
            out.push_back(std::move(r));
        }
    }
    f.ridges = std::move(out);
    return *f.ridges;
}

void merge_facets(std::vector<RawFacet>& facets) {
    std::map<std::string, size_t> seen;
    std::vector<RawFacet> merged;
    for (auto& f : facets) {
        std::string key = facet_key(f.normal, f.offset);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, merged.size());
            merged.push_back(std::move(f));
        } else {
            RawFacet& target = merged[it->second];
            std::vector<int> u;
            std::set_union(target.verts.begin(), target.verts.end(), f.verts.begin(),
                           f.verts.end(), std::back_inserter(u));
            target.verts = std::move(u);
            target.ridges.reset();
        }
    }
    facets = std::move(merged);
}

// Extreme subset of a point set known to have affine dimension k (ids into pts).
std::vector<int> extreme_subset(const std::vector<QVec>& pts, const std::vector<int>& ids,
                                int k) {
    if (static_cast<int>(ids.size()) <= k + 1) return ids;
    std::vector<QVec> sub;
    sub.reserve(ids.size());
    for (int id : ids) sub.push_back(pts[id]);
    if (k == 0) return {ids[0]};
    AffineFrame frame = make_frame(sub);
    std::vector<QVec> local;
    local.reserve(sub.size());
    for (const auto& p : sub) local.push_back(frame.to_local(p));
    FullHull h = hull_fulldim(local, k);
    std::vector<int> out;
    out.reserve(h.vertex_ids.size());
    for (int li : h.vertex_ids) out.push_back(ids[li]);
    std::sort(out.begin(), out.end());
    return out;
}

// Incremental beneath-beyond for k >= 3. Points must be deduplicated and of
// affine dimension exactly k. Coplanar insertions grow the touched facets,
// so no genericity assumption is needed.
FullHull hull_nd(const std::vector<QVec>& pts, int k) {
    AffineFrame frame = make_frame(pts);
    if (frame.k != k) throw std::logic_error("hull_nd: affine dimension mismatch");

    QVec interior(k, Rational(0));
    for (int id : frame.span_ids)
        for (int c = 0; c < k; ++c) interior[c] += pts[id][c];
    for (int c = 0; c < k; ++c) interior[c] /= Rational(static_cast<long>(frame.span_ids.size()));

    std::vector<RawFacet> facets;
    for (size_t skip = 0; skip < frame.span_ids.size(); ++skip) {
        std::vector<int> ids;
        for (size_t i = 0; i < frame.span_ids.size(); ++i)
            if (i != skip) ids.push_back(frame.span_ids[i]);
        std::sort(ids.begin(), ids.end());
        auto [normal, offset] =
            hyperplane_through(pts, ids, QVec(), false, pts[frame.span_ids[skip]]);
        facets.push_back(RawFacet{ids, std::move(normal), offset, std::nullopt});
    }

    std::set<int> in_simplex(frame.span_ids.begin(), frame.span_ids.end());
    for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
        if (in_simplex.count(p)) continue;
        std::vector<int> beyond, coplanar;
        std::vector<int> state(facets.size());  // -1 beneath, 0 on, 1 beyond
        for (size_t i = 0; i < facets.size(); ++i) {
            Rational side = linalg::dot(facets[i].normal, pts[p]) - facets[i].offset;
            state[i] = side > 0 ? 1 : (side == 0 ? 0 : -1);
            if (state[i] > 0) beyond.push_back(static_cast<int>(i));
            if (state[i] == 0) coplanar.push_back(static_cast<int>(i));
        }
        if (beyond.empty()) continue;  // inside or on the boundary
        for (int i : coplanar) {
            facets[i].verts = sorted_union(facets[i].verts, p);
            facets[i].ridges.reset();
        }
        std::vector<RawFacet> created;
        for (int fi : beyond) {
            const auto& ridges = facet_ridges(pts, k, facets[fi]);
            for (const auto& ridge : ridges) {
                int neighbor = -1;
                for (size_t gi = 0; gi < facets.size(); ++gi) {
                    if (static_cast<int>(gi) == fi) continue;
                    if (std::includes(facets[gi].verts.begin(), facets[gi].verts.end(),
                                      ridge.begin(), ridge.end())) {
                        neighbor = static_cast<int>(gi);
                        break;
                    }
                }
                if (neighbor < 0) throw std::logic_error("ridge without a neighbor facet");
                if (state[neighbor] >= 0) continue;  // internal or handled by growth
                auto [normal, offset] = hyperplane_through(pts, ridge, pts[p], true, interior);
                created.push_back(
                    RawFacet{sorted_union(ridge, p), std::move(normal), offset, std::nullopt});
            }
        }
        std::vector<RawFacet> next;
        for (size_t i = 0; i < facets.size(); ++i)
            if (state[i] <= 0) next.push_back(std::move(facets[i]));
        for (auto& f : created) next.push_back(std::move(f));
        merge_facets(next);
        facets = std::move(next);
    }

    merge_facets(facets);
    FullHull h;
    std::set<int> verts;
    for (auto& f : facets) {
        f.verts = extreme_subset(pts, f.verts, k - 1);
        f.ridges.reset();
        verts.insert(f.verts.begin(), f.verts.end());
    }
    h.vertex_ids.assign(verts.begin(), verts.end());
    h.facets = std::move(facets);
    return h;
}

FullHull hull_fulldim(const std::vector<QVec>& pts, int k) {
    if (k == 1) return hull_1d(pts);
    if (k == 2) return hull_2d(pts);
    return hull_nd(pts, k);
}

// ------------------------------------------------------------ triangulation

// Simplices (as id tuples into pts) covering the hull of a full-dimensional set.
std::vector<std::vector<int>> triangulate_fulldim(const std::vector<QVec>& pts, int k) {
    if (k == 1) {
        FullHull h = hull_1d(pts);
        return {{h.vertex_ids[0], h.vertex_ids[1]}};
    }
    FullHull h = hull_fulldim(pts, k);
    int apex = h.vertex_ids[0];
    std::vector<std::vector<int>> out;
    for (const auto& f : h.facets) {
        if (linalg::dot(f.normal, pts[apex]) == f.offset) continue;
        std::vector<QVec> sub;
        sub.reserve(f.verts.size());
        for (int id : f.verts) sub.push_back(pts[id]);
        std::vector<std::vector<int>> sub_tris;
        if (static_cast<int>(f.verts.size()) == k) {
            std::vector<int> all(f.verts.size());
            for (size_t i = 0; i < f.verts.size(); ++i) all[i] = static_cast<int>(i);
            sub_tris.push_back(all);
        } else {
            AffineFrame frame = make_frame(sub);
            std::vector<QVec> local;
            local.reserve(sub.size());
            for (const auto& q : sub) local.push_back(frame.to_local(q));
            sub_tris = triangulate_fulldim(local, k - 1);
        }
        for (const auto& t : sub_tris) {
            std::vector<int> simplex = {apex};
            for (int li : t) simplex.push_back(f.verts[li]);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

// ------------------------------------------------------------- halfspaces

std::pair<std::vector<Int>, Rational> normalize_halfspace(const QVec& normal,
                                                          const Rational& offset) {
    Int lcm = 1;
    for (const auto& x : normal) {
        Int d = x.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    std::vector<Int> ints;
    Int content = 0;
    for (const auto& x : normal) {
        Rational scaled = x * Rational(lcm);
        ints.push_back(scaled.get_num());
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
        content = g;
    }
    if (content == 0) throw std::logic_error("zero halfspace normal");
    for (auto& v : ints) v /= content;
    Rational off = offset * Rational(lcm) / Rational(content);
    return {std::move(ints), off};
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
}

}  // namespace

// ----------------------------------------------------------- construction

Polytope Polytope::empty(int dim) {
    Polytope p;
    p.dim_ = dim;
    p.affine_dim_ = -1;
    return p;
}

Polytope Polytope::point(const QVec& p) { return hull(static_cast<int>(p.size()), {p}); }

Polytope Polytope::simplex(int dim, const std::vector<int>& vars) {
    std::vector<int> use = vars;
    if (use.empty())
        for (int i = 0; i < dim; ++i) use.push_back(i);
    std::vector<Exponents> pts = {Exponents(dim, 0)};
    for (int v : use) {
        Exponents e(dim, 0);
        e.at(v) = 1;
        pts.push_back(e);
    }
    return hull_lattice(dim, pts);
}

Polytope Polytope::cube(int dim, long r) {
    static std::map<std::pair<int, long>, Polytope> cache;
    auto key = std::make_pair(dim, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Exponents> pts;
    for (long mask = 0; mask < (1L << dim); ++mask) {
        Exponents e(dim);
        for (int i = 0; i < dim; ++i) e[i] = (mask >> i) & 1 ? r : -r;
        pts.push_back(e);
    }
    Polytope p = hull_lattice(dim, pts);
    cache.emplace(key, p);
    return p;
}

Polytope Polytope::hull_lattice(int dim, const std::vector<Exponents>& points) {
    std::vector<QVec> qpts;
    qpts.reserve(points.size());
    for (const auto& e : points) {
        QVec q(dim);
        if (static_cast<int>(e.size()) != dim)
            throw std::invalid_argument("point dimension mismatch");
        for (int i = 0; i < dim; ++i) q[i] = Rational(e[i]);
        qpts.push_back(std::move(q));
    }
    return hull(dim, qpts);
}

Polytope Polytope::hull(int dim, const std::vector<QVec>& points) {
    if (dim < 1) throw std::invalid_argument("polytope dimension must be >= 1");
    if (dim > guards().max_dim)
        throw std::invalid_argument("dimension exceeds the desk-scale guard");
    if (points.empty()) throw std::invalid_argument("hull of an empty point set");

    std::vector<QVec> pts;
    {
        std::set<QVec> seen;
        for (const auto& p : points) {
            if (static_cast<int>(p.size()) != dim)
                throw std::invalid_argument("point dimension mismatch");
            if (seen.insert(p).second) pts.push_back(p);
        }
    }

    AffineFrame frame = make_frame(pts);
    Polytope poly;
    poly.dim_ = dim;
    poly.affine_dim_ = frame.k;

    if (frame.k == 0) {
        poly.vertices_ = {pts[0]};
        for (int i = 0; i < dim; ++i) {
            std::vector<Int> n(dim, 0);
            n[i] = 1;
            poly.equations_.push_back(AffineEquation{std::move(n), pts[0][i]});
        }
        poly.validate();
        return poly;
    }

    FullHull h;
    std::vector<QVec> local;
    if (frame.k == dim) {
        h = hull_fulldim(pts, dim);
    } else {
        local.reserve(pts.size());
        for (const auto& p : pts) local.push_back(frame.to_local(p));
        h = hull_fulldim(local, frame.k);
    }

    for (int id : h.vertex_ids) poly.vertices_.push_back(pts[id]);
    std::sort(poly.vertices_.begin(), poly.vertices_.end());

    if (frame.k == dim) {
        for (const auto& f : h.facets) {
            auto [n, b] = normalize_halfspace(f.normal, f.offset);
            poly.facets_.push_back(Halfspace{std::move(n), b});
        }
    } else {
        // lift local facet inequalities through the frame's pivot columns
        QMatrix at(frame.k, QVec(frame.k));
        for (int r = 0; r < frame.k; ++r)
            for (int j = 0; j < frame.k; ++j)
                at[r][j] = frame.dirs[r][frame.pivot_cols[j]];  // transpose of solve matrix
        for (const auto& f : h.facets) {
            auto w = linalg::solve_unique(at, f.normal);
            if (!w) throw std::logic_error("facet lift failed");
            QVec normal(dim, Rational(0));
            for (int r = 0; r < frame.k; ++r) normal[frame.pivot_cols[r]] = (*w)[r];
            Rational offset = f.offset + linalg::dot(normal, frame.base);
            auto [n, b] = normalize_halfspace(normal, offset);
            poly.facets_.push_back(Halfspace{std::move(n), b});
        }
        // affine hull equations: the nullspace of the direction matrix
        QMatrix dmat;
        for (const auto& d : frame.dirs) dmat.push_back(d);
        for (const auto& a : linalg::nullspace(dmat)) {
            auto [n, b0] = normalize_halfspace(a, linalg::dot(a, frame.base));
            // canonical sign: first nonzero entry positive
            int first = -1;
            for (size_t i = 0; i < n.size(); ++i)
                if (n[i] != 0) { first = static_cast<int>(i); break; }
            if (first >= 0 && n[first] < 0) {
                for (auto& v : n) v = -v;
                b0 = -b0;
            }
            poly.equations_.push_back(AffineEquation{std::move(n), b0});
        }
        std::sort(poly.equations_.begin(), poly.equations_.end(),
                  [](const AffineEquation& a, const AffineEquation& b) {
                      if (a.normal != b.normal) return a.normal < b.normal;
                      return a.offset < b.offset;
                  });
    }
    std::sort(poly.facets_.begin(), poly.facets_.end(), halfspace_less);
    poly.validate();
    return poly;
}

void Polytope::validate() const {
    for (const auto& v : vertices_) {
        QMatrix active;
        for (const auto& e : equations_) {
            Rational s = 0;
            for (int i = 0; i < dim_; ++i) s += Rational(e.normal[i]) * v[i];
            if (s != e.offset) throw std::logic_error("vertex violates an affine equation");
            QVec row(dim_);
            for (int i = 0; i < dim_; ++i) row[i] = Rational(e.normal[i]);
            active.push_back(std::move(row));
        }
        for (const auto& f : facets_) {
            Rational s = 0;
            for (int i = 0; i < dim_; ++i) s += Rational(f.normal[i]) * v[i];
            if (s > f.offset) throw std::logic_error("vertex violates a facet inequality");
            if (s == f.offset) {
                QVec row(dim_);
                for (int i = 0; i < dim_; ++i) row[i] = Rational(f.normal[i]);
                active.push_back(std::move(row));
            }
        }
        if (linalg::rank(active) != dim_)
            throw std::logic_error("stored point is not a vertex of the hull");
    }
}

bool Polytope::integral() const {
    for (const auto& v : vertices_)
        for (const auto& c : v)
            if (!is_integer(c)) return false;
    return true;
}

bool Polytope::contains(const QVec& p) const {
    if (is_empty()) return false;
    if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
    for (const auto& e : equations_) {
        Rational s = 0;
        for (int i = 0; i < dim_; ++i) s += Rational(e.normal[i]) * p[i];
        if (s != e.offset) return false;
    }
    for (const auto& f : facets_) {
        Rational s = 0;
        for (int i = 0; i < dim_; ++i) s += Rational(f.normal[i]) * p[i];
        if (s > f.offset) return false;
    }
    return true;
}

bool Polytope::contains_origin() const { return contains(QVec(dim_, Rational(0))); }

bool Polytope::contains_polytope(const Polytope& other) const {
    if (other.is_empty()) return true;
    for (const auto& v : other.vertices_)
        if (!contains(v)) return false;
    return true;
}

bool Polytope::operator==(const Polytope& other) const {
    return dim_ == other.dim_ && affine_dim_ == other.affine_dim_ &&
           vertices_ == other.vertices_;
}

Polytope Polytope::minkowski_sum(const Polytope& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("polytope dimension mismatch");
    if (is_empty() || other.is_empty()) return empty(dim_);
    std::vector<QVec> sums;
    sums.reserve(vertices_.size() * other.vertices_.size());
    for (const auto& a : vertices_)
        for (const auto& b : other.vertices_) {
            QVec s(dim_);
            for (int i = 0; i < dim_; ++i) s[i] = a[i] + b[i];
            sums.push_back(std::move(s));
        }
    return hull(dim_, sums);
}

Polytope Polytope::scaled(const Rational& k) const {
    if (k < 0) throw std::invalid_argument("negative dilation");
    if (is_empty()) return *this;
    if (k == 0) return origin(dim_);
    Polytope p = *this;
    for (auto& v : p.vertices_)
        for (auto& c : v) c *= k;
    for (auto& f : p.facets_) f.offset *= k;
    for (auto& e : p.equations_) e.offset *= k;
    std::sort(p.vertices_.begin(), p.vertices_.end());
    p.validate();
    return p;
}

Polytope Polytope::translated(const QVec& t) const {
    if (static_cast<int>(t.size()) != dim_) throw std::invalid_argument("translation dimension mismatch");
    if (is_empty()) return *this;
    Polytope p = *this;
    for (auto& v : p.vertices_)
        for (int i = 0; i < dim_; ++i) v[i] += t[i];
    for (auto& f : p.facets_) {
        Rational shift = 0;
        for (int i = 0; i < dim_; ++i) shift += Rational(f.normal[i]) * t[i];
        f.offset += shift;
    }
    for (auto& e : p.equations_) {
        Rational shift = 0;
        for (int i = 0; i < dim_; ++i) shift += Rational(e.normal[i]) * t[i];
        e.offset += shift;
    }
    std::sort(p.vertices_.begin(), p.vertices_.end());
    p.validate();
    return p;
}

Rational Polytope::volume() const {
    if (affine_dim_ < dim_) return Rational(0);
    auto tris = triangulate_fulldim(vertices_, dim_);
    Rational total = 0;
    for (const auto& t : tris) {
        QMatrix m(dim_, QVec(dim_));
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c)
                m[r][c] = vertices_[t[r + 1]][c] - vertices_[t[0]][c];
        Rational d = linalg::det(m);
        if (d < 0) d = -d;
        total += d;
    }
    return total / Rational(factorial(static_cast<unsigned>(dim_)));
}

namespace {

struct IntConstraint {
    std::vector<Int> a;
    Int rhs;
    int top;  // largest index with a nonzero coefficient, -1 for none
};

int top_index(const std::vector<Int>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

}  // namespace

void Polytope::enumerate_lattice(const std::function<void(const std::vector<long>&)>& emit) const {
    if (is_empty()) return;
    const int n = dim_;
    std::vector<Int> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Rational mn = vertices_[0][i], mx = vertices_[0][i];
        for (const auto& v : vertices_) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        lo[i] = rational_ceil(mn);
        hi[i] = rational_floor(mx);
        if (lo[i] > hi[i]) return;
    }
    Int box = 1;
    for (int i = 0; i < n; ++i) box *= hi[i] - lo[i] + 1;
    if (box > guards().max_box)
        throw std::domain_error("lattice enumeration box exceeds the desk-scale guard");

    std::vector<IntConstraint> cons;
    auto push = [&](const std::vector<Int>& normal, const Rational& offset, bool negate) {
        IntConstraint c;
        c.a.resize(n);
        Int den = offset.get_den();
        for (int i = 0; i < n; ++i) c.a[i] = (negate ? -normal[i] : normal[i]) * den;
        c.rhs = negate ? -offset.get_num() : offset.get_num();
        c.top = top_index(c.a);
        cons.push_back(std::move(c));
    };
    for (const auto& f : facets_) push(f.normal, f.offset, false);
    for (const auto& e : equations_) {
        push(e.normal, e.offset, false);
        push(e.normal, e.offset, true);
    }

    std::vector<long> point(n, 0);
    std::vector<Int> partial(cons.size(), 0);

    std::function<void(int)> walk = [&](int depth) {
        Int l = lo[depth], h = hi[depth];
        for (size_t c = 0; c < cons.size(); ++c) {
            if (cons[c].top > depth) continue;
            const Int& coef = cons[c].a[depth];
            Int slack = cons[c].rhs - partial[c];
            if (coef == 0) {
                if (slack < 0) return;  // infeasible branch
            } else if (coef > 0) {
                Int bound = floor_div(slack, coef);
                if (bound < h) h = bound;
            } else {
                Int bound = ceil_div(slack, coef);
                if (bound > l) l = bound;
            }
        }
        if (l > h) return;
        if (depth == n - 1) {
            for (Int x = l; x <= h; ++x) {
                point[depth] = to_long(x);
                emit(point);
            }
            return;
        }
        for (Int x = l; x <= h; ++x) {
            point[depth] = to_long(x);
            for (size_t c = 0; c < cons.size(); ++c)
                if (cons[c].a[depth] != 0) partial[c] += cons[c].a[depth] * x;
            walk(depth + 1);
            for (size_t c = 0; c < cons.size(); ++c)
                if (cons[c].a[depth] != 0) partial[c] -= cons[c].a[depth] * x;
        }
    };
    walk(0);
}

Int Polytope::lattice_count() const {
    if (is_empty()) return 0;
    Int count = 0;
    // count whole final-coordinate intervals instead of visiting each point
    const int n = dim_;
    std::vector<Int> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Rational mn = vertices_[0][i], mx = vertices_[0][i];
        for (const auto& v : vertices_) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        lo[i] = rational_ceil(mn);
        hi[i] = rational_floor(mx);
        if (lo[i] > hi[i]) return 0;
    }
    Int box = 1;
    for (int i = 0; i + 1 < n; ++i) box *= hi[i] - lo[i] + 1;
    if (box > guards().max_box)
        throw std::domain_error("lattice enumeration box exceeds the desk-scale guard");

    std::vector<IntConstraint> cons;
    auto push = [&](const std::vector<Int>& normal, const Rational& offset, bool negate) {
        IntConstraint c;
        c.a.resize(n);
        Int den = offset.get_den();
        for (int i = 0; i < n; ++i) c.a[i] = (negate ? -normal[i] : normal[i]) * den;
        c.rhs = negate ? -offset.get_num() : offset.get_num();
        c.top = top_index(c.a);
        cons.push_back(std::move(c));
    };
    for (const auto& f : facets_) push(f.normal, f.offset, false);
    for (const auto& e : equations_) {
        push(e.normal, e.offset, false);
        push(e.normal, e.offset, true);
    }

    std::vector<Int> partial(cons.size(), 0);
    std::function<void(int)> walk = [&](int depth) {
        Int l = lo[depth], h = hi[depth];
        for (size_t c = 0; c < cons.size(); ++c) {
            if (cons[c].top > depth) continue;
            const Int& coef = cons[c].a[depth];
            Int slack = cons[c].rhs - partial[c];
            if (coef == 0) {
                if (slack < 0) return;
            } else if (coef > 0) {
                Int bound = floor_div(slack, coef);
                if (bound < h) h = bound;
            } else {
                Int bound = ceil_div(slack, coef);
                if (bound > l) l = bound;
            }
        }
        if (l > h) return;
        if (depth == n - 1) {
            count += h - l + 1;
            return;
        }
        for (Int x = l; x <= h; ++x) {
            for (size_t c = 0; c < cons.size(); ++c)
                if (cons[c].a[depth] != 0) partial[c] += cons[c].a[depth] * x;
            walk(depth + 1);
            for (size_t c = 0; c < cons.size(); ++c)
                if (cons[c].a[depth] != 0) partial[c] -= cons[c].a[depth] * x;
        }
    };
    walk(0);
    return count;
}

long Polytope::pi_degree() const {
    if (is_empty()) return 0;
    Int best = 0;
    for (const auto& v : vertices_)
        for (const auto& c : v) {
            Rational a = c < 0 ? Rational(-c) : Rational(c);
            Int d = rational_ceil(a);
            if (d > best) best = d;
        }
    return to_long(best);
}

bool Polytope::is_coideal() const {
    if (is_empty()) return true;
    for (const auto& v : vertices_)
        for (const auto& c : v)
            if (c < 0) throw std::domain_error("is_coideal requires nonnegative vertices");
    std::set<std::vector<long>> pts;
    enumerate_lattice([&](const std::vector<long>& p) { pts.insert(p); });
    for (const auto& p : pts) {
        for (int i = 0; i < dim_; ++i) {
            if (p[i] == 0) continue;
            std::vector<long> q = p;
            q[i] -= 1;
            if (!pts.count(q)) return false;
        }
    }
    return true;
}

Polytope Polytope::intersect_box(const QVec& lo, const QVec& hi) const {
    if (is_empty()) return *this;
    struct Ineq {
        QVec normal;
        Rational rhs;
    };
    std::vector<Ineq> ineqs;
    for (const auto& f : facets_) {
        QVec n(dim_);
        for (int i = 0; i < dim_; ++i) n[i] = Rational(f.normal[i]);
        ineqs.push_back({std::move(n), f.offset});
    }
    for (int i = 0; i < dim_; ++i) {
        QVec up(dim_, Rational(0)), down(dim_, Rational(0));
        up[i] = 1;
        down[i] = -1;
        ineqs.push_back({up, hi[i]});
        ineqs.push_back({down, -lo[i]});
    }
    QMatrix eq_rows;
    QVec eq_rhs;
    for (const auto& e : equations_) {
        QVec n(dim_);
        for (int i = 0; i < dim_; ++i) n[i] = Rational(e.normal[i]);
        eq_rows.push_back(std::move(n));
        eq_rhs.push_back(e.offset);
    }
    int eq_rank = eq_rows.empty() ? 0 : linalg::rank(eq_rows);
    int free_dims = dim_ - eq_rank;

    auto feasible = [&](const QVec& p) {
        for (size_t i = 0; i < eq_rows.size(); ++i)
            if (linalg::dot(eq_rows[i], p) != eq_rhs[i]) return false;
        for (const auto& iq : ineqs)
            if (linalg::dot(iq.normal, p) > iq.rhs) return false;
        return true;
    };

    std::set<QVec> candidates;
    std::vector<int> pick(free_dims);
    std::function<void(int, int)> choose = [&](int start, int depth) {
        if (depth == free_dims) {
            QMatrix rows = eq_rows;
            QVec rhs = eq_rhs;
            for (int i = 0; i < free_dims; ++i) {
                rows.push_back(ineqs[pick[i]].normal);
                rhs.push_back(ineqs[pick[i]].rhs);
            }
            auto sol = linalg::solve_unique(rows, rhs);
            if (sol && feasible(*sol)) candidates.insert(*sol);
            return;
        }
        for (int i = start; i < static_cast<int>(ineqs.size()); ++i) {
            pick[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    if (free_dims == 0) {
        auto sol = linalg::solve_unique(eq_rows, eq_rhs);
        if (sol && feasible(*sol)) candidates.insert(*sol);
    } else {
        choose(0, 0);
    }
    if (candidates.empty()) return empty(dim_);
    return hull(dim_, std::vector<QVec>(candidates.begin(), candidates.end()));
}

Polytope Polytope::truncate_to_box(long d) const {
    if (d < 1) throw std::invalid_argument("truncation size must be >= 1");
    if (is_empty()) return *this;
    if (pi_degree() <= d) return *this;
    QVec lo(dim_, Rational(-d)), hi(dim_, Rational(d));
    return intersect_box(lo, hi);
}

std::string Polytope::describe() const {
    std::ostringstream out;
    if (is_empty()) {
        out << "empty(dim=" << dim_ << ")";
        return out.str();
    }
    out << "dim=" << dim_ << " adim=" << affine_dim_ << " vertices=[";
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out << ";";
        out << "(";
        for (int j = 0; j < dim_; ++j) {
            if (j) out << ",";
            out << to_string(vertices_[i][j]);
        }
        out << ")";
    }
    out << "]";
    return out.str();
}

// ------------------------------------------------------------ mixed volume

Rational mixed_volume(const std::vector<Polytope>& bodies) {
    if (bodies.empty()) throw std::invalid_argument("mixed volume of no bodies");
    const int n = bodies[0].dimension();
    if (static_cast<int>(bodies.size()) != n)
        throw std::invalid_argument("mixed volume needs exactly n bodies in dimension n");
    for (const auto& b : bodies) {
        if (b.dimension() != n) throw std::invalid_argument("mixed volume dimension mismatch");
        if (b.is_empty()) throw std::invalid_argument("mixed volume of an empty body");
    }

    // group equal bodies so repeated slots become dilations
    std::vector<std::pair<const Polytope*, unsigned>> groups;
    for (const auto& b : bodies) {
        bool found = false;
        for (auto& [rep, count] : groups)
            if (*rep == b) { ++count; found = true; break; }
        if (!found) groups.emplace_back(&b, 1);
    }

    Rational total = 0;
    std::vector<unsigned> counts(groups.size(), 0);
    while (true) {
        // advance odometer
        size_t i = 0;
        while (i < counts.size()) {
            if (counts[i] < groups[i].second) { ++counts[i]; break; }
            counts[i] = 0;
            ++i;
        }
        if (i == counts.size()) break;

        unsigned used = 0;
        Int weight = 1;
        std::optional<Polytope> sum;
        for (size_t j = 0; j < groups.size(); ++j) {
            if (counts[j] == 0) continue;
            used += counts[j];
            weight *= binomial(Int(groups[j].second), counts[j]);
            Polytope part = groups[j].first->scaled(Rational(counts[j]));
            sum = sum ? sum->minkowski_sum(part) : part;
        }
        Rational vol = sum->volume();
        if ((n - used) % 2 == 1) vol = -vol;
        total += Rational(weight) * vol;
    }
    return total / Rational(factorial(static_cast<unsigned>(n)));
}

Rational quermassintegral(const Polytope& a, int j) {
    const int n = a.dimension();
    if (j < 0 || j > n) throw std::invalid_argument("quermassintegral index out of range");
    std::vector<Polytope> bodies;
    Polytope sx = Polytope::simplex(n);
    for (int i = 0; i < n - j; ++i) bodies.push_back(a);
    for (int i = 0; i < j; ++i) bodies.push_back(sx);
    return mixed_volume(bodies);
}

Polytope newton_polytope(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("Newton polytope of the zero polynomial");
    return Polytope::hull_lattice(p.dimension(), p.support());
}

FieldPolytope field_polytope(const VectorField& xi) {
    const int n = xi.dimension();
    std::vector<Exponents> pts;
    for (int i = 0; i < n; ++i) {
        for (const auto& [exp, c] : xi.component(i).terms()) {
            Exponents e = exp;
            e[i] -= 1;
            pts.push_back(std::move(e));
        }
    }
    if (pts.empty()) throw std::domain_error("field polytope of the zero field");
    Polytope raw = Polytope::hull_lattice(n, pts);
    std::vector<long> shift(n, 0);
    for (int i = 0; i < n; ++i) {
        Rational mn = raw.vertices()[0][i];
        for (const auto& v : raw.vertices())
            if (v[i] < mn) mn = v[i];
        Int m = rational_floor(mn);
        if (m > 0) shift[i] = to_long(m);
    }
    QVec t(n);
    for (int i = 0; i < n; ++i) t[i] = Rational(-shift[i]);
    FieldPolytope out{raw.translated(t), shift, false};
    out.contains_origin = out.polytope.contains_origin();
    return out;
}

}  // namespace multbound
