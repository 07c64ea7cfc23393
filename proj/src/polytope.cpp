#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/parallel.hpp"

namespace toric {

namespace {

RatVec rat_zero(int rank)
{
    return RatVec(rank, Rat(0));
}

int affine_rank(const std::vector<RatVec>& pts, const std::vector<int>& idx)
{
    if (idx.empty()) return -1;
    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        RatVec d(pts[idx[0]].size());
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = pts[idx[i]][j] - pts[idx[0]][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return static_cast<int>(rank_rational(RatMatrix::from_rows(diffs)));
}

Facet normalized_facet(const IntVec& normal, const Rat& offset)
{
    Int den = offset.get_den();
    IntVec n = vec_scaled(normal, den);
    Int off = offset.get_num();
    Int g = abs(off);
    for (const Int& x : n) g = gcd(g, x);
    if (g > 1) {
        for (Int& x : n) x /= g;
        off /= g;
    }
    return Facet{std::move(n), std::move(off)};
}

void next_combination_init(std::vector<int>& c, int k)
{
    c.resize(k);
    for (int i = 0; i < k; ++i) c[i] = i;
}

bool next_combination(std::vector<int>& c, int n)
{
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

Polytope Polytope::from_vertices(int rank, const std::vector<IntVec>& points)
{
    std::vector<RatVec> pts;
    pts.reserve(points.size());
    for (const IntVec& p : points) pts.push_back(to_rat(p));
    return from_points(rank, pts);
}

Polytope Polytope::from_points(int rank, const std::vector<RatVec>& points)
{
    Polytope p;
    p.build(rank, points);
    return p;
}

void Polytope::build(int rank, std::vector<RatVec> points)
{
    rank_ = rank;
    for (const RatVec& p : points)
        if (static_cast<int>(p.size()) != rank)
            throw dimension_error("point length does not match the stated rank");

    // drop exact duplicates, keeping first occurrences
    std::vector<RatVec> pts;
    for (RatVec& p : points)
        if (std::find(pts.begin(), pts.end(), p) == pts.end())
            pts.push_back(std::move(p));
    if (pts.empty()) throw degeneracy_error("no points given");

    std::vector<int> all(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
    int ar = affine_rank(pts, all);
    if (ar != rank)
        throw degeneracy_error("points span an affine hull of dimension " +
                               std::to_string(ar) + ", expected " + std::to_string(rank));

    // facet search over rank-subsets of points, deduplicating parallel supports
    std::set<std::pair<IntVec, Int>> seen;
    std::vector<int> comb;
    next_combination_init(comb, rank);
    int n = static_cast<int>(pts.size());
    do {
        std::vector<RatVec> diffs;
        for (int i = 1; i < rank; ++i) {
            RatVec d(rank);
            for (int j = 0; j < rank; ++j)
                d[j] = pts[comb[i]][j] - pts[comb[0]][j];
            diffs.push_back(std::move(d));
        }
        RatMatrix dm = RatMatrix::from_rows(diffs);
        if (rank > 1 && static_cast<int>(rank_rational(dm)) != rank - 1) continue;
        auto ns = nullspace(rank > 1 ? dm : RatMatrix(0, 1));
        if (ns.size() != 1) continue;
        RatVec nrm = to_rat(ns[0]);
        Rat off = pairing(nrm, pts[comb[0]]);

        bool below = false, above = false;
        for (const RatVec& q : pts) {
            Rat v = pairing(nrm, q) - off;
            if (v > 0) above = true;
            if (v < 0) below = true;
            if (above && below) break;
        }
        if (above && below) continue;
        Facet f = below ? normalized_facet(vec_neg(ns[0]), -off)
                        : normalized_facet(ns[0], off);
        if (seen.insert({f.normal, f.offset}).second) facets_.push_back(std::move(f));
    } while (next_combination(comb, n));

    // extreme points: the active facet normals span the whole space
    for (const RatVec& q : pts) {
        std::vector<IntVec> act;
        for (const Facet& f : facets_) {
            Rat v = pairing(to_rat(f.normal), q) - Rat(f.offset);
            if (v == 0) act.push_back(f.normal);
        }
        if (!act.empty() &&
            static_cast<int>(rank_int(IntMatrix::from_rows(act))) == rank)
            verts_.push_back(q);
    }
    if (verts_.empty()) throw internal_error("hull produced no vertices");

    for (const Facet& f : facets_) {
        int cnt = 0;
        for (const RatVec& v : verts_)
            if (pairing(to_rat(f.normal), v) == Rat(f.offset)) ++cnt;
        if (cnt < rank)
            throw internal_error("facet supported by fewer than rank vertices");
    }

    build_face_lattice();
}

std::vector<int> Polytope::active_facets_at(const RatVec& p) const
{
    std::vector<int> act;
    for (std::size_t i = 0; i < facets_.size(); ++i)
        if (pairing(to_rat(facets_[i].normal), p) == Rat(facets_[i].offset))
            act.push_back(static_cast<int>(i));
    return act;
}

void Polytope::build_face_lattice()
{
    faces_by_dim_.assign(rank_, {});

    auto face_of = [&](std::vector<int> vidx) {
        Face f;
        f.vertex_indices = std::move(vidx);
        f.dim = affine_rank(verts_, f.vertex_indices);
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            bool on = true;
            for (int v : f.vertex_indices)
                if (pairing(to_rat(facets_[i].normal), verts_[v]) != Rat(facets_[i].offset)) {
                    on = false;
                    break;
                }
            if (on) f.active_facets.push_back(static_cast<int>(i));
        }
        return f;
    };

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<std::vector<int>> facet_verts(facets_.size());
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        for (std::size_t v = 0; v < verts_.size(); ++v)
            if (pairing(to_rat(facets_[i].normal), verts_[v]) == Rat(facets_[i].offset))
                facet_verts[i].push_back(static_cast<int>(v));
        if (seen.insert(facet_verts[i]).second) queue.push_back(facet_verts[i]);
    }

    // proper faces are exactly the iterated intersections of facets
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> cur = queue[head];
        for (const auto& fv : facet_verts) {
            std::vector<int> inter;
            std::set_intersection(cur.begin(), cur.end(), fv.begin(), fv.end(),
                                  std::back_inserter(inter));
            if (inter.empty() || inter == cur) continue;
            if (seen.insert(inter).second) queue.push_back(std::move(inter));
        }
    }

    for (const auto& vidx : seen) {
        Face f = face_of(vidx);
        if (f.dim >= 0 && f.dim < rank_) faces_by_dim_[f.dim].push_back(std::move(f));
    }
    for (auto& fs : faces_by_dim_)
        std::sort(fs.begin(), fs.end(), [](const Face& a, const Face& b) {
            return a.vertex_indices < b.vertex_indices;
        });
}

bool Polytope::vertices_integral() const
{
    return std::all_of(verts_.begin(), verts_.end(),
                       [](const RatVec& v) { return is_integral(v); });
}

IntVec Polytope::lattice_vertex(int idx) const
{
    return to_int(verts_.at(idx));
}

bool Polytope::contains(const RatVec& p) const
{
    for (const Facet& f : facets_)
        if (pairing(to_rat(f.normal), p) < Rat(f.offset)) return false;
    return true;
}

bool Polytope::strictly_contains(const RatVec& p) const
{
    for (const Facet& f : facets_)
        if (pairing(to_rat(f.normal), p) <= Rat(f.offset)) return false;
    return true;
}

bool Polytope::origin_interior() const
{
    return strictly_contains(rat_zero(rank_));
}

Polytope Polytope::dual() const
{
    if (!origin_interior())
        throw degeneracy_error("dual polytope is unbounded: origin is not interior");
    std::vector<RatVec> dv;
    for (const Facet& f : facets_) {
        RatVec w(rank_);
        for (int j = 0; j < rank_; ++j) w[j] = Rat(f.normal[j]) / Rat(-f.offset);
        dv.push_back(std::move(w));
    }
    return from_points(rank_, dv);
}

const std::vector<Face>& Polytope::faces(int dim) const
{
    if (dim < 0 || dim >= rank_)
        throw input_error("face dimension " + std::to_string(dim) +
                          " out of range [0, " + std::to_string(rank_ - 1) + "]");
    return faces_by_dim_[dim];
}

const Face& Polytope::face_by_vertices(const std::vector<int>& sorted_idx) const
{
    for (const auto& fs : faces_by_dim_)
        for (const Face& f : fs)
            if (f.vertex_indices == sorted_idx) return f;
    throw input_error("no face with the given vertex set");
}

namespace {

struct BoxScan {
    const Polytope& p;
    std::vector<Int> lo, hi;

    explicit BoxScan(const Polytope& poly) : p(poly)
    {
        int d = p.rank();
        lo.assign(d, 0);
        hi.assign(d, 0);
        for (int j = 0; j < d; ++j) {
            Rat mn = p.vertices()[0][j], mx = mn;
            for (const RatVec& v : p.vertices()) {
                if (v[j] < mn) mn = v[j];
                if (v[j] > mx) mx = v[j];
            }
            Int f;
            mpz_cdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
            lo[j] = f;
            mpz_fdiv_q(f.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
            hi[j] = f;
        }
    }

    // partial[f] = offset_f - sum over fixed coords of normal_f[j] * x_j;
    // remaining coords must make up at least partial[f].
    bool feasible(const std::vector<Int>& partial, int axis) const
    {
        const auto& facets = p.facets();
        for (std::size_t f = 0; f < facets.size(); ++f) {
            Int best = 0;
            for (int j = axis; j < p.rank(); ++j) {
                const Int& c = facets[f].normal[j];
                if (c > 0)
                    best += c * hi[j];
                else if (c < 0)
                    best += c * lo[j];
            }
            if (best < partial[f]) return false;
        }
        return true;
    }

    void recurse(int axis, IntVec& x, std::vector<Int>& partial,
                 std::vector<IntVec>& out) const
    {
        const auto& facets = p.facets();
        int d = p.rank();
        if (axis == d) {
            for (std::size_t f = 0; f < facets.size(); ++f)
                if (partial[f] > 0) return;
            out.push_back(x);
            return;
        }
        Int a = lo[axis], b = hi[axis];
        if (axis == d - 1) {
            // exact interval from each facet inequality
            for (std::size_t f = 0; f < facets.size(); ++f) {
                const Int& c = facets[f].normal[axis];
                if (c == 0) {
                    if (partial[f] > 0) return;
                } else if (c > 0) {
                    Int bound;
                    mpz_cdiv_q(bound.get_mpz_t(), partial[f].get_mpz_t(), c.get_mpz_t());
                    if (bound > a) a = bound;
                } else {
                    Int bound;
                    mpz_fdiv_q(bound.get_mpz_t(), partial[f].get_mpz_t(), c.get_mpz_t());
                    if (bound < b) b = bound;
                }
            }
        }
        for (Int v = a; v <= b; ++v) {
            x[axis] = v;
            std::vector<Int> next = partial;
            for (std::size_t f = 0; f < facets.size(); ++f)
                next[f] -= facets[f].normal[axis] * v;
            if (!feasible(next, axis + 1)) continue;
            recurse(axis + 1, x, next, out);
        }
    }

    std::vector<Int> initial_partial() const
    {
        std::vector<Int> partial;
        for (const Facet& f : p.facets()) partial.push_back(f.offset);
        return partial;
    }
};

} // namespace

std::vector<IntVec> lattice_points_serial(const Polytope& p)
{
    BoxScan scan(p);
    std::vector<IntVec> out;
    IntVec x(p.rank());
    auto partial = scan.initial_partial();
    if (scan.feasible(partial, 0)) scan.recurse(0, x, partial, out);
    return out;
}

std::vector<IntVec> lattice_points_parallel(const Polytope& p)
{
    if (p.rank() == 1) return lattice_points_serial(p);
    BoxScan scan(p);
    auto base = scan.initial_partial();
    if (!scan.feasible(base, 0)) return {};

    std::vector<Int> firsts;
    for (Int v = scan.lo[0]; v <= scan.hi[0]; ++v) firsts.push_back(v);
    std::vector<std::vector<IntVec>> slots(firsts.size());
    parallel_for(firsts.size(), [&](std::size_t i) {
        IntVec x(p.rank());
        x[0] = firsts[i];
        std::vector<Int> partial = base;
        for (std::size_t f = 0; f < p.facets().size(); ++f)
            partial[f] -= p.facets()[f].normal[0] * firsts[i];
        if (scan.feasible(partial, 1)) scan.recurse(1, x, partial, slots[i]);
    });

    std::vector<IntVec> out;
    for (auto& s : slots)
        out.insert(out.end(), std::make_move_iterator(s.begin()),
                   std::make_move_iterator(s.end()));
    return out;
}

std::vector<IntVec> Polytope::lattice_points() const
{
    return jobs() > 1 ? lattice_points_parallel(*this) : lattice_points_serial(*this);
}

std::vector<IntVec> Polytope::interior_lattice_points() const
{
    std::vector<IntVec> out;
    for (IntVec& q : lattice_points())
        if (strictly_contains(to_rat(q))) out.push_back(std::move(q));
    return out;
}

std::vector<IntVec> Polytope::interior_lattice_points(const Face& f) const
{
    std::vector<IntVec> out;
    for (IntVec& q : lattice_points())
        if (active_facets_at(to_rat(q)) == f.active_facets) out.push_back(std::move(q));
    return out;
}

std::vector<IntVec> Polytope::edge_points_ordered(const Face& edge) const
{
    if (edge.dim != 1 || edge.vertex_indices.size() != 2)
        throw input_error("edge_points_ordered requires a 1-dimensional face");
    const RatVec& ra = verts_[edge.vertex_indices[0]];
    const RatVec& rb = verts_[edge.vertex_indices[1]];
    if (!is_integral(ra) || !is_integral(rb))
        throw input_error("edge endpoints are not lattice points");
    IntVec a = to_int(ra), b = to_int(rb);
    if (lex_less(b, a)) std::swap(a, b);
    IntVec diff = vec_sub(b, a);
    Int g = 0;
    for (const Int& x : diff) g = gcd(g, x);
    IntVec step(diff.size());
    for (std::size_t j = 0; j < diff.size(); ++j) step[j] = diff[j] / g;
    std::vector<IntVec> out;
    IntVec cur = a;
    for (Int i = 0; i <= g; ++i) {
        out.push_back(cur);
        if (i < g) cur = vec_add(cur, step);
    }
    return out;
}

bool is_reflexive(const Polytope& p, std::string* diagnostic)
{
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    if (!p.origin_interior()) return fail("origin is not strictly interior");
    if (!p.vertices_integral()) return fail("a vertex is not a lattice point");
    Polytope d = p.dual();
    if (!d.vertices_integral()) return fail("a dual vertex is not a lattice point");
    auto inner = p.interior_lattice_points();
    if (inner.size() != 1 || !is_zero(inner[0]))
        return fail("interior lattice points other than the origin");
    if (diagnostic) diagnostic->clear();
    return true;
}

Face dual_face(const Polytope& p, const Face& f, const Polytope& dual)
{
    if (!is_reflexive(p))
        throw hypothesis_error("dual_face requires a reflexive polytope");
    std::vector<int> idx;
    for (std::size_t w = 0; w < dual.vertices().size(); ++w) {
        bool all = true;
        for (int v : f.vertex_indices)
            if (pairing(p.vertices()[v], dual.vertices()[w]) != Rat(-1)) {
                all = false;
                break;
            }
        if (all) idx.push_back(static_cast<int>(w));
    }
    const Face& g = dual.face_by_vertices(idx);
    if (f.dim + g.dim != p.rank() - 1)
        throw internal_error("dual face dimensions are not complementary");
    return g;
}

Face dual_face(const Polytope& p, const Face& f)
{
    return dual_face(p, f, p.dual());
}

} // namespace toric
