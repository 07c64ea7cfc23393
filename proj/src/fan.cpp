#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "toric/parallel.hpp"

namespace toric {

Fan::Fan(int rank, std::vector<IntVec> rays, std::vector<Cone> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones))
{
    for (const IntVec& r : rays_)
        if (static_cast<int>(r.size()) != rank_)
            throw dimension_error("ray length does not match fan rank");
    for (Cone& c : max_cones_) {
        std::sort(c.rays.begin(), c.rays.end());
        for (int i : c.rays)
            if (i < 0 || i >= static_cast<int>(rays_.size()))
                throw input_error("cone refers to a ray index out of range");
    }
}

std::vector<IntVec> Fan::cone_generators(const Cone& c) const
{
    std::vector<IntVec> g;
    g.reserve(c.rays.size());
    for (int i : c.rays) g.push_back(rays_[i]);
    return g;
}

int Fan::ray_index(const IntVec& r) const
{
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i] == r) return static_cast<int>(i);
    return -1;
}

std::optional<RatVec> Fan::cone_coordinates(const Cone& c, const RatVec& x) const
{
    // columns are the generators; solve G^T c = x
    RatMatrix m(rank_, c.rays.size());
    for (std::size_t j = 0; j < c.rays.size(); ++j)
        for (int i = 0; i < rank_; ++i) m.at(i, j) = Rat(rays_[c.rays[j]][i]);
    auto sol = solve(m, x);
    if (!sol) return std::nullopt;
    // solve() gives some solution; for independent generators it is the one
    for (std::size_t j = 0; j < c.rays.size(); ++j) {
        RatVec recon(rank_, Rat(0));
        // verify exactly (guards against dependent-generator misuse)
    }
    return sol;
}

bool Fan::cone_contains(const Cone& c, const RatVec& x) const
{
    auto coords = cone_coordinates(c, x);
    if (!coords) return false;
    // residual check: the solve can return a least-structure solution only
    // when consistent, so recompute G^T c and compare with x
    RatVec recon(rank_, Rat(0));
    for (std::size_t j = 0; j < c.rays.size(); ++j)
        for (int i = 0; i < rank_; ++i)
            recon[i] += (*coords)[j] * Rat(rays_[c.rays[j]][i]);
    if (recon != x) return false;
    return std::all_of(coords->begin(), coords->end(),
                       [](const Rat& v) { return v >= 0; });
}

bool ValidationReport::pass() const
{
    return std::all_of(entries.begin(), entries.end(),
                       [](const CheckEntry& e) { return e.status == "pass"; });
}

std::string ValidationReport::summary() const
{
    std::ostringstream os;
    for (const CheckEntry& e : entries) {
        os << e.check << ": " << e.status;
        if (!e.detail.empty()) os << " (" << e.detail << ")";
        os << '\n';
    }
    return os.str();
}

ConeHRep cone_h_rep(const Fan& f, const Cone& c)
{
    ConeHRep h;
    std::vector<IntVec> gens = f.cone_generators(c);
    IntMatrix g = IntMatrix::from_rows(gens);
    // functionals vanishing on the span
    h.equations = nullspace(g);
    // dual-basis functionals: w_i with <w_i, g_j> = delta_ij
    std::size_t r = gens.size();
    for (std::size_t i = 0; i < r; ++i) {
        IntVec rhs(r, Int(0));
        rhs[i] = 1;
        auto w = solve(g, rhs);
        if (!w) throw internal_error("cone generators are linearly dependent");
        h.inequalities.push_back(primitive_direction(*w));
    }
    return h;
}

namespace {

Int dot(const IntVec& a, const IntVec& b)
{
    return pairing(a, b);
}

// Active-set adjacency test for the double description step: two rays are
// adjacent when no third ray is active on all constraints active at both.
bool dd_adjacent(const std::vector<IntVec>& rays,
                 const std::vector<std::vector<int>>& active,
                 std::size_t a, std::size_t b)
{
    std::vector<int> common;
    std::set_intersection(active[a].begin(), active[a].end(),
                          active[b].begin(), active[b].end(),
                          std::back_inserter(common));
    for (std::size_t r = 0; r < rays.size(); ++r) {
        if (r == a || r == b) continue;
        if (std::includes(active[r].begin(), active[r].end(),
                          common.begin(), common.end()))
            return false;
    }
    return true;
}

} // namespace

std::vector<IntVec> extreme_rays(const std::vector<IntVec>& equations,
                                 const std::vector<IntVec>& inequalities,
                                 std::size_t dim)
{
    // seed: a basis of the solution space of the equations
    std::vector<IntVec> lineality;
    if (equations.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            IntVec e(dim, Int(0));
            e[i] = 1;
            lineality.push_back(std::move(e));
        }
    } else {
        lineality = nullspace(IntMatrix::from_rows(equations));
    }

    std::vector<IntVec> rays;
    std::vector<std::vector<int>> active; // indices of processed tight inequalities

    for (std::size_t w = 0; w < inequalities.size(); ++w) {
        const IntVec& ineq = inequalities[w];

        // pivot a lineality generator onto the positive side if possible
        std::size_t piv = lineality.size();
        for (std::size_t l = 0; l < lineality.size(); ++l)
            if (dot(ineq, lineality[l]) != 0) {
                piv = l;
                break;
            }
        if (piv < lineality.size()) {
            IntVec l0 = lineality[piv];
            Int d0 = dot(ineq, l0);
            if (d0 < 0) {
                l0 = vec_neg(l0);
                d0 = -d0;
            }
            std::vector<IntVec> new_lin;
            for (std::size_t l = 0; l < lineality.size(); ++l) {
                if (l == piv) continue;
                Int dl = dot(ineq, lineality[l]);
                // project onto the hyperplane of the new inequality
                new_lin.push_back(primitive(
                    vec_sub(vec_scaled(lineality[l], d0), vec_scaled(l0, dl))));
            }
            for (std::size_t r = 0; r < rays.size(); ++r) {
                Int dr = dot(ineq, rays[r]);
                if (dr != 0)
                    rays[r] = primitive(
                        vec_sub(vec_scaled(rays[r], d0), vec_scaled(l0, dr)));
            }
            for (auto& a : active) a.push_back(static_cast<int>(w));
            rays.push_back(l0);
            active.push_back({});
            lineality = std::move(new_lin);
            continue;
        }

        // ordinary double description step on the pointed part
        std::vector<std::size_t> pos, neg, zero;
        std::vector<Int> vals(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            vals[r] = dot(ineq, rays[r]);
            if (vals[r] > 0)
                pos.push_back(r);
            else if (vals[r] < 0)
                neg.push_back(r);
            else
                zero.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r : zero) active[r].push_back(static_cast<int>(w));
            continue;
        }
        std::vector<IntVec> next;
        std::vector<std::vector<int>> next_active;
        for (std::size_t r : pos) {
            next.push_back(rays[r]);
            next_active.push_back(active[r]);
        }
        for (std::size_t r : zero) {
            next.push_back(rays[r]);
            auto a = active[r];
            a.push_back(static_cast<int>(w));
            next_active.push_back(std::move(a));
        }
        for (std::size_t a : pos)
            for (std::size_t b : neg) {
                if (!dd_adjacent(rays, active, a, b)) continue;
                IntVec combo = primitive(vec_sub(vec_scaled(rays[b], vals[a]),
                                                 vec_scaled(rays[a], vals[b])));
                std::vector<int> act;
                std::set_intersection(active[a].begin(), active[a].end(),
                                      active[b].begin(), active[b].end(),
                                      std::back_inserter(act));
                act.push_back(static_cast<int>(w));
                next.push_back(std::move(combo));
                next_active.push_back(std::move(act));
            }
        rays = std::move(next);
        active = std::move(next_active);
    }

    if (!lineality.empty())
        throw internal_error("cone intersection is not pointed");
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

std::vector<IntVec> cone_intersection(const Fan& f, const Cone& a, const Cone& b)
{
    ConeHRep ha = cone_h_rep(f, a);
    ConeHRep hb = cone_h_rep(f, b);
    std::vector<IntVec> eqs = ha.equations;
    eqs.insert(eqs.end(), hb.equations.begin(), hb.equations.end());
    std::vector<IntVec> ineqs = ha.inequalities;
    ineqs.insert(ineqs.end(), hb.inequalities.begin(), hb.inequalities.end());
    return extreme_rays(eqs, ineqs, f.rank());
}

bool is_face(const Fan& f, const Cone& tau, const Cone& sigma)
{
    if (!std::includes(sigma.rays.begin(), sigma.rays.end(),
                       tau.rays.begin(), tau.rays.end()))
        return false;
    // supporting functional: zero on tau's generators, one on the rest
    std::vector<IntVec> gens = f.cone_generators(sigma);
    IntMatrix g = IntMatrix::from_rows(gens);
    IntVec rhs(sigma.rays.size(), Int(0));
    for (std::size_t j = 0; j < sigma.rays.size(); ++j)
        if (!std::binary_search(tau.rays.begin(), tau.rays.end(), sigma.rays[j]))
            rhs[j] = 1;
    return solve(g, rhs).has_value();
}

namespace {

CheckEntry pair_check(const Fan& f, std::size_t i, std::size_t j)
{
    const Cone& a = f.max_cones()[i];
    const Cone& b = f.max_cones()[j];
    std::vector<int> common;
    std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(),
                          b.rays.end(), std::back_inserter(common));
    std::vector<IntVec> expected;
    for (int r : common) expected.push_back(f.rays()[r]);
    std::sort(expected.begin(), expected.end(), lex_less);

    std::string name =
        "intersection(" + std::to_string(i) + "," + std::to_string(j) + ")";
    try {
        std::vector<IntVec> got = cone_intersection(f, a, b);
        if (got != expected) {
            std::ostringstream os;
            os << "cones " << i << " and " << j
               << " meet outside their common face; extreme rays:";
            for (const IntVec& r : got) os << ' ' << show(r);
            return {name, "fail", os.str()};
        }
        Cone shared{common};
        if (!is_face(f, shared, a) || !is_face(f, shared, b))
            return {name, "fail",
                    "common rays do not span a face of both cones"};
        return {name, "pass", ""};
    } catch (const error& e) {
        return {name, "fail", e.what()};
    }
}

} // namespace

static ValidationReport validate_fan_impl(const Fan& f, bool parallel)
{
    ValidationReport rep;

    for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
        const Cone& c = f.max_cones()[i];
        IntMatrix g = IntMatrix::from_rows(f.cone_generators(c));
        bool ok = rank_int(g) == c.rays.size();
        rep.entries.push_back({"simplicial(" + std::to_string(i) + ")",
                               ok ? "pass" : "fail",
                               ok ? "" : "generators are linearly dependent"});
    }

    {
        bool ok = true;
        std::string detail;
        std::set<IntVec> seen;
        for (std::size_t i = 0; i < f.rays().size(); ++i) {
            const IntVec& r = f.rays()[i];
            if (is_zero(r) || primitive(r) != r) {
                ok = false;
                detail = "ray " + std::to_string(i) + " = " + show(r) +
                         " is not primitive";
                break;
            }
            if (!seen.insert(r).second) {
                ok = false;
                detail = "ray " + std::to_string(i) + " = " + show(r) +
                         " is repeated";
                break;
            }
        }
        rep.entries.push_back({"rays_primitive_distinct", ok ? "pass" : "fail", detail});
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < f.max_cones().size(); ++i)
        for (std::size_t j = i + 1; j < f.max_cones().size(); ++j)
            pairs.emplace_back(i, j);
    std::vector<CheckEntry> pair_entries(pairs.size());
    if (parallel) {
        parallel_for(pairs.size(), [&](std::size_t k) {
            pair_entries[k] = pair_check(f, pairs[k].first, pairs[k].second);
        });
    } else {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            pair_entries[k] = pair_check(f, pairs[k].first, pairs[k].second);
    }
    for (CheckEntry& e : pair_entries) rep.entries.push_back(std::move(e));
    return rep;
}

ValidationReport validate_fan_serial(const Fan& f)
{
    return validate_fan_impl(f, false);
}

ValidationReport validate_fan_parallel(const Fan& f)
{
    return validate_fan_impl(f, true);
}

ValidationReport validate_fan(const Fan& f)
{
    return validate_fan_impl(f, jobs() > 1);
}

Fan face_fan(const Polytope& p)
{
    if (!p.vertices_integral())
        throw input_error("face fan requires a lattice polytope");
    if (!p.origin_interior())
        throw input_error("face fan requires the origin in the interior");

    std::vector<IntVec> rays;
    auto ray_of = [&](const IntVec& v) {
        IntVec r = primitive(v);
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (rays[i] == r) return static_cast<int>(i);
        rays.push_back(r);
        return static_cast<int>(rays.size() - 1);
    };

    std::vector<std::vector<int>> facet_vertex_sets;
    {
        const auto& facets = p.faces(p.rank() - 1);
        for (const Face& f : facets) facet_vertex_sets.push_back(f.vertex_indices);
    }

    // assign ray indices in vertex order first so the fan follows the input
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
        ray_of(to_int(p.vertices()[v]));

    std::vector<Cone> cones;
    for (std::size_t i = 0; i < facet_vertex_sets.size(); ++i) {
        const auto& vs = facet_vertex_sets[i];
        if (static_cast<int>(vs.size()) != p.rank())
            throw input_error("facet " + std::to_string(i) + " with vertex set size " +
                              std::to_string(vs.size()) + " is not a simplex");
        Cone c;
        for (int v : vs) c.rays.push_back(ray_of(to_int(p.vertices()[v])));
        std::sort(c.rays.begin(), c.rays.end());
        IntMatrix g(p.rank(), p.rank());
        for (int a = 0; a < p.rank(); ++a)
            for (int b = 0; b < p.rank(); ++b) g.at(a, b) = rays[c.rays[a]][b];
        if (rank_int(g) != static_cast<std::size_t>(p.rank()))
            throw input_error("facet " + std::to_string(i) + " is not a simplex");
        cones.push_back(std::move(c));
    }
    return Fan(p.rank(), std::move(rays), std::move(cones));
}

Fan star_subdivide(const Fan& f, const IntVec& r)
{
    if (is_zero(r) || primitive(r) != r)
        throw input_error("subdivision ray must be primitive");
    RatVec rr = to_rat(r);

    std::vector<IntVec> rays = f.rays();
    int ridx = f.ray_index(r);
    bool in_support = false;

    std::vector<Cone> cones;
    for (const Cone& c : f.max_cones()) {
        auto coords = f.cone_coordinates(c, rr);
        bool inside = false;
        if (coords) {
            // the solve gives span coordinates only when r lies in the span
            RatVec recon(f.rank(), Rat(0));
            for (std::size_t j = 0; j < c.rays.size(); ++j)
                for (int i = 0; i < f.rank(); ++i)
                    recon[i] += (*coords)[j] * Rat(f.rays()[c.rays[j]][i]);
            inside = recon == rr &&
                     std::all_of(coords->begin(), coords->end(),
                                 [](const Rat& v) { return v >= 0; });
        }
        if (!inside) {
            cones.push_back(c);
            continue;
        }
        in_support = true;
        if (ridx < 0) {
            rays.push_back(r);
            ridx = static_cast<int>(rays.size()) - 1;
        }
        for (std::size_t j = 0; j < c.rays.size(); ++j) {
            if ((*coords)[j] <= 0) continue; // facet containing r stays put
            Cone child;
            for (std::size_t l = 0; l < c.rays.size(); ++l)
                if (l != j) child.rays.push_back(c.rays[l]);
            if (c.rays[j] != ridx) child.rays.push_back(ridx);
            else child.rays.push_back(c.rays[j]);
            std::sort(child.rays.begin(), child.rays.end());
            if (std::find(cones.begin(), cones.end(), child) == cones.end())
                cones.push_back(std::move(child));
        }
    }
    if (!in_support)
        throw input_error("ray " + show(r) + " is not in the support of the fan");
    return Fan(f.rank(), std::move(rays), std::move(cones));
}

bool is_complete(const Fan& f, std::string* diagnostic)
{
    for (const Cone& c : f.max_cones())
        if (c.dim() != f.rank()) {
            if (diagnostic)
                *diagnostic = "fan is not pure: a maximal cone has dimension " +
                              std::to_string(c.dim());
            return false;
        }
    std::map<std::vector<int>, int> count;
    for (const Cone& c : f.max_cones())
        for (std::size_t j = 0; j < c.rays.size(); ++j) {
            std::vector<int> facet;
            for (std::size_t l = 0; l < c.rays.size(); ++l)
                if (l != j) facet.push_back(c.rays[l]);
            ++count[facet];
        }
    for (const auto& [facet, n] : count)
        if (n != 2) {
            if (diagnostic) {
                std::ostringstream os;
                os << "facet {";
                for (std::size_t i = 0; i < facet.size(); ++i)
                    os << (i ? "," : "") << facet[i];
                os << "} lies in " << n << " maximal cones";
                *diagnostic = os.str();
            }
            return false;
        }
    if (diagnostic) diagnostic->clear();
    return true;
}

} // namespace toric
