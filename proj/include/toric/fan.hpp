#pragma once

#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/polytope.hpp"

namespace toric {

// Simplicial cone, stored as sorted indices into the parent fan's ray table.
struct Cone {
    std::vector<int> rays;
    int dim() const { return static_cast<int>(rays.size()); }
    bool operator==(const Cone&) const = default;
};

// Fan given by primitive ray generators and its maximal cones. Faces are
// implied; only maximal cones are stored.
class Fan {
public:
    Fan() = default;
    Fan(int rank, std::vector<IntVec> rays, std::vector<Cone> max_cones);

    int rank() const { return rank_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<Cone>& max_cones() const { return max_cones_; }

    std::vector<IntVec> cone_generators(const Cone& c) const;
    // Index of a ray vector, or -1.
    int ray_index(const IntVec& r) const;
    // Whether x lies in the cone, by exact solve in the generators.
    bool cone_contains(const Cone& c, const RatVec& x) const;
    // Barycentric coordinates of x in the simplicial cone, when x lies in
    // the cone's linear span.
    std::optional<RatVec> cone_coordinates(const Cone& c, const RatVec& x) const;

private:
    int rank_ = 0;
    std::vector<IntVec> rays_;
    std::vector<Cone> max_cones_;
};

struct CheckEntry {
    std::string check;
    std::string status; // "pass" or "fail"
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckEntry> entries;
    bool pass() const;
    std::string summary() const;
};

// Exact H-representation of a simplicial cone: equations cutting its linear
// span plus one inequality per generator (dual-basis functionals).
struct ConeHRep {
    std::vector<IntVec> equations;
    std::vector<IntVec> inequalities;
};
ConeHRep cone_h_rep(const Fan& f, const Cone& c);

// Extreme rays of { x : eq . x = 0, ineq . x >= 0 }, a pointed cone, by the
// incremental double description method seeded with a basis of the solution
// space of the equations. Returns primitive generators, sorted.
std::vector<IntVec> extreme_rays(const std::vector<IntVec>& equations,
                                 const std::vector<IntVec>& inequalities,
                                 std::size_t dim);

// Extreme rays of the intersection of two cones of the same fan.
std::vector<IntVec> cone_intersection(const Fan& f, const Cone& a, const Cone& b);

// tau is a face of sigma: its rays are a subset and some supporting
// functional vanishes on tau and is positive on the rest of sigma.
bool is_face(const Fan& f, const Cone& tau, const Cone& sigma);

// Fan axioms, checked exactly: simpliciality, primitive distinct rays, and
// pairwise intersections being common faces. Pair checks run in parallel when
// jobs() > 1; the report order is deterministic either way.
ValidationReport validate_fan(const Fan& f);
ValidationReport validate_fan_serial(const Fan& f);
ValidationReport validate_fan_parallel(const Fan& f);

// Complete fan over the facets of a lattice polytope with the origin
// interior. Every facet must be a simplex.
Fan face_fan(const Polytope& p);

// Stellar subdivision at a primitive ray in the support of the fan.
Fan star_subdivide(const Fan& f, const IntVec& r);

// Every facet of a maximal cone is shared by exactly two maximal cones.
bool is_complete(const Fan& f, std::string* diagnostic = nullptr);

} // namespace toric
