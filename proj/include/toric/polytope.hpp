#pragma once

#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Supporting halfspace <normal, x> >= offset with (normal, offset) integral
// and jointly primitive.
struct Facet {
    IntVec normal;
    Int offset;
    bool operator==(const Facet&) const = default;
};

// A proper face, identified by its sorted vertex index set.
struct Face {
    std::vector<int> vertex_indices;
    int dim = -1;
    std::vector<int> active_facets; // all facets containing the face
};

// Rational polytope, full-dimensional in its lattice. Immutable; the facet
// list and the face lattice are computed eagerly at construction.
class Polytope {
public:
    static Polytope from_vertices(int rank, const std::vector<IntVec>& points);
    static Polytope from_points(int rank, const std::vector<RatVec>& points);

    int rank() const { return rank_; }
    const std::vector<RatVec>& vertices() const { return verts_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool vertices_integral() const;
    IntVec lattice_vertex(int idx) const;

    bool contains(const RatVec& p) const;
    bool strictly_contains(const RatVec& p) const;
    bool origin_interior() const;

    // {n : <m, n> >= -1 for all m in this polytope}. Requires the origin in
    // the interior, otherwise the dual is unbounded.
    Polytope dual() const;

    // All proper faces of the given dimension (0 <= dim <= rank-1).
    const std::vector<Face>& faces(int dim) const;

    // Face with the given sorted vertex index set; throws if absent.
    const Face& face_by_vertices(const std::vector<int>& sorted_idx) const;

    // All lattice points, sorted lexicographically.
    std::vector<IntVec> lattice_points() const;
    // Lattice points strictly inside the polytope.
    std::vector<IntVec> interior_lattice_points() const;
    // Lattice points in the relative interior of a face. A vertex counts as
    // its own relative interior.
    std::vector<IntVec> interior_lattice_points(const Face& f) const;

    // Lattice points on an edge with integral endpoints, walking from the
    // lexicographically smaller endpoint; consecutive differences are equal.
    std::vector<IntVec> edge_points_ordered(const Face& edge) const;

private:
    Polytope() = default;
    void build(int rank, std::vector<RatVec> points);
    void build_face_lattice();
    std::vector<int> active_facets_at(const RatVec& p) const;

    int rank_ = 0;
    std::vector<RatVec> verts_;
    std::vector<Facet> facets_;
    std::vector<std::vector<Face>> faces_by_dim_;
};

// Enumeration kernels behind Polytope::lattice_points(). The serial walk is
// the reference; the OpenMP variant fans out over the first axis and returns
// the identical, lexicographically sorted list.
std::vector<IntVec> lattice_points_serial(const Polytope& p);
std::vector<IntVec> lattice_points_parallel(const Polytope& p);

// A reflexive polytope is integral, has the origin as its unique interior
// lattice point, and has an integral dual.
bool is_reflexive(const Polytope& p, std::string* diagnostic = nullptr);

// For reflexive p and a proper face f, the dual face
// {n in dual : <m, n> = -1 for all m in f}; dims are complementary.
Face dual_face(const Polytope& p, const Face& f, const Polytope& dual);
Face dual_face(const Polytope& p, const Face& f);

} // namespace toric
