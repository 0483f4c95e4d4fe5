#pragma once

#include <array>
#include <string>
#include <vector>

#include "ssdf/math.hpp"

namespace ssdf {

struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;

    bool empty() const { return triangles.empty(); }

    void bounds(Vec3& lo, Vec3& hi) const;
};

// Every directed edge must be matched by its reverse exactly once: the mesh is
// closed and consistently oriented. Multiple closed components are fine.
bool is_closed_mesh(const TriMesh& mesh, std::string* why = nullptr);

// Throws ValidationError when indices are out of range or the mesh is open.
void validate_closed_mesh(const TriMesh& mesh);

TriMesh load_obj(const std::string& path);
void save_obj(const TriMesh& mesh, const std::string& path);

// Analytic test solids, tessellated as closed triangle meshes.
TriMesh make_box_mesh(const Vec3& lo, const Vec3& hi);
TriMesh make_icosphere_mesh(const Vec3& center, float radius, int subdivisions);
// Capsule from a to b: cylinder wall plus two hemispherical caps.
TriMesh make_capsule_mesh(const Vec3& a, const Vec3& b, float radius, int segments = 24, int rings = 12);

// Appends `other`, reindexing its triangles. Components stay disjoint surfaces.
void append_mesh(TriMesh& dst, const TriMesh& other);

float point_triangle_distance_squared(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

// Exact signed distance by scanning every triangle, sign by signed ray
// crossings. O(#triangles) per call; test oracle and small-scale fallback.
float brute_force_signed_distance(const TriMesh& mesh, const Vec3& p);

} // namespace ssdf
