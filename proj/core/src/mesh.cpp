#include "ssdf/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "ssdf/util.hpp"

namespace ssdf {

void TriMesh::bounds(Vec3& lo, Vec3& hi) const {
    lo = Vec3(std::numeric_limits<float>::max(), std::numeric_limits<float>::max(),
              std::numeric_limits<float>::max());
    hi = -lo;
    for (const Vec3& v : vertices) {
        lo = min(lo, v);
        hi = max(hi, v);
    }
}

bool is_closed_mesh(const TriMesh& mesh, std::string* why) {
    std::map<std::pair<int, int>, int> edges;
    for (const auto& t : mesh.triangles) {
        for (int e = 0; e < 3; ++e) {
            int a = t[e], b = t[(e + 1) % 3];
            if (a == b) {
                if (why) *why = "degenerate edge in triangle";
                return false;
            }
            edges[{a, b}] += 1;
        }
    }
    for (const auto& [edge, count] : edges) {
        auto rev = edges.find({edge.second, edge.first});
        if (count != 1 || rev == edges.end() || rev->second != 1) {
            if (why) {
                std::ostringstream os;
                os << "edge (" << edge.first << "," << edge.second
                   << ") is not matched by exactly one reverse edge";
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

void validate_closed_mesh(const TriMesh& mesh) {
    const int n = static_cast<int>(mesh.vertices.size());
    for (const auto& t : mesh.triangles)
        for (int i : t)
            if (i < 0 || i >= n)
                throw ValidationError("triangle index out of range");
    std::string why;
    if (!is_closed_mesh(mesh, &why))
        throw ValidationError("mesh is not closed and oriented: " + why);
}

TriMesh load_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open OBJ file: " + path);
    TriMesh mesh;
    std::string line;
    while (std::getline(in, line)) {
        if (line.size() < 2) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "v") {
            Vec3 v;
            ss >> v.x >> v.y >> v.z;
            mesh.vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<int> idx;
            std::string tok;
            while (ss >> tok) {
                // accept v, v/vt, v//vn, v/vt/vn
                idx.push_back(std::stoi(tok.substr(0, tok.find('/'))));
            }
            if (idx.size() < 3) throw ValidationError("OBJ face with fewer than 3 indices");
            for (size_t k = 2; k < idx.size(); ++k)
                mesh.triangles.push_back({idx[0] - 1, idx[k - 1] - 1, idx[k] - 1});
        }
    }
    return mesh;
}

void save_obj(const TriMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write OBJ file: " + path);
    char buf[128];
    for (const Vec3& v : mesh.vertices) {
        std::snprintf(buf, sizeof(buf), "v %.9g %.9g %.9g\n", v.x, v.y, v.z);
        out << buf;
    }
    for (const auto& t : mesh.triangles) {
        std::snprintf(buf, sizeof(buf), "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
        out << buf;
    }
}

TriMesh make_box_mesh(const Vec3& lo, const Vec3& hi) {
    TriMesh m;
    m.vertices = {
        {lo.x, lo.y, lo.z}, {hi.x, lo.y, lo.z}, {hi.x, hi.y, lo.z}, {lo.x, hi.y, lo.z},
        {lo.x, lo.y, hi.z}, {hi.x, lo.y, hi.z}, {hi.x, hi.y, hi.z}, {lo.x, hi.y, hi.z},
    };
    // outward orientation (CCW seen from outside)
    m.triangles = {
        {0, 2, 1}, {0, 3, 2}, // z = lo
        {4, 5, 6}, {4, 6, 7}, // z = hi
        {0, 1, 5}, {0, 5, 4}, // y = lo
        {3, 6, 2}, {3, 7, 6}, // y = hi
        {0, 4, 7}, {0, 7, 3}, // x = lo
        {1, 2, 6}, {1, 6, 5}, // x = hi
    };
    return m;
}

TriMesh make_icosphere_mesh(const Vec3& center, float radius, int subdivisions) {
    const float t = (1.0f + std::sqrt(5.0f)) / 2.0f;
    std::vector<Vec3> verts = {
        {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
        {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
        {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1},
    };
    std::vector<std::array<int, 3>> tris = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1},
    };
    for (int s = 0; s < subdivisions; ++s) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            verts.push_back(normalized((verts[a] + verts[b]) * 0.5f));
            midpoint[key] = static_cast<int>(verts.size()) - 1;
            return static_cast<int>(verts.size()) - 1;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(tris.size() * 4);
        for (const auto& tr : tris) {
            int ab = mid(tr[0], tr[1]), bc = mid(tr[1], tr[2]), ca = mid(tr[2], tr[0]);
            next.push_back({tr[0], ab, ca});
            next.push_back({tr[1], bc, ab});
            next.push_back({tr[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        tris.swap(next);
    }
    TriMesh m;
    m.vertices.reserve(verts.size());
    for (const Vec3& v : verts) m.vertices.push_back(center + normalized(v) * radius);
    m.triangles = std::move(tris);
    return m;
}

TriMesh make_capsule_mesh(const Vec3& a, const Vec3& b, float radius, int segments, int rings) {
    // Build along +y from 0..len, then rotate/translate into place.
    const Vec3 axis = b - a;
    const float len = length(axis);
    TriMesh m;
    // Bottom pole, bottom hemisphere rings, cylinder seam handled by shared rings,
    // top hemisphere rings, top pole. Latitude angle sweeps -pi/2..pi/2.
    m.vertices.push_back({0, -radius, 0});
    std::vector<int> prevRing;
    auto add_ring = [&](float y, float r) {
        std::vector<int> ring(segments);
        for (int s = 0; s < segments; ++s) {
            float ang = 2.0f * 3.14159265358979f * s / segments;
            ring[s] = static_cast<int>(m.vertices.size());
            m.vertices.push_back({r * std::cos(ang), y, r * std::sin(ang)});
        }
        return ring;
    };
    auto stitch = [&](const std::vector<int>& lo, const std::vector<int>& hi) {
        for (int s = 0; s < segments; ++s) {
            int s1 = (s + 1) % segments;
            m.triangles.push_back({lo[s], hi[s], hi[s1]});
            m.triangles.push_back({lo[s], hi[s1], lo[s1]});
        }
    };
    // bottom hemisphere
    for (int r = 1; r <= rings; ++r) {
        float lat = -0.5f * 3.14159265358979f * (1.0f - static_cast<float>(r) / rings);
        std::vector<int> ring = add_ring(radius * std::sin(lat), radius * std::cos(lat));
        if (r == 1) {
            for (int s = 0; s < segments; ++s)
                m.triangles.push_back({0, ring[(s + 1) % segments], ring[s]});
        } else {
            stitch(prevRing, ring);
        }
        prevRing = ring;
    }
    // cylinder wall top ring at y = len
    {
        std::vector<int> ring = add_ring(len, radius);
        stitch(prevRing, ring);
        prevRing = ring;
    }
    // top hemisphere
    for (int r = 1; r <= rings; ++r) {
        float lat = 0.5f * 3.14159265358979f * static_cast<float>(r) / rings;
        if (r == rings) {
            int pole = static_cast<int>(m.vertices.size());
            m.vertices.push_back({0, len + radius, 0});
            for (int s = 0; s < segments; ++s)
                m.triangles.push_back({prevRing[s], pole, prevRing[(s + 1) % segments]});
        } else {
            std::vector<int> ring = add_ring(len + radius * std::sin(lat), radius * std::cos(lat));
            stitch(prevRing, ring);
            prevRing = ring;
        }
    }
    // orient +y onto the requested axis
    const Vec3 up(0, 1, 0);
    const Vec3 dir = len > 0 ? axis / len : up;
    Vec3 rotAxis = cross(up, dir);
    float c = dot(up, dir);
    Mat3 rot = Mat3::identity();
    if (length(rotAxis) > 1e-8f) {
        rot = Mat3::axis_angle(normalized(rotAxis).cast<double>(), std::acos(std::clamp(c, -1.0f, 1.0f)));
    } else if (c < 0) {
        rot = Mat3::axis_angle({1, 0, 0}, 3.14159265358979323846);
    }
    for (Vec3& v : m.vertices)
        v = (rot * v.cast<double>()).cast<float>() + a;
    return m;
}

void append_mesh(TriMesh& dst, const TriMesh& other) {
    const int base = static_cast<int>(dst.vertices.size());
    dst.vertices.insert(dst.vertices.end(), other.vertices.begin(), other.vertices.end());
    dst.triangles.reserve(dst.triangles.size() + other.triangles.size());
    for (const auto& t : other.triangles)
        dst.triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
}

float point_triangle_distance_squared(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    // Ericson, Real-Time Collision Detection, closest point on triangle.
    const Vec3 ab = b - a, ac = c - a, ap = p - a;
    const float d1 = dot(ab, ap), d2 = dot(ac, ap);
    if (d1 <= 0 && d2 <= 0) return length_squared(ap);

    const Vec3 bp = p - b;
    const float d3 = dot(ab, bp), d4 = dot(ac, bp);
    if (d3 >= 0 && d4 <= d3) return length_squared(bp);

    const float vc = d1 * d4 - d3 * d2;
    if (vc <= 0 && d1 >= 0 && d3 <= 0) {
        const float v = d1 / (d1 - d3);
        return length_squared(ap - ab * v);
    }

    const Vec3 cp = p - c;
    const float d5 = dot(ab, cp), d6 = dot(ac, cp);
    if (d6 >= 0 && d5 <= d6) return length_squared(cp);

    const float vb = d5 * d2 - d1 * d6;
    if (vb <= 0 && d2 >= 0 && d6 <= 0) {
        const float w = d2 / (d2 - d6);
        return length_squared(ap - ac * w);
    }

    const float va = d3 * d6 - d5 * d4;
    if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
        const float w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return length_squared(p - (b + (c - b) * w));
    }

    const float denom = 1.0f / (va + vb + vc);
    const float v = vb * denom, w = vc * denom;
    return length_squared(p - (a + ab * v + ac * w));
}

namespace {

// Generalized winding number (van Oosterom & Strackee solid angles). Sums to
// ~1 inside a closed component, ~0 outside; overlapping closed components add.
double winding_number(const TriMesh& mesh, const Vec3& p) {
    double total = 0;
    const Vec3d pd = p.cast<double>();
    for (const auto& t : mesh.triangles) {
        const Vec3d a = mesh.vertices[t[0]].cast<double>() - pd;
        const Vec3d b = mesh.vertices[t[1]].cast<double>() - pd;
        const Vec3d c = mesh.vertices[t[2]].cast<double>() - pd;
        const double la = length(a), lb = length(b), lc = length(c);
        const double num = dot(a, cross(b, c));
        const double den = la * lb * lc + dot(a, b) * lc + dot(b, c) * la + dot(c, a) * lb;
        total += std::atan2(num, den);
    }
    return total / (2.0 * 3.14159265358979323846);
}

} // namespace

float brute_force_signed_distance(const TriMesh& mesh, const Vec3& p) {
    float best = std::numeric_limits<float>::max();
    for (const auto& t : mesh.triangles)
        best = std::min(best, point_triangle_distance_squared(
                                  p, mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]));
    const float d = std::sqrt(best);
    return winding_number(mesh, p) > 0.5 ? -d : d;
}

} // namespace ssdf
