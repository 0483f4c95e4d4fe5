#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssdf/math.hpp"
#include "ssdf/mesh.hpp"

namespace ssdf {

// Degree range for one rotation axis, [min : inc : max] as written in configs.
struct AxisRange {
    double minDeg = 0, incDeg = 1, maxDeg = 0;
};

struct Joint {
    int id = 0;
    int parent = -1;              // -1 for a root; otherwise < id (topological order)
    Vec3d center;                 // pivot of rotation, model units
    std::vector<Vec3d> axes;      // 1..3 unit axes, applied in declared order
    std::vector<AxisRange> ranges; // one per axis, degrees

    int dof() const { return static_cast<int>(axes.size()); }
};

struct Rig {
    std::vector<Joint> joints;

    int joint_count() const { return static_cast<int>(joints.size()); }
    int total_dof() const;
    int dof_offset(int jointIndex) const;

    void validate() const; // topological order, unit axes, 1..3 dof
};

// Concatenated per-joint angle sub-vectors, radians.
struct JointState {
    std::vector<double> values;

    static JointState zeros(const Rig& rig);
    static JointState from_degrees(const Rig& rig, const std::vector<double>& degrees);

    // Slice of joint i's angles; exact partition of `values`.
    std::vector<double> joint_angles(const Rig& rig, int jointIndex) const;
    void set_joint_angles(const Rig& rig, int jointIndex, const std::vector<double>& angles);
};

struct SkinnedMesh {
    TriMesh mesh;                                                   // rest pose (A-pose)
    std::vector<std::vector<std::pair<int, float>>> weights;        // per vertex: (transform, weight)

    void validate(int transformCount) const; // weights >= 0, sum to 1 within 1e-6
};

// Forward kinematics: world transform per joint.
// Each joint rotates about its axes through its center, composed onto its parent.
std::vector<RigidTransform> pose_transforms(const Rig& rig, const JointState& state);

// Standard linear blend skinning of the rest vertices.
std::vector<Vec3> lbs_deform(const SkinnedMesh& skinned, const std::vector<RigidTransform>& transforms);

// Canonical frame of joint i: the inverse of its parent's world transform
// (identity rest placement for roots). Deformation near the joint is seen in a
// frame where the parent bone is fixed, isolating it from rig rigid motion.
RigidTransform joint_local_transform(const Rig& rig, const JointState& state, int jointIndex);

// --- file formats -----------------------------------------------------------

// Plain-text rig description; see README for the schema.
Rig load_rig_config(const std::string& path);
void save_rig_config(const Rig& rig, const std::string& path);

// Sidecar table with one "vertexIndex transformIndex weight" triple per line.
std::vector<std::vector<std::pair<int, float>>> load_skin_weights(const std::string& path, int vertexCount);
void save_skin_weights(const std::vector<std::vector<std::pair<int, float>>>& weights, const std::string& path);

} // namespace ssdf
