/*
 * Copyright (c) 2026, the hck authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <vector>

#include "hck/common.hpp"

namespace hck {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Rigid world->camera (or generic) transform: x' = R x + t.
struct Pose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  Vec3 apply_inverse(const Vec3& p) const {
    return rotation.transpose() * (p - translation);
  }
  Pose inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }
  // this after other: x -> this(other(x))
  Pose compose(const Pose& other) const {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }
};

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  // optional, one source-part id per face when present
  std::vector<int> face_part;

  bool has_parts() const { return !face_part.empty(); }
  std::size_t face_count() const { return faces.size(); }

  Vec3 face_vertex(std::size_t face, int corner) const {
    return vertices[faces[face][corner]];
  }
  double face_area(std::size_t face) const;

  // index ranges / degeneracy / part coverage; throws on violation
  void validate() const;
  // drops faces with area < min_area; returns dropped count
  std::size_t remove_degenerate_faces(double min_area = 1e-12);

  void transform(const Pose& pose);
  void aabb(Vec3& lo, Vec3& hi) const;
};

struct Provenance {
  int32_t camera = 0;
  int32_t row = 0;
  int32_t col = 0;
  bool operator==(const Provenance&) const = default;
};

// Semantic convention: 0 = background, 1 = human.
inline constexpr uint8_t kSemanticBackground = 0;
inline constexpr uint8_t kSemanticHuman = 1;

struct LabeledPointCloud {
  std::vector<Vec3> positions;
  std::vector<uint8_t> semantic;   // 0 background, 1 human
  std::vector<int32_t> instance;   // 0 = none
  std::vector<uint8_t> part;       // 0 = none, else final part id 1..15
  std::vector<Provenance> provenance;  // empty, or one per point

  std::size_t size() const { return positions.size(); }
  bool has_provenance() const { return !provenance.empty(); }

  static LabeledPointCloud with_size(std::size_t n);
  void validate() const;
};

struct CameraModel {
  double fx = 525.0, fy = 525.0;   // Kinect-like defaults
  double cx = 319.5, cy = 239.5;
  int width = 640, height = 480;
  Pose pose;  // world -> camera

  void validate() const;
  Vec3 to_camera(const Vec3& world) const { return pose.apply(world); }
  Vec3 to_world(const Vec3& cam) const { return pose.apply_inverse(cam); }
};

struct DepthImage {
  int width = 0, height = 0;
  std::vector<double> depth;     // camera-frame z, meters; 0 where invalid
  std::vector<uint8_t> valid;

  static DepthImage with_size(int width, int height);
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width + col;
  }
  bool is_valid(int row, int col) const { return valid[index(row, col)] != 0; }
  double at(int row, int col) const { return depth[index(row, col)]; }
  std::size_t valid_count() const;
  void validate() const;
};

struct IndexImage {
  int width = 0, height = 0;
  std::vector<int32_t> value;    // 0 = background / invalid

  static IndexImage with_size(int width, int height);
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width + col;
  }
  int32_t at(int row, int col) const { return value[index(row, col)]; }
  int32_t& at(int row, int col) { return value[index(row, col)]; }
};

}  // namespace hck
