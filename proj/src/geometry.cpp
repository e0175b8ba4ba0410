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
#include "hck/geometry.hpp"

#include <cmath>
#include <limits>

namespace hck {

double TriangleMesh::face_area(std::size_t face) const {
  const Vec3 a = face_vertex(face, 0);
  const Vec3 b = face_vertex(face, 1);
  const Vec3 c = face_vertex(face, 2);
  return 0.5 * (b - a).cross(c - a).norm();
}

void TriangleMesh::validate() const {
  const int n = static_cast<int>(vertices.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (int k = 0; k < 3; ++k) {
      const int v = faces[f][k];
      require(v >= 0 && v < n, "mesh_bad_index",
              "face " + std::to_string(f) + " references vertex " + std::to_string(v));
    }
    require(face_area(f) >= 1e-12, "mesh_degenerate_face",
            "face " + std::to_string(f) + " is degenerate");
  }
  require(face_part.empty() || face_part.size() == faces.size(),
          "mesh_part_size", "face_part must have one entry per face");
}

std::size_t TriangleMesh::remove_degenerate_faces(double min_area) {
  std::size_t kept = 0;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (face_area(f) < min_area) continue;
    faces[kept] = faces[f];
    if (!face_part.empty()) face_part[kept] = face_part[f];
    ++kept;
  }
  const std::size_t dropped = faces.size() - kept;
  faces.resize(kept);
  if (!face_part.empty()) face_part.resize(kept);
  return dropped;
}

void TriangleMesh::transform(const Pose& pose) {
  for (auto& v : vertices) v = pose.apply(v);
}

void TriangleMesh::aabb(Vec3& lo, Vec3& hi) const {
  lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  hi = -lo;
  for (const auto& v : vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
}

LabeledPointCloud LabeledPointCloud::with_size(std::size_t n) {
  LabeledPointCloud c;
  c.positions.resize(n, Vec3::Zero());
  c.semantic.assign(n, kSemanticBackground);
  c.instance.assign(n, 0);
  c.part.assign(n, 0);
  return c;
}

void LabeledPointCloud::validate() const {
  const std::size_t n = positions.size();
  require(semantic.size() == n && instance.size() == n && part.size() == n,
          "cloud_label_size", "label arrays must have one entry per point");
  require(provenance.empty() || provenance.size() == n,
          "cloud_provenance_size", "provenance must be empty or one per point");
  for (std::size_t i = 0; i < n; ++i) {
    require(part[i] <= 15, "cloud_bad_part",
            "point " + std::to_string(i) + " has part id > 15");
    if (part[i] != 0 || instance[i] != 0)
      require(semantic[i] == kSemanticHuman, "cloud_label_invariant",
              "point " + std::to_string(i) + " labeled part/instance but not human");
  }
}

void CameraModel::validate() const {
  require(fx > 0 && fy > 0, "camera_bad_focal", "fx, fy must be positive");
  require(width > 0 && height > 0, "camera_bad_size", "image size must be positive");
  require(cx >= 0 && cx < width && cy >= 0 && cy < height,
          "camera_bad_principal", "principal point outside image");
  const Mat3 rtr = pose.rotation.transpose() * pose.rotation;
  require((rtr - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-9,
          "camera_bad_rotation", "rotation not orthonormal");
  require(std::abs(pose.rotation.determinant() - 1.0) < 1e-9,
          "camera_bad_rotation", "rotation determinant != +1");
}

DepthImage DepthImage::with_size(int width, int height) {
  DepthImage d;
  d.width = width;
  d.height = height;
  d.depth.assign(static_cast<std::size_t>(width) * height, 0.0);
  d.valid.assign(static_cast<std::size_t>(width) * height, 0);
  return d;
}

std::size_t DepthImage::valid_count() const {
  std::size_t n = 0;
  for (const uint8_t v : valid) n += (v != 0);
  return n;
}

void DepthImage::validate() const {
  require(depth.size() == static_cast<std::size_t>(width) * height &&
              valid.size() == depth.size(),
          "depth_size", "depth buffers do not match dimensions");
  for (std::size_t i = 0; i < depth.size(); ++i) {
    if (valid[i])
      require(std::isfinite(depth[i]) && depth[i] > 0.0, "depth_invalid_value",
              "valid pixel with non-positive or non-finite depth");
  }
}

IndexImage IndexImage::with_size(int width, int height) {
  IndexImage img;
  img.width = width;
  img.height = height;
  img.value.assign(static_cast<std::size_t>(width) * height, 0);
  return img;
}

}  // namespace hck
