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

#include <vector>

#include "hck/geometry.hpp"

namespace hck {

// Exact closest point on triangle (a, b, c) to p; Voronoi-region walk.
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b,
                               const Vec3& c);

struct NearestHit {
  double distance = 0.0;
  int face = -1;
  Vec3 point = Vec3::Zero();  // closest point on the surface
};

// Immutable BVH over a mesh's triangles answering exact nearest-triangle
// queries. Ties on distance resolve to the lowest face index. Shareable
// across concurrent readers.
class DistanceAccelerator {
 public:
  explicit DistanceAccelerator(const TriangleMesh& mesh);

  NearestHit nearest(const Vec3& p) const;
  double distance(const Vec3& p) const { return nearest(p).distance; }

  std::size_t face_count() const { return tri_a_.size(); }

 private:
  struct Node {
    Vec3 lo, hi;
    int left = -1;    // internal: child index; leaf: first triangle
    int right = -1;   // internal: child index; leaf: -1
    int begin = 0, end = 0;  // leaf triangle range in order_
  };

  int build(int begin, int end, std::vector<Vec3>& centroids);
  double aabb_sqdist(const Node& n, const Vec3& p) const;

  std::vector<Node> nodes_;
  std::vector<int> order_;           // triangle permutation, leaves reference it
  std::vector<Vec3> tri_a_, tri_b_, tri_c_;  // original face order
};

// distance + attaining face index for p against an accelerated mesh
NearestHit point_to_mesh_distance(const Vec3& p, const DistanceAccelerator& accel);

}  // namespace hck
