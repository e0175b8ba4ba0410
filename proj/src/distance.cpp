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
#include "hck/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hck {

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b,
                               const Vec3& c) {
  // Ericson, Real-Time Collision Detection, 5.1.5
  const Vec3 ab = b - a;
  const Vec3 ac = c - a;
  const Vec3 ap = p - a;
  const double d1 = ab.dot(ap);
  const double d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp);
  const double d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    const double v = d1 / (d1 - d3);
    return a + v * ab;
  }

  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp);
  const double d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    const double w = d2 / (d2 - d6);
    return a + w * ac;
  }

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return b + w * (c - b);
  }

  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom;
  const double w = vc * denom;
  return a + ab * v + ac * w;
}

namespace {
constexpr int kLeafSize = 4;
}

DistanceAccelerator::DistanceAccelerator(const TriangleMesh& mesh) {
  require(!mesh.faces.empty(), "empty_mesh", "empty mesh");
  const std::size_t n = mesh.faces.size();
  tri_a_.resize(n);
  tri_b_.resize(n);
  tri_c_.resize(n);
  std::vector<Vec3> centroids(n);
  order_.resize(n);
  for (std::size_t f = 0; f < n; ++f) {
    tri_a_[f] = mesh.face_vertex(f, 0);
    tri_b_[f] = mesh.face_vertex(f, 1);
    tri_c_[f] = mesh.face_vertex(f, 2);
    centroids[f] = (tri_a_[f] + tri_b_[f] + tri_c_[f]) / 3.0;
    order_[f] = static_cast<int>(f);
  }
  nodes_.reserve(2 * n);
  build(0, static_cast<int>(n), centroids);
}

int DistanceAccelerator::build(int begin, int end, std::vector<Vec3>& centroids) {
  const int idx = static_cast<int>(nodes_.size());
  nodes_.emplace_back();

  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 hi = -lo;
  for (int i = begin; i < end; ++i) {
    const int f = order_[i];
    lo = lo.cwiseMin(tri_a_[f]).cwiseMin(tri_b_[f]).cwiseMin(tri_c_[f]);
    hi = hi.cwiseMax(tri_a_[f]).cwiseMax(tri_b_[f]).cwiseMax(tri_c_[f]);
  }
  nodes_[idx].lo = lo;
  nodes_[idx].hi = hi;

  if (end - begin <= kLeafSize) {
    nodes_[idx].begin = begin;
    nodes_[idx].end = end;
    nodes_[idx].right = -1;
    return idx;
  }

  int axis = 0;
  const Vec3 extent = hi - lo;
  if (extent.y() > extent.x()) axis = 1;
  if (extent.z() > extent[axis]) axis = 2;
  const int mid = (begin + end) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid,
                   order_.begin() + end, [&](int fa, int fb) {
                     const double ca = centroids[fa][axis];
                     const double cb = centroids[fb][axis];
                     return ca < cb || (ca == cb && fa < fb);
                   });

  const int left = build(begin, mid, centroids);
  const int right = build(mid, end, centroids);
  nodes_[idx].left = left;
  nodes_[idx].right = right;
  return idx;
}

double DistanceAccelerator::aabb_sqdist(const Node& n, const Vec3& p) const {
  double s = 0.0;
  for (int k = 0; k < 3; ++k) {
    double d = 0.0;
    if (p[k] < n.lo[k]) d = n.lo[k] - p[k];
    else if (p[k] > n.hi[k]) d = p[k] - n.hi[k];
    s += d * d;
  }
  return s;
}

NearestHit DistanceAccelerator::nearest(const Vec3& p) const {
  NearestHit best;
  double best_sq = std::numeric_limits<double>::infinity();
  int best_face = std::numeric_limits<int>::max();

  // pruning is strict (>) so exact ties stay visible; best face index wins
  int stack[128];
  int depth = 0;
  stack[depth++] = 0;
  while (depth > 0) {
    const Node& node = nodes_[stack[--depth]];
    if (aabb_sqdist(node, p) > best_sq) continue;
    if (node.right < 0) {
      for (int i = node.begin; i < node.end; ++i) {
        const int f = order_[i];
        const Vec3 q = closest_point_on_triangle(p, tri_a_[f], tri_b_[f], tri_c_[f]);
        const double sq = (q - p).squaredNorm();
        if (sq < best_sq || (sq == best_sq && f < best_face)) {
          best_sq = sq;
          best_face = f;
          best.point = q;
        }
      }
      continue;
    }
    // visit nearer child first
    const double dl = aabb_sqdist(nodes_[node.left], p);
    const double dr = aabb_sqdist(nodes_[node.right], p);
    if (dl <= dr) {
      stack[depth++] = node.right;
      stack[depth++] = node.left;
    } else {
      stack[depth++] = node.left;
      stack[depth++] = node.right;
    }
  }
  best.distance = std::sqrt(best_sq);
  best.face = best_face;
  return best;
}

NearestHit point_to_mesh_distance(const Vec3& p, const DistanceAccelerator& accel) {
  return accel.nearest(p);
}

}  // namespace hck
