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
#include "hck/raster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hck {

namespace {

constexpr double kNearClip = 1e-6;

struct ScreenVertex {
  double u, v, z;
};

inline double orient2d(const ScreenVertex& a, const ScreenVertex& b, double qu,
                       double qv) {
  return (b.u - a.u) * (qv - a.v) - (b.v - a.v) * (qu - a.u);
}

// Fill rule for w == 0: accept when the directed edge is a left edge
// (going up in image coordinates) or the top edge. Exactly one of a shared
// edge's two directions satisfies this, so adjacent triangles never both
// claim (or both drop) a pixel on the edge.
inline bool top_left(const ScreenVertex& a, const ScreenVertex& b) {
  const double dv = b.v - a.v;
  const double du = b.u - a.u;
  return dv < 0.0 || (dv == 0.0 && du > 0.0);
}

// Sutherland-Hodgman clip of a camera-space triangle against z >= kNearClip.
int clip_near(const Vec3 in[3], Vec3 out[4]) {
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    const Vec3& a = in[i];
    const Vec3& b = in[(i + 1) % 3];
    const bool ain = a.z() >= kNearClip;
    const bool bin = b.z() >= kNearClip;
    if (ain) out[n++] = a;
    if (ain != bin) {
      const double t = (kNearClip - a.z()) / (b.z() - a.z());
      out[n++] = a + t * (b - a);
    }
  }
  return n;
}

struct Raster {
  const CameraModel& cam;
  DepthImage& depth;
  IndexImage& instance;
  IndexImage& part;
  IndexImage& face;

  void triangle(ScreenVertex p0, ScreenVertex p1, ScreenVertex p2,
                int32_t inst, int32_t part_id, int32_t face_id) {
    double area2 = (p1.u - p0.u) * (p2.v - p0.v) - (p1.v - p0.v) * (p2.u - p0.u);
    if (area2 == 0.0) return;
    if (area2 < 0.0) {
      std::swap(p1, p2);
      area2 = -area2;
    }

    // pixel centers are at (c + 0.5, r + 0.5)
    const double min_u = std::min({p0.u, p1.u, p2.u});
    const double max_u = std::max({p0.u, p1.u, p2.u});
    const double min_v = std::min({p0.v, p1.v, p2.v});
    const double max_v = std::max({p0.v, p1.v, p2.v});
    const int c0 = std::max(0, static_cast<int>(std::ceil(min_u - 0.5)));
    const int c1 = std::min(cam.width - 1, static_cast<int>(std::floor(max_u - 0.5)));
    const int r0 = std::max(0, static_cast<int>(std::ceil(min_v - 0.5)));
    const int r1 = std::min(cam.height - 1, static_cast<int>(std::floor(max_v - 0.5)));
    if (c0 > c1 || r0 > r1) return;

    const double iz0 = 1.0 / p0.z, iz1 = 1.0 / p1.z, iz2 = 1.0 / p2.z;
    for (int r = r0; r <= r1; ++r) {
      const double qv = r + 0.5;
      for (int c = c0; c <= c1; ++c) {
        const double qu = c + 0.5;
        const double w0 = orient2d(p1, p2, qu, qv);
        const double w1 = orient2d(p2, p0, qu, qv);
        const double w2 = orient2d(p0, p1, qu, qv);
        const bool in0 = w0 > 0.0 || (w0 == 0.0 && top_left(p1, p2));
        const bool in1 = w1 > 0.0 || (w1 == 0.0 && top_left(p2, p0));
        const bool in2 = w2 > 0.0 || (w2 == 0.0 && top_left(p0, p1));
        if (!in0 || !in1 || !in2) continue;

        // 1/z is affine in screen space, so this is perspective-correct
        const double z = area2 / (w0 * iz0 + w1 * iz1 + w2 * iz2);
        if (!(z > 0.0)) continue;
        const std::size_t px = depth.index(r, c);
        if (depth.valid[px] && depth.depth[px] <= z) continue;
        depth.depth[px] = z;
        depth.valid[px] = 1;
        instance.value[px] = inst;
        part.value[px] = part_id;
        face.value[px] = face_id;
      }
    }
  }
};

}  // namespace

RenderResult rasterize_meshes(const std::vector<RenderInstance>& meshes,
                              const CameraModel& cam) {
  require(!meshes.empty(), "empty_scene", "no meshes to rasterize");
  cam.validate();

  RenderResult out;
  out.depth = DepthImage::with_size(cam.width, cam.height);
  out.instance = IndexImage::with_size(cam.width, cam.height);
  out.part = IndexImage::with_size(cam.width, cam.height);
  out.face = IndexImage::with_size(cam.width, cam.height);
  std::fill(out.depth.depth.begin(), out.depth.depth.end(),
            std::numeric_limits<double>::infinity());

  Raster raster{cam, out.depth, out.instance, out.part, out.face};

  for (const RenderInstance& item : meshes) {
    const TriangleMesh& mesh = *item.mesh;
    for (std::size_t f = 0; f < mesh.face_count(); ++f) {
      Vec3 cam_v[3];
      for (int k = 0; k < 3; ++k) cam_v[k] = cam.to_camera(mesh.face_vertex(f, k));
      Vec3 clipped[4];
      const int n = clip_near(cam_v, clipped);
      if (n < 3) continue;

      ScreenVertex sv[4];
      for (int k = 0; k < n; ++k) {
        sv[k].z = clipped[k].z();
        sv[k].u = cam.fx * clipped[k].x() / clipped[k].z() + cam.cx;
        sv[k].v = cam.fy * clipped[k].y() / clipped[k].z() + cam.cy;
      }
      const int32_t part_id = mesh.has_parts() ? mesh.face_part[f] : 0;
      const int32_t face_id = static_cast<int32_t>(f) + 1;
      for (int k = 1; k + 1 < n; ++k)
        raster.triangle(sv[0], sv[k], sv[k + 1], item.instance, part_id, face_id);
    }
  }

  // background pixels carry the 0 sentinel, not +inf
  for (std::size_t i = 0; i < out.depth.depth.size(); ++i)
    if (!out.depth.valid[i]) out.depth.depth[i] = 0.0;
  return out;
}

}  // namespace hck
